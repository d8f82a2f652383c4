// verify.hpp - cross-checks of the closed forms against independent routes.

#pragma once

#include <string>
#include <vector>

namespace qdiss {

struct VerifyCheck {
  std::string name;
  double worst = 0.0;      // worst observed error
  double tolerance = 0.0;  // pass when worst <= tolerance
  bool passed() const { return worst <= tolerance; }
};

// Runs every check; takes about a second.
std::vector<VerifyCheck> run_verify_suite();

}  // namespace qdiss
