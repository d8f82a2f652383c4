// Bare static line plots of a table: first column is x, the rest are curves.

#pragma once

#include <iosfwd>
#include <string>

#include "table.hpp"

namespace qcli {

void write_svg(std::ostream& os, const Table& t, const std::string& title, bool log_x);

}  // namespace qcli
