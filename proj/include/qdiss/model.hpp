// model.hpp - Drude bath description: damping kernel, Matsubara frequencies,
// the x1/x2 root pair and the deterministic modes of the particle + memory
// variable system.

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

namespace qdiss {

using complex = std::complex<double>;

// Drude environment: gamma_hat(z) = gamma * omega_d / (z + omega_d).
// The strict-ohmic limit omega_d -> infinity is a distinct state, not a
// large number.
class BathSpec {
 public:
  static BathSpec drude(double gamma, double omega_d);
  static BathSpec ohmic(double gamma);

  double gamma() const noexcept { return gamma_; }
  // +infinity for the strict-ohmic bath.
  double omega_d() const noexcept { return omega_d_; }
  bool is_ohmic() const noexcept { return ohmic_; }
  // gamma / omega_d; zero when ohmic. Values above one mark the anomalous
  // regime.
  double ratio() const noexcept { return ratio_; }
  bool is_anomalous() const noexcept { return ratio_ > 1.0; }

 private:
  BathSpec(double gamma, double omega_d, bool ohmic);
  double gamma_;
  double omega_d_;
  double ratio_;
  bool ohmic_;
};

enum class SystemKind { FreeParticle, Oscillator };

// Free particle in a box of length box_ratio * L_D, with
// L_D = (hbar / 2 m omega_d)^(1/2); or a harmonic oscillator of frequency
// omega0.
class SystemSpec {
 public:
  static SystemSpec free_particle(double box_ratio = 1.0);
  static SystemSpec oscillator(double omega0);

  SystemKind kind() const noexcept { return kind_; }
  double box_ratio() const;  // FreeParticle only
  double omega0() const;     // Oscillator only

 private:
  SystemSpec(SystemKind kind, double value) : kind_(kind), value_(value) {}
  SystemKind kind_;
  double value_;
};

struct MatsubaraRoots {
  complex x1;
  complex x2;
  double discriminant;  // 1 - 4 gamma / omega_d
  bool degenerate;
};

// |1 - 4 gamma / omega_d| below this switches to the double-root limits.
inline constexpr double kDegeneracyThreshold = 1e-9;

complex gamma_hat(const BathSpec& bath, complex z);
double gamma_hat(const BathSpec& bath, double z);
double gamma_hat_derivative(const BathSpec& bath, double z);
// gamma * omega_d * exp(-omega_d t); for the ohmic bath only t > 0 is
// meaningful and the result is zero there.
double kernel_time(const BathSpec& bath, double t);

double matsubara(double beta, int n);

// x_{1,2} = (beta omega_d / 4 pi)(1 +- sqrt(1 - 4 gamma / omega_d)).
// x2 is obtained from the product x1 x2 = beta^2 gamma omega_d / 4 pi^2 to
// avoid cancellation when omega_d >> gamma. Not defined for the ohmic bath.
MatsubaraRoots roots(const BathSpec& bath, double beta);
// Same roots for a complex inverse temperature (Laplace-plane evaluations).
std::array<complex, 2> roots(const BathSpec& bath, complex beta);

// The characteristic frequencies omega_{1,2} = (omega_d / 2)(1 +- sqrt(...)),
// i.e. (2 pi / beta) x_{1,2}.
std::array<complex, 2> root_frequencies(const BathSpec& bath);

struct CharacteristicModes {
  complex s1;
  complex s2;
  double zero_mode;  // always 0: translational invariance
};

// Eigenvalues of q' = v, v' = w, w' = -omega_d w - gamma omega_d v.
CharacteristicModes characteristic_modes(const BathSpec& bath);

// True iff the box level spacing is negligible: deltaE / T < threshold.
bool validity_regime(double T, double deltaE, double threshold = 1e-2);

// Total bath mass in units of the particle mass, M lim_{z->0} gamma_hat(z)/z.
// Infinite for every kernel with gamma_hat(0) > 0, i.e. always for Drude.
double bath_mass(const BathSpec& bath);

// A damping kernel given only on the positive real axis, together with its
// Taylor coefficients at zero. This is the hook used by the summation oracles
// and the Euler-MacLaurin expansion; it is not tied to the Drude form.
struct KernelFunctions {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  std::vector<double> taylor;  // gamma_hat(z) = sum_k taylor[k] z^k near 0
};

// Drude kernel with Taylor coefficients up to z^order.
KernelFunctions drude_kernel(const BathSpec& bath, int order = 12);

}  // namespace qdiss
