#include "qdiss/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdiss {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

void require_cutoff(const BathSpec& bath, const char* fn) {
  if (bath.is_ohmic()) {
    throw std::domain_error(std::string(fn) +
                            ": undefined for the strict-ohmic bath (needs a finite cutoff)");
  }
}

// sqrt(1 - 4 gamma / omega_d) on the principal branch.
complex root_discriminant_sqrt(const BathSpec& bath) {
  const double d = 1.0 - 4.0 * bath.ratio();
  return d >= 0.0 ? complex{std::sqrt(d), 0.0} : complex{0.0, std::sqrt(-d)};
}

}  // namespace

BathSpec::BathSpec(double gamma, double omega_d, bool ohmic)
    : gamma_(gamma), omega_d_(omega_d), ratio_(ohmic ? 0.0 : gamma / omega_d), ohmic_(ohmic) {}

BathSpec BathSpec::drude(double gamma, double omega_d) {
  require_positive(gamma, "gamma");
  require_positive(omega_d, "omega_d");
  return BathSpec(gamma, omega_d, false);
}

BathSpec BathSpec::ohmic(double gamma) {
  require_positive(gamma, "gamma");
  return BathSpec(gamma, std::numeric_limits<double>::infinity(), true);
}

SystemSpec SystemSpec::free_particle(double box_ratio) {
  require_positive(box_ratio, "box_ratio");
  return SystemSpec(SystemKind::FreeParticle, box_ratio);
}

SystemSpec SystemSpec::oscillator(double omega0) {
  require_positive(omega0, "omega0");
  return SystemSpec(SystemKind::Oscillator, omega0);
}

double SystemSpec::box_ratio() const {
  if (kind_ != SystemKind::FreeParticle) throw std::logic_error("box_ratio: not a free particle");
  return value_;
}

double SystemSpec::omega0() const {
  if (kind_ != SystemKind::Oscillator) throw std::logic_error("omega0: not an oscillator");
  return value_;
}

complex gamma_hat(const BathSpec& bath, complex z) {
  if (bath.is_ohmic()) return bath.gamma();
  const complex denom = z + bath.omega_d();
  if (denom == 0.0) throw std::domain_error("gamma_hat: pole at z = -omega_d");
  return bath.gamma() * bath.omega_d() / denom;
}

double gamma_hat(const BathSpec& bath, double z) {
  if (bath.is_ohmic()) return bath.gamma();
  const double denom = z + bath.omega_d();
  if (denom == 0.0) throw std::domain_error("gamma_hat: pole at z = -omega_d");
  return bath.gamma() * bath.omega_d() / denom;
}

double gamma_hat_derivative(const BathSpec& bath, double z) {
  if (bath.is_ohmic()) return 0.0;
  const double denom = z + bath.omega_d();
  if (denom == 0.0) throw std::domain_error("gamma_hat_derivative: pole at z = -omega_d");
  return -bath.gamma() * bath.omega_d() / (denom * denom);
}

double kernel_time(const BathSpec& bath, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("kernel_time: t must be >= 0");
  if (bath.is_ohmic()) return 0.0;
  return bath.gamma() * bath.omega_d() * std::exp(-bath.omega_d() * t);
}

double matsubara(double beta, int n) {
  require_positive(beta, "beta");
  if (n < 1) throw std::invalid_argument("matsubara: n must be >= 1");
  return kTwoPi * n / beta;
}

MatsubaraRoots roots(const BathSpec& bath, double beta) {
  require_cutoff(bath, "roots");
  require_positive(beta, "beta");
  const double d = 1.0 - 4.0 * bath.ratio();
  const double sum = beta * bath.omega_d() / kTwoPi;
  const double product = beta * beta * bath.gamma() * bath.omega_d() / (kTwoPi * kTwoPi);
  MatsubaraRoots r{};
  r.discriminant = d;
  r.degenerate = std::abs(d) < kDegeneracyThreshold;
  if (r.degenerate) {
    r.x1 = r.x2 = 0.5 * sum;
  } else if (d > 0.0) {
    const double big = 0.5 * sum * (1.0 + std::sqrt(d));
    r.x1 = big;
    r.x2 = product / big;
  } else {
    r.x1 = complex{0.5 * sum, 0.5 * sum * std::sqrt(-d)};
    r.x2 = std::conj(r.x1);
  }
  return r;
}

std::array<complex, 2> root_frequencies(const BathSpec& bath) {
  require_cutoff(bath, "root_frequencies");
  const double wd = bath.omega_d();
  const double d = 1.0 - 4.0 * bath.ratio();
  if (d > 0.0) {
    const double w1 = 0.5 * wd * (1.0 + std::sqrt(d));
    return {complex{w1, 0.0}, complex{bath.gamma() * wd / w1, 0.0}};
  }
  const complex w1 = 0.5 * wd * (1.0 + root_discriminant_sqrt(bath));
  return {w1, std::conj(w1)};
}

std::array<complex, 2> roots(const BathSpec& bath, complex beta) {
  const auto w = root_frequencies(bath);
  return {beta * w[0] / kTwoPi, beta * w[1] / kTwoPi};
}

CharacteristicModes characteristic_modes(const BathSpec& bath) {
  require_cutoff(bath, "characteristic_modes");
  // s^2 + omega_d s + gamma omega_d = 0, i.e. s = -omega_{1,2}.
  const auto w = root_frequencies(bath);
  return {-w[0], -w[1], 0.0};
}

bool validity_regime(double T, double deltaE, double threshold) {
  require_positive(T, "T");
  if (!(deltaE >= 0.0)) throw std::invalid_argument("validity_regime: deltaE must be >= 0");
  return deltaE / T < threshold;
}

double bath_mass(const BathSpec& bath) {
  // gamma_hat(0) = gamma > 0, so gamma_hat(z)/z diverges as z -> 0.
  (void)bath;
  return std::numeric_limits<double>::infinity();
}

KernelFunctions drude_kernel(const BathSpec& bath, int order) {
  KernelFunctions k;
  k.value = [bath](double z) { return gamma_hat(bath, z); };
  k.derivative = [bath](double z) { return gamma_hat_derivative(bath, z); };
  k.taylor.assign(static_cast<std::size_t>(order) + 1, 0.0);
  double c = bath.gamma();
  for (int n = 0; n <= order; ++n) {
    k.taylor[n] = c;
    c = bath.is_ohmic() ? 0.0 : -c / bath.omega_d();
  }
  return k;
}

}  // namespace qdiss
