#include "qdiss/thermo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdiss/specfun.hpp"

namespace qdiss {

namespace {

using specfun::digamma;
using specfun::log_gamma;
using specfun::trigamma;
using specfun::trigamma_excess;
using specfun::trigamma_excess_derivative;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

void require_cutoff(const BathSpec& bath, const char* fn) {
  if (bath.is_ohmic()) {
    throw std::domain_error(std::string(fn) +
                            ": diverges logarithmically in the cutoff for the strict-ohmic "
                            "bath; use a finite omega_d");
  }
}

void require_free_particle(const SystemSpec& system, const char* fn) {
  if (system.kind() != SystemKind::FreeParticle) {
    throw std::invalid_argument(std::string(fn) + ": only the free particle is supported");
  }
}

// x psi(1 + x)
complex x_digamma(complex x) { return x * digamma(1.0 + x); }

}  // namespace

double energy_E(const BathSpec& bath, double beta) {
  require_cutoff(bath, "energy_E");
  const auto r = roots(bath, beta);
  // E = (1/beta)[1/2 + x1 x2 (psi(1+x1) - psi(1+x2)) / (x1 - x2)]
  double sum;
  if (r.degenerate) {
    const double x = r.x1.real();
    sum = x * x * trigamma(1.0 + x);
  } else {
    const complex dd = (digamma(1.0 + r.x1) - digamma(1.0 + r.x2)) / (r.x1 - r.x2);
    sum = (r.x1 * r.x2 * dd).real();
  }
  return (0.5 + sum) / beta;
}

double heat_ce(const BathSpec& bath, double T) {
  require_positive(T, "T");
  const double beta = 1.0 / T;
  if (bath.is_ohmic()) {
    // (y^2 psi'(y) - y - 1/2) with y = beta gamma / 2 pi, rewritten around 1 + y.
    return trigamma_excess(beta * bath.gamma() / kTwoPi).real();
  }
  const auto r = roots(bath, beta);
  // C^E = (x1 h(x2) - x2 h(x1)) / (x1 - x2), h(x) = x^2 psi'(1+x) - x + 1/2.
  if (r.degenerate) {
    const double x = r.x1.real();
    return (trigamma_excess(x) - x * trigamma_excess_derivative(x)).real();
  }
  const complex num = r.x1 * trigamma_excess(r.x2) - r.x2 * trigamma_excess(r.x1);
  return (num / (r.x1 - r.x2)).real();
}

double log_partition(const SystemSpec& system, const BathSpec& bath, double beta) {
  require_free_particle(system, "log_partition");
  require_cutoff(bath, "log_partition");
  const auto r = roots(bath, beta);
  const double big_x = beta * bath.omega_d() / kTwoPi;
  // Undamped part: (L / hbar)(2 pi m / beta)^(1/2) with L = box_ratio L_D.
  const double ln_z0 = std::log(system.box_ratio()) + 0.5 * std::log(kPi / (beta * bath.omega_d()));
  const double ln_ratio =
      (log_gamma(1.0 + r.x1) + log_gamma(1.0 + r.x2)).real() - log_gamma(complex{1.0 + big_x, 0.0}).real();
  return ln_z0 + ln_ratio;
}

double internal_U(const BathSpec& bath, double beta) {
  require_cutoff(bath, "internal_U");
  const auto r = roots(bath, beta);
  const double big_x = beta * bath.omega_d() / kTwoPi;
  // U = (1/beta)[X psi(1+X) - x1 psi(1+x1) - x2 psi(1+x2) + 1/2]
  const double pair = (x_digamma(r.x1) + x_digamma(r.x2)).real();
  return (big_x * digamma(1.0 + big_x) - pair + 0.5) / beta;
}

double heat_cz(const BathSpec& bath, double T) {
  require_positive(T, "T");
  if (bath.is_ohmic()) return heat_ce(bath, T);
  const double beta = 1.0 / T;
  const auto r = roots(bath, beta);
  const double big_x = beta * bath.omega_d() / kTwoPi;
  // x1^2 psi'(x1) + x2^2 psi'(x2) - X^2 psi'(X) - 1/2 = h(x1) + h(x2) - h(X)
  return (trigamma_excess(r.x1) + trigamma_excess(r.x2)).real() -
         trigamma_excess(complex{big_x, 0.0}).real();
}

double entropy(const SystemSpec& system, const BathSpec& bath, double T) {
  require_positive(T, "T");
  const double beta = 1.0 / T;
  return log_partition(system, bath, beta) + beta * internal_U(bath, beta);
}

ThermoPoint thermo_point(const SystemSpec& system, const BathSpec& bath, double T) {
  require_positive(T, "T");
  require_cutoff(bath, "thermo_point");
  const double beta = 1.0 / T;
  ThermoPoint p;
  p.T = T;
  p.E = energy_E(bath, beta);
  p.U = internal_U(bath, beta);
  p.C_E = heat_ce(bath, T);
  p.C_Z = heat_cz(bath, T);
  p.lnZ = log_partition(system, bath, beta);
  p.S = p.lnZ + beta * p.U;
  p.F = -T * p.lnZ;
  return p;
}

double coupling_energy_shift(const BathSpec& bath, double beta) {
  return internal_U(bath, beta) - energy_E(bath, beta);
}

double asymptotics(const BathSpec& bath, double T, Asymptotic which) {
  require_positive(T, "T");
  const double g = bath.gamma();
  const double r = bath.ratio();
  const double tau = T / g;
  constexpr double kCubic = 4.0 * kPi * kPi * kPi / 15.0;
  switch (which) {
    case Asymptotic::CEHigh:
      require_cutoff(bath, "asymptotics(CE_high)");
      return 0.5 - g * bath.omega_d() / (24.0 * T * T);
    case Asymptotic::CZHigh:
      require_cutoff(bath, "asymptotics(CZ_high)");
      return 0.5 - g * bath.omega_d() / (12.0 * T * T);
    case Asymptotic::CELow:
      return kPi / 3.0 * tau - kCubic * tau * tau * tau * (1.0 - 2.0 * r);
    case Asymptotic::CZLow:
      return kPi / 3.0 * tau * (1.0 - r) - kCubic * tau * tau * tau * (1.0 - 3.0 * r - r * r * r);
  }
  throw std::invalid_argument("asymptotics: unknown series");
}

}  // namespace qdiss
