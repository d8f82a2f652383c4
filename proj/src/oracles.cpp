#include "qdiss/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdiss/specfun.hpp"

namespace qdiss {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Summand = std::function<double(double)>;

// Neumaier's variant of compensated summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double first_derivative(const Summand& a, double x, double h) {
  return (-a(x + 2 * h) + 8 * a(x + h) - 8 * a(x - h) + a(x - 2 * h)) / (12 * h);
}

double third_derivative(const Summand& a, double x, double h) {
  return (a(x + 2 * h) - 2 * a(x + h) + 2 * a(x - h) - a(x - 2 * h)) / (2 * h * h * h);
}

// sum_{n >= 1} a(n)
double matsubara_sum(const Summand& a, const SumConfig& cfg) {
  validate(cfg);
  const double big_n = cfg.n_terms;
  CompensatedSum s;
  for (int n = cfg.n_terms - 1; n >= 1; --n) s.add(a(n));

  // int_N^inf a(x) dx with x = N / u; a ~ c / x^2 keeps the integrand finite at u = 0.
  const auto mapped = [&](double u) { return a(big_n / u) * big_n / (u * u); };
  using boost::math::quadrature::gauss_kronrod;
  s.add(gauss_kronrod<double, 31>::integrate(mapped, 0.0, 1.0, 12, 1e-13));
  s.add(0.5 * a(big_n));
  // The summand varies on a scale no shorter than its argument (all its
  // singularities lie in re(n) <= 0), so a step proportional to N is safe.
  const double h = big_n / 20.0;
  if (cfg.tail_order >= 1) {
    s.add(-specfun::bernoulli(2) / 2.0 * first_derivative(a, big_n, h));
  }
  if (cfg.tail_order >= 2) {
    s.add(-specfun::bernoulli(4) / 24.0 * third_derivative(a, big_n, h));
  }
  return s.value();
}

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be positive and finite");
  }
}

KernelFunctions oracle_kernel(const BathSpec& bath, const char* fn) {
  if (bath.is_ohmic()) {
    throw std::domain_error(std::string(fn) +
                            ": the strict-ohmic Matsubara sum does not converge term by term; "
                            "temperature derivatives may not be taken inside it");
  }
  return drude_kernel(bath);
}

}  // namespace

void validate(const SumConfig& cfg) {
  if (cfg.n_terms < 1000) throw std::invalid_argument("SumConfig: n_terms must be >= 1000");
  if (cfg.tail_order < 0 || cfg.tail_order > 2) {
    throw std::invalid_argument("SumConfig: tail_order must be 0, 1 or 2");
  }
}

double energy_E_sum_oracle(const KernelFunctions& kernel, double beta, const SumConfig& cfg) {
  require_beta(beta);
  const Summand a = [&](double n) {
    const double nu = kTwoPi * n / beta;
    const double g = kernel.value(nu);
    return g / (nu + g);
  };
  return (0.5 + matsubara_sum(a, cfg)) / beta;
}

double internal_U_sum_oracle(const KernelFunctions& kernel, double beta, const SumConfig& cfg) {
  require_beta(beta);
  const Summand a = [&](double n) {
    const double nu = kTwoPi * n / beta;
    const double g = kernel.value(nu);
    return (g - nu * kernel.derivative(nu)) / (nu + g);
  };
  return (0.5 + matsubara_sum(a, cfg)) / beta;
}

double heat_ce_sum_oracle(const KernelFunctions& kernel, double T, const SumConfig& cfg) {
  require_beta(T);
  const Summand a = [&](double n) {
    const double nu = kTwoPi * n * T;
    const double g = kernel.value(nu);
    const double d = nu + g;
    return (g * g + nu * nu * kernel.derivative(nu)) / (d * d);
  };
  return 0.5 + matsubara_sum(a, cfg);
}

double log_partition_product_oracle(const KernelFunctions& kernel, double box_ratio, double omega_d,
                                    double beta, const SumConfig& cfg) {
  require_beta(beta);
  const Summand a = [&](double n) {
    const double nu = kTwoPi * n / beta;
    return -std::log1p(kernel.value(nu) / nu);
  };
  const double ln_z0 = std::log(box_ratio) + 0.5 * std::log(std::numbers::pi / (beta * omega_d));
  return ln_z0 + matsubara_sum(a, cfg);
}

double energy_E_sum_oracle(const BathSpec& bath, double beta, const SumConfig& cfg) {
  return energy_E_sum_oracle(oracle_kernel(bath, "energy_E_sum_oracle"), beta, cfg);
}

double internal_U_sum_oracle(const BathSpec& bath, double beta, const SumConfig& cfg) {
  return internal_U_sum_oracle(oracle_kernel(bath, "internal_U_sum_oracle"), beta, cfg);
}

double heat_ce_sum_oracle(const BathSpec& bath, double T, const SumConfig& cfg) {
  return heat_ce_sum_oracle(oracle_kernel(bath, "heat_ce_sum_oracle"), T, cfg);
}

double log_partition_product_oracle(const SystemSpec& system, const BathSpec& bath, double beta,
                                    const SumConfig& cfg) {
  const KernelFunctions k = oracle_kernel(bath, "log_partition_product_oracle");
  return log_partition_product_oracle(k, system.box_ratio(), bath.omega_d(), beta, cfg);
}

}  // namespace qdiss
