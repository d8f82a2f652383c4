#include "qdiss/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qdiss/dos.hpp"
#include "qdiss/euler_maclaurin.hpp"
#include "qdiss/laplace.hpp"
#include "qdiss/oracles.hpp"
#include "qdiss/thermo.hpp"

namespace qdiss {

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return v;
}

double log_derivative(const std::function<double(double)>& f, double x, double h = 1e-4) {
  const auto at = [&](int k) { return f(x * std::exp(k * h)); };
  return (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
}

VerifyCheck oracle_grid() {
  VerifyCheck c{"closed forms vs Matsubara sums (E, C_E, U, ln Z)", 0.0, 1e-6};
  const auto sys = SystemSpec::free_particle();
  for (double ratio : logspace(0.1, 100.0, 5)) {
    const auto b = BathSpec::drude(1.0, ratio);
    for (double T : logspace(0.01, 100.0, 5)) {
      const double beta = 1.0 / T;
      c.worst = std::max({c.worst, rel(energy_E(b, beta), energy_E_sum_oracle(b, beta)),
                          rel(heat_ce(b, T), heat_ce_sum_oracle(b, T)),
                          rel(internal_U(b, beta), internal_U_sum_oracle(b, beta)),
                          std::abs(log_partition(sys, b, beta) - log_partition_product_oracle(sys, b, beta))});
    }
  }
  return c;
}

VerifyCheck consistency() {
  VerifyCheck c{"C_Z = T dS/dT and U = -d lnZ/d beta", 0.0, 1e-6};
  const auto sys = SystemSpec::free_particle();
  for (double ratio : {0.2, 1.0, 5.0}) {
    const auto b = BathSpec::drude(1.0, ratio);
    for (double T : {0.05, 0.5, 5.0}) {
      const double cz = log_derivative([&](double t) { return entropy(sys, b, t); }, T);
      const double u = -log_derivative([&](double x) { return log_partition(sys, b, x); }, 1.0 / T) * T;
      c.worst = std::max({c.worst, rel(cz, heat_cz(b, T)), rel(u, internal_U(b, 1.0 / T))});
    }
  }
  return c;
}

VerifyCheck ground_state() {
  VerifyCheck c{"U(beta gamma = 1e6) - U0", 0.0, 1e-8};
  for (double ratio : {0.2, 1.0, 4.0, 5.0, 100.0}) {
    const auto b = BathSpec::drude(1.0, ratio);
    const double u0 = ground_energy(b);
    c.worst = std::max(c.worst, std::abs(internal_U(b, 1e6) - u0) / (1.0 + std::abs(u0)));
  }
  return c;
}

VerifyCheck low_t_series() {
  VerifyCheck c{"Euler-Maclaurin C_Z vs closed form at T = 1e-2", 0.0, 1e-8};
  for (double ratio : {2.0, 5.0, 50.0}) {
    const auto b = BathSpec::drude(1.0, ratio);
    const auto f = free_particle_profile(drude_kernel(b));
    c.worst = std::max(c.worst, rel(euler_maclaurin_cz(f, 1e-2, kMaxEulerMaclaurinOrder), heat_cz(b, 1e-2)));
  }
  return c;
}

VerifyCheck inversion_pairs() {
  VerifyCheck c{"Laplace inversion of 1/s and s^-1/2", 0.0, 1e-6};
  const LaplaceImage inv = [](complex s) { return 1.0 / s; };
  const LaplaceImage inv_sqrt = [](complex s) { return 1.0 / std::sqrt(s); };
  for (double t : logspace(0.1, 10.0, 9)) {
    c.worst = std::max({c.worst, rel(invert_de_hoog(inv, t), 1.0),
                        rel(invert_de_hoog(inv_sqrt, t), 1.0 / std::sqrt(kPi * t)),
                        rel(invert_stehfest([](double s) { return 1.0 / s; }, t), 1.0),
                        rel(invert_stehfest([](double s) { return 1.0 / std::sqrt(s); }, t),
                            1.0 / std::sqrt(kPi * t))});
  }
  return c;
}

VerifyCheck dos_methods() {
  VerifyCheck c{"de Hoog vs Gaver-Stehfest on a smooth density", 0.0, 1e-4};
  const auto res = invert_dos(SystemSpec::free_particle(), BathSpec::drude(1.0, 5.0), logspace(0.01, 5.0, 30));
  double peak = 0.0;
  for (double r : res.rho) peak = std::max(peak, std::abs(r));
  for (std::size_t i = 0; i < res.rho.size(); ++i) {
    if (std::abs(res.rho[i]) > 0.01 * peak) c.worst = std::max(c.worst, rel(res.rho_check[i], res.rho[i]));
  }
  return c;
}

}  // namespace

std::vector<VerifyCheck> run_verify_suite() {
  return {oracle_grid(), consistency(), ground_state(), low_t_series(), inversion_pairs(), dos_methods()};
}

}  // namespace qdiss
