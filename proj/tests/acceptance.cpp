// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qdiss/dos.hpp"
#include "qdiss/euler_maclaurin.hpp"
#include "qdiss/laplace.hpp"
#include "qdiss/oracles.hpp"
#include "qdiss/thermo.hpp"

using namespace qdiss;

namespace {

constexpr double kPi = std::numbers::pi;
const SystemSpec kFree = SystemSpec::free_particle();

BathSpec bath(double ratio) { return BathSpec::drude(1.0, ratio); }

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return v;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

double log_derivative(const std::function<double(double)>& f, double x, double h = 1e-4) {
  const auto at = [&](int k) { return f(x * std::exp(k * h)); };
  return (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
}

double slope_through_origin(const std::function<double(double)>& f, double lo, double hi) {
  double num = 0.0, den = 0.0;
  for (double t : logspace(lo, hi, 41)) {
    num += t * f(t);
    den += t * t;
  }
  return num / den;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome classical_limit() {
  const auto b = bath(10.0);
  const double ce = heat_ce(b, 1e3), cz = heat_cz(b, 1e3);
  const auto in = [](double c) { return c >= 0.4995 && c <= 0.5; };
  return {in(ce) && in(cz), fmt("C_E = %.9f, C_Z = %.9f", ce, cz)};
}

Outcome factor_two() {
  const auto b = bath(1.0);
  const double q = (0.5 - heat_cz(b, 100.0)) / (0.5 - heat_ce(b, 100.0));
  return {std::abs(q - 2.0) <= 0.04, fmt("ratio of deficits = %.6f", q)};
}

Outcome low_t_slopes() {
  bool ok = true;
  std::string d;
  const auto b10 = bath(10.0);
  const double s = slope_through_origin([&](double t) { return heat_ce(b10, t); }, 1e-4, 1e-3);
  ok &= std::abs(s - kPi / 3.0) <= 1e-3;
  d += fmt("C_E: %.3e off", s - kPi / 3.0);
  for (double ratio : {0.2, 0.5, 5.0}) {
    const auto b = bath(ratio);
    const double want = kPi / 3.0 * (1.0 - 1.0 / ratio);
    const double got = slope_through_origin([&](double t) { return heat_cz(b, t); }, 1e-4, 1e-3);
    ok &= std::abs(got - want) <= 1e-3;
    d += fmt("; C_Z(%g): %.3e off", ratio, got - want);
  }
  return {ok, d};
}

Outcome negative_heat() {
  const auto b = bath(0.2);
  double lowest = INFINITY;
  for (double t : logspace(1e-6, 0.1, 400)) lowest = std::min(lowest, heat_cz(b, t));
  const double cold = heat_cz(b, 1e-9);
  return {lowest < 0.0 && std::abs(cold) < 1e-7, fmt("min C_Z = %.6f, C_Z(1e-9) = %.3e", lowest, cold)};
}

Outcome ohmic_routes() {
  const auto b = bath(1e6);
  double worst = 0.0;
  for (double t : logspace(1e-2, 10.0, 400)) worst = std::max(worst, std::abs(heat_ce(b, t) - heat_cz(b, t)));
  return {worst <= 1e-3, fmt("sup |C_E - C_Z| = %.3e", worst)};
}

Outcome oracle_equivalence() {
  double worst = 0.0;
  for (double ratio : logspace(0.1, 1e3, 10)) {
    const auto b = bath(ratio);
    for (double t : logspace(1e-2, 1e2, 10)) {
      const double beta = 1.0 / t;
      worst = std::max({worst, rel(energy_E(b, beta), energy_E_sum_oracle(b, beta)),
                        rel(heat_ce(b, t), heat_ce_sum_oracle(b, t)),
                        rel(internal_U(b, beta), internal_U_sum_oracle(b, beta)),
                        std::abs(log_partition(kFree, b, beta) - log_partition_product_oracle(kFree, b, beta))});
    }
  }
  return {worst <= 1e-6, fmt("worst deviation %.3e over 100 points", worst)};
}

Outcome consistency() {
  double worst_cz = 0.0, worst_u = 0.0;
  for (double ratio : {0.2, 1.0, 5.0}) {
    const auto b = bath(ratio);
    for (double t : {0.03, 0.3, 3.0}) {
      const double cz = log_derivative([&](double x) { return entropy(kFree, b, x); }, t);
      const double u = -log_derivative([&](double x) { return log_partition(kFree, b, x); }, 1.0 / t) * t;
      worst_cz = std::max(worst_cz, rel(cz, heat_cz(b, t)));
      worst_u = std::max(worst_u, rel(u, internal_U(b, 1.0 / t)));
    }
  }
  return {worst_cz <= 1e-6 && worst_u <= 1e-6, fmt("T dS/dT: %.3e, -d lnZ/d beta: %.3e", worst_cz, worst_u)};
}

Outcome ground_state() {
  double worst = 0.0;
  for (double ratio : {0.2, 1.0, 4.0, 5.0, 100.0}) {
    const auto b = bath(ratio);
    const double u0 = ground_energy(b);
    worst = std::max(worst, std::abs(internal_U(b, 1e6) - u0) / (1.0 + std::abs(u0)));
  }
  return {worst <= 1e-8, fmt("worst scaled gap %.3e", worst)};
}

Outcome dos_signs() {
  const std::vector<double> grid = {0.002, 0.005, 0.01};
  bool ok = true;
  std::string d;
  for (double ratio : {0.2, 5.0}) {
    const auto res = invert_dos(kFree, bath(ratio), grid);
    const double plateau = kPi / 6.0 * (ratio - 1.0) * std::sqrt(kPi / ratio);
    double worst = 0.0;
    for (double r : res.rho) {
      ok &= (r > 0.0) == (ratio > 1.0);
      worst = std::max(worst, std::abs(r / plateau - 1.0));
    }
    ok &= worst <= 0.05;
    d += fmt("%g: plateau off by %.2f%%; ", ratio, 100.0 * worst);
  }
  const auto flat = invert_dos(kFree, bath(1.0), grid);
  double big = 0.0;
  for (double r : flat.rho) big = std::max(big, std::abs(r));
  ok &= big < 1e-3;
  d += fmt("|rho| at omega_D = gamma <= %.2e", big);
  return {ok, d};
}

Outcome inversion_machinery() {
  double pairs = 0.0;
  const LaplaceImage inv = [](complex s) { return 1.0 / s; };
  const LaplaceImage inv_sqrt = [](complex s) { return 1.0 / std::sqrt(s); };
  for (double e : logspace(0.1, 10.0, 21)) {
    const double want = 1.0 / std::sqrt(kPi * e);
    pairs = std::max({pairs, rel(invert_de_hoog(inv, e), 1.0), rel(invert_de_hoog(inv_sqrt, e), want),
                      rel(invert_stehfest([](double s) { return 1.0 / s; }, e), 1.0),
                      rel(invert_stehfest([](double s) { return 1.0 / std::sqrt(s); }, e), want)});
  }

  double cross = 0.0;
  for (double ratio : {5.0, 20.0}) {
    const auto res = invert_dos(kFree, bath(ratio), linspace(0.02, 5.0, 50));
    double peak = 0.0;
    for (double r : res.rho) peak = std::max(peak, std::abs(r));
    for (std::size_t i = 0; i < res.rho.size(); ++i) {
      if (std::abs(res.rho[i]) > 0.01 * peak) cross = std::max(cross, rel(res.rho_check[i], res.rho[i]));
    }
  }

  // re-transform on composite Gauss-Legendre panels over e in [0, 40]
  using boost::math::quadrature::gauss;
  const auto& x = gauss<double, 10>::abscissa();
  const auto& w = gauss<double, 10>::weights();
  std::vector<double> nodes, weights;
  for (double lo = 0.0; lo < 40.0 - 1e-9; lo += 0.25) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (double sgn : {-1.0, 1.0}) {
        if (x[k] == 0.0 && sgn > 0) continue;
        nodes.push_back(lo + 0.125 * (1.0 + sgn * x[k]));
        weights.push_back(0.125 * w[k]);
      }
    }
  }
  double trip = 0.0;
  InversionConfig cfg;
  cfg.cross_check = false;
  for (double ratio : {0.2, 5.0}) {
    const auto b = bath(ratio);
    const auto res = invert_dos(kFree, b, nodes, cfg);
    for (double bw : logspace(0.5, 50.0, 10)) {
      double z = res.delta_weight;
      for (std::size_t i = 0; i < nodes.size(); ++i) z += weights[i] * res.rho[i] * std::exp(-bw * nodes[i]);
      trip = std::max(trip, rel(z, shifted_partition(kFree, b, bw / b.omega_d())));
    }
  }
  return {pairs <= 1e-6 && cross <= 1e-4 && trip <= 1e-3,
          fmt("pairs %.2e, de Hoog vs Stehfest %.2e, round trip %.2e", pairs, cross, trip)};
}

Outcome signed_measure() {
  bool ok = true;
  double worst = 0.0;
  const std::vector<std::vector<std::pair<double, double>>> inputs = {
      {{0.0, 1.0}, {0.7, 2.0}, {1.9, 3.0}}, {{0.5, 1.0}, {1.5, 4.0}, {2.5, 2.0}}};
  for (const auto& levels : inputs) {
    const double omega = 1.0;
    const auto m = single_oscillator_measure(levels, omega);
    // expected atoms, merged by hand
    std::vector<std::pair<double, double>> want;
    for (const auto& [e, g] : levels) {
      want.emplace_back(e - omega / 2, g);
      want.emplace_back(e + omega / 2, -g);
    }
    std::sort(want.begin(), want.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& a : want) {
      if (!merged.empty() && merged.back().first == a.first) {
        merged.back().second += a.second;
      } else {
        merged.push_back(a);
      }
    }
    std::erase_if(merged, [](const auto& a) { return a.second == 0.0; });
    ok &= m.atoms == merged;

    for (double beta : {0.1, 1.0, 3.0}) {
      double zs = 0.0;
      for (const auto& [e, g] : levels) zs += g * std::exp(-beta * e);
      const double want_z = zs * 2.0 * std::sinh(beta * omega / 2.0);
      worst = std::max(worst, rel(laplace_transform(m, beta), want_z));
    }
  }
  return {ok && worst <= 1e-14, std::string(ok ? "atoms exact" : "atoms differ") + fmt(", transform error %.2e", worst)};
}

Outcome euler_maclaurin_generality() {
  double worst = 0.0;
  bool predicate = true;
  for (double ratio : {0.2, 0.5, 0.99, 1.01, 2.0, 5.0, 100.0}) {
    const auto b = bath(ratio);
    const auto f = free_particle_profile(drude_kernel(b));
    const double g0 = gamma_hat(b, 0.0), dg0 = gamma_hat_derivative(b, 0.0);
    const double want = kPi / 3.0 * (1.0 + dg0) / g0;
    worst = std::max(worst, std::abs(euler_maclaurin_coefficient(f, 1) - want) / std::max(1.0, std::abs(want)));
    predicate &= predicts_negative_cz(f) == (dg0 < -1.0);
    for (double w0 : {0.3, 2.0}) {
      const auto fo = oscillator_profile(drude_kernel(b), w0);
      const double wo = kPi / 3.0 * g0 / (w0 * w0);
      worst = std::max(worst, rel(euler_maclaurin_coefficient(fo, 1), wo));
      predicate &= !predicts_negative_cz(fo);
    }
  }
  // a kernel outside the Drude family: gamma_hat = g / (1 + z/w)^2, slope -2g/w at zero
  for (double w : {1.5, 1.9, 2.1, 3.0}) {
    KernelFunctions k;
    k.value = [w](double z) { return 1.0 / ((1 + z / w) * (1 + z / w)); };
    k.derivative = [w](double z) { return -2.0 / (w * std::pow(1 + z / w, 3)); };
    for (int n = 0; n <= 12; ++n) k.taylor.push_back((n + 1) * std::pow(-1.0 / w, n));
    predicate &= predicts_negative_cz(free_particle_profile(k)) == (-2.0 / w < -1.0);
  }
  return {worst <= 1e-10 && predicate,
          fmt("coefficient error %.2e, ", worst) + (predicate ? "predicate exact" : "predicate wrong")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"classical limit of C_E and C_Z", classical_limit},
      {"high-T deficit of C_Z is twice that of C_E", factor_two},
      {"low-T slopes", low_t_slopes},
      {"negative C_Z below omega_D = gamma, third law", negative_heat},
      {"routes agree near the strict-ohmic limit", ohmic_routes},
      {"closed forms match Matsubara sums", oracle_equivalence},
      {"thermodynamic consistency", consistency},
      {"ground-state energy", ground_state},
      {"density-of-states sign structure", dos_signs},
      {"inversion machinery", inversion_machinery},
      {"signed-measure counterexample", signed_measure},
      {"Euler-Maclaurin generality", euler_maclaurin_generality},
  };
  int failed = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d  %s  (%s)\n", o.pass ? "PASS" : "FAIL", n, c.name, o.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
