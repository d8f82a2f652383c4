#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qdiss/dos.hpp"
#include "qdiss/laplace.hpp"
#include "qdiss/thermo.hpp"

using namespace qdiss;

namespace {

constexpr double kPi = std::numbers::pi;
const SystemSpec kFree = SystemSpec::free_particle();

BathSpec bath(double ratio) { return BathSpec::drude(1.0, ratio); }

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

InversionConfig single(InversionMethod m = InversionMethod::DeHoog, int nodes = 48) {
  InversionConfig c;
  c.method = m;
  c.nodes = nodes;
  c.cross_check = false;
  return c;
}

}  // namespace

TEST_CASE("analytic Laplace pairs") {
  const LaplaceImage inv = [](complex s) { return 1.0 / s; };
  const LaplaceImage inv_sqrt = [](complex s) { return 1.0 / std::sqrt(s); };
  for (double t : {0.1, 0.3, 1.0, 3.0, 10.0}) {
    CHECK(std::abs(invert_de_hoog(inv, t) - 1.0) < 1e-6);
    CHECK(std::abs(invert_de_hoog(inv_sqrt, t) * std::sqrt(kPi * t) - 1.0) < 1e-6);
    CHECK(std::abs(invert_stehfest([](double s) { return 1.0 / s; }, t) - 1.0) < 1e-6);
    CHECK(std::abs(invert_stehfest([](double s) { return 1.0 / std::sqrt(s); }, t) * std::sqrt(kPi * t) - 1.0) <
          1e-6);
  }
  // an oscillating pair: sin t <-> 1 / (s^2 + 1)
  const LaplaceImage sine = [](complex s) { return 1.0 / (s * s + 1.0); };
  for (double t : {0.5, 2.0, 7.0}) CHECK(std::abs(invert_de_hoog(sine, t) - std::sin(t)) < 1e-9);
}

TEST_CASE("Stehfest weights") {
  const auto v = stehfest_weights(2);
  CHECK(v[0] == doctest::Approx(2.0));
  CHECK(v[1] == doctest::Approx(-2.0));
  // sum of weights vanishes for every order
  for (int n : {8, 12, 18}) {
    double s = 0.0, big = 0.0;
    for (double w : stehfest_weights(n)) {
      s += w;
      big = std::max(big, std::abs(w));
    }
    CHECK(std::abs(s) < 1e-12 * big);
  }
  CHECK_THROWS_AS(stehfest_weights(7), std::invalid_argument);
  CHECK_THROWS_AS(stehfest_weights(20), std::invalid_argument);
}

TEST_CASE("ground-state energy") {
  CHECK(std::abs(ground_energy(BathSpec::drude(1e-12, 1.0))) < 1e-10);
  CHECK(ground_energy(bath(4.0)) == doctest::Approx(4.0 / (2.0 * kPi) * std::log(2.0)).epsilon(1e-12));
  for (double ratio : {0.2, 1.0, 4.0, 5.0, 1e3}) {
    const auto b = bath(ratio);
    CHECK(std::abs(internal_U(b, 1e6) - ground_energy(b)) < 1e-8 * (1.0 + ground_energy(b)));
  }
  CHECK(ground_energy(bath(5.0)) == doctest::Approx(0.469120722145).epsilon(1e-11));
  CHECK(ground_energy(bath(0.2)) == doctest::Approx(0.161040399068).epsilon(1e-11));
  CHECK(ground_energy(bath(1.0)) == doctest::Approx(0.288675134595).epsilon(1e-11));
  CHECK_THROWS_AS(ground_energy(BathSpec::ohmic(1.0)), std::domain_error);
}

TEST_CASE("shifted partition function") {
  const auto b = bath(5.0);
  const double beta = 1e3 / 5.0;  // beta omega_d = 1e3
  const double c_inf = std::sqrt(kPi / 5.0);
  const double a = 5.0 - 1.0, bw = beta * 5.0;
  const double series = c_inf * (1.0 + kPi / (6.0 * bw) * a + kPi * kPi / (72.0 * bw * bw) * a * a);
  CHECK(std::abs(shifted_partition(kFree, b, beta) / series - 1.0) < 1e-6);
  // agrees with Z e^(beta U0) built from ln Z
  for (double x : {0.1, 1.0, 30.0}) {
    const double direct = std::exp(log_partition(kFree, b, x) + x * ground_energy(b));
    CHECK(shifted_partition(kFree, b, x) == doctest::Approx(direct).epsilon(1e-12));
  }

  const auto one = bath(1.0);
  CHECK(shifted_partition(SystemSpec::free_particle(2.0), one, 1e4) == doctest::Approx(2.0 * std::sqrt(kPi)).epsilon(1e-10));

  const complex z{1.0, 1.0};
  CHECK(shifted_partition(kFree, b, std::conj(z)) == std::conj(shifted_partition(kFree, b, z)));
  CHECK_THROWS_AS(shifted_partition(kFree, b, complex{0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(shifted_partition(kFree, b, -1.0), std::domain_error);

  // delta weight is the large-beta limit
  for (double ratio : {0.2, 1.0, 5.0}) {
    const auto bb = bath(ratio);
    CHECK(std::abs(shifted_partition(kFree, bb, 1e8) / delta_weight(kFree, bb) - 1.0) < 1e-6);
  }
}

TEST_CASE("frozen reference densities") {
  // omega_d rho at (E - U0)/omega_d, box = L_D, gamma = 1; 30-digit evaluation
  struct Ref {
    double ratio, e, value;
  };
  const Ref refs[] = {
      {5.0, 0.01, 1.676254673},   {5.0, 0.05, 1.714966427},     {5.0, 0.5, 1.254769965},
      {5.0, 1.0, 0.949059558},    {5.0, 5.0, 0.4429625495},     {0.2, 0.01, -1.656528452},
      {0.2, 1.0, -0.5508074859},  {0.2, 2.0, 1.53144558},       {0.2, 3.0, 0.0952897873},
      {0.2, 5.0, 0.411911496},    {1.0, 0.01, 0.0001831906515}, {1.0, 1.0, 1.012681282},
      {1.0, 5.0, 0.4343266291},
  };
  for (const auto& r : refs) {
    const auto res = invert_dos(kFree, bath(r.ratio), {r.e}, single());
    CHECK(res.rho[0] == doctest::Approx(r.value).epsilon(1e-8));
  }
}

TEST_CASE("low-energy sign structure and plateau") {
  const std::vector<double> grid = {0.005, 0.01, 0.02};
  for (double ratio : {0.2, 5.0}) {
    const auto b = bath(ratio);
    const auto res = invert_dos(kFree, b, grid);
    const double plateau = kPi / 6.0 * (ratio - 1.0) * res.delta_weight;
    for (double r : res.rho) {
      CHECK((r > 0.0) == (ratio > 1.0));
      CHECK(std::abs(r / plateau - 1.0) < 0.05);
    }
  }
  const auto flat = invert_dos(kFree, bath(1.0), grid);
  for (double r : flat.rho) CHECK(std::abs(r) < 1e-3);
}

TEST_CASE("weak damping approaches the undamped density") {
  const auto b = bath(1e4);
  const auto grid = linspace(0.1, 5.0, 25);
  const auto res = invert_dos(kFree, b, grid, single());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double undamped = b.omega_d() * undamped_dos(kFree, b, res.u0 + grid[i] * b.omega_d());
    CHECK(undamped == doctest::Approx(1.0 / std::sqrt(grid[i])));
    CHECK(std::abs(res.rho[i] / undamped - 1.0) < 0.02);
  }
}

TEST_CASE("low-energy series") {
  CHECK(dos_low_energy_series(kFree, bath(1.0), ground_energy(bath(1.0)) + 0.1) == 0.0);
  const auto b = bath(5.0);
  const std::vector<double> es = {0.01, 0.02, 0.1};
  const auto res = invert_dos(kFree, b, es);
  std::vector<double> err;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const double series = 5.0 * dos_low_energy_series(kFree, b, ground_energy(b) + es[i] * 5.0);
    err.push_back(std::abs(series / res.rho[i] - 1.0));
  }
  // the neglected term is quadratic in e
  CHECK(err[0] < 1e-3);
  CHECK(err[1] / err[0] == doctest::Approx(4.0).epsilon(0.1));
  CHECK(err[2] < 0.08);
  CHECK_THROWS_AS(dos_low_energy_series(kFree, b, ground_energy(b)), std::domain_error);
  CHECK_THROWS_AS(dos_low_energy_series(kFree, b, ground_energy(b) + 3.0), std::domain_error);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const auto bb = BathSpec::drude(std::pow(10.0, u(rng)), std::pow(10.0, u(rng)));
    const double e = ground_energy(bb) + 0.01 * bb.omega_d();
    const double v = dos_low_energy_series(kFree, bb, e);
    CHECK((v > 0.0) == (bb.omega_d() > bb.gamma()));
  }
}

TEST_CASE("method agreement where the density is smooth") {
  for (double ratio : {5.0, 20.0}) {
    InversionConfig cfg;
    const auto res = invert_dos(kFree, bath(ratio), linspace(0.02, 5.0, 60), cfg);
    double peak = 0.0;
    for (double r : res.rho) peak = std::max(peak, std::abs(r));
    for (std::size_t i = 0; i < res.rho.size(); ++i) {
      if (std::abs(res.rho[i]) < 0.01 * peak) continue;
      CHECK(std::abs(res.rho_check[i] / res.rho[i] - 1.0) < 1e-4);
      CHECK(res.unreliable[i] == 0);
    }
  }
}

TEST_CASE("oscillatory densities are flagged, not hidden") {
  const auto res = invert_dos(kFree, bath(0.2), linspace(0.5, 4.0, 15));
  int flagged = 0;
  for (auto u : res.unreliable) flagged += u;
  CHECK(flagged > 0);
}

TEST_CASE("shifted and unshifted inversions agree") {
  auto cfg = single();
  const auto a = invert_dos(kFree, bath(5.0), {0.1, 1.0, 4.0}, cfg);
  cfg.shift = false;
  const auto b = invert_dos(kFree, bath(5.0), {0.1, 1.0, 4.0}, cfg);
  for (int i = 0; i < 3; ++i) CHECK(b.rho[i] == doctest::Approx(a.rho[i]).epsilon(1e-8));
}

TEST_CASE("Laplace round trip") {
  using boost::math::quadrature::gauss;
  const auto& x = gauss<double, 10>::abscissa();
  const auto& w = gauss<double, 10>::weights();
  for (double ratio : {0.2, 5.0}) {
    const auto b = bath(ratio);
    // composite Gauss-Legendre on [0, 40] in e = (E - U0)/omega_d
    std::vector<double> nodes, weights;
    const double width = 0.25;
    for (double lo = 0.0; lo < 40.0 - 1e-9; lo += width) {
      const double mid = lo + 0.5 * width;
      for (std::size_t k = 0; k < x.size(); ++k) {
        nodes.push_back(mid - 0.5 * width * x[k]);
        weights.push_back(0.5 * width * w[k]);
        nodes.push_back(mid + 0.5 * width * x[k]);
        weights.push_back(0.5 * width * w[k]);
      }
    }
    const auto res = invert_dos(kFree, b, nodes, single());
    for (int j = 0; j < 10; ++j) {
      const double bw = 0.5 * std::pow(100.0, j / 9.0);  // beta omega_d in [0.5, 50]
      double integral = 0.0;
      for (std::size_t i = 0; i < nodes.size(); ++i) integral += weights[i] * res.rho[i] * std::exp(-bw * nodes[i]);
      const double z = shifted_partition(kFree, b, bw / b.omega_d());
      CHECK(std::abs((integral + res.delta_weight) / z - 1.0) < 1e-3);
    }
  }
}

TEST_CASE("peaks follow the oscillation frequency of the modes") {
  const auto b = bath(0.2);
  const double freq = std::abs(characteristic_modes(b).s1.imag()) / b.omega_d();
  const auto grid = linspace(0.05, 7.0, 700);
  const auto res = invert_dos(kFree, b, grid, single());
  int peaks = 0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (res.rho[i] > res.rho[i - 1] && res.rho[i] > res.rho[i + 1]) {
      ++peaks;
      const double k = std::max(1.0, std::round(grid[i] / freq));
      CHECK(std::abs(grid[i] / (k * freq) - 1.0) < 0.15);
    }
  }
  CHECK(peaks >= 1);
}

TEST_CASE("positivity report") {
  const auto good = invert_dos(kFree, bath(5.0), linspace(0.01, 2.0, 40), single());
  CHECK(verify_positivity(good).admissible());

  const auto bad = invert_dos(kFree, bath(0.2), linspace(0.01, 2.0, 40), single());
  const auto report = verify_positivity(bad);
  REQUIRE_FALSE(report.admissible());
  CHECK(report.negative_intervals.front().first == doctest::Approx(0.01));

  SpectralDensityResult zero;
  zero.energies = {0.1, 0.2, 0.3};
  zero.rho = {0.0, 0.0, 0.0};
  CHECK(verify_positivity(zero).admissible());
}

TEST_CASE("invert_dos input validation") {
  CHECK_THROWS_AS(invert_dos(kFree, bath(5.0), {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(invert_dos(kFree, BathSpec::ohmic(1.0), {1.0}), std::domain_error);
  CHECK_THROWS_AS(invert_dos(SystemSpec::oscillator(1.0), bath(5.0), {1.0}), std::invalid_argument);
  InversionConfig c;
  c.method = InversionMethod::GaverStehfest;
  c.nodes = 20;
  CHECK_THROWS_AS(invert_dos(kFree, bath(5.0), {1.0}, c), std::invalid_argument);
  c.nodes = 13;
  CHECK_THROWS_AS(invert_dos(kFree, bath(5.0), {1.0}, c), std::invalid_argument);
  c.nodes = 14;
  c.check_nodes = 4;
  CHECK_THROWS_AS(invert_dos(kFree, bath(5.0), {1.0}, c), std::invalid_argument);
}

TEST_CASE("single-oscillator signed measure") {
  const auto one = single_oscillator_measure({{1.0, 1.0}}, 1.0);
  REQUIRE(one.atoms.size() == 2);
  CHECK(one.atoms[0] == std::pair{0.5, 1.0});
  CHECK(one.atoms[1] == std::pair{1.5, -1.0});

  // E_{n+1} - E_n = omega: inner atoms coincide and their weights add
  const auto ladder = single_oscillator_measure({{0.0, 1.0}, {2.0, 3.0}, {4.0, 2.0}}, 2.0);
  REQUIRE(ladder.atoms.size() == 4);
  CHECK(ladder.atoms[0] == std::pair{-1.0, 1.0});
  CHECK(ladder.atoms[1] == std::pair{1.0, 2.0});
  CHECK(ladder.atoms[2] == std::pair{3.0, -1.0});
  CHECK(ladder.atoms[3] == std::pair{5.0, -2.0});

  const auto two = single_oscillator_measure({{0.3, 2.0}, {1.7, 5.0}}, 0.8);
  const double want = (2.0 * std::exp(-0.3) + 5.0 * std::exp(-1.7)) * (std::exp(0.4) - std::exp(-0.4));
  CHECK(laplace_transform(two, 1.0) == doctest::Approx(want).epsilon(1e-15));

  CHECK_THROWS_AS(single_oscillator_measure({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(single_oscillator_measure({{1.0, -1.0}}, 1.0), std::invalid_argument);
}
