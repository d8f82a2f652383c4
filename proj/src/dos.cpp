#include "qdiss/dos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdiss/laplace.hpp"
#include "qdiss/specfun.hpp"

namespace qdiss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

void require_cutoff(const BathSpec& bath, const char* fn) {
  if (bath.is_ohmic()) {
    throw std::domain_error(std::string(fn) +
                            ": the partition function diverges logarithmically in the cutoff "
                            "for the strict-ohmic bath");
  }
}

void require_free_particle(const SystemSpec& system, const char* fn) {
  if (system.kind() != SystemKind::FreeParticle) {
    throw std::invalid_argument(std::string(fn) + ": only the free particle is supported");
  }
}

complex expm1(complex z) {
  const double s = std::sin(0.5 * z.imag());
  const complex rot_minus_one{-2.0 * s * s, std::sin(z.imag())};
  return std::expm1(z.real()) * std::exp(complex{0.0, z.imag()}) + rot_minus_one;
}

// mu(x1) + mu(x2) - mu(X), mu the Stirling remainder. Z e^(beta U0) equals
// c_inf exp of this, exactly.
complex remainder_excess(const BathSpec& bath, complex beta) {
  const auto x = roots(bath, beta);
  const complex big_x = beta * bath.omega_d() / kTwoPi;
  using specfun::log_gamma_remainder;
  return log_gamma_remainder(x[0]) + log_gamma_remainder(x[1]) - log_gamma_remainder(big_x);
}

void require_beta(complex beta) {
  if (!(beta.real() > 0.0) || !std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
    throw std::domain_error("shifted_partition: requires re(beta) > 0");
  }
}

DeHoogOptions de_hoog_options(int terms) {
  DeHoogOptions o;
  o.terms = terms;
  return o;
}

}  // namespace

double ground_energy(const BathSpec& bath) {
  require_cutoff(bath, "ground_energy");
  const double wd = bath.omega_d();
  const auto w = root_frequencies(bath);
  if (w[0].imag() == 0.0) {
    // omega_1 = omega_d - omega_2, so ln(omega_d / omega_1) = -log1p(-omega_2 / omega_d).
    const double w1 = w[0].real();
    const double w2 = w[1].real();
    return (-w1 * std::log1p(-w2 / wd) + w2 * std::log(wd / w2)) / kTwoPi;
  }
  return 2.0 * (w[0] / kTwoPi * std::log(wd / w[0])).real();
}

double delta_weight(const SystemSpec& system, const BathSpec& bath) {
  require_free_particle(system, "delta_weight");
  require_cutoff(bath, "delta_weight");
  return system.box_ratio() * std::sqrt(kPi * bath.gamma() / bath.omega_d());
}

complex shifted_partition(const SystemSpec& system, const BathSpec& bath, complex beta) {
  require_beta(beta);
  const double c_inf = delta_weight(system, bath);
  return c_inf * std::exp(remainder_excess(bath, beta));
}

double shifted_partition(const SystemSpec& system, const BathSpec& bath, double beta) {
  return shifted_partition(system, bath, complex{beta, 0.0}).real();
}

complex shifted_partition_continuous(const SystemSpec& system, const BathSpec& bath, complex beta) {
  require_beta(beta);
  const double c_inf = delta_weight(system, bath);
  return c_inf * expm1(remainder_excess(bath, beta));
}

void validate(const InversionConfig& cfg) {
  auto check = [](InversionMethod m, int nodes) {
    if (m == InversionMethod::DeHoog) {
      if (nodes < 8 || nodes > 64) throw std::invalid_argument("de Hoog terms must be in [8, 64]");
    } else if (nodes < 8 || nodes > 18 || nodes % 2 != 0) {
      throw std::invalid_argument("Stehfest order must be even and in [8, 18]");
    }
  };
  check(cfg.method, cfg.nodes);
  if (cfg.cross_check) {
    check(cfg.method == InversionMethod::DeHoog ? InversionMethod::GaverStehfest : InversionMethod::DeHoog,
          cfg.check_nodes);
  }
}

SpectralDensityResult invert_dos(const SystemSpec& system, const BathSpec& bath,
                                 const std::vector<double>& energies, const InversionConfig& cfg) {
  require_free_particle(system, "invert_dos");
  require_cutoff(bath, "invert_dos");
  validate(cfg);
  for (double e : energies) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw std::invalid_argument("invert_dos: energies must lie strictly above U0");
    }
  }

  SpectralDensityResult res;
  res.energies = energies;
  res.delta_weight = delta_weight(system, bath);
  res.u0 = ground_energy(bath);
  res.method = cfg.method;

  const double wd = bath.omega_d();
  const double u0 = res.u0;
  const bool shift = cfg.shift;
  const LaplaceImage image = [&](complex beta) {
    const complex g = shifted_partition_continuous(system, bath, beta);
    return shift ? g : g * std::exp(-beta * u0);
  };
  const RealLaplaceImage real_image = [&](double beta) { return image(complex{beta, 0.0}).real(); };

  auto run = [&](InversionMethod m, int nodes, double e) {
    const double t = shift ? e * wd : e * wd + u0;
    const double f = m == InversionMethod::DeHoog ? invert_de_hoog(image, t, de_hoog_options(nodes))
                                                  : invert_stehfest(real_image, t, nodes);
    return wd * f;
  };

  res.rho.reserve(energies.size());
  for (double e : energies) res.rho.push_back(run(cfg.method, cfg.nodes, e));

  res.unreliable.assign(energies.size(), 0);
  if (cfg.cross_check) {
    const InversionMethod other =
        cfg.method == InversionMethod::DeHoog ? InversionMethod::GaverStehfest : InversionMethod::DeHoog;
    double peak = 0.0;
    for (double r : res.rho) peak = std::max(peak, std::abs(r));
    res.rho_check.reserve(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) {
      const double c = run(other, cfg.check_nodes, energies[i]);
      res.rho_check.push_back(c);
      const double scale = std::max(std::abs(res.rho[i]), 1e-2 * peak);
      res.unreliable[i] = std::abs(c - res.rho[i]) > kDisagreementThreshold * scale ? 1 : 0;
    }
  }
  return res;
}

double dos_low_energy_series(const SystemSpec& system, const BathSpec& bath, double E) {
  const double wd = bath.omega_d();
  const double c_inf = delta_weight(system, bath);
  const double e = (E - ground_energy(bath)) / wd;
  if (!(e > 0.0 && e < 0.5)) {
    throw std::domain_error("dos_low_energy_series: needs 0 < (E - U0)/omega_d < 0.5");
  }
  const double a = 1.0 / bath.ratio() - 1.0;
  return c_inf / wd * (kPi / 6.0 * a + kPi * kPi / 72.0 * a * a * e);
}

double undamped_dos(const SystemSpec& system, const BathSpec& bath, double E) {
  require_free_particle(system, "undamped_dos");
  require_cutoff(bath, "undamped_dos");
  const double t = E - ground_energy(bath);
  if (!(t > 0.0)) throw std::domain_error("undamped_dos: needs E > U0");
  return system.box_ratio() / std::sqrt(bath.omega_d() * t);
}

SignedSpectralMeasure single_oscillator_measure(const std::vector<std::pair<double, double>>& levels,
                                                double omega) {
  if (levels.empty()) throw std::invalid_argument("single_oscillator_measure: empty level list");
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("single_oscillator_measure: omega must be positive");
  }
  std::vector<std::pair<double, double>> raw;
  raw.reserve(2 * levels.size());
  for (const auto& [energy, g] : levels) {
    if (!(g > 0.0) || !std::isfinite(g) || !std::isfinite(energy)) {
      throw std::invalid_argument("single_oscillator_measure: degeneracies must be positive");
    }
    raw.emplace_back(energy - 0.5 * omega, g);
    raw.emplace_back(energy + 0.5 * omega, -g);
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  SignedSpectralMeasure m;
  for (const auto& atom : raw) {
    if (!m.atoms.empty()) {
      auto& last = m.atoms.back();
      const double tol = 1e-12 * std::max({1.0, std::abs(last.first), std::abs(atom.first)});
      if (std::abs(atom.first - last.first) <= tol) {
        last.second += atom.second;
        continue;
      }
    }
    m.atoms.push_back(atom);
  }
  std::erase_if(m.atoms, [](const auto& a) { return a.second == 0.0; });
  return m;
}

double laplace_transform(const SignedSpectralMeasure& m, double beta) {
  double sum = 0.0;
  for (const auto& [energy, w] : m.atoms) sum += w * std::exp(-beta * energy);
  return sum;
}

PositivityReport verify_positivity(const SpectralDensityResult& result) {
  PositivityReport report;
  const auto& e = result.energies;
  const auto& r = result.rho;
  std::size_t i = 0;
  while (i < r.size()) {
    if (r[i] < 0.0) {
      std::size_t j = i;
      while (j + 1 < r.size() && r[j + 1] < 0.0) ++j;
      report.negative_intervals.emplace_back(e[i], e[j]);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return report;
}

}  // namespace qdiss
