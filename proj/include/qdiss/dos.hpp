// dos.hpp - density of states of the damped free particle, obtained by
// inverting the reduced partition function Z(beta) = int rho(E) e^(-beta E) dE.
//
// Z e^(beta U0) tends to c_inf = box_ratio sqrt(pi gamma / omega_d) as
// beta -> infinity; that constant is a delta at E = U0 and is split off
// before inversion. The remainder is the continuous part of rho.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qdiss/model.hpp"

namespace qdiss {

// U0 = sum_i (omega_i / 2 pi) ln(omega_d / omega_i), the T -> 0 limit of U.
double ground_energy(const BathSpec& bath);

// Weight of the delta at U0.
double delta_weight(const SystemSpec& system, const BathSpec& bath);

// Z(beta) e^(beta U0). Complex beta needs re(beta) > 0; the result obeys
// f(conj beta) = conj f(beta).
complex shifted_partition(const SystemSpec& system, const BathSpec& bath, complex beta);
double shifted_partition(const SystemSpec& system, const BathSpec& bath, double beta);

// Z(beta) e^(beta U0) - c_inf, computed without cancellation.
complex shifted_partition_continuous(const SystemSpec& system, const BathSpec& bath, complex beta);

enum class InversionMethod { DeHoog, GaverStehfest };

struct InversionConfig {
  InversionMethod method = InversionMethod::DeHoog;
  // de Hoog: number of continued-fraction terms M, in [8, 64].
  // Gaver-Stehfest: order, even in [8, 18].
  int nodes = 48;
  // Invert the U0-shifted function (true) or Z itself, with the delta
  // shifted along (false). Both give the same density.
  bool shift = true;
  // Also run the other method and flag points where the two disagree.
  bool cross_check = true;
  int check_nodes = 14;
};

void validate(const InversionConfig& cfg);

struct SpectralDensityResult {
  std::vector<double> energies;   // (E - U0) / omega_d
  std::vector<double> rho;        // omega_d rho(E), box_ratio included
  std::vector<double> rho_check;  // same from the cross-check method; empty if not run
  std::vector<std::uint8_t> unreliable;  // 1 where the methods disagree beyond 1e-2
  double delta_weight = 0.0;
  double u0 = 0.0;
  InversionMethod method = InversionMethod::DeHoog;
};

inline constexpr double kDisagreementThreshold = 1e-2;

// energies are (E - U0) / omega_d and must be strictly positive.
SpectralDensityResult invert_dos(const SystemSpec& system, const BathSpec& bath,
                                 const std::vector<double>& energies, const InversionConfig& cfg = {});

// Low-energy expansion of the continuous part, in 1/energy:
// c_inf / omega_d [(pi/6)(omega_d/gamma - 1) + (pi^2/72)(omega_d/gamma - 1)^2 (E - U0)/omega_d].
// E is absolute; requires 0 < (E - U0)/omega_d < 0.5.
double dos_low_energy_series(const SystemSpec& system, const BathSpec& bath, double E);

// Undamped density box_ratio / sqrt(omega_d (E - U0)), in 1/energy.
double undamped_dos(const SystemSpec& system, const BathSpec& bath, double E);

struct SignedSpectralMeasure {
  std::vector<std::pair<double, double>> atoms;  // (energy, signed weight), sorted
};

// Z = Z_S / Z_osc for a system with levels (E_n, g_n) coupled to one
// oscillator of frequency omega. The inverse transform has +g_n at
// E_n - omega/2 and -g_n at E_n + omega/2; coincident energies are merged.
SignedSpectralMeasure single_oscillator_measure(const std::vector<std::pair<double, double>>& levels,
                                                double omega);

// sum_atoms w e^(-beta E)
double laplace_transform(const SignedSpectralMeasure& m, double beta);

struct PositivityReport {
  // Closed intervals of (E - U0)/omega_d spanned by consecutive negative samples.
  std::vector<std::pair<double, double>> negative_intervals;
  bool admissible() const { return negative_intervals.empty(); }
};

PositivityReport verify_positivity(const SpectralDensityResult& result);

}  // namespace qdiss
