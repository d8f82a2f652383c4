// thermo.hpp - equilibrium thermodynamics of a free particle with Drude
// damping, along the energy route (E, C^E) and the partition-function route
// (ln Z, U, S, C^Z).
//
// Units: hbar = k_B = M = 1. Temperatures, energies and frequencies share a
// common scale; specific heats and entropies are in units of k_B.

#pragma once

#include "qdiss/model.hpp"

namespace qdiss {

struct ThermoPoint {
  double T = 0.0;
  double E = 0.0;    // <H_S>
  double U = 0.0;    // -d ln Z / d beta
  double C_E = 0.0;  // dE/dT
  double C_Z = 0.0;  // dU/dT
  double S = 0.0;    // ln Z + beta U
  double F = 0.0;    // -T ln Z
  double lnZ = 0.0;
};

// Energy route.
double energy_E(const BathSpec& bath, double beta);
// Valid for the strict-ohmic bath as well.
double heat_ce(const BathSpec& bath, double T);

// Partition-function route. All of these need a finite cutoff: ln Z and U
// diverge logarithmically in omega_d.
double log_partition(const SystemSpec& system, const BathSpec& bath, double beta);
double internal_U(const BathSpec& bath, double beta);
// For the strict-ohmic bath this returns heat_ce, which is its limit.
double heat_cz(const BathSpec& bath, double T);
double entropy(const SystemSpec& system, const BathSpec& bath, double T);

ThermoPoint thermo_point(const SystemSpec& system, const BathSpec& bath, double T);

// U - E, the part of the internal energy not carried by <H_S>.
double coupling_energy_shift(const BathSpec& bath, double beta);

enum class Asymptotic { CEHigh, CELow, CZHigh, CZLow };

// High-T (through T^-2) and low-T (through T^3) series for the two specific
// heats. The high-T forms need a finite cutoff.
double asymptotics(const BathSpec& bath, double T, Asymptotic which);

}  // namespace qdiss
