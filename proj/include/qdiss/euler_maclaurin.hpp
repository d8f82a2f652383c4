// euler_maclaurin.hpp - low-temperature expansion of C^Z from the
// Euler-MacLaurin form of the Matsubara sum, for an arbitrary damping kernel.
//
// The internal energy is written as a sum over Matsubara frequencies of a
// smooth profile f(nu). Its specific heat then reads
//   C^Z = sum_n B_2n / (2n-1)! (2 pi T)^(2n-1) [f^(2n-1)(inf) - f^(2n-1)(0)]
// and both profiles supplied here have vanishing derivatives at infinity.

#pragma once

#include <functional>

#include "qdiss/model.hpp"
#include "qdiss/series.hpp"

namespace qdiss {

struct SmoothProfile {
  std::function<double(double)> value;
  PowerSeries taylor{0};  // f around 0
};

// f(x) = (gamma_hat(x) - x gamma_hat'(x)) / (x + gamma_hat(x))
SmoothProfile free_particle_profile(const KernelFunctions& kernel);
// f(x) = (2 w0^2 + x gamma_hat(x) - x^2 gamma_hat'(x)) / (w0^2 + x gamma_hat(x) + x^2)
SmoothProfile oscillator_profile(const KernelFunctions& kernel, double omega0);

inline constexpr int kMaxEulerMaclaurinOrder = 5;

// Coefficient of T^(2n-1) in the expansion; n in [1, 5].
double euler_maclaurin_coefficient(const SmoothProfile& f, int n);

// Partial sum through order terms, order in [1, 5].
double euler_maclaurin_cz(const SmoothProfile& f, double T, int order);

// True iff the linear low-T coefficient is negative. For the free particle
// this is gamma_hat'(0) < -1.
bool predicts_negative_cz(const SmoothProfile& f);

// (1/2 pi) int_0^inf f(x) dx, the zero-temperature limit of U.
double profile_ground_energy(const SmoothProfile& f);

}  // namespace qdiss
