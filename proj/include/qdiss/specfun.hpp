// specfun.hpp - gamma-family functions over complex arguments.
//
// All evaluations shift the argument upwards with the functional recurrence
// until |z| is large enough for the Stirling-type asymptotic series. Results
// obey f(conj z) == conj f(z) exactly.

#pragma once

#include <complex>

namespace qdiss::specfun {

using complex = std::complex<double>;

// Principal log-gamma, i.e. the branch that is real on the positive real axis
// and continuous on C \ (-inf, 0]. Throws std::domain_error on the cut.
complex log_gamma(complex z);

// ln Gamma(z) - [(z - 1/2) ln z - z + ln(2 pi)/2], the Stirling remainder.
// Decays like 1/(12 z). Same domain as log_gamma.
complex log_gamma_remainder(complex z);

// Polygamma functions of order 0, 1, 2. Require re(z) > 0.
complex digamma(complex z);
complex trigamma(complex z);
complex tetragamma(complex z);

inline double digamma(double x) { return digamma(complex{x, 0.0}).real(); }
inline double trigamma(double x) { return trigamma(complex{x, 0.0}).real(); }

// x^2 psi'(1 + x) - x + 1/2, evaluated without the cancellation that the
// direct form suffers for large |x|. Behaves like 1/(6x) for large x and
// tends to 1/2 as x -> 0. Requires re(x) >= 0.
complex trigamma_excess(complex x);

// d/dx of trigamma_excess.
complex trigamma_excess_derivative(complex x);

// Bernoulli number B_n for even n in [2, 30]; B_1 is not supported.
double bernoulli(int n);

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

}  // namespace qdiss::specfun
