// laplace.hpp - numerical inverse Laplace transforms.
//
// f(t) = (1 / 2 pi i) int F(s) e^(s t) ds.

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace qdiss {

using LaplaceImage = std::function<std::complex<double>(std::complex<double>)>;
using RealLaplaceImage = std::function<double(double)>;

// de Hoog, Knight and Stokes: trapezoidal Bromwich sum over [0, 2T] on the
// line re(s) = alpha - ln(tol) / 2T, accelerated by a continued fraction
// built with the quotient-difference algorithm. terms is M; the image is
// sampled at 2M + 1 points. F must be analytic for re(s) > alpha.
struct DeHoogOptions {
  int terms = 24;
  double period_factor = 4.0;  // T = period_factor * t
  double tol = 1e-14;
  double alpha = 0.0;
};

double invert_de_hoog(const LaplaceImage& F, double t, const DeHoogOptions& opt = {});

// Gaver-Stehfest with even order N in [2, 18]; only real samples
// F(k ln 2 / t), k = 1..N, are needed. Double precision limits N to ~18.
double invert_stehfest(const RealLaplaceImage& F, double t, int order = 14);

// The Stehfest weights V_k, k = 1..N.
std::vector<double> stehfest_weights(int order);

}  // namespace qdiss
