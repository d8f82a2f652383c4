#include "qdiss/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdiss::specfun {

namespace {

// B_2 .. B_30
constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

// Asymptotic series are used once |z| reaches this radius; 12 terms then
// reach ~1e-20 relative.
constexpr double kAsymptoticRadius = 12.0;
constexpr int kAsymptoticTerms = 12;
// Near the negative real axis the Stirling series misses terms of size
// exp(-2 pi |im z|); below this |im z| we shift instead.
constexpr double kStokesGuard = 6.5;

bool on_cut(complex z) { return z.imag() == 0.0 && z.real() <= 0.0; }

void require_right_half_plane(complex z, const char* fn) {
  if (!(z.real() > 0.0) || !std::isfinite(z.imag())) {
    throw std::domain_error(std::string(fn) + ": requires re(z) > 0");
  }
}

// Evaluates f for im(z) >= 0 and mirrors the result otherwise, so that
// conjugation symmetry holds bit for bit.
template <class F>
complex mirrored(complex z, F&& f) {
  if (std::signbit(z.imag())) return std::conj(f(std::conj(z)));
  return f(z);
}

complex stirling_log_gamma(complex z) {
  // (z - 1/2) ln z - z + ln(2 pi)/2 + sum B_2k / (2k (2k-1) z^(2k-1))
  const complex inv = 1.0 / z;
  const complex inv2 = inv * inv;
  complex term = inv;
  complex series = 0.0;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * term;
    term *= inv2;
  }
  return series;
}

complex log_gamma_upper(complex z) {
  complex shift_sum = 0.0;
  while (std::abs(z) < kAsymptoticRadius ||
         (z.real() < 0.0 && z.imag() < kStokesGuard)) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + stirling_log_gamma(z) -
         shift_sum;
}

complex remainder_upper(complex z) {
  if (std::abs(z) >= kAsymptoticRadius &&
      (z.real() >= 0.0 || z.imag() >= kStokesGuard)) {
    return stirling_log_gamma(z);
  }
  constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
  return log_gamma_upper(z) - ((z - 0.5) * std::log(z) - z + half_log_two_pi);
}

complex digamma_upper(complex z) {
  complex shift_sum = 0.0;
  while (std::abs(z) < kAsymptoticRadius) {
    shift_sum += 1.0 / z;
    z += 1.0;
  }
  // ln z - 1/(2z) - sum B_2k / (2k z^2k)
  const complex inv = 1.0 / z;
  const complex inv2 = inv * inv;
  complex term = inv2;
  complex series = 0.0;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k) * term;
    term *= inv2;
  }
  return std::log(z) - 0.5 * inv - series - shift_sum;
}

complex trigamma_upper(complex z) {
  complex shift_sum = 0.0;
  while (std::abs(z) < kAsymptoticRadius) {
    shift_sum += 1.0 / (z * z);
    z += 1.0;
  }
  // 1/z + 1/(2 z^2) + sum B_2k / z^(2k+1)
  const complex inv = 1.0 / z;
  const complex inv2 = inv * inv;
  complex term = inv2 * inv;
  complex series = 0.0;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    series += kBernoulli[k - 1] * term;
    term *= inv2;
  }
  return inv + 0.5 * inv2 + series + shift_sum;
}

complex tetragamma_upper(complex z) {
  complex shift_sum = 0.0;
  while (std::abs(z) < kAsymptoticRadius) {
    shift_sum += 2.0 / (z * z * z);
    z += 1.0;
  }
  // -1/z^2 - 1/z^3 - sum (2k+1) B_2k / z^(2k+2)
  const complex inv = 1.0 / z;
  const complex inv2 = inv * inv;
  complex term = inv2 * inv2;
  complex series = 0.0;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    series += (2.0 * k + 1.0) * kBernoulli[k - 1] * term;
    term *= inv2;
  }
  return -inv2 - inv2 * inv - series - shift_sum;
}

// sum_k B_2k x^(1-2k)
complex excess_series(complex x) {
  const complex inv = 1.0 / x;
  const complex inv2 = inv * inv;
  complex term = inv;
  complex sum = 0.0;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    sum += kBernoulli[k - 1] * term;
    term *= inv2;
  }
  return sum;
}

// sum_k (1-2k) B_2k x^(-2k)
complex excess_derivative_series(complex x) {
  const complex inv = 1.0 / x;
  const complex inv2 = inv * inv;
  complex term = inv2;
  complex sum = 0.0;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    sum += (1.0 - 2.0 * k) * kBernoulli[k - 1] * term;
    term *= inv2;
  }
  return sum;
}

void require_excess_domain(complex x, const char* fn) {
  if (!(x.real() >= 0.0) || !std::isfinite(x.imag())) {
    throw std::domain_error(std::string(fn) + ": requires re(x) >= 0");
  }
}

}  // namespace

complex log_gamma(complex z) {
  if (on_cut(z) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("log_gamma: argument on the branch cut (-inf, 0]");
  }
  return mirrored(z, log_gamma_upper);
}

complex log_gamma_remainder(complex z) {
  if (on_cut(z) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("log_gamma_remainder: argument on the branch cut");
  }
  return mirrored(z, remainder_upper);
}

complex digamma(complex z) {
  require_right_half_plane(z, "digamma");
  return mirrored(z, digamma_upper);
}

complex trigamma(complex z) {
  require_right_half_plane(z, "trigamma");
  return mirrored(z, trigamma_upper);
}

complex tetragamma(complex z) {
  require_right_half_plane(z, "tetragamma");
  return mirrored(z, tetragamma_upper);
}

complex trigamma_excess(complex x) {
  require_excess_domain(x, "trigamma_excess");
  return mirrored(x, [](complex v) -> complex {
    if (std::abs(v) >= kAsymptoticRadius) return excess_series(v);
    return v * v * trigamma_upper(1.0 + v) - v + 0.5;
  });
}

complex trigamma_excess_derivative(complex x) {
  require_excess_domain(x, "trigamma_excess_derivative");
  return mirrored(x, [](complex v) -> complex {
    if (std::abs(v) >= kAsymptoticRadius) return excess_derivative_series(v);
    return 2.0 * v * trigamma_upper(1.0 + v) + v * v * tetragamma_upper(1.0 + v) -
           1.0;
  });
}

double bernoulli(int n) {
  if (n < 2 || n > 30 || n % 2 != 0) {
    throw std::invalid_argument("bernoulli: index must be even and in [2, 30]");
  }
  return kBernoulli[n / 2 - 1];
}

}  // namespace qdiss::specfun
