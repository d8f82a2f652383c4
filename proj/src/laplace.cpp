#include "qdiss/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qdiss {

namespace {

using cplx = std::complex<double>;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

double invert_de_hoog(const LaplaceImage& F, double t, const DeHoogOptions& opt) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("invert_de_hoog: t must be > 0");
  if (opt.terms < 2 || opt.terms > 128) throw std::invalid_argument("invert_de_hoog: terms in [2, 128]");
  if (!(opt.period_factor > 0.5)) throw std::invalid_argument("invert_de_hoog: period_factor > 0.5");
  if (!(opt.tol > 0.0 && opt.tol < 1.0)) throw std::invalid_argument("invert_de_hoog: tol in (0, 1)");

  const int m = opt.terms;
  const int n = 2 * m + 1;
  const double period = opt.period_factor * t;
  const double shift = opt.alpha - std::log(opt.tol) / (2.0 * period);
  const double pi = std::numbers::pi;

  std::vector<cplx> a(n);
  for (int k = 0; k < n; ++k) a[k] = F(cplx{shift, pi * k / period});
  a[0] *= 0.5;

  // Quotient-difference table, stored column by column.
  std::vector<std::vector<cplx>> e(m + 1, std::vector<cplx>(n, 0.0));
  std::vector<std::vector<cplx>> q(m + 1, std::vector<cplx>(n, 0.0));
  for (int i = 0; i < n - 1; ++i) q[1][i] = a[i + 1] / a[i];
  for (int r = 1; r <= m; ++r) {
    for (int i = 0; i < n - 2 * r; ++i) e[r][i] = q[r][i + 1] - q[r][i] + e[r - 1][i + 1];
    if (r < m) {
      for (int i = 0; i < n - 2 * r - 1; ++i) q[r + 1][i] = q[r][i + 1] * e[r][i + 1] / e[r][i];
    }
  }

  std::vector<cplx> d(n);
  d[0] = a[0];
  for (int r = 1; r <= m; ++r) {
    d[2 * r - 1] = -q[r][0];
    d[2 * r] = -e[r][0];
  }

  // Continued fraction d0 / (1 + d1 z / (1 + d2 z / ...)) by the three-term
  // recurrence, with the tail replaced by its limiting remainder.
  const cplx z = std::exp(cplx{0.0, pi * t / period});
  cplx a_prev = 0.0, a_cur = d[0];
  cplx b_prev = 1.0, b_cur = 1.0;
  for (int j = 1; j < 2 * m; ++j) {
    const cplx a_next = a_cur + d[j] * z * a_prev;
    const cplx b_next = b_cur + d[j] * z * b_prev;
    a_prev = a_cur;
    a_cur = a_next;
    b_prev = b_cur;
    b_cur = b_next;
  }
  const cplx h = 0.5 * (1.0 + z * (d[2 * m - 1] - d[2 * m]));
  const cplx rem = -h * (1.0 - std::sqrt(1.0 + z * d[2 * m] / (h * h)));
  const cplx a_last = a_cur + rem * a_prev;
  const cplx b_last = b_cur + rem * b_prev;
  return std::exp(shift * t) / period * (a_last / b_last).real();
}

std::vector<double> stehfest_weights(int order) {
  if (order < 2 || order > 18 || order % 2 != 0) {
    throw std::invalid_argument("Stehfest order must be even and in [2, 18]");
  }
  const int half = order / 2;
  std::vector<double> v(order);
  for (int k = 1; k <= order; ++k) {
    double sum = 0.0;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      sum += std::pow(j, half) * factorial(2 * j) /
             (factorial(half - j) * factorial(j) * factorial(j - 1) * factorial(k - j) *
              factorial(2 * j - k));
    }
    v[k - 1] = ((k + half) % 2 == 0 ? 1.0 : -1.0) * sum;
  }
  return v;
}

double invert_stehfest(const RealLaplaceImage& F, double t, int order) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("invert_stehfest: t must be > 0");
  const auto v = stehfest_weights(order);
  const double step = std::numbers::ln2 / t;
  double sum = 0.0;
  for (int k = 1; k <= order; ++k) sum += v[k - 1] * F(k * step);
  return sum * step;
}

}  // namespace qdiss
