#include "qdiss/euler_maclaurin.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdiss/specfun.hpp"

namespace qdiss {

namespace {

constexpr std::size_t kProfileDegree = 2 * kMaxEulerMaclaurinOrder - 1;

PowerSeries kernel_series(const KernelFunctions& kernel) {
  if (kernel.taylor.size() < kProfileDegree + 1) {
    throw std::invalid_argument("kernel Taylor expansion must reach order 9");
  }
  return PowerSeries(kernel.taylor, kProfileDegree);
}

void require_order(int n, const char* fn) {
  if (n < 1 || n > kMaxEulerMaclaurinOrder) {
    throw std::invalid_argument(std::string(fn) + ": order must be in [1, 5]");
  }
}

}  // namespace

SmoothProfile free_particle_profile(const KernelFunctions& kernel) {
  const PowerSeries g = kernel_series(kernel);
  const PowerSeries x = PowerSeries::identity(kProfileDegree);
  SmoothProfile p;
  p.taylor = (g - g.euler_operator()) / (x + g);
  p.value = [kernel](double v) {
    const double gh = kernel.value(v);
    return (gh - v * kernel.derivative(v)) / (v + gh);
  };
  return p;
}

SmoothProfile oscillator_profile(const KernelFunctions& kernel, double omega0) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw std::invalid_argument("omega0 must be positive and finite");
  }
  const PowerSeries g = kernel_series(kernel);
  const PowerSeries x = PowerSeries::identity(kProfileDegree);
  const double w2 = omega0 * omega0;
  const PowerSeries c = PowerSeries::constant(w2, kProfileDegree);
  SmoothProfile p;
  p.taylor = (2.0 * c + x * (g - g.euler_operator())) / (c + x * g + x * x);
  p.value = [kernel, w2](double v) {
    const double gh = kernel.value(v);
    return (2.0 * w2 + v * gh - v * v * kernel.derivative(v)) / (w2 + v * gh + v * v);
  };
  return p;
}

double euler_maclaurin_coefficient(const SmoothProfile& f, int n) {
  require_order(n, "euler_maclaurin_coefficient");
  const int k = 2 * n - 1;
  // B_2n / (2n-1)! (2 pi)^(2n-1) (0 - (2n-1)! c_(2n-1))
  return -specfun::bernoulli(2 * n) * std::pow(2.0 * std::numbers::pi, k) *
         f.taylor[static_cast<std::size_t>(k)];
}

double euler_maclaurin_cz(const SmoothProfile& f, double T, int order) {
  require_order(order, "euler_maclaurin_cz");
  if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
  double sum = 0.0;
  for (int n = 1; n <= order; ++n) {
    sum += euler_maclaurin_coefficient(f, n) * std::pow(T, 2 * n - 1);
  }
  return sum;
}

bool predicts_negative_cz(const SmoothProfile& f) {
  return euler_maclaurin_coefficient(f, 1) < 0.0;
}

double profile_ground_energy(const SmoothProfile& f) {
  using boost::math::quadrature::gauss_kronrod;
  const double integral = gauss_kronrod<double, 61>::integrate(
      f.value, 0.0, std::numeric_limits<double>::infinity(), 20, 1e-13);
  return integral / (2.0 * std::numbers::pi);
}

}  // namespace qdiss
