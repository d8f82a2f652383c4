// series.hpp - truncated Taylor series arithmetic around zero.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qdiss {

class PowerSeries {
 public:
  explicit PowerSeries(std::size_t degree) : c_(degree + 1, 0.0) {}
  PowerSeries(std::vector<double> coeffs, std::size_t degree) : c_(degree + 1, 0.0) {
    for (std::size_t k = 0; k < coeffs.size() && k <= degree; ++k) c_[k] = coeffs[k];
  }

  static PowerSeries constant(double v, std::size_t degree) {
    PowerSeries s(degree);
    s.c_[0] = v;
    return s;
  }
  static PowerSeries identity(std::size_t degree) {
    PowerSeries s(degree);
    if (degree >= 1) s.c_[1] = 1.0;
    return s;
  }

  std::size_t degree() const { return c_.size() - 1; }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
  double& operator[](std::size_t k) { return c_.at(k); }

  PowerSeries& operator+=(const PowerSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o[k];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o[k];
    return *this;
  }
  PowerSeries& operator*=(double a) {
    for (double& v : c_) v *= a;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, double s) { return a *= s; }
  friend PowerSeries operator*(double s, PowerSeries a) { return a *= s; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(a.degree());
    for (std::size_t i = 0; i <= r.degree(); ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= i; ++j) acc += a[j] * b[i - j];
      r.c_[i] = acc;
    }
    return r;
  }

  // Requires b[0] != 0.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (b[0] == 0.0) throw std::domain_error("PowerSeries: division by a series vanishing at 0");
    PowerSeries q(a.degree());
    for (std::size_t i = 0; i <= q.degree(); ++i) {
      double acc = a[i];
      for (std::size_t j = 1; j <= i; ++j) acc -= b[j] * q.c_[i - j];
      q.c_[i] = acc / b[0];
    }
    return q;
  }

  // z * d/dz
  PowerSeries euler_operator() const {
    PowerSeries r(degree());
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = static_cast<double>(k) * c_[k];
    return r;
  }

  // k-th derivative at zero, k! c_k.
  double derivative_at_zero(std::size_t k) const {
    double f = 1.0;
    for (std::size_t j = 2; j <= k; ++j) f *= static_cast<double>(j);
    return f * (*this)[k];
  }

 private:
  std::vector<double> c_;
};

}  // namespace qdiss
