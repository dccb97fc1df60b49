#include "blaschke_lab/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blaschke_lab {

TaylorSeries TaylorSeries::constant(Complex value, std::size_t order) {
  TaylorSeries s(order);
  if (order > 0) s.c_[0] = value;
  return s;
}

TaylorSeries TaylorSeries::variable(Complex z0, std::size_t order) {
  TaylorSeries s(order);
  if (order > 0) s.c_[0] = z0;
  if (order > 1) s.c_[1] = 1.0;
  return s;
}

Complex TaylorSeries::derivative(std::size_t k) const {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return c_.at(k) * f;
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("taylor order mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("taylor order mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TaylorSeries& TaylorSeries::operator*=(Complex s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("taylor order mismatch");
  const std::size_t n = a.order();
  TaylorSeries r(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
    r.c_[k] = acc;
  }
  return r;
}

TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("taylor order mismatch");
  const std::size_t n = a.order();
  if (n == 0) return a;
  if (b.c_[0] == Complex{}) throw std::domain_error("taylor division by series vanishing at z0");
  TaylorSeries r(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = a.c_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * r.c_[k - j];
    r.c_[k] = acc / b.c_[0];
  }
  return r;
}

TaylorSeries exp(const TaylorSeries& s) {
  const std::size_t n = s.order();
  TaylorSeries r(n);
  if (n == 0) return r;
  r[0] = std::exp(s[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * s[j] * r[k - j];
    r[k] = acc / static_cast<double>(k);
  }
  return r;
}

TaylorSeries log(const TaylorSeries& s) {
  const std::size_t n = s.order();
  TaylorSeries r(n);
  if (n == 0) return r;
  if (s[0] == Complex{}) throw std::domain_error("taylor log of series vanishing at z0");
  r[0] = std::log(s[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc = s[k];
    for (std::size_t j = 1; j < k; ++j) {
      acc -= static_cast<double>(j) / static_cast<double>(k) * r[j] * s[k - j];
    }
    r[k] = acc / s[0];
  }
  return r;
}

TaylorSeries pow(const TaylorSeries& s, double q) {
  if (s.order() > 0 && s[0] == Complex{}) {
    throw std::domain_error("taylor power of series vanishing at z0");
  }
  TaylorSeries r = exp(log(s) * Complex(q, 0.0));
  // Keep the constant term identical to std::pow so values and jets agree.
  if (r.order() > 0) r[0] = std::pow(s[0], q);
  return r;
}

TaylorSeries pow(const TaylorSeries& s, int n) {
  if (n < 0) return TaylorSeries::constant(1.0, s.order()) / pow(s, -n);
  TaylorSeries result = TaylorSeries::constant(1.0, s.order());
  TaylorSeries base = s;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace blaschke_lab
