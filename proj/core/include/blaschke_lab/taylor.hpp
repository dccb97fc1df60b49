#pragma once

#include <cstddef>
#include <vector>

#include "blaschke_lab/disk.hpp"

namespace blaschke_lab {

/// Truncated Taylor expansion sum_k c_k (z - z0)^k, k < order. Arithmetic is
/// exact up to rounding in the retained coefficients, which is how jets
/// (value, f', f'', ...) of composite analytic functions are obtained
/// without numerical differentiation.
class TaylorSeries {
 public:
  TaylorSeries() = default;
  explicit TaylorSeries(std::size_t order) : c_(order, Complex{}) {}
  explicit TaylorSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

  static TaylorSeries constant(Complex value, std::size_t order);
  /// The identity map z expanded about z0.
  static TaylorSeries variable(Complex z0, std::size_t order);

  std::size_t order() const { return c_.size(); }
  Complex operator[](std::size_t k) const { return c_[k]; }
  Complex& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Complex>& coefficients() const { return c_; }

  /// k-th derivative at z0, k! c_k.
  Complex derivative(std::size_t k) const;

  TaylorSeries& operator+=(const TaylorSeries& o);
  TaylorSeries& operator-=(const TaylorSeries& o);
  TaylorSeries& operator*=(Complex s);

  friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
  friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
  friend TaylorSeries operator*(TaylorSeries a, Complex s) { return a *= s; }
  friend TaylorSeries operator*(Complex s, TaylorSeries a) { return a *= s; }
  friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);
  /// Requires b[0] != 0.
  friend TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b);

 private:
  std::vector<Complex> c_;
};

TaylorSeries exp(const TaylorSeries& s);
/// Principal branch at the constant term.
TaylorSeries log(const TaylorSeries& s);
/// Principal power exp(q log s).
TaylorSeries pow(const TaylorSeries& s, double q);
TaylorSeries pow(const TaylorSeries& s, int n);

}  // namespace blaschke_lab
