#pragma once

#include <vector>

#include "blaschke_lab/disk.hpp"
#include "blaschke_lab/taylor.hpp"

namespace blaschke_lab {

/// Interpolation data at one node: Taylor coefficients c_0, c_1, ... of the
/// target about `at` (c_j = f^(j)(at) / j!). The length is the multiplicity.
struct TaylorData {
  Complex at;
  std::vector<Complex> coeffs;
};

/// Newton-form Hermite interpolant
///   c_0 + c_1 e_0(z) + c_2 e_0(z) e_1(z) + ...
/// where the node list repeats each point by its multiplicity and e_l is
/// either z - x_l (polynomial basis) or (z - x_l)/(1 - conj(x_l) z)
/// (Moebius basis, |e_l| <= 1 on the disk so |value| <= sum |c_i| there).
/// Coefficients come from forward substitution, which for the polynomial
/// basis reproduces the confluent divided differences.
class NewtonInterpolant {
 public:
  enum class Basis { polynomial, moebius };

  NewtonInterpolant() = default;
  /// Throws std::invalid_argument on repeated nodes across entries or empty
  /// coefficient lists.
  NewtonInterpolant(const std::vector<TaylorData>& data, Basis basis);

  Complex operator()(Complex z) const;
  TaylorSeries taylor(Complex z0, std::size_t order) const;

  const std::vector<Complex>& coefficients() const { return coeff_; }
  const std::vector<Complex>& nodes() const { return nodes_; }
  Basis basis() const { return basis_; }
  /// sum |c_i|
  double coefficient_l1() const;
  std::size_t degree_bound() const { return coeff_.size(); }

 private:
  TaylorSeries basis_factor(std::size_t l, Complex z0, std::size_t order) const;

  Basis basis_ = Basis::polynomial;
  std::vector<Complex> nodes_;
  std::vector<Complex> coeff_;
};

/// Minimal-degree polynomial matching the data.
inline NewtonInterpolant hermite_polynomial(const std::vector<TaylorData>& data) {
  return NewtonInterpolant(data, NewtonInterpolant::Basis::polynomial);
}

}  // namespace blaschke_lab
