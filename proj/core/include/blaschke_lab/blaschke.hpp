#pragma once

#include <cstddef>
#include <vector>

#include "blaschke_lab/disk.hpp"
#include "blaschke_lab/taylor.hpp"

namespace blaschke_lab {

/// Single normalized factor (conj(a)/|a|) (a - z) / (1 - conj(a) z); for
/// a = 0 the factor is z itself.
Complex blaschke_factor(Complex a, Complex z);

/// Finite Blaschke product z^m prod_k [(conj z_k/|z_k|) phi_{z_k}(z)]^{m_k}
/// over a finite zero sequence. The empty product is the constant 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(FiniteSequence zeros) : zeros_(std::move(zeros)) {}

  const FiniteSequence& zeros() const { return zeros_; }

  /// Valid on the closed disk.
  Complex operator()(Complex z) const;
  Complex evaluate(DiskPoint z) const { return (*this)(z.value()); }

  /// sum_k m_k log|factor_k(z)|; -infinity on the zero set. Does not
  /// underflow for long products.
  double log_abs(Complex z) const;

  /// B'(z) by the product rule over the factor list (prefix/suffix
  /// products), so it is exact at zeros: the deleted product times the
  /// factor derivative at a simple zero, exactly 0 at a multiple one.
  Complex derivative(Complex z) const;

  /// Truncated Taylor expansion of B about z0.
  TaylorSeries taylor(Complex z0, std::size_t order) const;

  /// B_j(z_j): product of the other factors at the j-th listed zero. A
  /// repeated zero keeps m_j - 1 copies of its own factor, giving 0.
  /// Throws std::out_of_range for an invalid index.
  Complex deleted_product(std::size_t j) const;

 private:
  FiniteSequence zeros_;
};

inline Complex evaluate(const BlaschkeProduct& b, DiskPoint z) { return b.evaluate(z); }
inline double log_abs_evaluate(const BlaschkeProduct& b, DiskPoint z) { return b.log_abs(z.value()); }
inline Complex deleted_product(const BlaschkeProduct& b, std::size_t j) { return b.deleted_product(j); }
inline Complex derivative(const BlaschkeProduct& b, DiskPoint z) { return b.derivative(z.value()); }

struct SeparationReport {
  /// inf_j |B_j(z_j)|
  double delta = 1.0;
  /// inf_j (1 - |z_j|^2) |B'(z_j)|
  double delta_prime = 1.0;
  /// min pairwise pseudohyperbolic distance (1 with fewer than two points,
  /// 0 when any multiplicity exceeds one)
  double discreteness = 1.0;
  std::vector<double> per_point;
};

/// Throws std::invalid_argument on an empty product.
SeparationReport separation_report(const BlaschkeProduct& b);

/// Zeros (with multiplicity) at pseudohyperbolic distance < r from center.
long local_zero_count(const BlaschkeProduct& b, DiskPoint center, double r);

/// Probe centers phi_z(w) for every listed z and every w on a square grid of
/// the given pitch inside |w| < radius. Any disk D(c, radius) holding a
/// zero z has its center in D(z, radius), which this covers.
std::vector<DiskPoint> local_probe_grid(const FiniteSequence& s, double radius, double pitch);

/// max over probe centers of local_zero_count. Centers are the zeros
/// themselves plus, when with_grid is set, local_probe_grid(zeros, r, r/4).
/// The sup over the whole disk is not finitely computable; this is a lower
/// bound on it.
long max_local_count(const BlaschkeProduct& b, double r, bool with_grid = true);

/// Greedy first-fit split into parts whose members are pairwise at
/// pseudohyperbolic distance > sep. Points are visited by increasing
/// modulus. Returns listed-entry indices per part.
/// Throws InvariantViolation("inseparable multiplicity") on repeated points.
std::vector<std::vector<std::size_t>> partition_separated_indices(const FiniteSequence& s, double sep);
std::vector<FiniteSequence> partition_separated(const FiniteSequence& s, double sep);

/// max over a polar grid of |z| <= rho of |B(phi_center(z))|. A small value
/// means B composed with phi_center nearly vanishes on that compact set.
double compose_min_on_compact(const BlaschkeProduct& b, DiskPoint center, double rho, int grid);

}  // namespace blaschke_lab
