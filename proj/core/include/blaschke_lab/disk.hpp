#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace blaschke_lab {

using Complex = std::complex<double>;

/// Points closer than this to the unit circle are rejected: 1 - conj(w) z
/// carries no correct digits beyond it in double precision.
inline constexpr double kBoundaryFloor = 1e-14;

/// Raised when a computation would break a documented structural invariant
/// (repeated points where simple ones are required, a failed construction).
/// The CLI maps it to exit code 3.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of the open unit disk.
class DiskPoint {
 public:
  DiskPoint() = default;
  /// Throws std::invalid_argument unless |z| < 1 - kBoundaryFloor.
  explicit DiskPoint(Complex z);
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  Complex value() const { return z_; }
  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  double modulus() const { return std::abs(z_); }
  /// 1 - |z|^2
  double defect() const { return 1.0 - std::norm(z_); }

  friend bool operator==(const DiskPoint& a, const DiskPoint& b) { return a.z_ == b.z_; }

 private:
  Complex z_{0.0, 0.0};
};

/// Finite sequence of distinct disk points, each carrying a multiplicity.
/// Repetition is expressed only through the multiplicity column.
class FiniteSequence {
 public:
  FiniteSequence() = default;
  /// Throws std::invalid_argument on size mismatch, a non-positive
  /// multiplicity, or two entries that compare equal.
  FiniteSequence(std::vector<DiskPoint> points, std::vector<int> multiplicities);
  explicit FiniteSequence(std::vector<DiskPoint> points);

  static FiniteSequence from_complex(std::span<const Complex> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const DiskPoint& point(std::size_t i) const { return points_.at(i); }
  int multiplicity(std::size_t i) const { return mult_.at(i); }
  const std::vector<DiskPoint>& points() const { return points_; }
  const std::vector<int>& multiplicities() const { return mult_; }

  /// Point count with multiplicity.
  long total_count() const;
  bool all_simple() const;

  FiniteSequence subsequence(std::span<const std::size_t> indices) const;
  /// Entries of `other` that equal an existing entry add to its multiplicity.
  FiniteSequence merged_with(const FiniteSequence& other) const;

  friend bool operator==(const FiniteSequence&, const FiniteSequence&) = default;

 private:
  std::vector<DiskPoint> points_;
  std::vector<int> mult_;
};

/// The disk automorphism phi_c(z) = (c - z) / (1 - conj(c) z), an involution
/// exchanging c and 0.
class MoebiusMap {
 public:
  explicit MoebiusMap(DiskPoint center) : c_(center.value()) {}

  DiskPoint center() const { return DiskPoint(c_); }

  /// Defined on the closed disk (and beyond, away from 1/conj(c)).
  Complex operator()(Complex z) const;
  DiskPoint apply(DiskPoint z) const { return DiskPoint((*this)(z.value())); }

  /// phi_c'(w) = -(1 - |c|^2) / (1 - conj(c) w)^2
  Complex derivative(Complex w) const;

  /// |phi_c'(w)|^2 = (1 - |c|^2)^2 / |1 - conj(c) w|^4, the kernel K(c, w).
  double jacobian(Complex w) const;
  double jacobian(DiskPoint w) const { return jacobian(w.value()); }

 private:
  Complex c_;
};

/// 1 - conj(w) z, computed so that swapping z and w conjugates the result
/// exactly.
Complex one_minus_conj_product(Complex w, Complex z);

/// Pseudohyperbolic distance |(z - w) / (1 - conj(w) z)|.
double psh_distance(Complex z, Complex w);
inline double psh_distance(DiskPoint z, DiskPoint w) { return psh_distance(z.value(), w.value()); }

/// 1 - psh_distance(z, w)^2 via (1-|z|^2)(1-|w|^2)/|1 - conj(w) z|^2, which
/// keeps full relative accuracy when the distance is close to 1.
double psh_complement(Complex z, Complex w);

/// Largest pairwise pseudohyperbolic distance; 0 for a single point.
/// Throws std::invalid_argument("empty set") on an empty sequence.
double psh_diameter(const FiniteSequence& s);

/// Euclidean circle in the plane.
struct EuclideanCircle {
  Complex center;
  double radius = 0.0;
};

/// The pseudohyperbolic disk D(z, r) is a Euclidean disk; returns its circle.
EuclideanCircle psh_disk_circle(DiskPoint z, double r);

/// Smallest Euclidean distance from D(z, r) to the unit circle,
/// (1 - |z|)(1 - r) / (1 + r|z|).
double psh_disk_boundary_gap(DiskPoint z, double r);

}  // namespace blaschke_lab
