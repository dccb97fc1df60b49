#include "blaschke_lab/disk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace blaschke_lab {

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("disk point is not finite");
  }
  if (!(std::abs(z) < 1.0 - kBoundaryFloor)) {
    throw std::invalid_argument("disk point outside |z| < 1 - 1e-14: |z| = " +
                                std::to_string(std::abs(z)));
  }
}

namespace {

bool lex_less(const DiskPoint& a, const DiskPoint& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

}  // namespace

FiniteSequence::FiniteSequence(std::vector<DiskPoint> points, std::vector<int> multiplicities)
    : points_(std::move(points)), mult_(std::move(multiplicities)) {
  if (points_.size() != mult_.size()) {
    throw std::invalid_argument("points and multiplicities differ in length");
  }
  for (int m : mult_) {
    if (m <= 0) throw std::invalid_argument("multiplicity must be a positive integer");
  }
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(points_[a], points_[b]); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points_[order[i]] == points_[order[i - 1]]) {
      throw std::invalid_argument("duplicate point in sequence; use multiplicity instead");
    }
  }
}

FiniteSequence::FiniteSequence(std::vector<DiskPoint> points)
    : FiniteSequence(points, std::vector<int>(points.size(), 1)) {}

FiniteSequence FiniteSequence::from_complex(std::span<const Complex> points) {
  std::vector<DiskPoint> pts;
  pts.reserve(points.size());
  for (Complex z : points) pts.emplace_back(z);
  return FiniteSequence(std::move(pts));
}

long FiniteSequence::total_count() const {
  return std::accumulate(mult_.begin(), mult_.end(), 0L);
}

bool FiniteSequence::all_simple() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m == 1; });
}

FiniteSequence FiniteSequence::subsequence(std::span<const std::size_t> indices) const {
  std::vector<DiskPoint> pts;
  std::vector<int> mult;
  pts.reserve(indices.size());
  mult.reserve(indices.size());
  for (std::size_t i : indices) {
    pts.push_back(points_.at(i));
    mult.push_back(mult_.at(i));
  }
  return FiniteSequence(std::move(pts), std::move(mult));
}

FiniteSequence FiniteSequence::merged_with(const FiniteSequence& other) const {
  std::vector<DiskPoint> pts = points_;
  std::vector<int> mult = mult_;
  for (std::size_t j = 0; j < other.size(); ++j) {
    auto it = std::find(pts.begin(), pts.end(), other.point(j));
    if (it == pts.end()) {
      pts.push_back(other.point(j));
      mult.push_back(other.multiplicity(j));
    } else {
      mult[static_cast<std::size_t>(it - pts.begin())] += other.multiplicity(j);
    }
  }
  return FiniteSequence(std::move(pts), std::move(mult));
}

Complex one_minus_conj_product(Complex w, Complex z) {
  const double re = 1.0 - (w.real() * z.real() + w.imag() * z.imag());
  const double im = -(w.real() * z.imag() - w.imag() * z.real());
  return {re, im};
}

Complex MoebiusMap::operator()(Complex z) const {
  return (c_ - z) / one_minus_conj_product(c_, z);
}

Complex MoebiusMap::derivative(Complex w) const {
  const Complex d = one_minus_conj_product(c_, w);
  return -(1.0 - std::norm(c_)) / (d * d);
}

double MoebiusMap::jacobian(Complex w) const {
  const double a = 1.0 - std::norm(c_);
  const double d = std::norm(one_minus_conj_product(c_, w));
  return (a * a) / (d * d);
}

double psh_distance(Complex z, Complex w) {
  return std::abs(z - w) / std::abs(one_minus_conj_product(w, z));
}

double psh_complement(Complex z, Complex w) {
  return (1.0 - std::norm(z)) * (1.0 - std::norm(w)) / std::norm(one_minus_conj_product(w, z));
}

double psh_diameter(const FiniteSequence& s) {
  if (s.empty()) throw std::invalid_argument("empty set");
  double diam = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      diam = std::max(diam, psh_distance(s.point(i), s.point(j)));
    }
  }
  return diam;
}

EuclideanCircle psh_disk_circle(DiskPoint z, double r) {
  const Complex c = z.value();
  const double m2 = std::norm(c);
  const double denom = 1.0 - r * r * m2;
  return {c * ((1.0 - r * r) / denom), r * (1.0 - m2) / denom};
}

double psh_disk_boundary_gap(DiskPoint z, double r) {
  const double m = z.modulus();
  return (1.0 - m) * (1.0 - r) / (1.0 + r * m);
}

}  // namespace blaschke_lab
