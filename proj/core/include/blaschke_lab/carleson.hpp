#pragma once

#include <span>
#include <vector>

#include "blaschke_lab/analytic.hpp"
#include "blaschke_lab/disk.hpp"

namespace blaschke_lab {

/// S_I = { z : z/|z| in I, 1 - |z| < m(I) } for the arc I of normalized
/// length arc_length (total circle = 1) centered at angle arc_center.
struct CarlesonSquare {
  double arc_center = 0.0;
  double arc_length = 1.0;

  bool contains(Complex z) const;
};

enum class CarlesonMethod {
  /// Dyadic arcs (optionally rotated); within a factor of the true norm.
  dyadic,
  /// Windows anchored at atom angles and depths; the exact supremum.
  point_anchored,
};

struct CarlesonNormReport {
  double norm = 0.0;
  CarlesonSquare maximizing_square;
  CarlesonMethod method = CarlesonMethod::point_anchored;
};

struct Atom {
  Complex z;
  double weight = 0.0;
};

/// Finite positive atomic measure on the disk.
struct DiscreteMeasure {
  std::vector<Atom> atoms;

  double total_mass() const;
  double mass(const CarlesonSquare& s) const;
};

/// mu_Z = sum m_j (1 - |z_j|^2) delta_{z_j}.
DiscreteMeasure mu_z_measure(const FiniteSequence& s);

/// sup over Carleson squares of mu(S_I) / m(I).
///
/// point_anchored: every candidate square either has its depth m(I) at an
/// atom depth or has an arc spanning two atoms exactly, so sweeping those
/// candidates gives the supremum (approached from arcs slightly longer than
/// the candidate). O(n^2 log n).
/// dyadic: arcs [k 2^-l, (k+1) 2^-l) shifted by dyadic_offset radians, for
/// levels down to half the smallest atom depth.
CarlesonNormReport carleson_norm(const DiscreteMeasure& mu,
                                 CarlesonMethod method = CarlesonMethod::point_anchored,
                                 double dyadic_offset = 0.0);
CarlesonNormReport carleson_norm(const FiniteSequence& s,
                                 CarlesonMethod method = CarlesonMethod::point_anchored,
                                 double dyadic_offset = 0.0);

/// max over probe centers c of sum_j m_j (1 - |phi_c(z_j)|^2).
double uniform_blaschke_sup(const FiniteSequence& s, std::span<const DiskPoint> probe_centers);

/// (sum |w_k|^p (1 - |z_k|^2))^{1/p}, or max |w_k| for p = infinity.
double lp_sequence_norm(const FiniteSequence& s, std::span<const Complex> values, double p);

/// Arc of the circle |z - center| = radius between two angles
/// (counterclockwise from theta_begin to theta_end).
struct CircularArc {
  Complex center;
  double radius = 0.0;
  double theta_begin = 0.0;
  double theta_end = 0.0;

  double length() const { return radius * (theta_end - theta_begin); }
};

/// Carleson norm of Euclidean arc-length measure on the union of arcs.
/// Each arc is cut into segments (at least `segments_per_turn` per full
/// turn, at least 4 per arc) carrying their arc length at the midpoint.
double arc_carleson_constant(std::span<const CircularArc> arcs, int segments_per_turn = 32);

struct NormedFunction {
  AnalyticFunction f;
  /// ||f||_{H^p}
  double hp_norm = 1.0;
};

/// max over the family of (sum_j m_j (1 - |z_j|^2) |f(z_j)|^p) / ||f||^p.
double carleson_embedding_probe(const FiniteSequence& s, double p, std::span<const NormedFunction> family);

}  // namespace blaschke_lab
