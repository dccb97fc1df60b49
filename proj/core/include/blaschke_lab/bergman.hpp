#pragma once

#include <span>
#include <vector>

#include "blaschke_lab/analytic.hpp"
#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/quadrature.hpp"

namespace blaschke_lab {

/// 1 - 10^-k for k = 1..4.
std::vector<double> default_hardy_radii();
/// 1 - 10^-k for k = 1.. until 1 - r is below depth / 10 (at most 1e-6).
std::vector<double> hardy_radii_for_depth(double depth);

/// Circle mean M_p(f, r) = (mean of |f(r e^it)|^p)^{1/p}; sup for p = inf.
/// Trapezoidal in t with max(256, ceil(16 / (1 - r))) nodes (capped at 2^18).
double circle_mean(const AnalyticFunction& f, double p, double r);

/// max over radii of M_p(f, r). Radii must lie in [0, 1) and increase.
/// Throws std::invalid_argument for p <= 0 or bad radii.
double hp_norm(const AnalyticFunction& f, double p, std::span<const double> radii);
double hp_norm(const AnalyticFunction& f, double p);

/// (integral |f|^p (1 - |z|^2)^alpha dA)^{1/p}. When f has a focus c the
/// integral is taken after the substitution w = phi_c(u).
/// Throws std::invalid_argument for p <= 0 or alpha <= -1.
double ap_norm(const AnalyticFunction& f, double p, double alpha, const QuadratureGrid& g);

/// integral over the disk of |phi_zeta'(w)|^2 dA(w); equals pi.
double kernel_integral(DiskPoint zeta, const QuadratureGrid& g);

/// log|f(0)| + sum m_j [log(1/|z_j|) - (1 - |z_j|^2)/2]
///   - (1/pi) integral log|f| dA.
/// The logarithmic singularities at the listed zeros are subtracted before
/// quadrature and their area means added back in closed form. Zero when
/// `zeros` is the full zero set of f in the disk, negative when some zero
/// is missing. Throws std::invalid_argument("shift required") if f(0) = 0.
double jensen_area_residual(const AnalyticFunction& f, const FiniteSequence& zeros, const QuadratureGrid& g);

struct DivisionBound {
  bool holds = true;
  /// rhs - lhs
  double margin = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// |f(zeta)/B(zeta)|^{p/2} against (e^{Cp/2}/pi) integral |f|^{p/2} |phi_zeta'|^2 dA.
/// The right side is integrated as integral |f(phi_zeta(u))|^{p/2} dA(u).
DivisionBound pointwise_division_bound(const AnalyticFunction& f, const BlaschkeProduct& b, DiskPoint zeta,
                                       double p, double C, const QuadratureGrid& g);

/// max over the family of ||f/B|| / ||f|| in A^{p, alpha}.
double universal_divisor_ratio(const BlaschkeProduct& b, std::span<const AnalyticFunction> family, double p,
                               double alpha, const QuadratureGrid& g);

/// min over centers of (integral |B(phi_c(u))|^p dA(u) / pi)^{1/p}.
double mb_lower_probe(const BlaschkeProduct& b, std::span<const DiskPoint> centers, double p,
                      const QuadratureGrid& g);

/// B * 1, B * z and B * (phi_c')^{(2+alpha)/p} for each probe center.
std::vector<AnalyticFunction> divisor_test_family(const BlaschkeProduct& b, std::span<const DiskPoint> centers,
                                                  double p, double alpha);

}  // namespace blaschke_lab
