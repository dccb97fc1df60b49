#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "blaschke_lab/analytic.hpp"
#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/carleson.hpp"
#include "blaschke_lab/disk.hpp"
#include "blaschke_lab/hermite.hpp"

namespace blaschke_lab {

/// Enumeration of clusters, which fixes the tail sums in beta.
enum class AnchorOrder {
  increasing_modulus,
  as_listed,
};

struct Cluster {
  FiniteSequence points;
  DiskPoint anchor;
};

/// Clusters Z_k with their eps-neighborhoods G_k (unions of pseudohyperbolic
/// disks D(z, eps)), boundary distances d_k and the diameter cap.
struct ClusterPartition {
  std::vector<Cluster> clusters;
  double eps = 0.0;
  std::vector<double> d;
  double r_max = 0.0;
  AnchorOrder order = AnchorOrder::increasing_modulus;

  std::size_t size() const { return clusters.size(); }
  FiniteSequence all_points() const;
  BlaschkeProduct blaschke() const;
};

struct ClusterOptions {
  double eps_floor = 1e-6;
  AnchorOrder order = AnchorOrder::increasing_modulus;
};

/// Connected components of the graph joining points at pseudohyperbolic
/// distance <= 2 eps. Components must have diameter below r_max; otherwise
/// eps is halved and the grouping redone. Anchors are the smallest-modulus
/// member of each component.
/// Throws InvariantViolation("no admissible partition at eps floor") and
/// std::invalid_argument for eps <= 0 or r_max outside (0, 1).
ClusterPartition cluster_sequence(const FiniteSequence& s, double eps, double r_max, ClusterOptions opt = {});

/// Partition from explicit groups (anchors chosen and ordered as above).
/// Throws InvariantViolation when two groups come within 2 eps or a group
/// reaches diameter r_max.
ClusterPartition make_partition(std::vector<FiniteSequence> groups, double eps, double r_max,
                                AnchorOrder order = AnchorOrder::increasing_modulus);

/// Target jet on one cluster: for each cluster point (in cluster order) the
/// raw derivatives f(z), f'(z), ..., one per unit of multiplicity.
struct HermiteJet {
  std::vector<std::vector<Complex>> derivatives;
};

HermiteJet zero_jet(const Cluster& c);
/// Throws std::invalid_argument when the jet shape does not match.
void check_jet(const Cluster& c, const HermiteJet& jet);
/// Taylor coefficients f^(j)/j! per cluster point.
std::vector<TaylorData> taylor_data(const Cluster& c, const HermiteJet& jet);

/// Boundary of the union of D(z, eps) over the points: samples on each
/// constituent circle (per_circle each) that lie outside every other disk.
std::vector<Complex> neighborhood_boundary_samples(const FiniteSequence& points, double eps, int per_circle = 256);
/// The same boundary as a list of arcs (maximal runs of kept samples).
std::vector<CircularArc> neighborhood_boundary_arcs(const FiniteSequence& points, double eps, int per_circle = 256);

/// sup of the minimal-degree Hermite polynomial of the jet over sampled
/// points of G_k (boundary samples and the cluster points).
double class_norm(const Cluster& c, const HermiteJet& jet, double eps);

/// (sum class_norm_k^p d_k)^{1/p}, or max_k class_norm_k for p = inf.
/// Throws std::invalid_argument for p <= 0 or a size mismatch.
double xp_norm(const ClusterPartition& part, std::span<const HermiteJet> jets, double p);

/// sum_{j >= k} (1 - |a_j|^2) (1 + conj(a_j) z) / (1 - conj(a_j) z).
Complex beta(const ClusterPartition& part, std::size_t k, Complex z);

struct VghKernelReport {
  /// max over the grid of sum_k |(1-|a_k|^2)/(1-conj(a_k) z)|^2 e^{Re(beta_k(a_k) - beta_k(z))}
  double sup = 0.0;
  /// max over anchors and test radii of the angular mean of the Poisson-type
  /// kernel (1 - |a_k|^2) / |1 - conj(a_k) r e^{it}|^2; at most 1.
  double l_one_max = 0.0;
};

VghKernelReport vgh_kernel_bound(const ClusterPartition& part, std::span<const Complex> grid);
/// Origin, cluster points and 16 points on D(a_k, 1/2) around each anchor.
std::vector<Complex> vgh_probe_grid(const ClusterPartition& part);

/// (q, s) in the summand ((1-|a|^2)/(1-conj(a) z))^q e^{(beta_k(a_k) - beta_k(z))/s}.
struct KernelExponents {
  double q = 2.0;
  double s = 1.0;
};
KernelExponents kernel_exponents(double p);

/// F_k = P_k B^(k): B^(k) vanishes on every other cluster to full
/// multiplicity and P_k is chosen so that F_k times the k-th kernel factor
/// matches the target on Z_k. P_k uses the Moebius-Newton basis, which keeps
/// it bounded by the sum of its coefficients on the disk.
/// Throws std::out_of_range for a bad index.
AnalyticFunction build_separating_multiplier(const ClusterPartition& part, std::size_t k, const HermiteJet& target,
                                             double p = 2.0);

struct InterpolationProblem {
  ClusterPartition partition;
  std::vector<HermiteJet> targets;
  double p = 2.0;
};

struct InterpolationSolution {
  AnalyticFunction solution = AnalyticFunction::constant(0.0);
  double achieved_norm = 0.0;
  double target_norm = 0.0;
  /// max |got - want| / max(max |want|, 1e-2) over derivative data scaled
  /// to f^(j) d_k^j / j!.
  double jet_residual = 0.0;
  /// achieved_norm / target_norm (0 when the target is zero).
  double norm_ratio = 0.0;
};

struct InterpolateOptions {
  /// Radii for the H^p norm; empty picks hardy_radii_for_depth of the
  /// deepest cluster point.
  std::vector<double> radii;
  double residual_limit = 1e-6;
};

/// VGH sum f = sum_k F_k ((1-|a_k|^2)/(1-conj(a_k) z))^q e^{(beta_k(a_k) - beta_k(z))/s}.
/// Throws InvariantViolation("construction failed: ...") when the jet
/// residual exceeds options.residual_limit.
InterpolationSolution vgh_interpolate(const InterpolationProblem& problem, const InterpolateOptions& options = {});

/// Jets of f at the cluster points computed with truncated Taylor
/// arithmetic, in the HermiteJet layout (raw derivatives).
std::vector<HermiteJet> solution_jets(const InterpolationProblem& problem);

struct HinfBound {
  double bound = 0.0;
  double arc_constant = 0.0;
  double min_on_contour = 0.0;
};

/// C_arc / delta_Gamma over the neighborhood boundaries. Zero for an empty
/// partition. Throws InvariantViolation("contour touches zero set") when
/// delta_Gamma < 1e-12.
HinfBound hinf_bound(const ClusterPartition& part, const BlaschkeProduct& b);
inline double hinf_bound_estimate(const ClusterPartition& part, const BlaschkeProduct& b) {
  return hinf_bound(part, b).bound;
}

struct FactsReport {
  bool separation = true;
  bool subsequence = true;
  bool cardinality = true;
  double min_cluster_distance = 1.0;
  double full_ratio = 0.0;
  double max_subset_ratio = 0.0;
  long max_cluster_size = 0;
  long cardinality_cap = 0;
  std::vector<std::string> violations;

  bool ok() const { return separation && subsequence && cardinality; }
};

/// batch[0] is the solution with all targets; later entries are solutions
/// with targets restricted to subsets of clusters.
FactsReport verify_facts(const ClusterPartition& part, std::span<const InterpolationSolution> batch,
                         double tolerance = 1.5);

}  // namespace blaschke_lab
