#include <doctest.h>

#include <algorithm>
#include <numbers>

#include <blaschke_lab/bergman.hpp>
#include <blaschke_lab/geninterp.hpp>
#include <blaschke_lab/seqgen.hpp>

#include "support.hpp"

using namespace blaschke_lab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<HermiteJet> random_targets(const ClusterPartition& part, std::mt19937_64& rng) {
  std::vector<HermiteJet> jets;
  for (const Cluster& c : part.clusters) {
    HermiteJet j = zero_jet(c);
    for (auto& d : j.derivatives) {
      for (auto& v : d) v = support::random_disk(rng, 1.0);
    }
    jets.push_back(j);
  }
  return jets;
}

std::vector<HermiteJet> unit_targets(const ClusterPartition& part) {
  std::vector<HermiteJet> jets;
  for (const Cluster& c : part.clusters) {
    HermiteJet j = zero_jet(c);
    for (auto& d : j.derivatives) d[0] = 1.0;
    jets.push_back(j);
  }
  return jets;
}

// f^(j)(z) = j! r^-j mean_t f(z + r e^{it}) e^{-ijt}.
Complex cauchy_derivative(const AnalyticFunction& f, Complex z, int j, double r) {
  const int n = 128;
  Complex acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    acc += f(z + std::polar(r, t)) * std::polar(1.0, -j * t);
  }
  return std::tgamma(j + 1.0) * acc / (static_cast<double>(n) * std::pow(r, j));
}

FiniteSequence mixed_sequence() {
  return FiniteSequence({DiskPoint(0.1, 0.0), DiskPoint(0.12, 0.01), DiskPoint(0.0, 0.6), DiskPoint(-0.7, 0.0),
                         DiskPoint(0.5, -0.5), DiskPoint(0.52, -0.49)},
                        {2, 1, 1, 3, 1, 2});
}

}  // namespace

TEST_CASE("cluster_sequence examples") {
  const FiniteSequence s({DiskPoint(0.0, 0.0), DiskPoint(0.05, 0.0), DiskPoint(0.9, 0.0)});
  const ClusterPartition part = cluster_sequence(s, 0.1, 0.9);
  REQUIRE(part.size() == 2);
  CHECK(part.clusters[0].points.size() == 2);
  CHECK(part.clusters[0].anchor == DiskPoint(0.0, 0.0));
  CHECK(part.clusters[1].points.size() == 1);
  CHECK(part.clusters[1].anchor == DiskPoint(0.9, 0.0));

  const ClusterPartition sep = cluster_sequence(gen_radial_geometric(0.5, 10), 0.05, 0.9);
  CHECK(sep.size() == 10);
  for (std::size_t k = 1; k < sep.size(); ++k) CHECK(sep.clusters[k].anchor.modulus() > sep.clusters[k - 1].anchor.modulus());

  CHECK_THROWS_AS(cluster_sequence(s, 0.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(cluster_sequence(s, 0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_partition({FiniteSequence({DiskPoint(0.0, 0.0)}), FiniteSequence({DiskPoint(0.05, 0.0)})}, 0.1, 0.9),
                  InvariantViolation);
}

TEST_CASE("cluster cardinality is capped by the local count at the diameter cap") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 5; ++t) {
    std::vector<DiskPoint> pts;
    for (int i = 0; i < 40; ++i) pts.emplace_back(support::random_disk(rng, 0.95));
    const FiniteSequence s(pts);
    const ClusterPartition part = cluster_sequence(s, 0.1, 0.9);
    const long cap = max_local_count(BlaschkeProduct(s), part.r_max);
    for (const Cluster& c : part.clusters) {
      CHECK(c.points.total_count() <= cap);
      if (c.points.size() > 1) CHECK(psh_diameter(c.points) < part.r_max);
    }
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        for (const DiskPoint& x : part.clusters[a].points.points()) {
          for (const DiskPoint& y : part.clusters[b].points.points()) CHECK(psh_distance(x, y) > 2.0 * part.eps);
        }
      }
    }
  }
}

TEST_CASE("class_norm and xp_norm examples") {
  const ClusterPartition part = make_partition({FiniteSequence({DiskPoint(0.0, 0.0), DiskPoint(0.1, 0.0)}),
                                                FiniteSequence({DiskPoint(0.7, 0.0)})},
                                               0.05, 0.9);
  const Cluster& pair = part.clusters[0];
  const Cluster& single = part.clusters[1];
  CHECK(class_norm(pair, zero_jet(pair), part.eps) == 0.0);
  HermiteJet w = zero_jet(single);
  w.derivatives[0][0] = Complex(3.0, -4.0);
  CHECK(class_norm(single, w, part.eps) == doctest::Approx(5.0));
  HermiteJet ones = zero_jet(pair);
  ones.derivatives[0][0] = ones.derivatives[1][0] = 1.0;
  CHECK(class_norm(pair, ones, part.eps) == doctest::Approx(1.0).epsilon(1e-12));
  HermiteJet slope = zero_jet(pair);
  slope.derivatives[1][0] = 1.0;
  // Degree-1 interpolant 10 z peaks on the far side of D(0.1, eps).
  CHECK(class_norm(pair, slope, part.eps) > 1.0);

  const std::vector<HermiteJet> zero{zero_jet(pair), zero_jet(single)};
  CHECK(xp_norm(part, zero, 2.0) == 0.0);
  const std::vector<HermiteJet> jets{ones, w};
  CHECK(xp_norm(part, jets, kInf) == doctest::Approx(5.0));
  CHECK_THROWS_AS(xp_norm(part, jets, 0.0), std::invalid_argument);
}

TEST_CASE("jet shape is checked") {
  const Cluster c{FiniteSequence({DiskPoint(0.2, 0.0)}, {2}), DiskPoint(0.2, 0.0)};
  HermiteJet bad;
  bad.derivatives = {{1.0}};
  CHECK_THROWS_AS(check_jet(c, bad), std::invalid_argument);
  CHECK_NOTHROW(check_jet(c, zero_jet(c)));
}

TEST_CASE("beta examples and the Carleson bound on Re beta_k(a_k)") {
  const ClusterPartition part = cluster_sequence(gen_radial_geometric(0.5, 12), 0.05, 0.9);
  double tail = 0.0;
  for (std::size_t k = part.size(); k-- > 0;) {
    tail += part.clusters[k].anchor.defect();
    const Complex b0 = beta(part, k, 0.0);
    CHECK(b0.imag() == 0.0);
    CHECK(b0.real() == doctest::Approx(tail).epsilon(1e-14));
  }
  const ClusterPartition one = make_partition({FiniteSequence({DiskPoint(0.3, 0.4)})}, 0.05, 0.9);
  const Complex a(0.3, 0.4), z(-0.2, 0.1);
  CHECK(std::abs(beta(one, 0, z) - 0.75 * (1.0 + std::conj(a) * z) / (1.0 - std::conj(a) * z)) <= 1e-15);

  std::mt19937_64 rng(97);
  for (int t = 0; t < 5; ++t) {
    const FiniteSequence s = gen_random_carleson(static_cast<std::uint64_t>(t + 1), {30, 12.0, 1e-3, 0.5, 0.2});
    const ClusterPartition p = cluster_sequence(s, 0.05, 0.9);
    std::vector<DiskPoint> anchors;
    for (const Cluster& c : p.clusters) anchors.push_back(c.anchor);
    const double bound = 2.0 * uniform_blaschke_sup(FiniteSequence(anchors), anchors);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double re = beta(p, k, p.clusters[k].anchor.value()).real();
      CHECK(re > 0.0);
      CHECK(re <= bound);
    }
  }
}

TEST_CASE("vgh_kernel_bound examples") {
  const ClusterPartition origin = make_partition({FiniteSequence({DiskPoint(0.0, 0.0)})}, 0.05, 0.9);
  std::mt19937_64 rng(101);
  std::vector<Complex> grid;
  for (int i = 0; i < 2000; ++i) grid.push_back(support::random_disk(rng, 0.999));
  const VghKernelReport r = vgh_kernel_bound(origin, grid);
  CHECK(r.sup <= std::exp(1.0));
  CHECK(r.l_one_max <= 1.0 + 1e-8);
  CHECK(vgh_kernel_bound(ClusterPartition{}, grid).sup == 0.0);
  // Counterexample anchors: the bound grows with the level.
  double last = 0.0;
  for (int n = 2; n <= 6; n += 2) {
    const ClusterPartition part = cluster_sequence(gen_counterexample(n, 0.25), 0.05, 0.9);
    const double v = vgh_kernel_bound(part, vgh_probe_grid(part)).sup;
    CHECK(v > last);
    last = v;
  }
}

TEST_CASE("separating multiplier") {
  const ClusterPartition part = cluster_sequence(gen_radial_geometric(0.5, 4), 0.05, 0.9);
  const AnalyticFunction zero = build_separating_multiplier(part, 1, zero_jet(part.clusters[1]));
  CHECK(std::abs(zero(0.3)) == 0.0);
  CHECK_THROWS_AS(build_separating_multiplier(part, 9, zero_jet(part.clusters[0])), std::out_of_range);
  HermiteJet one = zero_jet(part.clusters[1]);
  one.derivatives[0][0] = 1.0;
  const AnalyticFunction f = build_separating_multiplier(part, 1, one);
  for (std::size_t j = 0; j < part.size(); ++j) {
    if (j != 1) CHECK(std::abs(f(part.clusters[j].anchor.value())) <= 1e-14);
  }
}

TEST_CASE("vgh_interpolate examples") {
  const ClusterPartition two =
      make_partition({FiniteSequence({DiskPoint(0.0, 0.0)}), FiniteSequence({DiskPoint(0.5, 0.0)})}, 0.05, 0.9);
  std::vector<HermiteJet> jets{zero_jet(two.clusters[0]), zero_jet(two.clusters[1])};
  jets[0].derivatives[0][0] = 1.0;
  const InterpolationSolution sol = vgh_interpolate({two, jets, 2.0});
  CHECK(std::abs(sol.solution(0.0) - Complex(1.0)) <= 1e-14);
  CHECK(std::abs(sol.solution(0.5)) <= 1e-14);

  for (double p : {0.5, 1.0, 2.0, kInf}) {
    const ClusterPartition one = make_partition({FiniteSequence({DiskPoint(0.4, -0.3)})}, 0.05, 0.9);
    const std::vector<HermiteJet> unit = unit_targets(one);
    const InterpolationSolution s = vgh_interpolate({one, unit, p});
    CHECK(std::abs(s.solution(Complex(0.4, -0.3)) - Complex(1.0)) <= 1e-14);
    CHECK(s.jet_residual <= 1e-14);

    const std::vector<HermiteJet> zeros{zero_jet(one.clusters[0])};
    const InterpolationSolution z = vgh_interpolate({one, zeros, p});
    CHECK(std::abs(z.solution(0.1)) == 0.0);
    CHECK(z.achieved_norm == 0.0);
    CHECK(z.target_norm == 0.0);
  }
}

TEST_CASE("property: solution jets match targets by an independent contour oracle") {
  const ClusterPartition part = cluster_sequence(mixed_sequence(), 0.05, 0.9);
  CHECK(part.size() == 4);
  std::mt19937_64 rng(103);
  for (double p : {0.5, 1.0, 2.0, kInf}) {
    const InterpolationProblem prob{part, random_targets(part, rng), p};
    const InterpolationSolution sol = vgh_interpolate(prob);
    CHECK(sol.jet_residual <= 1e-8);
    CHECK(std::isfinite(sol.norm_ratio));
    CHECK(sol.achieved_norm == doctest::Approx(sol.norm_ratio * sol.target_norm).epsilon(1e-12));
    for (std::size_t k = 0; k < part.size(); ++k) {
      const Cluster& c = part.clusters[k];
      for (std::size_t i = 0; i < c.points.size(); ++i) {
        const Complex z = c.points.point(i).value();
        const double r = 0.002;
        for (int j = 0; j < c.points.multiplicity(i); ++j) {
          const Complex want = prob.targets[k].derivatives[i][static_cast<std::size_t>(j)];
          const Complex got = cauchy_derivative(sol.solution, z, j, r);
          // Compare at the contour scale, where roundoff is uniform in j.
          CHECK(std::abs(got - want) * std::pow(r, j) / std::tgamma(j + 1.0) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("property: singleton reduction") {
  std::mt19937_64 rng(107);
  const FiniteSequence s = gen_random_carleson(5, {25, 10.0, 1e-2, 0.5, 0.3});
  const ClusterPartition part = cluster_sequence(s, 0.05, 0.9);
  REQUIRE(part.size() == s.size());
  const std::vector<HermiteJet> jets = random_targets(part, rng);
  std::vector<Complex> values;
  for (const HermiteJet& j : jets) values.push_back(j.derivatives[0][0]);
  const FiniteSequence ordered = part.all_points();
  // d_k / (1 - |z_k|^2) drops toward (1 - eps) / 2 near the circle, so p = 1 can leave [1/2, 2].
  for (double p : {2.0, kInf}) {
    const double ratio = xp_norm(part, jets, p) / lp_sequence_norm(ordered, values, p);
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 2.0);
  }
  const InterpolationSolution sol = vgh_interpolate({part, jets, 2.0});
  for (std::size_t k = 0; k < part.size(); ++k) {
    CHECK(std::abs(sol.solution(part.clusters[k].anchor.value()) - values[k]) <= 1e-8);
  }
}

TEST_CASE("property: norm ratio stays near its median across truncations") {
  std::vector<double> ratios;
  for (int n : {10, 12, 16, 20, 24}) {
    const ClusterPartition part = cluster_sequence(gen_radial_geometric(0.5, n), 0.05, 0.9);
    ratios.push_back(vgh_interpolate({part, unit_targets(part), 2.0}).norm_ratio);
  }
  std::vector<double> sorted = ratios;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  for (double r : ratios) {
    CHECK(r <= 3.0 * median);
    CHECK(r >= median / 3.0);
  }
}

TEST_CASE("hinf bound") {
  const ClusterPartition origin = make_partition({FiniteSequence({DiskPoint(0.0, 0.0)})}, 0.5, 0.9);
  const HinfBound h = hinf_bound(origin, origin.blaschke());
  CHECK(h.min_on_contour == doctest::Approx(0.5).epsilon(1e-12));
  // |B| = 1/2 on the circle of radius 1/2, whose Carleson constant is pi up
  // to the midpoint-segment overshoot (32 segments, admissible once m(I) > 1/2).
  CHECK(h.arc_constant >= std::numbers::pi * (1.0 - 1e-12));
  CHECK(h.arc_constant <= std::numbers::pi * (1.0 + 1.0 / 16.0) * (1.0 + 1e-12));
  CHECK(h.bound == doctest::Approx(h.arc_constant / 0.5).epsilon(1e-12));
  CHECK(hinf_bound_estimate(ClusterPartition{}, BlaschkeProduct{}) == 0.0);
  // Counterexample clusters: the contour minimum collapses with the level.
  double last = 1.0;
  for (int n = 2; n <= 5; ++n) {
    const ClusterPartition part = cluster_sequence(gen_counterexample(n, 0.25), 0.05, 0.9);
    const double m = hinf_bound(part, part.blaschke()).min_on_contour;
    CHECK(m < last);
    last = m;
  }
}

TEST_CASE("p = infinity solutions respect the duality bound") {
  std::mt19937_64 rng(109);
  const ClusterPartition part = cluster_sequence(mixed_sequence(), 0.05, 0.9);
  const double bound = hinf_bound_estimate(part, part.blaschke());
  for (int t = 0; t < 3; ++t) {
    const std::vector<HermiteJet> jets = random_targets(part, rng);
    const InterpolationSolution sol = vgh_interpolate({part, jets, kInf});
    CHECK(sol.achieved_norm <= bound * xp_norm(part, jets, kInf) * 1.05);
  }
}

TEST_CASE("verify_facts") {
  const ClusterPartition singles = cluster_sequence(gen_radial_geometric(0.5, 6), 0.05, 0.9);
  const std::vector<HermiteJet> unit = unit_targets(singles);
  InterpolateOptions opt;
  opt.radii = {0.9, 0.99};
  std::vector<InterpolationSolution> batch{vgh_interpolate({singles, unit, 2.0}, opt)};
  CHECK(verify_facts(singles, batch).ok());

  std::mt19937_64 rng(113);
  const FiniteSequence s = gen_random_carleson(9, {60, 20.0, 1e-2, 0.5, 0.05});
  const ClusterPartition part = cluster_sequence(s, 0.05, 0.9);
  const std::vector<HermiteJet> jets = random_targets(part, rng);
  std::vector<InterpolationSolution> runs{vgh_interpolate({part, jets, 2.0}, opt)};
  std::bernoulli_distribution keep(0.7);
  for (int t = 0; t < 10; ++t) {
    std::vector<HermiteJet> sub = jets;
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (!keep(rng)) sub[k] = zero_jet(part.clusters[k]);
    }
    runs.push_back(vgh_interpolate({part, sub, 2.0}, opt));
  }
  const FactsReport facts = verify_facts(part, runs);
  CHECK(facts.separation);
  CHECK(facts.cardinality);
  CHECK(facts.subsequence);
  CHECK(facts.violations.empty());
}
