#include <doctest.h>

#include <numbers>

#include <blaschke_lab/bergman.hpp>
#include <blaschke_lab/carleson.hpp>
#include <blaschke_lab/seqgen.hpp>

#include "support.hpp"

using namespace blaschke_lab;

namespace {

FiniteSequence random_sequence(std::mt19937_64& rng, int n, double min_depth) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<DiskPoint> pts;
  for (int i = 0; i < n; ++i) {
    const double depth = std::exp(std::log(min_depth) * u(rng));
    pts.emplace_back(std::polar(1.0 - depth, 2.0 * std::numbers::pi * u(rng)));
  }
  return FiniteSequence(pts);
}

// Brute force over arcs that start just before one atom and end just past
// another, with every atom depth (and the full circle) as a length.
double brute_carleson(const FiniteSequence& s) {
  const DiscreteMeasure mu = mu_z_measure(s);
  const double turn = 2.0 * std::numbers::pi;
  std::vector<double> lengths{1.0};
  for (const Atom& a : mu.atoms) lengths.push_back(1.0 - std::abs(a.z));
  double best = 0.0;
  for (const Atom& a : mu.atoms) {
    for (const Atom& b : mu.atoms) {
      double span = std::fmod(std::arg(b.z) - std::arg(a.z) + 2.0 * turn, turn) / turn;
      std::vector<double> trial = lengths;
      trial.push_back(span);
      for (double len : trial) {
        len = std::min(1.0, std::max(len, span) * (1.0 + 1e-9) + 1e-12);
        const double start = std::arg(a.z) - 1e-13 * turn;
        best = std::max(best, mu.mass(CarlesonSquare{start + 0.5 * len * turn, len}) / len);
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("mu_z_measure examples") {
  const DiscreteMeasure origin = mu_z_measure(FiniteSequence({DiskPoint(0.0, 0.0)}));
  REQUIRE(origin.atoms.size() == 1);
  CHECK(origin.atoms[0].weight == 1.0);
  CHECK(mu_z_measure(FiniteSequence({DiskPoint(0.5, 0.0)})).atoms[0].weight == 0.75);
  const FiniteSequence ce = gen_counterexample(5, 0.25);
  double want = 0.0;
  for (int j = 1; j <= 5; ++j) want += j * (1.0 - std::pow(1.0 - std::pow(0.25, j), 2));
  CHECK(mu_z_measure(ce).total_mass() == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("carleson_norm examples") {
  CHECK(carleson_norm(FiniteSequence({DiskPoint(0.5, 0.0)})).norm == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(carleson_norm(FiniteSequence{}).norm == 0.0);
  for (int n : {5, 10, 20, 30}) CHECK(carleson_norm(gen_radial_geometric(0.5, n)).norm <= 4.0 + 1e-9);
}

TEST_CASE("carleson_norm matches a brute-force arc search") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    const FiniteSequence s = random_sequence(rng, 12, 0.05);
    const double exact = carleson_norm(s).norm;
    const double brute = brute_carleson(s);
    CHECK(exact == doctest::Approx(brute).epsilon(1e-6));
    const double dyadic = carleson_norm(s, CarlesonMethod::dyadic).norm;
    CHECK(dyadic <= exact * (1.0 + 1e-12));
  }
}

TEST_CASE("property: monotone, subadditive and rotation invariant") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const FiniteSequence a = random_sequence(rng, 15, 1e-3);
    const FiniteSequence b = random_sequence(rng, 15, 1e-3);
    const FiniteSequence ab = a.merged_with(b);
    const double na = carleson_norm(a).norm, nb = carleson_norm(b).norm, nab = carleson_norm(ab).norm;
    CHECK(nab >= na);
    CHECK(nab >= nb);
    CHECK(nab <= (na + nb) * (1.0 + 1e-12));

    std::vector<DiskPoint> rotated;
    const Complex rot = std::polar(1.0, 0.1 + t);
    for (const DiskPoint& z : a.points()) rotated.emplace_back(z.value() * rot);
    CHECK(carleson_norm(FiniteSequence(rotated)).norm == doctest::Approx(na).epsilon(1e-10));
  }
}

TEST_CASE("uniform_blaschke_sup") {
  const FiniteSequence origin({DiskPoint(0.0, 0.0)});
  CHECK(uniform_blaschke_sup(origin, origin.points()) == 1.0);
  std::mt19937_64 rng(47);
  const FiniteSequence s = random_sequence(rng, 25, 1e-2);
  const double sup = uniform_blaschke_sup(s, s.points());
  CHECK(sup >= 1.0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const DiskPoint c = s.point(k);
    CHECK(sup >= uniform_blaschke_sup(s, std::span<const DiskPoint>(&c, 1)));
  }
  for (int n = 1; n <= 8; ++n) {
    const FiniteSequence ce = gen_counterexample(n, 0.25);
    const DiskPoint c = ce.point(static_cast<std::size_t>(n - 1));
    CHECK(uniform_blaschke_sup(ce, std::span<const DiskPoint>(&c, 1)) >= n);
  }
  double lo = 1e300, hi = 0.0;
  for (int n : {10, 20, 40}) {
    const FiniteSequence g = gen_radial_geometric(0.5, n);
    const double v = uniform_blaschke_sup(g, g.points());
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi / lo <= 1.1);
}

TEST_CASE("lp_sequence_norm examples") {
  const FiniteSequence origin({DiskPoint(0.0, 0.0)});
  const FiniteSequence half({DiskPoint(0.5, 0.0)});
  const std::vector<Complex> zero{0.0}, two{2.0}, one{1.0};
  CHECK(lp_sequence_norm(origin, zero, 2.0) == 0.0);
  CHECK(lp_sequence_norm(origin, two, 2.0) == doctest::Approx(2.0));
  CHECK(lp_sequence_norm(half, one, 1.0) == doctest::Approx(0.75));
  CHECK(lp_sequence_norm(half, two, std::numeric_limits<double>::infinity()) == 2.0);
  CHECK_THROWS_AS(lp_sequence_norm(half, one, 0.0), std::invalid_argument);
}

TEST_CASE("arc_carleson_constant") {
  CHECK(arc_carleson_constant({}) == 0.0);
  // Whole circle of radius rho about 0: total length 2 pi rho, carried by the
  // full square only once m(I) exceeds 1 - rho.
  for (double rho : {0.3, 0.5, 0.8}) {
    const CircularArc circle{0.0, rho, 0.0, 2.0 * std::numbers::pi};
    const double got = arc_carleson_constant(std::span<const CircularArc>(&circle, 1), 256);
    // Midpoint segments overshoot by at most one segment per admissible window.
    CHECK(got >= 2.0 * std::numbers::pi * rho * (1.0 - 1e-12));
    CHECK(got <= 2.0 * std::numbers::pi * rho * (1.0 + 1.0 / ((1.0 - rho) * 256.0)) * (1.0 + 1e-12));
  }
}

TEST_CASE("carleson_embedding_probe") {
  std::mt19937_64 rng(53);
  const FiniteSequence s = random_sequence(rng, 10, 0.1);
  const std::vector<NormedFunction> one{{AnalyticFunction::constant(1.0), 1.0}};
  CHECK(carleson_embedding_probe(s, 2.0, one) == doctest::Approx(mu_z_measure(s).total_mass()));
  CHECK(carleson_embedding_probe(FiniteSequence{}, 2.0, one) == 0.0);
  for (double p : {1.0, 2.0}) {
    std::vector<NormedFunction> family;
    for (const DiskPoint& a : s.points()) {
      family.push_back({AnalyticFunction::reproducing_test(a, p), std::pow(a.defect(), 1.0 / p)});
    }
    // At a = z_j the j-th term alone is (1-|z_j|^2) |f(z_j)|^p / ||f||^p = 1.
    CHECK(carleson_embedding_probe(s, p, family) >= 1.0 - 1e-12);
  }
}
