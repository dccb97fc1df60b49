#include <doctest.h>

#include <blaschke_lab/blaschke.hpp>
#include <blaschke_lab/carleson.hpp>
#include <blaschke_lab/seqgen.hpp>

using namespace blaschke_lab;

TEST_CASE("radial geometric") {
  const FiniteSequence s = gen_radial_geometric(0.5, 3);
  REQUIRE(s.size() == 3);
  CHECK(s.point(0) == DiskPoint(0.5, 0.0));
  CHECK(s.point(1) == DiskPoint(0.75, 0.0));
  CHECK(s.point(2) == DiskPoint(0.875, 0.0));
  // Consecutive gaps approach (1 - q)/(1 + q).
  const FiniteSequence long_ray = gen_radial_geometric(0.5, 30);
  CHECK(psh_distance(long_ray.point(28), long_ray.point(29)) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  for (int k = 1; k < 10; ++k) {
    const double qk = std::pow(0.5, k), qk1 = std::pow(0.5, k + 1);
    CHECK(psh_distance(long_ray.point(static_cast<std::size_t>(k - 1)), long_ray.point(static_cast<std::size_t>(k))) ==
          doctest::Approx((qk - qk1) / (qk + qk1 - std::pow(0.5, 2 * k + 1))).epsilon(1e-12));
  }
  const FiniteSequence two_rays = gen_radial_geometric(0.5, 4, {0.0, 2.0});
  CHECK(two_rays.size() == 8);
  CHECK_THROWS_AS(gen_radial_geometric(1.5, 3), std::invalid_argument);
  CHECK(gen_radial_geometric(0.5, 0).empty());
}

TEST_CASE("counterexample") {
  const FiniteSequence s = gen_counterexample(2, 0.25);
  REQUIRE(s.size() == 2);
  CHECK(s.point(0) == DiskPoint(0.75, 0.0));
  CHECK(s.multiplicity(0) == 1);
  CHECK(s.point(1) == DiskPoint(0.9375, 0.0));
  CHECK(s.multiplicity(1) == 2);
  const FiniteSequence split = gen_counterexample(4, 0.25, true);
  CHECK(split.size() == 10);
  CHECK(split.all_simple());
  CHECK_THROWS_AS(gen_counterexample(3, 1.0), std::invalid_argument);
}

TEST_CASE("union of copies") {
  const GeneratorSpec base{RadialGeometricParams{0.5, 6, {0.0}}, 0};
  CHECK(gen_union(1, base, 0.0, 0.0, 1) == generate(base));
  const FiniteSequence three = gen_union(3, base, 2.0, 0.0, 1);
  CHECK(three.size() == 18);
  CHECK(carleson_norm(three).norm <= 3.0 * carleson_norm(generate(base)).norm + 1e-9);
  CHECK(partition_separated(three, 0.5).size() <= 3);
  CHECK_THROWS_WITH_AS(gen_union(2, base, 0.0, 0.0, 1), "union: collision", std::invalid_argument);
}

TEST_CASE("random carleson respects its cap") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const RandomCarlesonParams params{200, 40.0, 1e-3, 0.5, 0.0};
    const FiniteSequence s = gen_random_carleson(seed, params);
    CHECK(s.size() == 200);
    CHECK(carleson_norm(s).norm <= 1.2 * params.target_norm);
  }
  const FiniteSequence one = gen_random_carleson(3, {1, 10.0, 1e-3, 0.5, 0.0});
  REQUIRE(one.size() == 1);
  CHECK(carleson_norm(one).norm == doctest::Approx(mu_z_measure(one).total_mass() / (1.0 - one.point(0).modulus())));
  CHECK_THROWS_WITH_AS(gen_random_carleson(3, {50, 0.1, 1e-3, 0.5, 0.0}), "sampling budget exhausted", std::runtime_error);
}

TEST_CASE("generators are deterministic under seed") {
  const auto base = std::make_shared<GeneratorSpec>(GeneratorSpec{RandomCarlesonParams{30, 15.0, 1e-3, 0.5, 0.1}, 4});
  const std::vector<GeneratorSpec> specs{
      {RadialGeometricParams{0.3, 8, {0.0, 1.0}}, 0},
      {CounterexampleParams{5, 0.25, true}, 0},
      *base,
      {PerturbedParams{base, 0.5, 2, 0.03, 0.2}, 9},
      {UnionParams{3, base, 0.7, 0.01}, 2},
  };
  for (const GeneratorSpec& spec : specs) {
    const FiniteSequence a = generate(spec);
    const FiniteSequence b = generate(spec);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
    for (const DiskPoint& z : a.points()) CHECK(1.0 - z.modulus() >= kBoundaryFloor);
  }
  GeneratorSpec other = specs[3];
  other.seed = 10;
  CHECK_FALSE(generate(other) == generate(specs[3]));
}

TEST_CASE("perturbed satellites sit at the requested distance") {
  const auto base = std::make_shared<GeneratorSpec>(GeneratorSpec{RandomCarlesonParams{20, 10.0, 1e-2, 0.5, 0.3}, 1});
  const FiniteSequence core = generate(*base);
  const FiniteSequence s = generate({PerturbedParams{base, 1.0, 2, 0.03, 0.0}, 5});
  CHECK(s.size() > core.size());
  for (const DiskPoint& z : s.points()) {
    double nearest = 1.0;
    for (const DiskPoint& c : core.points()) nearest = std::min(nearest, psh_distance(z, c));
    CHECK((nearest == 0.0 || nearest == doctest::Approx(0.03).epsilon(1e-9)));
  }
}
