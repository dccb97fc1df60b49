#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "blaschke_lab/disk.hpp"

namespace blaschke_lab {

struct RadialGeometricParams {
  double q = 0.5;
  int n = 10;
  std::vector<double> ray_angles{0.0};
};

struct GeneratorSpec;

struct UnionParams {
  int copies = 2;
  std::shared_ptr<const GeneratorSpec> base;
  /// Copy i is rotated by i * rotation_step radians.
  double rotation_step = 0.0;
  /// Each point is further rotated by a uniform angle in [-jitter, jitter].
  double jitter = 0.0;
};

struct CounterexampleParams {
  int n_max = 8;
  double base_gap = 0.25;
  /// Replace the n-fold point at level n by n distinct points
  /// phi_{zeta_n}(k * 1e-4 * i), k = 0..n-1.
  bool split = false;
};

struct RandomCarlesonParams {
  int n = 50;
  double target_norm = 1.0;
  /// Depths 1 - |z| are log-uniform in [min_depth, max_depth].
  double min_depth = 1e-3;
  double max_depth = 0.5;
  /// Reject candidates within this pseudohyperbolic distance of an
  /// accepted point (0 disables).
  double min_separation = 0.0;
};

struct PerturbedParams {
  std::shared_ptr<const GeneratorSpec> base;
  /// Chance that a base point receives satellites.
  double satellite_probability = 0.5;
  int max_satellites = 2;
  /// Pseudohyperbolic distance of satellites from their base point.
  double radius = 0.03;
  /// Chance that a base point is doubled (multiplicity 2).
  double multiplicity_probability = 0.0;
};

using GeneratorParams =
    std::variant<RadialGeometricParams, UnionParams, CounterexampleParams, RandomCarlesonParams, PerturbedParams>;

struct GeneratorSpec {
  GeneratorParams params;
  std::uint64_t seed = 0;
};

/// Same spec, same output bit for bit. Throws std::invalid_argument for bad
/// parameters and std::runtime_error("sampling budget exhausted") when
/// rejection sampling gives up.
FiniteSequence generate(const GeneratorSpec& spec);

/// 1 - q^k on each ray, k = 1..n.
FiniteSequence gen_radial_geometric(double q, int n, const std::vector<double>& ray_angles = {0.0});
/// Union of rotated, jittered copies. On a collision the draw is repeated
/// with seed + 1 (up to 16 times), then std::invalid_argument("collision").
FiniteSequence gen_union(int copies, const GeneratorSpec& base, double rotation_step, double jitter,
                         std::uint64_t seed);
/// zeta_n = 1 - base_gap^n with multiplicity n, n = 1..n_max.
FiniteSequence gen_counterexample(int n_max, double base_gap, bool split = false);
/// Points accepted one at a time while the exact Carleson norm of mu_Z
/// stays at or below target_norm.
FiniteSequence gen_random_carleson(std::uint64_t seed, const RandomCarlesonParams& params);

}  // namespace blaschke_lab
