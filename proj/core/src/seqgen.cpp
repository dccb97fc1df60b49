#include "blaschke_lab/seqgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "blaschke_lab/carleson.hpp"

namespace blaschke_lab {

namespace {

using Rng = std::mt19937_64;

// Portable uniform on [0, 1): the top 53 bits of one draw.
double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

bool has_duplicates(const std::vector<DiskPoint>& pts) {
  std::set<std::pair<double, double>> seen;
  for (const DiskPoint& z : pts) {
    if (!seen.emplace(z.re(), z.im()).second) return true;
  }
  return false;
}

FiniteSequence perturbed(const PerturbedParams& params, std::uint64_t seed) {
  if (!params.base) throw std::invalid_argument("perturbed: base spec required");
  if (!(params.radius > 0.0 && params.radius < 1.0)) throw std::invalid_argument("perturbed: radius must lie in (0, 1)");
  if (params.max_satellites < 0) throw std::invalid_argument("perturbed: max_satellites must be non-negative");
  const FiniteSequence base = generate(*params.base);
  Rng rng(seed);
  std::vector<DiskPoint> pts;
  std::vector<int> mult;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const DiskPoint z = base.point(i);
    int m = base.multiplicity(i);
    if (uniform01(rng) < params.multiplicity_probability) m = std::max(m, 2);
    pts.push_back(z);
    mult.push_back(m);
    if (uniform01(rng) >= params.satellite_probability) continue;
    const int count = 1 + static_cast<int>(uniform01(rng) * params.max_satellites);
    const double phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const MoebiusMap phi(z);
    for (int s = 0; s < std::min(count, params.max_satellites); ++s) {
      pts.push_back(DiskPoint(phi(std::polar(params.radius, phase + 2.0 * std::numbers::pi * s / params.max_satellites))));
      mult.push_back(1);
    }
  }
  return FiniteSequence(std::move(pts), std::move(mult));
}

}  // namespace

FiniteSequence gen_radial_geometric(double q, int n, const std::vector<double>& ray_angles) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("radial_geometric: q must lie in (0, 1)");
  if (n < 0) throw std::invalid_argument("radial_geometric: n must be non-negative");
  if (ray_angles.empty()) throw std::invalid_argument("radial_geometric: at least one ray");
  std::vector<DiskPoint> pts;
  for (double theta : ray_angles) {
    double gap = 1.0;
    for (int k = 1; k <= n; ++k) {
      gap *= q;
      const double r = 1.0 - gap;
      pts.push_back(theta == 0.0 ? DiskPoint(r, 0.0) : DiskPoint(std::polar(r, theta)));
    }
  }
  return FiniteSequence(std::move(pts));
}

FiniteSequence gen_union(int copies, const GeneratorSpec& base, double rotation_step, double jitter,
                         std::uint64_t seed) {
  if (copies < 1) throw std::invalid_argument("union: copies must be at least 1");
  if (!(jitter >= 0.0)) throw std::invalid_argument("union: jitter must be non-negative");
  const FiniteSequence b = generate(base);
  if (copies == 1 && jitter == 0.0) return b;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<DiskPoint> pts;
    std::vector<int> mult;
    for (int c = 0; c < copies; ++c) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        const double angle = c * rotation_step + (jitter > 0.0 ? uniform(rng, -jitter, jitter) : 0.0);
        const Complex z = b.point(i).value();
        pts.push_back(angle == 0.0 ? b.point(i) : DiskPoint(z * std::polar(1.0, angle)));
        mult.push_back(b.multiplicity(i));
      }
    }
    if (!has_duplicates(pts)) return FiniteSequence(std::move(pts), std::move(mult));
  }
  throw std::invalid_argument("union: collision");
}

FiniteSequence gen_counterexample(int n_max, double base_gap, bool split) {
  if (n_max < 0) throw std::invalid_argument("counterexample: n_max must be non-negative");
  if (!(base_gap > 0.0 && base_gap < 1.0)) throw std::invalid_argument("counterexample: base_gap must lie in (0, 1)");
  std::vector<DiskPoint> pts;
  std::vector<int> mult;
  double gap = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    gap *= base_gap;
    const DiskPoint zeta(1.0 - gap, 0.0);
    if (!split) {
      pts.push_back(zeta);
      mult.push_back(n);
      continue;
    }
    const MoebiusMap phi(zeta);
    for (int k = 0; k < n; ++k) {
      pts.push_back(k == 0 ? zeta : DiskPoint(phi(Complex(0.0, 1e-4 * k))));
      mult.push_back(1);
    }
  }
  return FiniteSequence(std::move(pts), std::move(mult));
}

FiniteSequence gen_random_carleson(std::uint64_t seed, const RandomCarlesonParams& params) {
  if (params.n < 0) throw std::invalid_argument("random_carleson: n must be non-negative");
  if (!(params.target_norm > 0.0)) throw std::invalid_argument("random_carleson: target_norm must be positive");
  if (!(params.min_depth > 0.0 && params.min_depth <= params.max_depth && params.max_depth <= 1.0)) {
    throw std::invalid_argument("random_carleson: need 0 < min_depth <= max_depth <= 1");
  }
  if (!(params.min_separation >= 0.0 && params.min_separation < 1.0)) {
    throw std::invalid_argument("random_carleson: min_separation must lie in [0, 1)");
  }
  Rng rng(seed);
  const double log_lo = std::log(params.min_depth);
  const double log_hi = std::log(params.max_depth);
  DiscreteMeasure mu;
  std::vector<DiskPoint> pts;
  const long budget = 200L * std::max(params.n, 1);
  long tries = 0;
  while (static_cast<int>(pts.size()) < params.n) {
    if (++tries > budget) throw std::runtime_error("sampling budget exhausted");
    const double depth = std::exp(uniform(rng, log_lo, log_hi));
    const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const Complex z = std::polar(1.0 - depth, theta);
    if (!(std::abs(z) < 1.0 - kBoundaryFloor)) continue;
    const DiskPoint cand(z);
    bool too_close = false;
    for (const DiskPoint& w : pts) {
      if (w == cand || (params.min_separation > 0.0 && psh_distance(w, cand) <= params.min_separation)) {
        too_close = true;
        break;
      }
    }
    if (too_close) continue;
    mu.atoms.push_back({z, cand.defect()});
    if (carleson_norm(mu).norm > params.target_norm) {
      mu.atoms.pop_back();
      continue;
    }
    pts.push_back(cand);
  }
  return FiniteSequence(std::move(pts));
}

FiniteSequence generate(const GeneratorSpec& spec) {
  return std::visit(
      [&](const auto& p) -> FiniteSequence {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RadialGeometricParams>) {
          return gen_radial_geometric(p.q, p.n, p.ray_angles);
        } else if constexpr (std::is_same_v<T, UnionParams>) {
          if (!p.base) throw std::invalid_argument("union: base spec required");
          return gen_union(p.copies, *p.base, p.rotation_step, p.jitter, spec.seed);
        } else if constexpr (std::is_same_v<T, CounterexampleParams>) {
          return gen_counterexample(p.n_max, p.base_gap, p.split);
        } else if constexpr (std::is_same_v<T, RandomCarlesonParams>) {
          return gen_random_carleson(spec.seed, p);
        } else {
          return perturbed(p, spec.seed);
        }
      },
      spec.params);
}

}  // namespace blaschke_lab
