#include "blaschke_lab/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace blaschke_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angle as a fraction of the full turn, in [0, 1).
double turn_fraction(Complex z) {
  double u = std::atan2(z.imag(), z.real()) / kTwoPi;
  if (u < 0.0) u += 1.0;
  if (u >= 1.0) u -= 1.0;
  return u;
}

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : t_(n + 1, 0.0) {}
  void add(std::size_t i, double v) {
    for (++i; i < t_.size(); i += i & (~i + 1)) t_[i] += v;
  }
  double prefix(std::size_t i) const {  // sum of [0, i)
    double s = 0.0;
    for (; i > 0; i -= i & (~i + 1)) s += t_[i];
    return s;
  }
  double range(std::size_t lo, std::size_t hi) const { return prefix(hi + 1) - prefix(lo); }

 private:
  std::vector<double> t_;
};

struct PolarAtom {
  double u;      // turn fraction
  double depth;  // 1 - |z|
  double weight;
};

struct Best {
  double ratio = 0.0;
  CarlesonSquare square;
  void offer(double mass, double lo_u, double length) {
    if (length <= 0.0) return;
    const double r = mass / length;
    if (r > ratio) {
      ratio = r;
      double c = lo_u + 0.5 * length;
      c -= std::floor(c);
      square = {c * kTwoPi, std::min(length, 1.0)};
    }
  }
};

CarlesonNormReport point_anchored(std::vector<PolarAtom> atoms) {
  Best best;
  CarlesonNormReport rep;
  rep.method = CarlesonMethod::point_anchored;
  if (atoms.empty()) return rep;

  std::sort(atoms.begin(), atoms.end(), [](const PolarAtom& a, const PolarAtom& b) { return a.u < b.u; });
  const std::size_t n = atoms.size();
  // Doubled angular array handles arcs that wrap through angle 0.
  std::vector<double> uu(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    uu[i] = atoms[i].u;
    uu[i + n] = atoms[i].u + 1.0;
  }
  const double total = std::accumulate(atoms.begin(), atoms.end(), 0.0,
                                       [](double s, const PolarAtom& a) { return s + a.weight; });

  // Whole circle, m(I) = 1.
  best.offer(total, 0.0, 1.0);

  // Candidates with m(I) at an atom depth: windows of that length which
  // contain the atom, starting at an active atom.
  std::vector<std::size_t> by_depth(n);
  std::iota(by_depth.begin(), by_depth.end(), std::size_t{0});
  std::sort(by_depth.begin(), by_depth.end(),
            [&](std::size_t a, std::size_t b) { return atoms[a].depth < atoms[b].depth; });
  Fenwick active(2 * n);
  std::vector<char> is_active(n, 0);
  for (std::size_t g = 0; g < n;) {
    std::size_t h = g;
    const double ell = atoms[by_depth[g]].depth;
    while (h < n && atoms[by_depth[h]].depth == ell) {
      const std::size_t i = by_depth[h];
      active.add(i, atoms[i].weight);
      active.add(i + n, atoms[i].weight);
      is_active[i] = 1;
      ++h;
    }
    for (std::size_t q = g; q < h; ++q) {
      const std::size_t j = by_depth[q] + n;  // the copy in [n, 2n)
      const auto first = static_cast<std::size_t>(
          std::lower_bound(uu.begin(), uu.begin() + static_cast<std::ptrdiff_t>(j), uu[j] - ell) - uu.begin());
      for (std::size_t s = first; s <= j; ++s) {
        const std::size_t s0 = s % n;
        if (!is_active[s0]) continue;
        const auto last = static_cast<std::size_t>(
            std::upper_bound(uu.begin() + static_cast<std::ptrdiff_t>(s0), uu.end(), uu[s0] + ell) - uu.begin());
        best.offer(active.range(s0, last - 1), uu[s0], ell);
      }
    }
    g = h;
  }

  // Candidates with m(I) equal to the angular span of two atoms.
  for (std::size_t a = 0; a < n; ++a) {
    double mass = 0.0;
    std::priority_queue<std::pair<double, double>, std::vector<std::pair<double, double>>, std::greater<>> pending;
    for (std::size_t b = a; b < a + n; ++b) {
      const double span = uu[b] - uu[a];
      if (span > 0.0 && total / span <= best.ratio) break;
      const PolarAtom& at = atoms[b % n];
      if (at.depth <= span) {
        mass += at.weight;
      } else {
        pending.emplace(at.depth, at.weight);
      }
      while (!pending.empty() && pending.top().first <= span) {
        mass += pending.top().second;
        pending.pop();
      }
      if (span > 0.0 && span < 1.0) best.offer(mass, uu[a], span);
    }
  }

  rep.norm = best.ratio;
  rep.maximizing_square = best.square;
  return rep;
}

CarlesonNormReport dyadic(const std::vector<PolarAtom>& atoms, double offset) {
  CarlesonNormReport rep;
  rep.method = CarlesonMethod::dyadic;
  if (atoms.empty()) return rep;
  double min_depth = 1.0;
  for (const auto& a : atoms) min_depth = std::min(min_depth, a.depth);
  int levels = 0;
  while (std::ldexp(1.0, -levels) >= min_depth / 2.0 && levels < 62) ++levels;
  const double shift = offset / kTwoPi;
  Best best;
  for (int l = 0; l <= levels; ++l) {
    const double ell = std::ldexp(1.0, -l);
    std::map<long long, double> bins;
    for (const auto& a : atoms) {
      if (!(a.depth < ell)) continue;
      double v = a.u - shift;
      v -= std::floor(v);
      bins[static_cast<long long>(std::floor(v / ell))] += a.weight;
    }
    for (const auto& [k, mass] : bins) best.offer(mass, shift + static_cast<double>(k) * ell, ell);
  }
  rep.norm = best.ratio;
  rep.maximizing_square = best.square;
  return rep;
}

}  // namespace

bool CarlesonSquare::contains(Complex z) const {
  const double m = std::abs(z);
  if (m == 0.0 || !(1.0 - m < arc_length)) return false;
  if (arc_length >= 1.0) return true;
  double d = turn_fraction(z) - arc_center / kTwoPi;
  d -= std::floor(d);
  return std::min(d, 1.0 - d) <= 0.5 * arc_length;
}

double DiscreteMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

double DiscreteMeasure::mass(const CarlesonSquare& sq) const {
  double s = 0.0;
  for (const auto& a : atoms) {
    if (sq.contains(a.z)) s += a.weight;
  }
  return s;
}

DiscreteMeasure mu_z_measure(const FiniteSequence& s) {
  DiscreteMeasure mu;
  mu.atoms.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    mu.atoms.push_back({s.point(i).value(), s.multiplicity(i) * s.point(i).defect()});
  }
  return mu;
}

CarlesonNormReport carleson_norm(const DiscreteMeasure& mu, CarlesonMethod method, double dyadic_offset) {
  std::vector<PolarAtom> atoms;
  atoms.reserve(mu.atoms.size());
  for (const auto& a : mu.atoms) {
    const double m = std::abs(a.z);
    // The origin lies in no square (it would need m(I) > 1).
    if (m == 0.0 || !(a.weight > 0.0)) continue;
    atoms.push_back({turn_fraction(a.z), 1.0 - m, a.weight});
  }
  return method == CarlesonMethod::dyadic ? dyadic(atoms, dyadic_offset) : point_anchored(std::move(atoms));
}

CarlesonNormReport carleson_norm(const FiniteSequence& s, CarlesonMethod method, double dyadic_offset) {
  return carleson_norm(mu_z_measure(s), method, dyadic_offset);
}

double uniform_blaschke_sup(const FiniteSequence& s, std::span<const DiskPoint> probe_centers) {
  double best = 0.0;
  for (const DiskPoint& c : probe_centers) {
    double sum = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      const double term = s.point(j) == c ? 1.0 : psh_complement(c.value(), s.point(j).value());
      sum += s.multiplicity(j) * term;
    }
    best = std::max(best, sum);
  }
  return best;
}

double lp_sequence_norm(const FiniteSequence& s, std::span<const Complex> values, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_sequence_norm: p must be positive");
  if (values.size() != s.size()) throw std::invalid_argument("lp_sequence_norm: values not parallel to points");
  if (std::isinf(p)) {
    double m = 0.0;
    for (Complex w : values) m = std::max(m, std::abs(w));
    return m;
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) acc += std::pow(std::abs(values[k]), p) * s.point(k).defect();
  return std::pow(acc, 1.0 / p);
}

double arc_carleson_constant(std::span<const CircularArc> arcs, int segments_per_turn) {
  DiscreteMeasure mu;
  for (const CircularArc& arc : arcs) {
    const double sweep = arc.theta_end - arc.theta_begin;
    if (!(sweep > 0.0) || !(arc.radius > 0.0)) continue;
    const int count = std::max(4, static_cast<int>(std::ceil(segments_per_turn * sweep / kTwoPi)));
    const double step = sweep / count;
    for (int i = 0; i < count; ++i) {
      const double t = arc.theta_begin + (i + 0.5) * step;
      mu.atoms.push_back({arc.center + std::polar(arc.radius, t), arc.radius * step});
    }
  }
  return carleson_norm(mu).norm;
}

double carleson_embedding_probe(const FiniteSequence& s, double p, std::span<const NormedFunction> family) {
  if (!(p > 0.0)) throw std::invalid_argument("carleson_embedding_probe: p must be positive");
  double best = 0.0;
  for (const NormedFunction& nf : family) {
    double acc = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      acc += s.multiplicity(j) * s.point(j).defect() * std::pow(std::abs(nf.f(s.point(j).value())), p);
    }
    best = std::max(best, acc / std::pow(nf.hp_norm, p));
  }
  return best;
}

}  // namespace blaschke_lab
