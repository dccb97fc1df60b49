#include "blaschke_lab/geninterp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "blaschke_lab/bergman.hpp"
#include "blaschke_lab/parallel.hpp"

namespace blaschke_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

bool is_integral(double q) { return q == std::round(q) && std::abs(q) < 64.0; }

Complex kernel_base(double defect, Complex a, Complex z) {
  const Complex den = one_minus_conj_product(a, z);
  if (!(den.real() > 0.0)) throw InvariantViolation("kernel base leaves the right half-plane");
  return defect / den;
}

Complex power(Complex base, double q) {
  return is_integral(q) ? std::pow(base, static_cast<int>(q)) : std::pow(base, q);
}

TaylorSeries power(const TaylorSeries& base, double q) {
  return is_integral(q) ? pow(base, static_cast<int>(q)) : pow(base, q);
}

// Evaluation data of the VGH sum. Clusters are indexed in beta order.
struct VghModel {
  std::vector<Complex> anchors;
  std::vector<double> defects;
  std::vector<BlaschkeProduct> factors;
  std::vector<NewtonInterpolant> multipliers;
  std::vector<Complex> beta_at_anchor;
  KernelExponents ex;

  std::size_t size() const { return anchors.size(); }

  Complex beta_term(std::size_t j, Complex z) const {
    const Complex az = std::conj(anchors[j]) * z;
    return defects[j] * (1.0 + az) / one_minus_conj_product(anchors[j], z);
  }

  TaylorSeries beta_term(std::size_t j, Complex z0, std::size_t order) const {
    const TaylorSeries z = TaylorSeries::variable(z0, order);
    const TaylorSeries one = TaylorSeries::constant(1.0, order);
    const Complex ca = std::conj(anchors[j]);
    return defects[j] * (one + ca * z) / (one - ca * z);
  }

  // Products of the cluster factors other than k, for every k.
  template <class T, class Mul>
  static std::vector<T> excluded_products(const std::vector<T>& values, T unit, Mul mul) {
    const std::size_t n = values.size();
    std::vector<T> prefix(n + 1, unit);
    for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = mul(prefix[j], values[j]);
    std::vector<T> out(n, unit);
    T suffix = unit;
    for (std::size_t j = n; j-- > 0;) {
      out[j] = mul(prefix[j], suffix);
      suffix = mul(values[j], suffix);
    }
    return out;
  }

  // B^(k)(z) * kernel_k(z) for every k.
  std::vector<Complex> carriers(Complex z) const {
    const std::size_t n = size();
    std::vector<Complex> bz(n);
    for (std::size_t j = 0; j < n; ++j) bz[j] = factors[j](z);
    std::vector<Complex> out = excluded_products(bz, Complex(1.0), [](Complex a, Complex b) { return a * b; });
    Complex tail{};
    for (std::size_t k = n; k-- > 0;) {
      tail += beta_term(k, z);
      const Complex base = kernel_base(defects[k], anchors[k], z);
      out[k] *= power(base, ex.q) * std::exp((beta_at_anchor[k] - tail) / ex.s);
    }
    return out;
  }

  std::vector<TaylorSeries> carriers(Complex z0, std::size_t order) const {
    const std::size_t n = size();
    std::vector<TaylorSeries> bz(n);
    for (std::size_t j = 0; j < n; ++j) bz[j] = factors[j].taylor(z0, order);
    std::vector<TaylorSeries> out = excluded_products(
        bz, TaylorSeries::constant(1.0, order), [](const TaylorSeries& a, const TaylorSeries& b) { return a * b; });
    const TaylorSeries z = TaylorSeries::variable(z0, order);
    const TaylorSeries one = TaylorSeries::constant(1.0, order);
    TaylorSeries tail(order);
    for (std::size_t k = n; k-- > 0;) {
      tail += beta_term(k, z0, order);
      if (!(one_minus_conj_product(anchors[k], z0).real() > 0.0)) {
        throw InvariantViolation("kernel base leaves the right half-plane");
      }
      const TaylorSeries base = TaylorSeries::constant(defects[k], order) / (one - std::conj(anchors[k]) * z);
      const TaylorSeries expo = (1.0 / ex.s) * (TaylorSeries::constant(beta_at_anchor[k], order) - tail);
      out[k] = out[k] * power(base, ex.q) * exp(expo);
    }
    return out;
  }

  Complex operator()(Complex z) const {
    const auto c = carriers(z);
    Complex acc{};
    for (std::size_t k = 0; k < size(); ++k) {
      if (!multipliers[k].coefficients().empty()) acc += multipliers[k](z) * c[k];
    }
    return acc;
  }

  TaylorSeries taylor(Complex z0, std::size_t order) const {
    const auto c = carriers(z0, order);
    TaylorSeries acc(order);
    for (std::size_t k = 0; k < size(); ++k) {
      if (!multipliers[k].coefficients().empty()) acc += multipliers[k].taylor(z0, order) * c[k];
    }
    return acc;
  }
};

std::shared_ptr<VghModel> skeleton(const ClusterPartition& part, double p) {
  auto m = std::make_shared<VghModel>();
  m->ex = kernel_exponents(p);
  const std::size_t n = part.size();
  for (const Cluster& c : part.clusters) {
    m->anchors.push_back(c.anchor.value());
    m->defects.push_back(c.anchor.defect());
    m->factors.emplace_back(c.points);
  }
  m->multipliers.resize(n);
  m->beta_at_anchor.resize(n);
  for (std::size_t k = 0; k < n; ++k) m->beta_at_anchor[k] = beta(part, k, m->anchors[k]);
  return m;
}

bool jet_is_zero(const HermiteJet& jet) {
  for (const auto& d : jet.derivatives) {
    for (Complex v : d) {
      if (v != Complex{}) return false;
    }
  }
  return true;
}

// P_k matching target / (B^(k) kernel_k) on cluster k.
NewtonInterpolant multiplier_for(const VghModel& model, const ClusterPartition& part, std::size_t k,
                                 const HermiteJet& target) {
  const Cluster& c = part.clusters[k];
  check_jet(c, target);
  if (jet_is_zero(target)) return {};
  std::vector<TaylorData> data = taylor_data(c, target);
  for (TaylorData& d : data) {
    const std::size_t order = d.coeffs.size();
    const TaylorSeries carrier = model.carriers(d.at, order)[k];
    const TaylorSeries quotient = TaylorSeries(d.coeffs) / carrier;
    d.coeffs = quotient.coefficients();
  }
  return NewtonInterpolant(data, NewtonInterpolant::Basis::moebius);
}

void order_clusters(std::vector<Cluster>& clusters, AnchorOrder order) {
  if (order == AnchorOrder::increasing_modulus) {
    std::stable_sort(clusters.begin(), clusters.end(),
                     [](const Cluster& a, const Cluster& b) { return a.anchor.modulus() < b.anchor.modulus(); });
  }
}

}  // namespace

FiniteSequence ClusterPartition::all_points() const {
  std::vector<DiskPoint> pts;
  std::vector<int> mult;
  for (const Cluster& c : clusters) {
    pts.insert(pts.end(), c.points.points().begin(), c.points.points().end());
    mult.insert(mult.end(), c.points.multiplicities().begin(), c.points.multiplicities().end());
  }
  return FiniteSequence(std::move(pts), std::move(mult));
}

BlaschkeProduct ClusterPartition::blaschke() const { return BlaschkeProduct(all_points()); }

ClusterPartition make_partition(std::vector<FiniteSequence> groups, double eps, double r_max, AnchorOrder order) {
  if (!(eps > 0.0)) throw std::invalid_argument("make_partition: eps must be positive");
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("make_partition: r_max must lie in (0, 1)");
  ClusterPartition part;
  part.eps = eps;
  part.r_max = r_max;
  part.order = order;
  for (FiniteSequence& g : groups) {
    if (g.empty()) throw std::invalid_argument("make_partition: empty cluster");
    if (!(psh_diameter(g) < r_max)) throw InvariantViolation("cluster diameter reaches r_max");
    std::size_t best = 0;
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (g.point(i).modulus() < g.point(best).modulus()) best = i;
    }
    const DiskPoint anchor = g.point(best);
    part.clusters.push_back({std::move(g), anchor});
  }
  for (std::size_t a = 0; a < part.size(); ++a) {
    for (std::size_t b = a + 1; b < part.size(); ++b) {
      for (const DiskPoint& x : part.clusters[a].points.points()) {
        for (const DiskPoint& y : part.clusters[b].points.points()) {
          if (!(psh_distance(x, y) > 2.0 * eps)) throw InvariantViolation("cluster neighborhoods overlap");
        }
      }
    }
  }
  order_clusters(part.clusters, order);
  for (const Cluster& c : part.clusters) {
    double dk = 1.0;
    for (const DiskPoint& z : c.points.points()) dk = std::min(dk, psh_disk_boundary_gap(z, eps));
    part.d.push_back(dk);
  }
  return part;
}

ClusterPartition cluster_sequence(const FiniteSequence& s, double eps, double r_max, ClusterOptions opt) {
  if (!(eps > 0.0)) throw std::invalid_argument("cluster_sequence: eps must be positive");
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("cluster_sequence: r_max must lie in (0, 1)");
  const std::size_t n = s.size();
  for (double e = eps; e >= opt.eps_floor; e /= 2.0) {
    DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (psh_distance(s.point(i), s.point(j)) <= 2.0 * e) sets.unite(i, j);
      }
    }
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t i = 0; i < n; ++i) members[sets.find(i)].push_back(i);
    std::vector<FiniteSequence> groups;
    bool admissible = true;
    for (const auto& idx : members) {
      if (idx.empty()) continue;
      groups.push_back(s.subsequence(idx));
      if (!(psh_diameter(groups.back()) < r_max)) {
        admissible = false;
        break;
      }
    }
    if (admissible) return make_partition(std::move(groups), e, r_max, opt.order);
  }
  throw InvariantViolation("no admissible partition at eps floor");
}

HermiteJet zero_jet(const Cluster& c) {
  HermiteJet jet;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    jet.derivatives.emplace_back(static_cast<std::size_t>(c.points.multiplicity(i)), Complex{});
  }
  return jet;
}

void check_jet(const Cluster& c, const HermiteJet& jet) {
  if (jet.derivatives.size() != c.points.size()) throw std::invalid_argument("jet does not match cluster size");
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    if (jet.derivatives[i].size() != static_cast<std::size_t>(c.points.multiplicity(i))) {
      throw std::invalid_argument("jet length does not match multiplicity");
    }
  }
}

std::vector<TaylorData> taylor_data(const Cluster& c, const HermiteJet& jet) {
  check_jet(c, jet);
  std::vector<TaylorData> out;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    TaylorData d{c.points.point(i).value(), jet.derivatives[i]};
    for (std::size_t j = 0; j < d.coeffs.size(); ++j) d.coeffs[j] /= factorial(j);
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

std::vector<std::vector<char>> boundary_flags(const std::vector<EuclideanCircle>& circles, int per_circle) {
  std::vector<std::vector<char>> keep(circles.size(), std::vector<char>(static_cast<std::size_t>(per_circle), 1));
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (int t = 0; t < per_circle; ++t) {
      const Complex s = circles[i].center + std::polar(circles[i].radius, kTwoPi * (t + 0.5) / per_circle);
      for (std::size_t j = 0; j < circles.size(); ++j) {
        if (j != i && std::abs(s - circles[j].center) < circles[j].radius) {
          keep[i][static_cast<std::size_t>(t)] = 0;
          break;
        }
      }
    }
  }
  return keep;
}

std::vector<EuclideanCircle> neighborhood_circles(const FiniteSequence& points, double eps) {
  std::vector<EuclideanCircle> circles;
  for (const DiskPoint& z : points.points()) circles.push_back(psh_disk_circle(z, eps));
  return circles;
}

}  // namespace

std::vector<Complex> neighborhood_boundary_samples(const FiniteSequence& points, double eps, int per_circle) {
  const auto circles = neighborhood_circles(points, eps);
  const auto keep = boundary_flags(circles, per_circle);
  std::vector<Complex> out;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (int t = 0; t < per_circle; ++t) {
      if (keep[i][static_cast<std::size_t>(t)]) {
        out.push_back(circles[i].center + std::polar(circles[i].radius, kTwoPi * (t + 0.5) / per_circle));
      }
    }
  }
  return out;
}

std::vector<CircularArc> neighborhood_boundary_arcs(const FiniteSequence& points, double eps, int per_circle) {
  const auto circles = neighborhood_circles(points, eps);
  const auto keep = boundary_flags(circles, per_circle);
  const double h = kTwoPi / per_circle;
  std::vector<CircularArc> arcs;
  const auto n = static_cast<std::size_t>(per_circle);
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const auto& flags = keep[i];
    if (std::all_of(flags.begin(), flags.end(), [](char f) { return f != 0; })) {
      arcs.push_back({circles[i].center, circles[i].radius, 0.0, kTwoPi});
      continue;
    }
    for (std::size_t t = 0; t < n; ++t) {
      // A run starts where a kept sample follows a dropped one.
      if (!flags[t] || flags[(t + n - 1) % n]) continue;
      std::size_t len = 0;
      while (flags[(t + len) % n]) ++len;
      arcs.push_back({circles[i].center, circles[i].radius, static_cast<double>(t) * h,
                      static_cast<double>(t + len) * h});
    }
  }
  return arcs;
}

double class_norm(const Cluster& c, const HermiteJet& jet, double eps) {
  if (jet_is_zero(jet)) {
    check_jet(c, jet);
    return 0.0;
  }
  const NewtonInterpolant poly = hermite_polynomial(taylor_data(c, jet));
  double best = 0.0;
  for (Complex z : neighborhood_boundary_samples(c.points, eps)) best = std::max(best, std::abs(poly(z)));
  for (const DiskPoint& z : c.points.points()) best = std::max(best, std::abs(poly(z.value())));
  return best;
}

double xp_norm(const ClusterPartition& part, std::span<const HermiteJet> jets, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("xp_norm: p must be positive");
  if (jets.size() != part.size()) throw std::invalid_argument("xp_norm: one jet per cluster required");
  std::vector<double> norms(part.size());
  parallel_for(part.size(), [&](std::size_t k) { norms[k] = class_norm(part.clusters[k], jets[k], part.eps); });
  if (std::isinf(p)) return norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
  CompensatedSum acc;
  for (std::size_t k = 0; k < part.size(); ++k) {
    if (norms[k] > 0.0) acc.add(std::pow(norms[k], p) * part.d[k]);
  }
  return std::pow(acc.value(), 1.0 / p);
}

Complex beta(const ClusterPartition& part, std::size_t k, Complex z) {
  if (k >= part.size()) throw std::out_of_range("beta: cluster index");
  Complex acc{};
  for (std::size_t j = part.size(); j-- > k;) {
    const Complex a = part.clusters[j].anchor.value();
    acc += part.clusters[j].anchor.defect() * (1.0 + std::conj(a) * z) / one_minus_conj_product(a, z);
  }
  return acc;
}

VghKernelReport vgh_kernel_bound(const ClusterPartition& part, std::span<const Complex> grid) {
  VghKernelReport rep;
  const std::size_t n = part.size();
  if (n == 0) return rep;
  const auto model = skeleton(part, 2.0);
  std::vector<double> sup(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t g) {
    const Complex z = grid[g];
    Complex tail{};
    double sum = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      tail += model->beta_term(k, z);
      sum += std::norm(kernel_base(model->defects[k], model->anchors[k], z)) *
             std::exp((model->beta_at_anchor[k] - tail).real());
    }
    sup[g] = sum;
  });
  for (double v : sup) rep.sup = std::max(rep.sup, v);

  static constexpr double kRadii[] = {0.5, 0.9, 0.99, 0.999, 0.9999};
  std::vector<double> worst(n, 0.0);
  parallel_for(n, [&](std::size_t k) {
    const Complex a = model->anchors[k];
    const double defect = model->defects[k];
    for (double r : kRadii) {
      const double count = std::clamp(std::ceil(40.0 / (1.0 - r * std::abs(a))), 256.0, static_cast<double>(1 << 20));
      const auto m = static_cast<std::size_t>(count);
      CompensatedSum acc;
      for (std::size_t t = 0; t < m; ++t) {
        const Complex z = std::polar(r, kTwoPi * static_cast<double>(t) / count);
        acc.add(defect / std::norm(one_minus_conj_product(a, z)));
      }
      worst[k] = std::max(worst[k], acc.value() / count);
    }
  });
  rep.l_one_max = *std::max_element(worst.begin(), worst.end());
  return rep;
}

std::vector<Complex> vgh_probe_grid(const ClusterPartition& part) {
  std::vector<Complex> grid{Complex{}};
  for (const Cluster& c : part.clusters) {
    for (const DiskPoint& z : c.points.points()) grid.push_back(z.value());
    const EuclideanCircle circle = psh_disk_circle(c.anchor, 0.5);
    for (int t = 0; t < 16; ++t) grid.push_back(circle.center + std::polar(circle.radius, kTwoPi * t / 16.0));
  }
  return grid;
}

KernelExponents kernel_exponents(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("kernel_exponents: p must be positive");
  if (p >= 1.0) return {2.0, 1.0};
  return {2.0 / p, p};
}

AnalyticFunction build_separating_multiplier(const ClusterPartition& part, std::size_t k, const HermiteJet& target,
                                             double p) {
  if (k >= part.size()) throw std::out_of_range("build_separating_multiplier: cluster index");
  const auto model = skeleton(part, p);
  const NewtonInterpolant pk = multiplier_for(*model, part, k, target);
  if (pk.coefficients().empty()) return AnalyticFunction::constant(0.0);
  return AnalyticFunction(
      [model, pk, k](Complex z) {
        Complex others(1.0);
        for (std::size_t j = 0; j < model->size(); ++j) {
          if (j != k) others *= model->factors[j](z);
        }
        return pk(z) * others;
      },
      "F_k");
}

namespace {

std::shared_ptr<VghModel> full_model(const InterpolationProblem& problem) {
  const ClusterPartition& part = problem.partition;
  if (problem.targets.size() != part.size()) throw std::invalid_argument("one target jet per cluster required");
  auto model = skeleton(part, problem.p);
  std::vector<std::string> errors(part.size());
  parallel_for(part.size(), [&](std::size_t k) {
    try {
      model->multipliers[k] = multiplier_for(*model, part, k, problem.targets[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  });
  for (std::size_t k = 0; k < part.size(); ++k) {
    if (!errors[k].empty()) throw std::invalid_argument("cluster " + std::to_string(k) + ": " + errors[k]);
  }
  return model;
}

std::vector<HermiteJet> model_jets(const VghModel& model, const ClusterPartition& part) {
  std::vector<HermiteJet> out(part.size());
  parallel_for(part.size(), [&](std::size_t k) {
    const Cluster& c = part.clusters[k];
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const auto order = static_cast<std::size_t>(c.points.multiplicity(i));
      const TaylorSeries t = model.taylor(c.points.point(i).value(), order);
      std::vector<Complex> d(order);
      for (std::size_t j = 0; j < order; ++j) d[j] = t.derivative(j);
      out[k].derivatives.push_back(std::move(d));
    }
  });
  return out;
}

}  // namespace

std::vector<HermiteJet> solution_jets(const InterpolationProblem& problem) {
  return model_jets(*full_model(problem), problem.partition);
}

InterpolationSolution vgh_interpolate(const InterpolationProblem& problem, const InterpolateOptions& options) {
  const ClusterPartition& part = problem.partition;
  const auto model = full_model(problem);
  const auto got = model_jets(*model, part);

  double err = 0.0;
  double scale = 1e-2;
  std::size_t worst = 0;
  for (std::size_t k = 0; k < part.size(); ++k) {
    for (std::size_t i = 0; i < got[k].derivatives.size(); ++i) {
      double dj = 1.0;
      for (std::size_t j = 0; j < got[k].derivatives[i].size(); ++j) {
        const double w = dj / factorial(j);
        const double e = std::abs(got[k].derivatives[i][j] - problem.targets[k].derivatives[i][j]) * w;
        if (e > err) {
          err = e;
          worst = k;
        }
        scale = std::max(scale, std::abs(problem.targets[k].derivatives[i][j]) * w);
        dj *= part.d[k];
      }
    }
  }

  InterpolationSolution sol;
  sol.jet_residual = err / scale;
  if (!(sol.jet_residual <= options.residual_limit)) {
    std::ostringstream msg;
    msg << "construction failed: jet residual " << sol.jet_residual << " at cluster " << worst;
    throw InvariantViolation(msg.str());
  }
  sol.solution = AnalyticFunction([model](Complex z) { return (*model)(z); }, "vgh");
  sol.target_norm = xp_norm(part, problem.targets, problem.p);
  if (sol.target_norm == 0.0) return sol;

  std::vector<double> radii = options.radii;
  if (radii.empty()) {
    double depth = 1.0;
    for (const Cluster& c : part.clusters) {
      for (const DiskPoint& z : c.points.points()) depth = std::min(depth, 1.0 - z.modulus());
    }
    radii = hardy_radii_for_depth(depth);
  }
  sol.achieved_norm = hp_norm(sol.solution, problem.p, radii);
  sol.norm_ratio = sol.achieved_norm / sol.target_norm;
  return sol;
}

HinfBound hinf_bound(const ClusterPartition& part, const BlaschkeProduct& b) {
  HinfBound out;
  if (part.size() == 0) return out;
  std::vector<CircularArc> arcs;
  double delta = std::numeric_limits<double>::infinity();
  for (const Cluster& c : part.clusters) {
    const auto a = neighborhood_boundary_arcs(c.points, part.eps);
    arcs.insert(arcs.end(), a.begin(), a.end());
    for (Complex z : neighborhood_boundary_samples(c.points, part.eps)) delta = std::min(delta, std::abs(b(z)));
  }
  if (!(delta >= 1e-12)) throw InvariantViolation("contour touches zero set");
  out.arc_constant = arc_carleson_constant(arcs);
  out.min_on_contour = delta;
  out.bound = out.arc_constant / delta;
  return out;
}

FactsReport verify_facts(const ClusterPartition& part, std::span<const InterpolationSolution> batch,
                         double tolerance) {
  FactsReport rep;
  for (std::size_t a = 0; a < part.size(); ++a) {
    for (std::size_t b = a + 1; b < part.size(); ++b) {
      for (const DiskPoint& x : part.clusters[a].points.points()) {
        for (const DiskPoint& y : part.clusters[b].points.points()) {
          rep.min_cluster_distance = std::min(rep.min_cluster_distance, psh_distance(x, y));
        }
      }
    }
  }
  if (part.size() > 1 && rep.min_cluster_distance < 2.0 * part.eps) {
    rep.separation = false;
    rep.violations.push_back("clusters closer than 2 eps");
  }

  if (!batch.empty()) {
    rep.full_ratio = batch[0].norm_ratio;
    for (std::size_t i = 1; i < batch.size(); ++i) {
      rep.max_subset_ratio = std::max(rep.max_subset_ratio, batch[i].norm_ratio);
      if (batch[i].norm_ratio > tolerance * rep.full_ratio) {
        rep.subsequence = false;
        rep.violations.push_back("subset " + std::to_string(i) + " ratio exceeds the full ratio");
      }
    }
  }

  for (const Cluster& c : part.clusters) rep.max_cluster_size = std::max(rep.max_cluster_size, c.points.total_count());
  if (part.size() > 0) {
    rep.cardinality_cap = max_local_count(part.blaschke(), part.r_max);
    if (rep.max_cluster_size > rep.cardinality_cap) {
      rep.cardinality = false;
      rep.violations.push_back("cluster larger than the local count cap");
    }
  }
  return rep;
}

}  // namespace blaschke_lab
