#include "blaschke_lab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blaschke_lab/parallel.hpp"

namespace blaschke_lab {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

QuadratureGrid QuadratureGrid::make(const Options& opt) {
  if (opt.panels < 2 || opt.nodes_per_panel < 1 || !(opt.boundary_gap > 0.0 && opt.boundary_gap < 1.0)) {
    throw std::invalid_argument("QuadratureGrid: invalid options");
  }
  std::vector<double> x, w;
  gauss_legendre(opt.nodes_per_panel, x, w);

  // Breakpoints in s = 1 - r: 1 = s_0 > s_1 > ... > s_{P-1} = gap > s_P = 0.
  const int geometric = opt.panels - 1;
  std::vector<double> s(static_cast<std::size_t>(opt.panels + 1));
  for (int i = 0; i <= geometric; ++i) s[static_cast<std::size_t>(i)] = std::pow(opt.boundary_gap, static_cast<double>(i) / geometric);
  s.back() = 0.0;

  QuadratureGrid g;
  for (int p = 0; p < opt.panels; ++p) {
    const double hi = s[static_cast<std::size_t>(p)];
    const double lo = s[static_cast<std::size_t>(p + 1)];
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (int k = 0; k < opt.nodes_per_panel; ++k) {
      const double sk = mid + half * x[static_cast<std::size_t>(k)];
      const double r = 1.0 - sk;
      const double count = std::ceil(opt.angular_factor / sk);
      const int angular = static_cast<int>(std::clamp(count, static_cast<double>(opt.min_angular),
                                                      static_cast<double>(opt.max_angular)));
      g.rings_.push_back({r, 2.0 * std::numbers::pi * r * half * w[static_cast<std::size_t>(k)], angular});
    }
  }
  std::sort(g.rings_.begin(), g.rings_.end(), [](const RadialNode& a, const RadialNode& b) { return a.r < b.r; });
  return g;
}

QuadratureGrid QuadratureGrid::standard() { return make(Options{}); }

QuadratureGrid QuadratureGrid::coarse() {
  Options o;
  o.panels = 40;
  o.nodes_per_panel = 3;
  o.boundary_gap = 1e-5;
  o.angular_factor = 8.0;
  o.min_angular = 32;
  o.max_angular = 1 << 11;
  return make(o);
}

double QuadratureGrid::total_weight() const {
  CompensatedSum s;
  for (const auto& ring : rings_) s.add(ring.weight);
  return s.value();
}

long QuadratureGrid::evaluations() const {
  long n = 0;
  for (const auto& ring : rings_) n += ring.angular;
  return n;
}

double QuadratureGrid::integrate(const std::function<double(Complex)>& integrand) const {
  std::vector<double> ring_values(rings_.size(), 0.0);
  parallel_for(rings_.size(), [&](std::size_t i) {
    const RadialNode& ring = rings_[i];
    CompensatedSum acc;
    const double step = 2.0 * std::numbers::pi / ring.angular;
    for (int t = 0; t < ring.angular; ++t) {
      // Half-step offset keeps nodes off the positive real axis.
      acc.add(integrand(std::polar(ring.r, (t + 0.5) * step)));
    }
    ring_values[i] = ring.weight * acc.value() / ring.angular;
  });
  CompensatedSum total;
  for (double v : ring_values) total.add(v);
  return total.value();
}

}  // namespace blaschke_lab
