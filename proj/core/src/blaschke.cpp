#include "blaschke_lab/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace blaschke_lab {

namespace {

Complex unimodular(Complex a) { return std::conj(a) / std::abs(a); }

Complex int_power(Complex x, int m) {
  Complex r = 1.0;
  for (int i = 0; i < m; ++i) r *= x;
  return r;
}

// Derivative of a single factor.
Complex factor_derivative(Complex a, Complex z) {
  if (a == Complex{}) return 1.0;
  const Complex d = one_minus_conj_product(a, z);
  return -unimodular(a) * (1.0 - std::norm(a)) / (d * d);
}

}  // namespace

Complex blaschke_factor(Complex a, Complex z) {
  if (a == Complex{}) return z;
  return unimodular(a) * ((a - z) / one_minus_conj_product(a, z));
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex r = 1.0;
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    r *= int_power(blaschke_factor(zeros_.point(k).value(), z), zeros_.multiplicity(k));
  }
  return r;
}

double BlaschkeProduct::log_abs(Complex z) const {
  double s = 0.0;
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    const Complex a = zeros_.point(k).value();
    const double num = std::abs(a - z);
    if (num == 0.0) return -std::numeric_limits<double>::infinity();
    const double term = a == Complex{} ? std::log(num)
                                       : std::log(num) - std::log(std::abs(one_minus_conj_product(a, z)));
    s += zeros_.multiplicity(k) * term;
  }
  return s;
}

Complex BlaschkeProduct::derivative(Complex z) const {
  const std::size_t n = zeros_.size();
  if (n == 0) return 0.0;
  std::vector<Complex> g(n), dg(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = zeros_.point(k).value();
    const int m = zeros_.multiplicity(k);
    const Complex f = blaschke_factor(a, z);
    g[k] = int_power(f, m);
    dg[k] = static_cast<double>(m) * int_power(f, m - 1) * factor_derivative(a, z);
  }
  std::vector<Complex> suffix(n + 1, 1.0);
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * g[k];
  Complex prefix = 1.0;
  Complex total{};
  for (std::size_t k = 0; k < n; ++k) {
    total += prefix * dg[k] * suffix[k + 1];
    prefix *= g[k];
  }
  return total;
}

TaylorSeries BlaschkeProduct::taylor(Complex z0, std::size_t order) const {
  TaylorSeries r = TaylorSeries::constant(1.0, order);
  const TaylorSeries zs = TaylorSeries::variable(z0, order);
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    const Complex a = zeros_.point(k).value();
    TaylorSeries f;
    if (a == Complex{}) {
      f = zs;
    } else {
      const TaylorSeries num = TaylorSeries::constant(a, order) - zs;
      const TaylorSeries den = TaylorSeries::constant(1.0, order) - zs * std::conj(a);
      f = (num / den) * unimodular(a);
    }
    r = r * pow(f, zeros_.multiplicity(k));
  }
  return r;
}

Complex BlaschkeProduct::deleted_product(std::size_t j) const {
  if (j >= zeros_.size()) throw std::out_of_range("deleted_product: index out of range");
  if (zeros_.multiplicity(j) > 1) return 0.0;
  const Complex zj = zeros_.point(j).value();
  Complex r = 1.0;
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    if (k == j) continue;
    r *= int_power(blaschke_factor(zeros_.point(k).value(), zj), zeros_.multiplicity(k));
  }
  return r;
}

SeparationReport separation_report(const BlaschkeProduct& b) {
  const FiniteSequence& z = b.zeros();
  if (z.empty()) throw std::invalid_argument("separation_report: empty sequence");
  SeparationReport rep;
  rep.per_point.resize(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    rep.per_point[j] = std::abs(b.deleted_product(j));
    rep.delta = std::min(rep.delta, rep.per_point[j]);
    const double dp = z.point(j).defect() * std::abs(b.derivative(z.point(j).value()));
    rep.delta_prime = std::min(rep.delta_prime, dp);
    if (z.multiplicity(j) > 1) rep.discreteness = 0.0;
    for (std::size_t k = j + 1; k < z.size(); ++k) {
      rep.discreteness = std::min(rep.discreteness, psh_distance(z.point(j), z.point(k)));
    }
  }
  return rep;
}

long local_zero_count(const BlaschkeProduct& b, DiskPoint center, double r) {
  const FiniteSequence& z = b.zeros();
  long count = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (psh_distance(z.point(k), center) < r) count += z.multiplicity(k);
  }
  return count;
}

std::vector<DiskPoint> local_probe_grid(const FiniteSequence& s, double radius, double pitch) {
  std::vector<DiskPoint> out;
  if (!(pitch > 0.0) || !(radius > 0.0)) return out;
  const int half = static_cast<int>(std::floor(radius / pitch));
  for (const DiskPoint& z : s.points()) {
    const MoebiusMap phi(z);
    for (int ix = -half; ix <= half; ++ix) {
      for (int iy = -half; iy <= half; ++iy) {
        const Complex w(ix * pitch, iy * pitch);
        if ((ix == 0 && iy == 0) || !(std::abs(w) < radius)) continue;
        const Complex c = phi(w);
        if (std::abs(c) < 1.0 - kBoundaryFloor) out.emplace_back(c);
      }
    }
  }
  return out;
}

long max_local_count(const BlaschkeProduct& b, double r, bool with_grid) {
  const FiniteSequence& z = b.zeros();
  long best = 0;
  for (const DiskPoint& c : z.points()) best = std::max(best, local_zero_count(b, c, r));
  if (with_grid) {
    for (const DiskPoint& c : local_probe_grid(z, r, r / 4.0)) {
      best = std::max(best, local_zero_count(b, c, r));
    }
  }
  return best;
}

std::vector<std::vector<std::size_t>> partition_separated_indices(const FiniteSequence& s, double sep) {
  if (!(sep > 0.0 && sep < 1.0)) throw std::invalid_argument("partition_separated: sep must lie in (0, 1)");
  if (!s.all_simple()) throw InvariantViolation("inseparable multiplicity");
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s.point(a).modulus() < s.point(b).modulus();
  });
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t i : order) {
    bool placed = false;
    for (auto& part : parts) {
      const bool fits = std::all_of(part.begin(), part.end(), [&](std::size_t j) {
        return psh_distance(s.point(i), s.point(j)) > sep;
      });
      if (fits) {
        part.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) parts.push_back({i});
  }
  return parts;
}

std::vector<FiniteSequence> partition_separated(const FiniteSequence& s, double sep) {
  std::vector<FiniteSequence> out;
  for (const auto& idx : partition_separated_indices(s, sep)) out.push_back(s.subsequence(idx));
  return out;
}

double compose_min_on_compact(const BlaschkeProduct& b, DiskPoint center, double rho, int grid) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("compose_min_on_compact: rho must lie in (0, 1)");
  grid = std::max(grid, 1);
  const MoebiusMap phi(center);
  const int angles = std::max(16, 4 * grid);
  double best = std::abs(b(phi(Complex{})));
  for (int i = 1; i <= grid; ++i) {
    const double r = rho * static_cast<double>(i) / grid;
    for (int t = 0; t < angles; ++t) {
      const double theta = 2.0 * std::numbers::pi * t / angles;
      best = std::max(best, std::abs(b(phi(std::polar(r, theta)))));
    }
  }
  return best;
}

}  // namespace blaschke_lab
