#include "blaschke_lab/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "blaschke_lab/parallel.hpp"

namespace blaschke_lab {

namespace {

void check_exponent(double p, const char* who) {
  if (!(p > 0.0)) throw std::invalid_argument(std::string(who) + ": p must be positive");
}

// |x|^p with 0^p = 0 and no overflow for huge p.
double abs_pow(Complex x, double p) {
  const double a = std::abs(x);
  return a == 0.0 ? 0.0 : std::pow(a, p);
}

}  // namespace

std::vector<double> default_hardy_radii() { return {0.9, 0.99, 0.999, 0.9999}; }

std::vector<double> hardy_radii_for_depth(double depth) {
  std::vector<double> radii;
  double gap = 0.1;
  while (true) {
    radii.push_back(1.0 - gap);
    if (gap < depth / 10.0 || gap <= 1.5e-6) break;
    gap /= 10.0;
  }
  return radii;
}

double circle_mean(const AnalyticFunction& f, double p, double r) {
  check_exponent(p, "circle_mean");
  const double count = std::clamp(std::ceil(16.0 / (1.0 - r)), 256.0, static_cast<double>(1 << 18));
  const auto n = static_cast<std::size_t>(count);
  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> part(chunks, 0.0);
  const bool sup = std::isinf(p);
  parallel_for(chunks, [&](std::size_t c) {
    CompensatedSum acc;
    double m = 0.0;
    const std::size_t end = std::min(n, (c + 1) * kChunk);
    for (std::size_t t = c * kChunk; t < end; ++t) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(t) / count);
      const Complex v = f(z);
      if (sup) {
        m = std::max(m, std::abs(v));
      } else {
        acc.add(abs_pow(v, p));
      }
    }
    part[c] = sup ? m : acc.value();
  });
  if (sup) return *std::max_element(part.begin(), part.end());
  CompensatedSum total;
  for (double v : part) total.add(v);
  return std::pow(total.value() / count, 1.0 / p);
}

double hp_norm(const AnalyticFunction& f, double p, std::span<const double> radii) {
  check_exponent(p, "hp_norm");
  if (radii.empty()) throw std::invalid_argument("hp_norm: no radii");
  double prev = -1.0;
  double best = 0.0;
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0) || !(r > prev)) throw std::invalid_argument("hp_norm: radii must increase in [0, 1)");
    prev = r;
    best = std::max(best, circle_mean(f, p, r));
  }
  return best;
}

double hp_norm(const AnalyticFunction& f, double p) {
  const auto radii = default_hardy_radii();
  return hp_norm(f, p, radii);
}

double ap_norm(const AnalyticFunction& f, double p, double alpha, const QuadratureGrid& g) {
  check_exponent(p, "ap_norm");
  if (!(alpha > -1.0)) throw std::invalid_argument("ap_norm: alpha must exceed -1");
  double integral = 0.0;
  if (const auto focus = f.focus(); focus && *focus != Complex{}) {
    const MoebiusMap phi{DiskPoint(*focus)};
    const Complex c = *focus;
    integral = g.integrate([&](Complex u) {
      const double weight = alpha == 0.0 ? 1.0 : std::pow(psh_complement(c, u), alpha);
      return abs_pow(f(phi(u)), p) * phi.jacobian(u) * weight;
    });
  } else {
    integral = g.integrate([&](Complex w) {
      const double weight = alpha == 0.0 ? 1.0 : std::pow(1.0 - std::norm(w), alpha);
      return abs_pow(f(w), p) * weight;
    });
  }
  return std::pow(integral, 1.0 / p);
}

double kernel_integral(DiskPoint zeta, const QuadratureGrid& g) {
  const MoebiusMap phi(zeta);
  return g.integrate([&](Complex w) { return phi.jacobian(w); });
}

double jensen_area_residual(const AnalyticFunction& f, const FiniteSequence& zeros, const QuadratureGrid& g) {
  const Complex f0 = f(Complex{});
  if (f0 == Complex{}) throw std::invalid_argument("shift required");
  double lhs = std::log(std::abs(f0));
  // (1/pi) integral log|w - a| dA(w) = (|a|^2 - 1) / 2 for |a| < 1.
  double subtracted_mean = 0.0;
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    const double m = zeros.multiplicity(j);
    const double a2 = std::norm(zeros.point(j).value());
    lhs += m * (-0.5 * std::log(a2) - 0.5 * (1.0 - a2));
    subtracted_mean += m * 0.5 * (a2 - 1.0);
  }
  const double smooth = g.integrate([&](Complex w) {
    double h = std::log(std::abs(f(w)));
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      h -= zeros.multiplicity(j) * std::log(std::abs(w - zeros.point(j).value()));
    }
    return h;
  });
  const double rhs = smooth / std::numbers::pi + subtracted_mean;
  return lhs - rhs;
}

DivisionBound pointwise_division_bound(const AnalyticFunction& f, const BlaschkeProduct& b, DiskPoint zeta,
                                       double p, double C, const QuadratureGrid& g) {
  check_exponent(p, "pointwise_division_bound");
  const AnalyticFunction q = quotient(f, b);
  DivisionBound out;
  out.lhs = abs_pow(q(zeta.value()), p / 2.0);
  const MoebiusMap phi(zeta);
  const double integral = g.integrate([&](Complex u) { return abs_pow(f(phi(u)), p / 2.0); });
  out.rhs = std::exp(C * p / 2.0) / std::numbers::pi * integral;
  out.margin = out.rhs - out.lhs;
  out.holds = out.lhs <= out.rhs;
  return out;
}

double universal_divisor_ratio(const BlaschkeProduct& b, std::span<const AnalyticFunction> family, double p,
                               double alpha, const QuadratureGrid& g) {
  double best = 0.0;
  for (const AnalyticFunction& f : family) {
    const double denom = ap_norm(f, p, alpha, g);
    if (denom == 0.0) continue;
    best = std::max(best, ap_norm(quotient(f, b), p, alpha, g) / denom);
  }
  return best;
}

double mb_lower_probe(const BlaschkeProduct& b, std::span<const DiskPoint> centers, double p,
                      const QuadratureGrid& g) {
  check_exponent(p, "mb_lower_probe");
  if (b.zeros().empty()) return 1.0;
  double best = std::numeric_limits<double>::infinity();
  for (const DiskPoint& c : centers) {
    const MoebiusMap phi(c);
    const double integral = g.integrate([&](Complex u) { return std::exp(p * b.log_abs(phi(u))); });
    best = std::min(best, std::pow(integral / std::numbers::pi, 1.0 / p));
  }
  return centers.empty() ? 1.0 : best;
}

std::vector<AnalyticFunction> divisor_test_family(const BlaschkeProduct& b, std::span<const DiskPoint> centers,
                                                  double p, double alpha) {
  std::vector<AnalyticFunction> family;
  family.push_back(AnalyticFunction::blaschke_multiple(b, AnalyticFunction::constant(1.0)));
  family.push_back(AnalyticFunction::blaschke_multiple(b, AnalyticFunction::polynomial({0.0, 1.0})));
  for (const DiskPoint& c : centers) {
    family.push_back(AnalyticFunction::blaschke_multiple(
        b, AnalyticFunction::moebius_derivative_power(c, (2.0 + alpha) / p)));
  }
  return family;
}

}  // namespace blaschke_lab
