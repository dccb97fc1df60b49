#include "blaschke_lab/analytic.hpp"

#include <cmath>
#include <numbers>

namespace blaschke_lab {

AnalyticFunction::AnalyticFunction(Evaluator eval, std::string label, std::optional<Complex> focus)
    : eval_(std::move(eval)), label_(std::move(label)), focus_(focus) {}

AnalyticFunction AnalyticFunction::constant(Complex c) {
  return AnalyticFunction([c](Complex) { return c; }, "const");
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coeffs) {
  return AnalyticFunction(
      [c = std::move(coeffs)](Complex z) {
        Complex acc{};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
      },
      "poly");
}

AnalyticFunction AnalyticFunction::polynomial_from_roots(Complex lead, std::vector<Complex> roots) {
  return AnalyticFunction(
      [lead, r = std::move(roots)](Complex z) {
        Complex acc = lead;
        for (Complex a : r) acc *= (z - a);
        return acc;
      },
      "poly-roots");
}

AnalyticFunction AnalyticFunction::blaschke(BlaschkeProduct b) {
  return AnalyticFunction([b = std::move(b)](Complex z) { return b(z); }, "blaschke");
}

AnalyticFunction AnalyticFunction::moebius_derivative_power(DiskPoint center, double exponent) {
  const Complex c = center.value();
  const double s = std::sqrt(1.0 - std::norm(c));
  const double q = 2.0 * exponent;
  return AnalyticFunction(
      [c, s, q](Complex z) { return std::pow(s / one_minus_conj_product(c, z), q); },
      "dphi^e", c);
}

AnalyticFunction AnalyticFunction::reproducing_test(DiskPoint a, double p) {
  const Complex c = a.value();
  const double w = 1.0 - std::norm(c);
  const double q = 2.0 / p;
  return AnalyticFunction([c, w, q](Complex z) { return std::pow(w / one_minus_conj_product(c, z), q); },
                          "reproducing", c);
}

AnalyticFunction AnalyticFunction::times(const AnalyticFunction& g) const {
  auto f = *this;
  return AnalyticFunction([f, g](Complex z) { return f(z) * g(z); }, label_ + "*" + g.label_,
                          focus_ ? focus_ : g.focus_);
}

AnalyticFunction AnalyticFunction::blaschke_multiple(const BlaschkeProduct& b, const AnalyticFunction& g) {
  AnalyticFunction out([b, g](Complex z) { return b(z) * g(z); }, "B*" + g.label(), g.focus());
  out.factor_ = std::make_shared<Factorization>(Factorization{b, g});
  return out;
}

AnalyticFunction quotient(const AnalyticFunction& f, const BlaschkeProduct& b) {
  if (const Factorization* fac = f.factorization(); fac && fac->blaschke.zeros() == b.zeros()) {
    return fac->cofactor;
  }
  static constexpr double kOffset = 1e-7;
  const Complex dir = std::polar(1.0, std::numbers::pi / 7.0);
  return AnalyticFunction(
      [f, b, dir](Complex z) {
        for (const DiskPoint& a : b.zeros().points()) {
          if (std::abs(z - a.value()) < kOffset) {
            const Complex w = z + kOffset * dir;
            return f(w) / b(w);
          }
        }
        return f(z) / b(z);
      },
      f.label() + "/B", f.focus());
}

}  // namespace blaschke_lab
