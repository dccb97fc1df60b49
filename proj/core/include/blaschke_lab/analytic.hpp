#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/disk.hpp"

namespace blaschke_lab {

struct Factorization;

/// Black-box analytic function on the disk. Evaluators must be pure and
/// safe to call concurrently.
///
/// Two optional annotations steer the numerics:
///  - focus: a point where |f|^p dA concentrates (e.g. a kernel peak). Area
///    quadrature substitutes w = phi_focus(u), which is an exact change of
///    variables that moves the peak to the origin.
///  - factorization: f = B * g with B known, so f / B can be formed
///    symbolically.
class AnalyticFunction {
 public:
  using Evaluator = std::function<Complex(Complex)>;

  AnalyticFunction(Evaluator eval, std::string label, std::optional<Complex> focus = std::nullopt);

  Complex operator()(Complex z) const { return eval_(z); }
  const std::string& label() const { return label_; }
  std::optional<Complex> focus() const { return focus_; }
  const Factorization* factorization() const { return factor_.get(); }

  static AnalyticFunction constant(Complex c);
  /// c_0 + c_1 z + ... (Horner)
  static AnalyticFunction polynomial(std::vector<Complex> coeffs);
  /// lead * prod (z - root)
  static AnalyticFunction polynomial_from_roots(Complex lead, std::vector<Complex> roots);
  static AnalyticFunction blaschke(BlaschkeProduct b);
  /// Analytic branch of (phi_c')^e: ((1-|c|^2)^{1/2} / (1 - conj(c) z))^{2e}
  /// with the principal power of a base of positive real part, so
  /// |f| = |phi_c'|^e exactly. Focus is c.
  static AnalyticFunction moebius_derivative_power(DiskPoint center, double exponent);
  /// ((1 - |a|^2) / (1 - conj(a) z))^{2/p}; its H^p norm is (1 - |a|^2)^{1/p}.
  static AnalyticFunction reproducing_test(DiskPoint a, double p);

  /// Pointwise product, label "f*g". Keeps the focus of either factor.
  AnalyticFunction times(const AnalyticFunction& g) const;

  /// B * g with the factorization recorded.
  static AnalyticFunction blaschke_multiple(const BlaschkeProduct& b, const AnalyticFunction& g);

 private:
  Evaluator eval_;
  std::string label_;
  std::optional<Complex> focus_;
  std::shared_ptr<const Factorization> factor_;
};

struct Factorization {
  BlaschkeProduct blaschke;
  AnalyticFunction cofactor;
};

/// f / B. Symbolic when f was built as blaschke_multiple(B', g) with the
/// same zero list as b; otherwise pointwise division, evaluated at z offset
/// by 1e-7 along a fixed direction when z lies within 1e-7 of a zero (an
/// approximation).
AnalyticFunction quotient(const AnalyticFunction& f, const BlaschkeProduct& b);

}  // namespace blaschke_lab
