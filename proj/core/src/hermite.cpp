#include "blaschke_lab/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace blaschke_lab {

TaylorSeries NewtonInterpolant::basis_factor(std::size_t l, Complex z0, std::size_t order) const {
  const Complex x = nodes_[l];
  const TaylorSeries z = TaylorSeries::variable(z0, order);
  TaylorSeries num = z - TaylorSeries::constant(x, order);
  if (basis_ == Basis::polynomial) return num;
  const TaylorSeries den = TaylorSeries::constant(1.0, order) - std::conj(x) * z;
  return num / den;
}

NewtonInterpolant::NewtonInterpolant(const std::vector<TaylorData>& data, Basis basis) : basis_(basis) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].coeffs.empty()) throw std::invalid_argument("NewtonInterpolant: empty jet");
    for (std::size_t j = 0; j < i; ++j) {
      if (data[i].at == data[j].at) throw std::invalid_argument("NewtonInterpolant: repeated node");
    }
  }
  for (const TaylorData& d : data) {
    const std::size_t m = d.coeffs.size();
    const std::size_t first = nodes_.size();
    for (std::size_t j = 0; j < m; ++j) nodes_.push_back(d.at);
    coeff_.resize(nodes_.size());
    // Taylor series about d.at of the running product e_0 ... e_{l-1}.
    TaylorSeries running = TaylorSeries::constant(1.0, m);
    TaylorSeries partial(m);  // sum_{l < first} c_l N_l
    for (std::size_t l = 0; l < first; ++l) {
      partial += coeff_[l] * running;
      running = running * basis_factor(l, d.at, m);
    }
    // Running now vanishes to order 0 at d.at; each further repeated factor
    // raises the order by one.
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t l = first + j;
      const Complex lead = running[j];
      coeff_[l] = (d.coeffs[j] - partial[j]) / lead;
      partial += coeff_[l] * running;
      running = running * basis_factor(l, d.at, m);
    }
  }
}

Complex NewtonInterpolant::operator()(Complex z) const {
  Complex acc{};
  for (std::size_t i = coeff_.size(); i-- > 0;) {
    if (i + 1 < coeff_.size()) {
      const Complex x = nodes_[i];
      Complex e = z - x;
      if (basis_ == Basis::moebius) e /= 1.0 - std::conj(x) * z;
      acc *= e;
    }
    acc += coeff_[i];
  }
  return acc;
}

TaylorSeries NewtonInterpolant::taylor(Complex z0, std::size_t order) const {
  TaylorSeries acc(order);
  for (std::size_t i = coeff_.size(); i-- > 0;) {
    if (i + 1 < coeff_.size()) acc = acc * basis_factor(i, z0, order);
    acc += TaylorSeries::constant(coeff_[i], order);
  }
  return acc;
}

double NewtonInterpolant::coefficient_l1() const {
  double s = 0.0;
  for (Complex c : coeff_) s += std::abs(c);
  return s;
}

}  // namespace blaschke_lab
