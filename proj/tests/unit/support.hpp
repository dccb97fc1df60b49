#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <blaschke_lab/disk.hpp>

namespace support {

using blaschke_lab::Complex;

// Area-uniform point in |z| <= rmax.
inline Complex random_disk(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = rmax * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

inline double rel_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace support
