#pragma once

#include <string>
#include <vector>

#include <blaschke_lab/disk.hpp>
#include <blaschke_lab/io.hpp>

namespace blaschke_lab::cli {

struct AnalysisOptions {
  double p = 2.0;
  double alpha = 0.0;
  /// Rings of the polar grid in the uniformly-nonzero probe.
  int probe_grid = 16;
  /// Standard quadrature grid instead of the coarse one.
  bool fine = false;
  /// Probe centers: the sequence points with the largest Blaschke sums.
  int max_centers = 32;
  /// Centers used for the (phi_c')^e members of the divisor family.
  int divisor_centers = 8;
};

/// Quantities whose growth under truncation signals failure of the
/// equivalent conditions. Larger is worse for every entry of `scores()`.
struct Indicators {
  long points = 0;
  long total_count = 0;
  double delta = 0.0;
  double delta_prime = 0.0;
  double discreteness = 0.0;
  double carleson = 0.0;
  double carleson_center = 0.0;
  double carleson_length = 0.0;
  double uniform_blaschke = 0.0;
  long local_count = 0;
  double compose_min = 0.0;
  double divisor_ratio = 0.0;
  double mb_lower = 0.0;

  /// (name, value) with larger meaning less bounded.
  std::vector<std::pair<std::string, double>> scores() const;
};

Indicators compute_indicators(const FiniteSequence& s, const AnalysisOptions& opt);

/// Entries sorted by modulus, first half kept (rounded up).
FiniteSequence inner_half(const FiniteSequence& s);

struct Verdict {
  /// pass, fail or n/a
  std::string verdict = "n/a";
  /// agree, disagree or n/a
  std::string consistency = "n/a";
  long growing = 0;
  long bounded = 0;
  std::vector<std::pair<std::string, double>> growth;
};

/// An indicator is growing when its full-to-half ratio exceeds this.
inline constexpr double kGrowthThreshold = 1.25;

Verdict judge(const Indicators& full, const Indicators& half);

/// Indicators, growth ratios and verdict in the fixed report layout.
Report analysis_report(const FiniteSequence& s, const AnalysisOptions& opt, Verdict* verdict_out = nullptr);

}  // namespace blaschke_lab::cli
