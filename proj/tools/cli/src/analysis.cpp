#include "blaschke_lab_cli/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <blaschke_lab/bergman.hpp>
#include <blaschke_lab/blaschke.hpp>
#include <blaschke_lab/carleson.hpp>
#include <blaschke_lab/quadrature.hpp>

namespace blaschke_lab::cli {

namespace {

// Sequence points ordered by decreasing sum_j m_j (1 - psi(c, z_j)^2).
std::vector<DiskPoint> ranked_centers(const FiniteSequence& s, int limit) {
  std::vector<std::pair<double, std::size_t>> score;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const DiskPoint c = s.point(i);
    score.emplace_back(uniform_blaschke_sup(s, std::span<const DiskPoint>(&c, 1)), i);
  }
  std::stable_sort(score.begin(), score.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<DiskPoint> out;
  for (std::size_t i = 0; i < score.size() && static_cast<int>(i) < limit; ++i) out.push_back(s.point(score[i].second));
  return out;
}

double inverse(double x) { return x > 0.0 ? 1.0 / x : std::numeric_limits<double>::infinity(); }

}  // namespace

std::vector<std::pair<std::string, double>> Indicators::scores() const {
  return {
      {"uniform_blaschke", uniform_blaschke},
      {"carleson", carleson},
      {"local_count", static_cast<double>(local_count)},
      {"inverse_compose_min", inverse(compose_min)},
      {"inverse_mb_lower", inverse(mb_lower)},
      {"divisor_ratio", divisor_ratio},
  };
}

FiniteSequence inner_half(const FiniteSequence& s) {
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return s.point(a).modulus() < s.point(b).modulus(); });
  idx.resize((s.size() + 1) / 2);
  return s.subsequence(idx);
}

Indicators compute_indicators(const FiniteSequence& s, const AnalysisOptions& opt) {
  Indicators ind;
  ind.points = static_cast<long>(s.size());
  ind.total_count = s.total_count();
  if (s.empty()) return ind;

  const BlaschkeProduct b(s);
  const SeparationReport sep = separation_report(b);
  ind.delta = sep.delta;
  ind.delta_prime = sep.delta_prime;
  ind.discreteness = sep.discreteness;

  const CarlesonNormReport cn = carleson_norm(s);
  ind.carleson = cn.norm;
  ind.carleson_center = cn.maximizing_square.arc_center;
  ind.carleson_length = cn.maximizing_square.arc_length;

  const std::vector<DiskPoint> centers = ranked_centers(s, opt.max_centers);
  ind.uniform_blaschke = uniform_blaschke_sup(s, s.points());
  ind.local_count = max_local_count(b, 0.5);

  ind.compose_min = std::numeric_limits<double>::infinity();
  for (const DiskPoint& c : centers) {
    ind.compose_min = std::min(ind.compose_min, compose_min_on_compact(b, c, 0.5, opt.probe_grid));
  }

  const QuadratureGrid grid = opt.fine ? QuadratureGrid::standard() : QuadratureGrid::coarse();
  ind.mb_lower = mb_lower_probe(b, centers, opt.p, grid);
  const std::vector<DiskPoint> divisor_centers(
      centers.begin(), centers.begin() + std::min<std::ptrdiff_t>(opt.divisor_centers, std::ssize(centers)));
  const auto family = divisor_test_family(b, divisor_centers, opt.p, opt.alpha);
  ind.divisor_ratio = universal_divisor_ratio(b, family, opt.p, opt.alpha, grid);
  return ind;
}

Verdict judge(const Indicators& full, const Indicators& half) {
  Verdict v;
  if (full.points < 4) return v;
  const auto a = full.scores();
  const auto h = half.scores();
  for (std::size_t i = 0; i < a.size(); ++i) {
    double ratio = 1.0;
    if (std::isinf(a[i].second) && !std::isinf(h[i].second)) {
      ratio = std::numeric_limits<double>::infinity();
    } else if (h[i].second > 0.0 && std::isfinite(h[i].second)) {
      ratio = a[i].second / h[i].second;
    }
    v.growth.emplace_back(a[i].first, ratio);
    if (ratio > kGrowthThreshold) {
      ++v.growing;
    } else {
      ++v.bounded;
    }
  }
  v.verdict = v.growing == 0 ? "pass" : "fail";
  v.consistency = (v.growing == 0 || v.bounded == 0) ? "agree" : "disagree";
  return v;
}

Report analysis_report(const FiniteSequence& s, const AnalysisOptions& opt, Verdict* verdict_out) {
  const Indicators full = compute_indicators(s, opt);
  Verdict v;
  if (s.size() >= 4) v = judge(full, compute_indicators(inner_half(s), opt));

  Report r;
  r.set("input", "points", full.points);
  r.set("input", "total_count", full.total_count);
  r.set("input", "p", opt.p);
  r.set("input", "alpha", opt.alpha);
  r.set("input", "probe_grid", opt.probe_grid);
  r.set("input", "quadrature", opt.fine ? "standard" : "coarse");
  r.set("separation", "delta", full.delta);
  r.set("separation", "delta_prime", full.delta_prime);
  r.set("separation", "discreteness", full.discreteness);
  r.set("carleson", "norm", full.carleson);
  r.set("carleson", "square_center", full.carleson_center);
  r.set("carleson", "square_length", full.carleson_length);
  r.set("uniform_blaschke", "sup", full.uniform_blaschke);
  r.set("density", "max_local_count_half", full.local_count);
  r.set("uniformly_nonzero", "compose_min", std::isinf(full.compose_min) ? 0.0 : full.compose_min);
  r.set("divisor", "ratio", full.divisor_ratio);
  r.set("multiplication", "mb_lower", full.mb_lower);
  for (const auto& [name, _] : full.scores()) {
    double ratio = 0.0;
    for (const auto& [n, g] : v.growth) {
      if (n == name) ratio = g;
    }
    r.set("growth", name, ratio);
  }
  r.set("verdict", "verdict", v.verdict);
  r.set("verdict", "consistency", v.consistency);
  r.set("verdict", "growing", v.growing);
  r.set("verdict", "bounded", v.bounded);
  if (verdict_out) *verdict_out = v;
  return r;
}

}  // namespace blaschke_lab::cli
