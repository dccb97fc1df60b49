#include "blaschke_lab_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include <blaschke_lab/bergman.hpp>
#include <blaschke_lab/blaschke.hpp>
#include <blaschke_lab/carleson.hpp>
#include <blaschke_lab/geninterp.hpp>
#include <blaschke_lab/io.hpp>
#include <blaschke_lab/quadrature.hpp>
#include <blaschke_lab/seqgen.hpp>

#include "blaschke_lab_cli/analysis.hpp"

namespace blaschke_lab::cli {

namespace {

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot write " + path);
    }
    out_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

struct GenOptions {
  std::uint64_t seed = 0;
  std::string output;
  RadialGeometricParams radial;
  CounterexampleParams counter;
  RandomCarlesonParams random;
  UnionParams uni;
  PerturbedParams pert;
};

void add_radial_options(CLI::App* app, RadialGeometricParams& p) {
  app->add_option("--q", p.q, "Geometric ratio in (0, 1)")->required();
  app->add_option("--n", p.n, "Points per ray")->required();
  app->add_option("--rays", p.ray_angles, "Ray angles in radians")->expected(1, -1);
}

void add_random_options(CLI::App* app, RandomCarlesonParams& p) {
  app->add_option("--n", p.n, "Number of points")->required();
  app->add_option("--target-norm", p.target_norm, "Carleson norm cap");
  app->add_option("--min-depth", p.min_depth, "Smallest 1 - |z|");
  app->add_option("--max-depth", p.max_depth, "Largest 1 - |z|");
  app->add_option("--min-separation", p.min_separation, "Pseudohyperbolic exclusion radius");
}

Report partition_report(const FiniteSequence& s, double sep, const std::vector<FiniteSequence>& parts) {
  Report r;
  r.set("partition", "points", static_cast<long>(s.size()));
  r.set("partition", "sep", sep);
  r.set("partition", "parts", static_cast<long>(parts.size()));
  double min_sep = 1.0;
  std::string sizes;
  FiniteSequence merged;
  for (const FiniteSequence& part : parts) {
    sizes += (sizes.empty() ? "" : " ") + std::to_string(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) min_sep = std::min(min_sep, psh_distance(part.point(i), part.point(j)));
    }
    merged = merged.merged_with(part);
  }
  r.set("partition", "sizes", sizes);
  r.set("partition", "min_part_separation", min_sep);
  r.set("partition", "max_local_count", s.empty() ? 0L : max_local_count(BlaschkeProduct(s), sep));
  bool exact = merged.size() == s.size() && merged.total_count() == s.total_count();
  for (std::size_t i = 0; exact && i < s.size(); ++i) {
    exact = std::find(merged.points().begin(), merged.points().end(), s.point(i)) != merged.points().end();
  }
  r.set("partition", "union_exact", exact ? "pass" : "fail");
  return r;
}

// Unit-modulus values at every cluster point; higher derivatives zero.
std::vector<HermiteJet> unit_targets(const ClusterPartition& part, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<HermiteJet> jets;
  for (const Cluster& c : part.clusters) {
    HermiteJet j = zero_jet(c);
    for (auto& d : j.derivatives) {
      d[0] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(rng() >> 11) * 0x1.0p-53);
    }
    jets.push_back(std::move(j));
  }
  return jets;
}

void write_table(const std::string& path, const AnalyticFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << "# re im f_re f_im\n";
  for (double r : {0.5, 0.9, 0.99}) {
    for (int t = 0; t < 256; ++t) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * t / 256.0);
      const Complex v = f(z);
      out << format_double(z.real()) << ' ' << format_double(z.imag()) << ' ' << format_double(v.real()) << ' '
          << format_double(v.imag()) << '\n';
    }
  }
}

int cmd_verify(const std::string& file, const std::string& level, std::ostream& out) {
  const FiniteSequence s = read_sequence_file(file);
  const bool full = level == "full";
  AnalysisOptions opt;
  opt.fine = full;
  if (!full) {
    opt.max_centers = 8;
    opt.divisor_centers = 2;
  }
  Verdict v;
  Report r = analysis_report(s, opt, &v);
  bool ok = v.consistency != "disagree";

  // Derivative identity (1 - |z_j|^2)|B'(z_j)| = |B_j(z_j)|.
  std::string identity = "n/a";
  if (!s.empty() && s.all_simple()) {
    const BlaschkeProduct b(s);
    double worst = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      const double lhs = s.point(j).defect() * std::abs(b.derivative(s.point(j).value()));
      const double rhs = std::abs(b.deleted_product(j));
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
    }
    identity = worst <= 1e-10 ? "pass" : "fail";
    r.set("checks", "derivative_identity_error", worst);
  } else {
    r.set("checks", "derivative_identity_error", 0.0);
  }
  r.set("checks", "derivative_identity", identity);

  std::string partition = "n/a";
  if (!s.empty() && s.all_simple()) {
    const auto parts = partition_separated(s, 0.5);
    const Report pr = partition_report(s, 0.5, parts);
    const bool good = std::stod(pr.get("partition", "min_part_separation")) > 0.5 &&
                      pr.get("partition", "union_exact") == "pass" &&
                      static_cast<long>(parts.size()) <= std::stol(pr.get("partition", "max_local_count"));
    partition = good ? "pass" : "fail";
  }
  r.set("checks", "partition", partition);

  std::string interpolation = "n/a";
  if (!s.empty()) {
    try {
      const ClusterPartition part = cluster_sequence(s, 0.05, 0.9);
      InterpolationProblem prob{part, unit_targets(part, 1), 2.0};
      InterpolateOptions io;
      if (!full) io.radii = {0.9};
      const InterpolationSolution sol = vgh_interpolate(prob, io);
      interpolation = sol.jet_residual <= 1e-8 && std::isfinite(sol.norm_ratio) ? "pass" : "fail";
      r.set("checks", "jet_residual", sol.jet_residual);
    } catch (const InvariantViolation& e) {
      r.set("checks", "interpolation_note", e.what());
    }
  }
  r.set("checks", "interpolation", interpolation);

  if (full && !s.empty()) {
    const QuadratureGrid grid = QuadratureGrid::standard();
    double worst = 0.0;
    for (Complex c : {Complex(0.0), Complex(0.5), Complex(0.0, 0.9), Complex(0.99)}) {
      worst = std::max(worst, std::abs(kernel_integral(DiskPoint(c), grid) / std::numbers::pi - 1.0));
    }
    r.set("checks", "kernel_normalization", worst <= 1e-6 ? "pass" : "fail");
    ok = ok && worst <= 1e-6;
  } else {
    r.set("checks", "kernel_normalization", "n/a");
  }

  ok = ok && identity != "fail" && partition != "fail" && interpolation != "fail";
  std::string summary = "inconsistent";
  if (v.verdict == "n/a") summary = "n/a";
  else if (v.consistency == "agree") summary = v.verdict == "pass" ? "consistently bounded" : "consistently unbounded";
  r.set("verdict", "summary", summary);
  r.set("verdict", "battery", ok ? "pass" : "fail");
  r.write(out);
  return ok ? kOk : kBatteryFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blaschke product and interpolating-sequence laboratory", "blaschke-lab"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a sequence file");
  gen_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", gen.seed, "Random seed");
    sub->add_option("-o,--output", gen.output, "Output file (default stdout)");
  };
  auto emit = [&](const GeneratorParams& params) {
    return [&, params]() {
      const FiniteSequence s = generate(GeneratorSpec{params, gen.seed});
      Sink sink(gen.output, out);
      write_sequence(sink.stream(), s);
      return static_cast<int>(kOk);
    };
  };
  auto* radial = gen_cmd->add_subcommand("radial-geometric", "1 - q^k on rays");
  add_radial_options(radial, gen.radial);
  add_common(radial);
  radial->callback([&] { action = [&] { return emit(gen.radial)(); }; });

  auto* counter = gen_cmd->add_subcommand("counterexample", "zeta_n = 1 - gap^n repeated n times");
  counter->add_option("--n-max", gen.counter.n_max, "Deepest level")->required();
  counter->add_option("--base-gap", gen.counter.base_gap, "gap in (0, 1)");
  counter->add_flag("--split", gen.counter.split, "Spread the n copies into distinct points");
  add_common(counter);
  counter->callback([&] { action = [&] { return emit(gen.counter)(); }; });

  auto* random = gen_cmd->add_subcommand("random-carleson", "Rejection-sampled points under a Carleson cap");
  add_random_options(random, gen.random);
  add_common(random);
  random->callback([&] { action = [&] { return emit(gen.random)(); }; });

  auto* uni = gen_cmd->add_subcommand("union", "Rotated copies of a radial-geometric base");
  add_radial_options(uni, gen.radial);
  uni->add_option("--copies", gen.uni.copies, "Number of copies")->required();
  uni->add_option("--rotation", gen.uni.rotation_step, "Rotation between copies (radians)");
  uni->add_option("--jitter", gen.uni.jitter, "Per-point angular jitter (radians)");
  add_common(uni);
  uni->callback([&] {
    action = [&] {
      gen.uni.base = std::make_shared<GeneratorSpec>(GeneratorSpec{gen.radial, gen.seed});
      return emit(gen.uni)();
    };
  });

  auto* pert = gen_cmd->add_subcommand("perturbed", "Random Carleson base with satellites");
  add_random_options(pert, gen.random);
  pert->add_option("--satellite-probability", gen.pert.satellite_probability, "Chance of satellites per point");
  pert->add_option("--max-satellites", gen.pert.max_satellites, "Satellites per point at most");
  pert->add_option("--radius", gen.pert.radius, "Satellite pseudohyperbolic distance");
  pert->add_option("--multiplicity-probability", gen.pert.multiplicity_probability, "Chance of a double point");
  add_common(pert);
  pert->callback([&] {
    action = [&] {
      gen.pert.base = std::make_shared<GeneratorSpec>(GeneratorSpec{gen.random, gen.seed});
      return emit(gen.pert)();
    };
  });

  // analyze
  std::string file;
  std::string output;
  AnalysisOptions aopt;
  auto* analyze = app.add_subcommand("analyze", "Run the analysis battery on a sequence file");
  analyze->add_option("file", file, "Sequence file")->required();
  analyze->add_option("--p", aopt.p, "Exponent for the Bergman probes");
  analyze->add_option("--alpha", aopt.alpha, "Bergman weight exponent (> -1)");
  analyze->add_option("--probe-grid", aopt.probe_grid, "Rings in the uniformly-nonzero probe");
  analyze->add_flag("--fine", aopt.fine, "Use the standard quadrature grid");
  analyze->add_option("-o,--output", output, "Report file (default stdout)");
  analyze->callback([&] {
    action = [&] {
      if (aopt.probe_grid < 1) throw std::invalid_argument("--probe-grid must be positive");
      const FiniteSequence s = read_sequence_file(file);
      Sink sink(output, out);
      analysis_report(s, aopt, nullptr).write(sink.stream());
      return static_cast<int>(kOk);
    };
  });

  // partition
  double sep = 0.5;
  std::string prefix;
  auto* partition = app.add_subcommand("partition", "Split into uniformly discrete parts");
  partition->add_option("file", file, "Sequence file")->required();
  partition->add_option("--sep", sep, "Pseudohyperbolic separation in (0, 1)");
  partition->add_option("-o,--output", prefix, "Prefix for <prefix>.part<k>.txt and <prefix>.report.txt");
  partition->callback([&] {
    action = [&] {
      const FiniteSequence s = read_sequence_file(file);
      const auto parts = partition_separated(s, sep);
      const Report r = partition_report(s, sep, parts);
      if (!prefix.empty()) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
          write_sequence_file(prefix + ".part" + std::to_string(k) + ".txt", parts[k]);
        }
        std::ofstream rep(prefix + ".report.txt");
        r.write(rep);
      }
      r.write(out);
      return static_cast<int>(kOk);
    };
  });

  // interpolate
  std::string targets_file;
  std::string table;
  double p = 2.0;
  double eps = 0.05;
  double r_max = 0.9;
  auto* interp = app.add_subcommand("interpolate", "Solve a cluster interpolation problem");
  interp->add_option("file", file, "Sequence file")->required();
  interp->add_option("targets", targets_file, "Target file")->required();
  interp->add_option("--p", p, "Hardy exponent (inf allowed)");
  interp->add_option("--eps", eps, "Neighborhood radius");
  interp->add_option("--r-max", r_max, "Cluster diameter cap");
  interp->add_option("-o,--output", output, "Report file (default stdout)");
  interp->add_option("--table", table, "Write sampled values 're im f_re f_im' here");
  interp->callback([&] {
    action = [&] {
      const FiniteSequence s = read_sequence_file(file);
      const ClusterPartition part = cluster_sequence(s, eps, r_max);
      std::ifstream tin(targets_file);
      if (!tin) throw ParseError("cannot open " + targets_file);
      InterpolationProblem prob{part, read_targets(tin, part), p};
      const InterpolationSolution sol = vgh_interpolate(prob);
      Report r;
      r.set("problem", "points", static_cast<long>(s.size()));
      r.set("problem", "clusters", static_cast<long>(part.size()));
      r.set("problem", "eps", part.eps);
      r.set("problem", "r_max", part.r_max);
      r.set("problem", "p", p);
      r.set("solution", "jet_residual", sol.jet_residual);
      r.set("solution", "achieved_norm", sol.achieved_norm);
      r.set("solution", "target_norm", sol.target_norm);
      r.set("solution", "norm_ratio", sol.norm_ratio);
      r.set("solution", "hinf_bound", hinf_bound_estimate(part, part.blaschke()));
      for (std::size_t k = 0; k < part.size(); ++k) {
        std::ostringstream pts;
        for (std::size_t i = 0; i < part.clusters[k].points.size(); ++i) {
          const DiskPoint z = part.clusters[k].points.point(i);
          pts << (i ? "; " : "") << format_double(z.re()) << ' ' << format_double(z.im()) << ' '
              << part.clusters[k].points.multiplicity(i);
        }
        r.set("clusters", std::to_string(k), pts.str());
      }
      Sink sink(output, out);
      r.write(sink.stream());
      if (!table.empty()) write_table(table, sol.solution);
      return static_cast<int>(kOk);
    };
  });

  // verify
  std::string level = "quick";
  auto* verify = app.add_subcommand("verify", "Acceptance battery on one sequence; exit 1 on failure");
  verify->add_option("file", file, "Sequence file")->required();
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("-o,--output", output, "Report file (default stdout)");
  verify->callback([&] {
    action = [&] {
      Sink sink(output, out);
      return cmd_verify(file, level, sink.stream());
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : static_cast<int>(kUsage);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace blaschke_lab::cli
