// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cell_domains.hpp"
#include "cli.hpp"
#include "hgraph/estimates.hpp"
#include "hgraph/experiments.hpp"
#include "oracles.hpp"

using namespace hgraph;
namespace fs = std::filesystem;

namespace {

const fs::path kScenarios = HGRAPH_SCENARIO_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hgraph");
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

// ---------------------------------------------------------------------------
// Shared random-strip runs (criteria 3, 4 and 5).

struct StripRun {
  std::uint64_t seed;
  double H;
  RunRecord record;
};

const std::vector<StripRun>& strip_runs() {
  static const std::vector<StripRun> runs = [] {
    std::vector<StripRun> out;
    Rng rng(2024);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const double H = rng.uniform(0.75, 1.5);
      out.push_back({seed, H, run_scenario(random_strip_config(seed, H))});
    }
    return out;
  }();
  return runs;
}

// Counts reports with the given names across all strip runs.
Outcome strip_reports(std::initializer_list<const char*> names, int expected_per_run) {
  Outcome o;
  int total = 0, failed = 0, errors = 0;
  for (const auto& run : strip_runs()) {
    if (run.record.error) {
      ++errors;
      o.detail += " [seed " + std::to_string(run.seed) + ": " + *run.record.error + "]";
      continue;
    }
    int seen = 0;
    for (const auto& r : run.record.reports) {
      if (std::find_if(names.begin(), names.end(), [&](const char* n) { return r.name == n; }) == names.end()) continue;
      ++seen;
      ++total;
      if (!r.pass || !r.consistent()) {
        ++failed;
        o.detail += " [seed " + std::to_string(run.seed) + " " + r.name + " measured " + fmt("%.6g", r.measured) +
                    " bound " + fmt("%.6g", r.bound) + "]";
      }
    }
    if (seen != expected_per_run) {
      ++errors;
      o.detail += " [seed " + std::to_string(run.seed) + ": " + std::to_string(seen) + " reports]";
    }
  }
  o.pass = failed == 0 && errors == 0 && total > 0;
  o.detail = std::to_string(total) + " checks on " + std::to_string(strip_runs().size()) + " strips, " +
             std::to_string(failed) + " failed, " + std::to_string(errors) + " run errors" + o.detail;
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  const double H = 1.0, R = 0.5;
  const auto exact = exact_cap(H, R);
  std::vector<double> errors;
  Outcome o;
  double base_seconds = 0.0, u0 = 0.0;
  for (int level = 0; level <= 2; ++level) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = solve_dirichlet(cap_problem(H, R, 40, level));
    if (level == 0) {
      base_seconds = seconds_since(t0);
      u0 = s.interpolate({0.0, 0.0});
      o.detail += std::to_string(s.mesh().triangle_count()) + " triangles in " + fmt("%.2f s", base_seconds) + "; ";
    }
    errors.push_back(hgraph::testing::nodal_error(s, exact));
  }
  const double order = std::min(std::log2(errors[0] / errors[1]), std::log2(errors[1] / errors[2]));
  o.pass = errors[0] <= 5e-3 && std::abs(u0 - (-0.1339746)) <= 5e-3 && order >= 1.5 && base_seconds <= 30.0;
  o.detail += "Linf " + fmt("%.3e", errors[0]) + ", u(0,0) " + fmt("%.7f", u0) + ", order over two refinements " +
              fmt("%.3f", order);
  return o;
}

Outcome criterion2() {
  const double H = 1.0, w = 0.4;
  const auto s = solve_dirichlet(cylinder_problem(H, w, 4.0, 80, 32));
  const auto exact = exact_cylinder(H, w);
  const double err = hgraph::testing::nodal_error(s, [&](Point2 p) { return exact(p.y); });
  const double mid = s.interpolate({2.0, 0.0});
  Outcome o;
  o.pass = err <= 5e-3 && std::abs(mid - (-0.2)) <= 5e-3;
  o.detail = "Linf " + fmt("%.3e", err) + ", midline " + fmt("%.7f", mid);
  return o;
}

Outcome criterion3() {
  Outcome o;
  int checks = 0, failed = 0;
  auto take = [&](const std::string& label, const ClassicalBounds& cb) {
    for (const EstimateReport* r : {&cb.maximum, &cb.height}) {
      ++checks;
      if (!r->pass || !r->consistent()) {
        ++failed;
        o.detail += " [" + label + " " + r->name + "]";
      }
    }
  };
  take("cap", check_classical_bounds(solve_dirichlet(cap_problem(1.0, 0.5, 40))));
  take("cylinder", check_classical_bounds(solve_dirichlet(cylinder_problem(1.0, 0.4, 4.0, 80, 32))));
  const Outcome strips = strip_reports({"maximum_principle", "height_estimate"}, 2);
  o.pass = failed == 0 && strips.pass;
  o.detail = "oracles: " + std::to_string(checks) + " checks, " + std::to_string(failed) + " failed" + o.detail +
             "; " + strips.detail;
  return o;
}

Outcome criterion4() {
  Outcome o = strip_reports({"theorem1", "theorem2prime"}, 2);
  double worst = 0.0;
  for (const auto& run : strip_runs()) {
    for (const auto& r : run.record.reports) {
      if (r.name == "theorem1") worst = std::max(worst, r.measured * run.H / 2.0);
    }
  }
  o.detail += "; largest distance / (2/H) " + fmt("%.3f", worst);
  return o;
}

Outcome criterion5() {
  Outcome o = strip_reports({"theorem3", "theorem3_gap", "corollary"}, 15);
  // The barrier descent at the same sites is reported for information only.
  int descents = 0, descents_failed = 0;
  for (const auto& run : strip_runs()) {
    for (const auto& r : run.record.reports) {
      if (r.name != "cylinder_descent") continue;
      ++descents;
      descents_failed += !r.pass;
    }
  }
  o.detail += "; cylinder descent " + std::to_string(descents - descents_failed) + "/" + std::to_string(descents);
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(606);
  int trials = 0, witness_calls = 0, lemma_failures = 0, multi = 0;
  // 500 vertical paths, then 500 monotone zigzags for extra coverage.
  while (trials < 1000) {
    const auto lc = hgraph::testing::random_path_case(rng);
    const auto path = hgraph::testing::random_transversal_path(rng, lc.rect, trials >= 500);
    ++trials;
    try {
      const auto d = clip_decompose(lc.region, lc.rect);
      const auto trace = trace_path(path, d);
      if (trace.intervals.empty()) throw Error(ErrorKind::WitnessNotFound, "empty trace");
      multi += trace.intervals.size() > 1;
      for (std::size_t j = 1; j < trace.intervals.size(); ++j) {
        const auto gamma = trace.intervals[j].entry_component;
        if (!gamma) throw Error(ErrorKind::WitnessNotFound, "entry point on no component");
        for (std::size_t jp = 0; jp < j; ++jp) {
          const std::size_t w = lemma1_witness(trace, d, j, jp);
          ++witness_calls;
          const double dist = hgraph::testing::ref_point_polyline(trace.intervals[w].exit_point, d.components[*gamma].polyline);
          if (w < jp || w >= j || dist > d.eps()) throw Error(ErrorKind::WitnessNotFound, "invalid witness");
        }
      }
    } catch (const Error& e) {
      ++lemma_failures;
      if (lemma_failures <= 3) o.detail += " [lemma trial " + std::to_string(trials) + ": " + e.what() + "]";
    }
  }

  int channel_trials = 0, reduction_failures = 0;
  std::map<std::size_t, int> count_histogram;
  while (channel_trials < 200) {
    const auto mc = hgraph::testing::random_multichannel_case(rng);
    ++channel_trials;
    try {
      auto d = clip_decompose(mc.region, mc.rect);
      std::vector<LambdaLabel> labels(d.components.size());
      for (auto& l : labels) l = rng.uniform(0.0, 1.0) < 0.5 ? LambdaLabel::Lambda1 : LambdaLabel::Lambda2;
      labels[d.gamma1_index] = LambdaLabel::Lambda1;
      labels[d.gamma2_index] = LambdaLabel::Lambda2;
      d = partition_lambda(d, labels);
      const auto red = replay_theorem1_reduction(d, mc.a_prime, mc.H);
      const auto& sel = red.selected().decomposition;
      if (sel.components[sel.gamma1_index].label != LambdaLabel::Lambda1 ||
          sel.components[sel.gamma2_index].label != LambdaLabel::Lambda2) {
        throw Error(ErrorKind::ReductionFailed, "selected component has wrong labels");
      }
      ++count_histogram[red.components.size()];
    } catch (const Error& e) {
      ++reduction_failures;
      if (reduction_failures <= 3) o.detail += " [channel trial " + std::to_string(channel_trials) + ": " + e.what() + "]";
    }
  }
  std::string hist;
  for (const auto& [k, n] : count_histogram) hist += " " + std::to_string(k) + ":" + std::to_string(n);
  o.pass = lemma_failures == 0 && reduction_failures == 0;
  o.detail = std::to_string(trials) + " lemma domains, half vertical (" + std::to_string(multi) + " with several intervals, " +
             std::to_string(witness_calls) + " witnesses), " + std::to_string(lemma_failures) + " failures; " +
             std::to_string(channel_trials) + " multichannel domains, " + std::to_string(reduction_failures) +
             " failures; good components per domain" + hist + o.detail;
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.pass = true;
  for (double H : {1.0, 1.5}) {
    const double L = 8.0 / H;
    const nlohmann::json doc = {
        {"kind", "verify"},
        {"name", "wide_probe"},
        {"H", H},
        {"domain", {{"x_range", {0.0, L}}, {"b_minus", -0.6 / H}, {"b_plus", 0.6 / H}}},
        {"boundary_data", {{"f_minus", 0.0}, {"f_plus", 0.0}}},
        {"mesh", {{"nx", 64}, {"ny", 16}}},
    };
    const fs::path cfg = fs::temp_directory_path() / ("hgraph_acceptance_wide_" + std::to_string(static_cast<int>(H * 100)) + ".json");
    std::ofstream(cfg) << doc.dump(2);
    const fs::path out = fs::temp_directory_path() / "hgraph_acceptance_wide_out";
    const RunRecord rec = run_scenario(load_config(cfg));
    const int code = run_cli({"verify", "--config", cfg.string(), "--out", out.string()});
    const bool typed = rec.error_kind && (*rec.error_kind == ErrorKind::GradientBlowup ||
                                          *rec.error_kind == ErrorKind::NoConvergence);
    o.pass &= typed && code == cli::kSolverError;
    o.detail += "H=" + fmt("%.2f", H) + ": " + (rec.error_kind ? std::string(to_string(*rec.error_kind)) : "converged") +
                ", exit " + std::to_string(code) + "; ";
  }
  return o;
}

double value_at(const Series& s, double x) {
  for (Point2 p : s.points) {
    if (p.x == x) return p.y;
  }
  return NAN;
}

Outcome criterion8() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto config = load_config(kScenarios / "uniqueness.json");
  config.uniqueness.delta = 1.0;
  const RunRecord rec = run_scenario(config);
  if (rec.error) return {false, "run failed: " + *rec.error};
  int monotone = 0, monotone_failed = 0;
  for (const auto& r : rec.reports) {
    if (r.name.rfind("monotone_", 0) != 0) continue;
    ++monotone;
    monotone_failed += !r.pass;
  }
  std::map<double, double> d1;
  for (double L : config.uniqueness.lengths) {
    for (const auto& s : rec.series) {
      if (s.name == "D(x; L=" + format_decimal(L) + ")") d1[L] = value_at(s, 1.0);
    }
  }
  const bool ordered = d1.size() == 3 && d1[16.0] < d1[8.0] && d1[8.0] < d1[4.0];

  auto zero = config;
  zero.uniqueness.delta = 0.0;
  const RunRecord rz = run_scenario(zero);
  double dmax = rz.error ? INFINITY : 0.0;
  for (const auto& s : rz.series) {
    if (s.name.rfind("D(x;", 0) != 0) continue;
    for (Point2 p : s.points) dmax = std::max(dmax, p.y);
  }
  const double elapsed = seconds_since(t0);
  o.pass = monotone > 0 && monotone_failed == 0 && ordered && dmax <= 2.0 * config.solver.grad_tol && elapsed <= 120.0;
  o.detail = "monotone " + std::to_string(monotone - monotone_failed) + "/" + std::to_string(monotone) + "; D(1;4) " +
             fmt("%.4e", d1[4.0]) + ", D(1;8) " + fmt("%.4e", d1[8.0]) + ", D(1;16) " + fmt("%.4e", d1[16.0]) +
             "; delta=0 max D " + fmt("%.2e", dmax) + "; " + fmt("%.1f s", elapsed);
  return o;
}

Outcome criterion9() {
  Outcome o;
  Rng rng(909);
  const auto strip = generate_strip_mesh(
      build_generalized_strip(PiecewiseLinear({{0, -0.5}, {1.5, -0.3}, {3, -0.6}}),
                              PiecewiseLinear({{0, 0.4}, {2, 0.6}, {3, 0.3}}), {0, 3}),
      12, 5);
  const auto disk = generate_disk_mesh(0.5, 5);
  double worst = 0.0;
  bool symmetric = true;
  for (int trial = 0; trial < 50; ++trial) {
    const TriangleMesh& m = trial % 2 ? disk : strip;
    const double H = rng.uniform(0.25, 2.0);
    const double amp = rng.uniform(0.05, 1.0);
    std::vector<double> u(m.vertex_count());
    for (double& v : u) v = rng.uniform(-amp, amp);
    const auto g = energy_gradient(m, u, H);
    const auto fd = hgraph::testing::fd_gradient(m, u, H, 1e-6);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      num += (g[i] - fd[i]) * (g[i] - fd[i]);
      den += g[i] * g[i];
    }
    worst = std::max(worst, std::sqrt(num / den));
    const Eigen::SparseMatrix<double> K = energy_hessian(m, u, H);
    const Eigen::MatrixXd dense(K);
    symmetric &= (dense - dense.transpose()).cwiseAbs().maxCoeff() == 0.0;
  }
  o.pass = worst <= 1e-6 && symmetric;
  o.detail = "50 states, worst relative error " + fmt("%.3e", worst) + ", Hessian " +
             (symmetric ? "exactly symmetric" : "NOT symmetric");
  return o;
}

Outcome criterion10() {
  Outcome o;
  o.pass = true;
  const std::string cfg = (kScenarios / "random_strip.json").string();
  std::vector<fs::path> dirs;
  for (int k = 0; k < 3; ++k) {
    const fs::path d = fs::temp_directory_path() / ("hgraph_acceptance_det_" + std::to_string(k));
    fs::remove_all(d);
    const int code = run_cli({"verify", "--config", cfg, "--out", d.string(), "--seed", "11"});
    if (code != cli::kOk) {
      o.pass = false;
      o.detail += "run " + std::to_string(k) + " exit " + std::to_string(code) + "; ";
    }
    dirs.push_back(d);
  }
  for (const char* f : {"random_strip.csv", "random_strip.json"}) {
    const std::string ref = slurp(dirs[0] / f);
    bool same = !ref.empty();
    for (std::size_t k = 1; k < dirs.size(); ++k) same &= slurp(dirs[k] / f) == ref;
    o.pass &= same;
    o.detail += std::string(f) + (same ? " identical (" + std::to_string(ref.size()) + " bytes); " : " DIFFERS; ");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cap oracle", criterion1},
      {"cylinder oracle", criterion2},
      {"maximum principle and classical height", criterion3},
      {"2/H profile distance and 2a bound", criterion4},
      {"oscillation, boundary gap and corollary", criterion5},
      {"path witness and component reduction", criterion6},
      {"non-existence probe", criterion7},
      {"uniqueness divergence", criterion8},
      {"gradient check and Hessian symmetry", criterion9},
      {"determinism", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << "  " << criteria[i].first << "  ("
              << fmt("%.1f s", seconds_since(t0)) << ")  " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
