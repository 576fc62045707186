#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hgraph/error.hpp"
#include "hgraph/estimates.hpp"
#include "hgraph/solver.hpp"

namespace hgraph {

enum class ScenarioKind { Verify, Uniqueness, Convergence };

std::string_view to_string(ScenarioKind kind);

/// Knots of a random Lipschitz function (used for random data and random strips).
struct RandomSpec {
  int knots = 12;
  double lipschitz = 1.0;
  double amplitude = 1.0;
};

struct DomainSpec {
  Interval x_range{0.0, 4.0};
  PiecewiseLinear b_minus = PiecewiseLinear::constant(-0.4);
  PiecewiseLinear b_plus = PiecewiseLinear::constant(0.4);
  bool pinched_left = false;
  /// When set, b-/b+ are drawn from the seed: width in [0.5, 1] x max_width.
  std::optional<double> random_max_width;
};

/// How a truncation cap receives Dirichlet data.
struct CapSpec {
  enum class Mode { Linear, Table, Cylinder } mode = Mode::Linear;
  PiecewiseLinear table;
};

struct DataSpec {
  PiecewiseLinear f_minus = PiecewiseLinear::constant(0.0);
  PiecewiseLinear f_plus = PiecewiseLinear::constant(0.0);
  CapSpec left_cap;
  CapSpec right_cap;
  std::optional<RandomSpec> random;
};

struct MeshSpec {
  int nx = 40;
  int ny = 16;
  int refinements = 0;
};

struct RectSpec {
  double a = 1.5;
  double center_x = 2.0;
};

struct UniquenessSpec {
  std::vector<double> lengths{4.0, 8.0, 16.0};
  double delta = 1.0;
  /// Mesh columns per unit length.
  double nx_per_length = 10.0;
};

struct ConvergenceSpec {
  enum class Oracle { Cap, Cylinder } oracle = Oracle::Cap;
  int levels = 3;
  double R = 0.5;
  double w = 0.4;
  double length = 4.0;
  int rings = 8;
  int nx = 20;
  int ny = 8;
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::Verify;
  std::string name = "scenario";
  double H = 1.0;
  std::uint64_t seed = 0;
  DomainSpec domain;
  DataSpec data;
  MeshSpec mesh;
  std::optional<RectSpec> rect;
  std::vector<double> sites;
  UniquenessSpec uniqueness;
  ConvergenceSpec convergence;
  SolverOptions solver;
  /// Canonical JSON text the hash is computed from.
  std::string canonical;
};

/// Parses and validates a JSON scenario; ConfigError on missing, unknown or
/// ill-typed fields.
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& path);
/// Human-readable description of every config key.
std::string config_schema_help();

/// FNV-1a of the canonical config text and the seed, as 16 hex digits.
std::string config_hash(const ScenarioConfig& config);

/// Deterministic generator: 64-bit Mersenne twister with an explicit
/// 53-bit mantissa draw so results do not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

/// Random Lipschitz piecewise-linear function on `range`.
PiecewiseLinear random_lipschitz(Rng& rng, Interval range, const RandomSpec& spec);

/// Problem assembled from the config's domain, data and mesh sections.
struct BuiltProblem {
  std::shared_ptr<const DirichletProblem> problem;
  PlanarDomain domain;
};
BuiltProblem build_problem(const ScenarioConfig& config);

struct SolverDiagnostics {
  std::string status = "ok";
  int iterations = 0;
  double grad_norm = 0.0;
  double h_max = 0.0;
  std::size_t vertices = 0;
  std::size_t triangles = 0;
};

/// One plotted or tabulated series: (x, value) pairs.
struct Series {
  std::string name;
  std::vector<Point2> points;
};

struct RunRecord {
  std::string scenario;
  ScenarioKind kind = ScenarioKind::Verify;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::vector<SolverDiagnostics> diagnostics;
  std::vector<EstimateReport> reports;
  std::vector<Series> series;
  std::vector<std::string> notes;
  std::vector<std::string> manifest;
  std::optional<std::string> error;
  std::optional<ErrorKind> error_kind;

  bool all_pass() const;
};

RunRecord run_verify(const ScenarioConfig& config);
RunRecord run_uniqueness(const ScenarioConfig& config);
RunRecord run_convergence(const ScenarioConfig& config);
/// Dispatches on config.kind.  Solver errors are recorded in the record
/// (error, error_kind) instead of being thrown.
RunRecord run_scenario(const ScenarioConfig& config);

/// Writes <out>/<scenario>.csv, .json and .svg and fills the manifest.
void emit_outputs(RunRecord& record, const std::filesystem::path& out_dir);

void write_csv(std::ostream& out, const RunRecord& record);
void write_json(std::ostream& out, const RunRecord& record);
void write_svg(std::ostream& out, const RunRecord& record);
nlohmann::json to_json(const RunRecord& record);
/// Serializes with 17-significant-digit numbers; non-finite values become null.
std::string dump_json(const nlohmann::json& value, int indent = 2);

/// Random generalized strip of length 8/H with widths at most 0.8/H and
/// Lipschitz data, for property suites.
ScenarioConfig random_strip_config(std::uint64_t seed, double H);

}  // namespace hgraph
