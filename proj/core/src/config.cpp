#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "hgraph/error.hpp"
#include "hgraph/experiments.hpp"

namespace hgraph {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ConfigError, what); }

void allow_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(where + " must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail("unknown key '" + key + "' in " + where);
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where + " must be finite");
  return d;
}

double positive(const json& v, const std::string& where) {
  const double d = number(v, where);
  if (!(d > 0.0)) fail(where + " must be positive");
  return d;
}

int integer(const json& v, const std::string& where, int min_value) {
  if (!v.is_number_integer()) fail(where + " must be an integer");
  const auto i = v.get<long long>();
  if (i < min_value || i > 1'000'000) fail(where + " out of range");
  return static_cast<int>(i);
}

std::vector<double> numbers(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + " must be an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

/// A number (constant) or a table [[x, value], ...] with increasing x.
PiecewiseLinear function(const json& v, const std::string& where) {
  if (v.is_number()) return PiecewiseLinear::constant(number(v, where));
  if (!v.is_array() || v.empty()) fail(where + " must be a number or a non-empty [[x, value], ...] table");
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& row = v[i];
    if (!row.is_array() || row.size() != 2) fail(where + " rows must be [x, value] pairs");
    pts.push_back({number(row[0], where), number(row[1], where)});
  }
  try {
    return PiecewiseLinear(std::move(pts));
  } catch (const Error& e) {
    fail(where + ": " + e.what());
  }
}

CapSpec cap(const json& v, const std::string& where) {
  CapSpec c;
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "linear") return c;
    if (s == "cylinder") {
      c.mode = CapSpec::Mode::Cylinder;
      return c;
    }
    fail(where + " must be \"linear\", \"cylinder\" or a table");
  }
  c.mode = CapSpec::Mode::Table;
  c.table = function(v, where);
  return c;
}

RandomSpec random_spec(const json& v, const std::string& where) {
  allow_keys(v, where, {"knots", "lipschitz", "amplitude"});
  RandomSpec r;
  if (v.contains("knots")) r.knots = integer(v["knots"], where + ".knots", 2);
  if (v.contains("lipschitz")) r.lipschitz = positive(v["lipschitz"], where + ".lipschitz");
  if (v.contains("amplitude")) r.amplitude = positive(v["amplitude"], where + ".amplitude");
  return r;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Verify: return "verify";
    case ScenarioKind::Uniqueness: return "uniqueness";
    case ScenarioKind::Convergence: return "convergence";
  }
  return "verify";
}

ScenarioConfig parse_config(const json& doc) {
  allow_keys(doc, "config",
             {"kind", "name", "H", "seed", "domain", "boundary_data", "mesh", "rect", "sites", "uniqueness",
              "convergence", "solver"});
  ScenarioConfig c;
  if (!doc.contains("kind") || !doc["kind"].is_string()) fail("missing string field 'kind'");
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "verify") c.kind = ScenarioKind::Verify;
  else if (kind == "uniqueness") c.kind = ScenarioKind::Uniqueness;
  else if (kind == "convergence") c.kind = ScenarioKind::Convergence;
  else fail("kind must be verify, uniqueness or convergence");
  c.name = std::string(to_string(c.kind));
  if (doc.contains("name")) {
    if (!doc["name"].is_string() || doc["name"].get<std::string>().empty()) fail("name must be a non-empty string");
    c.name = doc["name"].get<std::string>();
    for (char ch : c.name) {
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-')) fail("name may only use [A-Za-z0-9_-]");
    }
  }
  if (!doc.contains("H")) fail("missing field 'H'");
  c.H = positive(doc["H"], "H");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !(doc["seed"].is_number_integer() && doc["seed"].get<long long>() >= 0)) {
      fail("seed must be a non-negative integer");
    }
    c.seed = doc["seed"].get<std::uint64_t>();
  }

  if (doc.contains("domain")) {
    const json& d = doc["domain"];
    allow_keys(d, "domain", {"x_range", "b_minus", "b_plus", "pinched_left", "random_max_width"});
    if (d.contains("x_range")) {
      const auto xr = numbers(d["x_range"], "domain.x_range");
      if (xr.size() != 2 || !(xr[0] < xr[1])) fail("domain.x_range must be [lo, hi] with lo < hi");
      c.domain.x_range = {xr[0], xr[1]};
    }
    if (d.contains("b_minus")) c.domain.b_minus = function(d["b_minus"], "domain.b_minus");
    if (d.contains("b_plus")) c.domain.b_plus = function(d["b_plus"], "domain.b_plus");
    if (d.contains("pinched_left")) {
      if (!d["pinched_left"].is_boolean()) fail("domain.pinched_left must be a boolean");
      c.domain.pinched_left = d["pinched_left"].get<bool>();
    }
    if (d.contains("random_max_width")) c.domain.random_max_width = positive(d["random_max_width"], "domain.random_max_width");
  }

  if (doc.contains("boundary_data")) {
    const json& b = doc["boundary_data"];
    allow_keys(b, "boundary_data", {"f_minus", "f_plus", "left_cap", "right_cap", "random"});
    if (b.contains("f_minus")) c.data.f_minus = function(b["f_minus"], "boundary_data.f_minus");
    if (b.contains("f_plus")) c.data.f_plus = function(b["f_plus"], "boundary_data.f_plus");
    if (b.contains("left_cap")) c.data.left_cap = cap(b["left_cap"], "boundary_data.left_cap");
    if (b.contains("right_cap")) c.data.right_cap = cap(b["right_cap"], "boundary_data.right_cap");
    if (b.contains("random")) c.data.random = random_spec(b["random"], "boundary_data.random");
  }

  if (doc.contains("mesh")) {
    const json& m = doc["mesh"];
    allow_keys(m, "mesh", {"nx", "ny", "refinements"});
    if (m.contains("nx")) c.mesh.nx = integer(m["nx"], "mesh.nx", 1);
    if (m.contains("ny")) c.mesh.ny = integer(m["ny"], "mesh.ny", 1);
    if (m.contains("refinements")) c.mesh.refinements = integer(m["refinements"], "mesh.refinements", 0);
    if (c.mesh.refinements > 6) fail("mesh.refinements must be at most 6");
  }

  if (doc.contains("rect")) {
    const json& r = doc["rect"];
    allow_keys(r, "rect", {"a", "center_x"});
    RectSpec rs;
    if (!r.contains("a") || !r.contains("center_x")) fail("rect needs 'a' and 'center_x'");
    rs.a = positive(r["a"], "rect.a");
    rs.center_x = number(r["center_x"], "rect.center_x");
    c.rect = rs;
  }

  if (doc.contains("sites")) c.sites = numbers(doc["sites"], "sites");

  if (doc.contains("uniqueness")) {
    const json& u = doc["uniqueness"];
    allow_keys(u, "uniqueness", {"lengths", "delta", "nx_per_length"});
    if (u.contains("lengths")) c.uniqueness.lengths = numbers(u["lengths"], "uniqueness.lengths");
    if (u.contains("delta")) {
      c.uniqueness.delta = number(u["delta"], "uniqueness.delta");
      if (c.uniqueness.delta < 0.0) fail("uniqueness.delta must be non-negative");
    }
    if (u.contains("nx_per_length")) c.uniqueness.nx_per_length = positive(u["nx_per_length"], "uniqueness.nx_per_length");
    const auto& L = c.uniqueness.lengths;
    if (L.empty()) fail("uniqueness.lengths must not be empty");
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (!(L[i] > 0.0) || (i > 0 && !(L[i] > L[i - 1]))) fail("uniqueness.lengths must be positive and increasing");
    }
  }

  if (doc.contains("convergence")) {
    const json& v = doc["convergence"];
    allow_keys(v, "convergence", {"oracle", "levels", "R", "w", "length", "rings", "nx", "ny"});
    auto& cv = c.convergence;
    if (v.contains("oracle")) {
      const auto o = v["oracle"].is_string() ? v["oracle"].get<std::string>() : std::string{};
      if (o == "cap") cv.oracle = ConvergenceSpec::Oracle::Cap;
      else if (o == "cylinder") cv.oracle = ConvergenceSpec::Oracle::Cylinder;
      else fail("convergence.oracle must be \"cap\" or \"cylinder\"");
    }
    if (v.contains("levels")) cv.levels = integer(v["levels"], "convergence.levels", 3);
    if (cv.levels > 7) fail("convergence.levels must be at most 7");
    if (v.contains("R")) cv.R = positive(v["R"], "convergence.R");
    if (v.contains("w")) cv.w = positive(v["w"], "convergence.w");
    if (v.contains("length")) cv.length = positive(v["length"], "convergence.length");
    if (v.contains("rings")) cv.rings = integer(v["rings"], "convergence.rings", 1);
    if (v.contains("nx")) cv.nx = integer(v["nx"], "convergence.nx", 1);
    if (v.contains("ny")) cv.ny = integer(v["ny"], "convergence.ny", 1);
  }

  if (doc.contains("solver")) {
    const json& s = doc["solver"];
    allow_keys(s, "solver", {"grad_tol", "max_iters", "armijo_c", "armijo_shrink", "grad_cap"});
    if (s.contains("grad_tol")) c.solver.grad_tol = positive(s["grad_tol"], "solver.grad_tol");
    if (s.contains("max_iters")) c.solver.max_iters = integer(s["max_iters"], "solver.max_iters", 1);
    if (s.contains("armijo_c")) c.solver.armijo_c = positive(s["armijo_c"], "solver.armijo_c");
    if (s.contains("armijo_shrink")) c.solver.armijo_shrink = positive(s["armijo_shrink"], "solver.armijo_shrink");
    if (s.contains("grad_cap")) c.solver.grad_cap = positive(s["grad_cap"], "solver.grad_cap");
    try {
      c.solver.validate();
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  if (c.kind == ScenarioKind::Verify && c.domain.pinched_left && c.domain.random_max_width) {
    fail("a random domain cannot be pinched");
  }
  c.canonical = doc.dump();
  return c;
}

ScenarioConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

std::string config_hash(const ScenarioConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (char ch : config.canonical) mix(static_cast<unsigned char>(ch));
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(config.seed >> (8 * i)));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string config_schema_help() {
  return R"(Scenario config (JSON). Unknown keys are rejected.
  kind            "verify" | "uniqueness" | "convergence"            (required)
  H               mean curvature, > 0                                 (required)
  name            output file stem, [A-Za-z0-9_-]                     (default: kind)
  seed            non-negative integer; --seed overrides it            (default 0)
  domain          { x_range: [lo, hi], b_minus: F, b_plus: F,
                    pinched_left: bool, random_max_width: number }
  boundary_data   { f_minus: F, f_plus: F, left_cap: C, right_cap: C,
                    random: { knots: int, lipschitz: number, amplitude: number } }
  mesh            { nx: int, ny: int, refinements: int }
  rect            { a: number, center_x: number }   enables the 2/H and 2a checks
  sites           [x0, ...]                          transversal check sites
  uniqueness      { lengths: [L, ...], delta: number, nx_per_length: number }
  convergence     { oracle: "cap" | "cylinder", levels: int >= 3, R, w, length,
                    rings: int, nx: int, ny: int }
  solver          { grad_tol, max_iters, armijo_c, armijo_shrink, grad_cap }
where F is a number (constant) or a table [[x, value], ...] with increasing x,
and C is "linear" (interpolate f- and f+), "cylinder" (exact cylinder profile)
or a table [[y, value], ...].
)";
}

}  // namespace hgraph
