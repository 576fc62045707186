#include <algorithm>
#include <cmath>

#include "hgraph/barriers.hpp"
#include "hgraph/error.hpp"
#include "hgraph/experiments.hpp"
#include "hgraph/lambda.hpp"

namespace hgraph {

namespace {

BoundaryFunction linear_cap(const PlanarDomain& domain, const PiecewiseLinear& fm, const PiecewiseLinear& fp,
                            double x) {
  const double y0 = domain.b_minus()(x), y1 = domain.b_plus()(x);
  const double v0 = fm(x), v1 = fp(x);
  return [=](double y) { return y1 > y0 ? v0 + (v1 - v0) * (y - y0) / (y1 - y0) : v0; };
}

BoundaryFunction make_cap(const CapSpec& spec, const PlanarDomain& domain, const BoundaryData& data, double x,
                          double H) {
  switch (spec.mode) {
    case CapSpec::Mode::Linear: return linear_cap(domain, data.f_minus, data.f_plus, x);
    case CapSpec::Mode::Table: return [table = spec.table](double y) { return table(y); };
    case CapSpec::Mode::Cylinder: {
      const double y0 = domain.b_minus()(x), y1 = domain.b_plus()(x);
      const CylinderOracle cyl = exact_cylinder(H, 0.5 * (y1 - y0));
      const double yc = 0.5 * (y0 + y1);
      return [cyl, yc](double y) { return cyl(y - yc); };
    }
  }
  return {};
}

RunRecord start_record(const ScenarioConfig& config) {
  RunRecord r;
  r.scenario = config.name;
  r.kind = config.kind;
  r.config_hash = config_hash(config);
  r.seed = config.seed;
  return r;
}

SolverDiagnostics diagnostics(const Solution& s) {
  SolverDiagnostics d;
  d.iterations = s.iterations();
  d.grad_norm = s.grad_norm();
  d.h_max = quality(s.mesh()).h_max;
  d.vertices = s.mesh().vertex_count();
  d.triangles = s.mesh().triangle_count();
  return d;
}

SolverDiagnostics failed_diagnostics(const DirichletProblem& p, const Error& e) {
  SolverDiagnostics d;
  d.status = std::string(to_string(e.kind()));
  d.iterations = e.detail();
  d.h_max = quality(*p.mesh).h_max;
  d.vertices = p.mesh->vertex_count();
  d.triangles = p.mesh->triangle_count();
  return d;
}

Solution solve_recorded(const std::shared_ptr<const DirichletProblem>& p, const ScenarioConfig& config,
                        RunRecord& record) {
  try {
    Solution s = solve_dirichlet(p, config.solver);
    record.diagnostics.push_back(diagnostics(s));
    return s;
  } catch (const Error& e) {
    record.diagnostics.push_back(failed_diagnostics(*p, e));
    throw;
  }
}

Series profile_series(std::string name, const std::vector<ProfileCurve>& curves) {
  Series s{std::move(name), {}};
  for (const auto& c : curves) s.points.insert(s.points.end(), c.points.begin(), c.points.end());
  std::sort(s.points.begin(), s.points.end(), [](Point2 a, Point2 b) { return a.x < b.x; });
  return s;
}

void verify_into(const ScenarioConfig& config, RunRecord& record) {
  const BuiltProblem built = build_problem(config);
  const Solution s = solve_recorded(built.problem, config, record);
  const double H = config.H;

  const ClassicalBounds cb = check_classical_bounds(s);
  record.reports.push_back(cb.maximum);
  record.reports.push_back(cb.height);

  if (config.rect) {
    const Rectangle rect = strip_rectangle(built.domain, config.rect->center_x, config.rect->a);
    const LambdaDecomposition decomp = clip_decompose(built.domain, rect);
    const LambdaDecomposition part = partition_lambda(decomp, natural_partition(decomp));
    record.reports.push_back(check_theorem2prime(s, part));
    if (rect.a > 1.0 / H) record.reports.push_back(check_theorem1(s, part));
    record.series.push_back(profile_series("F(Gamma1)", profile_project(s, part, LambdaLabel::Lambda1)));
    record.series.push_back(profile_series("F(Gamma2)", profile_project(s, part, LambdaLabel::Lambda2)));
  }

  const auto& data = s.problem().data;
  for (double x0 : config.sites) {
    const Interval wmax{x0 - 0.5 / H, x0 + 0.5 / H};
    const Interval wmin{x0 - 2.0 / H, x0 + 2.0 / H};
    const Interval xr = built.domain.x_range();
    if (wmin.lo < xr.lo || wmin.hi > xr.hi) {
      throw Error(ErrorKind::WindowOutside, "site " + format_decimal(x0) + " needs a 2/H margin on both sides");
    }
    const double m_max = std::max(data.f_minus.max_on(wmax), data.f_plus.max_on(wmax));
    const double m_min = std::min(data.f_minus.min_on(wmin), data.f_plus.min_on(wmin));
    record.reports.push_back(check_prop_max(s, x0, m_max));
    record.reports.push_back(check_prop_min(s, x0, m_min));
    const Theorem3Report t3 = check_theorem3(s, x0);
    record.reports.push_back(t3.oscillation);
    record.reports.push_back(t3.boundary_gap);
    record.reports.push_back(check_corollary(s, x0));
    const CylinderDescent cd = cylinder_descent_bound(s, x0, m_max);
    std::vector<Witness> w;
    double measured = cd.threshold;
    if (cd.contact) {
      measured = cd.contact->parameter;
      const Point3 p = cd.contact->point;
      w.push_back({std::string("contact_") + std::string(to_string(cd.contact->side)), {p.x, p.y, p.z}});
    }
    record.reports.push_back(EstimateReport::make("cylinder_descent", x0, measured, cd.threshold, cd.tolerance, w));
  }
}

double divergence(const Solution& a, const Solution& b, double x0) {
  const Transversal tr = transversal(a, x0);
  double d = 0.0;
  for (Point2 smp : tr.samples) d = std::max(d, std::abs(smp.y - b.interpolate({x0, smp.x})));
  return d;
}

std::string length_tag(double L) {
  std::string s = format_decimal(L);
  std::replace(s.begin(), s.end(), '.', 'p');
  return s;
}

void uniqueness_into(const ScenarioConfig& config, RunRecord& record) {
  const UniquenessSpec& u = config.uniqueness;
  const double slack = 10.0 * config.solver.grad_tol;
  std::vector<std::vector<double>> table;
  std::vector<double> sites = config.sites;
  std::sort(sites.begin(), sites.end());

  for (double L : u.lengths) {
    ScenarioConfig c = config;
    c.domain.x_range.hi = L;
    if (!(L > c.domain.x_range.lo)) throw Error(ErrorKind::ConfigError, "truncation length must exceed x_range.lo");
    c.mesh.nx = std::max(1, static_cast<int>(std::lround(u.nx_per_length * (L - c.domain.x_range.lo))));
    const BuiltProblem built = build_problem(c);
    auto shifted = std::make_shared<DirichletProblem>(*built.problem);
    shifted->data.right_cap = [base = built.problem->data.right_cap, delta = u.delta](double y) {
      return base(y) + delta;
    };
    const Solution s1 = solve_recorded(built.problem, c, record);
    const Solution s2 = solve_recorded(shifted, c, record);

    Series d_series{"D(x; L=" + format_decimal(L) + ")", {}};
    Series ratio{"D/ln(2+x) (L=" + format_decimal(L) + ")", {}};
    std::vector<double> row;
    for (double x0 : sites) {
      if (x0 < c.domain.x_range.lo || x0 > L) {
        row.push_back(NAN);
        continue;
      }
      const double d = divergence(s1, s2, x0);
      row.push_back(d);
      d_series.points.push_back({x0, d});
      ratio.points.push_back({x0, d / std::log(2.0 + x0)});
      record.reports.push_back(EstimateReport::make("bounded_by_delta_L" + length_tag(L), x0, d, u.delta, slack));
    }
    for (std::size_t k = 0; k + 1 < d_series.points.size(); ++k) {
      const Point2 a = d_series.points[k], b = d_series.points[k + 1];
      record.reports.push_back(EstimateReport::make("monotone_L" + length_tag(L), a.x, a.y - b.y, 0.0, slack));
    }
    record.series.push_back(std::move(d_series));
    record.series.push_back(std::move(ratio));
    table.push_back(std::move(row));
  }
  if (!sites.empty()) {
    for (std::size_t i = 1; i < table.size(); ++i) {
      const double prev = table[i - 1][0], cur = table[i][0];
      if (std::isnan(prev) || std::isnan(cur)) continue;
      record.reports.push_back(
          EstimateReport::make("decay_L" + length_tag(u.lengths[i]), sites[0], cur, prev, 0.0));
    }
  }
  record.notes.push_back(
      "Divergence D(x; L) = max over the transversal at x of |u1 - u2| for right caps differing by delta. "
      "Only trends are reported: logarithmic growth hypotheses on unbounded domains are not decidable by a "
      "finite experiment.");
}

void convergence_into(const ScenarioConfig& config, RunRecord& record) {
  const ConvergenceSpec& cv = config.convergence;
  const double H = config.H;
  Series errors{"Linf error", {}};
  std::vector<double> e;
  for (int k = 0; k < cv.levels; ++k) {
    std::shared_ptr<const DirichletProblem> p;
    std::function<double(Point2)> exact;
    if (cv.oracle == ConvergenceSpec::Oracle::Cap) {
      p = cap_problem(H, cv.R, cv.rings, k);
      exact = exact_cap(H, cv.R);
    } else {
      p = cylinder_problem(H, cv.w, cv.length, cv.nx, cv.ny, k);
      exact = [cyl = exact_cylinder(H, cv.w)](Point2 q) { return cyl(q.y); };
    }
    const Solution s = solve_recorded(p, config, record);
    double err = 0.0;
    for (std::size_t v = 0; v < s.mesh().vertex_count(); ++v) {
      err = std::max(err, std::abs(s.values()[v] - exact(s.mesh().vertices()[v])));
    }
    e.push_back(err);
    errors.points.push_back({static_cast<double>(k), err});
    if (k > 0) record.reports.push_back(EstimateReport::make("error_decrease", k, err, e[k - 1], 0.0));
  }
  const std::size_t n = e.size();
  const double order = std::log2(e[n - 2] / e[n - 1]);
  record.reports.push_back(EstimateReport::make("observed_order", static_cast<double>(n - 1), -order, -1.5, 0.0));
  Series orders{"observed order", {}};
  for (std::size_t k = 1; k < n; ++k) orders.points.push_back({static_cast<double>(k), std::log2(e[k - 1] / e[k])});
  record.series.push_back(std::move(errors));
  record.series.push_back(std::move(orders));
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

PiecewiseLinear random_lipschitz(Rng& rng, Interval range, const RandomSpec& spec) {
  const int k = std::max(spec.knots, 2);
  const double dx = range.length() / (k - 1);
  std::vector<Point2> pts;
  double v = rng.uniform(-spec.amplitude, spec.amplitude);
  for (int i = 0; i < k; ++i) {
    if (i > 0) v = std::clamp(v + rng.uniform(-1.0, 1.0) * spec.lipschitz * dx, -spec.amplitude, spec.amplitude);
    pts.push_back({i == k - 1 ? range.hi : range.lo + i * dx, v});
  }
  return PiecewiseLinear(std::move(pts));
}

BuiltProblem build_problem(const ScenarioConfig& config) {
  Rng rng(config.seed);
  const Interval xr = config.domain.x_range;
  PiecewiseLinear bm = config.domain.b_minus, bp = config.domain.b_plus;
  if (config.domain.random_max_width) {
    const double wmax = *config.domain.random_max_width;
    const RandomSpec center{12, 0.5, wmax};
    const PiecewiseLinear c = random_lipschitz(rng, xr, center);
    std::vector<Point2> lo, hi;
    for (Point2 p : c.breakpoints()) {
      const double half = 0.5 * rng.uniform(0.5 * wmax, wmax);
      lo.push_back({p.x, p.y - half});
      hi.push_back({p.x, p.y + half});
    }
    bm = PiecewiseLinear(std::move(lo));
    bp = PiecewiseLinear(std::move(hi));
  }
  PlanarDomain domain = build_generalized_strip(bm, bp, xr, config.domain.pinched_left);

  auto problem = std::make_shared<DirichletProblem>();
  problem->H = config.H;
  if (config.data.random) {
    problem->data.f_minus = random_lipschitz(rng, xr, *config.data.random);
    problem->data.f_plus = random_lipschitz(rng, xr, *config.data.random);
  } else {
    problem->data.f_minus = config.data.f_minus;
    problem->data.f_plus = config.data.f_plus;
  }
  if (domain.pinched_left()) {
    // A pinched end has a single boundary point, so the two traces must agree there.
    const double target = problem->data.f_minus(xr.lo);
    if (std::abs(problem->data.f_plus(xr.lo) - target) > 1e-12 * (1.0 + std::abs(target))) {
      throw Error(ErrorKind::ConfigError, "pinched domain needs f_minus(x_lo) = f_plus(x_lo)");
    }
  }
  problem->data.left_cap = make_cap(config.data.left_cap, domain, problem->data, xr.lo, config.H);
  problem->data.right_cap = make_cap(config.data.right_cap, domain, problem->data, xr.hi, config.H);

  TriangleMesh mesh = generate_strip_mesh(domain, config.mesh.nx, config.mesh.ny);
  for (int k = 0; k < config.mesh.refinements; ++k) mesh = refine(mesh);
  problem->mesh = std::make_shared<const TriangleMesh>(std::move(mesh));
  problem->validate();
  return {problem, std::move(domain)};
}

bool RunRecord::all_pass() const {
  if (error) return false;
  return std::all_of(reports.begin(), reports.end(), [](const EstimateReport& r) { return r.pass; });
}

RunRecord run_verify(const ScenarioConfig& config) {
  RunRecord r = start_record(config);
  verify_into(config, r);
  return r;
}

RunRecord run_uniqueness(const ScenarioConfig& config) {
  RunRecord r = start_record(config);
  uniqueness_into(config, r);
  return r;
}

RunRecord run_convergence(const ScenarioConfig& config) {
  RunRecord r = start_record(config);
  convergence_into(config, r);
  return r;
}

RunRecord run_scenario(const ScenarioConfig& config) {
  RunRecord r = start_record(config);
  try {
    switch (config.kind) {
      case ScenarioKind::Verify: verify_into(config, r); break;
      case ScenarioKind::Uniqueness: uniqueness_into(config, r); break;
      case ScenarioKind::Convergence: convergence_into(config, r); break;
    }
  } catch (const Error& e) {
    r.error = e.what();
    r.error_kind = e.kind();
  }
  return r;
}

ScenarioConfig random_strip_config(std::uint64_t seed, double H) {
  const double L = 8.0 / H;
  nlohmann::json doc = {
      {"kind", "verify"},
      {"name", "random_strip_" + std::to_string(seed)},
      {"H", H},
      {"seed", seed},
      {"domain", {{"x_range", {0.0, L}}, {"random_max_width", 0.8 / H}}},
      {"boundary_data", {{"random", {{"knots", 12}, {"lipschitz", 1.0}, {"amplitude", 1.0 / H}}}}},
      {"mesh", {{"nx", 80}, {"ny", 12}}},
      {"rect", {{"a", 1.5 / H}, {"center_x", 0.5 * L}}},
      {"sites", {2.5 / H, 3.25 / H, 4.0 / H, 4.75 / H, 5.5 / H}},
  };
  return parse_config(doc);
}

}  // namespace hgraph
