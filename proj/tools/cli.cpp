#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "hgraph/error.hpp"
#include "hgraph/experiments.hpp"

namespace hgraph::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::GradientBlowup: return kSolverError;
    case ErrorKind::ReductionFailed:
    case ErrorKind::WitnessNotFound: return kCheckFailure;
    default: return kConfigError;
  }
}

struct Options {
  std::string config;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
};

int execute(ScenarioKind expected, const Options& opts, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_config(opts.config);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kConfigError;
  }
  if (config.kind != expected) {
    err << "config kind '" << to_string(config.kind) << "' does not match subcommand '" << to_string(expected) << "'\n";
    return kConfigError;
  }
  if (opts.seed) config.seed = *opts.seed;

  RunRecord record = run_scenario(config);
  try {
    emit_outputs(record, opts.out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kConfigError;
  }
  const auto failed = std::count_if(record.reports.begin(), record.reports.end(),
                                    [](const EstimateReport& r) { return !r.pass; });
  out << record.scenario << ": " << record.reports.size() << " checks, " << failed << " failed, status "
      << (record.error_kind ? std::string(to_string(*record.error_kind)) : std::string("ok")) << '\n';
  for (const auto& f : record.manifest) out << "  " << (std::filesystem::path(opts.out) / f).string() << '\n';
  if (record.error) {
    err << *record.error << '\n';
    return exit_code_for(*record.error_kind);
  }
  return failed == 0 ? kOk : kCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant mean curvature graph solver and height-estimate verifier"};
  app.footer("\n" + config_schema_help() +
             "\nExit codes: 0 success, 1 config error, 2 solver error (no solution found), 3 check failure.");
  app.require_subcommand(1);

  struct Sub {
    ScenarioKind kind;
    CLI::App* app;
    Options opts;
  };
  std::vector<Sub> subs{{ScenarioKind::Verify, nullptr, {}},
                        {ScenarioKind::Uniqueness, nullptr, {}},
                        {ScenarioKind::Convergence, nullptr, {}}};
  const char* blurbs[] = {"solve once and run every height-estimate check at the configured sites",
                          "measure how two solutions with different far caps diverge",
                          "L-infinity error and observed order against an analytic solution"};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    Sub& s = subs[i];
    s.app = app.add_subcommand(std::string(to_string(s.kind)), blurbs[i]);
    s.app->add_option("--config", s.opts.config, "scenario config (JSON)")->required();
    s.app->add_option("--out", s.opts.out, "output directory")->capture_default_str();
    s.app->add_option("--seed", s.opts.seed, "random seed overriding the config");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kConfigError;
  }
  for (Sub& s : subs) {
    if (s.app->parsed()) return execute(s.kind, s.opts, out, err);
  }
  return kConfigError;
}

}  // namespace hgraph::cli
