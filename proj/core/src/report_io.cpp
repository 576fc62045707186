#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hgraph/error.hpp"
#include "hgraph/experiments.hpp"

namespace hgraph {

using nlohmann::json;

namespace {

void dump(std::ostringstream& out, const json& v, int indent, int depth) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        out << (first ? "" : ",") << pad << json(key).dump() << sep;
        dump(out, item, indent, depth + 1);
        first = false;
      }
      out << close << '}';
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      // Short numeric rows (points, coordinates) stay on one line.
      const bool flat = v.size() <= 4 && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); });
      out << '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? (flat ? ", " : ",") : "") << (flat ? "" : pad);
        dump(out, v[i], flat ? 0 : indent, depth + 1);
      }
      out << (flat ? "" : close) << ']';
      return;
    }
    case json::value_t::number_float: {
      const double d = v.get<double>();
      out << (std::isfinite(d) ? format_decimal(d) : "null");
      return;
    }
    default: out << v.dump(); return;
  }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string dump_json(const json& value, int indent) {
  std::ostringstream out;
  dump(out, value, indent, 0);
  return out.str();
}

json to_json(const RunRecord& record) {
  json reports = json::array();
  for (const auto& r : record.reports) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back({{"role", w.role}, {"coords", w.coords}});
    reports.push_back({{"name", r.name},
                       {"x0", optional_number(r.x0)},
                       {"measured", r.measured},
                       {"bound", r.bound},
                       {"slack", r.slack},
                       {"pass", r.pass},
                       {"witnesses", witnesses}});
  }
  json diagnostics = json::array();
  for (const auto& d : record.diagnostics) {
    diagnostics.push_back({{"status", d.status},
                           {"iterations", d.iterations},
                           {"grad_norm", d.grad_norm},
                           {"h_max", d.h_max},
                           {"vertices", d.vertices},
                           {"triangles", d.triangles}});
  }
  json series = json::array();
  for (const auto& s : record.series) {
    json pts = json::array();
    for (Point2 p : s.points) pts.push_back({p.x, p.y});
    series.push_back({{"name", s.name}, {"points", pts}});
  }
  return {{"scenario", record.scenario},
          {"kind", std::string(to_string(record.kind))},
          {"config_hash", record.config_hash},
          {"seed", record.seed},
          {"status", record.error_kind ? std::string(to_string(*record.error_kind)) : std::string("ok")},
          {"error", record.error ? json(*record.error) : json(nullptr)},
          {"all_pass", record.all_pass()},
          {"diagnostics", diagnostics},
          {"reports", reports},
          {"series", series},
          {"notes", record.notes},
          {"manifest", record.manifest}};
}

void write_json(std::ostream& out, const RunRecord& record) { out << dump_json(to_json(record)) << '\n'; }

void write_csv(std::ostream& out, const RunRecord& record) {
  out << "scenario,check,x0,measured,bound,slack,pass\n";
  for (const auto& r : record.reports) {
    out << record.scenario << ',' << r.name << ',' << (r.x0 ? format_decimal(*r.x0) : std::string()) << ','
        << format_decimal(r.measured) << ',' << format_decimal(r.bound) << ',' << format_decimal(r.slack) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
}

void emit_outputs(RunRecord& record, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create output directory " + out_dir.string());
  const std::string stem = record.scenario;
  record.manifest = {stem + ".csv", stem + ".svg", stem + ".json"};
  auto write = [&](const std::string& name, auto&& writer) {
    std::ofstream f(out_dir / name, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + (out_dir / name).string());
    writer(f);
    f.flush();
    if (!f) throw Error(ErrorKind::IoError, "write failed for " + (out_dir / name).string());
  };
  write(stem + ".csv", [&](std::ostream& o) { write_csv(o, record); });
  write(stem + ".svg", [&](std::ostream& o) { write_svg(o, record); });
  write(stem + ".json", [&](std::ostream& o) { write_json(o, record); });
}

}  // namespace hgraph
