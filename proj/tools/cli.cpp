#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "asa/axioms.hpp"
#include "asa/body_io.hpp"
#include "asa/engine.hpp"

namespace asa::cli {
namespace {

using nlohmann::json;
using io::format_double;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "svg") return Format::Svg;
  throw UsageError("unknown format " + s);
}

void emit(const ExperimentConfig& c, const std::string& text, std::ostream& out) {
  if (c.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.output_path.string());
  f << text;
}

std::string csv_row(std::initializer_list<double> values) {
  std::string s;
  for (double v : values) {
    if (!s.empty()) s += ',';
    s += format_double(v);
  }
  return s + '\n';
}

// Loading failures are usage errors (exit 2), unlike construction failures.
ConvexBody load(const std::filesystem::path& p) {
  try {
    return io::load_body(p.string());
  } catch (const Error& e) {
    throw UsageError(p.string() + ": " + e.what());
  }
}

struct Series {
  std::vector<Point2> pts;
  std::string color;
  bool dashed = false;
  bool closed = false;
};

// Plain SVG polylines in a common frame; y grows upward.
std::string svg(const std::vector<Series>& all, bool equal_aspect, const std::string& title) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : all) {
    for (const auto& p : s.pts) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1.0;
  if (!(y1 > y0)) y1 = y0 + 1.0;
  const double w = 640, h = 480, pad = 40;
  double sx = (w - 2 * pad) / (x1 - x0), sy = (h - 2 * pad) / (y1 - y0);
  if (equal_aspect) sx = sy = std::min(sx, sy);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << pad << "\" y=\"24\" font-family=\"monospace\" font-size=\"14\">" << title << "</text>\n";
  for (const auto& s : all) {
    os << "<" << (s.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << s.color
       << "\" stroke-width=\"1.5\"" << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"";
    for (const auto& p : s.pts) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f,%.3f ", pad + (p.x - x0) * sx, h - pad - (p.y - y0) * sy);
      os << buf;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<Point2> outline(const ConvexBody& k) {
  return k.is_polygon() ? k.polygon().vertices() : discretize(k, 512).vertices();
}

int cmd_body(const ExperimentConfig& c, std::ostream& out) {
  const ConvexBody k = load(c.body_path);
  const double a = area(k), p = perimeter(k), s = asa_direct(k).value;
  const bool sym = is_symmetric(k);
  std::string text;
  if (c.format == Format::Json) {
    text = json{{"area", a}, {"perimeter", p}, {"asa_direct", s}, {"symmetric", sym},
                {"kind", k.is_polygon() ? "polygon" : "smooth"}}
               .dump(2) +
           '\n';
  } else if (c.format == Format::Csv) {
    text = "quantity,value\narea," + format_double(a) + "\nperimeter," + format_double(p) + "\nasa_direct," +
           format_double(s) + "\nsymmetric," + (sym ? "1" : "0") + "\n";
  } else {
    text = svg({{outline(k), "black", false, true}}, true, "body");
  }
  emit(c, text, out);
  return kExitOk;
}

int cmd_construct(const ExperimentConfig& c, std::ostream& out) {
  const ConvexBody k = load(c.body_path);
  const auto r = construct(k, c.kind, c.t_start, static_cast<std::size_t>(c.resolution));
  std::string text;
  if (c.format == Format::Json) {
    text = io::to_json(r).dump(2) + '\n';
  } else if (c.format == Format::Csv) {
    text = "x,y\n";
    if (r.body) {
      for (const auto& p : r.body->vertices()) text += csv_row({p.x, p.y});
    }
  } else {
    std::vector<Series> s{{outline(k), "black", false, true}};
    if (r.body) s.push_back({r.body->vertices(), "crimson", false, true});
    text = svg(s, true, std::string(to_string(c.kind)) + " t=" + format_double(c.t_start));
  }
  emit(c, text, out);
  return kExitOk;
}

int cmd_converge(const ExperimentConfig& c, std::ostream& out) {
  const ConvexBody k = load(c.body_path);
  const auto schedule = geometric_schedule(c.t_start, c.t_ratio, static_cast<std::size_t>(c.t_count));
  const auto rows = convergence_rows(k, c.kind, schedule, static_cast<std::size_t>(c.resolution));
  const auto ratio = ratio_report(rows);
  const auto est = estimate_report(rows);
  std::string text;
  if (c.format == Format::Json) {
    json jr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      jr.push_back({{"t", r.t},
                    {"gap", r.gap},
                    {"ball_gap", r.ball_gap},
                    {"ratio", r.ratio},
                    {"c4_estimate", r.estimate},
                    {"fit_limit", est.running_fit[i]}});
    }
    const json j = {{"kind", std::string(to_string(c.kind))},
                    {"resolution", c.resolution},
                    {"rows", jr},
                    {"ratio_report", io::to_json(ratio)},
                    {"c4_report", io::to_json(est)}};
    text = j.dump(2) + '\n';
  } else if (c.format == Format::Csv) {
    text = "# kind=" + std::string(to_string(c.kind)) + " resolution=" + std::to_string(c.resolution) +
           " ratio_limit=" + format_double(ratio.limit) + " c4_limit=" + format_double(est.limit) +
           " c4_error=" + format_double(est.error_estimate) + "\n";
    text += "t,gap,ball_gap,ratio,c4_estimate,fit_limit\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      text += csv_row({r.t, r.gap, r.ball_gap, r.ratio, r.estimate, est.running_fit[i]});
    }
  } else {
    Series data{{}, "black"}, fit{{}, "crimson", true}, limit{{}, "steelblue", true};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double s = std::cbrt(rows[i].t);
      data.pts.push_back({s, rows[i].estimate});
      fit.pts.push_back({s, est.running_fit[i]});
    }
    limit.pts = {{0.0, est.limit}, {std::cbrt(rows.front().t), est.limit}};
    text = svg({data, fit, limit}, false, "c4 estimate vs t^(1/3), limit " + format_double(est.limit));
  }
  emit(c, text, out);
  for (const auto& r : rows) {
    if (!std::isfinite(r.gap) || !std::isfinite(r.estimate)) return kExitFailure;
  }
  return std::isfinite(est.limit) ? kExitOk : kExitFailure;
}

std::vector<ZooBody> load_body_set(const std::vector<std::string>& paths) {
  std::vector<ZooBody> out;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) throw UsageError("cannot read " + p);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw UsageError(p + ": " + e.what());
    }
    const std::string stem = std::filesystem::path(p).stem().string();
    auto add = [&](const json& b, const std::string& fallback) {
      try {
        out.push_back({b.contains("id") && b["id"].is_string() ? b["id"].get<std::string>() : fallback,
                       io::body_from_json(b)});
      } catch (const Error& e) {
        throw UsageError(p + ": " + e.what());
      }
    };
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) add(j[i], stem + "#" + std::to_string(i));
    } else {
      add(j, stem);
    }
  }
  return out;
}

int cmd_axioms(const std::vector<std::string>& paths, bool zoo, const std::vector<ConstructionKind>& kinds,
               const ExperimentConfig& c, std::ostream& out) {
  auto bodies = load_body_set(paths);
  if (zoo) {
    auto z = body_zoo();
    bodies.insert(bodies.end(), z.begin(), z.end());
  }
  if (bodies.empty()) throw UsageError("empty body set: pass --body PATH or --zoo");
  SuiteConfig sc;
  if (!kinds.empty()) sc.kinds = kinds;
  sc.ts = geometric_schedule(c.t_start, c.t_ratio, static_cast<std::size_t>(c.t_count));
  sc.directions = static_cast<std::size_t>(c.resolution);
  const auto verdicts = run_suite(bodies, sc);
  const std::string js = io::to_json(std::span<const AxiomVerdict>(verdicts)).dump(2) + '\n';
  if (!c.output_path.empty()) {
    emit(c, js, out);
    out << verdict_table(verdicts);
  } else if (c.format == Format::Json) {
    out << js;
  } else {
    out << verdict_table(verdicts);
  }
  return all_asserted_pass(verdicts) ? kExitOk : kExitFailure;
}

}  // namespace

void validate(const ExperimentConfig& c) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::ParseError, what); };
  if (!(c.t_start > 0.0)) bad("t_start > 0");
  if (!(c.t_ratio > 0.0 && c.t_ratio < 1.0)) bad("t_ratio in (0, 1)");
  if (c.t_count < 4 || c.t_count > 64) bad("4 <= t_count <= 64");
  if (c.resolution < 64) bad("resolution N >= 64");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex-body families, affine surface area limits and axiom checks"};
  app.require_subcommand(1);

  ExperimentConfig c;
  std::string kind = "floating", format = "csv", body, out_path;
  std::vector<std::string> bodies, kind_list;
  bool zoo = false;
  const std::vector<std::string> kind_names{"floating", "convolution", "santalo", "illumination"};

  auto* body_cmd = app.add_subcommand("body", "Summarize a body spec (area, perimeter, asa, symmetry)");
  auto* construct_cmd = app.add_subcommand("construct", "Build one family member at t = --t-start");
  auto* converge_cmd = app.add_subcommand("converge", "Volume-gap convergence over a geometric t schedule");
  auto* axioms_cmd = app.add_subcommand("axioms", "Run the axiom suite over a body set");

  for (auto* s : {body_cmd, construct_cmd, converge_cmd}) {
    s->add_option("--body", body, "Body spec (JSON)")->required();
    s->add_option("--out", out_path, "Output file (default standard output)");
    s->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
  }
  for (auto* s : {construct_cmd, converge_cmd}) {
    s->add_option("--kind", kind, "Construction kind")->check(CLI::IsMember(kind_names));
    s->add_option("--resolution", c.resolution, "Direction count N");
  }
  construct_cmd->add_option("--t-start", c.t_start, "Family parameter t");
  converge_cmd->add_option("--t-start", c.t_start, "Largest t of the schedule");
  converge_cmd->add_option("--t-ratio", c.t_ratio, "Schedule ratio in (0, 1)");
  converge_cmd->add_option("--t-count", c.t_count, "Schedule length");

  axioms_cmd->add_option("--body", bodies, "Body spec file (a body or an array of bodies); repeatable");
  axioms_cmd->add_flag("--zoo", zoo, "Include the built-in body zoo");
  axioms_cmd->add_option("--kind", kind_list, "Kinds to check (default all)")->check(CLI::IsMember(kind_names));
  axioms_cmd->add_option("--t-start", c.t_start, "Largest t");
  axioms_cmd->add_option("--t-ratio", c.t_ratio, "t ratio");
  axioms_cmd->add_option("--t-count", c.t_count, "Number of t values");
  axioms_cmd->add_option("--resolution", c.resolution, "Direction count N");
  axioms_cmd->add_option("--out", out_path, "Write JSON verdicts here");
  axioms_cmd->add_option("--format", format, "json prints verdicts instead of the table")
      ->check(CLI::IsMember({"csv", "json"}));

  // subcommand-specific defaults, overridden by explicit flags
  c.t_start = -1.0;
  c.t_count = -1;
  c.resolution = -1;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    c.body_path = body;
    c.output_path = out_path;
    c.format = parse_format(format);
    c.kind = parse_kind(kind);
    if (axioms_cmd->parsed()) {
      if (c.t_start < 0.0) c.t_start = 1e-2;
      if (c.t_count < 0) c.t_count = 4;
      if (c.resolution < 0) c.resolution = 360;
      if (axioms_cmd->count("--t-ratio") == 0) c.t_ratio = 0.1;
    } else {
      if (c.t_start < 0.0) c.t_start = 1e-2;
      if (c.t_count < 0) c.t_count = 9;
      if (c.resolution < 0) c.resolution = static_cast<int>(kDefaultDirections);
    }
    if (body_cmd->parsed()) return cmd_body(c, out);
    if (construct_cmd->parsed()) {
      // a single t; t = 0 echoes the body
      if (!(c.t_start >= 0.0)) throw Error(ErrorCode::ParseError, "t >= 0");
      if (c.resolution < 64) throw Error(ErrorCode::ParseError, "resolution N >= 64");
      return cmd_construct(c, out);
    }
    std::vector<ConstructionKind> kinds;
    for (const auto& s : kind_list) kinds.push_back(parse_kind(s));
    validate(c);
    if (converge_cmd->parsed()) return cmd_converge(c, out);
    return cmd_axioms(bodies, zoo, kinds, c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace asa::cli
