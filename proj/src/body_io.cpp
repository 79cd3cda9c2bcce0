#include "asa/body_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace asa::io {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

}  // namespace

ConvexBody body_from_json(const json& j) {
  if (!j.is_object()) parse_error("body spec must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) parse_error("missing string field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "polygon") {
    if (!j.contains("vertices") || !j["vertices"].is_array()) parse_error("polygon needs a \"vertices\" array");
    std::vector<Point2> pts;
    for (const auto& v : j["vertices"]) {
      if (!v.is_array() || v.size() != 2) parse_error("each vertex must be [x, y]");
      pts.push_back({number(v[0], "vertex coordinate"), number(v[1], "vertex coordinate")});
    }
    return Polygon(std::move(pts));
  }
  if (kind == "smooth") {
    if (!j.contains("support") || !j["support"].is_object()) parse_error("smooth body needs a \"support\" object");
    const json& s = j["support"];
    if (s.contains("samples")) return SmoothBody::from_samples(numbers(s["samples"], "support samples"));
    if (!s.contains("constant")) parse_error("support needs \"constant\" or \"samples\"");
    const double a0 = number(s["constant"], "support constant");
    const auto c = s.contains("cos") ? numbers(s["cos"], "cos coefficients") : std::vector<double>{};
    const auto sn = s.contains("sin") ? numbers(s["sin"], "sin coefficients") : std::vector<double>{};
    std::size_t grid = kDefaultGrid;
    if (j.contains("grid")) {
      if (!j["grid"].is_number_integer() || j["grid"].get<long long>() <= 0) parse_error("grid must be a positive integer");
      grid = j["grid"].get<std::size_t>();
    }
    return SmoothBody::from_fourier(a0, c, sn, grid);
  }
  parse_error("unknown body kind \"" + kind + "\"");
}

ConvexBody parse_body(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
  return body_from_json(j);
}

ConvexBody load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_body(ss.str());
}

json to_json(const Polygon& p) {
  json v = json::array();
  for (const auto& q : p.vertices()) v.push_back({q.x, q.y});
  return {{"kind", "polygon"}, {"vertices", v}};
}

json to_json(const ConvexBody& k) {
  if (k.is_polygon()) return to_json(k.polygon());
  const auto h = k.smooth().h();
  return {{"kind", "smooth"}, {"support", {{"samples", std::vector<double>(h.begin(), h.end())}}}};
}

json to_json(const FamilyResult& r) {
  json meta = {{"t", r.t},
               {"construction", std::string(to_string(r.kind))},
               {"orientation", orientation(r.kind) == Orientation::Inner ? "inner" : "outer"},
               {"resolution", r.resolution},
               {"residual", r.residual},
               {"tolerance", r.tolerance},
               {"degenerate", r.degenerate},
               {"origin", {r.origin.x, r.origin.y}},
               {"containment_excess", r.containment_excess},
               {"containment_ok", r.containment_excess <= 1e-6}};
  json j = r.body ? to_json(*r.body) : json{{"kind", "polygon"}, {"vertices", json::array()}};
  j["metadata"] = meta;
  return j;
}

json to_json(const AxiomVerdict& v) {
  return {{"axiom", v.axiom_id}, {"body", v.body_id},     {"kind", std::string(to_string(v.kind))},
          {"passed", v.passed},  {"measured", v.measured}, {"tolerance", v.tolerance},
          {"asserted", v.asserted}, {"detail", v.detail}};
}

json to_json(std::span<const AxiomVerdict> verdicts) {
  json a = json::array();
  for (const auto& v : verdicts) a.push_back(to_json(v));
  return a;
}

json to_json(const ConvergenceReport& r) {
  return {{"schedule", r.schedule}, {"values", r.values},          {"running_fit", r.running_fit},
          {"limit", r.limit},       {"error_estimate", r.error_estimate}, {"model", r.model}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace asa::io
