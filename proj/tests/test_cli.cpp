#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asa/body_io.hpp"
#include "asa/engine.hpp"
#include "cli.hpp"

using namespace asa;
using nlohmann::json;

namespace {

const std::string kBodies = ASA_BODIES_DIR;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string body(const std::string& name) { return kBodies + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "asa_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::DomainError;
}

}  // namespace

TEST_CASE("body specs parse") {
  const auto d = io::load_body(body("disk.json"));
  CHECK(d.is_smooth());
  CHECK(std::abs(area(d) - kPi) < 1e-10);
  const auto e = io::load_body(body("ellipse_2_0.5.json"));
  CHECK(std::abs(area(e) - kPi) < 1e-8);
  const auto s = io::parse_body(R"({"kind": "polygon", "vertices": [[0,0],[2,0],[2,1],[0,1]]})");
  CHECK(area(s) == doctest::Approx(2.0));
  CHECK(code_of([] { io::parse_body("{not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_body(R"({"kind": "blob"})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_body(R"({"kind": "polygon", "vertices": [[0,0],[1,0]]})"); }) == ErrorCode::InvalidBody);
  CHECK(code_of([] {
          io::parse_body(R"({"kind": "smooth", "support": {"constant": 1, "cos": [0, 0, 0.5]}, "grid": 256})");
        }) == ErrorCode::InvalidBody);
  try {
    io::parse_body(R"({"kind": "polygon", "vertices": [[0,0],[0,1],[1,1],[1,0]]})");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("counterclockwise") != std::string::npos);
  }
}

TEST_CASE("bodies round trip through json") {
  const ConvexBody p = Polygon::regular(7, 1.3, {0.1, 0.2});
  const auto q = io::body_from_json(io::to_json(p));
  CHECK(hausdorff_distance(p, q) == 0.0);
  const ConvexBody t = io::load_body(body("trefoil.json"));
  const auto u = io::body_from_json(io::to_json(t));
  CHECK(hausdorff_distance(t, u) < 1e-14);
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(io::format_double(kPi)) == kPi);
}

TEST_CASE("body subcommand") {
  auto r = run_cli({"body", "--body", body("disk.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("quantity,value") == 0);
  r = run_cli({"body", "--body", body("square.json"), "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["area"].get<double>() == doctest::Approx(4.0));
  CHECK(j["asa_direct"].get<double>() == 0.0);
  r = run_cli({"body", "--body", body("ellipse_2_0.5.json"), "--format", "json"});
  const auto e = json::parse(r.out);
  CHECK(std::abs(e["area"].get<double>() - kPi) < 1e-8);
  CHECK(std::abs(e["asa_direct"].get<double>() - kTwoPi) < 1e-8);
  r = run_cli({"body", "--body", body("disk.json"), "--format", "json"});
  CHECK(std::abs(json::parse(r.out)["asa_direct"].get<double>() - kTwoPi) < 1e-10);
  r = run_cli({"body", "--body", body("disk.json"), "--format", "svg"});
  CHECK(r.out.find("<svg") == 0);
}

TEST_CASE("construct subcommand") {
  const auto out = scratch("floating.json");
  auto r = run_cli({"construct", "--body", body("disk.json"), "--kind", "floating", "--t-start", "0.1", "--format",
                    "json", "--out", out.string()});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(slurp(out));
  CHECK(j["metadata"]["containment_ok"].get<bool>());
  CHECK(j["metadata"]["orientation"] == "inner");
  const auto k = io::load_body(out.string());  // the result re-parses as a body
  CHECK(hausdorff_distance(k, ConvexBody(SmoothBody::disk(0.8567581563109013))) < 2e-3);

  r = run_cli({"construct", "--body", body("disk.json"), "--kind", "illumination", "--t-start",
               "0.010311572130015462", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto il = io::parse_body(r.out);
  CHECK(hausdorff_distance(il, ConvexBody(SmoothBody::disk(1.05))) < 1e-4);

  r = run_cli({"construct", "--body", body("square.json"), "--t-start", "0", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(hausdorff_distance(io::parse_body(r.out), ConvexBody(Polygon::box(-1, -1, 1, 1))) < 1e-12);

  r = run_cli({"construct", "--body", body("disk.json"), "--t-start", "0.3", "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("x,y\n") == 0);
}

TEST_CASE("converge subcommand") {
  auto r = run_cli({"converge", "--body", body("disk.json"), "--kind", "santalo", "--t-count", "6", "--resolution",
                    "360"});
  REQUIRE(r.code == cli::kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("# kind=santalo", 0) == 0);
  std::getline(lines, line);
  CHECK(line == "t,gap,ball_gap,ratio,c4_estimate,fit_limit");
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    REQUIRE(v.size() == 6);
    CHECK(std::abs(v[4] - kTwoPi) < 1e-4);
    ++rows;
  }
  CHECK(rows == 6);

  r = run_cli({"converge", "--body", body("ellipse_2_0.5.json"), "--kind", "floating", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(std::abs(j["ratio_report"]["limit"].get<double>() - 1.0) < 0.01);

  // the polygon limit is approached like t^(1/3) log(1/t), so the fit needs small t
  r = run_cli({"converge", "--body", body("square.json"), "--kind", "floating", "--t-count", "12", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto sq = json::parse(r.out);
  CHECK(sq["rows"].back()["c4_estimate"].get<double>() < 0.05 * kTwoPi);
  CHECK(sq["c4_report"]["limit"].get<double>() < 0.05);

  r = run_cli({"converge", "--body", body("disk.json"), "--kind", "floating", "--t-count", "5", "--format", "svg"});
  CHECK(r.out.find("<svg") == 0);
}

TEST_CASE("axioms subcommand") {
  auto r = run_cli({"axioms", "--body", body("square.json"), "--kind", "floating", "--t-count", "4", "--resolution",
                    "180"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("PASS") != std::string::npos);
  const auto set = scratch("set.json");
  write(set, R"([{"id": "box", "kind": "polygon", "vertices": [[-1,-1],[1,-1],[1,1],[-1,1]]},
                 {"id": "round", "kind": "smooth", "support": {"constant": 1}, "grid": 1024}])");
  r = run_cli({"axioms", "--body", set.string(), "--kind", "illumination", "--t-count", "4", "--resolution", "180",
               "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  bool unasserted = false;
  for (const auto& v : j) unasserted |= !v["asserted"].get<bool>();
  CHECK(unasserted);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"axioms"}).code == cli::kExitUsage);
  CHECK(run_cli({"body", "--body", body("missing.json")}).code == cli::kExitUsage);
  CHECK(run_cli({"converge", "--body", body("disk.json"), "--t-count", "3"}).code == cli::kExitUsage);
  CHECK(run_cli({"converge", "--body", body("disk.json"), "--t-ratio", "1.5"}).code == cli::kExitUsage);
  CHECK(run_cli({"converge", "--body", body("disk.json"), "--resolution", "32"}).code == cli::kExitUsage);
  CHECK(run_cli({"construct", "--body", body("disk.json"), "--format", "xml"}).code == cli::kExitUsage);
  const auto bad = scratch("bad.json");
  write(bad, R"({"kind": "polygon", "vertices": [[0,0],[1,0],[2,0]]})");
  const auto r = run_cli({"body", "--body", bad.string()});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("InvalidBody") != std::string::npos);
  CHECK(run_cli({"construct", "--body", body("disk.json"), "--t-start", "5"}).code == cli::kExitFailure);
}

TEST_CASE("config validation") {
  cli::ExperimentConfig c;
  c.body_path = body("disk.json");
  CHECK_NOTHROW(cli::validate(c));
  c.t_count = 65;
  CHECK(code_of([&] { cli::validate(c); }) == ErrorCode::ParseError);
  c.t_count = 8;
  c.t_start = 0.0;
  CHECK(code_of([&] { cli::validate(c); }) == ErrorCode::ParseError);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"converge", "--body", body("ellipse_2_0.5.json"), "--kind", "convolution",
                                      "--t-count", "5", "--resolution", "256"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  auto json_args = args;
  json_args.insert(json_args.end(), {"--format", "json"});
  CHECK(run_cli(json_args).out == run_cli(json_args).out);
}
