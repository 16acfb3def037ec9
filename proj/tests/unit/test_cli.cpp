#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "generators.hpp"
#include "sandwich/cli/commands.hpp"
#include "sandwich/cli/csv.hpp"
#include "sandwich/cli/problem.hpp"
#include "sandwich/cli/svg.hpp"
#include "shapes.hpp"

using namespace sandwich;
using namespace sandwich::cli;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const char* name) { return read_file(fs::path(SANDWICH_TEST_DATA) / name); }

const char* kIdentity = R"({
  "model": "pl-interval",
  "functions": {
    "f": [
      {"x": "0", "value": "0", "right": "0"},
      {"x": "1", "left": "1", "value": "1"}
    ]
  }
})";

ParseError parse_error_of(const std::string& text) {
  try {
    (void)parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("document parsed unexpectedly");
  throw std::logic_error("unreachable");
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SANDWICH_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("minimal document parses to one function") {
  const ProblemSpec p = parse_problem(kIdentity);
  CHECK(p.model == Model::pl_interval);
  REQUIRE(p.functions.size() == 1);
  CHECK(p.functions[0].name == "f");
  CHECK(std::get<PLFunction>(p.functions[0].value) == line("0", "1"));
}

TEST_CASE("rationals survive parsing exactly") {
  const ProblemSpec p = parse_problem(R"({"model": "finite", "functions": {"h": ["1/3", 2, "-5/10"]}})");
  const FiniteFunction& h = std::get<FiniteFunction>(p.functions[0].value);
  CHECK(h[0].numerator() == 1);
  CHECK(h[0].denominator() == 3);
  CHECK(h[1] == 2);
  CHECK(h[2] == Rational(-1, 2));
  CHECK(*p.size == 3);
}

TEST_CASE("parse errors name the line and field") {
  const ParseError order = parse_error_of(R"({
  "model": "pl-interval",
  "functions": {
    "f": [
      {"x": "0", "value": "0", "right": "0"},
      {"x": "1", "left": "0", "value": "0", "right": "0"},
      {"x": "1/2", "left": "0", "value": "0"}
    ]
  }
})");
  CHECK(order.line() == 7);
  CHECK(order.field() == "/functions/f/2/x");
  CHECK(std::string(order.what()).find("1/2") != std::string::npos);

  const ParseError bad_rational = parse_error_of(R"({
  "model": "pl-interval",
  "functions": {"f": [{"x": "0", "value": "0.5", "right": "0"},
                      {"x": "1", "left": "0", "value": "0"}]}
})");
  CHECK(bad_rational.line() == 3);
  CHECK(bad_rational.field() == "/functions/f/0/value");

  const ParseError missing = parse_error_of(R"({
  "model": "pl-interval",
  "functions": {"f": [{"x": "0", "value": "0", "right": "0"},
                      {"x": "1", "value": "0"}]}
})");
  CHECK(missing.field() == "/functions/f/1/left");
  CHECK(missing.line() == 4);

  const ParseError unknown = parse_error_of(R"({"model": "finite", "colour": 1, "functions": {}})");
  CHECK(unknown.field() == "/colour");

  const ParseError syntax = parse_error_of("{\n  \"model\": \"finite\",\n  \"functions\": {,}\n}");
  CHECK(syntax.line() == 3);

  const ParseError null_value = parse_error_of(R"({"model": "pl-interval", "functions": {"f": [
    {"x": "0", "value": "0", "right": "0"}, {"x": "1/2", "left": "0", "value": null, "right": "0"},
    {"x": "1", "left": "0", "value": "0"}]}})");
  CHECK(null_value.field() == "/functions/f/1/value");

  const ParseError no_record = parse_error_of(R"({"model": "dense-interval", "removed": ["1/2"], "functions": {"f": [
    {"x": "0", "value": "0", "right": "0"}, {"x": "1", "left": "0", "value": "0"}]}})");
  CHECK(no_record.field() == "/functions/f");

  CHECK_THROWS_AS(parse_problem(R"({"model": "torus", "functions": {}})"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"model": "finite", "functions": {"a": [1], "b": [1, 2]}})"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"model": "finite", "functions": {"a": [1]}, "generators": ["z"]})"), ParseError);
}

TEST_CASE("emit and parse round-trip") {
  for (const char* name : {"insert_point_bump.json", "pipeline_obstruction.json", "sw_nonseparating.json",
                           "one_point_evens.json", "extract_two_members.json"}) {
    CAPTURE(name);
    const ProblemSpec p = parse_problem(data(name));
    const std::string text = emit_problem(p);
    CHECK(parse_problem(text) == p);
    CHECK(emit_problem(parse_problem(text)) == text);
  }
  Gen g(5150);
  for (int trial = 0; trial < 50; ++trial) {
    ProblemSpec p;
    p.model = Model::pl_interval;
    p.functions.push_back({"f", random_pl(g)});
    p.functions.push_back({"g", random_pl(g)});
    p.parameters.epsilon = g.rational(0, 2, 64);
    p.parameters.samples = std::vector<Rational>{g.on_grid(0, 1, 7)};
    CHECK(parse_problem(emit_problem(p)) == p);
  }
}

TEST_CASE("CSV sampling") {
  const PLFunction f = step("1/2", "1");
  for (std::size_t r : {1u, 2u, 7u, 100u}) {
    const std::vector<CsvRow> rows = sample_rows(f, r);
    CHECK(rows.size() == r + 1 + f.breakpoints().size());
    for (const CsvRow& row : rows) {
      REQUIRE(row.value.has_value());
      CHECK(*row.value == f(row.x));
    }
  }
  const std::string csv = to_csv(sample_rows(f, 2));
  CHECK(csv == "x,value,tag\n0,0,interior\n0,0,breakpoint\n1/2,1,interior\n1/2,1,breakpoint\n1,1,interior\n1,1,breakpoint\n");

  const PuncturedFunction p = PuncturedFunction::make(step("1/2", "0"), {R("1/2")});
  const std::string pcsv = to_csv(sample_rows(p, 2));
  CHECK(pcsv.find("1/2,,interior") != std::string::npos);
  CHECK(pcsv.find("1/2,,breakpoint") != std::string::npos);
  CHECK_THROWS_AS(sample_rows(f, 0), ParameterError);
}

TEST_CASE("SVG rendering") {
  CHECK(stroke_style(PlotSeries::of("c", line("0", "1"))) == StrokeStyle::continuous);
  CHECK(stroke_style(PlotSeries::of("u", step("1/2", "1"))) == StrokeStyle::usc);
  CHECK(stroke_style(PlotSeries::of("l", step("1/2", "0"))) == StrokeStyle::lsc);
  CHECK(stroke_style(PlotSeries::of("n", step("1/2", "1/2"))) == StrokeStyle::neither);

  const std::vector<PlotSeries> one = {PlotSeries::of("f", step("1/2", "1"))};
  const std::string svg = render_svg(one);
  CHECK(svg.find("width=\"800\" height=\"400\"") != std::string::npos);
  CHECK(svg.find("stroke-dasharray=\"8 4\"") != std::string::npos);
  // Two segments, one filled dot at the jump value, one open circle at the left limit.
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count("<line ") == 2);
  CHECK(count("fill=\"white\" stroke=") == 1);
  CHECK(count("<circle") == 2);
  CHECK(svg == render_svg(one));
  CHECK(svg.find("x1=\"40.00\" y1=\"360.00\" x2=\"400.00\" y2=\"360.00\"") != std::string::npos);

  const std::vector<PlotSeries> punct = {PlotSeries::of("p", PuncturedFunction::make(step("1/2", "0"), {R("1/2")}))};
  const std::string psvg = render_svg(punct);
  std::size_t open = 0;
  for (std::size_t pos = psvg.find("fill=\"white\" stroke="); pos != std::string::npos;
       pos = psvg.find("fill=\"white\" stroke=", pos + 1))
    ++open;
  CHECK(open == 2);
  CHECK(psvg.find("stroke-dasharray") == std::string::npos);
}

TEST_CASE("commands in process") {
  RunOptions opts;
  const Report insert = run_text("insert", data("insert_point_bump.json"), opts);
  CHECK(insert.exit_code == exit_ok);
  CHECK(insert.document["lambda"] == "2");
  CHECK(insert.document["kind"] == "gap-insertion");
  CHECK(verify_certificate_document(insert.document.dump()).exit_code == exit_ok);

  const Report pipeline = run_text("pipeline", data("pipeline_obstruction.json"), opts);
  CHECK(pipeline.exit_code == exit_obstruction);
  CHECK(pipeline.document["obstruction"]["y"] == "1/2");

  const Report sw = run_text("sw", data("sw_nonseparating.json"), opts);
  CHECK(sw.exit_code == exit_precondition);
  CHECK(sw.document["pair"] == json::array({1, 2}));
  CHECK(sw.text.find("1 and 2") != std::string::npos);

  const Report evens = run_text("pipeline", data("one_point_evens.json"), opts);
  CHECK(evens.exit_code == exit_obstruction);
  CHECK(evens.document["obstruction"]["y"] == "infinity");
  CHECK(evens.document["upper_extension"]["infinity"] == "1");
  CHECK(evens.document["lower_extension"]["infinity"] == "0");

  const Report extract = run_text("extract", data("extract_two_members.json"), opts);
  CHECK(extract.exit_code == exit_ok);
  CHECK(extract.document["S0"] == json::array({"s1", "s2"}));

  RunOptions flags;
  flags.tol = Rational::pow2(-4);
  flags.svg = true;
  flags.csv_resolution = 8;
  const Report kt = run_text("kt", data("insert_point_bump.json"), flags);
  CHECK(kt.exit_code == exit_ok);
  CHECK(kt.document["certificate"]["steps"].size() == 4);
  CHECK(kt.files.size() == 4);
  CHECK(verify_certificate_document(kt.document.dump()).exit_code == exit_ok);

  json tampered = kt.document;
  tampered["certificate"]["steps"][1]["distance"] = "0";
  const Report rejected = verify_certificate_document(tampered.dump());
  CHECK(rejected.exit_code == exit_precondition);
  CHECK_FALSE(rejected.document["failures"].empty());

  const Report parse_fail = run_text("check", "{\"model\": 1}", opts);
  CHECK(parse_fail.exit_code == exit_precondition);
  CHECK(parse_fail.document["status"] == "parse-error");

  const Report missing = run_text("insert", kIdentity, opts);
  CHECK(missing.exit_code == exit_precondition);

  RunOptions low_cap;
  low_cap.lambda_cap = Rational(1);
  const Report capped = run_text("insert", data("insert_point_bump.json"), low_cap);
  CHECK(capped.exit_code == exit_internal);
}

TEST_CASE("pipeline certificate and sequence insertion") {
  const std::string doc = R"({
    "model": "dense-interval", "removed": ["1/2"],
    "functions": {
      "f": [{"x": "0", "value": "0", "right": "0"}, {"x": "1/2", "left": "0", "value": null, "right": "0"},
            {"x": "1", "left": "0", "value": "0"}],
      "g": [{"x": "0", "value": "0", "right": "0"}, {"x": "1/2", "left": "0", "value": null, "right": "1"},
            {"x": "1", "left": "1", "value": "1"}]
    },
    "parameters": {"tol": "1/64"}
  })";
  const Report r = run_text("pipeline", doc, {});
  REQUIRE(r.exit_code == exit_ok);
  CHECK(r.document["kind"] == "pipeline-certificate");
  CHECK(verify_certificate_document(r.document.dump()).exit_code == exit_ok);
  json bad = r.document;
  bad["tol"] = "1/128";
  CHECK(verify_certificate_document(bad.dump()).exit_code == exit_precondition);

  const std::string seq = R"({"model": "one-point", "functions": {
    "f": {"prefix": ["3"], "period": ["0", "1/2"]},
    "g": {"period": ["1", "2"]}}})";
  const Report s = run_text("pipeline", seq, {});
  REQUIRE(s.exit_code == exit_precondition);  // f(0) = 3 > g(0) = 1
  const std::string seq_ok = R"({"model": "one-point", "functions": {
    "f": {"prefix": ["-3"], "period": ["0", "1/2"]},
    "g": {"period": ["1", "2"]}}})";
  const Report t = run_text("pipeline", seq_ok, {});
  REQUIRE(t.exit_code == exit_ok);
  CHECK(t.document["h"]["infinity"] == "1/2");
}

TEST_CASE("command-line binary exit statuses") {
  const std::string dir = SANDWICH_TEST_DATA;
  const fs::path out = fs::temp_directory_path() / "sandwich_cli_test";
  fs::remove_all(out);
  CHECK(run_binary("insert --input " + dir + "/insert_point_bump.json --out " + out.string()) == 0);
  CHECK(fs::exists(out / "insert.json"));
  CHECK(run_binary("verify-cert --input " + (out / "insert.json").string()) == 0);
  CHECK(run_binary("kt --input " + dir + "/insert_point_bump.json --tol 1/256 --svg --csv 10 --out " +
                   out.string()) == 0);
  CHECK(fs::exists(out / "kt.svg"));
  CHECK(fs::exists(out / "h.csv"));
  CHECK(run_binary("verify-cert --input " + (out / "kt.json").string()) == 0);
  CHECK(run_binary("pipeline --input " + dir + "/pipeline_obstruction.json") == 3);
  CHECK(run_binary("sw --input " + dir + "/sw_nonseparating.json") == 2);
  CHECK(run_binary("kt --input " + dir + "/insert_point_bump.json --tol 3/7") == 2);
  CHECK(run_binary("kt --input " + dir + "/insert_point_bump.json --tol nonsense") == 2);
  CHECK(run_binary("frobnicate --input " + dir + "/insert_point_bump.json") == 2);
  CHECK(run_binary("insert --input /nonexistent/file.json") == 2);
  const std::string capped = "SANDWICH_LAMBDA_CAP=1 " + std::string(SANDWICH_BINARY) + " insert --input " + dir +
                             "/insert_point_bump.json > /dev/null 2>&1";
  const int status = std::system(capped.c_str());
  CHECK(WEXITSTATUS(status) == 1);
  fs::remove_all(out);
}
