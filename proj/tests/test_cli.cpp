#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "succoef/cli.hpp"

using namespace succoef;
using namespace succoef::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "succoef");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

using Row = std::map<std::string, std::string>;

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::vector<Row> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  const auto header = split_line(line);
  std::vector<Row> rows;
  while (std::getline(is, line)) {
    const auto cells = split_line(line);
    Row row;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

double num(const Row& row, const std::string& key) { return std::stod(row.at(key)); }

Row find_row(const std::vector<Row>& rows, const std::string& key, const std::string& value,
             const std::string& key2 = "", const std::string& value2 = "") {
  for (const auto& r : rows) {
    if (r.at(key) == value && (key2.empty() || r.at(key2) == value2)) return r;
  }
  FAIL("row not found: ", key, "=", value);
  return {};
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("parse_real") {
  CHECK(parse_real("0.25") == 0.25);
  CHECK(parse_real("1/4") == 0.25);
  CHECK(parse_real("pi/4") == std::numbers::pi / 4);
  CHECK(parse_real("-pi/3") == -std::numbers::pi / 3);
  CHECK(std::abs(parse_real("2*pi/3") - 2.0 * std::numbers::pi / 3) < 1e-15);
  CHECK(std::abs(parse_real("2pi/3") - 2.0 * std::numbers::pi / 3) < 1e-15);
  CHECK(parse_real("pi") == std::numbers::pi);
  CHECK_THROWS_AS(parse_real(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_real("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real("1/0"), std::invalid_argument);
}

TEST_CASE("parse_lattice") {
  const auto r = parse_lattice("0:1:5");
  REQUIRE(r.size() == 5);
  CHECK(r[2].value == 0.5);
  CHECK(r[4].value == 1.0);
  const auto l = parse_lattice("0,pi/6,-pi/6");
  REQUIRE(l.size() == 3);
  CHECK(l[1].text == "pi/6");
  CHECK(l[2].value == -std::numbers::pi / 6);
  CHECK(parse_lattice("").empty());
  CHECK(parse_lattice("0:1:0").empty());
  CHECK_THROWS_AS(parse_lattice("0:1"), std::invalid_argument);
}

TEST_CASE("bounds examples") {
  const auto s = run_cli({"bounds", "--family", "spirallike", "--alpha", "0", "--gamma", "0", "--format", "csv"});
  CHECK(s.code == exit_pass);
  const auto sr = parse_csv(s.out);
  REQUIRE(sr.size() == 2);
  CHECK(num(find_row(sr, "functional", "D1"), "lower") == -1.0);
  CHECK(num(find_row(sr, "functional", "D1"), "upper") == 1.0);
  CHECK(std::abs(num(find_row(sr, "functional", "D2"), "lower") + 1.0) < 1e-15);
  CHECK(std::abs(num(find_row(sr, "functional", "D2"), "upper") - 1.0) < 1e-15);

  const auto c = run_cli({"bounds", "--family", "convex", "--alpha", "0.5", "--gamma", "0", "--format", "csv"});
  const auto& c2 = find_row(parse_csv(c.out), "functional", "D2");
  CHECK(std::abs(num(c2, "lower") + 0.5 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(num(c2, "upper") - 1.0 / 6.0) < 1e-15);

  const auto o = run_cli({"bounds", "--family", "ozaki", "--lambda", "1", "--format", "csv"});
  const auto& o2 = find_row(parse_csv(o.out), "functional", "D2");
  CHECK(std::abs(num(o2, "lower") + 0.5) < 1e-15);
  CHECK(std::abs(num(o2, "upper") - 1.0 / 6.0) < 1e-15);
  CHECK(o2.at("alpha").empty());
  CHECK(o2.at("lower_extremal") == "F_OZAKI");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli({}).code == exit_usage);
  CHECK(run_cli({"frobnicate"}).code == exit_usage);
  CHECK(run_cli({"bounds", "--family", "starlike"}).code == exit_usage);
  CHECK(run_cli({"bounds", "--alpha", "1.5"}).code == exit_usage);
  CHECK(run_cli({"bounds", "--gamma", "pi/2"}).code == exit_usage);
  CHECK(run_cli({"bounds", "--family", "ozaki", "--lambda", "0"}).code == exit_usage);
  CHECK(run_cli({"verify", "--grid", "1,2,3"}).code == exit_usage);
  CHECK(run_cli({"extremal", "--order", "3"}).code == exit_usage);
  CHECK(run_cli({"bounds", "--format", "xml"}).code == exit_usage);
  const auto bad = run_cli({"bounds", "--alpha", "one"});
  CHECK(bad.code == exit_usage);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(run_cli({"--help"}).code == exit_pass);
}

TEST_CASE("verify: spirallike at gamma = pi/3") {
  const auto v = run_cli({"verify", "--family", "spirallike", "--gamma", "pi/3", "--format", "csv"});
  CHECK(v.code == exit_pass);
  const auto rows = parse_csv(v.out);
  const auto& max2 = find_row(rows, "check", "numeric_max", "functional", "D2");
  CHECK(std::abs(num(max2, "target") - 0.5) < 1e-15);
  CHECK(num(max2, "residual") <= 1e-3);
  CHECK(max2.at("gamma_input") == "pi/3");
  CHECK(num(max2, "gamma") == std::numbers::pi / 3);
  CHECK(find_row(rows, "check", "attain:F_SPIRAL").at("pass") == "true");
  CHECK(v.err.find("pass") != std::string::npos);
}

TEST_CASE("verify: convex argmin and Ozaki minimum") {
  const auto c = run_cli({"verify", "--family", "convex", "--format", "csv"});
  CHECK(c.code == exit_pass);
  CHECK(std::abs(num(find_row(parse_csv(c.out), "check", "argmin_c"), "value") - 1.0) <= 0.01);

  const auto o = run_cli({"verify", "--family", "ozaki", "--lambda", "0.25", "--format", "csv"});
  CHECK(o.code == exit_pass);
  const auto& min2 = find_row(parse_csv(o.out), "check", "numeric_min", "functional", "D2");
  CHECK(std::abs(num(min2, "value") + 0.095238095238095233) < 1e-3);
}

TEST_CASE("verify reports a failure with status 1") {
  const auto v = run_cli({"verify", "--family", "convex", "--alpha", "0.9", "--tol", "1e-7", "--format", "csv"});
  CHECK(v.code == exit_failure);
  const auto rows = parse_csv(v.out);
  CHECK(find_row(rows, "check", "numeric_min", "functional", "D2").at("pass") == "false");
  CHECK(v.err.find("FAIL") != std::string::npos);
}

TEST_CASE("sweep: spirallike lattice of 15 points") {
  const auto s = run_cli({"sweep", "--family", "spirallike", "--alphas", "0,0.25,0.5", "--gammas",
                          "0,pi/6,-pi/6,pi/3,-pi/3", "--format", "csv"});
  CHECK(s.code == exit_pass);
  const auto rows = parse_csv(s.out);
  REQUIRE(rows.size() == 15);
  for (const auto& r : rows) CHECK(r.at("pass") == "true");
  // Lexicographic order in (alpha, gamma).
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto key = [](const Row& r) { return std::pair{num(r, "alpha"), num(r, "gamma")}; };
    CHECK(key(rows[i - 1]) < key(rows[i]));
  }
  CHECK(rows[0].at("gamma_input") == "-pi/3");
}

TEST_CASE("sweep: Ozaki lower endpoint is continuous across 1/2") {
  const auto s = run_cli({"sweep", "--family", "ozaki", "--lambdas", "0.1:1.0:10", "--grid", "41,21,64", "--tol",
                          "0.05", "--format", "csv"});
  const auto rows = parse_csv(s.out);
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(num(rows[i], "d2_lower") - num(rows[i - 1], "d2_lower")) < 0.1);
  }
  CHECK(std::abs(num(rows[4], "d2_lower") + 5.0 / 24.0) < 1e-14);
}

TEST_CASE("sweep: empty lattice and partial failures") {
  const auto e = run_cli({"sweep", "--family", "convex", "--alphas", "0:1:0", "--format", "csv"});
  CHECK(e.code == exit_pass);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 1);

  const auto f = run_cli({"sweep", "--family", "convex", "--alphas", "0,1.5", "--grid", "21,11,32", "--tol", "1",
                          "--format", "csv"});
  CHECK(f.code == exit_failure);
  const auto rows = parse_csv(f.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at("pass") == "true");
  CHECK(rows[1].at("pass") == "false");
  CHECK_FALSE(rows[1].at("error").empty());
}

TEST_CASE("extremal tables") {
  const auto s = run_cli({"extremal", "--family", "spirallike", "--format", "csv"});
  CHECK(s.code == exit_pass);
  const auto rows = parse_csv(s.out);
  const auto& k = find_row(rows, "extremal", "K");
  CHECK(std::abs(num(k, "a2_re") - 2.0) < 1e-12);
  CHECK(std::abs(num(k, "a3_re") - 3.0) < 1e-12);
  CHECK(std::abs(num(k, "d1") - 1.0) < 1e-12);
  const auto& f = find_row(rows, "extremal", "F_SPIRAL");
  CHECK(std::abs(num(f, "a2_re") - 1.0) < 1e-10);
  CHECK(std::abs(num(f, "a3_re")) < 1e-10);
  CHECK(std::abs(num(f, "d2") + 1.0) < 1e-10);

  const auto c = run_cli({"extremal", "--family", "convex", "--format", "csv"});
  const auto& q = find_row(parse_csv(c.out), "extremal", "Q", "functional", "D2");
  CHECK(std::abs(num(q, "a3_re") - 1.0 / 3.0) < 1e-14);
  CHECK(std::abs(num(q, "d2") - 1.0 / 3.0) < 1e-14);
}

TEST_CASE("sample command") {
  const auto s = run_cli({"sample", "--family", "ozaki", "--lambda", "1", "--samples", "200", "--format", "csv"});
  CHECK(s.code == exit_pass);
  const auto rows = parse_csv(s.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].at("violations") == "0");
}

TEST_CASE("identical configs give byte-identical output") {
  for (const char* fmt : {"csv", "json"}) {
    const std::vector<std::string> args{"sample", "--family", "convex", "--alpha", "0.3", "--gamma", "-pi/5",
                                        "--samples", "100", "--seed", "9", "--format", fmt};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  const auto j = run_cli({"bounds", "--gamma", "pi/4", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed[0]["gamma_input"] == "pi/4");
  CHECK(parsed[0]["gamma"].get<double>() == std::numbers::pi / 4);
}

TEST_CASE("config file with flag precedence and output path") {
  const auto cfg = temp_path("succoef_test_config.ini");
  {
    std::ofstream f(cfg);
    f << "family=convex\nalpha=0.5\ngamma=0\nformat=csv\n";
  }
  const auto from_file = run_cli({"bounds", "--config", cfg.string()});
  CHECK(from_file.code == exit_pass);
  const auto& r = find_row(parse_csv(from_file.out), "functional", "D1");
  CHECK(r.at("family") == "convex");
  CHECK(num(r, "alpha") == 0.5);

  const auto overridden = run_cli({"bounds", "--config", cfg.string(), "--alpha", "0.25"});
  CHECK(num(find_row(parse_csv(overridden.out), "functional", "D1"), "alpha") == 0.25);

  const auto out = temp_path("succoef_test_out.csv");
  const auto written = run_cli({"bounds", "--config", cfg.string(), "--out", out.string()});
  CHECK(written.code == exit_pass);
  CHECK(written.out.empty());
  std::ifstream in(out, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == from_file.out);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
