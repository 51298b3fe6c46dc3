#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "wrightkit/cli.hpp"

using namespace wrightkit;
using namespace wrightkit::cli;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WRIGHTKIT_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string csv(const Report& r) {
  std::ostringstream os;
  write_csv(os, r);
  return os.str();
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("parse_grid") {
  const GridSpec g = parse_grid("-5:5:101");
  CHECK(g.min == -5.0);
  CHECK(g.max == 5.0);
  CHECK(g.count == 101);
  const auto p = g.points();
  REQUIRE(p.size() == 101);
  CHECK(p[50] == 0.0);
  CHECK(p.back() == 5.0);
  const auto l = parse_grid("0.01:100:5", true).points();
  CHECK(l[2] == doctest::Approx(1.0).epsilon(1e-14));
  for (const char* bad : {"1:0:5", "0:1:1", "0:1", "a:1:3", "0:1:3x", "-1:1:3"})
    CHECK_THROWS_AS(parse_grid(bad, std::string(bad) == "-1:1:3"), DomainError);
}

TEST_CASE("config file") {
  const auto path = tmp("wk_cfg_test.json");
  {
    std::ofstream f(path);
    f << R"({"series": {"rel_tol": 1e-12, "max_terms": 300}, "quadrature": {"abs_tol": 1e-11}, "format": "json"})";
  }
  RunConfig cfg;
  load_config_file(path.string(), cfg);
  CHECK(cfg.ctl.series.rel_tol == 1e-12);
  CHECK(cfg.ctl.series.max_terms == 300);
  CHECK(cfg.ctl.quad.abs_tol == 1e-11);
  CHECK(cfg.format == Format::json);
  {
    std::ofstream f(path);
    f << R"({"series": {"bogus": 1}})";
  }
  CHECK_THROWS_AS(load_config_file(path.string(), cfg), DomainError);
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK_THROWS_AS(load_config_file(path.string(), cfg), DomainError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_config_file(path.string(), cfg), DomainError);
}

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("eval m on a symmetric grid matches the Gaussian") {
  RunConfig cfg;
  Params p;
  p.nu = 0.5;
  const Report r = eval_report("m", p, parse_grid("-5:5:101"), std::nullopt, cfg);
  REQUIRE(r.tables.size() == 1);
  REQUIRE(r.tables[0].rows.size() == 101);
  for (const Row& row : r.tables[0].rows) {
    const double x = row.abscissa;
    CHECK(std::abs(row.value - std::exp(-x * x / 4.0) / std::sqrt(std::numbers::pi)) <= 1e-13);
  }
  const std::string a = csv(r), b = csv(eval_report("m", p, parse_grid("-5:5:101"), std::nullopt, cfg));
  CHECK(a == b);
  CHECK(a.rfind("# wrightkit eval m\n# config-hash: ", 0) == 0);
  RunConfig other;
  other.ctl.series.rel_tol = 1e-10;
  CHECK(eval_report("m", p, parse_grid("-5:5:101"), std::nullopt, other).hash() != r.hash());
}

TEST_CASE("eval argument rules") {
  RunConfig cfg;
  Params p;
  p.nu = 0.5;
  CHECK_THROWS_AS(eval_report("m", p, std::nullopt, std::nullopt, cfg), DomainError);
  CHECK_THROWS_AS(eval_report("m", p, parse_grid("0:1:3"), parse_grid("1:2:3"), cfg), DomainError);
  CHECK_THROWS_AS(eval_report("m", p, std::nullopt, parse_grid("1:2:3"), cfg), DomainError);
  CHECK_THROWS_AS(eval_report("nosuch", p, parse_grid("0:1:3"), std::nullopt, cfg), DomainError);
  Params q;
  CHECK_THROWS_AS(eval_report("m", q, parse_grid("0:1:3"), std::nullopt, cfg), DomainError);
  q.nu = 1.5;
  CHECK_THROWS_AS(eval_report("m", q, parse_grid("0:1:3"), std::nullopt, cfg), DomainError);
}

TEST_CASE("eval sisters4 and stable") {
  RunConfig cfg;
  Params p;
  p.nu = 0.5;
  p.x = 1.0;
  const Report r = eval_report("sisters4", p, std::nullopt, parse_grid("1:2:2"), cfg);
  REQUIRE(r.tables.size() == 4);
  CHECK(std::abs(r.tables[0].rows[0].value - 0.2196956447) <= 1e-9);
  CHECK(std::abs(r.tables[1].rows[0].value - 0.4393912894) <= 1e-9);
  CHECK(std::abs(r.tables[2].rows[0].value - 0.4393912894) <= 1e-9);
  CHECK(std::abs(r.tables[3].rows[0].value - std::erfc(0.5)) <= 1e-9);

  Params s;
  s.alpha = 0.5;
  s.theta = -0.5;
  const Report l = eval_report("stable", s, parse_grid("0.5:2:4"), std::nullopt, cfg);
  for (const Row& row : l.tables[0].rows) {
    const double x = row.abscissa;
    CHECK(std::abs(row.value - std::exp(-1.0 / (4 * x)) / (2 * std::sqrt(std::numbers::pi) * std::pow(x, 1.5))) <=
          1e-10);
  }
  s.alpha = 1.0;
  s.theta = 1.0;
  const Report pm = eval_report("stable", s, parse_grid("0:1:3"), std::nullopt, cfg);
  CHECK(pm.tables[0].rows.empty());
  CHECK(csv(pm).find("point-mass") != std::string::npos);
}

TEST_CASE("json output") {
  RunConfig cfg;
  Params p;
  p.nu = 0.25;
  std::ostringstream os;
  write_json(os, eval_report("m", p, parse_grid("0:2:3"), std::nullopt, cfg));
  const std::string j = os.str();
  CHECK(j.find("\"columns\":[\"abscissa\",\"value\",\"method\",\"err_est\"]") != std::string::npos);
  CHECK(j.find("\"rows\":[[0,") != std::string::npos);
}

TEST_CASE("figures") {
  RunConfig cfg;
  for (int id = 1; id <= 9; ++id) {
    CAPTURE(id);
    const Report r = figure_report(id, cfg);
    CHECK(!r.tables.empty());
    CHECK(csv(r) == csv(figure_report(id, cfg)));
  }
  CHECK_THROWS_AS(figure_report(0, cfg), DomainError);
  CHECK_THROWS_AS(figure_report(10, cfg), DomainError);
}

TEST_CASE("verify suites") {
  CHECK(verify_suites().size() == 12);
  const SuiteResult r = run_suite("reciprocity");
  CHECK(r.pass());
  CHECK(!r.checks.empty());
  CHECK_THROWS_AS(run_suite("nosuch"), DomainError);
}

TEST_CASE("binary: exit codes and byte-identical output") {
  const Run a = run("eval m --nu 0.5 --grid -5:5:101");
  CHECK(a.code == 0);
  int rows = 0;
  std::istringstream in(a.out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#' && line.rfind("abscissa", 0) != 0) ++rows;
  CHECK(rows == 101);
  CHECK(run("eval m --nu 0.5 --grid -5:5:101").out == a.out);
  CHECK(run("figures 99").code == 2);
  CHECK(run("eval m --grid 0:1:3").code == 2);
  CHECK(run("eval m --nu 0.5 --grid 1:0:3").code == 2);
  CHECK(run("eval --bogus").code == 2);
  const Run v = run("verify reciprocity");
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS reciprocity", 0) == 0);
  CHECK(run("verify nosuch").code == 2);

  const auto path = tmp("wk_cli_out.csv");
  CHECK(run("figures 3 --out " + path.string()).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run("figures 3").out);
  std::filesystem::remove(path);

  const auto cfg = tmp("wk_cli_cfg.json");
  {
    std::ofstream c(cfg);
    c << R"({"series": {"rel_tol": 1e-13}})";
  }
  const Run e = run("eval m --nu 0.5 --grid 0:1:3 --config " + cfg.string());
  CHECK(e.code == 0);
  CHECK(e.out != run("eval m --nu 0.5 --grid 0:1:3").out);  // hash differs
  const Run env = run("eval m --nu 0.5 --grid 0:1:3 --config /nonexistent.json");
  CHECK(env.code == 2);
  std::filesystem::remove(cfg);
}
