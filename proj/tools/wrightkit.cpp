#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wrightkit/cli.hpp"

using namespace wrightkit;
using namespace wrightkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"wrightkit: Wright functions, stable densities and fractional diffusion"};
  app.require_subcommand(1);

  Params p;
  std::string fn, grid_s, grid_t_s, format, out, config;
  bool log_grid = false, as_json = false;
  std::optional<double> tol;
  int figure = 0;
  std::vector<std::string> suites;

  auto* ev = app.add_subcommand("eval", "evaluate a function on a grid");
  ev->add_option("fn", fn, "function")->required()->check(CLI::IsMember(eval_functions()));
  ev->add_option("--nu", p.nu);
  ev->add_option("--alpha", p.alpha);
  ev->add_option("--theta", p.theta);
  ev->add_option("--mu", p.mu);
  ev->add_option("--lambda", p.lambda);
  ev->add_option("--x", p.x);
  ev->add_option("--t", p.t);
  ev->add_option("--s", p.s);
  ev->add_option("--diffusivity", p.diffusivity);
  ev->add_option("--grid", grid_s, "min:max:count");
  ev->add_option("--grid-t", grid_t_s, "min:max:count along t");
  ev->add_flag("--log", log_grid, "logarithmic spacing");

  auto* fig = app.add_subcommand("figures", "tables behind one figure");
  fig->add_option("id", figure)->required();

  auto* ver = app.add_subcommand("verify", "run identity checks");
  ver->add_option("suites", suites, "suite ids, or all");
  ver->add_flag("--json", as_json);

  for (auto* sub : {ev, fig}) {
    sub->add_option("--out", out, "output file");
    sub->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  }
  for (auto* sub : {ev, fig, ver}) {
    sub->add_option("--tol", tol, "series relative tolerance");
    sub->add_option("--config", config, "JSON config file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    load_config_env(cfg);
    if (!config.empty()) load_config_file(config, cfg);
    if (tol) {
      cfg.ctl.series.rel_tol = *tol;
      cfg.ctl.series.validate();
    }
    if (!out.empty()) cfg.out_path = out;
    if (format == "json") cfg.format = Format::json;
    if (format == "csv") cfg.format = Format::csv;

    if (*ev) {
      std::optional<GridSpec> g, gt;
      if (!grid_s.empty()) g = parse_grid(grid_s, log_grid);
      if (!grid_t_s.empty()) gt = parse_grid(grid_t_s, log_grid);
      write_report(eval_report(fn, p, g, gt, cfg), cfg);
      return 0;
    }
    if (*fig) {
      write_report(figure_report(figure, cfg), cfg);
      return 0;
    }
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = verify_suites();
    std::vector<SuiteResult> rs;
    for (const auto& id : suites) rs.push_back(run_suite(id));
    if (as_json)
      write_verify_json(std::cout, rs);
    else
      write_verify_text(std::cout, rs);
    for (const auto& r : rs)
      if (!r.pass()) return 1;
    return 0;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EvalFailure& e) {
    std::cerr << "evaluation failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "evaluation failed: " << e.what() << "\n";
    return 3;
  }
}
