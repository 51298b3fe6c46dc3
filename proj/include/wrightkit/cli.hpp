#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wrightkit/common.hpp"

namespace wrightkit::cli {

enum class Format { csv, json };

struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  bool log = false;

  void validate() const;
  std::vector<double> points() const;
};

/// "min:max:count"
GridSpec parse_grid(const std::string& s, bool log = false);

struct RunConfig {
  Controls ctl;
  Format format = Format::csv;
  std::string out_path;  // empty: stdout
};

/// Reads series / quadrature overrides and output settings from a JSON
/// file into cfg. Throws DomainError on a malformed file.
void load_config_file(const std::string& path, RunConfig& cfg);

/// Applies $WRIGHTKIT_CONFIG when set.
void load_config_env(RunConfig& cfg);

std::uint64_t fnv1a(const std::string& s);

struct Row {
  double abscissa;
  double value;
  std::string method;
  double err_est;
};

struct Table {
  std::string name;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Row> rows;
};

struct Report {
  std::string command;  // e.g. "eval m"
  std::string config;   // canonical config text, hashed into the output
  std::vector<Table> tables;

  std::uint64_t hash() const { return fnv1a(config); }
};

void write_csv(std::ostream& os, const Report& r);
void write_json(std::ostream& os, const Report& r);
void write_report(const Report& r, const RunConfig& cfg);

/// Method name, with ":status" appended when the status is not ok.
std::string method_label(const EvalResult& r);

struct Params {
  std::optional<double> nu, alpha, theta, mu, lambda, x, t, s;
  double diffusivity = 1.0;
};

/// Failure inside a numerical routine; the message names the routine.
class EvalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// cmd_eval. Exactly one of grid (space / argument axis) and grid_t (time
/// axis) is used. Throws DomainError for bad parameters and EvalFailure
/// when evaluation breaks down.
Report eval_report(const std::string& fn, const Params& p, const std::optional<GridSpec>& grid,
                   const std::optional<GridSpec>& grid_t, const RunConfig& cfg);

const std::vector<std::string>& eval_functions();

/// Tables behind figures 1..9; throws DomainError for other ids.
Report figure_report(int id, const RunConfig& cfg);

struct Check {
  std::string name;
  double max_err;
  double tol;
  bool pass;
};

struct SuiteResult {
  std::string id;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
};

const std::vector<std::string>& verify_suites();

/// Runs one suite by id; throws DomainError for an unknown id.
SuiteResult run_suite(const std::string& id);

void write_verify_text(std::ostream& os, const std::vector<SuiteResult>& r);
void write_verify_json(std::ostream& os, const std::vector<SuiteResult>& r);

}  // namespace wrightkit::cli
