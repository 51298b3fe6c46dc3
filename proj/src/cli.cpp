#include "wrightkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "wrightkit/special.hpp"
#include "wrightkit/stable.hpp"
#include "wrightkit/tfdwe.hpp"
#include "wrightkit/wright.hpp"

namespace wrightkit::cli {
namespace {

using json = nlohmann::json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string controls_text(const Controls& c) {
  return "series=" + num(c.series.rel_tol) + "," + std::to_string(c.series.max_terms) + "," +
         std::to_string(c.series.consecutive_small) + ";quad=" + num(c.quad.abs_tol) + "," + num(c.quad.rel_tol) +
         "," + std::to_string(c.quad.max_subdivisions) + "," + num(c.quad.tail_cutoff);
}

std::string grid_text(const GridSpec& g) {
  return num(g.min) + ":" + num(g.max) + ":" + std::to_string(g.count) + (g.log ? ":log" : "");
}

void json_escape(std::ostream& os, const std::string& s) {
  os << json(s).dump();
}

}  // namespace

// ---- grids and config ----

void GridSpec::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) throw DomainError("grid: need min < max");
  if (count < 2) throw DomainError("grid: count must be >= 2");
  if (log && !(min > 0.0)) throw DomainError("grid: log spacing needs min > 0");
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> p(count);
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    p[i] = log ? min * std::pow(max / min, f) : min + (max - min) * f;
  }
  p.back() = max;
  return p;
}

GridSpec parse_grid(const std::string& s, bool log) {
  GridSpec g;
  g.log = log;
  const auto a = s.find(':');
  const auto b = a == std::string::npos ? a : s.find(':', a + 1);
  if (b == std::string::npos) throw DomainError("grid: expected min:max:count, got '" + s + "'");
  try {
    std::size_t used = 0;
    g.min = std::stod(s.substr(0, a), &used);
    if (used != a) throw std::invalid_argument("min");
    g.max = std::stod(s.substr(a + 1, b - a - 1), &used);
    if (used != b - a - 1) throw std::invalid_argument("max");
    const std::string c = s.substr(b + 1);
    g.count = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument("count");
  } catch (const std::logic_error&) {
    throw DomainError("grid: expected min:max:count, got '" + s + "'");
  }
  g.validate();
  return g;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError("config: " + path + ": " + e.what());
  }
  if (!j.is_object()) throw DomainError("config: top level must be an object");
  try {
    for (auto& [k, v] : j.items()) {
      if (k == "series") {
        for (auto& [sk, sv] : v.items()) {
          if (sk == "rel_tol") cfg.ctl.series.rel_tol = sv.get<double>();
          else if (sk == "max_terms") cfg.ctl.series.max_terms = sv.get<int>();
          else if (sk == "consecutive_small") cfg.ctl.series.consecutive_small = sv.get<int>();
          else throw DomainError("config: unknown key series." + sk);
        }
      } else if (k == "quadrature") {
        for (auto& [qk, qv] : v.items()) {
          if (qk == "abs_tol") cfg.ctl.quad.abs_tol = qv.get<double>();
          else if (qk == "rel_tol") cfg.ctl.quad.rel_tol = qv.get<double>();
          else if (qk == "max_subdivisions") cfg.ctl.quad.max_subdivisions = qv.get<int>();
          else if (qk == "tail_cutoff") cfg.ctl.quad.tail_cutoff = qv.get<double>();
          else throw DomainError("config: unknown key quadrature." + qk);
        }
      } else if (k == "format") {
        const auto f = v.get<std::string>();
        if (f == "csv") cfg.format = Format::csv;
        else if (f == "json") cfg.format = Format::json;
        else throw DomainError("config: format must be csv or json");
      } else if (k == "out") {
        cfg.out_path = v.get<std::string>();
      } else {
        throw DomainError("config: unknown key " + k);
      }
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  cfg.ctl.series.validate();
  cfg.ctl.quad.validate();
}

void load_config_env(RunConfig& cfg) {
  if (const char* p = std::getenv("WRIGHTKIT_CONFIG"); p && *p) load_config_file(p, cfg);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// ---- output ----

std::string method_label(const EvalResult& r) {
  std::string m(to_string(r.method));
  if (!r.ok()) m += ":" + std::string(to_string(r.status));
  return m;
}

void write_csv(std::ostream& os, const Report& r) {
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.hash()));
  os << "# wrightkit " << r.command << "\n# config-hash: " << hash << "\n";
  for (std::size_t i = 0; i < r.tables.size(); ++i) {
    const Table& t = r.tables[i];
    if (i > 0) os << "\n";
    os << "# table: " << t.name << "\n";
    for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << "\n";
    os << "abscissa,value,method,err_est\n";
    for (const Row& row : t.rows)
      os << num(row.abscissa) << "," << num(row.value) << "," << row.method << "," << num(row.err_est) << "\n";
  }
}

void write_json(std::ostream& os, const Report& r) {
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.hash()));
  os << "{\"command\":";
  json_escape(os, r.command);
  os << ",\"config_hash\":\"" << hash << "\",\"columns\":[\"abscissa\",\"value\",\"method\",\"err_est\"],\"tables\":[";
  for (std::size_t i = 0; i < r.tables.size(); ++i) {
    const Table& t = r.tables[i];
    os << (i ? "," : "") << "\n{\"name\":";
    json_escape(os, t.name);
    os << ",\"meta\":{";
    for (std::size_t k = 0; k < t.meta.size(); ++k) {
      os << (k ? "," : "");
      json_escape(os, t.meta[k].first);
      os << ":";
      json_escape(os, t.meta[k].second);
    }
    os << "},\"rows\":[";
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
      const Row& row = t.rows[k];
      // non-finite values are not valid JSON numbers
      auto val = [](double v) { return std::isfinite(v) ? num(v) : "\"" + num(v) + "\""; };
      os << (k ? "," : "") << "[" << val(row.abscissa) << "," << val(row.value) << ",\"" << row.method << "\","
         << val(row.err_est) << "]";
    }
    os << "]}";
  }
  os << "]}\n";
}

void write_report(const Report& r, const RunConfig& cfg) {
  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) throw DomainError("cannot open output file " + cfg.out_path);
  }
  std::ostream& os = cfg.out_path.empty() ? std::cout : file;
  if (cfg.format == Format::json)
    write_json(os, r);
  else
    write_csv(os, r);
}

// ---- eval ----

namespace {

using PointFn = std::function<EvalResult(double)>;

struct Series {
  std::string name;
  PointFn f;
};

double need(const std::optional<double>& v, const char* flag, const std::string& fn) {
  if (!v) throw DomainError("eval " + fn + ": missing " + flag);
  return *v;
}

Table run_series(const std::string& fn, const Series& s, const std::vector<double>& grid) {
  Table t{s.name, {}, {}};
  t.rows.reserve(grid.size());
  for (double a : grid) {
    EvalResult r;
    try {
      r = s.f(a);
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvalFailure("eval " + fn + " (" + s.name + ") at " + num(a) + ": " + e.what());
    }
    t.rows.push_back({a, r.value, method_label(r), r.err_est});
  }
  return t;
}

}  // namespace

const std::vector<std::string>& eval_functions() {
  static const std::vector<std::string> f{"wright", "m",        "f",        "ml",     "green-cauchy",
                                          "green-signalling", "sisters3", "sisters4", "stable", "mvar"};
  return f;
}

Report eval_report(const std::string& fn, const Params& p, const std::optional<GridSpec>& grid,
                   const std::optional<GridSpec>& grid_t, const RunConfig& cfg) {
  const auto& fns = eval_functions();
  if (std::find(fns.begin(), fns.end(), fn) == fns.end()) throw DomainError("eval: unknown function '" + fn + "'");
  if (grid.has_value() == grid_t.has_value()) throw DomainError("eval " + fn + ": give exactly one of --grid, --grid-t");
  const bool two_var = fn.rfind("green", 0) == 0 || fn == "sisters3" || fn == "sisters4" || fn == "mvar";
  if (grid_t && !two_var) throw DomainError("eval " + fn + ": --grid-t applies to time-dependent functions only");
  const GridSpec g = grid ? *grid : *grid_t;
  const bool over_t = grid_t.has_value();
  const SeriesControl& sc = cfg.ctl.series;

  Report r;
  r.command = "eval " + fn;
  std::string ptxt;
  std::vector<std::pair<std::string, std::string>> meta;
  auto add = [&](const char* k, const std::optional<double>& v) {
    if (v) {
      meta.emplace_back(k, num(*v));
      ptxt += std::string(k) + "=" + num(*v) + ";";
    }
  };
  add("nu", p.nu);
  add("alpha", p.alpha);
  add("theta", p.theta);
  add("mu", p.mu);
  add("lambda", p.lambda);
  add("x", p.x);
  add("t", p.t);
  add("s", p.s);
  if (p.diffusivity != 1.0) add("diffusivity", p.diffusivity);
  meta.emplace_back(over_t ? "grid-t" : "grid", grid_text(g));
  r.config = r.command + ";" + ptxt + (over_t ? "grid-t=" : "grid=") + grid_text(g) + ";" + controls_text(cfg.ctl);

  // (space, time) for two-variable functions
  auto xt = [&](double a) -> std::pair<double, double> {
    if (over_t) return {need(p.x, "--x", fn), a};
    return {a, need(p.t, "--t", fn)};
  };

  std::vector<Series> series;
  if (fn == "wright") {
    const WrightParams wp{need(p.lambda, "--lambda", fn), need(p.mu, "--mu", fn)};
    wp.validate();
    series.push_back({"W", [wp, sc](double z) { return wright_w(wp, z, sc); }});
  } else if (fn == "m") {
    const double nu = need(p.nu, "--nu", fn);
    series.push_back({"M", [nu, sc](double x) { return wright_m(nu, x, sc); }});
  } else if (fn == "f") {
    const double nu = need(p.nu, "--nu", fn);
    series.push_back({"F", [nu, sc](double z) { return wright_f(nu, z, sc); }});
  } else if (fn == "ml") {
    const double a = need(p.alpha, "--alpha", fn);
    const double b = p.mu.value_or(1.0);
    series.push_back({"E", [a, b, sc](double x) { return mittag_leffler(a, b, x, sc); }});
  } else if (fn == "green-cauchy" || fn == "green-signalling") {
    const GreenSpec gs{fn == "green-cauchy" ? Problem::cauchy : Problem::signalling, need(p.nu, "--nu", fn),
                       p.diffusivity};
    gs.validate();
    series.push_back({"G", [gs, xt](double a) {
                        const auto [x, t] = xt(a);
                        return green(gs, x, t);
                      }});
  } else if (fn == "sisters3") {
    const char* names[] = {"phi", "psi", "chi"};
    for (int k = 0; k < 3; ++k)
      series.push_back({names[k], [k, xt](double a) {
                          const auto [x, t] = xt(a);
                          const auto s = three_sisters(x, t);
                          return k == 0 ? s.phi : k == 1 ? s.psi : s.chi;
                        }});
  } else if (fn == "sisters4") {
    const double nu = need(p.nu, "--nu", fn);
    const char* names[] = {"mu=0", "mu=1-nu", "mu=nu", "mu=1"};
    for (int k = 0; k < 4; ++k)
      series.push_back({names[k], [k, nu, xt](double a) {
                          const auto [x, t] = xt(a);
                          return four_sisters(nu, x, t).value[k];
                        }});
  } else if (fn == "stable") {
    const StableParams sp = validate_stable(need(p.alpha, "--alpha", fn), need(p.theta, "--theta", fn));
    if (sp.is_singular()) {
      const PointMass pm = std::get<PointMass>(stable_pdf(sp, 0.0, cfg.ctl));
      Table t{"L", meta, {}};
      t.meta.emplace_back("point-mass", "location=" + num(pm.location) + " weight=" + num(pm.weight));
      r.tables.push_back(std::move(t));
      return r;
    }
    const Controls ctl = cfg.ctl;
    series.push_back({"L", [sp, ctl](double x) { return std::get<EvalResult>(stable_pdf(sp, x, ctl)); }});
  } else if (fn == "mvar") {
    const double nu = need(p.nu, "--nu", fn);
    series.push_back({"M(x,t)", [nu, sc, xt](double a) {
                        const auto [x, t] = xt(a);
                        return m_two_var(nu, x, t, sc);
                      }});
  }

  const std::vector<double> pts = g.points();
  for (const Series& s : series) {
    Table t = run_series(fn, s, pts);
    t.meta = meta;
    r.tables.push_back(std::move(t));
  }
  return r;
}

// ---- figures ----

namespace {

Table curve(const std::string& name, const std::vector<double>& grid, const PointFn& f) {
  return run_series("figures", {name, f}, grid);
}

std::string frac(double v) {
  const int den[] = {1, 2, 3, 4, 8};
  for (int d : den) {
    const double n = v * d;
    if (std::abs(n - std::round(n)) < 1e-12)
      return d == 1 ? std::to_string(static_cast<int>(std::round(n)))
                    : std::to_string(static_cast<int>(std::round(n))) + "/" + std::to_string(d);
  }
  return num(v);
}

void sisters_figure(Report& r, double nu) {
  const GridSpec tg{0.025, 5.0, 200, false};
  const GridSpec xg{0.0, 5.0, 201, false};
  if (nu == 0.5) {
    const char* names[] = {"phi", "psi", "chi"};
    for (int k = 0; k < 3; ++k) {
      auto pick = [k](const ThreeSisters& s) { return k == 0 ? s.phi : k == 1 ? s.psi : s.chi; };
      r.tables.push_back(curve(std::string(names[k]) + " vs t (x=1)", tg.points(),
                               [pick](double t) { return pick(three_sisters(1.0, t)); }));
      r.tables.push_back(curve(std::string(names[k]) + " vs x (t=1)", xg.points(),
                               [pick](double x) { return pick(three_sisters(x, 1.0)); }));
    }
    return;
  }
  const char* names[] = {"mu=0", "mu=1-nu", "mu=nu", "mu=1"};
  for (int k = 0; k < 4; ++k) {
    r.tables.push_back(curve(std::string(names[k]) + " vs t (x=1)", tg.points(),
                             [k, nu](double t) { return four_sisters(nu, 1.0, t).value[k]; }));
    r.tables.push_back(curve(std::string(names[k]) + " vs x (t=1)", xg.points(),
                             [k, nu](double x) { return four_sisters(nu, x, 1.0).value[k]; }));
  }
}

}  // namespace

Report figure_report(int id, const RunConfig& cfg) {
  if (id < 1 || id > 9) throw DomainError("figures: id must lie in 1..9");
  Report r;
  r.command = "figures " + std::to_string(id);
  r.config = r.command + ";" + controls_text(cfg.ctl);
  const SeriesControl sc = cfg.ctl.series;
  const Controls ctl = cfg.ctl;

  auto m_family = [&](const std::vector<double>& nus, bool symmetric) {
    const GridSpec g = symmetric ? GridSpec{-5.0, 5.0, 401, false} : GridSpec{0.0, 5.0, 201, false};
    for (double nu : nus) {
      const std::string name = "nu=" + frac(nu);
      if (nu == 1.0) {
        Table t{name, {}, {}};
        if (symmetric) {
          t.meta.emplace_back("point-mass", "location=-1 weight=1");
          t.meta.emplace_back("point-mass", "location=1 weight=1");
        } else {
          t.meta.emplace_back("point-mass", "location=1 weight=1");
        }
        r.tables.push_back(std::move(t));
        continue;
      }
      r.tables.push_back(curve(name, g.points(), [nu, sc](double x) {
        const double a = std::abs(x);
        if (nu == 0.0) return EvalResult{std::exp(-a), 0.0, Method::closed_form, Status::ok};
        return wright_m(nu, a, sc);
      }));
    }
  };

  switch (id) {
    case 1:
      m_family({0.0, 0.125, 0.25, 0.375, 0.5}, false);
      break;
    case 2:
      m_family({0.5, 0.625, 0.75, 1.0}, false);
      break;
    case 3: {
      const StableParams sp = validate_stable(0.5, -0.5);
      r.tables.push_back(curve("alpha=1/2 theta=-1/2", GridSpec{0.0, 5.0, 201, false}.points(),
                               [sp, ctl](double x) { return std::get<EvalResult>(stable_pdf(sp, x, ctl)); }));
      break;
    }
    case 4: {
      const StableParams sp = validate_stable(1.5, -0.5);
      r.tables.push_back(curve("alpha=3/2 theta=-1/2", GridSpec{-5.0, 5.0, 401, false}.points(),
                               [sp, ctl](double x) { return std::get<EvalResult>(stable_pdf(sp, x, ctl)); }));
      break;
    }
    case 5:
      m_family({0.0, 0.125, 0.25, 0.375, 0.5}, true);
      break;
    case 6:
      m_family({0.5, 0.625, 0.75, 1.0}, true);
      break;
    case 7:
      sisters_figure(r, 0.25);
      break;
    case 8:
      sisters_figure(r, 0.5);
      break;
    case 9:
      sisters_figure(r, 0.75);
      break;
  }
  return r;
}

}  // namespace wrightkit::cli
