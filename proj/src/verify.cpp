#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>

#include "wrightkit/cli.hpp"
#include "wrightkit/fractional.hpp"
#include "wrightkit/moments.hpp"
#include "wrightkit/special.hpp"
#include "wrightkit/stable.hpp"
#include "wrightkit/tfdwe.hpp"
#include "wrightkit/transforms.hpp"
#include "wrightkit/wright.hpp"

namespace wrightkit::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using P = std::pair<double, double>;

// running maximum of one identity
struct Acc {
  std::string name;
  double tol;
  double max = 0.0;

  void add(double err) { max = std::isfinite(err) ? std::max(max, err) : kInf; }
  void add_rel(double a, double b) { add(std::abs(a - b) / std::max(std::abs(b), 1e-300)); }
  Check done() const { return {name, max, tol, max <= tol}; }
};

// boolean property, reported as 0 / 1 against tolerance 0
Check flag(const std::string& name, bool ok) { return {name, ok ? 0.0 : 1.0, 0.0, ok}; }

std::vector<Check> closed_forms() {
  Acc g{"M_1/2 series vs Gaussian", 1e-10}, a{"M_1/3 series vs Airy form", 1e-8}, b{"M_2/3 series vs Airy form", 1e-7};
  for (double x = 0.0; x <= 5.0 + 1e-12; x += 0.05) g.add_rel(m_series(0.5, x).value, m_closed_form(0.5, x)->value);
  for (double x = 0.0; x <= 4.0 + 1e-12; x += 0.05)
    a.add_rel(m_series(1.0 / 3.0, x).value, m_closed_form(1.0 / 3.0, x)->value);
  for (double x = 0.0; x <= 3.0 + 1e-12; x += 0.05)
    b.add_rel(m_series(2.0 / 3.0, x).value, m_closed_form(2.0 / 3.0, x)->value);
  return {g.done(), a.done(), b.done()};
}

std::vector<Check> auxiliary() {
  Acc e{"|F - nu z M| / (1 + |F|)", 1e-10};
  for (int i = 1; i <= 9; ++i)
    for (int j = 0; j <= 16; ++j) {
      const double nu = 0.1 * i, z = 0.5 * j;
      const double f = wright_f_direct(nu, z).value;
      e.add(std::abs(f - nu * z * wright_m(nu, z).value) / (1.0 + std::abs(f)));
    }
  return {e.done()};
}

std::vector<Check> laplace_pairs() {
  Acc m{"L[M_nu](s) vs E_nu(-s)", 1e-6}, t{"four sisters vs Talbot", 1e-6}, b{"four sisters vs branch cut", 1e-6};
  for (double nu : {0.25, 0.5, 0.75})
    for (double s : {0.5, 1.0, 2.0})
      m.add(std::abs(laplace_fwd([nu](double r) { return wright_m(nu, r).value; }, s).value -
                     mittag_leffler(nu, 1.0, -s).value));
  for (double nu : {0.25, 0.5, 0.75}) {
    const FourSisters f = four_sisters(nu, 1.0, 1.0);
    for (int k = 0; k < 4; ++k) {
      const auto d = LaplaceDescriptor::single(f.mu[k], 1.0, nu);
      t.add(std::abs(talbot_invert(d, 1.0).value - f.value[k].value));
      b.add(std::abs(bromwich_branchcut_invert(d, 1.0).value - f.value[k].value));
    }
  }
  return {m.done(), t.done(), b.done()};
}

std::vector<Check> three_sisters_suite() {
  Acc inv{"branch-cut inversion vs closed forms", 1e-7}, tab{"Laplace-domain relations (finite differences)", 1e-6};
  for (double t : {0.25, 1.0, 4.0}) {
    const auto c = three_sisters(1.0, t);
    const auto b = three_sisters_bromwich(1.0, t);
    inv.add(std::abs(b.phi.value - c.phi.value));
    inv.add(std::abs(b.psi.value - c.psi.value));
    inv.add(std::abs(b.chi.value - c.chi.value));
  }
  const double h = 1e-5;
  for (double a : {0.5, 1.0, 2.0})
    for (double s : {0.5, 1.0, 4.0}) {
      const auto L = three_sisters_laplace(a, s);
      const auto ap = three_sisters_laplace(a + h, s), am = three_sisters_laplace(a - h, s);
      const auto sp = three_sisters_laplace(a, s + h), sm = three_sisters_laplace(a, s - h);
      tab.add(std::abs(L.phi - L.psi / s));
      tab.add(std::abs(L.phi + (ap.chi - am.chi) / (2 * h) / s));
      tab.add(std::abs(L.psi - s * L.phi));
      tab.add(std::abs(L.psi + (ap.chi - am.chi) / (2 * h)));
      tab.add(std::abs(L.chi + (ap.phi - am.phi) / (2 * h)));
      tab.add(std::abs(L.chi + 2.0 / a * (sp.psi - sm.psi) / (2 * h)));
    }
  return {inv.done(), tab.done()};
}

std::vector<Check> reciprocity_suite() {
  Acc r{"reciprocity triple spread", 1e-10}, c{"nu = 1/2 Green functions vs Gaussian forms", 1e-12};
  for (double nu : {0.25, 0.5, 0.75})
    for (double x : {0.5, 1.0, 2.0})
      for (double t : {0.5, 1.0, 2.0})
        for (double d : {1.0, 4.0}) {
          const auto q = reciprocity({Problem::cauchy, nu, d}, x, t);
          r.add(std::max({q.lhs, q.mid, q.rhs}) - std::min({q.lhs, q.mid, q.rhs}));
          if (nu == 0.5) {
            const double e = std::exp(-x * x / (4 * d * t));
            c.add_rel(green_cauchy({Problem::cauchy, nu, d}, x, t).value, e / (2 * std::sqrt(kPi * d * t)));
            c.add_rel(green_signalling({Problem::signalling, nu, d}, x, t).value,
                      x / (2 * std::sqrt(kPi * d * t * t * t)) * e);
          }
        }
  return {r.done(), c.done()};
}

std::vector<Check> moments_suite() {
  Acc m{"absolute moments by quadrature", 1e-5}, n{"normalization", 1e-6};
  for (double nu : {0.25, 0.5, 0.75})
    for (double d : {0.5, 1.0, 2.0, 3.0}) m.add(std::abs(m_abs_moment_numeric(nu, d).value - m_abs_moment(nu, d)));
  for (int i = 1; i <= 9; ++i) n.add(std::abs(m_abs_moment_numeric(0.1 * i, 0.0).value - 1.0));
  return {m.done(), n.done()};
}

std::vector<Check> char_fn_suite() {
  Acc c{"cosine transform of M_nu vs E_2nu(-k^2)", 1e-5};
  for (double nu : {0.5, 0.75})
    for (double k : {0.5, 1.0, 2.0}) c.add(std::abs(m_char_fn_numeric(nu, k).value - m_char_fn(nu, k)));
  return {c.done()};
}

std::vector<Check> composition_suite() {
  Acc c{"composition lambda = mu = 1/2", 1e-5};
  for (double x : {0.5, 1.0, 2.0})
    for (double t : {0.5, 1.0, 2.0}) {
      const auto p = composition_check(0.5, 0.5, x, t);
      c.add(std::abs(p.lhs - p.rhs));
    }
  return {c.done()};
}

std::vector<Check> stable_suite() {
  Acc br{"extremal bridge vs Feller series", 1e-7}, sy{"symmetry L(-x; theta) = L(x; -theta)", 1e-10},
      rc{"reciprocity at (1/2, 0) vs Levy-Smirnov", 1e-8}, nm{"normalization", 1e-5};
  for (double alpha : {0.5, 0.75})
    for (double x : {0.3, 0.8, 1.5, 3.0})
      br.add(std::abs(extremal_via_wright(alpha, x).value - stable_series({alpha, -alpha}, x).value));
  for (double x : {0.4, 1.0, 2.5}) br.add(std::abs(extremal_via_wright(1.5, x).value - stable_series({1.5, -0.5}, x).value));
  for (auto [a, th] : {P{0.5, 0.3}, P{0.8, -0.5}, P{1.5, 0.4}, P{1.2, -0.6}})
    for (double x : {0.3, 1.0, 2.5})
      sy.add(std::abs(density_value(stable_pdf(validate_stable(a, th), -x)) -
                      density_value(stable_pdf(validate_stable(a, -th), x))));
  // x^{-3/2} L_2^0(x^{-1/2}) = L_{1/2}^{-1/2}(x), the Levy-Smirnov density
  const ReciprocalPair rp = reciprocity_map(0.5, 0.0);
  for (double x : {0.2, 0.5, 1.0, 2.0, 5.0}) {
    const double lhs = std::pow(x, -1.5) * density_value(stable_pdf(validate_stable(2.0, 0.0), 1.0 / std::sqrt(x)));
    const double ls = std::exp(-1.0 / (4 * x)) / (2 * std::sqrt(kPi) * std::pow(x, 1.5));
    rc.add(std::abs(lhs - ls));
    rc.add(std::abs(density_value(stable_pdf(validate_stable(0.5, rp.theta_star), x)) - ls));
  }
  for (auto [a, th] : {P{0.75, 0.25}, P{1.5, 0.3}, P{2.0, 0.0}}) {
    const StableParams p = validate_stable(a, th);
    const double pts[] = {-kInf, -10.0, 0.0, 10.0, kInf};
    nm.add(std::abs(integrate([p](double x) { return density_value(stable_pdf(p, x)); }, pts).value - 1.0));
  }
  bool uni = true;
  for (auto [a, th] : {P{0.5, 0.0}, P{0.7, 0.5}, P{1.0, 0.0}, P{1.5, -0.5}, P{1.8, 0.1}}) {
    const StableParams p = validate_stable(a, th);
    int turns = 0;
    double prev = density_value(stable_pdf(p, -8.0));
    int dir = 1;
    for (int i = 1; i <= 400; ++i) {
      const double v = density_value(stable_pdf(p, -8.0 + 16.0 * i / 400));
      const int d = v > prev ? 1 : v < prev ? -1 : dir;
      if (d != dir) {
        ++turns;
        dir = d;
      }
      prev = v;
    }
    uni = uni && turns <= 1;
  }
  return {br.done(), sy.done(), rc.done(), nm.done(), flag("unimodality on five parameter pairs", uni)};
}

std::vector<Check> frac_calc_suite() {
  Acc pr{"power rules (J then D round trip)", 4e-16}, q{"sampled quadrature vs power rules", 1e-6},
      c1{"Caputo derivative of a constant", 1e-12}, bb{"RL-Caputo bridge", 1e-7};
  for (double g : {0.0, 0.5, 1.0, 2.0})
    for (double a : {0.3, 0.5, 1.5}) {
      const PowerTerm back =
          apply_power_rule(PowerKind::derivative, a, apply_power_rule(PowerKind::integral, a, {1.0, g}));
      pr.add(std::max(std::abs(back.coef - 1.0), std::abs(back.exponent - g) / std::max(1.0, g)));
      std::vector<double> xs(513), ys(513);
      for (int i = 0; i <= 512; ++i) {
        xs[i] = std::pow(i / 512.0, 2.0);
        ys[i] = i == 0 ? (g == 0.0 ? 1.0 : 0.0) : std::pow(xs[i], g);
      }
      const double exact = power_rule(PowerKind::integral, a, g, 1.0);
      q.add(std::abs(rl_integral(SampledFunction(xs, ys), a, 1.0).value - exact) / exact);
    }
  const SmoothFn one{[](double) { return 1.0; }, {[](double) { return 0.0; }, [](double) { return 0.0; }}};
  for (double a : {0.3, 0.7, 1.5})
    for (double t : {0.5, 2.0}) c1.add(std::abs(caputo_derivative(one, a, t).value));
  const SmoothFn e{[](double t) { return std::exp(t); }, {[](double t) { return std::exp(t); }}};
  const double init[] = {1.0};
  for (double t : {0.25, 0.5, 1.0})
    bb.add(std::abs(rl_derivative(e, 0.5, t, init).value - rl_derivative_direct(e.f, 0.5, t).value));
  return {pr.done(), q.done(), c1.done(), bb.done()};
}

std::vector<Check> asymptotics_suite() {
  Acc ex{"nu = 1/2 exactness", 1e-13}, r1{"ratio to LK integral, nu = 1/4, y >= 8", 0.1},
      r3{"ratio to LK integral, nu = 3/4, y >= 1", 0.1};
  for (double y : {0.5, 1.0, 2.0, 4.0}) ex.add_rel(m_asymptotic(0.5, y).value, std::exp(-4 * y * y / 4) / std::sqrt(kPi));
  for (double y = 8.0; y <= 20.0; y += 2.0) r1.add(std::abs(m_asymptotic(0.25, y).value / m_lk_integral(0.25, 4 * y).value - 1.0));
  for (double y = 1.0; y <= 6.0; y += 1.0)
    r3.add(std::abs(m_asymptotic(0.75, y).value / m_lk_integral(0.75, y / 0.75).value - 1.0));
  return {ex.done(), r1.done(), r3.done()};
}

bool nonneg(const Report& r) {
  for (const Table& t : r.tables)
    for (const Row& row : t.rows)
      if (!(row.value >= 0.0)) return false;
  return true;
}

std::vector<Check> figures_suite() {
  RunConfig cfg;
  bool nn = true;
  for (int id : {1, 2, 5, 6}) nn = nn && nonneg(figure_report(id, cfg));
  const Report f4 = figure_report(4, cfg);
  int turns = 0, dir = 1;
  const auto& rows = f4.tables.at(0).rows;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int d = rows[i].value > rows[i - 1].value ? 1 : rows[i].value < rows[i - 1].value ? -1 : dir;
    if (d != dir) {
      ++turns;
      dir = d;
    }
  }
  const Report f8 = figure_report(8, cfg);
  bool mono = true;
  for (const Table& t : f8.tables) {
    if (t.name.rfind("phi", 0) != 0) continue;
    const bool vs_t = t.name.find("vs t") != std::string::npos;
    for (std::size_t i = 1; i < t.rows.size(); ++i)
      mono = mono && (vs_t ? t.rows[i].value >= t.rows[i - 1].value : t.rows[i].value <= t.rows[i - 1].value);
  }
  return {flag("M_nu non-negative in figures 1, 2, 5, 6", nn), flag("figure 4 density has a single mode", turns == 1),
          flag("figure 8 step response is monotone", mono)};
}

using SuiteFn = std::function<std::vector<Check>()>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"closed-forms", closed_forms},   {"auxiliary", auxiliary},
      {"laplace-pairs", laplace_pairs}, {"three-sisters", three_sisters_suite},
      {"reciprocity", reciprocity_suite}, {"moments", moments_suite},
      {"char-fn", char_fn_suite},       {"composition", composition_suite},
      {"stable", stable_suite},         {"frac-calc", frac_calc_suite},
      {"asymptotics", asymptotics_suite}, {"figures", figures_suite}};
  return r;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : registry()) v.push_back(k);
    return v;
  }();
  return ids;
}

SuiteResult run_suite(const std::string& id) {
  for (const auto& [k, f] : registry()) {
    if (k != id) continue;
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{id, {}, 0.0};
    try {
      r.checks = f();
    } catch (const std::exception& e) {
      r.checks.push_back({std::string("exception: ") + e.what(), kInf, 0.0, false});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw DomainError("verify: unknown suite '" + id + "'");
}

void write_verify_text(std::ostream& os, const std::vector<SuiteResult>& rs) {
  for (const SuiteResult& r : rs) {
    os << (r.pass() ? "PASS " : "FAIL ") << r.id << " (" << num(r.seconds) << " s)\n";
    for (const Check& c : r.checks)
      os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << ": max " << num(c.max_err) << " tol " << num(c.tol)
         << "\n";
  }
}

void write_verify_json(std::ostream& os, const std::vector<SuiteResult>& rs) {
  auto jnum = [](double v) { return std::isfinite(v) ? num(v) : std::string("null"); };
  auto jstr = [](const std::string& s) {
    std::string o = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') o += '\\';
      o += c;
    }
    return o + "\"";
  };
  bool all = true;
  os << "{\"suites\":[";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const SuiteResult& r = rs[i];
    all = all && r.pass();
    os << (i ? "," : "") << "\n{\"id\":" << jstr(r.id) << ",\"pass\":" << (r.pass() ? "true" : "false")
       << ",\"seconds\":" << jnum(r.seconds) << ",\"checks\":[";
    for (std::size_t k = 0; k < r.checks.size(); ++k) {
      const Check& c = r.checks[k];
      os << (k ? "," : "") << "{\"name\":" << jstr(c.name) << ",\"max_err\":" << jnum(c.max_err)
         << ",\"tol\":" << jnum(c.tol) << ",\"pass\":" << (c.pass ? "true" : "false") << "}";
    }
    os << "]}";
  }
  os << "],\n\"pass\":" << (all ? "true" : "false") << "}\n";
}

}  // namespace wrightkit::cli
