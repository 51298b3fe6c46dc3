#include "wrightkit/wright.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "series.hpp"
#include "wrightkit/quadrature.hpp"
#include "wrightkit/stable.hpp"
#include "wrightkit/transforms.hpp"

namespace wrightkit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDblEps = std::numeric_limits<double>::epsilon();

void check_nu(double nu, const char* who) {
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError(std::string(who) + ": nu must lie in (0, 1)");
}

void check_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite argument");
}

// sum_n z^n/n! * rgamma(a n + b)
EvalResult wright_series(double a, double b, double z, const SeriesControl& ctl) {
  ctl.validate();
  const long double lz = z;
  long double p = 1.0L;
  auto term = [&](int n) {
    if (n > 0) p *= lz / n;
    const long double rg = rgamma_ld(static_cast<long double>(a) * n + b);
    return rg == 0.0L ? 0.0L : p * rg;
  };
  // |1/Gamma(x)| <= Gamma(1 - x)/pi for x < 1/2
  auto bound = [&](int n) {
    const long double x = static_cast<long double>(a) * n + b;
    if (x >= 0.5L) return 0.0L;
    return std::fabs(p) * std::tgamma(1.0L - x) / std::numbers::pi_v<long double>;
  };
  return detail::to_result(detail::sum_series(term, ctl, 0, bound), ctl);
}

// Liemert-Kleine kernel C_nu(phi)
long double lk_kernel(long double nu, long double phi) {
  const long double s = std::sin(phi);
  const long double a = std::sin((1.0L - nu) * phi) / s;
  const long double b = std::sin(nu * phi) / s;
  return a * std::pow(b, nu / (1.0L - nu));
}

struct LkSetup {
  long double nu;
  long double c0;
  long double big_x;  // x^{1/(1-nu)}
  double width;       // phi where (C - C0) X = 1
};

LkSetup lk_setup(double nu, double x) {
  LkSetup s;
  s.nu = nu;
  const long double r = 1.0L - nu;
  s.c0 = r * std::pow(static_cast<long double>(nu), nu / r);
  s.big_x = std::pow(static_cast<long double>(x), 1.0L / r);
  long double lo = 0.0L;
  long double hi = std::numbers::pi_v<long double>;
  for (int i = 0; i < 80; ++i) {
    const long double mid = 0.5L * (lo + hi);
    const long double c = lk_kernel(s.nu, mid);
    if (std::isfinite(c) && (c - s.c0) * s.big_x < 1.0L)
      lo = mid;
    else
      hi = mid;
  }
  s.width = static_cast<double>(hi);
  return s;
}

}  // namespace

void WrightParams::validate() const {
  if (!(lambda > -1.0) || !std::isfinite(lambda))
    throw DomainError("WrightParams: lambda must exceed -1");
  if (!std::isfinite(mu)) throw DomainError("WrightParams: mu must be finite");
}

double DispatchTable::series_max_x(double nu) const {
  if (m_series_max_x.empty()) return 0.0;
  if (nu <= m_series_max_x.front().first) return m_series_max_x.front().second;
  for (std::size_t i = 1; i < m_series_max_x.size(); ++i) {
    const auto& [n1, x1] = m_series_max_x[i];
    if (nu <= n1) {
      const auto& [n0, x0] = m_series_max_x[i - 1];
      return x0 + (x1 - x0) * (nu - n0) / (n1 - n0);
    }
  }
  return m_series_max_x.back().second;
}

void DispatchTable::validate() const {
  for (std::size_t i = 0; i < m_series_max_x.size(); ++i) {
    const auto& [n, x] = m_series_max_x[i];
    if (!(n >= 0.0 && n <= 1.0) || !(x >= 0.0))
      throw DomainError("DispatchTable: series knots need nu in [0,1] and x >= 0");
    if (i > 0 && !(n > m_series_max_x[i - 1].first))
      throw DomainError("DispatchTable: series knots must be increasing in nu");
  }
  if (!(asym_rel_width > 0.0 && asym_rel_width < 1.0))
    throw DomainError("DispatchTable: asym_rel_width must lie in (0, 1)");
  if (!(ml.series_max_y > 0.0) || !(ml.asym_min_y >= ml.series_max_y))
    throw DomainError("DispatchTable: need 0 < ml series_max_y <= asym_min_y");
}

const DispatchTable& default_dispatch() {
  static const DispatchTable table;
  return table;
}

EvalResult wright_w(const WrightParams& p, double z, const SeriesControl& ctl) {
  p.validate();
  check_finite(z, "wright_w");
  return wright_series(p.lambda, p.mu, z, ctl);
}

EvalResult m_series(double nu, double x, const SeriesControl& ctl) {
  check_nu(nu, "m_series");
  check_finite(x, "m_series");
  return wright_series(-nu, 1.0 - nu, -x, ctl);
}

std::optional<EvalResult> m_closed_form(double nu, double x) {
  check_finite(x, "m_closed_form");
  if (nu == 0.5) {
    const double v = std::exp(-0.25 * x * x) / std::sqrt(kPi);
    return EvalResult{v, 2.0 * kDblEps * v, Method::closed_form, Status::ok};
  }
  if (nu == 1.0 / 3.0) {
    const auto a = airy(x / std::cbrt(3.0));
    const double c = std::cbrt(9.0);
    return EvalResult{c * a.ai.value, c * a.ai.err_est + 2.0 * kDblEps * std::abs(c * a.ai.value),
                      Method::closed_form, a.ai.status};
  }
  if (nu == 2.0 / 3.0) {
    const double arg = x * x / std::pow(3.0, 4.0 / 3.0);
    const auto a = airy(arg);
    const double e = std::exp(-2.0 * x * x * x / 27.0);
    const double c = std::pow(3.0, -2.0 / 3.0);
    const double t1 = std::cbrt(3.0) * x * a.ai.value;
    const double t2 = 3.0 * a.ai_prime.value;
    const double v = c * (t1 - t2) * e;
    const double err = c * e * (std::cbrt(3.0) * std::abs(x) * a.ai.err_est + 3.0 * a.ai_prime.err_est) +
                       c * e * (std::abs(t1) + std::abs(t2)) * 4.0 * kDblEps;
    return EvalResult{v, err, Method::closed_form, worst(a.ai.status, a.ai_prime.status)};
  }
  return std::nullopt;
}

EvalResult m_lk_integral(double nu, double x) {
  check_nu(nu, "m_lk_integral");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("m_lk_integral: x must be positive");
  const LkSetup s = lk_setup(nu, x);
  const RealFn g = [&s](double phi) {
    const long double c = lk_kernel(s.nu, phi);
    if (!std::isfinite(c)) return 0.0;
    const long double e = (c - s.c0) * s.big_x;
    if (e > 11000.0L) return 0.0;
    return static_cast<double>(c * std::exp(-e));
  };
  std::vector<double> pts{0.0};
  for (double f : {1.0, 3.0, 10.0, 30.0, 100.0, 300.0}) {
    const double p = f * s.width;
    if (p < 0.999 * kPi) pts.push_back(p);
  }
  pts.push_back(kPi);
  QuadratureControl q;
  q.rel_tol = 1e-13;
  q.abs_tol = 1e-300;
  const EvalResult in = integrate(g, pts, q);
  const long double r = 1.0L - nu;
  const long double log_pref = nu / r * std::log(static_cast<long double>(x)) - std::log(r) -
                               std::log(std::numbers::pi_v<long double>) - s.c0 * s.big_x;
  const double pref = static_cast<double>(std::exp(log_pref));
  EvalResult out{pref * in.value, pref * in.err_est + 4.0 * kDblEps * pref * in.value,
                 Method::integral, in.status};
  return out;
}

EvalResult w_tail_lk(double nu, double mu, double z) {
  check_nu(nu, "w_tail_lk");
  if (mu != 1.0 && mu != nu) throw DomainError("w_tail_lk: mu must be 1 or nu");
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("w_tail_lk: z must be positive");
  const LkSetup s = lk_setup(nu, z);
  const double a = 2.0 - nu;
  // Gamma(a, X) e^X
  auto scaled_gamma = [a](long double X) -> long double {
    if (X < 600.0L) return boost::math::tgamma(a, static_cast<double>(X)) * std::exp(X);
    long double term = std::pow(X, a - 1.0L), sum = term;
    for (int k = 1; k < 30; ++k) {
      term *= (a - k) / X;
      sum += term;
      if (std::abs(term) < 1e-19L * std::abs(sum)) break;
    }
    return sum;
  };
  const RealFn g = [&](double phi) {
    const long double c = lk_kernel(s.nu, phi);
    if (!std::isfinite(c)) return 0.0;
    const long double e = (c - s.c0) * s.big_x;
    if (e > 11000.0L) return 0.0;
    if (mu == 1.0) return static_cast<double>(std::exp(-e));
    return static_cast<double>(std::pow(c, s.nu - 1.0L) * scaled_gamma(c * s.big_x) * std::exp(-e));
  };
  std::vector<double> pts{0.0};
  for (double f : {1.0, 3.0, 10.0, 30.0, 100.0, 300.0}) {
    const double p = f * s.width;
    if (p < 0.999 * kPi) pts.push_back(p);
  }
  pts.push_back(kPi);
  QuadratureControl q;
  q.rel_tol = 1e-13;
  q.abs_tol = 1e-300;
  const EvalResult in = integrate(g, pts, q);
  const long double k = mu == 1.0 ? 1.0L : static_cast<long double>(nu);
  const double pref = static_cast<double>(k / std::numbers::pi_v<long double> * std::exp(-s.c0 * s.big_x));
  return {pref * in.value, pref * in.err_est + 4.0 * kDblEps * pref * in.value, Method::integral, in.status};
}

double m_asymptotic_a(double nu) {
  check_nu(nu, "m_asymptotic");
  return 1.0 / std::sqrt(2.0 * kPi * (1.0 - nu));
}

double m_asymptotic_b(double nu) {
  check_nu(nu, "m_asymptotic");
  return (1.0 - nu) / nu;
}

EvalResult m_asymptotic(double nu, double y) {
  check_nu(nu, "m_asymptotic");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("m_asymptotic: y must be positive");
  const double r = 1.0 - nu;
  const double v = m_asymptotic_a(nu) * std::pow(y, (nu - 0.5) / r) *
                   std::exp(-m_asymptotic_b(nu) * std::pow(y, 1.0 / r));
  const double rel = nu == 0.5 ? 0.0 : std::pow(y, -1.0 / r) / r;
  return {v, std::abs(v) * rel + 2.0 * kDblEps * std::abs(v), Method::asymptotic, Status::ok};
}

EvalResult wright_m(double nu, double x, const SeriesControl& ctl, const DispatchTable& table) {
  check_nu(nu, "wright_m");
  check_finite(x, "wright_m");
  if (x == 0.0) return {rgamma(1.0 - nu), 0.0, Method::series, Status::ok};
  if (x > 0.0 || nu == 0.5 || nu == 1.0 / 3.0) {
    if (auto c = m_closed_form(nu, x)) return *c;
  }
  if (x < 0.0) return m_series(nu, x, ctl);

  if (x <= table.series_max_x(nu)) {
    EvalResult s = m_series(nu, x, ctl);
    if (s.ok()) return s;
  }
  const LkSetup setup = lk_setup(nu, x);
  if (setup.width < table.asym_rel_width * kPi) return m_asymptotic(nu, nu * x);
  return m_lk_integral(nu, x);
}

EvalResult wright_f_direct(double nu, double z, const SeriesControl& ctl) {
  check_nu(nu, "wright_f");
  check_finite(z, "wright_f");
  EvalResult s = wright_series(-nu, 0.0, -z, ctl);
  if (s.ok() || z <= 0.0) return s;
  if (nu <= 0.5) {
    // exp(-z s^nu) stays bounded on the Talbot contour
    EvalResult t = talbot_invert(LaplaceDescriptor::single(0.0, z, nu), 1.0);
    t.method = Method::integral;
    return t;
  }
  // F_nu(z) = y L(y), y = z^{-1/nu}, with L the one-sided stable density of
  // index nu, by Fourier inversion of its characteristic function
  const double y = std::pow(z, -1.0 / nu);
  QuadratureControl q;
  q.abs_tol = 1e-14;
  const EvalResult l = stable_cf_inversion({nu, -nu}, y, q);
  return {y * l.value, y * l.err_est, Method::integral, l.status};
}

EvalResult wright_f(double nu, double z, const SeriesControl& ctl, const DispatchTable& table) {
  check_nu(nu, "wright_f");
  check_finite(z, "wright_f");
  if (z < 0.0) return wright_f_direct(nu, z, ctl);
  if (z == 0.0) return {0.0, 0.0, Method::series, Status::ok};
  EvalResult m = wright_m(nu, z, ctl, table);
  const double k = nu * z;
  return {k * m.value, k * m.err_est, m.method, m.status};
}

EvalResult m_symmetric_pdf(double nu, double x, const SeriesControl& ctl,
                           const DispatchTable& table) {
  EvalResult m = wright_m(nu, std::abs(x), ctl, table);
  return {0.5 * m.value, 0.5 * m.err_est, m.method, m.status};
}

EvalResult m_two_var(double nu, double x, double t, const SeriesControl& ctl,
                     const DispatchTable& table) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("m_two_var: t must be positive");
  const double tn = std::pow(t, -nu);
  EvalResult m = wright_m(nu, x * tn, ctl, table);
  return {tn * m.value, tn * m.err_est, m.method, m.status};
}

}  // namespace wrightkit
