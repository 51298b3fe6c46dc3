#include "wrightkit/stable.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "series.hpp"
#include "wrightkit/quadrature.hpp"
#include "wrightkit/special.hpp"
#include "wrightkit/wright.hpp"

namespace wrightkit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSnap = 1e-12;

bool on_boundary(const StableParams& p) {
  return std::abs(std::abs(p.theta) - p.theta_bound()) <= kSnap;
}

EvalResult smooth(double v, Method m = Method::closed_form) {
  return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v), m, Status::ok};
}

}  // namespace

bool StableParams::is_extremal() const {
  return alpha != 1.0 && alpha != 2.0 && on_boundary(*this);
}

StableParams validate_stable(double alpha, double theta) {
  if (!std::isfinite(alpha) || !std::isfinite(theta))
    throw DomainError("stable: non-finite parameter");
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("stable: alpha must lie in (0, 2]");
  StableParams p{alpha, theta};
  const double b = p.theta_bound();
  if (std::abs(theta) > b + kSnap)
    throw DomainError(alpha < 1.0 ? "stable: |theta| > alpha" : "stable: |theta| > 2 - alpha");
  if (std::abs(std::abs(theta) - b) <= kSnap) p.theta = std::copysign(b, theta);
  if (b == 0.0) p.theta = 0.0;
  return p;
}

double density_value(const DensityValue& d) {
  if (const auto* e = std::get_if<EvalResult>(&d)) return e->value;
  throw DomainError("density_value: point mass has no density");
}

std::complex<double> stable_cf(const StableParams& p, double kappa) {
  const double a = std::pow(std::abs(kappa), p.alpha);
  const double ph = (kappa > 0.0 ? 1.0 : kappa < 0.0 ? -1.0 : 0.0) * p.theta * 0.5;
  return std::exp(-a * std::complex<double>(std::cos(kPi * ph), sin_pi(ph)));
}

EvalResult stable_series(const StableParams& p, double x, const SeriesControl& ctl) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("stable_series: x must be positive");
  if (p.alpha == 1.0) throw DomainError("stable_series: no series for alpha = 1");
  ctl.validate();
  const long double lx = std::log(static_cast<long double>(x));
  const long double a = p.alpha;
  const bool small = p.alpha < 1.0;
  // alpha < 1: powers of x^{-alpha}; alpha > 1: powers of x
  const double ang = small ? 0.5 * (p.theta - p.alpha) : 0.5 * (p.theta - p.alpha) / p.alpha;
  auto term = [&](int n) -> long double {
    const double s = sin_pi(n * ang);
    if (s == 0.0) return 0.0L;
    long double lg;
    if (small)
      lg = std::lgamma(1.0L + n * a) - std::lgamma(n + 1.0L) - n * a * lx - lx;
    else
      lg = std::lgamma(1.0L + n / a) - std::lgamma(n + 1.0L) + (n - 1) * lx;
    const long double mag = std::exp(lg);
    return (n % 2 ? -mag : mag) * s;
  };
  detail::SeriesSum s = detail::sum_series(term, ctl, 1);
  EvalResult r = detail::to_result(s, ctl);
  r.value /= kPi;
  r.err_est /= kPi;
  return r;
}

EvalResult stable_tail_asymptotic(const StableParams& p, double x, const SeriesControl& ctl) {
  if (!(p.alpha > 1.0 && p.alpha < 2.0)) throw DomainError("stable_tail_asymptotic: alpha must lie in (1, 2)");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("stable_tail_asymptotic: x must be positive");
  ctl.validate();
  const long double lx = std::log(static_cast<long double>(x));
  const long double a = p.alpha;
  const double ang = 0.5 * (p.theta - p.alpha);
  long double sum = 0.0L;
  long double prev_env = std::numeric_limits<long double>::infinity();
  long double omitted = 0.0L;
  for (int n = 1; n <= ctl.max_terms; ++n) {
    // stop at the smallest envelope term, the series diverges past it
    const long double env = std::exp(std::lgamma(1.0L + n * a) - std::lgamma(n + 1.0L) - (n * a + 1.0L) * lx);
    if (env > prev_env) break;
    prev_env = env;
    omitted = env;
    const long double t = (n % 2 ? -env : env) * sin_pi(n * ang);
    sum += t;
    if (env < 0.01L * ctl.rel_tol * std::fabs(sum)) break;
  }
  EvalResult r;
  r.value = static_cast<double>(sum / std::numbers::pi_v<long double>);
  r.err_est = static_cast<double>(omitted / std::numbers::pi_v<long double>) +
              std::numeric_limits<double>::epsilon() * std::abs(r.value);
  r.method = Method::asymptotic;
  if (r.err_est > ctl.rel_tol * std::abs(r.value)) r.status = Status::accuracy_loss;
  return r;
}

EvalResult stable_cf_inversion(const StableParams& p, double x, const QuadratureControl& ctl) {
  if (!std::isfinite(x)) throw DomainError("stable_cf_inversion: non-finite x");
  if (p.is_singular()) throw DomainError("stable_cf_inversion: singular law");
  const double a = p.alpha;
  const double c = std::cos(0.5 * kPi * p.theta);
  const double s = sin_pi(0.5 * p.theta);
  // envelope exp(-c k^alpha) below 1e-18 beyond k_max
  const double k_max = std::pow(42.0 / c, 1.0 / a);
  const RealFn f = [=](double k) {
    if (k == 0.0) return 1.0;
    const double ka = std::pow(k, a);
    return std::exp(-c * ka) * std::cos(k * x + ka * s);
  };
  // one break per half period of the phase k x + s k^alpha
  std::vector<double> pts{0.0};
  const double cap = k_max / 64.0;
  double k = 0.0;
  while (k < k_max && pts.size() < 6000) {
    const double kk = std::max(k, 1e-12 * k_max);
    const double dphi = std::abs(x + a * s * std::pow(kk, a - 1.0));
    k += std::min(cap, std::max(kPi / std::max(dphi, 1e-300), 1e-6 * k_max));
    pts.push_back(std::min(k, k_max));
  }
  if (pts.back() < k_max) pts.push_back(k_max);
  QuadratureControl q = ctl;
  q.max_subdivisions = std::max<int>(ctl.max_subdivisions, 4 * static_cast<int>(pts.size()));
  EvalResult r = integrate(f, pts, q);
  r.value /= kPi;
  r.err_est = r.err_est / kPi + 1e-17;
  r.method = Method::integral;
  return r;
}

EvalResult extremal_via_wright(double alpha, double x) {
  if (!std::isfinite(x)) throw DomainError("extremal_via_wright: non-finite x");
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("extremal_via_wright: alpha must lie in (0, 2]");
  if (alpha == 1.0) throw DomainError("extremal_via_wright: alpha = 1 is a point mass");
  if (alpha < 1.0) {
    if (x <= 0.0) return {0.0, 0.0, Method::closed_form, Status::ok};
    const EvalResult m = wright_m(alpha, std::pow(x, -alpha));
    const double k = alpha / std::pow(x, alpha + 1.0);
    if (k == 0.0 || !std::isfinite(k)) {
      // scaling overflow/underflow, recombine in logs
      const double lv = std::log(alpha) - (alpha + 1.0) * std::log(x) + std::log(m.value);
      return {std::exp(lv), std::exp(lv) * (m.err_est / m.value), m.method, m.status};
    }
    return {k * m.value, k * m.err_est, m.method, m.status};
  }
  const EvalResult m = wright_m(1.0 / alpha, x);
  return {m.value / alpha, m.err_est / alpha, m.method, m.status};
}

DensityValue stable_pdf(const StableParams& p, double x, const Controls& ctl) {
  if (!std::isfinite(x)) throw DomainError("stable_pdf: non-finite x");
  const double a = p.alpha;
  const double th = p.theta;
  if (p.is_singular()) return PointMass{-th, 1.0};
  if (a == 2.0) return smooth(std::exp(-0.25 * x * x) / (2.0 * std::sqrt(kPi)));
  if (a == 1.0) {
    const double c = std::cos(0.5 * kPi * th);
    const double s = sin_pi(0.5 * th);
    return smooth(c / (kPi * ((x + s) * (x + s) + c * c)));
  }
  if (a == 0.5 && std::abs(th) == 0.5) {
    const double y = th < 0.0 ? x : -x;
    if (y <= 0.0) return smooth(0.0);
    return smooth(std::exp(-0.25 / y) / (2.0 * std::sqrt(kPi) * y * std::sqrt(y)));
  }
  if (p.is_extremal()) {
    // the bridge is written for theta = -bound; mirror the other edge
    const double y = th < 0.0 ? x : -x;
    EvalResult r = extremal_via_wright(a, y);
    if (r.ok()) return r;
  }
  if (x < 0.0) return stable_pdf({a, -th}, -x, ctl);
  if (x > 0.0) {
    EvalResult r = stable_series(p, x, ctl.series);
    if (r.ok()) return r;
    if (a > 1.0) {
      EvalResult t = stable_tail_asymptotic(p, x, ctl.series);
      if (t.ok()) return t;
    }
  }
  QuadratureControl q = ctl.quad;
  q.abs_tol = std::min(q.abs_tol, 1e-13);
  return stable_cf_inversion(p, x, q);
}

DensityValue stable_scaled(const StableParams& p, double x, double t, const Controls& ctl) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("stable_scaled: t must be positive");
  const double sc = std::pow(t, 1.0 / p.alpha);
  DensityValue d = stable_pdf(p, x / sc, ctl);
  if (auto* pm = std::get_if<PointMass>(&d)) {
    pm->location *= sc;
    return d;
  }
  auto& e = std::get<EvalResult>(d);
  e.value /= sc;
  e.err_est /= sc;
  return d;
}

ReciprocalPair reciprocity_map(double alpha, double theta) {
  if (!(alpha >= 0.5 && alpha <= 1.0)) throw DomainError("reciprocity_map: alpha must lie in [1/2, 1]");
  if (!std::isfinite(theta) || std::abs(theta) > 2.0 - 1.0 / alpha + kSnap)
    throw DomainError("reciprocity_map: |theta| > 2 - 1/alpha");
  return {1.0 / alpha, alpha * (theta + 1.0) - 1.0};
}

}  // namespace wrightkit
