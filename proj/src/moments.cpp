#include "wrightkit/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wrightkit/special.hpp"
#include "wrightkit/transforms.hpp"
#include "wrightkit/wright.hpp"

namespace wrightkit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_nu_open(double nu, const char* who) {
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError(std::string(who) + ": nu must lie in (0, 1)");
}

void check_nu_moment(double nu, const char* who) {
  if (!(nu >= 0.0 && nu < 1.0)) throw DomainError(std::string(who) + ": nu must lie in [0, 1)");
}

double m_at(double nu, double x) { return nu == 0.0 ? std::exp(-x) : wright_m(nu, x).value; }

double mm(double nu, double x, double t) {
  if (nu == 1.0) throw DomainError("two-variable M: nu = 1 is a point mass");
  return m_two_var(nu, x, t).value;
}

}  // namespace

double m_abs_moment(double nu, double delta) {
  check_nu_moment(nu, "m_abs_moment");
  if (!(delta > -1.0) || !std::isfinite(delta)) throw DomainError("m_abs_moment: delta must exceed -1");
  return gamma(delta + 1.0).value * rgamma(nu * delta + 1.0);
}

EvalResult m_abs_moment_numeric(double nu, double delta, const QuadratureControl& ctl) {
  check_nu_moment(nu, "m_abs_moment_numeric");
  if (!(delta > -1.0) || !std::isfinite(delta)) throw DomainError("m_abs_moment: delta must exceed -1");
  const double p = 1.0 / (delta + 1.0);
  const EvalResult head = integrate([&](double u) { return m_at(nu, std::pow(u, p)); }, 0.0, 1.0, ctl);
  const EvalResult tail = integrate([&](double x) { return std::pow(x, delta) * m_at(nu, x); }, 1.0, kInf, ctl);
  return {p * head.value + tail.value, p * head.err_est + tail.err_est, Method::integral,
          worst(head.status, tail.status)};
}

double m_integer_moment_via_ml(double nu, int n) {
  check_nu_moment(nu, "m_integer_moment_via_ml");
  if (n < 0) throw DomainError("m_integer_moment_via_ml: n must be >= 0");
  // E_nu(-s) = sum_k (-1)^k s^k / Gamma(nu k + 1); the n-th derivative at 0
  // keeps only k = n, with n! from the power
  long double fact = 1.0L;
  for (int k = 2; k <= n; ++k) fact *= k;
  const double sign_n = n % 2 == 0 ? 1.0 : -1.0;
  const double coef = sign_n * rgamma(nu * n + 1.0);
  return sign_n * static_cast<double>(fact) * coef;
}

double m_char_fn(double nu, double kappa) {
  check_nu_open(nu, "m_char_fn");
  if (!std::isfinite(kappa)) throw DomainError("m_char_fn: kappa must be finite");
  if (kappa == 0.0) return 1.0;
  return mittag_leffler(2.0 * nu, 1.0, -kappa * kappa).value;
}

EvalResult m_char_fn_numeric(double nu, double kappa, const QuadratureControl& ctl) {
  check_nu_open(nu, "m_char_fn_numeric");
  return cosine_transform([nu](double x) { return m_at(nu, x); }, kappa, ctl);
}

double mvar_transform(MvarAxis axis, double nu, double fixed, double v) {
  check_nu_open(nu, "mvar_transform");
  switch (axis) {
    case MvarAxis::t:
      if (!(fixed >= 0.0)) throw DomainError("mvar_transform: x must be >= 0");
      if (!(v > 0.0)) throw DomainError("mvar_transform: s must be positive");
      return std::pow(v, nu - 1.0) * std::exp(-fixed * std::pow(v, nu));
    case MvarAxis::x:
      if (!(fixed > 0.0)) throw DomainError("mvar_transform: t must be positive");
      if (!(v >= 0.0)) throw DomainError("mvar_transform: s must be >= 0");
      if (v == 0.0) return 1.0;
      return mittag_leffler(nu, 1.0, -v * std::pow(fixed, nu)).value;
    case MvarAxis::fourier:
      if (!(fixed > 0.0)) throw DomainError("mvar_transform: t must be positive");
      if (v == 0.0) return 2.0;
      return 2.0 * mittag_leffler(2.0 * nu, 1.0, -v * v * std::pow(fixed, 2.0 * nu)).value;
  }
  return 0.0;
}

EvalResult mvar_transform_numeric(MvarAxis axis, double nu, double fixed, double v, const QuadratureControl& ctl) {
  mvar_transform(axis, nu, fixed, v);  // argument checks
  switch (axis) {
    case MvarAxis::t:
      return laplace_fwd([&](double t) { return t == 0.0 ? 0.0 : mm(nu, fixed, t); }, v, ctl);
    case MvarAxis::x:
      if (v == 0.0) return integrate([&](double x) { return mm(nu, x, fixed); }, 0.0, kInf, ctl);
      return laplace_fwd([&](double x) { return mm(nu, x, fixed); }, v, ctl);
    case MvarAxis::fourier: {
      EvalResult r = cosine_transform([&](double x) { return mm(nu, x, fixed); }, v, ctl);
      r.value *= 2.0;
      r.err_est *= 2.0;
      return r;
    }
  }
  return {};
}

CompositionPair composition_check(double lambda, double mu, double x, double t, const QuadratureControl& ctl) {
  if (!(lambda > 0.0 && lambda <= 1.0) || !(mu > 0.0 && mu <= 1.0))
    throw DomainError("composition_check: lambda and mu must lie in (0, 1]");
  if (!(x > 0.0) || !(t > 0.0)) throw DomainError("composition_check: x and t must be positive");
  const double nu = lambda * mu;
  const double lhs = nu == 1.0 ? (x == t ? kInf : 0.0) : mm(nu, x, t);
  if (mu == 1.0) return {lhs, lambda == 1.0 ? lhs : mm(lambda, x, t), 0.0};
  if (lambda == 1.0) return {lhs, mm(mu, x, t), 0.0};

  const RealFn f = [&](double tau) { return tau == 0.0 ? 0.0 : mm(lambda, x, tau) * mm(mu, tau, t); };
  // the second factor lives on tau ~ t^mu, the first peaks near tau ~ x^{1/lambda}
  const double c = std::pow(t, mu);
  std::vector<double> pts{0.0, 0.5 * c, c, 2.0 * c, 4.0 * c, std::pow(x, 1.0 / lambda), kInf};
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const EvalResult r = integrate(f, pts, ctl);
  return {lhs, r.value, r.err_est};
}

}  // namespace wrightkit
