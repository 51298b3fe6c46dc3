#include "wrightkit/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "series.hpp"
#include "wrightkit/quadrature.hpp"

namespace wrightkit {
namespace {

constexpr long double kPiLd = 3.141592653589793238462643383279502884L;
constexpr double kPi = std::numbers::pi;
constexpr double kDblEps = std::numeric_limits<double>::epsilon();

// g = 7, n = 9 Lanczos coefficients
constexpr std::array<long double, 9> kLanczos = {
    0.99999999999980993227684700473478L,  676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,     12.507343278686904814458936853L,
    -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
    1.50563273514931155834e-7L};

long double lanczos_gamma(long double x) {
  x -= 1.0L;
  long double a = kLanczos[0];
  const long double t = x + 7.5L;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  const long double half_pow = std::pow(t, 0.5L * (x + 0.5L));
  return std::sqrt(2.0L * kPiLd) * half_pow * (std::exp(-t) * half_pow) * a;
}

long double sin_pi_ld(long double x) {
  long double r = std::fmod(x, 2.0L);  // (-2, 2)
  if (r > 1.0L) r -= 2.0L;
  if (r < -1.0L) r += 2.0L;
  if (r == 0.0L || std::fabs(r) == 1.0L) return 0.0L;
  if (r > 0.5L) r = 1.0L - r;
  if (r < -0.5L) r = -1.0L - r;
  return std::sin(kPiLd * r);
}

bool nonpositive_integer(long double x) { return x <= 0.0L && x == std::floor(x); }

// ---- Airy ----

constexpr long double kAi0 = 0.355028053887817239260063186004183177L;
constexpr long double kAip0 = 0.258819403792806798405183560189203963L;

AiryResult airy_maclaurin(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double f = 1.0L, fp = 0.0L, g = x, gp = 1.0L;
  long double tf = 1.0L, tfp = x * x / 2.0L, tg = x, tgp = 1.0L;
  long double mag = 1.0L + std::fabs(x);
  fp = tfp;
  for (int k = 1; k < 300; ++k) {
    tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    tgp *= x3 / ((3.0L * k) * (3.0L * k - 2.0L));
    if (k >= 2) tfp *= x3 / ((3.0L * k - 3.0L) * (3.0L * k - 1.0L));
    f += tf;
    g += tg;
    gp += tgp;
    if (k >= 2) fp += tfp;
    mag = std::max({mag, std::fabs(tf), std::fabs(tg), std::fabs(tfp), std::fabs(tgp)});
    const long double small = std::max({std::fabs(tf), std::fabs(tg), std::fabs(tfp), std::fabs(tgp)});
    if (small < 1e-22L * mag) break;
  }
  const long double ai = kAi0 * f - kAip0 * g;
  const long double aip = kAi0 * fp - kAip0 * gp;
  const double round = static_cast<double>(mag * detail::kEpsLd * 8.0L);
  AiryResult r;
  r.ai = {static_cast<double>(ai), round + kDblEps * std::abs(static_cast<double>(ai)),
          Method::series, Status::ok};
  r.ai_prime = {static_cast<double>(aip), round + kDblEps * std::abs(static_cast<double>(aip)),
                Method::series, Status::ok};
  return r;
}

// e^zeta K_nu(zeta) = int_0^inf exp(-zeta (cosh t - 1)) cosh(nu t) dt by the
// trapezoid rule, which converges geometrically for this integrand. The step
// shrinks like zeta^{-1/2} with the width of the peak at t = 0.
long double scaled_bessel_k(long double nu, long double zeta) {
  const long double h = std::min(0.125L, 0.5L / std::sqrt(zeta));
  long double sum = 0.5L;
  for (int j = 1; j < 4000; ++j) {
    const long double t = j * h;
    const long double s = std::sinh(0.5L * t);
    const long double term = std::exp(-2.0L * zeta * s * s) * std::cosh(nu * t);
    sum += term;
    if (term < 1e-21L * sum) break;
  }
  return h * sum;
}

AiryResult airy_bessel(double xd) {
  const long double x = xd;
  const long double zeta = 2.0L / 3.0L * x * std::sqrt(x);
  const long double ez = std::exp(-zeta);
  const long double ai = std::sqrt(x / 3.0L) / kPiLd * ez * scaled_bessel_k(1.0L / 3.0L, zeta);
  const long double aip =
      -x / (kPiLd * std::sqrt(3.0L)) * ez * scaled_bessel_k(2.0L / 3.0L, zeta);
  AiryResult r;
  const double a = static_cast<double>(ai);
  const double ap = static_cast<double>(aip);
  r.ai = {a, 4.0 * kDblEps * std::abs(a), Method::integral, Status::ok};
  r.ai_prime = {ap, 4.0 * kDblEps * std::abs(ap), Method::integral, Status::ok};
  return r;
}

AiryResult airy_oscillatory(double xd) {
  const long double z = -static_cast<long double>(xd);
  const long double zeta = 2.0L / 3.0L * z * std::sqrt(z);
  std::array<long double, 40> u{};
  u[0] = 1.0L;
  for (int k = 1; k < 40; ++k)
    u[k] = u[k - 1] * (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
           ((2.0L * k - 1.0L) * 216.0L * k);
  long double p = 0, q = 0, pv = 0, qv = 0;
  long double zk = 1.0L;
  long double prev = std::numeric_limits<long double>::infinity();
  long double tail = 0.0L;
  for (int k = 0; k < 40; ++k) {
    const long double v = (k == 0 ? 1.0L : -(6.0L * k + 1.0L) / (6.0L * k - 1.0L) * u[k]);
    const long double term = u[k] * zk;
    if (std::fabs(term) > prev) break;
    prev = std::fabs(term);
    tail = std::fabs(term) + std::fabs(v * zk);
    const long double sign = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
    if (k % 2 == 0) {
      p += sign * term;
      pv += sign * v * zk;
    } else {
      q += sign * term;
      qv += sign * v * zk;
    }
    if (tail < 1e-20L) break;
    zk /= zeta;
  }
  const long double ph = zeta - kPiLd / 4.0L;
  const long double c = std::cos(ph);
  const long double s = std::sin(ph);
  const long double z4 = std::pow(z, 0.25L);
  const long double ai = (c * p + s * q) / (std::sqrt(kPiLd) * z4);
  const long double aip = z4 / std::sqrt(kPiLd) * (s * pv - c * qv);
  AiryResult r;
  const double t = static_cast<double>(tail);
  r.ai = {static_cast<double>(ai), static_cast<double>(tail / (std::sqrt(kPiLd) * z4)) + 1e-15 * t,
          Method::asymptotic, Status::ok};
  r.ai_prime = {static_cast<double>(aip), static_cast<double>(tail * z4 / std::sqrt(kPiLd)),
                Method::asymptotic, Status::ok};
  r.ai.err_est += 4.0 * kDblEps * std::abs(r.ai.value);
  r.ai_prime.err_est += 4.0 * kDblEps * std::abs(r.ai_prime.value);
  return r;
}

// ---- Mittag-Leffler ----

EvalResult ml_series(double alpha, double beta, double x, const SeriesControl& ctl) {
  const long double lx = x;
  long double pw = 1.0L;
  auto term = [&](int n) {
    if (n > 0) pw *= lx;
    const long double rg = rgamma_ld(static_cast<long double>(alpha) * n + beta);
    return rg == 0.0L ? 0.0L : pw * rg;
  };
  return detail::to_result(detail::sum_series(term, ctl), ctl);
}

// -sum_{k>=1} x^{-k}/Gamma(beta - alpha k), truncated where the envelope
// |x|^{-k} Gamma(alpha k - beta + 1) stops decreasing (the terms themselves
// dip near the zeros of 1/Gamma).
EvalResult ml_algebraic(double alpha, double beta, double x, const SeriesControl& ctl) {
  const long double inv = 1.0L / static_cast<long double>(x);
  const long double log_ax = std::log(std::fabs(static_cast<long double>(x)));
  long double pw = 1.0L;
  long double sum = 0.0L;
  long double prev_env = std::numeric_limits<long double>::infinity();
  long double omitted = 0.0L;
  for (int k = 1; k <= ctl.max_terms; ++k) {
    const long double g = static_cast<long double>(alpha) * k - beta + 1.0L;
    const long double env = std::lgamma(std::max(g, 2.0L)) - k * log_ax;
    const long double rg = rgamma_ld(static_cast<long double>(beta) - alpha * k);
    const long double t = -pw * inv * rg;
    if (k > 1 && env > prev_env) {
      omitted = std::fabs(t);
      break;
    }
    prev_env = env;
    pw *= inv;
    sum += t;
    omitted = std::exp(env);
    if (omitted < 0.01L * ctl.rel_tol * std::fabs(sum)) break;
  }
  EvalResult r;
  r.value = static_cast<double>(sum);
  r.err_est = static_cast<double>(omitted) + kDblEps * std::abs(r.value);
  r.method = Method::asymptotic;
  return r;
}

EvalResult ml_spectral(double alpha, double x) {
  const double y = std::pow(-x, 1.0 / alpha);
  const double s = std::sin(alpha * kPi);
  const double c = std::cos(alpha * kPi);
  const RealFn f = [=](double u) {
    const double e = std::exp(-std::pow(u, 1.0 / alpha) * y);
    if (e == 0.0) return 0.0;
    return e * s / ((u * u + 2.0 * u * c + 1.0) * alpha * kPi);
  };
  std::vector<double> pts{0.0, std::pow(y, -alpha)};
  if (c < 0.0) pts.push_back(-c);
  pts.push_back(1.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(std::numeric_limits<double>::infinity());
  QuadratureControl q;
  q.rel_tol = 1e-13;
  q.abs_tol = 1e-300;
  EvalResult r = integrate(f, pts, q);
  r.method = Method::integral;
  return r;
}

}  // namespace

double sin_pi(double x) { return static_cast<double>(sin_pi_ld(x)); }

long double rgamma_ld(long double x) {
  if (nonpositive_integer(x)) return 0.0L;
  if (x < 0.5L) return sin_pi_ld(x) * std::tgamma(1.0L - x) / kPiLd;
  return 1.0L / std::tgamma(x);
}

EvalResult gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma: NaN argument");
  if (nonpositive_integer(x)) throw DomainError("gamma: pole at non-positive integer");
  EvalResult r{0.0, 0.0, Method::series, Status::ok};
  if (x == std::floor(x) && x <= 171.0) {
    long double f = 1.0L;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    r.value = static_cast<double>(f);
    r.method = Method::closed_form;
    r.err_est = 0.5 * kDblEps * r.value;
    return r;
  }
  long double v;
  if (x < 0.5) {
    v = kPiLd / (sin_pi_ld(x) * lanczos_gamma(1.0L - x));
    r.method = Method::reflection;
  } else {
    v = lanczos_gamma(x);
  }
  r.value = static_cast<double>(v);
  if (!std::isfinite(r.value)) {
    r.status = Status::overflow;
    r.err_est = 0.0;
  } else {
    r.err_est = 4.0 * kDblEps * std::abs(r.value);
  }
  return r;
}

double rgamma(double x) {
  if (std::isnan(x)) return x;
  if (nonpositive_integer(x)) return 0.0;
  const EvalResult g = gamma(x);
  if (std::isfinite(g.value) && g.value != 0.0) return 1.0 / g.value;
  return static_cast<double>(rgamma_ld(x));
}

EvalResult erfc(double x) {
  const double v = std::erfc(x);
  return {v, 2.0 * kDblEps * v, Method::closed_form, Status::ok};
}

AiryResult airy(double x) {
  if (!std::isfinite(x)) throw DomainError("airy: non-finite argument");
  if (x > 1.0) return airy_bessel(x);
  if (x >= -8.0) return airy_maclaurin(x);
  return airy_oscillatory(x);
}

EvalResult mittag_leffler(double alpha, double beta, double x, const SeriesControl& ctl,
                          const MlSwitch& sw) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("mittag_leffler: alpha must be positive");
  if (!std::isfinite(beta) || !std::isfinite(x))
    throw DomainError("mittag_leffler: non-finite argument");
  ctl.validate();

  if (x == 0.0) return {rgamma(beta), 0.0, Method::closed_form, Status::ok};
  if (beta == 1.0) {
    if (alpha == 1.0) {
      const double v = std::exp(x);
      return {v, kDblEps * v, Method::closed_form,
              std::isfinite(v) ? Status::ok : Status::overflow};
    }
    if (alpha == 2.0) {
      const double v = x < 0.0 ? std::cos(std::sqrt(-x)) : std::cosh(std::sqrt(x));
      return {v, 2.0 * kDblEps * std::max(1.0, std::abs(v)), Method::closed_form,
              std::isfinite(v) ? Status::ok : Status::overflow};
    }
    if (alpha == 0.5 && x >= -26.0) {
      const long double v = std::exp(static_cast<long double>(x) * x) * std::erfc(-static_cast<long double>(x));
      const double d = static_cast<double>(v);
      return {d, 4.0 * kDblEps * d, Method::closed_form,
              std::isfinite(d) ? Status::ok : Status::overflow};
    }
  }

  const double y = std::pow(std::abs(x), 1.0 / alpha);
  if (y <= sw.series_max_y || alpha >= 2.0) return ml_series(alpha, beta, x, ctl);

  if (x < 0.0) {
    const bool algebraic_ok =
        alpha <= 1.0 ? y >= sw.asym_min_y : -y * std::cos(kPi / alpha) >= sw.asym_min_y;
    if (algebraic_ok) return ml_algebraic(alpha, beta, x, ctl);
    if (alpha < 1.0 && beta == 1.0) return ml_spectral(alpha, x);
    return ml_series(alpha, beta, x, ctl);
  }

  if (y >= sw.asym_min_y) {
    EvalResult alg = ml_algebraic(alpha, beta, x, ctl);
    const double log_exp = y + (1.0 - beta) * std::log(y) - std::log(alpha);
    EvalResult r;
    r.method = Method::asymptotic;
    if (log_exp > 709.0) {
      r.value = std::numeric_limits<double>::infinity();
      r.status = Status::overflow;
      return r;
    }
    const double e = std::exp(log_exp);
    r.value = e + alg.value;
    r.err_est = alg.err_est + 4.0 * kDblEps * std::abs(r.value);
    return r;
  }
  return ml_series(alpha, beta, x, ctl);
}

}  // namespace wrightkit
