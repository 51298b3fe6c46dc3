#include "wrightkit/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wrightkit/special.hpp"

namespace wrightkit {
namespace {

void check_alpha(double alpha, const char* who) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError(std::string(who) + ": alpha must be >= 0");
}

void check_t(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(who) + ": t must be positive");
}

constexpr double kGl8x[] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
constexpr double kGl8w[] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

// int_p^q (t - tau)^{beta-1} Q(tau) d tau, Q the quadratic through (x[k], y[k]),
// k = i0..i0+2 (or the line through two points when only two exist), q <= t
double product_panel(const std::vector<double>& x, const std::vector<double>& y, std::size_t i0, int npts,
                     double p, double q, double t, double beta) {
  auto interp = [&](double tau) {
    double v = 0.0;
    for (int i = 0; i < npts; ++i) {
      double l = 1.0;
      for (int m = 0; m < npts; ++m)
        if (m != i) l *= (tau - x[i0 + m]) / (x[i0 + i] - x[i0 + m]);
      v += y[i0 + i] * l;
    }
    return v;
  };
  const double h = q - p;
  if (t - q >= 2.0 * h) {
    // kernel smooth on the panel
    const double c = 0.5 * (p + q);
    double sum = 0.0;
    for (int k = 0; k < 4; ++k)
      for (double sg : {-1.0, 1.0}) {
        const double tau = c + sg * 0.5 * h * kGl8x[k];
        sum += kGl8w[k] * std::pow(t - tau, beta - 1.0) * interp(tau);
      }
    return 0.5 * h * sum;
  }
  // exact moments in sigma = t - tau; Q as a polynomial in sigma
  double c[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < npts; ++i) {
    const double si = t - x[i0 + i];
    double d = 1.0;
    double s1 = 0.0, s2 = 1.0;
    for (int m = 0; m < npts; ++m) {
      if (m == i) continue;
      const double sm = t - x[i0 + m];
      d *= si - sm;
      s1 += sm;
      s2 *= sm;
    }
    const double w = y[i0 + i] / d;
    if (npts == 3) {
      c[2] += w;
      c[1] -= w * s1;
      c[0] += w * s2;
    } else {
      c[1] += w;
      c[0] -= w * s1;
    }
  }
  const double a = t - p;
  const double b = t - q;
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    if (c[k] == 0.0) continue;
    const double e = beta + k;
    sum += c[k] * (std::pow(a, e) - (b > 0.0 ? std::pow(b, e) : 0.0)) / e;
  }
  return sum;
}

double product_rule(const std::vector<double>& x, const std::vector<double>& y, double t, double beta,
                    std::size_t stride) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); i += stride) {
    xs.push_back(x[i]);
    ys.push_back(y[i]);
  }
  const std::size_t n = xs.size();
  const int npts = n >= 3 ? 3 : 2;
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < n && xs[j] < t; ++j) {
    const std::size_t i0 = std::min(j, n - npts);
    sum += product_panel(xs, ys, i0, npts, xs[j], std::min(xs[j + 1], t), t, beta);
  }
  return sum;
}

}  // namespace

FracOrder FracOrder::of(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("FracOrder: alpha must be positive");
  return {alpha, static_cast<int>(std::ceil(alpha))};
}

double SmoothFn::derivative(int k, double t) const {
  if (k == 0) return f(t);
  if (k < 0 || static_cast<std::size_t>(k) > derivs.size() || !derivs[k - 1])
    throw DomainError("SmoothFn: derivative of order " + std::to_string(k) + " not supplied");
  return derivs[k - 1](t);
}

EvalResult rl_integral(const RealFn& f, double alpha, double t, const QuadratureControl& ctl) {
  check_alpha(alpha, "rl_integral");
  check_t(t, "rl_integral");
  if (alpha == 0.0) return {f(t), 0.0, Method::closed_form, Status::ok};
  const double half = 0.5 * t;
  const RealFn left = [&](double tau) { return std::pow(t - tau, alpha - 1.0) * f(tau); };
  EvalResult a = integrate(left, 0.0, half, ctl);
  EvalResult b;
  if (alpha < 1.0) {
    const double p = 1.0 / alpha;
    const RealFn right = [&](double u) { return f(t - std::pow(u, p)); };
    b = integrate(right, 0.0, std::pow(half, alpha), ctl);
    b.value *= rgamma(alpha + 1.0);
    b.err_est *= rgamma(alpha + 1.0);
  } else {
    b = integrate(left, half, t, ctl);
    b.value *= rgamma(alpha);
    b.err_est *= rgamma(alpha);
  }
  const double ra = rgamma(alpha);
  return {ra * a.value + b.value, ra * a.err_est + b.err_est, Method::integral, worst(a.status, b.status)};
}

EvalResult rl_integral(const SampledFunction& f, double alpha, double t) {
  check_alpha(alpha, "rl_integral");
  check_t(t, "rl_integral");
  const auto& x = f.abscissae();
  if (!(x.front() <= 0.0 && x.back() >= t)) throw DomainError("rl_integral: samples must cover [0, t]");
  if (alpha == 0.0) return {f(t), 0.0, Method::closed_form, Status::ok};
  // samples from 0 on; points past t still shape the last panel
  std::vector<double> xs{0.0}, ys{f(0.0)};
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0.0) {
      xs.push_back(x[i]);
      ys.push_back(f.values()[i]);
    }
  const double ra = rgamma(alpha);
  const double fine = product_rule(xs, ys, t, alpha, 1) * ra;
  double err = 0.0;
  if (xs.size() >= 7) err = std::abs(fine - product_rule(xs, ys, t, alpha, 2) * ra);
  return {fine, err, Method::integral, Status::ok};
}

EvalResult caputo_derivative(const SmoothFn& f, double alpha, double t, const QuadratureControl& ctl) {
  const FracOrder o = FracOrder::of(alpha);
  check_t(t, "caputo_derivative");
  const RealFn dm = [&f, o](double tau) { return f.derivative(o.m, tau); };
  if (o.m == alpha) return {dm(t), 0.0, Method::closed_form, Status::ok};
  return rl_integral(dm, o.m - alpha, t, ctl);
}

EvalResult caputo_derivative(const SampledFunction& f, double alpha, double t) {
  const FracOrder o = FracOrder::of(alpha);
  check_t(t, "caputo_derivative");
  SampledFunction d = f.derivative();
  for (int k = 1; k < o.m; ++k) d = d.derivative();
  if (o.m == alpha) return {d(t), 0.0, Method::series, Status::ok};
  return rl_integral(d, o.m - alpha, t);
}

EvalResult rl_derivative(const SmoothFn& f, double alpha, double t, std::span<const double> init,
                         const QuadratureControl& ctl) {
  const FracOrder o = FracOrder::of(alpha);
  check_t(t, "rl_derivative");
  if (init.size() != static_cast<std::size_t>(o.m))
    throw DomainError("rl_derivative: need f^(k)(0+) for k = 0.." + std::to_string(o.m - 1));
  EvalResult r = caputo_derivative(f, alpha, t, ctl);
  for (int k = 0; k < o.m; ++k) {
    const double c = rgamma(k - alpha + 1.0);
    if (c != 0.0 && init[k] != 0.0) r.value += init[k] * c * std::pow(t, k - alpha);
  }
  return r;
}

EvalResult rl_derivative_direct(const RealFn& f, double alpha, double t, const QuadratureControl& ctl) {
  const FracOrder o = FracOrder::of(alpha);
  check_t(t, "rl_derivative_direct");
  if (o.m > 2) throw DomainError("rl_derivative_direct: alpha must not exceed 2");
  QuadratureControl q = ctl;
  q.rel_tol = std::min(q.rel_tol, 1e-13);
  q.abs_tol = std::min(q.abs_tol, 1e-15);
  const double beta = o.m - alpha;
  auto g = [&](double tau) { return rl_integral(f, beta, tau, q).value; };
  const double g0 = o.m == 2 ? g(t) : 0.0;
  auto diff = [&](double h) {
    if (o.m == 1) return (g(t + h) - g(t - h)) / (2.0 * h);
    return (g(t + h) - 2.0 * g0 + g(t - h)) / (h * h);
  };
  // Neville table in h^2, keeping the row with the smallest update
  constexpr int levels = 6;
  double tab[levels][levels];
  double h = 0.25 * t;
  double best = 0.0, best_err = std::numeric_limits<double>::infinity();
  for (int i = 0; i < levels; ++i, h *= 0.5) {
    tab[i][0] = diff(h);
    double f4 = 1.0;
    for (int j = 1; j <= i; ++j) {
      f4 *= 4.0;
      tab[i][j] = tab[i][j - 1] + (tab[i][j - 1] - tab[i - 1][j - 1]) / (f4 - 1.0);
      const double e = std::max(std::abs(tab[i][j] - tab[i][j - 1]), std::abs(tab[i][j] - tab[i - 1][j - 1]));
      if (e < best_err) {
        best_err = e;
        best = tab[i][j];
      }
    }
  }
  EvalResult r{best, best_err, Method::integral, Status::ok};
  if (best_err > std::max(q.abs_tol, 1e-6 * std::abs(best))) r.status = Status::accuracy_loss;
  return r;
}

double PowerTerm::operator()(double t) const { return coef == 0.0 ? 0.0 : coef * std::pow(t, exponent); }

PowerTerm apply_power_rule(PowerKind kind, double alpha, const PowerTerm& p) {
  check_alpha(alpha, "power_rule");
  if (!(p.exponent > -1.0)) throw DomainError("power_rule: gamma must exceed -1");
  const double g1 = p.exponent + 1.0;
  const double shift = kind == PowerKind::integral ? alpha : -alpha;
  double w = g1 + shift;
  // snap near-integer w onto the pole
  if (std::abs(w - std::round(w)) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, g1, alpha}))
    w = std::round(w);
  // Gamma(g+1)/Gamma(g+1+shift) as a quotient of gammas; rgamma absorbs poles
  const double ratio = rgamma(w) == 0.0 ? 0.0 : gamma(g1).value * rgamma(w);
  return {p.coef * ratio, w - 1.0};
}

double power_rule(PowerKind kind, double alpha, double gamma_, double t) {
  check_t(t, "power_rule");
  return apply_power_rule(kind, alpha, {1.0, gamma_})(t);
}

double laplace_symbol(DerivativeKind kind, double alpha, std::span<const double> init, double s, double f_hat) {
  const FracOrder o = FracOrder::of(alpha);
  if (!(s > 0.0)) throw DomainError("laplace_symbol: s must be positive");
  if (init.size() != static_cast<std::size_t>(o.m))
    throw DomainError("laplace_symbol: init must hold m = " + std::to_string(o.m) + " values");
  double v = std::pow(s, alpha) * f_hat;
  for (int k = 0; k < o.m; ++k) {
    const double e = kind == DerivativeKind::caputo ? alpha - 1.0 - k : o.m - 1.0 - k;
    v -= init[k] * std::pow(s, e);
  }
  return v;
}

}  // namespace wrightkit
