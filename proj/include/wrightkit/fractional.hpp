#pragma once

#include <span>
#include <vector>

#include "wrightkit/common.hpp"
#include "wrightkit/quadrature.hpp"
#include "wrightkit/sampled.hpp"

namespace wrightkit {

/// alpha > 0 with m - 1 < alpha <= m.
struct FracOrder {
  double alpha;
  int m;

  static FracOrder of(double alpha);
};

/// A callable with its first derivatives: derivs[k-1] is f^{(k)}.
struct SmoothFn {
  RealFn f;
  std::vector<RealFn> derivs;

  /// f^{(k)}(t); throws DomainError when that derivative was not supplied.
  double derivative(int k, double t) const;
};

/// J^alpha f(t) = 1/Gamma(alpha) int_0^t (t - tau)^{alpha-1} f(tau) d tau.
/// [0, t/2] is integrated as is, [t/2, t] in u = (t - tau)^alpha, which
/// removes the kernel singularity. alpha = 0 returns f(t).
EvalResult rl_integral(const RealFn& f, double alpha, double t, const QuadratureControl& ctl = {});

/// Product rule on sampled data: on each interval the kernel is integrated
/// against the local quadratic interpolant, exactly near tau = t and by
/// Gauss-Legendre elsewhere. err_est is the difference to the same rule on
/// every other sample. The data must cover [0, t].
EvalResult rl_integral(const SampledFunction& f, double alpha, double t);

/// D_*^alpha f = J^{m-alpha} f^{(m)}; integer alpha gives f^{(m)}(t).
EvalResult caputo_derivative(const SmoothFn& f, double alpha, double t, const QuadratureControl& ctl = {});

/// Sampled version, f^{(m)} from repeated five-point differencing.
EvalResult caputo_derivative(const SampledFunction& f, double alpha, double t);

/// D^alpha f = D_*^alpha f + sum_{k<m} t^{k-alpha}/Gamma(k-alpha+1) f^{(k)}(0+).
/// init holds f^{(k)}(0+), k = 0..m-1.
EvalResult rl_derivative(const SmoothFn& f, double alpha, double t, std::span<const double> init,
                         const QuadratureControl& ctl = {});

/// D^m J^{m-alpha} f by Richardson-extrapolated central differences of the
/// fractional integral. For f without finite initial data (t^{alpha-1}, say).
EvalResult rl_derivative_direct(const RealFn& f, double alpha, double t, const QuadratureControl& ctl = {});

enum class PowerKind { integral, derivative };

/// coef * t^exponent
struct PowerTerm {
  double coef = 1.0;
  double exponent = 0.0;

  double operator()(double t) const;
};

/// J^alpha or D^alpha of a power, gamma > -1. Derivatives that vanish
/// (1/Gamma at a pole) come back with coef = 0.
PowerTerm apply_power_rule(PowerKind kind, double alpha, const PowerTerm& p);
double power_rule(PowerKind kind, double alpha, double gamma, double t);

enum class DerivativeKind { riemann_liouville, caputo };

/// Laplace transform of D^alpha f or D_*^alpha f given f_hat(s).
/// Caputo: s^alpha f_hat - sum_k init_k s^{alpha-1-k}, init_k = f^{(k)}(0+).
/// RL:     s^alpha f_hat - sum_k init_k s^{m-1-k},     init_k = D^k J^{m-alpha} f(0+).
double laplace_symbol(DerivativeKind kind, double alpha, std::span<const double> init, double s,
                      double f_hat);

}  // namespace wrightkit
