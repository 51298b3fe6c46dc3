#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wrightkit/common.hpp"
#include "wrightkit/special.hpp"

namespace wrightkit {

struct WrightParams {
  double lambda = 0.0;
  double mu = 1.0;

  enum class Kind { first, second };
  Kind kind() const { return lambda >= 0.0 ? Kind::first : Kind::second; }
  void validate() const;
};

/// Branch thresholds for the M-Wright evaluator and the Mittag-Leffler
/// switch. Loaded once (defaults or a config file) and then read-only.
struct DispatchTable {
  // (nu, x) knots; the series is attempted for x <= series_max_x(nu),
  // piecewise-linear in nu.
  std::vector<std::pair<double, double>> m_series_max_x = {
      {0.0, 40.0}, {0.1, 30.0}, {0.25, 16.0}, {0.4, 11.0}, {0.5, 9.0},
      {0.6, 7.0},  {0.75, 4.5}, {0.85, 3.0},  {0.95, 1.8}, {1.0, 1.5}};
  // Switch to the saddle-point formula once the Liemert-Kleine integrand
  // is narrower than this fraction of [0, pi].
  double asym_rel_width = 1e-3;
  MlSwitch ml;

  double series_max_x(double nu) const;
  void validate() const;
};

const DispatchTable& default_dispatch();

/// W_{lambda,mu}(z) by its power series.
EvalResult wright_w(const WrightParams& p, double z, const SeriesControl& ctl = {});

/// M_nu(x) = W_{-nu,1-nu}(-x), dispatched per point.
EvalResult wright_m(double nu, double x, const SeriesControl& ctl = {},
                    const DispatchTable& table = default_dispatch());

/// Series branch of M_nu only.
EvalResult m_series(double nu, double x, const SeriesControl& ctl = {});

/// Closed forms for nu in {1/2, 1/3, 2/3}; empty for other nu.
std::optional<EvalResult> m_closed_form(double nu, double x);

/// Liemert-Kleine integral for x > 0.
EvalResult m_lk_integral(double nu, double x);

/// W_{-nu,mu}(-z), mu in {1, nu}, z > 0: the tail integrals int_z^inf M_nu and
/// nu int_z^inf y M_nu(y) dy with the Liemert-Kleine integrand integrated over y
/// in closed form, leaving one integral over phi.
EvalResult w_tail_lk(double nu, double mu, double z);

/// Saddle-point approximation of M_nu(y/nu).
EvalResult m_asymptotic(double nu, double y);
double m_asymptotic_a(double nu);
double m_asymptotic_b(double nu);

/// F_nu(z) = W_{-nu,0}(-z). For z >= 0 computed as nu z M_nu(z).
EvalResult wright_f(double nu, double z, const SeriesControl& ctl = {},
                    const DispatchTable& table = default_dispatch());

/// F_nu(z) from its own series. When the series loses accuracy: Talbot
/// inversion of exp(-z s^nu) at t = 1 for nu <= 1/2, otherwise Fourier
/// inversion of the matching one-sided stable law. Independent of the M_nu
/// evaluator.
EvalResult wright_f_direct(double nu, double z, const SeriesControl& ctl = {});

/// 1/2 M_nu(|x|).
EvalResult m_symmetric_pdf(double nu, double x, const SeriesControl& ctl = {},
                           const DispatchTable& table = default_dispatch());

/// t^{-nu} M_nu(x t^{-nu}).
EvalResult m_two_var(double nu, double x, double t, const SeriesControl& ctl = {},
                     const DispatchTable& table = default_dispatch());

}  // namespace wrightkit
