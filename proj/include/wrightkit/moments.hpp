#pragma once

#include "wrightkit/common.hpp"
#include "wrightkit/quadrature.hpp"

namespace wrightkit {

/// int_0^inf x^delta M_nu(x) dx = Gamma(delta+1) / Gamma(nu delta + 1),
/// delta > -1, 0 <= nu < 1.
double m_abs_moment(double nu, double delta);

/// The same integral by quadrature; [0, 1] is integrated in u = x^{delta+1}
/// so delta near -1 stays regular.
EvalResult m_abs_moment_numeric(double nu, double delta, const QuadratureControl& ctl = {});

/// (-1)^n d^n/ds^n E_nu(-s) at s = 0, read off the Mittag-Leffler series.
double m_integer_moment_via_ml(double nu, int n);

/// int_0^inf cos(kappa x) M_nu(x) dx = E_{2nu}(-kappa^2), 0 < nu < 1.
double m_char_fn(double nu, double kappa);
EvalResult m_char_fn_numeric(double nu, double kappa, const QuadratureControl& ctl = {});

enum class MvarAxis { t, x, fourier };

/// Transforms of t^{-nu} M_nu(x t^{-nu}):
///   t:       in t at fixed x,        s^{nu-1} e^{-x s^nu}
///   x:       in x at fixed t,        E_nu(-s t^nu)
///   fourier: of the even extension,  2 E_{2nu}(-kappa^2 t^{2nu})
double mvar_transform(MvarAxis axis, double nu, double fixed, double s_or_kappa);
EvalResult mvar_transform_numeric(MvarAxis axis, double nu, double fixed, double s_or_kappa,
                                  const QuadratureControl& ctl = {});

struct CompositionPair {
  double lhs;  // M_{lambda mu}(x, t)
  double rhs;  // int_0^inf M_lambda(x, tau) M_mu(tau, t) d tau
  double rhs_err;
};

/// lambda, mu in (0, 1]; index 1 is the point mass at x = t.
CompositionPair composition_check(double lambda, double mu, double x, double t,
                                  const QuadratureControl& ctl = {});

}  // namespace wrightkit
