#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "wrightkit/common.hpp"
#include "wrightkit/quadrature.hpp"
#include "wrightkit/sampled.hpp"

namespace wrightkit {

/// int_0^inf exp(-s t) f(t) dt.
EvalResult laplace_fwd(const RealFn& f, double s, const QuadratureControl& ctl = {});

/// int_0^inf cos(kappa x) f(x) dx, integrated panel by panel between the
/// zeros of cos(kappa x); slowly decaying tails are summed with repeated
/// averaging of the partial sums.
EvalResult cosine_transform(const RealFn& f, double kappa, const QuadratureControl& ctl = {});

/// coef * s^{-mu} * exp(-x s^nu)
struct LaplaceTerm {
  double coef = 1.0;
  double mu = 0.0;
  double x = 0.0;
  double nu = 0.5;
};

/// Sum of LaplaceTerm; the closed family of transforms the library inverts.
struct LaplaceDescriptor {
  std::vector<LaplaceTerm> terms;

  static LaplaceDescriptor single(double mu, double x, double nu, double coef = 1.0) {
    return {{LaplaceTerm{coef, mu, x, nu}}};
  }
  std::complex<long double> operator()(std::complex<long double> s) const;
  /// F(r e^{i pi}), the value on the upper side of the negative real axis.
  std::complex<double> above_cut(double r) const;
  /// Residue of F at s = 0 (non-zero only for mu = 1 terms).
  double residue_at_zero() const;
  void validate() const;
};

using CutFn = std::function<std::complex<double>(double)>;

/// f(t) = residue - (1/pi) int_0^inf exp(-r t) Im F(r e^{i pi}) dr.
/// The integral is taken in r = rho^2 to absorb r^{-1/2} endpoint behaviour.
EvalResult bromwich_branchcut_invert(const CutFn& F_above_cut, double residue_at_zero, double t,
                                     const QuadratureControl& ctl = {});
EvalResult bromwich_branchcut_invert(const LaplaceDescriptor& F, double t,
                                     const QuadratureControl& ctl = {});

/// Fixed-Talbot inversion with n_nodes and 2*n_nodes nodes; the value from
/// the finer rule is returned and their difference is the error estimate.
EvalResult talbot_invert(const LaplaceDescriptor& F, double t, int n_nodes = 16);

enum class ConvolutionMode { space, causal_time };

/// space:       int K(point - eta) data(eta) d eta over the data range
/// causal_time: int_0^point K(point - eta) data(eta) d eta
/// Flags Status::support_truncated when the data is non-zero at an end of
/// its range and the kernel still carries mass beyond that end.
EvalResult convolve(const RealFn& kernel, const SampledFunction& data, double point,
                    ConvolutionMode mode, const QuadratureControl& ctl = {});

}  // namespace wrightkit
