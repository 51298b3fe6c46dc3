#pragma once

#include <array>

#include "wrightkit/common.hpp"
#include "wrightkit/quadrature.hpp"
#include "wrightkit/sampled.hpp"
#include "wrightkit/stable.hpp"

namespace wrightkit {

enum class Problem { cauchy, signalling };

/// Time-fractional diffusion-wave equation of order beta = 2 nu with
/// diffusivity D. Everything internally works in a = |x| / sqrt(D).
struct GreenSpec {
  Problem problem = Problem::cauchy;
  double nu = 0.5;
  double diffusivity = 1.0;

  void validate() const;
};

struct SimilarityPoint {
  double x;
  double t;
  double z;  // x / (sqrt(D) t^nu)
};

SimilarityPoint similarity(const GreenSpec& spec, double x, double t);

/// t^{-nu} / (2 sqrt D) M_nu(|x| / (sqrt D t^nu))
EvalResult green_cauchy(const GreenSpec& spec, double x, double t);

/// nu x t^{-nu-1} / sqrt D M_nu(x / (sqrt D t^nu)), x >= 0
EvalResult green_signalling(const GreenSpec& spec, double x, double t);

/// Green function of spec.problem.
EvalResult green(const GreenSpec& spec, double x, double t);

/// Limit as t -> 0+: a unit point mass at x = 0 for the Cauchy problem,
/// zero for the signalling problem.
DensityValue green_initial_limit(const GreenSpec& spec, double x);

/// Laplace transform in t, s > 0.
double green_laplace(const GreenSpec& spec, double x, double s);

struct ReciprocityTriple {
  double lhs;  // 2 nu x G_c
  double mid;  // t G_s
  double rhs;  // F_nu(z)
};

/// The three members of the reciprocity relation, x > 0, t > 0, nu < 1.
/// F_nu comes from its own series (independent of M_nu).
ReciprocityTriple reciprocity(const GreenSpec& spec, double x, double t);

/// u(x, t) = int G_c(x - xi, t) f(xi) d xi over the range of f.
EvalResult solve_cauchy(const GreenSpec& spec, const SampledFunction& f, double x, double t,
                        const QuadratureControl& ctl = {});

/// u(x, t) = int_0^t G_s(x, t - tau) g(tau) d tau.
EvalResult solve_signalling(const GreenSpec& spec, const SampledFunction& g, double x, double t,
                            const QuadratureControl& ctl = {});

struct ThreeSisters {
  EvalResult phi;  // erfc(a / (2 sqrt t))
  EvalResult psi;  // a / (2 sqrt pi) t^{-3/2} e^{-a^2/4t}
  EvalResult chi;  // 1 / sqrt(pi t) e^{-a^2/4t}
};

ThreeSisters three_sisters(double a, double t);

/// The same functions by branch-cut inversion of e^{-a sqrt s} s^{-mu}.
ThreeSisters three_sisters_bromwich(double a, double t, const QuadratureControl& ctl = {});

struct LaplaceSisters {
  double phi;  // e^{-a sqrt s} / s
  double psi;  // e^{-a sqrt s}
  double chi;  // e^{-a sqrt s} / sqrt s
};

LaplaceSisters three_sisters_laplace(double a, double s);

/// mu = 0, 1 - nu, nu, 1 in that order.
struct FourSisters {
  std::array<double, 4> mu;
  std::array<EvalResult, 4> value;
};

/// t^{mu-1} W_{-nu,mu}(-x t^{-nu}) for the four indices, 0 < nu < 1.
/// mu = 0 and 1 - nu go through F_nu and M_nu; mu = nu and 1 use the
/// series, or w_tail_lk when it cancels.
FourSisters four_sisters(double nu, double x, double t);

}  // namespace wrightkit
