#include "wrightkit/tfdwe.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wrightkit/special.hpp"
#include "wrightkit/transforms.hpp"
#include "wrightkit/wright.hpp"

namespace wrightkit {
namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

void check_t(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(who) + ": t must be positive");
}

EvalResult scaled(EvalResult r, double c) {
  r.value *= c;
  r.err_est *= std::abs(c);
  return r;
}

}  // namespace

void GreenSpec::validate() const {
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("GreenSpec: nu must lie in (0, 1]");
  if (!(diffusivity > 0.0) || !std::isfinite(diffusivity)) throw DomainError("GreenSpec: D must be positive");
}

SimilarityPoint similarity(const GreenSpec& spec, double x, double t) {
  spec.validate();
  check_t(t, "similarity");
  return {x, t, x / (std::sqrt(spec.diffusivity) * std::pow(t, spec.nu))};
}

EvalResult green_cauchy(const GreenSpec& spec, double x, double t) {
  const SimilarityPoint p = similarity(spec, x, t);
  const double c = std::pow(t, -spec.nu) / (2.0 * std::sqrt(spec.diffusivity));
  return scaled(wright_m(spec.nu, std::abs(p.z)), c);
}

EvalResult green_signalling(const GreenSpec& spec, double x, double t) {
  if (!(x >= 0.0)) throw DomainError("green_signalling: x must be >= 0");
  const SimilarityPoint p = similarity(spec, x, t);
  if (x == 0.0) return {0.0, 0.0, Method::closed_form, Status::ok};
  const double c = spec.nu * x * std::pow(t, -spec.nu - 1.0) / std::sqrt(spec.diffusivity);
  return scaled(wright_m(spec.nu, p.z), c);
}

EvalResult green(const GreenSpec& spec, double x, double t) {
  return spec.problem == Problem::cauchy ? green_cauchy(spec, x, t) : green_signalling(spec, x, t);
}

DensityValue green_initial_limit(const GreenSpec& spec, double x) {
  spec.validate();
  if (spec.problem == Problem::cauchy) return PointMass{0.0, 1.0};
  if (!(x >= 0.0)) throw DomainError("green_initial_limit: x must be >= 0");
  return EvalResult{0.0, 0.0, Method::closed_form, Status::ok};
}

double green_laplace(const GreenSpec& spec, double x, double s) {
  spec.validate();
  if (!(s > 0.0)) throw DomainError("green_laplace: s must be positive");
  const double sd = std::sqrt(spec.diffusivity);
  const double a = std::abs(x) / sd;
  const double e = std::exp(-a * std::pow(s, spec.nu));
  if (spec.problem == Problem::cauchy) return e / (2.0 * sd * std::pow(s, 1.0 - spec.nu));
  if (x < 0.0) throw DomainError("green_laplace: x must be >= 0 for the signalling problem");
  return e;
}

ReciprocityTriple reciprocity(const GreenSpec& spec, double x, double t) {
  if (!(x > 0.0)) throw DomainError("reciprocity: x must be positive");
  if (!(spec.nu < 1.0)) throw DomainError("reciprocity: nu must be < 1");
  GreenSpec c = spec, s = spec;
  c.problem = Problem::cauchy;
  s.problem = Problem::signalling;
  const SimilarityPoint p = similarity(spec, x, t);
  return {2.0 * spec.nu * x * green_cauchy(c, x, t).value, t * green_signalling(s, x, t).value,
          wright_f_direct(spec.nu, p.z).value};
}

EvalResult solve_cauchy(const GreenSpec& spec, const SampledFunction& f, double x, double t,
                        const QuadratureControl& ctl) {
  GreenSpec c = spec;
  c.problem = Problem::cauchy;
  similarity(c, x, t);
  return convolve([&](double xi) { return green_cauchy(c, xi, t).value; }, f, x, ConvolutionMode::space, ctl);
}

EvalResult solve_signalling(const GreenSpec& spec, const SampledFunction& g, double x, double t,
                            const QuadratureControl& ctl) {
  GreenSpec s = spec;
  s.problem = Problem::signalling;
  similarity(s, x, t);
  if (!(x >= 0.0)) throw DomainError("solve_signalling: x must be >= 0");
  return convolve([&](double tau) { return tau > 0.0 ? green_signalling(s, x, tau).value : 0.0; }, g, t,
                  ConvolutionMode::causal_time, ctl);
}

ThreeSisters three_sisters(double a, double t) {
  if (!(a >= 0.0)) throw DomainError("three_sisters: a must be >= 0");
  check_t(t, "three_sisters");
  const double e = std::exp(-a * a / (4.0 * t));
  const EvalResult psi{0.5 * a * kInvSqrtPi * std::pow(t, -1.5) * e, 0.0, Method::closed_form, Status::ok};
  const EvalResult chi{kInvSqrtPi / std::sqrt(t) * e, 0.0, Method::closed_form, Status::ok};
  return {erfc(a / (2.0 * std::sqrt(t))), psi, chi};
}

ThreeSisters three_sisters_bromwich(double a, double t, const QuadratureControl& ctl) {
  if (!(a >= 0.0)) throw DomainError("three_sisters: a must be >= 0");
  check_t(t, "three_sisters");
  auto inv = [&](double mu) { return bromwich_branchcut_invert(LaplaceDescriptor::single(mu, a, 0.5), t, ctl); };
  return {inv(1.0), inv(0.0), inv(0.5)};
}

LaplaceSisters three_sisters_laplace(double a, double s) {
  if (!(a >= 0.0)) throw DomainError("three_sisters: a must be >= 0");
  if (!(s > 0.0)) throw DomainError("three_sisters: s must be positive");
  const double r = std::sqrt(s);
  const double e = std::exp(-a * r);
  return {e / s, e, e / r};
}

FourSisters four_sisters(double nu, double x, double t) {
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("four_sisters: nu must lie in (0, 1)");
  if (!(x >= 0.0)) throw DomainError("four_sisters: x must be >= 0");
  check_t(t, "four_sisters");
  const double z = x * std::pow(t, -nu);
  FourSisters out{{0.0, 1.0 - nu, nu, 1.0}, {}};
  out.value[0] = scaled(wright_f(nu, z), 1.0 / t);
  out.value[1] = scaled(wright_m(nu, z), std::pow(t, -nu));

  auto tail = [&](double mu) {
    EvalResult r = wright_w({-nu, mu}, -z);
    if (r.ok() || z == 0.0) return r;
    return w_tail_lk(nu, mu, z);
  };
  out.value[2] = scaled(tail(nu), std::pow(t, nu - 1.0));
  out.value[3] = tail(1.0);
  return out;
}

}  // namespace wrightkit
