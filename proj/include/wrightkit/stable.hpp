#pragma once

#include <complex>
#include <variant>

#include "wrightkit/common.hpp"

namespace wrightkit {

/// Levy stable law in Feller's parameterization: cf exp(-|k|^alpha e^{i sgn(k) theta pi/2}).
struct StableParams {
  double alpha = 2.0;
  double theta = 0.0;

  double theta_bound() const { return alpha < 1.0 ? alpha : 2.0 - alpha; }
  bool is_extremal() const;
  bool is_symmetric() const { return theta == 0.0; }
  bool is_singular() const { return alpha == 1.0 && (theta == 1.0 || theta == -1.0); }
};

/// Checks (alpha, theta) against the Feller-Takayasu diamond. Values within
/// 1e-12 of the boundary are snapped onto it.
StableParams validate_stable(double alpha, double theta);

struct PointMass {
  double location = 0.0;
  double weight = 1.0;
};

/// Either an ordinary density value or a Dirac mass.
using DensityValue = std::variant<EvalResult, PointMass>;

inline bool is_point_mass(const DensityValue& d) { return std::holds_alternative<PointMass>(d); }
/// Value of a smooth density; throws DomainError for a point mass.
double density_value(const DensityValue& d);

DensityValue stable_pdf(const StableParams& p, double x, const Controls& ctl = {});

/// Feller's convergent series for x > 0 (alpha != 1); accuracy_loss when the
/// terms cancel.
EvalResult stable_series(const StableParams& p, double x, const SeriesControl& ctl = {});

/// Large-x expansion for 1 < alpha < 2, x > 0, in powers of x^{-alpha};
/// divergent, truncated at its smallest term.
EvalResult stable_tail_asymptotic(const StableParams& p, double x, const SeriesControl& ctl = {});

/// (1/pi) int_0^inf exp(-k^alpha cos(theta pi/2)) cos(k x + k^alpha sin(theta pi/2)) dk
EvalResult stable_cf_inversion(const StableParams& p, double x, const QuadratureControl& ctl = {});

/// Extremal densities through M-Wright functions. Throws for alpha = 1.
EvalResult extremal_via_wright(double alpha, double x);

std::complex<double> stable_cf(const StableParams& p, double kappa);

/// t^{-1/alpha} L(x / t^{1/alpha}).
DensityValue stable_scaled(const StableParams& p, double x, double t, const Controls& ctl = {});

struct ReciprocalPair {
  double alpha_star;
  double theta_star;
};

/// (1/alpha, alpha (theta + 1) - 1), so that
/// x^{-(alpha+1)} L_{1/alpha}^theta(x^{-alpha}) = L_alpha^{theta_star}(x) for x > 0.
ReciprocalPair reciprocity_map(double alpha, double theta);

}  // namespace wrightkit
