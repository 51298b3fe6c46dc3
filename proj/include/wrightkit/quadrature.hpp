#pragma once

#include <functional>
#include <span>

#include "wrightkit/common.hpp"

namespace wrightkit {

using RealFn = std::function<double(double)>;

/// Adaptive 21-point Gauss-Kronrod quadrature of f over [a, b].
///
/// Either limit may be infinite. Infinite ranges are mapped onto (0, 1] by
/// x = a + (1 - u)/u, unless ctl.tail_cutoff > 0, in which case the range is
/// truncated at a + tail_cutoff and an exponential-extrapolation bound of the
/// dropped tail is added to err_est.
///
/// Throws ConvergenceError when max_subdivisions is exhausted well short of
/// the tolerance; returns Status::accuracy_loss when the shortfall is within
/// a factor of ten or is attributable to round-off.
EvalResult integrate(const RealFn& f, double a, double b, const QuadratureControl& ctl = {});

/// Same as above with an initial partition. `points` must be increasing, with
/// at least two entries; only the first and last may be infinite.
EvalResult integrate(const RealFn& f, std::span<const double> points,
                     const QuadratureControl& ctl = {});

/// Single 21-point Kronrod panel; returns the Kronrod estimate and the
/// Gauss-Kronrod difference. Exposed for tests and product-rule callers.
struct PanelEstimate {
  double kronrod = 0.0;
  double gauss = 0.0;
};
PanelEstimate gauss_kronrod_21(const RealFn& f, double a, double b);

}  // namespace wrightkit
