#pragma once

#include "wrightkit/common.hpp"

namespace wrightkit {

/// Gamma function. Lanczos approximation on [0.5, inf), reflection below.
/// Throws DomainError at the poles 0, -1, -2, ...
EvalResult gamma(double x);

/// 1/Gamma(x); entire, exactly zero at non-positive integers.
double rgamma(double x);

/// Extended-precision reciprocal gamma used inside series summation.
long double rgamma_ld(long double x);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

EvalResult erfc(double x);

struct AiryResult {
  EvalResult ai;
  EvalResult ai_prime;
};

/// Ai(x) and Ai'(x). Maclaurin series near the origin, a Bessel-K integral
/// for x > 1 and the oscillatory asymptotic expansion for large negative x.
AiryResult airy(double x);

/// Switch points of the Mittag-Leffler evaluator, measured in
/// y = |x|^(1/alpha).
struct MlSwitch {
  double series_max_y = 12.0;
  double asym_min_y = 40.0;
};

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(x), alpha > 0.
EvalResult mittag_leffler(double alpha, double beta, double x, const SeriesControl& ctl = {},
                          const MlSwitch& sw = {});

}  // namespace wrightkit
