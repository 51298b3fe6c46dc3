#pragma once

#include <cmath>
#include <algorithm>
#include <limits>
#include <type_traits>

#include "wrightkit/common.hpp"

namespace wrightkit::detail {

constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();

struct SeriesSum {
  long double sum = 0.0L;
  long double last = 0.0L;      // magnitude of the last non-zero term
  long double max_term = 0.0L;
  int terms = 0;
  bool converged = false;
};

struct NoBound {};

// Sums term(n) for n = first, first+1, ... in long double. Stops once
// consecutive_small successive terms are below rel_tol*|sum|. An optional
// bound(n) >= |term(n)| replaces |term(n)| in that test, for terms that
// dip through zeros of 1/Gamma while their envelope is still large.
template <class Term, class Bound = NoBound>
SeriesSum sum_series(Term&& term, const SeriesControl& ctl, int first = 0, Bound&& bound = {}) {
  SeriesSum s;
  int small = 0;
  for (int n = first; n < first + ctl.max_terms; ++n) {
    const long double t = term(n);
    s.sum += t;
    ++s.terms;
    long double at = std::fabs(t);
    if constexpr (!std::is_same_v<std::decay_t<Bound>, NoBound>) at = std::max(at, bound(n));
    if (at > s.max_term) s.max_term = at;
    if (at != 0.0L) s.last = at;
    if (at <= ctl.rel_tol * std::fabs(s.sum) && s.sum != 0.0L) {
      if (++small >= ctl.consecutive_small) {
        s.converged = true;
        break;
      }
    } else if (at == 0.0L && s.max_term == 0.0L && n - first > 4 * ctl.consecutive_small) {
      // identically zero so far and still zero: treat as exact zero
      s.converged = true;
      break;
    } else {
      small = 0;
    }
  }
  return s;
}

inline bool guard_tripped(const SeriesSum& s, const SeriesControl& ctl) {
  return s.max_term * kEpsLd > ctl.rel_tol * std::fabs(s.sum);
}

inline EvalResult to_result(const SeriesSum& s, const SeriesControl& ctl,
                            Method m = Method::series) {
  EvalResult r;
  r.value = static_cast<double>(s.sum);
  r.method = m;
  const long double round = s.max_term * kEpsLd * s.terms;
  r.err_est = static_cast<double>(std::fabs(s.last) + round) +
              std::numeric_limits<double>::epsilon() * std::abs(r.value);
  if (!s.converged || (s.sum != 0.0L && guard_tripped(s, ctl)) ||
      (s.sum == 0.0L && s.max_term > 0.0L))
    r.status = Status::accuracy_loss;
  if (!std::isfinite(r.value)) r.status = Status::overflow;
  return r;
}

}  // namespace wrightkit::detail
