#include "wrightkit/sampled.hpp"

#include <algorithm>
#include <cmath>

#include "wrightkit/common.hpp"

namespace wrightkit {

SampledFunction::SampledFunction(std::vector<double> abscissae, std::vector<double> values,
                                 Interp interp)
    : x_(std::move(abscissae)), y_(std::move(values)), interp_(interp) {
  if (x_.size() != y_.size()) throw DomainError("SampledFunction: length mismatch");
  if (x_.size() < 2) throw DomainError("SampledFunction: need at least two points");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i]))
      throw DomainError("SampledFunction: non-finite sample");
    if (i > 0 && !(x_[i] > x_[i - 1]))
      throw DomainError("SampledFunction: abscissae must be strictly increasing");
  }
  if (interp_ == Interp::piecewise_cubic) {
    // natural spline: tridiagonal solve for the second derivatives
    const std::size_t n = x_.size();
    m_.assign(n, 0.0);
    if (n > 2) {
      std::vector<double> c(n, 0.0), d(n, 0.0);
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        const double a = h0 / 6.0;
        const double b = (h0 + h1) / 3.0;
        const double cc = h1 / 6.0;
        const double r = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
        const double denom = b - a * c[i - 1];
        c[i] = cc / denom;
        d[i] = (r - a * d[i - 1]) / denom;
      }
      for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = d[i] - c[i] * m_[i + 1];
        if (i == 1) break;
      }
    }
  }
}

double SampledFunction::operator()(double x) const {
  if (!(x >= x_.front() && x <= x_.back())) return 0.0;
  if (x == x_.back()) return y_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double lin = (1.0 - t) * y_[i] + t * y_[i + 1];
  if (interp_ == Interp::piecewise_linear) return lin;
  const double a = 1.0 - t;
  return lin + h * h / 6.0 * ((a * a * a - a) * m_[i] + (t * t * t - t) * m_[i + 1]);
}

SampledFunction SampledFunction::derivative() const {
  const std::size_t n = x_.size();
  if (n < 5) throw DomainError("SampledFunction::derivative: need at least five points");
  std::vector<double> dy(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = std::min(i >= 2 ? i - 2 : 0, n - 5);
    const double x0 = x_[i];
    double sum = 0.0;
    // derivative of the Lagrange interpolant through five neighbours
    for (std::size_t j = lo; j < lo + 5; ++j) {
      double w = 0.0;
      for (std::size_t m = lo; m < lo + 5; ++m) {
        if (m == j) continue;
        double p = 1.0 / (x_[j] - x_[m]);
        for (std::size_t l = lo; l < lo + 5; ++l) {
          if (l == j || l == m) continue;
          p *= (x0 - x_[l]) / (x_[j] - x_[l]);
        }
        w += p;
      }
      sum += w * y_[j];
    }
    dy[i] = sum;
  }
  return SampledFunction(x_, std::move(dy), interp_);
}

}  // namespace wrightkit
