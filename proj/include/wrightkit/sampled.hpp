#pragma once

#include <vector>

namespace wrightkit {

enum class Interp { piecewise_linear, piecewise_cubic };

/// Tabulated function on a strictly increasing grid. Evaluates to zero
/// outside [front, back]; piecewise_cubic is a natural cubic spline.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> abscissae, std::vector<double> values,
                  Interp interp = Interp::piecewise_linear);

  double operator()(double x) const;

  const std::vector<double>& abscissae() const { return x_; }
  const std::vector<double>& values() const { return y_; }
  Interp interp() const { return interp_; }
  double front() const { return x_.front(); }
  double back() const { return x_.back(); }
  std::size_t size() const { return x_.size(); }

  /// Nodal first derivative from five-point (fourth-order) finite
  /// differences, one-sided near the ends. Needs at least five points.
  SampledFunction derivative() const;

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // spline second derivatives
  Interp interp_;
};

/// Uniform grid of n points on [a, b] sampled from f.
template <class F>
SampledFunction sample(F&& f, double a, double b, int n,
                       Interp interp = Interp::piecewise_linear) {
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = a + (b - a) * i / (n - 1);
    y[i] = f(x[i]);
  }
  return SampledFunction(std::move(x), std::move(y), interp);
}

}  // namespace wrightkit
