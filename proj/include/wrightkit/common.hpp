#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wrightkit {

/// Evaluation path that produced a value.
enum class Method { series, integral, asymptotic, closed_form, reflection };

/// Quality flag attached to a result. Anything other than `ok` means the
/// value is still returned, but the requested tolerance could not be
/// certified along the chosen path.
enum class Status {
  ok,
  accuracy_loss,      // cancellation guard tripped or tolerance not reached
  overflow,           // magnitude outside the double range
  support_truncated,  // sampled data does not cover the kernel support
  oscillatory,        // integrand oscillates faster than the panel grid
  unstable            // node-doubling difference grew (Talbot)
};

std::string_view to_string(Method m);
std::string_view to_string(Status s);

struct EvalResult {
  double value = 0.0;
  double err_est = 0.0;
  Method method = Method::series;
  Status status = Status::ok;

  bool ok() const { return status == Status::ok; }
};

/// Truncation policy for every power series in the library.
struct SeriesControl {
  double rel_tol = 1e-14;
  int max_terms = 500;
  int consecutive_small = 3;

  void validate() const;
};

struct QuadratureControl {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  // Truncation point for semi-infinite ranges, measured from the lower
  // limit. Zero selects the rational map onto (0, 1] instead.
  double tail_cutoff = 0.0;

  void validate() const;
};

struct Controls {
  SeriesControl series;
  QuadratureControl quad;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure ran out of budget before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double err_est)
      : std::runtime_error(what), best_estimate_(best_estimate), err_est_(err_est) {}

  double best_estimate() const { return best_estimate_; }
  double err_est() const { return err_est_; }

 private:
  double best_estimate_;
  double err_est_;
};

/// Combine two statuses, keeping the first non-ok one.
inline Status worst(Status a, Status b) { return a != Status::ok ? a : b; }

}  // namespace wrightkit
