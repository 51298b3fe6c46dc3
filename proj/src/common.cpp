#include "wrightkit/common.hpp"

namespace wrightkit {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::integral: return "integral";
    case Method::asymptotic: return "asymptotic";
    case Method::closed_form: return "closed_form";
    case Method::reflection: return "reflection";
  }
  return "unknown";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::accuracy_loss: return "accuracy_loss";
    case Status::overflow: return "overflow";
    case Status::support_truncated: return "support_truncated";
    case Status::oscillatory: return "oscillatory";
    case Status::unstable: return "unstable";
  }
  return "unknown";
}

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw DomainError("SeriesControl: rel_tol must lie in (0, 1)");
  if (max_terms < 10) throw DomainError("SeriesControl: max_terms must be >= 10");
  if (consecutive_small < 1)
    throw DomainError("SeriesControl: consecutive_small must be positive");
}

void QuadratureControl::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw DomainError("QuadratureControl: tolerances must be positive");
  if (max_subdivisions < 8)
    throw DomainError("QuadratureControl: max_subdivisions must be >= 8");
  if (tail_cutoff < 0.0) throw DomainError("QuadratureControl: tail_cutoff must be >= 0");
}

}  // namespace wrightkit
