#include "wrightkit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace wrightkit {
namespace {

// QUADPACK qk21 abscissae and weights. Odd entries of kXgk are the 10-point
// Gauss nodes, whose weights are kWg.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double result = 0.0;
  double error = 0.0;
  double roundoff = 0.0;
};

bool operator<(const Segment& l, const Segment& r) { return l.error < r.error; }

double checked(double v) {
  if (!std::isfinite(v))
    throw ConvergenceError("integrate: integrand returned a non-finite value", 0.0,
                           std::numeric_limits<double>::infinity());
  return v;
}

Segment evaluate(const RealFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f(center));
  double resg = 0.0;
  double resk = fc * kWgk[10];
  double resabs = std::abs(resk);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked(f(center - dx));
    f2[j] = checked(f(center + dx));
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double h = std::abs(half);
  Segment s{a, b, resk * half, std::abs((resk - resg) * half), 0.0};
  resabs *= h;
  resasc *= h;
  if (resasc != 0.0 && s.error != 0.0)
    s.error = resasc * std::min(1.0, std::pow(200.0 * s.error / resasc, 1.5));
  s.roundoff = 50.0 * kEps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    s.error = std::max(s.roundoff, s.error);
  return s;
}

EvalResult adaptive(const RealFn& f, std::span<const double> points,
                    const QuadratureControl& ctl) {
  std::vector<Segment> heap;
  std::vector<Segment> frozen;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] > points[i]) heap.push_back(evaluate(f, points[i], points[i + 1]));
  }
  if (heap.empty()) return {0.0, 0.0, Method::integral, Status::ok};
  std::make_heap(heap.begin(), heap.end());

  auto totals = [&] {
    double r = 0.0;
    double e = 0.0;
    for (const auto& s : heap) {
      r += s.result;
      e += s.error;
    }
    for (const auto& s : frozen) {
      r += s.result;
      e += s.error;
    }
    return std::pair{r, e};
  };

  auto [result, error] = totals();
  int splits = 0;
  while (!heap.empty() && error > std::max(ctl.abs_tol, ctl.rel_tol * std::abs(result))) {
    if (splits >= ctl.max_subdivisions) break;
    std::pop_heap(heap.begin(), heap.end());
    Segment top = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (top.a + top.b);
    const bool too_narrow = !(mid > top.a && mid < top.b) ||
                            (top.b - top.a) < 1e3 * kEps * std::max(std::abs(top.a), std::abs(top.b));
    if (too_narrow || top.error <= top.roundoff) {
      frozen.push_back(top);
      continue;
    }
    const Segment left = evaluate(f, top.a, mid);
    const Segment right = evaluate(f, mid, top.b);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
    ++splits;
    result += left.result + right.result - top.result;
    error += left.error + right.error - top.error;
    if (splits % 64 == 0) std::tie(result, error) = totals();
  }
  std::tie(result, error) = totals();

  const double tol = std::max(ctl.abs_tol, ctl.rel_tol * std::abs(result));
  EvalResult out{result, error, Method::integral, Status::ok};
  if (error > tol) {
    double frozen_err = 0.0;
    for (const auto& s : frozen) frozen_err += s.error;
    if (error <= 10.0 * tol || frozen_err >= 0.5 * error) {
      out.status = Status::accuracy_loss;
    } else {
      throw ConvergenceError("integrate: subdivision limit reached before tolerance", result,
                             error);
    }
  }
  return out;
}

// Exponential extrapolation of the tail beyond `cut` from samples at cut/2
// and cut (relative to the lower limit a).
double tail_bound(const RealFn& f, double a, double cut) {
  const double f1 = std::abs(f(a + 0.5 * cut));
  const double f2 = std::abs(f(a + cut));
  if (f2 == 0.0) return 0.0;
  if (f1 > f2) {
    const double rate = std::log(f1 / f2) / (0.5 * cut);
    return f2 / rate;
  }
  return f2 * cut;
}

}  // namespace

PanelEstimate gauss_kronrod_21(const RealFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = 0.0;
  double resk = fc * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    resk += kWgk[j] * sum;
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  return {resk * half, resg * half};
}

EvalResult integrate(const RealFn& f, double a, double b, const QuadratureControl& ctl) {
  const std::array<double, 2> pts{a, b};
  return integrate(f, std::span<const double>(pts), ctl);
}

EvalResult integrate(const RealFn& f, std::span<const double> points,
                     const QuadratureControl& ctl) {
  ctl.validate();
  if (points.size() < 2) throw DomainError("integrate: need at least two points");
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] <= points[i + 1]) || std::isnan(points[i]))
      throw DomainError("integrate: breakpoints must be increasing");
  }
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (!std::isfinite(points[i])) throw DomainError("integrate: interior breakpoint is infinite");
  }

  const double lo = points.front();
  const double hi = points.back();
  if (std::isfinite(lo) && std::isfinite(hi)) return adaptive(f, points, ctl);

  // Split off infinite ends, handle each as [c, +inf) after reflection.
  const bool lo_inf = !std::isfinite(lo);
  const bool hi_inf = !std::isfinite(hi);
  std::vector<double> inner(points.begin() + (lo_inf ? 1 : 0),
                            points.end() - (hi_inf ? 1 : 0));
  if (inner.empty()) inner.push_back(0.0);

  EvalResult total{0.0, 0.0, Method::integral, Status::ok};
  auto accumulate = [&total](const EvalResult& r) {
    total.value += r.value;
    total.err_est += r.err_est;
    total.status = worst(total.status, r.status);
  };
  if (inner.size() >= 2) accumulate(adaptive(f, inner, ctl));

  auto half_line = [&ctl](const RealFn& g, double c) -> EvalResult {
    if (ctl.tail_cutoff > 0.0) {
      const std::array<double, 2> pts{c, c + ctl.tail_cutoff};
      EvalResult r = adaptive(g, pts, ctl);
      r.err_est += tail_bound(g, c, ctl.tail_cutoff);
      return r;
    }
    const RealFn mapped = [&g, c](double u) {
      const double x = c + (1.0 - u) / u;
      if (!std::isfinite(x)) return 0.0;
      const double v = g(x);
      return v == 0.0 ? 0.0 : v / (u * u);
    };
    const std::array<double, 2> pts{0.0, 1.0};
    return adaptive(mapped, pts, ctl);
  };

  if (hi_inf) accumulate(half_line(f, inner.back()));
  if (lo_inf) {
    const RealFn reflected = [&f](double x) { return f(-x); };
    accumulate(half_line(reflected, -inner.front()));
  }
  return total;
}

}  // namespace wrightkit
