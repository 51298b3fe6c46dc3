#include "wrightkit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace wrightkit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using cld = std::complex<long double>;

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

EvalResult laplace_fwd(const RealFn& f, double s, const QuadratureControl& ctl) {
  check_positive(s, "laplace_fwd: s");
  const RealFn g = [&f, s](double t) {
    const double e = std::exp(-s * t);
    return e == 0.0 ? 0.0 : e * f(t);
  };
  const double pts[] = {0.0, 1.0 / s, 5.0 / s, 20.0 / s, kInf};
  return integrate(g, pts, ctl);
}

EvalResult cosine_transform(const RealFn& f, double kappa, const QuadratureControl& ctl) {
  ctl.validate();
  if (!std::isfinite(kappa)) throw DomainError("cosine_transform: kappa must be finite");
  if (kappa == 0.0) return integrate(f, 0.0, kInf, ctl);
  const double k = std::abs(kappa);
  const RealFn g = [&f, k](double x) { return std::cos(k * x) * f(x); };
  const double h = kPi / k;

  QuadratureControl pc = ctl;
  pc.abs_tol = ctl.abs_tol * 0.1;
  EvalResult out{0.0, 0.0, Method::integral, Status::ok};
  std::vector<double> partial;
  double a = 0.0;
  double b = 0.5 * h;
  int small = 0;
  bool converged = false;
  const int max_panels = 20000;
  for (int i = 0; i < max_panels; ++i) {
    const EvalResult p = integrate(g, a, b, pc);
    out.value += p.value;
    out.err_est += p.err_est;
    out.status = worst(out.status, p.status);
    partial.push_back(out.value);
    const double tol = std::max(ctl.abs_tol, ctl.rel_tol * std::abs(out.value));
    if (std::abs(p.value) <= 0.1 * tol) {
      if (++small >= 3 && i >= 3) {
        converged = true;
        break;
      }
    } else {
      small = 0;
    }
    a = b;
    b += h;
  }
  if (!converged) {
    // alternating tail: repeated averaging of the last partial sums
    std::vector<double> s(partial.end() - std::min<std::size_t>(partial.size(), 24), partial.end());
    double prev = s.back();
    while (s.size() > 1) {
      prev = s.back();
      for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
      s.pop_back();
    }
    out.err_est += std::abs(s.front() - prev);
    out.value = s.front();
    if (std::abs(s.front() - prev) > std::max(ctl.abs_tol, ctl.rel_tol * std::abs(out.value)))
      out.status = worst(out.status, Status::accuracy_loss);
  }
  return out;
}

// ---- Laplace descriptor ----

void LaplaceDescriptor::validate() const {
  if (terms.empty()) throw DomainError("LaplaceDescriptor: no terms");
  for (const auto& t : terms) {
    if (!std::isfinite(t.coef) || !std::isfinite(t.mu) || !std::isfinite(t.x))
      throw DomainError("LaplaceDescriptor: non-finite term");
    if (!(t.nu > 0.0 && t.nu <= 1.0)) throw DomainError("LaplaceDescriptor: nu must lie in (0, 1]");
    if (t.x < 0.0) throw DomainError("LaplaceDescriptor: x must be non-negative");
  }
}

std::complex<long double> LaplaceDescriptor::operator()(std::complex<long double> s) const {
  const cld ls = std::log(s);
  cld sum = 0.0L;
  for (const auto& t : terms) {
    const cld snu = std::exp(static_cast<long double>(t.nu) * ls);
    sum += static_cast<long double>(t.coef) *
           std::exp(-static_cast<long double>(t.mu) * ls - static_cast<long double>(t.x) * snu);
  }
  return sum;
}

std::complex<double> LaplaceDescriptor::above_cut(double r) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms) {
    const double rn = std::pow(r, t.nu);
    const double mag = t.coef * std::pow(r, -t.mu) * std::exp(-t.x * rn * std::cos(kPi * t.nu));
    const double ph = -(kPi * t.mu + t.x * rn * std::sin(kPi * t.nu));
    sum += std::polar(mag, ph);
  }
  return sum;
}

double LaplaceDescriptor::residue_at_zero() const {
  double r = 0.0;
  for (const auto& t : terms) {
    if (t.mu > 1.0) throw DomainError("LaplaceDescriptor: pole of order > 1 at s = 0");
    if (t.mu == 1.0) r += t.coef;
  }
  return r;
}

EvalResult bromwich_branchcut_invert(const CutFn& F_above_cut, double residue_at_zero, double t,
                                     const QuadratureControl& ctl) {
  check_positive(t, "bromwich_branchcut_invert: t");
  const RealFn g = [&F_above_cut, t](double rho) {
    const double r = rho * rho;
    const double e = std::exp(-r * t);
    if (e == 0.0 || rho == 0.0) return 0.0;
    return e * F_above_cut(r).imag() * 2.0 * rho;
  };
  const double sc = 1.0 / std::sqrt(t);
  const double pts[] = {0.0, sc, 3.0 * sc, 7.0 * sc, kInf};
  EvalResult in = integrate(g, pts, ctl);

  // sign changes on a fine sampling grid of the effective support
  const int n = 4000;
  const double rho_max = 7.0 * sc;
  int changes = 0;
  double prev = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double v = g(rho_max * i / n);
    if (v != 0.0) {
      if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++changes;
      prev = v;
    }
  }
  EvalResult out{residue_at_zero - in.value / kPi, in.err_est / kPi, Method::integral, in.status};
  if (changes > n / 8) out.status = worst(out.status, Status::oscillatory);
  return out;
}

EvalResult bromwich_branchcut_invert(const LaplaceDescriptor& F, double t,
                                     const QuadratureControl& ctl) {
  F.validate();
  return bromwich_branchcut_invert([&F](double r) { return F.above_cut(r); }, F.residue_at_zero(),
                                   t, ctl);
}

EvalResult talbot_invert(const LaplaceDescriptor& F, double t, int n_nodes) {
  F.validate();
  check_positive(t, "talbot_invert: t");
  if (n_nodes < 4 || n_nodes > 200) throw DomainError("talbot_invert: n_nodes must lie in [4, 200]");
  const long double lt = t;
  auto run = [&](int m) {
    const long double r = 2.0L * m / (5.0L * lt);
    long double sum = 0.5L * (F(cld(r, 0.0L)) * std::exp(r * lt)).real();
    for (int k = 1; k < m; ++k) {
      const long double th = k * std::numbers::pi_v<long double> / m;
      const long double cot = std::cos(th) / std::sin(th);
      const cld s(r * th * cot, r * th);
      const long double sigma = th + (th * cot - 1.0L) * cot;
      sum += (std::exp(lt * s) * F(s) * cld(1.0L, sigma)).real();
    }
    return r / m * sum;
  };
  const long double f0 = run(std::max(2, n_nodes / 2));
  const long double f1 = run(n_nodes);
  const long double f2 = run(2 * n_nodes);
  const double d1 = static_cast<double>(std::fabs(f1 - f0));
  const double d2 = static_cast<double>(std::fabs(f2 - f1));
  EvalResult out{static_cast<double>(f2), d2, Method::integral, Status::ok};
  if (!std::isfinite(out.value)) {
    out.status = Status::unstable;
  } else if (d2 > d1 && d2 > 1e-12 * std::max(1.0, std::abs(out.value))) {
    out.status = Status::unstable;
  } else if (d2 > 1e-6 * std::max(1.0, std::abs(out.value))) {
    out.status = Status::accuracy_loss;
  }
  return out;
}

EvalResult convolve(const RealFn& kernel, const SampledFunction& data, double point,
                    ConvolutionMode mode, const QuadratureControl& ctl) {
  ctl.validate();
  if (!std::isfinite(point)) throw DomainError("convolve: non-finite point");
  const auto& xs = data.abscissae();
  double lo = data.front();
  double hi = data.back();
  if (mode == ConvolutionMode::causal_time) {
    if (point < 0.0) throw DomainError("convolve: causal point must be >= 0");
    lo = std::max(lo, 0.0);
    hi = std::min(hi, point);
  }
  EvalResult out{0.0, 0.0, Method::integral, Status::ok};
  const RealFn g = [&kernel, &data, point](double eta) {
    const double d = data(eta);
    return d == 0.0 ? 0.0 : kernel(point - eta) * d;
  };
  if (hi > lo) {
    std::vector<double> pts{lo};
    const std::size_t stride = std::max<std::size_t>(1, xs.size() / 256);
    for (std::size_t i = 0; i < xs.size(); i += stride)
      if (xs[i] > lo && xs[i] < hi) pts.push_back(xs[i]);
    if (mode == ConvolutionMode::space && point > lo && point < hi) pts.push_back(point);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    out = integrate(g, pts, ctl);
    out.method = Method::integral;
  }

  // kernel mass beyond the data range, where the data does not vanish
  const double tol = std::max(ctl.abs_tol, ctl.rel_tol * std::abs(out.value));
  const RealFn ak = [&kernel](double u) { return std::abs(kernel(u)); };
  auto tail = [&](double a, double b) {
    try {
      return integrate(ak, a, b, ctl).value;
    } catch (const ConvergenceError&) {
      return kInf;
    }
  };
  bool truncated = false;
  if (mode == ConvolutionMode::space) {
    const double yl = std::abs(data.values().front());
    const double yr = std::abs(data.values().back());
    if (yl > 0.0 && yl * tail(point - data.front(), kInf) > tol) truncated = true;
    if (yr > 0.0 && yr * tail(-kInf, point - data.back()) > tol) truncated = true;
  } else {
    const double yr = std::abs(data.values().back());
    if (point > data.back() && yr > 0.0 && yr * tail(0.0, point - data.back()) > tol)
      truncated = true;
  }
  if (truncated) out.status = worst(out.status, Status::support_truncated);
  return out;
}

}  // namespace wrightkit
