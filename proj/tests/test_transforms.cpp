#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "wrightkit/transforms.hpp"
#include "wrightkit/wright.hpp"

using namespace wrightkit;

namespace {

const double kPi = std::numbers::pi;
const double kInf = std::numeric_limits<double>::infinity();

// E_a(z) straight from the series, long double
double ml_series(double a, double z) {
  long double s = 0.0L, zk = 1.0L;
  for (int k = 0; k < 200; ++k) {
    s += zk / std::tgamma(static_cast<long double>(a) * k + 1.0L);
    zk *= z;
  }
  return static_cast<double>(s);
}

double psi(double a, double t) { return a / (2.0 * std::sqrt(kPi)) * std::pow(t, -1.5) * std::exp(-a * a / (4.0 * t)); }
double chi(double a, double t) { return std::exp(-a * a / (4.0 * t)) / std::sqrt(kPi * t); }

}  // namespace

TEST_CASE("laplace_fwd") {
  CHECK(laplace_fwd([](double) { return 1.0; }, 2.0).value == doctest::Approx(0.5).epsilon(1e-13));
  const auto m = laplace_fwd([](double t) { return wright_m(0.5, t).value; }, 1.0);
  CHECK(std::abs(m.value - 0.4275835761) <= 1e-9);
  CHECK(std::abs(m.value - std::exp(1.0) * std::erfc(1.0)) <= 1e-10);
  const auto p = laplace_fwd([](double t) { return t == 0.0 ? 0.0 : psi(1.0, t); }, 1.0);
  CHECK(std::abs(p.value - std::exp(-1.0)) <= 1e-10);
  CHECK_THROWS_AS(laplace_fwd([](double) { return 1.0; }, 0.0), DomainError);
}

TEST_CASE("bromwich_branchcut_invert examples") {
  const auto phi = bromwich_branchcut_invert(LaplaceDescriptor::single(1.0, 1.0, 0.5), 1.0);
  CHECK(std::abs(phi.value - std::erfc(0.5)) <= 1e-9);
  CHECK(std::abs(phi.value - 0.4795001222) <= 1e-9);
  const auto ps = bromwich_branchcut_invert(LaplaceDescriptor::single(0.0, 1.0, 0.5), 1.0);
  CHECK(std::abs(ps.value - 0.2196956447) <= 1e-9);
  const auto ch = bromwich_branchcut_invert(LaplaceDescriptor::single(0.5, 1.0, 0.5), 1.0);
  CHECK(std::abs(ch.value - 0.4393912894) <= 1e-9);

  // the same cut function written out by hand
  const CutFn cut = [](double r) { return std::complex<double>(std::cos(std::sqrt(r)), -std::sin(std::sqrt(r))) / -r; };
  CHECK(std::abs(bromwich_branchcut_invert(cut, 1.0, 1.0).value - std::erfc(0.5)) <= 1e-9);
  CHECK_THROWS_AS(bromwich_branchcut_invert(LaplaceDescriptor::single(2.0, 1.0, 0.5), 1.0), DomainError);
}

TEST_CASE("three sisters round trip") {
  for (double t : {0.25, 1.0, 4.0}) {
    CAPTURE(t);
    const double exact[] = {std::erfc(0.5 / std::sqrt(t)), psi(1.0, t), chi(1.0, t)};
    const double mus[] = {1.0, 0.0, 0.5};
    for (int k = 0; k < 3; ++k) {
      const auto d = LaplaceDescriptor::single(mus[k], 1.0, 0.5);
      CHECK(std::abs(bromwich_branchcut_invert(d, t).value - exact[k]) <= 1e-7);
      CHECK(std::abs(talbot_invert(d, t).value - exact[k]) <= 1e-7);
    }
  }
}

TEST_CASE("talbot_invert") {
  const auto one = talbot_invert(LaplaceDescriptor::single(1.0, 0.0, 0.5), 3.0);
  CHECK(std::abs(one.value - 1.0) <= 1e-10);
  CHECK(one.ok());
  CHECK(std::abs(talbot_invert(LaplaceDescriptor::single(1.0, 1.0, 0.5), 1.0).value - std::erfc(0.5)) <= 1e-10);
  const auto d = LaplaceDescriptor::single(0.5, 1.0, 0.25);
  CHECK(std::abs(talbot_invert(d, 1.0).value - bromwich_branchcut_invert(d, 1.0).value) <= 1e-6);
  // exp(-x s^nu) grows along the contour for nu > 1/2 and large x
  CHECK(talbot_invert(LaplaceDescriptor::single(1.0, 8.0, 0.75), 0.5).status != Status::ok);
  CHECK_THROWS_AS(talbot_invert(d, 1.0, 2), DomainError);
  CHECK_THROWS_AS(talbot_invert(d, 0.0), DomainError);
}

TEST_CASE("both inverters agree on the s^-mu exp(-x s^nu) family") {
  for (double nu : {0.25, 0.5, 0.75})
    for (double mu : {0.0, nu, 1.0 - nu, 1.0}) {
      const auto d = LaplaceDescriptor::single(mu, 1.0, nu);
      const auto a = talbot_invert(d, 1.0);
      const auto b = bromwich_branchcut_invert(d, 1.0);
      CAPTURE(nu);
      CAPTURE(mu);
      CHECK(std::abs(a.value - b.value) <= 1e-6);
      CHECK(a.ok());
      CHECK(b.ok());
    }
}

TEST_CASE("cosine_transform") {
  const RealFn m12 = [](double x) { return wright_m(0.5, x).value; };
  CHECK(std::abs(cosine_transform(m12, 1.0).value - std::exp(-1.0)) <= 1e-9);
  CHECK(std::abs(cosine_transform(m12, 1.0).value - 0.3678794412) <= 1e-9);
  const RealFn e = [](double x) { return std::exp(-x); };
  CHECK(cosine_transform(e, 0.0).value == doctest::Approx(integrate(e, 0.0, kInf).value).epsilon(1e-15));
  const RealFn m34 = [](double x) { return wright_m(0.75, x).value; };
  CHECK(std::abs(cosine_transform(m34, 2.0).value - ml_series(1.5, -4.0)) <= 1e-5);
  // int_0^inf cos(k x) / (1 + x^2) dx = pi/2 e^{-k}: slow algebraic decay
  const RealFn lor = [](double x) { return 1.0 / (1.0 + x * x); };
  CHECK(std::abs(cosine_transform(lor, 1.5).value - kPi / 2.0 * std::exp(-1.5)) <= 1e-7);
}

TEST_CASE("convolve") {
  const RealFn gauss = [](double u) { return std::exp(-u * u / 4.0) / (2.0 * std::sqrt(kPi)); };
  const double w = 0.01;
  const SampledFunction box({-w / 2, -w / 2 + 1e-12, w / 2 - 1e-12, w / 2}, {0.0, 1.0 / w, 1.0 / w, 0.0});
  CHECK(std::abs(convolve(gauss, box, 0.0, ConvolutionMode::space).value - gauss(0.0)) <= 1e-5);
  const auto zero = sample([](double) { return 0.0; }, -3.0, 3.0, 7);
  CHECK(convolve(gauss, zero, 0.5, ConvolutionMode::space).value == 0.0);
  const RealFn gs = [](double tau) { return tau <= 0.0 ? 0.0 : psi(1.0, tau); };
  const auto step = sample([](double) { return 1.0; }, 0.0, 1.0, 11);
  const auto u = convolve(gs, step, 1.0, ConvolutionMode::causal_time);
  CHECK(std::abs(u.value - std::erfc(0.5)) <= 1e-9);
  CHECK(u.ok());
  const auto narrow = sample([](double) { return 1.0; }, -1.0, 1.0, 11);
  CHECK(convolve(gauss, narrow, 0.0, ConvolutionMode::space).status == Status::support_truncated);
  CHECK_THROWS_AS(convolve(gs, step, -1.0, ConvolutionMode::causal_time), DomainError);
}

TEST_CASE("linearity") {
  std::mt19937 rng(20241016);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const RealFn f = [](double t) { return std::exp(-t) * std::cos(t); };
  const RealFn g = [](double t) { return wright_m(0.5, t).value; };
  for (int trial = 0; trial < 5; ++trial) {
    const double a = coef(rng), b = coef(rng);
    const RealFn h = [&](double t) { return a * f(t) + b * g(t); };
    CAPTURE(a);
    CAPTURE(b);
    const double lf = laplace_fwd(f, 1.3).value, lg = laplace_fwd(g, 1.3).value;
    CHECK(std::abs(laplace_fwd(h, 1.3).value - (a * lf + b * lg)) <= 1e-11);
    const double cf = cosine_transform(f, 0.8).value, cg = cosine_transform(g, 0.8).value;
    CHECK(std::abs(cosine_transform(h, 0.8).value - (a * cf + b * cg)) <= 1e-9);

    const LaplaceTerm p{1.0, 0.5, 1.0, 0.5}, q{1.0, 1.0, 0.7, 0.25};
    const LaplaceDescriptor sum{{LaplaceTerm{a, p.mu, p.x, p.nu}, LaplaceTerm{b, q.mu, q.x, q.nu}}};
    const double tp = talbot_invert({{p}}, 1.0).value, tq = talbot_invert({{q}}, 1.0).value;
    CHECK(std::abs(talbot_invert(sum, 1.0).value - (a * tp + b * tq)) <= 1e-10);
    const double bp = bromwich_branchcut_invert({{p}}, 1.0).value, bq = bromwich_branchcut_invert({{q}}, 1.0).value;
    CHECK(std::abs(bromwich_branchcut_invert(sum, 1.0).value - (a * bp + b * bq)) <= 1e-9);

    const auto d1 = sample([](double x) { return std::exp(-x * x); }, -4.0, 4.0, 81);
    const auto d2 = sample([](double x) { return 1.0 / (1.0 + x * x); }, -4.0, 4.0, 81);
    const auto d12 = sample([&](double x) { return a * std::exp(-x * x) + b / (1.0 + x * x); }, -4.0, 4.0, 81);
    const auto k = [](double u) { return std::exp(-u * u); };
    const double c1 = convolve(k, d1, 0.3, ConvolutionMode::space).value;
    const double c2 = convolve(k, d2, 0.3, ConvolutionMode::space).value;
    CHECK(std::abs(convolve(k, d12, 0.3, ConvolutionMode::space).value - (a * c1 + b * c2)) <= 1e-10);
  }
}
