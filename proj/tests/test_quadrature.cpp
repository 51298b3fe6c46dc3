#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wrightkit/quadrature.hpp"

using namespace wrightkit;

TEST_CASE("integrate examples") {
  const auto r = integrate([](double x) { return std::exp(-x); }, 0.0, INFINITY);
  CHECK(std::abs(r.value - 1.0) <= 1e-12);
  CHECK(r.method == Method::integral);

  const double sp = std::sqrt(std::numbers::pi);
  const auto g = integrate([sp](double x) { return std::exp(-x * x / 4.0) / sp; }, 0.0, INFINITY);
  CHECK(std::abs(g.value - 1.0) <= 1e-10);

  // brute-force trapezoid oracle after u = sqrt(x): 2 int_0^1 exp(-u^2) du
  const int n = 1000000;
  double s = 0.5 * (1.0 + std::exp(-1.0));
  for (int i = 1; i < n; ++i) {
    const double u = static_cast<double>(i) / n;
    s += std::exp(-u * u);
  }
  const double oracle = 2.0 * s / n;
  const auto w = integrate([](double x) { return std::exp(-x) / std::sqrt(x); }, 0.0, 1.0);
  CHECK(std::abs(w.value - oracle) <= 1e-10);
  CHECK(std::abs(w.value - 1.4936482656248540) <= 1e-10);
}

TEST_CASE("integrate error estimate bounds the actual error") {
  QuadratureControl ctl;
  ctl.rel_tol = 1e-8;
  ctl.abs_tol = 1e-14;
  const auto r = integrate([](double x) { return std::cos(30.0 * x) * std::exp(-x); }, 0.0, 4.0, ctl);
  const double exact = (1.0 - std::exp(-4.0) * (std::cos(120.0) - 30.0 * std::sin(120.0))) / 901.0;
  CHECK(std::abs(r.value - exact) <= std::max(r.err_est, 1e-15));
  CHECK(r.err_est <= 1e-8 * std::abs(exact) + 1e-14);
}

TEST_CASE("integrate with breakpoints and both infinite ends") {
  const double pts[] = {-INFINITY, -1.0, 0.0, 2.0, INFINITY};
  const auto r = integrate([](double x) { return std::exp(-x * x); }, pts);
  CHECK(std::abs(r.value - std::sqrt(std::numbers::pi)) <= 1e-11);
  const auto b = integrate([](double x) { return std::abs(x - 0.3); }, std::span<const double>(pts + 1, 3));
  CHECK(std::abs(b.value - (1.3 * 1.3 + 1.7 * 1.7) / 2.0) <= 1e-12);
}

TEST_CASE("tail cutoff adds a tail bound") {
  QuadratureControl ctl;
  ctl.tail_cutoff = 20.0;
  const auto r = integrate([](double x) { return std::exp(-x); }, 0.0, INFINITY, ctl);
  CHECK(std::abs(r.value - 1.0) <= r.err_est + 1e-14);
  CHECK(r.err_est >= std::exp(-20.0) * 0.5);
}

TEST_CASE("integrate failures") {
  QuadratureControl ctl;
  ctl.max_subdivisions = 8;
  ctl.rel_tol = 1e-14;
  ctl.abs_tol = 1e-300;
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x) / x; }, 1e-6, 1.0, ctl),
                  ConvergenceError);
  QuadratureControl bad;
  bad.max_subdivisions = 2;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), DomainError);
  const double rev[] = {1.0, 0.0};
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, rev), DomainError);
}

TEST_CASE("linearity") {
  auto f = [](double x) { return std::exp(-x) * std::sin(x); };
  auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const double a = 0.37;
  const double b = -2.1;
  const double lhs = integrate([&](double x) { return a * f(x) + b * g(x); }, 0.0, INFINITY).value;
  const double rhs = a * integrate(f, 0.0, INFINITY).value + b * integrate(g, 0.0, INFINITY).value;
  CHECK(std::abs(lhs - rhs) <= 1e-9);
}
