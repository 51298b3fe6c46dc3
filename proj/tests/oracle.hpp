#pragma once

// reference values computed independently of the library

#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using mp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

inline mp rgamma(const mp& w) {
  if (w <= 0 && w == boost::multiprecision::floor(w)) return mp(0);
  if (w < mp(0.5)) {
    const mp pi = boost::math::constants::pi<mp>();
    return boost::math::tgamma(1 - w) * sin(pi * w) / pi;
  }
  return 1 / boost::math::tgamma(w);
}

// W_{lambda,mu}(z) = sum z^n / (n! Gamma(lambda n + mu)), 200 digits
inline double wright(double lambda, double mu, double z) {
  const mp zz(z), l(lambda), m(mu), pi = boost::math::constants::pi<mp>();
  mp pw = 1, sum = 0, prev = 0;
  for (int n = 0; n < 20000; ++n) {
    const mp w = l * n + m;
    sum += pw * rgamma(w);
    // |1/Gamma(w)| <= Gamma(1-w)/pi, nonzero at the poles
    const mp bound = abs(pw) * (w < mp(0.5) ? boost::math::tgamma(1 - w) / pi : rgamma(w));
    if (n > 10 && bound < prev && bound < abs(sum) * mp(1e-25)) break;
    prev = bound;
    pw *= zz / (n + 1);
  }
  return static_cast<double>(sum);
}

inline double m_wright(double nu, double x) { return wright(-nu, 1.0 - nu, -x); }

// E_{a,b}(z), long double series; small |z| only
inline double ml(double a, double b, double z) {
  long double s = 0.0L, zk = 1.0L;
  for (int k = 0; k < 300; ++k) {
    const long double g = static_cast<long double>(a) * k + b;
    s += zk / std::tgamma(g);
    zk *= z;
    if (std::abs(zk) < 1e-30L && k > 5) break;
  }
  return static_cast<double>(s);
}

inline double gaussian_m(double x) { return std::exp(-x * x / 4.0) / std::sqrt(std::numbers::pi); }

inline double levy_smirnov(double x) {
  return std::exp(-1.0 / (4.0 * x)) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(x, 1.5));
}

}  // namespace oracle
