#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "errors.hpp"

/// Modified Bessel functions of the second kind K0, K1, K2 for real x > 0.
///
/// x <= 2 uses the ascending series (A&S 9.6.13 / 9.6.11); x > 2 uses Steed's
/// continued fraction (Thompson-Barnett CF2), which yields the exponentially
/// scaled pair e^x K0, e^x K1 directly. K2 follows from the upward recurrence
/// K2 = K0 + (2/x) K1, which is stable for K.
namespace mvfca::bessel {

namespace detail {

inline constexpr double series_crossover = 2.0;
/// Unscaled K underflows past this point.
inline constexpr double max_unscaled_argument = 700.0;

struct KPair {
  double k0;
  double k1;
};

inline KPair series_k01(double x) {
  constexpr double gamma = std::numbers::egamma;
  const double y = 0.25 * x * x;
  const double log_half = std::log(0.5 * x);

  // term_k = y^k / (k!)^2 for K0; y^k / (k! (k+1)!) for K1.
  double t0 = 1.0, t1 = 1.0;
  double i0 = 1.0, i1sum = 1.0;
  double harmonic = 0.0; // H_k
  double k0_tail = 0.0;
  double k1_tail = (-gamma + -gamma + 1.0) * t1; // psi(1) + psi(2)
  for (int k = 1; k < 60; ++k) {
    t0 *= y / (double(k) * k);
    t1 *= y / (double(k) * (k + 1));
    const double h_next = harmonic + 1.0 / k;         // H_k
    const double h_next1 = h_next + 1.0 / (k + 1);    // H_{k+1}
    i0 += t0;
    i1sum += t1;
    k0_tail += h_next * t0;
    k1_tail += ((-gamma + h_next) + (-gamma + h_next1)) * t1;
    harmonic = h_next;
    if (t0 < 1e-18 * i0 && t1 < 1e-18 * i1sum)
      break;
  }
  const double i1 = 0.5 * x * i1sum;
  KPair out;
  out.k0 = -(log_half + gamma) * i0 + k0_tail;
  out.k1 = 1.0 / x + log_half * i1 - 0.25 * x * k1_tail;
  return out;
}

/// e^x K0(x), e^x K1(x) for x >= 2.
inline KPair scaled_cf_k01(double x) {
  constexpr double eps = 1e-17;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps)
      break;
  }
  h = a1 * h;
  KPair out;
  out.k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
  out.k1 = out.k0 * (x + 0.5 - h) / x;
  return out;
}

inline void check_positive(double x, const char *fn) {
  if (!(x > 0) || !std::isfinite(x))
    throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                      std::to_string(x));
}

inline double check_finite(double v, double x, const char *fn) {
  if (!std::isfinite(v))
    throw DomainError(std::string(fn) + ": result overflows at x = " + std::to_string(x));
  return v;
}

/// e^x K0, e^x K1 for any x > 0.
inline KPair scaled_k01(double x) {
  if (x <= series_crossover) {
    const auto p = series_k01(x);
    const double ex = std::exp(x);
    return {p.k0 * ex, p.k1 * ex};
  }
  return scaled_cf_k01(x);
}

inline void check_unscaled_range(double x, const char *fn) {
  if (x > max_unscaled_argument)
    throw DomainError(std::string(fn) + ": result underflows for x = " + std::to_string(x) +
                      " (use the scaled variant)");
}

} // namespace detail

inline double k0_scaled(double x) {
  detail::check_positive(x, "bessel_k0_scaled");
  return detail::scaled_k01(x).k0;
}

inline double k1_scaled(double x) {
  detail::check_positive(x, "bessel_k1_scaled");
  return detail::check_finite(detail::scaled_k01(x).k1, x, "bessel_k1_scaled");
}

/// e^x K2(x)
inline double k2_scaled(double x) {
  detail::check_positive(x, "bessel_k2_scaled");
  const auto p = detail::scaled_k01(x);
  return detail::check_finite(p.k0 + 2.0 / x * p.k1, x, "bessel_k2_scaled");
}

inline double k0(double x) {
  detail::check_positive(x, "bessel_k0");
  detail::check_unscaled_range(x, "bessel_k0");
  if (x <= detail::series_crossover)
    return detail::series_k01(x).k0;
  return detail::scaled_cf_k01(x).k0 * std::exp(-x);
}

inline double k1(double x) {
  detail::check_positive(x, "bessel_k1");
  detail::check_unscaled_range(x, "bessel_k1");
  if (x <= detail::series_crossover)
    return detail::check_finite(detail::series_k01(x).k1, x, "bessel_k1");
  return detail::scaled_cf_k01(x).k1 * std::exp(-x);
}

inline double k2(double x) {
  detail::check_positive(x, "bessel_k2");
  detail::check_unscaled_range(x, "bessel_k2");
  if (x <= detail::series_crossover) {
    const auto p = detail::series_k01(x);
    return detail::check_finite(p.k0 + 2.0 / x * p.k1, x, "bessel_k2");
  }
  return k2_scaled(x) * std::exp(-x);
}

} // namespace mvfca::bessel
