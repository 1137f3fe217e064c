#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "bessel.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "material.hpp"

namespace mvfca {

/// Screening/anisotropy parameter of the angular integral over the momentum
/// transfer direction: b^2 = b0^2 (1 + 1/(q* r_D)^2), b0^2 = m_perp/(m_par - m_perp).
struct ShapeParams {
  double b;
  double b0;
};

inline ShapeParams b_param(double q_star, double r_D, double m_perp, double m_par) {
  if (!(m_par > m_perp) || !(m_perp > 0))
    throw ConfigError("b_param: requires m_par > m_perp > 0");
  const double b0sq = m_perp / (m_par - m_perp);
  const double b0 = std::sqrt(b0sq);
  if (std::isinf(q_star))
    return {b0, b0};
  if (q_star == 0)
    return {std::numeric_limits<double>::infinity(), b0};
  const double qr = q_star * r_D;
  return {b0 * std::sqrt(1.0 + 1.0 / (qr * qr)), b0};
}

inline ShapeParams b_param(double q_star, const Material &m) {
  return b_param(q_star, m.r_D(), m.m_perp(), m.m_par());
}

namespace detail {
// Above this b the closed forms cancel to O(1/b^4); switch to the series in
// z = 1/b^2, which converges like z^n.
inline constexpr double shape_series_threshold = 4.0;
} // namespace detail

/// B1(b) = 1/b^2 + ((1 - b^2)/b^3) arctan(1/b)
inline double shape_B1(double b) {
  if (std::isinf(b))
    return 0.0;
  if (b > detail::shape_series_threshold) {
    // sum_{n>=1} (-1)^(n+1) 4n/(4n^2-1) z^(n+1)
    const double z = 1.0 / (b * b);
    double zp = z * z, sum = 0.0;
    for (int n = 1; n < 40; ++n) {
      const double term = 4.0 * n / (4.0 * n * n - 1.0) * zp;
      sum += (n % 2 ? term : -term);
      if (term < 1e-18 * sum)
        break;
      zp *= z;
    }
    return sum;
  }
  const double at = std::atan2(1.0, b);
  return 1.0 / (b * b) + (1.0 - b * b) / (b * b * b) * at;
}

/// B2(b) = -1/(1 + b^2) + (1/b) arctan(1/b)
inline double shape_B2(double b) {
  if (std::isinf(b))
    return 0.0;
  if (b > detail::shape_series_threshold) {
    // sum_{n>=1} (-1)^(n+1) 2n/(2n+1) z^(n+1)
    const double z = 1.0 / (b * b);
    double zp = z * z, sum = 0.0;
    for (int n = 1; n < 40; ++n) {
      const double term = 2.0 * n / (2.0 * n + 1.0) * zp;
      sum += (n % 2 ? term : -term);
      if (term < 1e-18 * sum)
        break;
      zp *= z;
    }
    return sum;
  }
  return -1.0 / (1.0 + b * b) + std::atan2(1.0, b) / b;
}

/// The pair (B1, B2) at one momentum transfer.
struct ShapeMoments {
  double b1 = 0;
  double b2 = 0;
};

inline ShapeMoments shape_moments(double q_star, const Material &m) {
  const double b = b_param(q_star, m).b;
  return {shape_B1(b), shape_B2(b)};
}

/// Psi = B1 + cos^2(phi) [-B1 + 2 (m_perp/m_par) B2]; affine in cos^2(phi).
inline double psi_from_moments(const ShapeMoments &sm, double cos2phi, double mass_ratio) {
  return sm.b1 + cos2phi * (-sm.b1 + 2.0 * mass_ratio * sm.b2);
}

inline double psi(double q_star, double cos2phi, const Material &m) {
  return psi_from_moments(shape_moments(q_star, m), cos2phi, m.mass_ratio());
}

/// Psi at q* r_D -> infinity (b = b0).
inline double psi_infinity(double cos2phi, const Material &m) {
  const double b0 = std::sqrt(m.b0_squared());
  return psi_from_moments({shape_B1(b0), shape_B2(b0)}, cos2phi, m.mass_ratio());
}

inline constexpr double coulomb_log_max_x = 0.1;

/// ln(1/(C1 x_min)) with ln C1 = Euler's constant; only the leading logarithm
/// of the exponential integral E1(x_min) is kept.
inline double coulomb_log(double x_min) {
  if (!(x_min > 0))
    throw RegimeError("coulomb_log: x_min must be positive", 0.0);
  if (!(x_min < coulomb_log_max_x))
    throw RegimeError("logarithmic (classical) approximation invalid: x_min = " +
                          std::to_string(x_min) + " is not < " +
                          std::to_string(coulomb_log_max_x),
                      0.0);
  return -phys::euler_gamma - std::log(x_min);
}

inline double bessel_k1(double x) { return bessel::k1(x); }

/// a^3 d/da [K1(a)/a] = -a^2 K2(a), using d/da [K1(a)/a] = -K2(a)/a.
inline double acoustic_kernel(double a) { return -a * a * bessel::k2(a); }

/// e^a a^3 d/da [K1(a)/a]; finite for large a where the unscaled kernel underflows.
inline double acoustic_kernel_scaled(double a) { return -a * a * bessel::k2_scaled(a); }

} // namespace mvfca
