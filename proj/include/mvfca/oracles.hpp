#pragma once

#include <cmath>
#include <numbers>

#include "constants.hpp"
#include "impurity.hpp"
#include "material.hpp"
#include "quadrature.hpp"
#include "regime.hpp"
#include "vec3.hpp"

/// Brute-force evaluations of the unreduced impurity integrals. Slow; meant to
/// certify the closed forms and single-integral reductions.
namespace mvfca::oracles {

/// int dOmega gamma^2 / {q_perp^2 + d q_par^2 + 1/r_D^2}^2 over the direction of
/// q* (|q*| = q_star, valley axis along z), gamma = A_perp q_x + g A_par q_z.
/// The closed form corresponds to g = (m_perp/m_par)^{1/2}, d = m_par/m_perp.
inline double angular_integral_generic(double q_star, double r_D, double gamma_ratio,
                                       double denominator_ratio, double A_perp, double A_par,
                                       double agreement = 1e-12) {
  const double screen = 1.0 / (r_D * r_D);
  auto f = [&](const Vec3 &n) {
    const double qx = q_star * n.x, qy = q_star * n.y, qz = q_star * n.z;
    const double gamma = A_perp * qx + gamma_ratio * A_par * qz;
    const double den = qx * qx + qy * qy + denominator_ratio * qz * qz + screen;
    return gamma * gamma / (den * den);
  };
  return quad::integrate_unit_sphere(f, agreement).value;
}

inline double angular_integral_numeric(double q_star, double r_D, double m_perp, double m_par,
                                       double A_perp, double A_par) {
  return angular_integral_generic(q_star, r_D, std::sqrt(m_perp / m_par), m_par / m_perp, A_perp,
                                  A_par);
}

inline double angular_integral_numeric(double q_star, const Material &m, double A_perp,
                                       double A_par) {
  return angular_integral_numeric(q_star, m.r_D(), m.m_perp(), m.m_par(), A_perp, A_par);
}

namespace detail {

struct FieldComponents {
  double perp;
  double par;
};

inline FieldComponents field_components(const Valley &v, const Polarization &pol, double A0) {
  const double c2 = cos2_phi(v, pol);
  return {A0 * std::sqrt(1.0 - c2), A0 * std::sqrt(c2)};
}

inline quad::QuadratureSpec inner_spec() {
  quad::QuadratureSpec s;
  s.rel_tol = 1e-11;
  return s;
}

} // namespace detail

/// int_{q_lo}^{q_hi} dq q y(q), integrated in ln q.
inline double q_window_integral(double q_lo, double q_hi, const Material &m, double A_perp,
                                double A_par) {
  if (!(q_hi > q_lo))
    return 0.0;
  auto f = [&](double u) {
    const double q = std::exp(u);
    return q * q * impurity::angular_integral(q, m, A_perp, A_par);
  };
  return quad::integrate(f, std::log(q_lo), std::log(q_hi), detail::inner_spec()).value;
}

/// int_0^inf de e^{-e/theta} int_{q_min(e)}^{q_max(e)} dq q y(q), with the
/// absorption window q = (p' +- p)/hbar, p = (2 m_perp e)^{1/2}, p' = (2 m_perp (e + hbar omega))^{1/2}.
/// Outer variable e = theta t^2.
inline double double_integral_direct(const Valley &v, const Material &m, double omega,
                                     const Polarization &pol, double A0 = 1.0) {
  const auto A = detail::field_components(v, pol, A0);
  const double theta = v.theta();
  const double hw = phys::hbar * omega;
  auto outer = [&](double t) {
    const double eps = theta * t * t;
    const double p = std::sqrt(2.0 * m.m_perp() * eps);
    const double pp = std::sqrt(2.0 * m.m_perp() * (eps + hw));
    const double q_hi = (pp + p) / phys::hbar;
    const double q_lo = 2.0 * m.m_perp() * omega / (pp + p);
    return 2.0 * theta * t * std::exp(-eps / theta) * q_window_integral(q_lo, q_hi, m, A.perp, A.par);
  };
  quad::QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  return quad::integrate(outer, 0.0, 6.5, spec, {1.0, 2.0, 3.0}).value;
}

/// Absorbed power from the unreduced double integral.
inline double p_plus_direct(const Valley &v, const Material &m, double omega,
                            const Polarization &pol, double A0) {
  const double e2 = phys::e0 * phys::e0;
  const double th = v.theta();
  const double pref = e2 * e2 * e2 * m.n_a() * v.n() * std::sqrt(m.m_par()) /
                      (std::sqrt(2.0 * std::numbers::pi) * th * std::sqrt(th) * m.eps0() *
                       m.eps0() * phys::c * phys::c * phys::hbar * omega * m.m_perp() * m.m_perp());
  return pref * double_integral_direct(v, m, omega, pol, A0);
}

/// Stimulated-emission power from electrons with energy e >= hbar omega, each
/// dropping to e - hbar omega. Limits and Boltzmann weight are evaluated at the
/// initial energy e = hbar omega + theta w^2.
inline double p_minus_direct(const Valley &v, const Material &m, double omega,
                             const Polarization &pol, double A0) {
  const auto A = detail::field_components(v, pol, A0);
  const double theta = v.theta();
  const double hw = phys::hbar * omega;
  auto outer = [&](double w) {
    const double eps = hw + theta * w * w;
    const double p = std::sqrt(2.0 * m.m_perp() * eps);
    const double pp = std::sqrt(2.0 * m.m_perp() * (eps - hw));
    const double q_hi = (p + pp) / phys::hbar;
    const double q_lo = 2.0 * m.m_perp() * omega / (p + pp);
    return 2.0 * theta * w * std::exp(-eps / theta) *
           q_window_integral(q_lo, q_hi, m, A.perp, A.par);
  };
  quad::QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  const double D = quad::integrate(outer, 0.0, 6.5, spec, {1.0, 2.0, 3.0}).value;
  const double e2 = phys::e0 * phys::e0;
  const double pref = e2 * e2 * e2 * m.n_a() * v.n() * std::sqrt(m.m_par()) /
                      (std::sqrt(2.0 * std::numbers::pi) * theta * std::sqrt(theta) * m.eps0() *
                       m.eps0() * phys::c * phys::c * phys::hbar * omega * m.m_perp() * m.m_perp());
  return -pref * D;
}

} // namespace mvfca::oracles
