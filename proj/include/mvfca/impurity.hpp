#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "constants.hpp"
#include "material.hpp"
#include "quadrature.hpp"
#include "regime.hpp"
#include "relaxation.hpp"
#include "special_functions.hpp"
#include "types.hpp"

/// Free-carrier absorption with screened ionized-impurity scattering.
namespace mvfca::impurity {

/// Momentum-transfer window of a one-photon absorption event, cm^-1.
struct QLimits {
  double q_min;
  double q_max;
};

/// q_max,min = sqrt(2 m_perp theta)/hbar [sqrt(x + s) +- sqrt(x)], with q_min
/// written as s/(sqrt(x) + sqrt(x + s)) to stay accurate for x >> s.
inline QLimits q_limits(double x, double s, double m_perp, double theta) {
  const double scale = std::sqrt(2.0 * m_perp * theta) / phys::hbar;
  const double rx = std::sqrt(x);
  const double rxs = std::sqrt(x + s);
  const double sum = rx + rxs;
  return {sum > 0 ? scale * s / sum : 0.0, scale * sum};
}

/// Closed-form angular integral y(q*) over directions of the deformed
/// momentum transfer, for field components A_perp, A_par in the valley frame.
inline double angular_integral(double q_star, const Material &m, double A_perp, double A_par) {
  const auto sm = shape_moments(q_star, m);
  const double ratio = m.m_perp() / (m.m_par() - m.m_perp());
  return std::numbers::pi / (q_star * q_star) *
         (A_perp * A_perp * sm.b1 + 2.0 * A_par * A_par * m.mass_ratio() * sm.b2) * ratio * ratio;
}

/// The two polarization-independent pieces of the reduced energy integral,
///   int_0^inf dx e^{-x} [B_k(q_max) + B_k(q_min)] / sqrt(x(x + s)),  k = 1, 2,
/// evaluated on one shared mesh.
struct SpectralMoments {
  double b1 = 0;
  double b2 = 0;
  double error = 0; ///< largest component error estimate

  /// int dx e^{-x} [Psi(q_max) + Psi(q_min)] / sqrt(x(x + s))
  double combine(double cos2phi, double mass_ratio) const {
    return psi_from_moments({b1, b2}, cos2phi, mass_ratio);
  }
};

inline SpectralMoments spectral_moments(const Material &m, double theta, double omega,
                                        const quad::QuadratureSpec &spec = {}) {
  const double s = photon_to_thermal(omega, theta);
  auto g = [&m, theta, s](double x) {
    const auto q = q_limits(x, s, m.m_perp(), theta);
    const auto hi = shape_moments(q.q_max, m);
    const auto lo = shape_moments(q.q_min, m);
    return std::array<double, 2>{hi.b1 + lo.b1, hi.b2 + lo.b2};
  };
  const auto r = quad::integrate_spectral(g, s, spec);
  return {r.value[0], r.value[1], std::max(r.error[0], r.error[1])};
}

/// Reduced spectral integral J_i for one valley and polarization.
inline double spectral_integral(const Valley &v, const Material &m, double omega,
                                const Polarization &pol, const quad::QuadratureSpec &spec = {}) {
  return spectral_moments(m, v.theta(), omega, spec).combine(cos2_phi(v, pol), m.mass_ratio());
}

/// theta int_0^inf de e^{-e/theta} {[q y]_{q_max} dq_max/de - [q y]_{q_min} dq_min/de}
/// for field amplitude A0, i.e. the energy/momentum-transfer double integral after
/// integration by parts: (pi theta / 2) (m_perp/(m_par - m_perp))^2 A0^2 J.
inline double reduced_energy_q_integral(const Valley &v, const Material &m, double omega,
                                        const Polarization &pol, double A0,
                                        const quad::QuadratureSpec &spec = {}) {
  const double ratio = m.m_perp() / (m.m_par() - m.m_perp());
  return 0.5 * std::numbers::pi * v.theta() * ratio * ratio * A0 * A0 *
         spectral_integral(v, m, omega, pol, spec);
}

namespace detail {
/// e0^6 n_a / (4 eps0^2 c^2 hbar omega) (2 pi m_par/theta)^{1/2} / (m_par - m_perp)^2
inline double power_prefactor(const Material &m, double theta, double omega) {
  const double e2 = phys::e0 * phys::e0;
  const double dm = m.m_par() - m.m_perp();
  return e2 * e2 * e2 * m.n_a() /
         (4.0 * m.eps0() * m.eps0() * phys::c * phys::c * phys::hbar * omega) *
         std::sqrt(2.0 * std::numbers::pi * m.m_par() / theta) / (dm * dm);
}
} // namespace detail

/// Power absorbed per unit volume by the electrons of one valley from a wave of
/// vector-potential amplitude A0, erg s^-1 cm^-3.
inline double p_plus(const Valley &v, const Material &m, double omega, const Polarization &pol,
                     double A0, const quad::QuadratureSpec &spec = {}) {
  if (!(omega > 0))
    throw ConfigError("p_plus: omega must be positive");
  if (!v.populated())
    return 0.0;
  return detail::power_prefactor(m, v.theta(), omega) * v.n() * A0 * A0 *
         spectral_integral(v, m, omega, pol, spec);
}

/// Stimulated emission counterpart, -exp(-hbar omega/theta) p_plus.
inline double p_minus(const Valley &v, const Material &m, double omega, const Polarization &pol,
                      double A0, const quad::QuadratureSpec &spec = {}) {
  return -std::exp(-photon_to_thermal(omega, v.theta())) * p_plus(v, m, omega, pol, A0, spec);
}

/// Components of the impurity relaxation tensor in the logarithmic
/// (Conwell-Weisskopf-like) approximation.
inline RelaxationTensor relaxation_impurity(const Material &m, double theta) {
  const double b0 = std::sqrt(m.b0_squared());
  const double at = std::atan2(1.0, b0);
  const double L = coulomb_log(x_min(m, theta));
  const double e2 = phys::e0 * phys::e0;
  const double common = 8.0 / 3.0 * e2 * e2 * std::sqrt(2.0 * m.m_par()) /
                        (m.eps0() * m.eps0() * theta * std::sqrt(theta)) * m.n_a() * L;
  const double inv_perp = common / m.m_perp() * 0.5 * b0 * (b0 + (1.0 - b0 * b0) * at);
  const double inv_par = common / m.m_par() * b0 * (-b0 + (1.0 + b0 * b0) * at);
  return {1.0 / inv_perp, 1.0 / inv_par};
}

inline MobilityPair mobility_impurity(const Material &m, double theta) {
  const auto tau = relaxation_impurity(m, theta);
  const double k = 8.0 / std::sqrt(std::numbers::pi) * phys::e0;
  return {k * tau.tau_perp / m.m_perp(), k * tau.tau_par / m.m_par()};
}

namespace detail {

/// Memoizes the spectral moments per distinct valley temperature.
class MomentCache {
public:
  MomentCache(const Material &m, double omega, const quad::QuadratureSpec &spec)
      : m_(m), omega_(omega), spec_(spec) {}

  const SpectralMoments &at(double theta) {
    auto it = cache_.find(theta);
    if (it == cache_.end())
      it = cache_.emplace(theta, spectral_moments(m_, theta, omega_, spec_)).first;
    return it->second;
  }

private:
  const Material &m_;
  double omega_;
  quad::QuadratureSpec spec_;
  std::map<double, SpectralMoments> cache_;
};

inline double absorption_general(const ValleySet &valleys, const Material &m, double omega,
                                 const Polarization &pol, const quad::QuadratureSpec &spec) {
  const double e2 = phys::e0 * phys::e0;
  const double dm = m.m_par() - m.m_perp();
  const double pref = std::pow(2.0 * std::numbers::pi, 1.5) * e2 * e2 * e2 * m.n_a() *
                      std::sqrt(m.m_par()) /
                      (std::pow(m.eps0(), 2.5) * phys::c * dm * dm * phys::hbar *
                       omega * omega * omega);
  MomentCache cache(m, omega, spec);
  double sum = 0;
  for (const auto &v : valleys) {
    if (!v.populated())
      continue;
    const double s = photon_to_thermal(omega, v.theta());
    const double J = cache.at(v.theta()).combine(cos2_phi(v, pol), m.mass_ratio());
    sum += v.n() / std::sqrt(v.theta()) * -std::expm1(-s) * J;
  }
  return pref * sum;
}

inline double absorption_classical(const ValleySet &valleys, const Material &m, double omega,
                                   const Polarization &pol) {
  const double pref = 1.5 * std::pow(std::numbers::pi, 1.5) * phys::e0 * phys::e0 /
                      std::sqrt(m.eps0()) / (phys::c * omega * omega);
  double sum = 0;
  for (const auto &v : valleys) {
    if (!v.populated())
      continue;
    sum += v.n() * relaxation_braces(cos2_phi(v, pol), m, relaxation_impurity(m, v.theta()));
  }
  return pref * sum;
}

inline double absorption_quantum(const ValleySet &valleys, const Material &m, double omega,
                                 const Polarization &pol) {
  // 2^{5/2} pi^2 / eps0^{5/2}: the general form with the large-s estimate
  // 2 sqrt(pi) Psi(inf) (theta/hbar omega)^{1/2}.
  const double e2 = phys::e0 * phys::e0;
  const double dm = m.m_par() - m.m_perp();
  const double hw = phys::hbar * omega;
  const double pref = std::pow(2.0, 2.5) * std::numbers::pi * std::numbers::pi /
                      std::pow(m.eps0(), 2.5) * e2 * e2 * e2 * m.n_a() * std::sqrt(m.m_par()) /
                      (phys::c * dm * dm * omega * omega * hw * std::sqrt(hw));
  double sum = 0;
  for (const auto &v : valleys)
    if (v.populated())
      sum += v.n() * psi_infinity(cos2_phi(v, pol), m);
  return pref * sum;
}

} // namespace detail

/// Absorption coefficient K, cm^-1.
inline double absorption_impurity(const ValleySet &valleys, const Material &m, double omega,
                                  const Polarization &pol, Regime regime,
                                  const quad::QuadratureSpec &spec = {}) {
  check_regime(Mechanism::impurity, regime, valleys, m, omega);
  switch (regime) {
  case Regime::general:
    return detail::absorption_general(valleys, m, omega, pol, spec);
  case Regime::classical:
    return detail::absorption_classical(valleys, m, omega, pol);
  case Regime::quantum:
    return detail::absorption_quantum(valleys, m, omega, pol);
  }
  return 0.0;
}

/// Classical K written with Psi(inf) and the Coulomb logarithm instead of the
/// relaxation tensor; algebraically identical to the tensor form.
inline double absorption_impurity_classical_log_form(const ValleySet &valleys, const Material &m,
                                                     double omega, const Polarization &pol) {
  check_regime(Mechanism::impurity, Regime::classical, valleys, m, omega);
  const double e2 = phys::e0 * phys::e0;
  const double dm = m.m_par() - m.m_perp();
  const double pref = std::pow(2.0 * std::numbers::pi, 1.5) * e2 * e2 * e2 * m.n_a() *
                      std::sqrt(m.m_par()) /
                      (std::pow(m.eps0(), 2.5) * phys::c * dm * dm * omega * omega);
  double sum = 0;
  for (const auto &v : valleys) {
    if (!v.populated())
      continue;
    const double th = v.theta();
    sum += v.n() / (th * std::sqrt(th)) * psi_infinity(cos2_phi(v, pol), m) *
           coulomb_log(x_min(m, th));
  }
  return pref * sum;
}

} // namespace mvfca::impurity
