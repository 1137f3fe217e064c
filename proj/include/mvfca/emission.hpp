#pragma once

#include <cmath>
#include <numbers>

#include "acoustic.hpp"
#include "constants.hpp"
#include "impurity.hpp"
#include "material.hpp"
#include "quadrature.hpp"
#include "regime.hpp"
#include "special_functions.hpp"
#include "types.hpp"

/// Spontaneous emission of hot electrons into a solid angle, obtained from the
/// stimulated-emission power by normalizing the field to one photon and
/// multiplying by the photon mode density.
///
/// dW/dOmega is per unit volume, per steradian, per unit angular-frequency
/// interval, for the single polarization q0 (erg s^-1 sr^-1 cm^-3 (rad/s)^-1).
namespace mvfca::emission {

struct EmissionResult {
  double dW_dOmega;
  double omega;
  Regime regime;
  Mechanism mechanism;
};

/// Vector-potential amplitude of a single photon in volume V: 2c (2 pi hbar / (V omega))^{1/2}.
inline double photon_amplitude(double omega, double volume) {
  if (!(omega > 0 && volume > 0))
    throw ConfigError("photon_amplitude: omega and volume must be positive");
  return 2.0 * phys::c * std::sqrt(2.0 * std::numbers::pi * phys::hbar / (volume * omega));
}

/// Photon states per unit angular frequency per steradian: V omega^2 / (2 pi c)^3.
inline double mode_density(double omega, double volume) {
  if (!(omega > 0 && volume > 0))
    throw ConfigError("mode_density: omega and volume must be positive");
  const double tpc = 2.0 * std::numbers::pi * phys::c;
  return volume * omega * omega / (tpc * tpc * tpc);
}

/// One valley's spontaneous emission from the stimulated-emission power
/// |p_minus| with a one-photon amplitude, times the mode density. Independent
/// of the normalization volume.
inline double emission_from_power(const Valley &v, const Material &m, double omega,
                                  const Polarization &pol, const quad::QuadratureSpec &spec = {}) {
  constexpr double volume = 1.0;
  const double A = photon_amplitude(omega, volume);
  return std::abs(impurity::p_minus(v, m, omega, pol, A, spec)) * mode_density(omega, volume);
}

namespace detail {

/// e0^6 n_a m_par^{1/2} / ((2 pi)^{3/2} eps0^2 c^3 (m_par - m_perp)^2)
inline double impurity_prefactor(const Material &m) {
  const double e2 = phys::e0 * phys::e0;
  const double dm = m.m_par() - m.m_perp();
  return e2 * e2 * e2 * m.n_a() * std::sqrt(m.m_par()) /
         (std::pow(2.0 * std::numbers::pi, 1.5) * m.eps0() * m.eps0() * phys::c * phys::c *
          phys::c * dm * dm);
}

inline double impurity_general(const ValleySet &valleys, const Material &m, double omega,
                               const Polarization &pol, const quad::QuadratureSpec &spec) {
  impurity::detail::MomentCache cache(m, omega, spec);
  double sum = 0;
  for (const auto &v : valleys) {
    if (!v.populated())
      continue;
    const double s = photon_to_thermal(omega, v.theta());
    const double J = cache.at(v.theta()).combine(cos2_phi(v, pol), m.mass_ratio());
    sum += v.n() / std::sqrt(v.theta()) * std::exp(-s) * J;
  }
  return impurity_prefactor(m) * sum;
}

inline double impurity_classical(const ValleySet &valleys, const Material &m,
                                 const Polarization &pol) {
  double sum = 0;
  for (const auto &v : valleys)
    if (v.populated())
      sum += v.n() / std::sqrt(v.theta()) * psi_infinity(cos2_phi(v, pol), m) *
             coulomb_log(x_min(m, v.theta()));
  return impurity_prefactor(m) * sum;
}

inline double impurity_quantum(const ValleySet &valleys, const Material &m, double omega,
                               const Polarization &pol) {
  const double e2 = phys::e0 * phys::e0;
  const double dm = m.m_par() - m.m_perp();
  const double pref = e2 * e2 * e2 * m.n_a() * std::sqrt(m.m_par()) /
                      (std::numbers::sqrt2 * std::numbers::pi * m.eps0() * m.eps0() * phys::c *
                       phys::c * phys::c * dm * dm * std::sqrt(phys::hbar * omega));
  double sum = 0;
  for (const auto &v : valleys)
    if (v.populated())
      sum += v.n() * psi_infinity(cos2_phi(v, pol), m) *
             std::exp(-photon_to_thermal(omega, v.theta()));
  return pref * sum;
}

inline double acoustic_general(const ValleySet &valleys, const Material &m, double omega,
                               const Polarization &pol) {
  const double pref = 2.0 * phys::e0 * phys::e0 /
                      (3.0 * std::pow(std::numbers::pi, 2.5) * phys::c * phys::c * phys::c);
  double sum = 0;
  for (const auto &v : valleys) {
    if (!v.populated())
      continue;
    const double s = photon_to_thermal(omega, v.theta());
    sum += v.n() * v.theta() * std::exp(-s) * acoustic::braces(v, m, pol) *
           -acoustic_kernel_scaled(0.5 * s);
  }
  return pref * sum;
}

inline double acoustic_classical(const ValleySet &valleys, const Material &m,
                                 const Polarization &pol) {
  const double pref = 4.0 * phys::e0 * phys::e0 /
                      (3.0 * std::pow(std::numbers::pi, 2.5) * phys::c * phys::c * phys::c);
  double sum = 0;
  for (const auto &v : valleys)
    if (v.populated())
      sum += v.n() * v.theta() * acoustic::braces(v, m, pol);
  return pref * sum;
}

inline double acoustic_quantum(const ValleySet &valleys, const Material &m, double omega,
                               const Polarization &pol) {
  const double pref = phys::e0 * phys::e0 /
                      (6.0 * std::numbers::pi * std::numbers::pi * phys::c * phys::c * phys::c);
  const double hw = phys::hbar * omega;
  double sum = 0;
  for (const auto &v : valleys)
    if (v.populated())
      sum += v.n() / std::sqrt(v.theta()) * hw * std::sqrt(hw) *
             std::exp(-photon_to_thermal(omega, v.theta())) * acoustic::braces(v, m, pol);
  return pref * sum;
}

} // namespace detail

inline EmissionResult emission_impurity(const ValleySet &valleys, const Material &m, double omega,
                                        const Polarization &pol, Regime regime,
                                        const quad::QuadratureSpec &spec = {}) {
  check_regime(Mechanism::impurity, regime, valleys, m, omega);
  double w = 0;
  switch (regime) {
  case Regime::general:
    w = detail::impurity_general(valleys, m, omega, pol, spec);
    break;
  case Regime::classical:
    w = detail::impurity_classical(valleys, m, pol);
    break;
  case Regime::quantum:
    w = detail::impurity_quantum(valleys, m, omega, pol);
    break;
  }
  return {w, omega, regime, Mechanism::impurity};
}

/// Classical impurity emission written through the relaxation tensor:
/// 3 e0^2 / (16 pi^{3/2} c^3) sum n_i theta_i {...}.
inline double emission_impurity_classical_tau_form(const ValleySet &valleys, const Material &m,
                                                   double omega, const Polarization &pol) {
  check_regime(Mechanism::impurity, Regime::classical, valleys, m, omega);
  const double pref = 3.0 * phys::e0 * phys::e0 /
                      (16.0 * std::pow(std::numbers::pi, 1.5) * phys::c * phys::c * phys::c);
  double sum = 0;
  for (const auto &v : valleys)
    if (v.populated())
      sum += v.n() * v.theta() *
             relaxation_braces(cos2_phi(v, pol), m, impurity::relaxation_impurity(m, v.theta()));
  return pref * sum;
}

inline EmissionResult emission_acoustic(const ValleySet &valleys, const Material &m, double omega,
                                        const Polarization &pol, Regime regime) {
  check_regime(Mechanism::acoustic, regime, valleys, m, omega);
  double w = 0;
  switch (regime) {
  case Regime::general:
    w = detail::acoustic_general(valleys, m, omega, pol);
    break;
  case Regime::classical:
    w = detail::acoustic_classical(valleys, m, pol);
    break;
  case Regime::quantum:
    w = detail::acoustic_quantum(valleys, m, omega, pol);
    break;
  }
  return {w, omega, regime, Mechanism::acoustic};
}

} // namespace mvfca::emission
