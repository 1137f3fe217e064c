#pragma once

#include <cmath>
#include <numbers>

#include "constants.hpp"
#include "errors.hpp"
#include "material.hpp"
#include "regime.hpp"
#include "relaxation.hpp"
#include "special_functions.hpp"
#include "types.hpp"

/// Free-carrier absorption with anisotropic acoustic-phonon scattering.
namespace mvfca::acoustic {

/// tau(eps) = tau0 (theta/eps)^{1/2}
inline double tau_acoustic(double epsilon, double theta, double tau0) {
  if (!(epsilon > 0 && theta > 0 && tau0 > 0))
    throw ConfigError("tau_acoustic: epsilon, theta and tau0 must be positive");
  return tau0 * std::sqrt(theta / epsilon);
}

/// Energy-dependent relaxation times of one valley at electron temperature theta.
class AcousticTensor {
public:
  AcousticTensor(const Material &m, double theta)
      : tau_perp0_(m.tau_perp0()), tau_par0_(m.tau_par0()), theta_(theta) {
    if (!m.has_acoustic_tau())
      throw ConfigError("acoustic scattering needs material.tau_perp0 and material.tau_par0 > 0");
  }

  double tau_perp(double epsilon) const { return tau_acoustic(epsilon, theta_, tau_perp0_); }
  double tau_par(double epsilon) const { return tau_acoustic(epsilon, theta_, tau_par0_); }

  /// Values at epsilon = theta, which enter the closed-form braces.
  RelaxationTensor at_theta() const { return {tau_perp0_, tau_par0_}; }

private:
  double tau_perp0_;
  double tau_par0_;
  double theta_;
};

inline double braces(const Valley &v, const Material &m, const Polarization &pol) {
  return relaxation_braces(cos2_phi(v, pol), m, AcousticTensor(m, v.theta()).at_theta());
}

namespace detail {

inline double absorption_general(const ValleySet &valleys, const Material &m, double omega,
                                 const Polarization &pol) {
  const double pref = 16.0 * std::sqrt(std::numbers::pi) / (3.0 * std::sqrt(m.eps0())) *
                      phys::e0 * phys::e0 / (phys::c * phys::hbar);
  double sum = 0;
  for (const auto &v : valleys) {
    if (!v.populated())
      continue;
    const double s = photon_to_thermal(omega, v.theta());
    const double a = 0.5 * s;
    // (1 - e^{-2a}) e^{a} a^3 d/da(K1/a), with e^{a} folded into the scaled kernel
    sum += v.n() * v.theta() / (omega * omega * omega) * -std::expm1(-s) * braces(v, m, pol) *
           acoustic_kernel_scaled(a);
  }
  return -pref * sum;
}

inline double absorption_classical(const ValleySet &valleys, const Material &m, double omega,
                                   const Polarization &pol) {
  const double pref = 32.0 * std::sqrt(std::numbers::pi) / 3.0 * phys::e0 * phys::e0 /
                      std::sqrt(m.eps0()) / (phys::c * omega * omega);
  double sum = 0;
  for (const auto &v : valleys)
    if (v.populated())
      sum += v.n() * braces(v, m, pol);
  return pref * sum;
}

inline double absorption_quantum(const ValleySet &valleys, const Material &m, double omega,
                                 const Polarization &pol) {
  const double pref = 4.0 * std::numbers::pi / 3.0 * phys::e0 * phys::e0 / std::sqrt(m.eps0()) /
                      (phys::c * omega * omega);
  double sum = 0;
  for (const auto &v : valleys)
    if (v.populated())
      sum += v.n() * std::sqrt(photon_to_thermal(omega, v.theta())) * braces(v, m, pol);
  return pref * sum;
}

} // namespace detail

/// Absorption coefficient K, cm^-1.
inline double absorption_acoustic(const ValleySet &valleys, const Material &m, double omega,
                                  const Polarization &pol, Regime regime) {
  check_regime(Mechanism::acoustic, regime, valleys, m, omega);
  switch (regime) {
  case Regime::general:
    return detail::absorption_general(valleys, m, omega, pol);
  case Regime::classical:
    return detail::absorption_classical(valleys, m, omega, pol);
  case Regime::quantum:
    return detail::absorption_quantum(valleys, m, omega, pol);
  }
  return 0.0;
}

inline MobilityPair mobility_acoustic(const Material &m, double theta) {
  const auto tau = AcousticTensor(m, theta).at_theta();
  const double k = 4.0 / (3.0 * std::sqrt(std::numbers::pi)) * phys::e0;
  return {k * tau.tau_perp / m.m_perp(), k * tau.tau_par / m.m_par()};
}

} // namespace mvfca::acoustic
