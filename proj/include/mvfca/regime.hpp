#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "constants.hpp"
#include "errors.hpp"
#include "material.hpp"
#include "types.hpp"

namespace mvfca {

/// Numeric reading of "hbar omega << theta" and "hbar omega >> theta".
struct RegimeThresholds {
  static constexpr double classical_max_s = 0.1;
  static constexpr double classical_max_x_min = 0.1;
  static constexpr double quantum_min_s = 10.0;
  static constexpr double quantum_min_qr2 = 1e3;
};

/// hbar omega / theta
inline double photon_to_thermal(double omega, double theta) { return phys::hbar * omega / theta; }

/// hbar^2 / (8 m_perp theta r_D^2): the dimensionless energy at which
/// q_max r_D = 1 in the classical limit.
inline double x_min(const Material &m, double theta) {
  return phys::hbar * phys::hbar / (8.0 * m.m_perp() * theta * m.r_D() * m.r_D());
}

/// q_omega = sqrt(2 m_perp omega / hbar)
inline double quantum_wavenumber(const Material &m, double omega) {
  return std::sqrt(2.0 * m.m_perp() * omega / phys::hbar);
}

namespace detail {
[[noreturn]] inline void regime_violation(Regime r, Mechanism mech, double omega,
                                          std::size_t valley, const std::string &why) {
  std::ostringstream os;
  os.precision(6);
  os << to_string(r) << " " << to_string(mech) << " limit invalid at omega = " << omega
     << " rad/s (valley " << valley << "): " << why;
  throw RegimeError(os.str(), omega);
}
} // namespace detail

/// Throws RegimeError if a closed-form limit is requested outside its range.
/// Only populated valleys are checked; `general` never throws.
inline void check_regime(Mechanism mech, Regime regime, const ValleySet &valleys,
                         const Material &m, double omega) {
  if (!(omega > 0) || !std::isfinite(omega))
    throw ConfigError("omega must be positive and finite");
  if (regime == Regime::general)
    return;
  for (std::size_t i = 0; i < valleys.size(); ++i) {
    const auto &v = valleys[i];
    if (!v.populated())
      continue;
    const double s = photon_to_thermal(omega, v.theta());
    std::ostringstream why;
    why.precision(6);
    if (regime == Regime::classical) {
      if (!(s <= RegimeThresholds::classical_max_s)) {
        why << "hbar*omega/theta = " << s << " exceeds " << RegimeThresholds::classical_max_s;
        detail::regime_violation(regime, mech, omega, i, why.str());
      }
      if (mech == Mechanism::impurity) {
        const double xm = x_min(m, v.theta());
        if (!(xm < RegimeThresholds::classical_max_x_min)) {
          why << "x_min = " << xm << " is not < " << RegimeThresholds::classical_max_x_min;
          detail::regime_violation(regime, mech, omega, i, why.str());
        }
      }
    } else {
      if (!(s >= RegimeThresholds::quantum_min_s)) {
        why << "hbar*omega/theta = " << s << " is below " << RegimeThresholds::quantum_min_s;
        detail::regime_violation(regime, mech, omega, i, why.str());
      }
      if (mech == Mechanism::impurity) {
        const double qr = quantum_wavenumber(m, omega) * m.r_D();
        if (!(qr * qr >= RegimeThresholds::quantum_min_qr2)) {
          why << "(q_omega r_D)^2 = " << qr * qr << " is below "
              << RegimeThresholds::quantum_min_qr2;
          detail::regime_violation(regime, mech, omega, i, why.str());
        }
      }
    }
  }
}

} // namespace mvfca
