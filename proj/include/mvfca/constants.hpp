#pragma once

#include <numbers>

/// Physical constants and unit conversions. Everything inside the library is
/// Gaussian CGS; user-facing units are converted once at ingestion.
namespace mvfca {

struct PhysicalConstants {
  static constexpr double e0 = 4.803204712570263e-10;    ///< electron charge, esu
  static constexpr double hbar = 1.054571817e-27;        ///< erg s
  static constexpr double c = 2.99792458e10;             ///< cm/s
  static constexpr double m_e = 9.1093837015e-28;        ///< g
  static constexpr double k_B = 1.380649e-16;            ///< erg/K
  static constexpr double eV = 1.602176634e-12;          ///< erg
  static constexpr double euler_gamma = std::numbers::egamma;
};

using phys = PhysicalConstants;

namespace units {

constexpr double kelvin_to_erg(double kelvin) { return kelvin * phys::k_B; }
constexpr double ev_to_erg(double ev) { return ev * phys::eV; }
constexpr double erg_to_ev(double erg) { return erg / phys::eV; }
constexpr double electron_masses_to_g(double m) { return m * phys::m_e; }

} // namespace units
} // namespace mvfca
