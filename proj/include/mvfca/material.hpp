#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "constants.hpp"
#include "errors.hpp"
#include "vec3.hpp"

namespace mvfca {

/// Screening length sqrt(eps0 theta / (4 pi e0^2 n)), cm.
inline double debye_radius(double eps0, double theta, double n_total) {
  if (!(eps0 > 0 && theta > 0 && n_total > 0))
    throw ConfigError("debye_radius: eps0, theta and n_total must be positive");
  return std::sqrt(eps0 * theta /
                   (4 * std::numbers::pi * phys::e0 * phys::e0 * n_total));
}

/// Screening length of a mixture of Maxwellian gases:
/// r_D^-2 = sum_i 4 pi e0^2 n_i / (eps0 theta_i).
inline double debye_radius(double eps0, const std::vector<std::pair<double, double>> &n_theta) {
  double inv2 = 0;
  for (const auto &[n, theta] : n_theta) {
    if (!(theta > 0) || !(n >= 0))
      throw ConfigError("debye_radius: concentrations must be non-negative, temperatures positive");
    inv2 += 4 * std::numbers::pi * phys::e0 * phys::e0 * n / (eps0 * theta);
  }
  if (!(inv2 > 0))
    throw ConfigError("debye_radius: total electron concentration must be positive");
  return 1.0 / std::sqrt(inv2);
}

/// Energy flux (sqrt(eps0)/8pi)(omega^2/c) A0^2 of a plane wave with vector
/// potential amplitude A0, erg cm^-2 s^-1.
inline double incident_flux(double omega, double A0, double eps0) {
  return std::sqrt(eps0) / (8 * std::numbers::pi) * omega * omega / phys::c *
         A0 * A0;
}

/// Band and scattering parameters shared by all valleys. CGS throughout.
struct MaterialParams {
  double m_perp = 0;    ///< g
  double m_par = 0;     ///< g
  double eps0 = 1;      ///< static dielectric constant
  double n_a = 0;       ///< ionized impurity concentration, cm^-3
  double r_D = 0;       ///< Debye radius, cm
  double tau_perp0 = 0; ///< acoustic relaxation prefactor, s
  double tau_par0 = 0;  ///< acoustic relaxation prefactor, s
};

class Material {
public:
  explicit Material(const MaterialParams &p) : p_(p) {
    if (!(p.m_perp > 0))
      throw ConfigError("material.m_perp must be positive");
    if (!(p.m_par > p.m_perp))
      throw ConfigError("material.m_par must exceed material.m_perp (prolate valleys); got m_par = " +
                        std::to_string(p.m_par / phys::m_e) + " m_e, m_perp = " +
                        std::to_string(p.m_perp / phys::m_e) + " m_e");
    if (!(p.eps0 >= 1))
      throw ConfigError("material.eps0 must be >= 1");
    if (!(p.n_a >= 0) || !std::isfinite(p.n_a))
      throw ConfigError("material.n_a must be non-negative");
    if (!(p.r_D > 0))
      throw ConfigError("material.r_D must be positive");
    // Zero marks "not given"; only the acoustic model needs them.
    if (!(p.tau_perp0 >= 0) || !(p.tau_par0 >= 0))
      throw ConfigError("material.tau_perp0 and material.tau_par0 must be non-negative");
  }

  double m_perp() const noexcept { return p_.m_perp; }
  double m_par() const noexcept { return p_.m_par; }
  double eps0() const noexcept { return p_.eps0; }
  double n_a() const noexcept { return p_.n_a; }
  double r_D() const noexcept { return p_.r_D; }
  double tau_perp0() const noexcept { return p_.tau_perp0; }
  double tau_par0() const noexcept { return p_.tau_par0; }
  bool has_acoustic_tau() const noexcept { return p_.tau_perp0 > 0 && p_.tau_par0 > 0; }
  const MaterialParams &params() const noexcept { return p_; }

  /// m_perp / m_par
  double mass_ratio() const noexcept { return p_.m_perp / p_.m_par; }
  /// b0^2 = m_perp / (m_par - m_perp)
  double b0_squared() const noexcept { return p_.m_perp / (p_.m_par - p_.m_perp); }

  Material with_n_a(double n_a) const {
    auto p = p_;
    p.n_a = n_a;
    return Material(p);
  }
  Material with_debye_radius(double r_D) const {
    auto p = p_;
    p.r_D = r_D;
    return Material(p);
  }
  Material with_acoustic_tau(double tau_perp0, double tau_par0) const {
    auto p = p_;
    p.tau_perp0 = tau_perp0;
    p.tau_par0 = tau_par0;
    return Material(p);
  }

private:
  MaterialParams p_;
};

class Valley {
public:
  /// @param n electron concentration, cm^-3
  /// @param theta electron temperature, erg
  Valley(UnitVector axis, double n, double theta)
      : axis_(axis), n_(n), theta_(theta) {
    if (!(n >= 0) || !std::isfinite(n))
      throw ConfigError("valley.n must be non-negative");
    if (!(theta > 0) || !std::isfinite(theta))
      throw ConfigError("valley.theta must be positive");
  }

  const UnitVector &axis() const noexcept { return axis_; }
  double n() const noexcept { return n_; }
  double theta() const noexcept { return theta_; }
  bool populated() const noexcept { return n_ > 0; }

  Valley with_population(double n, double theta) const { return Valley(axis_, n, theta); }

private:
  UnitVector axis_;
  double n_;
  double theta_;
};

class ValleySet {
public:
  explicit ValleySet(std::vector<Valley> valleys) : valleys_(std::move(valleys)) {
    if (valleys_.empty())
      throw ConfigError("valley set must not be empty");
  }
  ValleySet(std::initializer_list<Valley> v) : ValleySet(std::vector<Valley>(v)) {}

  auto begin() const noexcept { return valleys_.begin(); }
  auto end() const noexcept { return valleys_.end(); }
  std::size_t size() const noexcept { return valleys_.size(); }
  const Valley &operator[](std::size_t i) const { return valleys_[i]; }
  const std::vector<Valley> &valleys() const noexcept { return valleys_; }

  double total_concentration() const {
    double n = 0;
    for (const auto &v : valleys_)
      n += v.n();
    return n;
  }

  /// Same axes with every valley set to (n, theta).
  ValleySet with_uniform_population(double n, double theta) const {
    std::vector<Valley> out;
    out.reserve(valleys_.size());
    for (const auto &v : valleys_)
      out.push_back(v.with_population(n, theta));
    return ValleySet(std::move(out));
  }

private:
  std::vector<Valley> valleys_;
};

class Polarization {
public:
  explicit Polarization(UnitVector q0) : q0_(q0) {}
  explicit Polarization(Vec3 v) : q0_(UnitVector::normalize(v)) {}
  const UnitVector &q0() const noexcept { return q0_; }

private:
  UnitVector q0_;
};

/// cos phi_i = i0 . q0
inline double cos_phi(const Valley &valley, const Polarization &pol) {
  return dot(valley.axis(), pol.q0());
}

inline double cos2_phi(const Valley &valley, const Polarization &pol) {
  const double c = cos_phi(valley, pol);
  return std::min(1.0, c * c);
}

enum class Preset { Ge4, Si6 };

inline Preset parse_preset(std::string_view name) {
  if (name == "Ge4")
    return Preset::Ge4;
  if (name == "Si6")
    return Preset::Si6;
  throw ConfigError("unknown valley preset '" + std::string(name) + "' (expected Ge4 or Si6)");
}

inline constexpr double placeholder_theta = 300.0 * phys::k_B;

/// Valley axes of the standard cubic multivalley conduction bands:
/// Ge4 = the four inequivalent <111> directions, Si6 = +-x, +-y, +-z.
/// Populations are placeholders for the caller to fill.
inline ValleySet load_preset(Preset preset, double n = 0.0,
                             double theta = placeholder_theta) {
  std::vector<Vec3> axes;
  switch (preset) {
  case Preset::Ge4:
    axes = {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
    break;
  case Preset::Si6:
    axes = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    break;
  }
  std::vector<Valley> valleys;
  for (const auto &a : axes)
    valleys.emplace_back(UnitVector::normalize(a), n, theta);
  return ValleySet(std::move(valleys));
}

inline ValleySet load_preset(std::string_view name, double n = 0.0,
                             double theta = placeholder_theta) {
  return load_preset(parse_preset(name), n, theta);
}

} // namespace mvfca
