#pragma once

#include "material.hpp"

namespace mvfca {

/// Effective momentum-relaxation times along and across the valley axis, s.
struct RelaxationTensor {
  double tau_perp;
  double tau_par;
};

/// Mobility tensor components, cm^2 / (statvolt s).
struct MobilityPair {
  double mu_perp;
  double mu_par;
};

/// {sin^2(phi)/(m_perp tau_perp) + cos^2(phi)/(m_par tau_par)}
inline double relaxation_braces(double cos2phi, const Material &m, const RelaxationTensor &tau) {
  return (1.0 - cos2phi) / (m.m_perp() * tau.tau_perp) + cos2phi / (m.m_par() * tau.tau_par);
}

} // namespace mvfca
