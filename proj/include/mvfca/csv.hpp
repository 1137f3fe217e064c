#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "constants.hpp"
#include "errors.hpp"
#include "sweep.hpp"

namespace mvfca {

class IoError : public Error {
public:
  using Error::Error;
};

/// 12 significant digits.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_csv(const SpectrumTable &t, std::ostream &out) {
  const bool k = wants_absorption(t.observable);
  const bool w = wants_emission(t.observable);
  out << "omega_rad_per_s,hbar_omega_eV";
  if (k)
    out << ",K_per_cm";
  if (w)
    out << ",dW_dOmega_cgs";
  out << ",regime,mechanism\n";
  const std::string tail =
      "," + std::string(to_string(t.regime)) + "," + std::string(to_string(t.mechanism));
  for (const auto &r : t.rows) {
    out << format_number(r.omega) << ',' << format_number(units::erg_to_ev(phys::hbar * r.omega));
    if (k)
      out << ',' << format_number(r.K.value_or(0.0));
    if (w)
      out << ',' << format_number(r.dW_dOmega.value_or(0.0));
    out << tail << '\n';
  }
}

inline void write_csv(const SpectrumTable &t, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot open output file '" + path + "'");
  write_csv(t, out);
  out.flush();
  if (!out)
    throw IoError("failed writing output file '" + path + "'");
}

} // namespace mvfca
