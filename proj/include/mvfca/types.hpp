#pragma once

#include <string>
#include <string_view>

#include "errors.hpp"

namespace mvfca {

enum class Mechanism { impurity, acoustic };
enum class Regime { general, classical, quantum };
enum class Observable { absorption, emission, both };

constexpr std::string_view to_string(Mechanism m) {
  return m == Mechanism::impurity ? "impurity" : "acoustic";
}

constexpr std::string_view to_string(Regime r) {
  switch (r) {
  case Regime::general:
    return "general";
  case Regime::classical:
    return "classical";
  case Regime::quantum:
    return "quantum";
  }
  return "?";
}

constexpr std::string_view to_string(Observable o) {
  switch (o) {
  case Observable::absorption:
    return "absorption";
  case Observable::emission:
    return "emission";
  case Observable::both:
    return "both";
  }
  return "?";
}

inline Mechanism parse_mechanism(std::string_view s) {
  if (s == "impurity")
    return Mechanism::impurity;
  if (s == "acoustic")
    return Mechanism::acoustic;
  throw ConfigError("unknown mechanism '" + std::string(s) + "' (expected impurity|acoustic)");
}

inline Regime parse_regime(std::string_view s) {
  if (s == "general")
    return Regime::general;
  if (s == "classical")
    return Regime::classical;
  if (s == "quantum")
    return Regime::quantum;
  throw ConfigError("unknown regime '" + std::string(s) +
                    "' (expected general|classical|quantum)");
}

inline Observable parse_observable(std::string_view s) {
  if (s == "absorption")
    return Observable::absorption;
  if (s == "emission")
    return Observable::emission;
  if (s == "both")
    return Observable::both;
  throw ConfigError("unknown observable '" + std::string(s) +
                    "' (expected absorption|emission|both)");
}

} // namespace mvfca
