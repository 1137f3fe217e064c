#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "constants.hpp"
#include "errors.hpp"
#include "material.hpp"
#include "quadrature.hpp"
#include "types.hpp"
#include "vec3.hpp"

namespace mvfca {

enum class SweepKind { omega, phi };
enum class SweepScale { log, linear };

struct SweepSpec {
  SweepKind kind = SweepKind::omega;
  double min = 0; ///< rad/s (omega sweep) or rad (phi sweep)
  double max = 0;
  std::size_t points = 2;
  SweepScale scale = SweepScale::log;
  double omega = 0;       ///< fixed frequency of a phi sweep, rad/s
  Vec3 plane_u{1, 0, 0};  ///< q0(phi) = cos(phi) u + sin(phi) v
  Vec3 plane_v{0, 1, 0};
};

/// A validated run, all quantities in internal CGS units.
struct RunConfig {
  Material material;
  ValleySet valleys;
  Polarization polarization;
  SweepSpec sweep;
  Mechanism mechanism = Mechanism::impurity;
  Regime regime = Regime::general;
  Observable observable = Observable::absorption;
  std::string output;
  unsigned threads = 1;
  quad::QuadratureSpec quadrature;
};

namespace config_detail {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string &path, const std::string &what) {
  throw ConfigError(path + ": " + what);
}

inline const json &require(const json &obj, const std::string &key, const std::string &path) {
  if (!obj.is_object())
    fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    fail(path + "." + key, "missing required field");
  return *it;
}

inline double number(const json &j, const std::string &path) {
  if (!j.is_number())
    fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v))
    fail(path, "must be finite");
  return v;
}

inline double positive(const json &j, const std::string &path) {
  const double v = number(j, path);
  if (!(v > 0))
    fail(path, "must be positive");
  return v;
}

inline std::string string(const json &j, const std::string &path) {
  if (!j.is_string())
    fail(path, "expected a string");
  return j.get<std::string>();
}

template <class F> auto parse_enum(const json &j, const std::string &path, F &&parse) {
  try {
    return parse(string(j, path));
  } catch (const ConfigError &e) {
    fail(path, e.what());
  }
}

inline Vec3 vector3(const json &j, const std::string &path) {
  if (!j.is_array() || j.size() != 3)
    fail(path, "expected an array of three numbers");
  Vec3 v{number(j[0], path + "[0]"), number(j[1], path + "[1]"), number(j[2], path + "[2]")};
  if (!(norm(v) > 0))
    fail(path, "must be a non-zero vector");
  return v;
}

/// {"value": v, "unit": "K" | "eV"} -> erg
inline double temperature(const json &j, const std::string &path) {
  const double v = positive(require(j, "value", path), path + ".value");
  const std::string unit = string(require(j, "unit", path), path + ".unit");
  if (unit == "K")
    return units::kelvin_to_erg(v);
  if (unit == "eV")
    return units::ev_to_erg(v);
  fail(path + ".unit", "expected \"K\" or \"eV\", got \"" + unit + "\"");
}

/// Frequency with optional unit: rad/s (default) or eV (photon energy).
inline double frequency(double v, const std::string &unit, const std::string &path) {
  if (unit == "rad/s")
    return v;
  if (unit == "eV")
    return units::ev_to_erg(v) / phys::hbar;
  fail(path, "expected \"rad/s\" or \"eV\", got \"" + unit + "\"");
}

inline double concentration(const json &j, const std::string &path) {
  const double v = number(j, path);
  if (!(v >= 0))
    fail(path, "must be non-negative");
  return v;
}

inline std::vector<Valley> parse_valleys(const json &j) {
  const std::string path = "valleys";
  std::vector<Valley> out;
  if (j.is_array()) {
    if (j.empty())
      fail(path, "must list at least one valley");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      const Vec3 axis = vector3(require(j[i], "axis", p), p + ".axis");
      out.emplace_back(UnitVector::normalize(axis), concentration(require(j[i], "n", p), p + ".n"),
                       temperature(require(j[i], "theta", p), p + ".theta"));
    }
    return out;
  }
  if (!j.is_object())
    fail(path, "expected a preset object or an array of valleys");
  const auto preset = parse_enum(require(j, "preset", path), path + ".preset",
                                 [](const std::string &s) { return parse_preset(s); });
  const double n = concentration(require(j, "n", path), path + ".n");
  const double theta = temperature(require(j, "theta", path), path + ".theta");
  const auto base = load_preset(preset, n, theta);
  out = base.valleys();
  if (auto it = j.find("overrides"); it != j.end()) {
    if (!it->is_array())
      fail(path + ".overrides", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const auto &o = (*it)[k];
      const std::string p = path + ".overrides[" + std::to_string(k) + "]";
      const auto &idx = require(o, "index", p);
      if (!idx.is_number_integer() || idx.get<long long>() < 0 ||
          idx.get<std::size_t>() >= out.size())
        fail(p + ".index", "must be an integer in [0, " + std::to_string(out.size() - 1) + "]");
      auto &v = out[idx.get<std::size_t>()];
      const double nv = o.contains("n") ? concentration(o["n"], p + ".n") : v.n();
      const double tv = o.contains("theta") ? temperature(o["theta"], p + ".theta") : v.theta();
      v = v.with_population(nv, tv);
    }
  }
  return out;
}

inline Material parse_material(const json &j, const std::vector<Valley> &valleys) {
  const std::string path = "material";
  if (!j.is_object())
    fail(path, "expected an object");
  MaterialParams p;
  p.m_perp = units::electron_masses_to_g(positive(require(j, "m_perp", path), path + ".m_perp"));
  p.m_par = units::electron_masses_to_g(positive(require(j, "m_par", path), path + ".m_par"));
  if (!(p.m_par > p.m_perp))
    fail(path + ".m_par", "material.m_par (" + std::to_string(j["m_par"].get<double>()) +
                              ") must exceed material.m_perp (" +
                              std::to_string(j["m_perp"].get<double>()) + ")");
  p.eps0 = number(require(j, "eps0", path), path + ".eps0");
  if (!(p.eps0 >= 1))
    fail(path + ".eps0", "must be >= 1");
  p.n_a = concentration(require(j, "n_a", path), path + ".n_a");
  if (j.contains("tau_perp0"))
    p.tau_perp0 = positive(j["tau_perp0"], path + ".tau_perp0");
  if (j.contains("tau_par0"))
    p.tau_par0 = positive(j["tau_par0"], path + ".tau_par0");
  if (j.contains("r_D")) {
    p.r_D = positive(j["r_D"], path + ".r_D");
  } else {
    std::vector<std::pair<double, double>> nt;
    for (const auto &v : valleys)
      nt.emplace_back(v.n(), v.theta());
    try {
      p.r_D = debye_radius(p.eps0, nt);
    } catch (const ConfigError &) {
      fail(path + ".r_D", "not given and cannot be computed (no electrons in any valley)");
    }
  }
  try {
    return Material(p);
  } catch (const ConfigError &e) {
    fail(path, e.what());
  }
}

inline SweepSpec parse_sweep(const json &j) {
  const std::string path = "sweep";
  SweepSpec s;
  const std::string kind = string(require(j, "kind", path), path + ".kind");
  if (kind == "omega")
    s.kind = SweepKind::omega;
  else if (kind == "phi")
    s.kind = SweepKind::phi;
  else
    fail(path + ".kind", "expected \"omega\" or \"phi\", got \"" + kind + "\"");

  const std::string unit = j.contains("unit") ? string(j["unit"], path + ".unit") : "rad/s";
  const auto &pts = require(j, "points", path);
  if (!pts.is_number_integer() || pts.get<long long>() < 2)
    fail(path + ".points", "must be an integer >= 2");
  s.points = pts.get<std::size_t>();
  if (j.contains("scale")) {
    const std::string sc = string(j["scale"], path + ".scale");
    if (sc == "log")
      s.scale = SweepScale::log;
    else if (sc == "linear")
      s.scale = SweepScale::linear;
    else
      fail(path + ".scale", "expected \"log\" or \"linear\", got \"" + sc + "\"");
  } else {
    s.scale = s.kind == SweepKind::omega ? SweepScale::log : SweepScale::linear;
  }

  if (s.kind == SweepKind::omega) {
    s.min = frequency(positive(require(j, "min", path), path + ".min"), unit, path + ".unit");
    s.max = frequency(positive(require(j, "max", path), path + ".max"), unit, path + ".unit");
    if (!(s.max > s.min))
      fail(path + ".max", "must exceed sweep.min");
  } else {
    s.omega = frequency(positive(require(j, "omega", path), path + ".omega"), unit, path + ".unit");
    s.min = number(require(j, "min", path), path + ".min");
    s.max = number(require(j, "max", path), path + ".max");
    if (!(s.max > s.min))
      fail(path + ".max", "must exceed sweep.min");
    if (s.scale == SweepScale::log && !(s.min > 0))
      fail(path + ".scale", "a log phi sweep needs sweep.min > 0");
    if (j.contains("plane")) {
      const auto &pl = j["plane"];
      s.plane_u = vector3(require(pl, "u", path + ".plane"), path + ".plane.u");
      s.plane_v = vector3(require(pl, "v", path + ".plane"), path + ".plane.v");
    }
    // Gram-Schmidt so that q0(phi) is a unit vector for every phi.
    const Vec3 u = (1.0 / norm(s.plane_u)) * s.plane_u;
    Vec3 v = s.plane_v - dot(s.plane_v, u) * u;
    if (!(norm(v) > 1e-12 * norm(s.plane_v)))
      fail(path + ".plane", "u and v must not be parallel");
    s.plane_u = u;
    s.plane_v = (1.0 / norm(v)) * v;
  }
  return s;
}

inline quad::QuadratureSpec parse_quadrature(const json &j) {
  const std::string path = "quadrature";
  quad::QuadratureSpec q;
  if (!j.is_object())
    fail(path, "expected an object");
  if (j.contains("rel_tol"))
    q.rel_tol = positive(j["rel_tol"], path + ".rel_tol");
  if (j.contains("max_subdivisions")) {
    const auto &m = j["max_subdivisions"];
    if (!m.is_number_integer() || m.get<long long>() < 1)
      fail(path + ".max_subdivisions", "must be a positive integer");
    q.max_subdivisions = m.get<std::size_t>();
  }
  try {
    q.validate();
  } catch (const ConfigError &e) {
    fail(path, e.what());
  }
  return q;
}

} // namespace config_detail

/// Cross-field checks; rerun after overriding mechanism or regime.
inline void validate_run(const RunConfig &cfg) {
  if (cfg.mechanism == Mechanism::acoustic && !cfg.material.has_acoustic_tau())
    config_detail::fail("material.tau_perp0",
                        "acoustic mechanism needs material.tau_perp0 and material.tau_par0");
}

/// Parses and validates a JSON run description. Errors name the offending field.
inline RunConfig parse_config(const std::string &text) {
  using namespace config_detail;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ConfigError("config: top level must be a JSON object");

  auto valleys = parse_valleys(require(j, "valleys", "config"));
  auto material = parse_material(require(j, "material", "config"), valleys);
  Polarization pol(UnitVector::normalize(vector3(require(j, "polarization", "config"), "polarization")));
  SweepSpec sweep = parse_sweep(require(j, "sweep", "config"));

  RunConfig cfg{std::move(material), ValleySet(std::move(valleys)), pol, sweep, {}, {}, {}, {}, 1, {}};
  if (j.contains("mechanism"))
    cfg.mechanism = parse_enum(j["mechanism"], "mechanism",
                               [](const std::string &s) { return parse_mechanism(s); });
  if (j.contains("regime"))
    cfg.regime =
        parse_enum(j["regime"], "regime", [](const std::string &s) { return parse_regime(s); });
  if (j.contains("observable"))
    cfg.observable = parse_enum(j["observable"], "observable",
                                [](const std::string &s) { return parse_observable(s); });
  if (j.contains("output"))
    cfg.output = string(j["output"], "output");
  if (j.contains("threads")) {
    const auto &t = j["threads"];
    if (!t.is_number_integer() || t.get<long long>() < 1 || t.get<long long>() > 1024)
      fail("threads", "must be an integer in [1, 1024]");
    cfg.threads = t.get<unsigned>();
  }
  if (j.contains("quadrature"))
    cfg.quadrature = parse_quadrature(j["quadrature"]);
  validate_run(cfg);
  return cfg;
}

inline RunConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

} // namespace mvfca
