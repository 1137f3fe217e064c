#include <cmath>
#include <gtest/gtest.h>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace mvfca;
using testing_support::rel_err;

namespace {

std::string minimal(const std::string &theta = R"({"value": 300, "unit": "K"})",
                    const std::string &extra = "") {
  return R"({
    "material": {"m_perp": 0.082, "m_par": 1.64, "eps0": 16, "n_a": 1e16},
    "valleys": {"preset": "Ge4", "n": 1e16, "theta": )" +
         theta + R"(},
    "polarization": [0, 0, 1],
    "sweep": {"kind": "omega", "min": 1e11, "max": 1e12, "points": 3})" +
         extra + "}";
}

std::string error_of(const std::string &text) {
  try {
    parse_config(text);
  } catch (const ConfigError &e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST(Config, MinimalGe4FillsDebyeRadius) {
  const auto cfg = parse_config(minimal());
  EXPECT_EQ(cfg.valleys.size(), 4u);
  // four valleys of 1e16 each at 300 K
  EXPECT_LT(rel_err(cfg.material.r_D(), debye_radius(16.0, 300 * phys::k_B, 4e16)), 1e-14);
  EXPECT_LT(rel_err(cfg.material.m_perp(), 0.082 * phys::m_e), 1e-15);
  EXPECT_EQ(cfg.mechanism, Mechanism::impurity);
  EXPECT_EQ(cfg.regime, Regime::general);
  EXPECT_EQ(cfg.observable, Observable::absorption);
  EXPECT_EQ(cfg.threads, 1u);
  EXPECT_EQ(cfg.sweep.scale, SweepScale::log);
}

TEST(Config, KelvinAndElectronVoltAgree) {
  const double ev = 300 * phys::k_B / phys::eV;
  std::ostringstream t;
  t.precision(17);
  t << R"({"value": )" << ev << R"(, "unit": "eV"})";
  const auto a = parse_config(minimal());
  const auto b = parse_config(minimal(t.str()));
  EXPECT_LT(rel_err(a.valleys[2].theta(), b.valleys[2].theta()), 1e-15);
  EXPECT_LT(rel_err(a.material.r_D(), b.material.r_D()), 1e-15);
}

TEST(Config, MassOrderingNamesBothFields) {
  auto text = minimal();
  text.replace(text.find("1.64"), 4, "0.05");
  const auto msg = error_of(text);
  EXPECT_NE(msg.find("m_par"), std::string::npos) << msg;
  EXPECT_NE(msg.find("m_perp"), std::string::npos) << msg;
}

TEST(Config, ErrorsCarryFieldPaths) {
  EXPECT_NE(error_of(minimal(R"({"value": 300, "unit": "F"})")).find("valleys.theta.unit"),
            std::string::npos);
  EXPECT_NE(error_of(minimal(R"({"value": -3, "unit": "K"})")).find("valleys.theta.value"),
            std::string::npos);
  auto pts = minimal();
  pts.replace(pts.find("\"points\": 3"), 11, "\"points\": 1");
  EXPECT_NE(error_of(pts).find("sweep.points"), std::string::npos);
  auto order = minimal();
  order.replace(order.find("1e12"), 4, "1e10");
  EXPECT_NE(error_of(order).find("sweep.max"), std::string::npos);
  EXPECT_NE(error_of(minimal(R"({"value": 300, "unit": "K"})", R"(, "regime": "semi")"))
                .find("regime"),
            std::string::npos);
  EXPECT_NE(error_of(minimal(R"({"value": 300, "unit": "K"})", R"(, "mechanism": "acoustic")"))
                .find("tau_perp0"),
            std::string::npos);
  EXPECT_NE(error_of("{not json").find("JSON"), std::string::npos);
  EXPECT_NE(error_of(R"({"valleys": {"preset": "Ge4", "n": 1, "theta": {"value": 1, "unit": "K"}}})")
                .find("material"),
            std::string::npos);
}

TEST(Config, OverridesAndExplicitValleys) {
  const auto cfg = parse_config(minimal(
      R"({"value": 300, "unit": "K"}, "overrides": [{"index": 1, "n": 0}, {"index": 2, "theta": {"value": 0.1, "unit": "eV"}}])"));
  EXPECT_EQ(cfg.valleys[1].n(), 0.0);
  EXPECT_LT(rel_err(cfg.valleys[2].theta(), 0.1 * phys::eV), 1e-15);
  EXPECT_NE(error_of(minimal(R"({"value": 300, "unit": "K"}, "overrides": [{"index": 9}])"))
                .find("overrides[0].index"),
            std::string::npos);

  const std::string text = R"({
    "material": {"m_perp": 0.19, "m_par": 0.98, "eps0": 11.7, "n_a": 1e15, "r_D": 1e-5},
    "valleys": [{"axis": [0, 0, 2], "n": 1e16, "theta": {"value": 77, "unit": "K"}}],
    "polarization": [1, 0, 0],
    "sweep": {"kind": "phi", "omega": 0.02, "unit": "eV", "min": 0, "max": 1.5, "points": 4,
              "plane": {"u": [1, 0, 0], "v": [1, 1, 0]}}})";
  const auto c2 = parse_config(text);
  EXPECT_EQ(c2.valleys.size(), 1u);
  EXPECT_DOUBLE_EQ(c2.valleys[0].axis().z(), 1.0);
  EXPECT_DOUBLE_EQ(c2.material.r_D(), 1e-5);
  EXPECT_LT(rel_err(c2.sweep.omega, 0.02 * phys::eV / phys::hbar), 1e-15);
  EXPECT_NEAR(dot(c2.sweep.plane_u, c2.sweep.plane_v), 0.0, 1e-15);
  EXPECT_EQ(c2.sweep.scale, SweepScale::linear);
}

TEST(Sweep, GridAndClassicalScaling) {
  auto cfg = parse_config(minimal(R"({"value": 300, "unit": "K"})",
                                  R"(, "regime": "classical", "observable": "both")"));
  cfg.sweep.points = 2;
  const auto t = run_sweep(cfg);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_DOUBLE_EQ(t.rows[0].omega, 1e11);
  EXPECT_DOUBLE_EQ(t.rows[1].omega, 1e12);
  EXPECT_LT(rel_err(*t.rows[1].K, *t.rows[0].K / 100), 1e-14);
  EXPECT_EQ(*t.rows[0].dW_dOmega, *t.rows[1].dW_dOmega);
}

TEST(Sweep, FailsFastWithOffendingFrequency) {
  auto cfg = parse_config(minimal(R"({"value": 300, "unit": "K"})", R"(, "regime": "classical")"));
  cfg.sweep.max = 1e14; // s ~ 2.5 at the top
  try {
    run_sweep(cfg);
    FAIL();
  } catch (const RegimeError &e) {
    EXPECT_GT(e.omega(), 1e13);
  }
}

TEST(Sweep, PhiSweepOnEquilibriumGe4IsFlat) {
  const std::string text = R"({
    "material": {"m_perp": 0.082, "m_par": 1.64, "eps0": 16, "n_a": 1e16, "tau_perp0": 1e-12, "tau_par0": 3e-12},
    "valleys": {"preset": "Ge4", "n": 1e16, "theta": {"value": 300, "unit": "K"}},
    "polarization": [0, 0, 1],
    "sweep": {"kind": "phi", "omega": 3e13, "min": 0, "max": 3.0, "points": 7,
              "plane": {"u": [1, 0, 0], "v": [0, 1, 1]}},
    "observable": "both", "threads": 3})";
  for (const char *mech : {"impurity", "acoustic"}) {
    auto cfg = parse_config(text);
    cfg.mechanism = parse_mechanism(mech);
    const auto t = run_sweep(cfg);
    for (const auto &r : t.rows) {
      EXPECT_LT(rel_err(*r.K, *t.rows[0].K), 1e-12) << mech;
      EXPECT_LT(rel_err(*r.dW_dOmega, *t.rows[0].dW_dOmega), 1e-12) << mech;
    }
  }
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  auto cfg = parse_config(minimal());
  cfg.sweep.points = 9;
  const auto a = run_sweep(cfg);
  cfg.threads = 4;
  const auto b = run_sweep(cfg);
  for (std::size_t k = 0; k < a.rows.size(); ++k)
    EXPECT_EQ(*a.rows[k].K, *b.rows[k].K);
}

TEST(Csv, HeaderColumnsAndFormat) {
  SpectrumTable t{Mechanism::acoustic, Regime::quantum, Observable::emission, {}};
  std::ostringstream empty;
  write_csv(t, empty);
  EXPECT_EQ(empty.str(), "omega_rad_per_s,hbar_omega_eV,dW_dOmega_cgs,regime,mechanism\n");

  t.observable = Observable::both;
  t.rows.push_back({1.0 / 3.0 * 1e14, 0.125, 2.0e-7});
  std::ostringstream out;
  write_csv(t, out);
  const std::string s = out.str();
  EXPECT_EQ(s.substr(0, s.find('\n')),
            "omega_rad_per_s,hbar_omega_eV,K_per_cm,dW_dOmega_cgs,regime,mechanism");
  const std::string row = s.substr(s.find('\n') + 1);
  EXPECT_EQ(row.back(), '\n');
  EXPECT_EQ(row.substr(0, row.find(',')), "3.33333333333e+13");
  EXPECT_NE(row.find(",0.125,2e-07,quantum,acoustic\n"), std::string::npos) << row;
}

TEST(Csv, RoundTripToTwelveDigits) {
  testing_support::Draw draw(0xC5F);
  for (int i = 0; i < 100; ++i) {
    const double v = draw.log_uniform(1e-300, 1e300);
    const double back = std::stod(format_number(v));
    EXPECT_EQ(format_number(back), format_number(v));
    EXPECT_LT(rel_err(back, v), 5e-12);
  }
}
