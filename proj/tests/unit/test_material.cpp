#include <cmath>
#include <gtest/gtest.h>

#include "support.hpp"

using namespace mvfca;
using testing_support::rel_err;

TEST(Material, RejectsOblateOrEqualMasses) {
  auto p = testing_support::ge_params();
  p.m_par = p.m_perp;
  EXPECT_THROW(Material{p}, ConfigError);
  p.m_par = 0.5 * p.m_perp;
  EXPECT_THROW(Material{p}, ConfigError);
}

TEST(Material, RejectsNonPhysicalParameters) {
  auto p = testing_support::ge_params();
  p.eps0 = 0.5;
  EXPECT_THROW(Material{p}, ConfigError);
  p = testing_support::ge_params();
  p.r_D = 0;
  EXPECT_THROW(Material{p}, ConfigError);
  p = testing_support::ge_params();
  p.n_a = -1;
  EXPECT_THROW(Material{p}, ConfigError);
}

TEST(Material, AcousticTauOptional) {
  auto p = testing_support::ge_params();
  p.tau_perp0 = p.tau_par0 = 0;
  Material m(p);
  EXPECT_FALSE(m.has_acoustic_tau());
}

TEST(Material, DebyeRadius) {
  EXPECT_LT(rel_err(debye_radius(16.0, 300 * phys::k_B, 1e16), 4.78108242977742713e-6), 1e-14);
  // mixture of equal temperatures equals the single-gas value
  const double th = 300 * phys::k_B;
  EXPECT_LT(rel_err(debye_radius(16.0, {{4e15, th}, {6e15, th}}), debye_radius(16.0, th, 1e16)),
            1e-15);
  EXPECT_THROW(debye_radius(16.0, th, 0.0), ConfigError);
}

TEST(Material, XMin) {
  auto p = testing_support::ge_params();
  p.r_D = 4.78108242977742713e-6;
  EXPECT_LT(rel_err(x_min(Material(p), 300 * phys::k_B), 1.96563323460202e-3), 1e-13);
}

TEST(Valley, Guards) {
  const auto axis = UnitVector::normalize({1, 1, 1});
  EXPECT_THROW(Valley(axis, -1.0, 1.0), ConfigError);
  EXPECT_THROW(Valley(axis, 1.0, 0.0), ConfigError);
  EXPECT_FALSE(Valley(axis, 0.0, 1.0).populated());
  EXPECT_THROW(UnitVector(Vec3{1, 1, 0}), ConfigError);
  EXPECT_THROW(ValleySet(std::vector<Valley>{}), ConfigError);
}

TEST(Presets, AxesAndCubicSums) {
  const auto ge = load_preset("Ge4");
  const auto si = load_preset("Si6");
  ASSERT_EQ(ge.size(), 4u);
  ASSERT_EQ(si.size(), 6u);
  EXPECT_THROW(load_preset("GaAs"), ConfigError);

  testing_support::Draw draw(0xC0B1C);
  for (int i = 0; i < 50; ++i) {
    const Polarization pol(draw.direction());
    double sg = 0, ss = 0;
    for (const auto &v : ge)
      sg += cos2_phi(v, pol);
    for (const auto &v : si)
      ss += cos2_phi(v, pol);
    EXPECT_NEAR(sg, 4.0 / 3.0, 1e-14);
    EXPECT_NEAR(ss, 2.0, 1e-14);
  }
}

TEST(Polarization, AlongAxis) {
  const auto ge = load_preset(Preset::Ge4);
  const Polarization pol(Vec3{1, 1, 1});
  EXPECT_LE(cos2_phi(ge[0], pol), 1.0);
  EXPECT_NEAR(cos2_phi(ge[0], pol), 1.0, 1e-15);
  EXPECT_NEAR(cos2_phi(ge[1], pol), 1.0 / 9.0, 1e-15);
}

TEST(Types, ParseRoundTrip) {
  for (auto m : {Mechanism::impurity, Mechanism::acoustic})
    EXPECT_EQ(parse_mechanism(to_string(m)), m);
  for (auto r : {Regime::general, Regime::classical, Regime::quantum})
    EXPECT_EQ(parse_regime(to_string(r)), r);
  for (auto o : {Observable::absorption, Observable::emission, Observable::both})
    EXPECT_EQ(parse_observable(to_string(o)), o);
  EXPECT_THROW(parse_regime("semiclassical"), ConfigError);
}

TEST(Regime, Guards) {
  const auto m = testing_support::ge_material();
  const double th = testing_support::room_theta;
  const auto vs = load_preset(Preset::Ge4, 1e16, th);
  using testing_support::omega_at;
  EXPECT_NO_THROW(check_regime(Mechanism::impurity, Regime::classical, vs, m, omega_at(0.05)));
  EXPECT_THROW(check_regime(Mechanism::impurity, Regime::classical, vs, m, omega_at(0.5)),
               RegimeError);
  EXPECT_THROW(check_regime(Mechanism::acoustic, Regime::quantum, vs, m, omega_at(5.0)),
               RegimeError);
  EXPECT_NO_THROW(check_regime(Mechanism::acoustic, Regime::quantum, vs, m, omega_at(20.0)));
  EXPECT_NO_THROW(check_regime(Mechanism::impurity, Regime::general, vs, m, omega_at(1e3)));
  EXPECT_THROW(check_regime(Mechanism::impurity, Regime::general, vs, m, -1.0), ConfigError);

  // strong screening defeats the quantum limit
  const auto tight = m.with_debye_radius(1e-7);
  try {
    check_regime(Mechanism::impurity, Regime::quantum, vs, tight, omega_at(20.0));
    FAIL();
  } catch (const RegimeError &e) {
    EXPECT_DOUBLE_EQ(e.omega(), omega_at(20.0));
  }
  // large x_min defeats the logarithmic approximation
  EXPECT_THROW(check_regime(Mechanism::impurity, Regime::classical, vs, tight, omega_at(0.01)),
               RegimeError);
  EXPECT_NO_THROW(check_regime(Mechanism::acoustic, Regime::classical, vs, tight, omega_at(0.01)));
}

TEST(Regime, EmptyValleysAreNotChecked) {
  const auto m = testing_support::ge_material();
  std::vector<Valley> v = load_preset(Preset::Si6, 1e16).valleys();
  v[0] = v[0].with_population(0.0, 1e-20); // would violate any classical bound if populated
  EXPECT_NO_THROW(check_regime(Mechanism::acoustic, Regime::classical, ValleySet(v), m,
                               testing_support::omega_at(0.01)));
}
