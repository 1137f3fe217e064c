#include <cmath>
#include <gtest/gtest.h>

#include "support.hpp"

using namespace mvfca;
using testing_support::omega_at;
using testing_support::rel_err;
using testing_support::room_theta;

TEST(AcousticTau, EnergyDependence) {
  EXPECT_DOUBLE_EQ(acoustic::tau_acoustic(2.0, 2.0, 1e-12), 1e-12);
  EXPECT_LT(rel_err(acoustic::tau_acoustic(8.0, 2.0, 1e-12), 0.5e-12), 1e-15);
  EXPECT_THROW(acoustic::tau_acoustic(0.0, 1.0, 1.0), ConfigError);
  const auto m = testing_support::ge_material();
  const acoustic::AcousticTensor t(m, room_theta);
  EXPECT_DOUBLE_EQ(t.tau_perp(room_theta), m.tau_perp0());
  EXPECT_DOUBLE_EQ(t.tau_par(4 * room_theta), 0.5 * m.tau_par0());
}

TEST(AcousticTau, MissingPrefactorsRejected) {
  auto p = testing_support::ge_params();
  p.tau_par0 = 0;
  const Material m(p);
  const auto vs = load_preset(Preset::Si6, 1e16, room_theta);
  EXPECT_THROW(acoustic::absorption_acoustic(vs, m, omega_at(1.0), Polarization(Vec3{0, 0, 1}),
                                             Regime::general),
               ConfigError);
}

TEST(AcousticMobility, CoefficientAndLinearity) {
  const auto m = testing_support::ge_material();
  const auto mu = acoustic::mobility_acoustic(m, room_theta);
  EXPECT_LT(rel_err(mu.mu_perp, 4 / (3 * std::sqrt(M_PI)) * phys::e0 * m.tau_perp0() / m.m_perp()),
            1e-15);
  const auto mu2 = acoustic::mobility_acoustic(
      m.with_acoustic_tau(2 * m.tau_perp0(), 2 * m.tau_par0()), room_theta);
  EXPECT_LT(rel_err(mu2.mu_par, 2 * mu.mu_par), 1e-15);
  // against the impurity mobility formula at equal tau: (4/(3 sqrt pi)) / (8/sqrt pi) = 1/6
  EXPECT_LT(rel_err(mu.mu_perp / (8 / std::sqrt(M_PI) * phys::e0 * m.tau_perp0() / m.m_perp()),
                    1.0 / 6.0),
            1e-15);
}

TEST(AbsorptionAcoustic, PositiveEverywhere) {
  testing_support::Draw draw(0xAC05);
  for (int i = 0; i < 40; ++i) {
    const auto m = draw.material();
    const double th = draw.log_uniform(30, 3000) * phys::k_B;
    const auto vs = load_preset(Preset::Ge4, draw.log_uniform(1e14, 1e18), th);
    const Polarization pol(draw.direction());
    const double w = draw.log_uniform(1e-4, 500) * th / phys::hbar;
    EXPECT_GT(acoustic::absorption_acoustic(vs, m, w, pol, Regime::general), 0.0);
  }
}

TEST(AbsorptionAcoustic, GeneralReducesToClassicalCoefficient) {
  // a -> 0: kernel -> -2 and (1 - e^{-2a}) -> 2a give exactly 32 sqrt(pi)/3
  const auto m = testing_support::ge_material();
  const auto vs = load_preset(Preset::Ge4, 1e16, room_theta);
  const Polarization pol(Vec3{0.2, 0.3, 0.7});
  const double w = omega_at(2e-7);
  const double g = acoustic::absorption_acoustic(vs, m, w, pol, Regime::general);
  const double c = acoustic::absorption_acoustic(vs, m, w, pol, Regime::classical);
  EXPECT_LT(rel_err(g, c), 1e-6);
}

TEST(AbsorptionAcoustic, GeneralApproachesQuantumSlowly) {
  // leading correction 15/(8a)
  const auto m = testing_support::ge_material();
  const auto vs = load_preset(Preset::Ge4, 1e16, room_theta);
  const Polarization pol(Vec3{0, 0, 1});
  for (double a : {50.0, 200.0, 1000.0}) {
    const double w = omega_at(2 * a);
    const double ratio = acoustic::absorption_acoustic(vs, m, w, pol, Regime::general) /
                         acoustic::absorption_acoustic(vs, m, w, pol, Regime::quantum);
    EXPECT_LT(std::abs(ratio - 1 - 15 / (8 * a)), 1.0 / (a * a)) << a;
  }
}

TEST(AbsorptionAcoustic, ClassicalScaling) {
  const auto m = testing_support::ge_material();
  const auto vs = load_preset(Preset::Si6, 1e16, room_theta);
  const Polarization pol(Vec3{0, 1, 1});
  const double w = omega_at(0.01);
  EXPECT_LT(rel_err(acoustic::absorption_acoustic(vs, m, 2 * w, pol, Regime::classical),
                    acoustic::absorption_acoustic(vs, m, w, pol, Regime::classical) / 4),
            1e-15);
}

TEST(AbsorptionAcoustic, RegimeErrors) {
  const auto m = testing_support::ge_material();
  const auto vs = load_preset(Preset::Si6, 1e16, room_theta);
  const Polarization pol(Vec3{0, 0, 1});
  EXPECT_THROW(acoustic::absorption_acoustic(vs, m, omega_at(0.2), pol, Regime::classical),
               RegimeError);
  EXPECT_THROW(acoustic::absorption_acoustic(vs, m, omega_at(9.0), pol, Regime::quantum),
               RegimeError);
}

TEST(AbsorptionAcoustic, SiSymmetry) {
  const auto m = testing_support::ge_material();
  const auto vs = load_preset(Preset::Si6, 1e16, room_theta);
  testing_support::Draw draw(0x516);
  const double ref =
      acoustic::absorption_acoustic(vs, m, omega_at(1.0), Polarization(Vec3{1, 0, 0}), Regime::general);
  for (int i = 0; i < 8; ++i)
    EXPECT_LT(rel_err(acoustic::absorption_acoustic(vs, m, omega_at(1.0), Polarization(draw.direction()),
                                                    Regime::general),
                      ref),
              1e-12);
}
