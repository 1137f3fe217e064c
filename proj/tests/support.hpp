#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <mvfca/mvfca.hpp>

namespace testing_support {

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

/// Ge-like prolate valleys, CGS.
inline mvfca::MaterialParams ge_params() {
  using mvfca::phys;
  return {0.082 * phys::m_e, 1.64 * phys::m_e, 16.0, 1e16, 2.2e-5, 1e-12, 2e-12};
}

inline mvfca::Material ge_material() { return mvfca::Material(ge_params()); }

inline constexpr double room_theta = 300.0 * mvfca::phys::k_B;

inline double omega_at(double s, double theta = room_theta) {
  return s * theta / mvfca::phys::hbar;
}

/// Seeded draws; every property test names its seed.
class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  mvfca::Vec3 direction() {
    std::normal_distribution<double> g;
    mvfca::Vec3 v{g(rng_), g(rng_), g(rng_)};
    while (mvfca::norm(v) < 1e-6)
      v = {g(rng_), g(rng_), g(rng_)};
    return (1.0 / mvfca::norm(v)) * v;
  }
  /// m_perp in [0.05, 0.3] m_e, anisotropy m_par/m_perp in [1.5, 30].
  mvfca::Material material() {
    using mvfca::phys;
    mvfca::MaterialParams p;
    p.m_perp = uniform(0.05, 0.3) * phys::m_e;
    p.m_par = p.m_perp * uniform(1.5, 30.0);
    p.eps0 = uniform(8.0, 20.0);
    p.n_a = log_uniform(1e14, 1e18);
    p.r_D = log_uniform(1e-7, 1e-4);
    p.tau_perp0 = log_uniform(1e-14, 1e-11);
    p.tau_par0 = log_uniform(1e-14, 1e-11);
    return mvfca::Material(p);
  }

private:
  std::mt19937_64 rng_;
};

} // namespace testing_support
