#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "acoustic.hpp"
#include "config.hpp"
#include "emission.hpp"
#include "impurity.hpp"
#include "regime.hpp"

namespace mvfca {

struct SpectrumRow {
  double omega = 0;
  std::optional<double> K;
  std::optional<double> dW_dOmega;
};

struct SpectrumTable {
  Mechanism mechanism = Mechanism::impurity;
  Regime regime = Regime::general;
  Observable observable = Observable::absorption;
  std::vector<SpectrumRow> rows;
};

inline bool wants_absorption(Observable o) { return o != Observable::emission; }
inline bool wants_emission(Observable o) { return o != Observable::absorption; }

/// Grid values of a sweep in ascending order.
inline std::vector<double> sweep_grid(const SweepSpec &s) {
  std::vector<double> g(s.points);
  const double last = double(s.points - 1);
  for (std::size_t k = 0; k < s.points; ++k) {
    const double f = double(k) / last;
    g[k] = s.scale == SweepScale::log ? s.min * std::pow(s.max / s.min, f)
                                      : s.min + (s.max - s.min) * f;
  }
  g.front() = s.min;
  g.back() = s.max;
  return g;
}

/// Absorption and/or emission at one frequency and polarization.
inline SpectrumRow evaluate_point(const RunConfig &cfg, double omega, const Polarization &pol) {
  SpectrumRow row;
  row.omega = omega;
  const bool imp = cfg.mechanism == Mechanism::impurity;
  if (wants_absorption(cfg.observable))
    row.K = imp ? impurity::absorption_impurity(cfg.valleys, cfg.material, omega, pol, cfg.regime,
                                                cfg.quadrature)
                : acoustic::absorption_acoustic(cfg.valleys, cfg.material, omega, pol, cfg.regime);
  if (wants_emission(cfg.observable))
    row.dW_dOmega = imp ? emission::emission_impurity(cfg.valleys, cfg.material, omega, pol,
                                                      cfg.regime, cfg.quadrature)
                              .dW_dOmega
                        : emission::emission_acoustic(cfg.valleys, cfg.material, omega, pol,
                                                      cfg.regime)
                              .dW_dOmega;
  return row;
}

/// Evaluates the configured sweep. Regime validity is checked for every grid
/// point before any quadrature starts; the first offending point is reported.
/// Points are spread over cfg.threads workers and stored by grid index, so the
/// table does not depend on scheduling.
inline SpectrumTable run_sweep(const RunConfig &cfg) {
  const auto grid = sweep_grid(cfg.sweep);
  const bool phi_sweep = cfg.sweep.kind == SweepKind::phi;

  if (phi_sweep)
    check_regime(cfg.mechanism, cfg.regime, cfg.valleys, cfg.material, cfg.sweep.omega);
  else
    for (double w : grid)
      check_regime(cfg.mechanism, cfg.regime, cfg.valleys, cfg.material, w);

  SpectrumTable table{cfg.mechanism, cfg.regime, cfg.observable,
                      std::vector<SpectrumRow>(grid.size())};
  auto task = [&](std::size_t k) {
    if (phi_sweep) {
      const double phi = grid[k];
      const Polarization pol(std::cos(phi) * cfg.sweep.plane_u +
                             std::sin(phi) * cfg.sweep.plane_v);
      table.rows[k] = evaluate_point(cfg, cfg.sweep.omega, pol);
    } else {
      table.rows[k] = evaluate_point(cfg, grid[k], cfg.polarization);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(cfg.threads, 1, grid.size());
  if (workers == 1) {
    for (std::size_t k = 0; k < grid.size(); ++k)
      task(k);
    return table;
  }

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = grid.size();
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < grid.size();) {
      try {
        task(k);
      } catch (...) {
        std::lock_guard lock(mu);
        if (k < failed_at) {
          failed_at = k;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
  return table;
}

} // namespace mvfca
