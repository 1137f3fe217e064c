#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vec3.hpp"

namespace mvfca::quad {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-300;
  std::size_t max_subdivisions = 5000;

  void validate() const {
    if (!(rel_tol > 0 && rel_tol <= 1e-3))
      throw ConfigError("quadrature rel_tol must lie in (0, 1e-3]");
    if (!(abs_tol >= 0))
      throw ConfigError("quadrature abs_tol must be non-negative");
    if (max_subdivisions == 0)
      throw ConfigError("quadrature max_subdivisions must be positive");
  }
};

template <std::size_t N> struct VectorResult {
  std::array<double, N> value{};
  std::array<double, N> error{};
  std::size_t evaluations = 0;
};

struct QuadratureResult {
  double value = 0;
  double error = 0;
  std::size_t evaluations = 0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600701812053, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for xgk[1], xgk[3], ..., xgk[9].
inline constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class F> constexpr std::size_t width_of() {
  using R = std::invoke_result_t<F, double>;
  if constexpr (std::is_arithmetic_v<R>)
    return 1;
  else
    return std::tuple_size_v<R>;
}

template <std::size_t N, class F> std::array<double, N> eval(F &f, double x) {
  if constexpr (N == 1 && std::is_arithmetic_v<std::invoke_result_t<F, double>>)
    return {static_cast<double>(f(x))};
  else
    return f(x);
}

template <std::size_t N> struct Segment {
  double a, b;
  std::array<double, N> value;
  std::array<double, N> error;
  double worst;

  bool operator<(const Segment &o) const { return worst < o.worst; }
};

template <std::size_t N, class F> Segment<N> kronrod21(F &f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::array<std::array<double, N>, 21> fv;
  fv[0] = eval<N>(f, center);
  for (std::size_t j = 0; j < 10; ++j) {
    fv[1 + 2 * j] = eval<N>(f, center - half * xgk[j]);
    fv[2 + 2 * j] = eval<N>(f, center + half * xgk[j]);
  }

  Segment<N> seg{a, b, {}, {}, 0.0};
  for (std::size_t c = 0; c < N; ++c) {
    const double f0 = fv[0][c];
    double rk = wgk[10] * f0;
    double rg = 0.0;
    double rabs = std::abs(rk);
    for (std::size_t j = 0; j < 10; ++j) {
      const double s = fv[1 + 2 * j][c] + fv[2 + 2 * j][c];
      rk += wgk[j] * s;
      rabs += wgk[j] * (std::abs(fv[1 + 2 * j][c]) + std::abs(fv[2 + 2 * j][c]));
      if (j % 2 == 1)
        rg += wg[j / 2] * s;
    }
    const double mean = 0.5 * rk;
    double rasc = wgk[10] * std::abs(f0 - mean);
    for (std::size_t j = 0; j < 10; ++j)
      rasc += wgk[j] * (std::abs(fv[1 + 2 * j][c] - mean) + std::abs(fv[2 + 2 * j][c] - mean));

    const double result = rk * half;
    double err = std::abs((rk - rg) * half);
    rasc *= std::abs(half);
    rabs *= std::abs(half);
    if (rasc != 0 && err != 0)
      err = rasc * std::min(1.0, std::pow(200.0 * err / rasc, 1.5));
    if (rabs > std::numeric_limits<double>::min() / (50 * eps))
      err = std::max(50 * eps * rabs, err);
    seg.value[c] = result;
    seg.error[c] = err;
  }
  return seg;
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (G10/K21) integration of f over [a, b]
/// split initially at `breaks`. f returns a double or std::array<double, N>;
/// vector integrands share one mesh and converge when every component meets
/// max(abs_tol, rel_tol |I_c|).
template <class F>
auto integrate(F &&f, double a, double b, const QuadratureSpec &spec = {},
               const std::vector<double> &breaks = {}) {
  constexpr std::size_t N = detail::width_of<std::decay_t<F>>();
  spec.validate();
  using Seg = detail::Segment<N>;

  std::vector<double> pts{a};
  for (double p : breaks)
    if (p > a && p < b)
      pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());

  std::priority_queue<Seg> heap;
  std::array<double, N> total{}, err{};
  std::size_t evals = 0;
  auto weigh = [&](Seg &s) {
    s.worst = 0;
    for (std::size_t c = 0; c < N; ++c)
      s.worst = std::max(s.worst, s.error[c]);
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Seg s = detail::kronrod21<N>(f, pts[i], pts[i + 1]);
    evals += 21;
    weigh(s);
    for (std::size_t c = 0; c < N; ++c) {
      total[c] += s.value[c];
      err[c] += s.error[c];
    }
    heap.push(s);
  }

  auto converged = [&] {
    for (std::size_t c = 0; c < N; ++c)
      if (!(err[c] <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total[c]))))
        return false;
    return true;
  };

  std::size_t subdivisions = heap.size();
  while (!converged()) {
    if (subdivisions >= spec.max_subdivisions) {
      double worst_rel = 0;
      for (std::size_t c = 0; c < N; ++c)
        worst_rel = std::max(worst_rel, err[c] / std::max(std::abs(total[c]), spec.abs_tol));
      throw QuadratureError("adaptive quadrature did not converge after " +
                                std::to_string(subdivisions) +
                                " subdivisions (relative error estimate " +
                                std::to_string(worst_rel) + ")",
                            total[0], err[0]);
    }
    Seg top = heap.top();
    heap.pop();
    const double mid = 0.5 * (top.a + top.b);
    if (!(mid > top.a && mid < top.b)) {
      throw QuadratureError("adaptive quadrature hit the resolution limit of double precision",
                            total[0], err[0]);
    }
    Seg left = detail::kronrod21<N>(f, top.a, mid);
    Seg right = detail::kronrod21<N>(f, mid, top.b);
    evals += 42;
    weigh(left);
    weigh(right);
    for (std::size_t c = 0; c < N; ++c) {
      total[c] += left.value[c] + right.value[c] - top.value[c];
      err[c] += left.error[c] + right.error[c] - top.error[c];
    }
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // Re-sum from the leaves to shed the accumulated update rounding.
  std::array<double, N> value{}, error{};
  while (!heap.empty()) {
    for (std::size_t c = 0; c < N; ++c) {
      value[c] += heap.top().value[c];
      error[c] += heap.top().error[c];
    }
    heap.pop();
  }
  if constexpr (N == 1 && std::is_arithmetic_v<std::invoke_result_t<std::decay_t<F>, double>>) {
    return QuadratureResult{value[0], error[0], evals};
  } else {
    return VectorResult<N>{value, error, evals};
  }
}

/// I(s) = int_0^inf e^{-x} g(x) / sqrt(x (x + s)) dx.
///
/// The substitution x = t^2 turns the integrand into 2 e^{-t^2} g(t^2)/sqrt(t^2 + s),
/// which is bounded for s > 0 and for s = 0 whenever g(x) = O(x^{1/2}) at the
/// origin. The t axis is covered panel by panel until a panel's contribution
/// drops below rel_tol times the running estimate.
template <class G> auto integrate_spectral(G &&g, double s, const QuadratureSpec &spec = {}) {
  if (!(s >= 0) || !std::isfinite(s))
    throw ConfigError("integrate_spectral: s must be finite and non-negative");
  auto integrand = [&g, s](double t) {
    const double x = t * t;
    const double w = 2.0 * std::exp(-x) / std::sqrt(x + s);
    auto gv = g(x);
    if constexpr (std::is_arithmetic_v<decltype(gv)>) {
      return w * gv;
    } else {
      for (auto &v : gv)
        v *= w;
      return gv;
    }
  };

  constexpr double first_panel = 6.0; // e^{-36} ~ 2e-16
  constexpr double last_t = 27.5;     // e^{-t^2} underflows beyond
  std::vector<double> breaks{1.0};
  if (s > 0 && s < first_panel * first_panel)
    breaks.push_back(std::sqrt(s));
  if (s > 0 && s < 1e-2)
    breaks.push_back(10.0 * std::sqrt(s));

  auto result = integrate(integrand, 0.0, first_panel, spec, breaks);
  auto absorb = [](auto &into, const auto &panel) {
    if constexpr (std::is_same_v<std::decay_t<decltype(into)>, QuadratureResult>) {
      into.value += panel.value;
      into.error += panel.error;
    } else {
      for (std::size_t c = 0; c < into.value.size(); ++c) {
        into.value[c] += panel.value[c];
        into.error[c] += panel.error[c];
      }
    }
    into.evaluations += panel.evaluations;
  };
  auto negligible = [&spec](const auto &total, const auto &panel) {
    if constexpr (std::is_same_v<std::decay_t<decltype(total)>, QuadratureResult>) {
      return std::abs(panel.value) <= 0.01 * spec.rel_tol * std::abs(total.value);
    } else {
      for (std::size_t c = 0; c < total.value.size(); ++c)
        if (std::abs(panel.value[c]) > 0.01 * spec.rel_tol * std::abs(total.value[c]))
          return false;
      return true;
    }
  };
  for (double t = first_panel; t < last_t; t += 1.0) {
    auto panel = integrate(integrand, t, t + 1.0, spec);
    absorb(result, panel);
    if (negligible(result, panel))
      break;
  }
  return result;
}

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussLegendre gauss_legendre(std::size_t n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / double(j);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-16)
        break;
    }
    gl.nodes[i] = -z;
    gl.nodes[n - 1 - i] = z;
    gl.weights[i] = gl.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return gl;
}

/// Surface integral of f over the unit sphere. Product rule: Gauss-Legendre in
/// cos(theta) on each hemisphere times the trapezoid rule in azimuth, doubled
/// until successive levels agree to `agreement` relative.
template <class F>
QuadratureResult integrate_unit_sphere(F &&f, double agreement = 1e-10,
                                       std::size_t max_points = 1024) {
  double previous = std::numeric_limits<double>::quiet_NaN();
  std::size_t evals = 0;
  for (std::size_t n = 8; n <= max_points; n *= 2) {
    const auto gl = gauss_legendre(n);
    const std::size_t n_phi = 2 * n;
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    double total = 0.0;
    for (int hemi = 0; hemi < 2; ++hemi) {
      for (std::size_t i = 0; i < n; ++i) {
        // map [-1, 1] onto [-1, 0] or [0, 1]
        const double u = 0.5 * (gl.nodes[i] + (hemi == 0 ? -1.0 : 1.0));
        const double wu = 0.5 * gl.weights[i];
        const double sin_t = std::sqrt(std::max(0.0, 1.0 - u * u));
        double ring = 0.0;
        for (std::size_t k = 0; k < n_phi; ++k) {
          const double phi = k * dphi;
          ring += f(Vec3{sin_t * std::cos(phi), sin_t * std::sin(phi), u});
        }
        total += wu * ring * dphi;
      }
    }
    evals += 2 * n * n_phi;
    if (std::isfinite(previous) &&
        std::abs(total - previous) <= agreement * std::abs(total))
      return {total, std::abs(total - previous), evals};
    previous = total;
  }
  throw QuadratureError("unit-sphere quadrature did not converge", previous,
                        std::numeric_limits<double>::infinity());
}

} // namespace mvfca::quad
