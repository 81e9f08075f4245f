// Copyright 2026 The isinggate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isinggate/geodesic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "isinggate/kernels.hpp"

namespace isinggate {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this y a sample is treated as lying on the x-z great circle.
constexpr double kYFloor = 1e-9;

Eigen::Matrix4d flow_matrix(double u, double t) {
  return (kPi * t * control_generator(u)).exp();
}

double sphere_distance(const SphereState& a, const SphereState& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

SphereState sphere_image(const Eigen::Vector4d& v) {
  return {v(0), std::hypot(v(1), v(2)), v(3)};
}

// Minimizes f on [a, b]; returns the abscissa.
template <class F>
double golden_section(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Central differences inside, second-order one-sided at the ends.
std::vector<double> derivative(std::span<const double> v, double dt) {
  const std::size_t n = v.size();
  std::vector<double> d(n, 0.0);
  if (n < 3) return d;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * dt);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dt);
  return d;
}

struct Velocities {
  std::vector<double> xdot, zdot;
};

Velocities velocities(std::span<const SphereState> path, double dt) {
  std::vector<double> xs, zs;
  xs.reserve(path.size());
  zs.reserve(path.size());
  for (const auto& s : path) {
    xs.push_back(s.x);
    zs.push_back(s.z);
  }
  return {derivative(xs, dt), derivative(zs, dt)};
}

// Indices n in [1, steps) of the first `count` local minima of a series.
std::vector<std::size_t> local_minima(std::span<const double> d, int count) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n + 1 < d.size() && static_cast<int>(out.size()) < count; ++n)
    if (d[n] <= d[n - 1] && d[n] < d[n + 1]) out.push_back(n);
  return out;
}

class ConstantUSearch {
 public:
  ConstantUSearch(const SphereState& target, const SearchOptions& opt)
      : target_(target), opt_(opt), steps_(static_cast<std::size_t>(std::ceil(opt.tau_max / opt.dt))) {}

  GeodesicSolution run() {
    const auto grid_size = static_cast<std::size_t>(std::floor((opt_.u_max - opt_.u_min) / opt_.u_step + 0.5)) + 1;
    const std::size_t branches = static_cast<std::size_t>(opt_.branches);
    const double inf = std::numeric_limits<double>::infinity();
    // residual[c][i]: distance at the c-th close approach for grid point i.
    std::vector<std::vector<double>> residual(branches, std::vector<double>(grid_size, inf));

    constexpr std::size_t kChunk = 256;
    std::vector<double> soa, series;
    for (std::size_t first = 0; first < grid_size; first += kChunk) {
      const std::size_t lanes = std::min(kChunk, grid_size - first);
      scan(first, lanes, soa, series);
      for (std::size_t l = 0; l < lanes; ++l) {
        const std::span<const double> row(series.data() + l * (steps_ + 1), steps_ + 1);
        const auto mins = local_minima(row, opt_.branches);
        for (std::size_t c = 0; c < mins.size(); ++c) residual[c][first + l] = row[mins[c]];
      }
    }

    std::optional<GeodesicSolution> best;
    // Coarse candidates must come reasonably close on the grid already.
    const double coarse_gate = 50.0 * std::max(opt_.u_step, opt_.dt);
    for (std::size_t c = 0; c < branches; ++c) {
      const auto& r = residual[c];
      for (std::size_t i = 0; i < grid_size; ++i) {
        if (!(r[i] < coarse_gate)) continue;
        const double left = i > 0 ? r[i - 1] : inf;
        const double right = i + 1 < grid_size ? r[i + 1] : inf;
        if (!(r[i] <= left && r[i] <= right)) continue;
        // The coarse minimum can sit a few grid points off when the target has y = 0.
        const double lo = std::max(opt_.u_min, grid_u(i) - 3.0 * opt_.u_step);
        const double hi = std::min(opt_.u_max, grid_u(i) + 3.0 * opt_.u_step);
        const double u = golden_section([&](double uu) { return refine_tau(uu, c).distance; }, lo, hi,
                                        opt_.refine_tol);
        const auto hit = refine_tau(u, c);
        if (!(hit.distance <= opt_.match_tol)) continue;
        if (!best || hit.tau < best->tau || (hit.tau == best->tau && u < best->u)) {
          best = GeodesicSolution{u, hit.tau, 0.0, kPi * hit.tau};
        }
      }
    }
    if (!best) throw SearchError("no constant-u trajectory reaches the target within the search bounds");

    const Eigen::Vector4d xt = flow_matrix(best->u, best->tau) * Eigen::Vector4d(1, 0, 0, 0);
    if (std::hypot(xt(1), xt(2)) > 1e-8) best->theta = std::atan2(xt(1), xt(2));
    // atan(x2/x3) is two-quadrant; fold into (-pi/2, pi/2].
    if (best->theta > kPi / 2) best->theta -= kPi;
    if (best->theta <= -kPi / 2) best->theta += kPi;
    return *best;
  }

 private:
  struct Hit {
    double distance = std::numeric_limits<double>::infinity();
    double tau = 0.0;
  };

  double grid_u(std::size_t i) const { return opt_.u_min + static_cast<double>(i) * opt_.u_step; }

  void scan(std::size_t first, std::size_t lanes, std::vector<double>& soa, std::vector<double>& series) const {
    soa.assign(16 * lanes, 0.0);
    for (std::size_t l = 0; l < lanes; ++l) {
      const Eigen::Matrix4d m = flow_matrix(grid_u(first + l), opt_.dt);
      for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) soa[(4 * r + col) * lanes + l] = m(r, col);
    }
    series.resize(lanes * (steps_ + 1));
    const double x0[4] = {1.0, 0.0, 0.0, 0.0};
    const double tgt[3] = {target_.x, target_.y, target_.z};
    kernels::active().flow_distances(soa.data(), lanes, x0, tgt, steps_, series.data());
  }

  // Golden-section refinement of the c-th close approach at a fixed u.
  Hit refine_tau(double u, std::size_t c) const {
    std::vector<double> soa, series;
    ConstantUSearch probe(*this);
    probe.opt_.u_min = u;
    probe.scan(0, 1, soa, series);
    const auto mins = local_minima(series, static_cast<int>(c) + 1);
    if (mins.size() <= c) return {};
    const double t0 = (static_cast<double>(mins[c]) - 1.0) * opt_.dt;
    const double t1 = (static_cast<double>(mins[c]) + 1.0) * opt_.dt;
    auto dist = [&](double t) {
      return sphere_distance(sphere_image(flow_matrix(u, t) * Eigen::Vector4d(1, 0, 0, 0)), target_);
    };
    const double tau = golden_section(dist, t0, t1, opt_.refine_tol);
    return {dist(tau), tau};
  }

  SphereState target_;
  SearchOptions opt_;
  std::size_t steps_;
};

}  // namespace

double ControlState4::norm() const {
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
}

Eigen::Matrix4d control_generator(double u) {
  Eigen::Matrix4d a;
  a << 0, -1, 0, 0,
       1, 0, -u, 0,
       0, u, 0, -1,
       0, 0, 1, 0;
  return a;
}

ControlState4 evolve_eq1(double u, double t, const ControlState4& x0) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve_eq1: time must be non-negative");
  const Eigen::Vector4d v = flow_matrix(u, t) * Eigen::Vector4d(x0.x[0], x0.x[1], x0.x[2], x0.x[3]);
  return {{v(0), v(1), v(2), v(3)}};
}

SphereState reduce_to_sphere(const ControlState4& s) {
  if (std::abs(s.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("reduce_to_sphere: state must have unit norm");
  return {s.x[0], std::hypot(s.x[1], s.x[2]), s.x[3]};
}

std::vector<ControlState4> sample_flow(double u, double tau, std::size_t samples) {
  std::vector<ControlState4> out;
  out.reserve(samples + 1);
  const double dt = samples > 0 ? tau / static_cast<double>(samples) : 0.0;
  for (std::size_t n = 0; n <= samples; ++n)
    out.push_back(evolve_eq1(u, dt * static_cast<double>(n), ControlState4{}));
  return out;
}

std::vector<SphereState> sample_sphere_path(double u, double tau, std::size_t samples) {
  std::vector<SphereState> out;
  for (const auto& s : sample_flow(u, tau, samples)) out.push_back(reduce_to_sphere(s));
  return out;
}

double path_length_g(std::span<const SphereState> path, double dt) {
  const std::size_t n = path.size();
  if (n < 2) return 0.0;
  if (!(dt > 0.0)) throw std::invalid_argument("path_length_g: dt must be positive");
  if (n == 2) {
    // Too short for finite differences: chord over the mean height.
    const double y = 0.5 * (path[0].y + path[1].y);
    const double chord = std::hypot(path[1].x - path[0].x, path[1].z - path[0].z);
    if (chord == 0.0) return 0.0;
    if (y < kYFloor) throw GeometryError("path_length_g: path runs along y = 0");
    return chord / y;
  }
  const auto [xdot, zdot] = velocities(path, dt);
  std::vector<double> g(n, 0.0);
  std::vector<bool> defined(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    const double speed = std::hypot(xdot[i], zdot[i]);
    if (path[i].y >= kYFloor) {
      g[i] = speed / path[i].y;
    } else if (speed * dt < kYFloor) {
      g[i] = 0.0;
      defined[i] = (i != 0 && i != n - 1) ? true : false;
    } else if (i == 0 || i == n - 1) {
      defined[i] = false;
    } else {
      throw GeometryError("path_length_g: y vanishes at an interior point of a moving path");
    }
  }
  if (!defined[0]) g[0] = g[1];
  if (!defined[n - 1]) g[n - 1] = g[n - 2];
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) total += 0.5 * (g[i] + g[i + 1]) * dt;
  return total;
}

std::vector<double> euler_lagrange_invariant(std::span<const SphereState> path, double dt) {
  const auto [xdot, zdot] = velocities(path, dt);
  std::vector<double> q(path.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& s = path[i];
    if (s.y >= kYFloor) q[i] = (zdot[i] * s.x - xdot[i] * s.z) / (s.y * s.y);
  }
  return q;
}

SphereState target_point(const GeodesicTarget& target) {
  return std::visit(
      [](const auto& t) -> SphereState {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, PhiTarget>) {
          return {0.0, std::cos(t.phi), std::sin(t.phi)};
        } else {
          return {std::cos(kPi * t.kappa / 2), 0.0, std::sin(kPi * t.kappa / 2)};
        }
      },
      target);
}

GeodesicSolution search_constant_u(const GeodesicTarget& target, const SearchOptions& options) {
  std::visit(
      [](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, PhiTarget>) {
          if (!(t.phi > 0.0 && t.phi <= kPi / 2))
            throw std::invalid_argument("phi target must lie in (0, pi/2]");
        } else {
          if (!(t.kappa > 0.0 && t.kappa <= 2.0))
            throw std::invalid_argument("kappa target must lie in (0, 2]");
        }
      },
      target);
  if (!(options.u_step > 0.0 && options.dt > 0.0 && options.u_max >= options.u_min &&
        options.tau_max > options.dt && options.branches >= 1))
    throw std::invalid_argument("invalid search options");
  return ConstantUSearch(target_point(target), options).run();
}

TauKappa tau_kappa(double kappa) {
  if (!(kappa >= 0.0 && kappa <= 2.0)) throw std::out_of_range("kappa must lie in [0, 2]");
  const double tau = std::sqrt(kappa * (4.0 - kappa)) / 2.0;
  return {tau, kPi * tau};
}

}  // namespace isinggate
