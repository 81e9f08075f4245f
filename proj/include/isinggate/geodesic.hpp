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

#pragma once

// The four-dimensional control system for the I1x -> -2 I1x I3z transfer,
// its reduction to the unit sphere, the length functional of the metric
// g = (dx^2 + dz^2) / y^2, and the constant-control time-optimal search.
//
// Times are multiples of 1/J. The generator is
//
//        [ 0  -1   0   0 ]
//   A(u) = [ 1   0  -u   0 ]      dx/dt = pi J A(u) x
//        [ 0   u   0  -1 ]
//        [ 0   0   1   0 ]

#include <Eigen/Dense>

#include <array>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace isinggate {

struct ControlState4 {
  std::array<double, 4> x{1.0, 0.0, 0.0, 0.0};
  double norm() const;
};

struct SphereState {
  double x = 1.0;
  double y = 0.0;
  double z = 0.0;
};

struct GeodesicSolution {
  double u = 0.0;      ///< control amplitude (weak-pulse amplitude is u J / 2)
  double tau = 0.0;    ///< multiples of 1/J
  double theta = 0.0;  ///< atan(x2 / x3) at tau, in (-pi/2, pi/2]; 0 when x2 = x3 = 0
  double length = 0.0; ///< metric length, pi * tau * J
};

Eigen::Matrix4d control_generator(double u);

/// exp(pi t A(u)) x0.
ControlState4 evolve_eq1(double u, double t, const ControlState4& x0);

/// (x1, hypot(x2, x3), x4). Throws std::invalid_argument unless |x| = 1.
SphereState reduce_to_sphere(const ControlState4& x);

/// Trajectory of the constant-u flow from (1,0,0,0), samples + 1 points
/// equally spaced on [0, tau].
std::vector<ControlState4> sample_flow(double u, double tau, std::size_t samples);
std::vector<SphereState> sample_sphere_path(double u, double tau, std::size_t samples);

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Trapezoid quadrature of sqrt(xdot^2 + zdot^2) / y on a uniformly sampled
/// path (finite-difference velocities). An endpoint sample with y = 0 takes
/// the integrand value of its neighbour. Throws GeometryError when y vanishes
/// at an interior sample that is moving.
double path_length_g(std::span<const SphereState> path, double dt);

/// (zdot x - xdot z) / y^2 per sample; NaN where y = 0. Constant along
/// geodesics of g.
std::vector<double> euler_lagrange_invariant(std::span<const SphereState> path, double dt);

/// Target (0, cos phi, sin phi), reached by the bilinear transfer.
struct PhiTarget {
  double phi = 0.0;
};
/// Target (cos(pi kappa / 2), 0, sin(pi kappa / 2)), reached by the
/// trilinear propagator exp(-i 2 pi kappa I1z I2y I3z).
struct KappaTarget {
  double kappa = 0.0;
};
using GeodesicTarget = std::variant<PhiTarget, KappaTarget>;

SphereState target_point(const GeodesicTarget& target);

struct SearchOptions {
  double u_min = 0.0;
  double u_max = 4.0;
  double u_step = 1e-3;
  double dt = 1e-3;          ///< coarse time step of the trajectory scan
  double tau_max = 3.0;
  int branches = 3;          ///< successive close approaches examined per u
  double match_tol = 1e-6;   ///< accepted sphere distance at the endpoint
  double refine_tol = 1e-10; ///< golden-section bracket width in u and tau
};

struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scans u over the grid, follows each trajectory from (1,0,0,0) and
/// collects the close approaches to the target's sphere image; candidates are
/// refined by nested golden-section searches in u and tau. Returns the
/// feasible pair with the smallest tau (ties broken by u). Throws
/// std::invalid_argument for unreachable targets and SearchError when
/// nothing within the bounds meets match_tol.
GeodesicSolution search_constant_u(const GeodesicTarget& target, const SearchOptions& options = {});

struct TauKappa {
  double tau = 0.0;     ///< sqrt(kappa (4 - kappa)) / 2, multiples of 1/J
  double length = 0.0;  ///< pi * tau
};

/// Minimum time of the trilinear propagator. Throws std::out_of_range outside [0, 2].
TauKappa tau_kappa(double kappa);

}  // namespace isinggate
