#pragma once

#include <array>

#include "motkit/geometry.hpp"
#include "motkit/matrix.hpp"

namespace motkit {

/// Per-target motion state: box center (u, v), area s, aspect ratio r, and
/// per-frame velocities of center and area. The aspect ratio carries no
/// velocity component.
struct StateVector {
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  double r = 0.0;
  double du = 0.0;
  double dv = 0.0;
  double ds = 0.0;
};

using Covariance = Mat<7, 7>;

/// Configurable noise/uncertainty diagonals of the constant-velocity box
/// filter. The transition and observation structure is fixed: each position
/// component advances by its velocity once per frame (dt = 1) and the first
/// four state entries are observed directly.
///
/// Defaults de-weight the noisy area/aspect measurements, start velocities
/// with large uncertainty, and nearly freeze area-velocity drift.
struct FilterParams {
  std::array<double, 7> process_noise_diag{1.0, 1.0, 1.0, 1.0, 0.01, 0.01, 1e-4};
  std::array<double, 4> measurement_noise_diag{1.0, 1.0, 10.0, 10.0};
  std::array<double, 7> initial_covariance_diag{10.0, 10.0, 10.0, 10.0, 1e4, 1e4, 1e4};
};

struct FilterState {
  StateVector state;
  Covariance cov;
};

/// Start a filter from a detection: position from the observation, all
/// velocities zero, velocity covariance large to reflect that velocities are
/// unobserved at this point.
FilterState init_filter(const Observation& obs, const FilterParams& params);

/// Advance one frame under the constant-velocity model; both mean and
/// covariance are propagated. If the area would be driven non-positive, the
/// area velocity is zeroed first.
FilterState predict(const StateVector& state, const Covariance& cov, const FilterParams& params);

/// Standard Kalman correction with the observation (u, v, s, r).
/// Throws std::runtime_error if the innovation covariance is not positive
/// definite (unreachable with a positive-definite measurement noise).
FilterState update(const StateVector& state, const Covariance& cov, const Observation& obs,
                   const FilterParams& params);

/// Box corresponding to the state mean. Area and aspect ratio are clamped
/// away from zero so the conversion stays total on filtered states.
Box state_box(const StateVector& state);

}  // namespace motkit
