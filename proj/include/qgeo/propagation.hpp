#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qgeo/qubit.hpp"

namespace qgeo {

struct PropagationConfig {
  std::size_t samples = 4096;        // grid points per trajectory
  double integrator_step = 1e-3;     // fixed RK4 step (time units, hbar = 1)
  double fidelity_tol = 1e-10;       // travel-time target on |<target|psi(t)>|
  std::size_t renormalize_every = 1; // RK4 steps between renormalizations; 0 = never

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

/// `samples` equally spaced times covering [t0, t1]; a single point when
/// t1 == t0.
std::vector<double> uniform_grid(double t0, double t1, std::size_t samples);

/// exp(-i (h0 + h.sigma) t) psi0 via the rotor identity
/// exp(-i h.sigma t) = cos(|h| t) - i sin(|h| t) (h/|h|).sigma.
/// A zero field leaves psi0 unchanged apart from the h0 phase.
PureState propagate_stationary(const FieldSpec& field, const PureState& psi0, double t);

/// Exact rotor evolution sampled on `times` (relative to times.front(),
/// where the state is psi0).
Trajectory propagate_stationary_trajectory(const FieldSpec& field, const PureState& psi0,
                                           std::span<const double> times);

/// Classic fixed-step RK4 integration of i d/dt psi = H(t) psi, reporting the
/// state at every grid time. Each grid interval is split into
/// ceil(interval / step) equal sub-steps.
Trajectory propagate_numeric(const FieldSpec& field, const PureState& psi0,
                             std::span<const double> grid, const PropagationConfig& cfg);

/// Smallest t > 0 at which a stationary field carries psi0 onto target.
double travel_time(const FieldSpec& field, const PureState& psi0, const PureState& target,
                   const PropagationConfig& cfg = {});

/// Continuous angle track for a trajectory; also fills pole-crossing and
/// turning-point events.
AngleTrack unwrap_angles(const Trajectory& traj);

/// Builds bloch vectors and the unwrapped angle track for sampled states.
Trajectory make_trajectory(std::vector<double> times, std::vector<PureState> states);

}  // namespace qgeo
