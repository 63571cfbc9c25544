#pragma once

// Length and efficiency functionals of a trajectory.

#include <vector>

#include "qgeo/quadrature.hpp"
#include "qgeo/qubit.hpp"

namespace qgeo {

struct EfficiencyProfile {
  double s0 = 0.0;
  double s = 0.0;
  double eta_ge = 1.0;
  std::vector<double> eta_se_samples;
  double eta_se_min = 0.0;
  double eta_se_max = 0.0;
  double eta_se_mean = 0.0;  // time average
  double quadrature_error = 0.0;
};

/// sqrt(|h|^2 - (a.h)^2), clamped at zero. h0 plays no role.
double energy_uncertainty(const FieldSpec& field, const BlochVector& a, double t);

/// Integral of 2 dE(t) over the trajectory (orthogonal states sit at distance
/// pi). Throws GridTooCoarse when the two-grid estimate disagrees by more than
/// 1e-6 relative.
QuadratureResult path_length_with_error(const Trajectory& traj, const FieldSpec& field);
double path_length(const Trajectory& traj, const FieldSpec& field);

/// s0 / s for the endpoints a, b and the traversed trajectory. Returns 1 when
/// neither s nor s0 exceeds 1e-12.
double geodesic_efficiency(const PureState& a, const PureState& b, const Trajectory& traj,
                           const FieldSpec& field);

/// dE / (|h0| + |h|). Throws ZeroHamiltonian for H = 0.
double speed_efficiency(const FieldSpec& field, const BlochVector& a, double t);

/// Largest singular value of h0 + h.sigma.
double spectral_norm(const FieldSpec& field, double t);

/// All of the above evaluated along one trajectory.
EfficiencyProfile efficiency_profile(const PureState& a, const PureState& b, const Trajectory& traj,
                                     const FieldSpec& field);

/// Traceless field that drives the given path with unit speed efficiency.
/// The path is parallel transported sample by sample, differentiated with
/// three-point stencils, and the generator i(|m'><m| - |m><m'|) is
/// decomposed on the Pauli basis. Throws GridTooCoarse when the discrete
/// transport leaves a residual <m|m'> above 1e-6.
FieldSpec unit_efficiency_hamiltonian(const Trajectory& path);

}  // namespace qgeo
