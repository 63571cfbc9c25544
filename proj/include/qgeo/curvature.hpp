#pragma once

// Curvature coefficient of a qubit evolution: closed Bloch-vector forms and
// an expectation-value form used to cross-check them.

#include <vector>

#include "qgeo/qubit.hpp"

namespace qgeo {

struct CurvatureSample {
  double t = 0.0;
  double kappa2 = 0.0;
};

/// 4(a.h)^2 / (h^2 - (a.h)^2) for a stationary field.
double curvature_stationary(const BlochVector& a, const FieldSpec& field);

/// Full formula with the field rate hdot. Reduces bit-for-bit to the
/// stationary value when hdot = 0.
double curvature_bloch(const BlochVector& a, const Vec3& h, const Vec3& hdot);

/// curvature_bloch with h and hdot taken from the field at time t.
double curvature_timevarying(const BlochVector& a, const FieldSpec& field, double t);

struct OracleValue {
  double kappa2 = 0.0;
  double imag_residue = 0.0;  // imaginary part left by the commutator term
};

/// Expectation-value form evaluated on the state psi at time t. For
/// time-varying fields the derivative of the normalized deviation operator is
/// taken by central differences of width 1e-5/|h|, with the neighbouring
/// states obtained by a local RK4 step.
OracleValue curvature_oracle_detail(const FieldSpec& field, const PureState& psi, double t);

/// Oracle on the trajectory sample nearest to t (the state is carried from
/// that sample to t when they differ).
double curvature_oracle(const FieldSpec& field, const Trajectory& traj, double t);

/// Per-sample curvature along a trajectory (closed forms).
std::vector<CurvatureSample> curvature_profile(const Trajectory& traj, const FieldSpec& field);

}  // namespace qgeo
