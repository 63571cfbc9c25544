#pragma once

// Experiment harness: the one-parameter Hamiltonian family, the canonical
// fixtures, full metric reports and alpha sweeps.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgeo/complexity.hpp"
#include "qgeo/propagation.hpp"
#include "qgeo/qubit.hpp"

namespace qgeo {

struct FamilySpec {
  BlochVector a_hat{1.0, 0.0, 0.0};
  BlochVector b_hat{0.0, 1.0, 0.0};
  double alpha = kPi / 2.0;
  double energy = 1.0;
};

/// cos(alpha) (a+b)/|a+b| + sin(alpha) (a x b)/|a x b|. Throws DegeneratePair
/// for a = +-b.
Vec3 family_axis(const BlochVector& a_hat, const BlochVector& b_hat, double alpha);

/// Stationary field E n(alpha), h0 = 0.
FieldSpec family_hamiltonian(const FamilySpec& spec);

/// One evolution to evaluate. Without t_end the duration is the travel time
/// from initial to target (stationary fields only).
struct Evolution {
  std::string name;
  PureState initial;
  std::optional<PureState> target;
  FieldSpec field = FieldSpec::constant({0.0, 0.0, 1.0});
  std::optional<double> t_end;
};

struct MetricReport {
  std::string name;
  double s0 = 0.0;
  double s = 0.0;
  double travel_time = 0.0;
  double eta_ge = 0.0;
  double eta_se_min = 0.0;
  double eta_se_max = 0.0;
  double eta_se_mean = 0.0;
  double kappa2 = 0.0;
  double v_bar = 0.0;
  double v_max = 0.0;
  double c = 0.0;
  double l_c = 0.0;
  double quadrature_error = 0.0;
  Shape shape = Shape::Point;
  double theta_min = 0.0;
  double theta_max = 0.0;
  double phi_min = 0.0;
  double phi_max = 0.0;
  std::vector<double> pole_times;
};

struct Evaluation {
  MetricReport report;
  Trajectory trajectory;
  std::vector<double> v_instant;
};

/// propagate -> unwrap -> lengths and efficiencies -> curvature -> volumes.
/// s0 is measured between the initial state and the state actually reached.
/// Curvature is the conserved value for stationary fields and the time
/// average of the closed form otherwise.
Evaluation evaluate(const Evolution& evo, const PropagationConfig& cfg = {});
MetricReport evaluate_report(const Evolution& evo, const PropagationConfig& cfg = {});

std::span<const std::string_view> fixture_names() noexcept;
/// Throws UnknownFixture.
Evolution fixture(std::string_view name);
MetricReport run_fixture(std::string_view name, const PropagationConfig& cfg = {});

struct SweepPoint {
  double alpha = 0.0;
  MetricReport report;
};

struct SweepResult {
  std::vector<SweepPoint> points;  // ascending alpha
  std::size_t argmin = 0;          // smallest travel time, first on ties
};

/// Travel time and full metrics for each alpha, from the state of a_hat to
/// the state of b_hat. `threads` = 0 picks the hardware concurrency; the
/// result does not depend on it.
SweepResult sweep_alpha(std::span<const double> alphas, const BlochVector& a_hat, const BlochVector& b_hat,
                        double energy, const PropagationConfig& cfg = {}, unsigned threads = 0);

}  // namespace qgeo
