#include "qgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgeo/error.hpp"

namespace qgeo {

double energy_uncertainty(const FieldSpec& field, const BlochVector& a, double t) {
  // |a x h| rather than sqrt(h^2 - (a.h)^2): no cancellation near eigenstates.
  return norm(cross(a, field.field(t)));
}

QuadratureResult path_length_with_error(const Trajectory& traj, const FieldSpec& field) {
  std::vector<double> speed(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    speed[i] = 2.0 * energy_uncertainty(field, traj.bloch[i], traj.times[i]);
  }
  const QuadratureResult r = simpson_with_error(traj.times, speed);
  if (r.error > std::max(1e-6 * std::abs(r.value), 1e-12)) {
    throw Error(ErrorCode::GridTooCoarse,
                "path length quadrature estimates disagree by " + std::to_string(r.error));
  }
  return r;
}

double path_length(const Trajectory& traj, const FieldSpec& field) {
  return path_length_with_error(traj, field).value;
}

namespace {

double efficiency_ratio(double s0, double s) {
  constexpr double kTiny = 1e-12;
  if (s < kTiny) {
    if (s0 < kTiny) return 1.0;
    throw Error(ErrorCode::DegenerateEvolution, "state does not move but the target is distinct");
  }
  const double r = s0 / s;
  return (r > 1.0 && r <= 1.0 + 1e-9) ? 1.0 : r;
}

}  // namespace

double geodesic_efficiency(const PureState& a, const PureState& b, const Trajectory& traj,
                           const FieldSpec& field) {
  return efficiency_ratio(fs_geodesic_distance(normalized_state(a), normalized_state(b)),
                          path_length(traj, field));
}

double spectral_norm(const FieldSpec& field, double t) {
  return std::abs(field.h0()) + norm(field.field(t));
}

double speed_efficiency(const FieldSpec& field, const BlochVector& a, double t) {
  const double denom = spectral_norm(field, t);
  if (denom == 0.0) throw Error(ErrorCode::ZeroHamiltonian, "speed efficiency of H = 0 is undefined");
  return std::clamp(energy_uncertainty(field, a, t) / denom, 0.0, 1.0);
}

EfficiencyProfile efficiency_profile(const PureState& a, const PureState& b, const Trajectory& traj,
                                     const FieldSpec& field) {
  if (traj.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty trajectory");
  EfficiencyProfile p;
  p.s0 = fs_geodesic_distance(normalized_state(a), normalized_state(b));
  const QuadratureResult len = path_length_with_error(traj, field);
  p.s = len.value;
  p.quadrature_error = len.error;
  p.eta_ge = efficiency_ratio(p.s0, p.s);

  p.eta_se_samples.resize(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    p.eta_se_samples[i] = speed_efficiency(field, traj.bloch[i], traj.times[i]);
  }
  const auto [lo, hi] = std::minmax_element(p.eta_se_samples.begin(), p.eta_se_samples.end());
  p.eta_se_min = *lo;
  p.eta_se_max = *hi;
  const double duration = traj.duration();
  p.eta_se_mean = duration > 0.0 ? simpson(traj.times, p.eta_se_samples) / duration : p.eta_se_samples.front();
  p.eta_se_mean = std::clamp(p.eta_se_mean, p.eta_se_min, p.eta_se_max);
  return p;
}

namespace {

// Derivative at x[at] of the parabola through (x[i], f[i]) for i in {a, b, c}.
PureState stencil(const std::vector<double>& x, const std::vector<PureState>& f, std::size_t a, std::size_t b,
                  std::size_t c, std::size_t at) {
  const double xa = x[a], xb = x[b], xc = x[c], t = x[at];
  const double wa = ((t - xb) + (t - xc)) / ((xa - xb) * (xa - xc));
  const double wb = ((t - xa) + (t - xc)) / ((xb - xa) * (xb - xc));
  const double wc = ((t - xa) + (t - xb)) / ((xc - xa) * (xc - xb));
  return {wa * f[a].c0 + wb * f[b].c0 + wc * f[c].c0, wa * f[a].c1 + wb * f[b].c1 + wc * f[c].c1};
}

}  // namespace

FieldSpec unit_efficiency_hamiltonian(const Trajectory& path) {
  const std::size_t n = path.size();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "need at least three samples to differentiate a path");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(path.times[i] > path.times[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "path times must be strictly increasing");
    }
  }

  // Discrete parallel transport: each step removes the relative phase so that
  // <m_k|m_k+1> is real and positive.
  std::vector<PureState> m(n);
  m[0] = normalized_state(path.states[0]);
  for (std::size_t k = 1; k < n; ++k) {
    const PureState next = normalized_state(path.states[k]);
    const complex overlap = inner(m[k - 1], next);
    const complex undo = std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : complex{1.0};
    m[k] = {next.c0 * undo, next.c1 * undo};
  }

  std::vector<Vec3> field(n);
  for (std::size_t k = 0; k < n; ++k) {
    PureState dm;
    if (k == 0) dm = stencil(path.times, m, 0, 1, 2, 0);
    else if (k == n - 1) dm = stencil(path.times, m, n - 3, n - 2, n - 1, n - 1);
    else dm = stencil(path.times, m, k - 1, k, k + 1, k);

    const double residual = std::abs(inner(m[k], dm));
    const double speed = norm(dm);
    if (residual > 1e-6 * std::max(1.0, speed)) {
      throw Error(ErrorCode::GridTooCoarse,
                  "parallel transport residual " + std::to_string(residual) + " at sample " + std::to_string(k));
    }
    // H = i(|m'><m| - |m><m'|)
    const complex i{0.0, 1.0};
    const complex h00 = i * (dm.c0 * std::conj(m[k].c0) - m[k].c0 * std::conj(dm.c0));
    const complex h11 = i * (dm.c1 * std::conj(m[k].c1) - m[k].c1 * std::conj(dm.c1));
    const complex h10 = i * (dm.c1 * std::conj(m[k].c0) - m[k].c1 * std::conj(dm.c0));
    field[k] = {h10.real(), h10.imag(), 0.5 * (h00.real() - h11.real())};
  }
  return FieldSpec::sampled(path.times, std::move(field), 0.0);
}

}  // namespace qgeo
