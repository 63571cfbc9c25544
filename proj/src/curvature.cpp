#include "qgeo/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "qgeo/error.hpp"

namespace qgeo {

namespace {

void require_curve(double denom, double h2) {
  if (!(denom > 1e-14 * h2)) {
    throw Error(ErrorCode::EigenstateSingularity, "state is an eigenstate of the field; no curve to bend");
  }
}

}  // namespace

double curvature_bloch(const BlochVector& a, const Vec3& h, const Vec3& hdot) {
  const double ah = dot(a, h);
  const double h2 = dot(h, h);
  const Vec3 perp = cross(a, h);
  const double den = dot(perp, perp);
  require_curve(den, h2);

  double k2 = 4.0 * ah * ah / den;
  if (hdot != Vec3{}) {
    const Vec3 mixed = dot(a, hdot) * h - ah * hdot;
    const Vec3 hxr = cross(h, hdot);
    k2 += (dot(hxr, hxr) - dot(mixed, mixed)) / (den * den * den);
    k2 += 4.0 * ah * dot(a, hxr) / (den * den);
  }
  return std::max(0.0, k2);
}

double curvature_stationary(const BlochVector& a, const FieldSpec& field) {
  if (!field.stationary()) throw Error(ErrorCode::InvalidArgument, "field is not stationary");
  return curvature_bloch(a, field.field(0.0), Vec3{});
}

double curvature_timevarying(const BlochVector& a, const FieldSpec& field, double t) {
  return curvature_bloch(a, field.field(t), field.rate(t));
}

namespace {

struct Deviation {
  Mat2 op;        // (H - <H>) / dE
  double spread;  // dE
};

Deviation normalized_deviation(const FieldSpec& field, const PureState& psi, double t) {
  const Mat2 h = field.matrix(t);
  const double mean = expectation(h, psi).real();
  const double second = expectation(h * h, psi).real();
  const double spread = std::sqrt(std::max(0.0, second - mean * mean));
  if (!(spread > 1e-12 * norm(field.field(t)))) {
    throw Error(ErrorCode::EigenstateSingularity, "energy uncertainty vanishes");
  }
  return {(h - Mat2::identity() * complex{mean}) * complex{1.0 / spread}, spread};
}

PureState derivative(const FieldSpec& field, double t, const PureState& psi) {
  const PureState hpsi = field.matrix(t) * psi;
  return {complex{0.0, -1.0} * hpsi.c0, complex{0.0, -1.0} * hpsi.c1};
}

// Carries psi from t to t + span (either sign) with RK4 steps no longer than
// `max_step`.
PureState carry(const FieldSpec& field, PureState psi, double t, double span, double max_step) {
  if (span == 0.0) return psi;
  const auto n = static_cast<std::size_t>(std::ceil(std::abs(span) / max_step));
  const double dt = span / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = t + dt * static_cast<double>(k);
    const PureState k1 = derivative(field, s, psi);
    const PureState y2{psi.c0 + 0.5 * dt * k1.c0, psi.c1 + 0.5 * dt * k1.c1};
    const PureState k2 = derivative(field, s + 0.5 * dt, y2);
    const PureState y3{psi.c0 + 0.5 * dt * k2.c0, psi.c1 + 0.5 * dt * k2.c1};
    const PureState k3 = derivative(field, s + 0.5 * dt, y3);
    const PureState y4{psi.c0 + dt * k3.c0, psi.c1 + dt * k3.c1};
    const PureState k4 = derivative(field, s + dt, y4);
    psi.c0 += dt / 6.0 * (k1.c0 + 2.0 * k2.c0 + 2.0 * k3.c0 + k4.c0);
    psi.c1 += dt / 6.0 * (k1.c1 + 2.0 * k2.c1 + 2.0 * k3.c1 + k4.c1);
    psi = normalized_state(psi);
  }
  return psi;
}

}  // namespace

OracleValue curvature_oracle_detail(const FieldSpec& field, const PureState& psi_in, double t) {
  const PureState psi = normalized_state(psi_in);
  const Deviation dev = normalized_deviation(field, psi, t);
  const Mat2 dh2 = dev.op * dev.op;
  const double m2 = expectation(dh2, psi).real();
  const double m4 = expectation(dh2 * dh2, psi).real();
  complex k2{m4 - m2 * m2};

  if (!field.stationary()) {
    // d/ds = (1/v) d/dt with v = dE
    const double delta = 1e-5 / std::max(norm(field.field(t)), 1e-300);
    const double step = delta;
    const PureState ahead = carry(field, psi, t, delta, step);
    const PureState behind = carry(field, psi, t, -delta, step);
    const Mat2 up = normalized_deviation(field, ahead, t + delta).op;
    const Mat2 down = normalized_deviation(field, behind, t - delta).op;
    const Mat2 prime = (up - down) * complex{1.0 / (2.0 * delta * dev.spread)};
    const complex mean_prime = expectation(prime, psi);
    k2 += expectation(prime * prime, psi) - mean_prime * mean_prime;
    k2 += complex{0.0, 1.0} * expectation(dh2 * prime - prime * dh2, psi);
  }
  return {std::max(0.0, k2.real()), k2.imag()};
}

double curvature_oracle(const FieldSpec& field, const Trajectory& traj, double t) {
  if (traj.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty trajectory");
  const auto it = std::lower_bound(traj.times.begin(), traj.times.end(), t);
  std::size_t i = static_cast<std::size_t>(std::distance(traj.times.begin(), it));
  if (i == traj.size() || (i > 0 && t - traj.times[i - 1] < traj.times[i] - t)) i = i == 0 ? 0 : i - 1;
  PureState psi = traj.states[i];
  const double gap = t - traj.times[i];
  if (gap != 0.0) {
    const double mag = std::max(norm(field.field(traj.times[i])), 1e-300);
    psi = carry(field, psi, traj.times[i], gap, 1e-3 / mag);
  }
  return curvature_oracle_detail(field, psi, t).kappa2;
}

std::vector<CurvatureSample> curvature_profile(const Trajectory& traj, const FieldSpec& field) {
  std::vector<CurvatureSample> out(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.times[i];
    out[i] = {t, field.stationary() ? curvature_stationary(traj.bloch[i], field)
                                    : curvature_timevarying(traj.bloch[i], field, t)};
  }
  return out;
}

}  // namespace qgeo
