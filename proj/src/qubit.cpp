#include "qgeo/qubit.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "qgeo/error.hpp"

namespace qgeo {

PureState normalized_state(const PureState& s) {
  const double n = norm(s);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidArgument, "state has zero or non-finite norm");
  }
  return {s.c0 / n, s.c1 / n};
}

double infidelity(const PureState& a, const PureState& b) {
  return std::norm(a.c0 * b.c1 - a.c1 * b.c0);
}

bool physically_equal(const PureState& a, const PureState& b, double tol) {
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r == 0.0 ? 0.0 : r;  // drop -0
}

SphericalAngles angles_from_state(const PureState& state) {
  const double theta = 2.0 * std::atan2(std::abs(state.c1), std::abs(state.c0));
  if (std::sin(theta) < kPoleSinThreshold) return {theta, 0.0};
  const double phi = std::atan2(state.c1.imag(), state.c1.real()) -
                     std::atan2(state.c0.imag(), state.c0.real());
  return {theta, wrap_two_pi(phi)};
}

BlochVector bloch_from_state(const PureState& state) {
  const complex coherence = std::conj(state.c0) * state.c1;
  return {2.0 * coherence.real(), 2.0 * coherence.imag(),
          std::norm(state.c0) - std::norm(state.c1)};
}

BlochVector bloch_from_angles(const SphericalAngles& a) {
  const double s = std::sin(a.theta);
  return {s * std::cos(a.phi), s * std::sin(a.phi), std::cos(a.theta)};
}

PureState state_from_angles(const SphericalAngles& a) {
  return {complex{std::cos(a.theta / 2.0), 0.0},
          std::polar(std::sin(a.theta / 2.0), a.phi)};
}

SphericalAngles angles_from_bloch(const BlochVector& b) {
  const double rho = std::hypot(b.x, b.y);
  const double theta = std::atan2(rho, b.z);
  if (std::sin(theta) < kPoleSinThreshold) return {theta, 0.0};
  return {theta, wrap_two_pi(std::atan2(b.y, b.x))};
}

PureState state_from_bloch(const BlochVector& b) {
  const double n = norm(b);
  if (!(n > 0.0)) throw Error(ErrorCode::InvalidArgument, "zero Bloch vector");
  return state_from_angles(angles_from_bloch(b / n));
}

SphericalAngles canonical_angles(double theta_u, double phi_u) {
  double theta = wrap_two_pi(theta_u);
  double phi = phi_u;
  if (theta > kPi) {
    theta = kTwoPi - theta;
    phi += kPi;
  }
  if (std::sin(theta) < kPoleSinThreshold) return {theta, 0.0};
  return {theta, wrap_two_pi(phi)};
}

double fs_geodesic_distance(const PureState& a, const PureState& b) {
  // |a0 b1 - a1 b0| = sin(s0/2) and |<a|b>| = cos(s0/2) for unit states.
  return 2.0 * std::atan2(std::abs(a.c0 * b.c1 - a.c1 * b.c0), std::abs(inner(a, b)));
}

Mat2 Mat2::hamiltonian(double h0, const Vec3& h) {
  return Mat2{{complex{h0 + h.z, 0.0}, complex{h.x, -h.y},
               complex{h.x, h.y}, complex{h0 - h.z, 0.0}}};
}

Mat2 Mat2::operator+(const Mat2& o) const {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

Mat2 Mat2::operator-(const Mat2& o) const {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = m[i] - o.m[i];
  return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  const Mat2& a = *this;
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * o(0, j) + a(i, 1) * o(1, j);
  }
  return r;
}

Mat2 Mat2::operator*(complex s) const {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = m[i] * s;
  return r;
}

PureState Mat2::operator*(const PureState& v) const {
  const Mat2& a = *this;
  return {a(0, 0) * v.c0 + a(0, 1) * v.c1, a(1, 0) * v.c0 + a(1, 1) * v.c1};
}

complex expectation(const Mat2& m, const PureState& psi) { return inner(psi, m * psi); }

FieldSpec FieldSpec::constant(const Vec3& h, double h0) {
  FieldSpec f;
  f.h0_ = h0;
  f.stationary_ = true;
  f.constant_ = h;
  return f;
}

FieldSpec FieldSpec::time_varying(VectorFn field, VectorFn rate, double h0) {
  if (!field) throw Error(ErrorCode::InvalidArgument, "time-varying field needs a callable");
  FieldSpec f;
  f.h0_ = h0;
  f.stationary_ = false;
  f.field_ = std::move(field);
  f.rate_ = std::move(rate);
  return f;
}

namespace {

struct SampledField {
  std::vector<double> times;
  std::vector<Vec3> values;

  // Index k of the segment [t_k, t_k+1] containing t (clamped).
  std::size_t segment(double t) const {
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    const auto k = static_cast<std::size_t>(std::distance(times.begin(), it));
    return std::clamp<std::size_t>(k == 0 ? 0 : k - 1, 0, times.size() - 2);
  }

  Vec3 value(double t) const {
    if (times.size() == 1 || t <= times.front()) return values.front();
    if (t >= times.back()) return values.back();
    const std::size_t k = segment(t);
    const double w = (t - times[k]) / (times[k + 1] - times[k]);
    return values[k] * (1.0 - w) + values[k + 1] * w;
  }

  Vec3 slope(double t) const {
    if (times.size() == 1) return {};
    const std::size_t k = segment(t);
    return (values[k + 1] - values[k]) / (times[k + 1] - times[k]);
  }
};

}  // namespace

FieldSpec FieldSpec::sampled(std::vector<double> times, std::vector<Vec3> values, double h0) {
  if (times.empty() || times.size() != values.size()) {
    throw Error(ErrorCode::InvalidArgument, "sampled field needs matching, non-empty samples");
  }
  if (!std::is_sorted(times.begin(), times.end()) ||
      std::adjacent_find(times.begin(), times.end()) != times.end()) {
    throw Error(ErrorCode::InvalidArgument, "sampled field times must be strictly increasing");
  }
  auto data = std::make_shared<const SampledField>(SampledField{std::move(times), std::move(values)});
  return time_varying([data](double t) { return data->value(t); },
                      [data](double t) { return data->slope(t); }, h0);
}

Vec3 FieldSpec::rate(double t) const {
  if (stationary_) return {};
  if (!rate_) throw Error(ErrorCode::MissingFieldRate, "field has no dh/dt available");
  return rate_(t);
}

std::size_t AngleTrack::pole_crossings() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const TrackEvent& e) {
    return e.kind == TrackEventKind::PoleCrossing;
  }));
}

}  // namespace qgeo
