#pragma once

// Pure single-qubit states and their amplitude, Bloch-vector and
// spherical-angle representations. hbar = 1 throughout.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace qgeo {

using complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

/// Angle between two vectors, robust for nearly (anti)parallel inputs.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// Unit Bloch vector of a pure state (may sit inside the ball only when
/// validating user input).
using BlochVector = Vec3;

/// c0|0> + c1|1>. Constructors do not normalize; use `normalized_state`.
struct PureState {
  complex c0{1.0, 0.0};
  complex c1{0.0, 0.0};

  bool operator==(const PureState&) const = default;
};

inline complex inner(const PureState& a, const PureState& b) {
  return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}
inline double norm(const PureState& s) { return std::sqrt(std::norm(s.c0) + std::norm(s.c1)); }
PureState normalized_state(const PureState& s);

/// 1 - |<a|b>|^2 for normalized states, evaluated without cancellation via
/// |a0 b1 - a1 b0|^2.
double infidelity(const PureState& a, const PureState& b);

/// Equality up to a global phase: |<a|b>| >= 1 - tol.
bool physically_equal(const PureState& a, const PureState& b, double tol = 1e-10);

struct SphericalAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2pi); 0 at the poles
};

/// Below this sin(theta) the azimuth is a gauge choice and is set to 0.
inline constexpr double kPoleSinThreshold = 1e-12;

/// Reduce any real angle to [0, 2pi).
double wrap_two_pi(double angle);

SphericalAngles angles_from_state(const PureState& state);
BlochVector bloch_from_state(const PureState& state);
BlochVector bloch_from_angles(const SphericalAngles& angles);
PureState state_from_angles(const SphericalAngles& angles);
SphericalAngles angles_from_bloch(const BlochVector& b);
PureState state_from_bloch(const BlochVector& b);

/// Canonical angles of an unwrapped (theta, phi) pair: theta folded into
/// [0, pi] (flipping phi by pi when folding), phi reduced to [0, 2pi).
SphericalAngles canonical_angles(double theta_unwrapped, double phi_unwrapped);

/// Fubini-Study geodesic distance 2 arccos|<a|b>|, in [0, pi]. Orthogonal
/// states sit at distance pi.
double fs_geodesic_distance(const PureState& a, const PureState& b);

/// 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<complex, 4> m{};

  complex& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
  const complex& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }

  static Mat2 identity() { return Mat2{{complex{1.0}, complex{}, complex{}, complex{1.0}}}; }
  /// h0 * 1 + h . sigma
  static Mat2 hamiltonian(double h0, const Vec3& h);

  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator*(complex s) const;
  PureState operator*(const PureState& v) const;
};

/// <psi| M |psi>
complex expectation(const Mat2& m, const PureState& psi);

/// Hamiltonian H(t) = h0 * 1 + h(t) . sigma. Stationary fields return the
/// same stored vector at every t.
class FieldSpec {
 public:
  using VectorFn = std::function<Vec3(double)>;

  static FieldSpec constant(const Vec3& h, double h0 = 0.0);
  /// `rate` (dh/dt) is optional; time-varying curvature needs it.
  static FieldSpec time_varying(VectorFn field, VectorFn rate = {}, double h0 = 0.0);
  /// Piecewise-linear interpolation of sampled field values, held constant
  /// outside the sampled range. The rate is the slope of the active segment.
  static FieldSpec sampled(std::vector<double> times, std::vector<Vec3> values, double h0 = 0.0);

  double h0() const { return h0_; }
  bool stationary() const { return stationary_; }
  bool has_rate() const { return stationary_ || static_cast<bool>(rate_); }

  Vec3 field(double t) const { return stationary_ ? constant_ : field_(t); }
  /// Throws MissingFieldRate when no rate is available.
  Vec3 rate(double t) const;
  Mat2 matrix(double t) const { return Mat2::hamiltonian(h0_, field(t)); }

 private:
  FieldSpec() = default;

  double h0_ = 0.0;
  bool stationary_ = true;
  Vec3 constant_{};
  VectorFn field_;
  VectorFn rate_;
};

enum class TrackEventKind { PoleCrossing, ThetaTurn, PhiTurn };

struct TrackEvent {
  double time = 0.0;
  TrackEventKind kind = TrackEventKind::PoleCrossing;
  std::size_t sample = 0;  // sample index closest to the event
};

/// Continuous (unwrapped) spherical angles along a trajectory. At a pole
/// crossing theta_u runs past pi (or below 0) and phi_u is held.
struct AngleTrack {
  std::vector<double> times;
  std::vector<double> theta_u;
  std::vector<double> phi_u;
  std::vector<TrackEvent> events;

  std::size_t size() const { return times.size(); }
  std::size_t pole_crossings() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PureState> states;
  std::vector<BlochVector> bloch;
  AngleTrack angles;

  std::size_t size() const { return times.size(); }
  double duration() const { return times.empty() ? 0.0 : times.back() - times.front(); }
};

}  // namespace qgeo
