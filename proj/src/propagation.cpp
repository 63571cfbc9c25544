#include "qgeo/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "qgeo/error.hpp"

namespace qgeo {

void PropagationConfig::validate() const {
  if (samples < 3) throw Error(ErrorCode::InvalidArgument, "samples must be >= 3");
  if (!(integrator_step > 0.0) || !std::isfinite(integrator_step)) {
    throw Error(ErrorCode::InvalidArgument, "integrator_step must be positive");
  }
  if (!(fidelity_tol > 0.0) || fidelity_tol > 1e-4) {
    throw Error(ErrorCode::InvalidArgument, "fidelity_tol must lie in (0, 1e-4]");
  }
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t samples) {
  if (t1 < t0) throw Error(ErrorCode::InvalidArgument, "grid end precedes grid start");
  if (t1 == t0 || samples < 2) return {t0};
  std::vector<double> grid(samples);
  const double span = t1 - t0;
  const auto last = static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) grid[i] = t0 + span * (static_cast<double>(i) / last);
  grid.back() = t1;
  return grid;
}

PureState propagate_stationary(const FieldSpec& field, const PureState& psi0, double t) {
  if (!field.stationary()) {
    throw Error(ErrorCode::InvalidArgument, "rotor propagation needs a stationary field");
  }
  const Vec3 h = field.field(0.0);
  const complex global = std::polar(1.0, -field.h0() * t);
  const double mag = norm(h);
  if (mag == 0.0) return {global * psi0.c0, global * psi0.c1};

  const Vec3 n = h / mag;
  const double c = std::cos(mag * t);
  const double s = std::sin(mag * t);
  // -i s (n.sigma) psi
  const complex nsig0 = n.z * psi0.c0 + complex{n.x, -n.y} * psi0.c1;
  const complex nsig1 = complex{n.x, n.y} * psi0.c0 - n.z * psi0.c1;
  const complex mis{0.0, -s};
  return {global * (c * psi0.c0 + mis * nsig0), global * (c * psi0.c1 + mis * nsig1)};
}

Trajectory propagate_stationary_trajectory(const FieldSpec& field, const PureState& psi0,
                                           std::span<const double> times) {
  if (times.empty()) throw Error(ErrorCode::InvalidArgument, "empty time grid");
  const PureState start = normalized_state(psi0);
  std::vector<PureState> states;
  states.reserve(times.size());
  for (double t : times) states.push_back(propagate_stationary(field, start, t - times.front()));
  return make_trajectory({times.begin(), times.end()}, std::move(states));
}

namespace {

PureState axpy(const PureState& x, complex a, const PureState& y) {
  return {x.c0 + a * y.c0, x.c1 + a * y.c1};
}

}  // namespace

Trajectory propagate_numeric(const FieldSpec& field, const PureState& psi0,
                             std::span<const double> grid, const PropagationConfig& cfg) {
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty time grid");
  if (!(cfg.integrator_step > 0.0)) throw Error(ErrorCode::InvalidArgument, "integrator_step must be positive");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw Error(ErrorCode::InvalidArgument, "time grid must be monotone");
  }

  const double step = cfg.integrator_step;
  auto rhs = [&](double t, const PureState& psi) {
    const Vec3 h = field.field(t);
    if (step * norm(h) >= 0.5) {
      throw Error(ErrorCode::StepTooCoarse,
                  "integrator step " + std::to_string(step) + " does not resolve |h| = " +
                      std::to_string(norm(h)));
    }
    const PureState hpsi = Mat2::hamiltonian(field.h0(), h) * psi;
    return PureState{complex{0.0, -1.0} * hpsi.c0, complex{0.0, -1.0} * hpsi.c1};
  };

  std::vector<PureState> states;
  states.reserve(grid.size());
  PureState psi = normalized_state(psi0);
  states.push_back(psi);
  std::size_t steps_taken = 0;

  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double t0 = grid[i - 1];
    const double span = grid[i] - t0;
    if (span > 0.0) {
      const auto n = static_cast<std::size_t>(std::ceil(span / step));
      const double dt = span / static_cast<double>(n);
      for (std::size_t k = 0; k < n; ++k) {
        const double t = t0 + dt * static_cast<double>(k);
        const PureState k1 = rhs(t, psi);
        const PureState k2 = rhs(t + 0.5 * dt, axpy(psi, 0.5 * dt, k1));
        const PureState k3 = rhs(t + 0.5 * dt, axpy(psi, 0.5 * dt, k2));
        const PureState k4 = rhs(t + dt, axpy(psi, dt, k3));
        psi.c0 += dt / 6.0 * (k1.c0 + 2.0 * k2.c0 + 2.0 * k3.c0 + k4.c0);
        psi.c1 += dt / 6.0 * (k1.c1 + 2.0 * k2.c1 + 2.0 * k3.c1 + k4.c1);
        ++steps_taken;
        if (cfg.renormalize_every != 0 && steps_taken % cfg.renormalize_every == 0) {
          psi = normalized_state(psi);
        }
      }
    }
    states.push_back(psi);
  }
  return make_trajectory({grid.begin(), grid.end()}, std::move(states));
}

double travel_time(const FieldSpec& field, const PureState& psi0_in, const PureState& target_in,
                   const PropagationConfig& cfg) {
  if (!field.stationary()) {
    throw Error(ErrorCode::InvalidArgument, "travel time is defined for stationary fields");
  }
  if (!(cfg.fidelity_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "fidelity_tol must be positive");
  const Vec3 h = field.field(0.0);
  const double mag = norm(h);
  if (mag == 0.0) throw Error(ErrorCode::ZeroField, "a zero field never moves the state");

  const PureState psi0 = normalized_state(psi0_in);
  const PureState target = normalized_state(target_in);
  const Vec3 axis = h / mag;
  const double a_axis = dot(bloch_from_state(psi0), axis);
  const double b_axis = dot(bloch_from_state(target), axis);
  if (std::abs(a_axis - b_axis) > 1e-9) {
    throw Error(ErrorCode::Unreachable, "target does not lie on the precession circle of the initial state");
  }
  if (1.0 - std::abs(a_axis) < 1e-14) {
    throw Error(ErrorCode::DegenerateEvolution, "initial state is an eigenstate of the field");
  }

  // g(t) = 1 - |<target|psi(t)>|^2 = |d|^2 with d = b0 psi1 - b1 psi0; its
  // derivative follows from psi' = -i H psi.
  const Mat2 hmat = field.matrix(0.0);
  auto slope = [&](double t) {
    const PureState psi = propagate_stationary(field, psi0, t);
    const PureState hpsi = hmat * psi;
    const complex d = target.c0 * psi.c1 - target.c1 * psi.c0;
    const complex dd = complex{0.0, -1.0} * (target.c0 * hpsi.c1 - target.c1 * hpsi.c0);
    return 2.0 * (std::conj(d) * dd).real();
  };

  // The Bloch vector precesses at angular rate 2|h|, so one revolution takes
  // pi/|h|; fidelity along it is a single sinusoid in t.
  const double period = kPi / mag;
  constexpr int kBracketPoints = 720;
  const double dt = period / kBracketPoints;

  std::optional<std::pair<double, double>> bracket;
  double prev = slope(0.0);
  const bool starts_on_target = infidelity(target, psi0) < 1e-24;
  for (int k = 1; k <= kBracketPoints + 1; ++k) {
    const double t = dt * k;
    const double cur = slope(t);
    const bool usable = k > 1 || !starts_on_target;
    if (usable && prev < 0.0 && cur >= 0.0) {
      bracket = {t - dt, t};
      break;
    }
    prev = cur;
  }
  if (!bracket) throw Error(ErrorCode::NeverReached, "no fidelity maximum within one precession period");

  auto [lo, hi] = *bracket;
  for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (slope(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t_star = 0.5 * (lo + hi);
  const double fidelity = std::abs(inner(target, propagate_stationary(field, psi0, t_star)));
  if (fidelity < 1.0 - std::sqrt(cfg.fidelity_tol)) {
    throw Error(ErrorCode::NeverReached,
                "best fidelity over one period is " + std::to_string(fidelity));
  }
  return t_star;
}

namespace {

// Representative of `value` + 2 pi k closest to `reference`.
double nearest_branch(double value, double reference) {
  return value + kTwoPi * std::round((reference - value) / kTwoPi);
}

// Direction reversals of a sampled coordinate, ignoring wiggles below `hysteresis`.
void find_turns(const std::vector<double>& v, const std::vector<double>& times, TrackEventKind kind,
                double hysteresis, std::vector<TrackEvent>& out) {
  if (v.size() < 3) return;
  int dir = 0;
  double extreme = v.front();
  std::size_t extreme_at = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double x = v[i];
    if (dir == 0) {
      if (std::abs(x - v.front()) > hysteresis) {
        dir = x > v.front() ? 1 : -1;
        extreme = x;
        extreme_at = i;
      }
      continue;
    }
    if ((dir > 0 && x > extreme) || (dir < 0 && x < extreme)) {
      extreme = x;
      extreme_at = i;
    } else if (std::abs(extreme - x) > hysteresis) {
      out.push_back({times[extreme_at], kind, extreme_at});
      dir = -dir;
      extreme = x;
      extreme_at = i;
    }
  }
}

constexpr double kPoleEventSin = 1e-6;

void find_pole_events(const AngleTrack& track, std::vector<TrackEvent>& out) {
  struct Candidate {
    double time;
    long level;
    std::size_t sample;
    bool interpolated;
  };
  std::vector<Candidate> found;
  const auto& th = track.theta_u;
  for (std::size_t i = 0; i < th.size(); ++i) {
    const auto level = static_cast<long>(std::lround(th[i] / kPi));
    if (std::abs(std::sin(th[i])) < kPoleEventSin) {
      found.push_back({track.times[i], level, i, false});
    }
    if (i == 0) continue;
    for (long m : {static_cast<long>(std::lround(th[i - 1] / kPi)), level}) {
      const double d0 = th[i - 1] - kPi * static_cast<double>(m);
      const double d1 = th[i] - kPi * static_cast<double>(m);
      if (d0 * d1 < 0.0) {
        const double w = d0 / (d0 - d1);
        const double t = track.times[i - 1] + w * (track.times[i] - track.times[i - 1]);
        found.push_back({t, m, w < 0.5 ? i - 1 : i, true});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    return a.sample != b.sample ? a.sample < b.sample : a.interpolated > b.interpolated;
  });
  // One event per contiguous visit to a given pole.
  std::vector<Candidate> merged;
  for (const auto& c : found) {
    if (!merged.empty() && merged.back().level == c.level && c.sample <= merged.back().sample + 1) {
      if (c.interpolated && !merged.back().interpolated) merged.back() = c;
      else merged.back().sample = std::max(merged.back().sample, c.sample);
      continue;
    }
    merged.push_back(c);
  }
  for (const auto& c : merged) out.push_back({c.time, TrackEventKind::PoleCrossing, c.sample});
}

}  // namespace

AngleTrack unwrap_angles(const Trajectory& traj) {
  AngleTrack track;
  const std::size_t n = traj.size();
  track.times = traj.times;
  if (n == 0) return track;

  std::vector<SphericalAngles> canon(n);
  for (std::size_t i = 0; i < n; ++i) canon[i] = angles_from_state(traj.states[i]);

  for (std::size_t i = 1; i < n; ++i) {
    const BlochVector a = bloch_from_state(traj.states[i - 1]);
    const BlochVector b = bloch_from_state(traj.states[i]);
    if (angle_between(a, b) >= kPi / 4.0) {
      throw Error(ErrorCode::GridTooCoarse,
                  "consecutive Bloch vectors subtend more than pi/4 at sample " + std::to_string(i));
    }
  }

  auto at_pole = [](const SphericalAngles& a) { return std::sin(a.theta) < kPoleSinThreshold; };

  track.theta_u.resize(n);
  track.phi_u.resize(n);
  track.theta_u[0] = canon[0].theta;
  track.phi_u[0] = canon[0].phi;
  if (at_pole(canon[0])) {
    // Leave the pole along the azimuth the trajectory actually takes.
    const auto first = std::find_if(canon.begin(), canon.end(), [&](const auto& a) { return !at_pole(a); });
    if (first != canon.end()) track.phi_u[0] = first->phi;
  }

  for (std::size_t i = 1; i < n; ++i) {
    const double theta_prev = track.theta_u[i - 1];
    const double phi_prev = track.phi_u[i - 1];
    const SphericalAngles& c = canon[i];

    double theta = 0.0;
    double phi = phi_prev;
    if (at_pole(c)) {
      const double up = nearest_branch(c.theta, theta_prev);
      const double down = nearest_branch(-c.theta, theta_prev);
      theta = std::abs(up - theta_prev) <= std::abs(down - theta_prev) ? up : down;
    } else {
      // Same point, two charts: (theta, phi) or (-theta, phi + pi). Passing
      // through a pole shows up as the second chart being continuous.
      const double theta_a = nearest_branch(c.theta, theta_prev);
      const double phi_a = nearest_branch(c.phi, phi_prev);
      const double theta_b = nearest_branch(-c.theta, theta_prev);
      const double phi_b = nearest_branch(c.phi + kPi, phi_prev);
      const double cost_a = std::pow(theta_a - theta_prev, 2) + std::pow(phi_a - phi_prev, 2);
      const double cost_b = std::pow(theta_b - theta_prev, 2) + std::pow(phi_b - phi_prev, 2);
      if (cost_b < cost_a) {
        theta = theta_b;
        phi = phi_b;
      } else {
        theta = theta_a;
        phi = phi_a;
      }
    }

    const double weight = std::max(std::abs(std::sin(theta)), std::abs(std::sin(theta_prev)));
    if (std::abs(theta - theta_prev) >= kPi / 2.0 || weight * std::abs(phi - phi_prev) >= kPi / 2.0) {
      throw Error(ErrorCode::GridTooCoarse, "angle track is discontinuous at sample " + std::to_string(i));
    }
    track.theta_u[i] = theta;
    track.phi_u[i] = phi;
  }

  find_pole_events(track, track.events);
  find_turns(track.theta_u, track.times, TrackEventKind::ThetaTurn, 1e-9, track.events);
  find_turns(track.phi_u, track.times, TrackEventKind::PhiTurn, 1e-9, track.events);
  std::stable_sort(track.events.begin(), track.events.end(),
                   [](const TrackEvent& a, const TrackEvent& b) { return a.time < b.time; });
  return track;
}

Trajectory make_trajectory(std::vector<double> times, std::vector<PureState> states) {
  if (times.size() != states.size()) {
    throw Error(ErrorCode::InvalidArgument, "times and states differ in length");
  }
  Trajectory traj;
  traj.times = std::move(times);
  traj.states = std::move(states);
  traj.bloch.reserve(traj.states.size());
  for (const auto& s : traj.states) traj.bloch.push_back(bloch_from_state(s));
  traj.angles = unwrap_angles(traj);
  return traj;
}

}  // namespace qgeo
