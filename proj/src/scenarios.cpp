#include "qgeo/scenarios.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "qgeo/curvature.hpp"
#include "qgeo/error.hpp"
#include "qgeo/geometry.hpp"
#include "qgeo/quadrature.hpp"

namespace qgeo {

Vec3 family_axis(const BlochVector& a_in, const BlochVector& b_in, double alpha) {
  if (!(norm(a_in) > 0.0) || !(norm(b_in) > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "Bloch vectors must be non-zero");
  }
  const Vec3 a = normalized(a_in);
  const Vec3 b = normalized(b_in);
  const Vec3 sum = a + b;
  const Vec3 perp = cross(a, b);
  if (norm(perp) <= 1e-12 || norm(sum) <= 1e-12) {
    throw Error(ErrorCode::DegeneratePair, "source and target Bloch vectors are parallel or antiparallel");
  }
  return std::cos(alpha) * normalized(sum) + std::sin(alpha) * normalized(perp);
}

FieldSpec family_hamiltonian(const FamilySpec& spec) {
  if (!(spec.energy > 0.0) || !std::isfinite(spec.energy)) {
    throw Error(ErrorCode::InvalidArgument, "family energy must be positive");
  }
  if (!(spec.alpha >= -1e-12 && spec.alpha <= kPi + 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, pi]");
  }
  return FieldSpec::constant(spec.energy * family_axis(spec.a_hat, spec.b_hat, spec.alpha));
}

Evaluation evaluate(const Evolution& evo, const PropagationConfig& cfg) {
  cfg.validate();
  const PureState psi0 = normalized_state(evo.initial);
  const FieldSpec& field = evo.field;

  double duration = 0.0;
  if (evo.t_end) {
    duration = *evo.t_end;
    if (!std::isfinite(duration) || duration < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "t_end must be a non-negative number");
    }
  } else {
    if (!evo.target) throw Error(ErrorCode::InvalidArgument, "automatic duration needs a target state");
    duration = travel_time(field, psi0, normalized_state(*evo.target), cfg);
  }
  if (duration == 0.0) throw Error(ErrorCode::ZeroDuration, "evolution has zero duration");

  Evaluation out;
  const auto grid = uniform_grid(0.0, duration, cfg.samples);
  out.trajectory = field.stationary() ? propagate_stationary_trajectory(field, psi0, grid)
                                      : propagate_numeric(field, psi0, grid, cfg);
  const Trajectory& traj = out.trajectory;

  MetricReport& r = out.report;
  r.name = evo.name;
  r.travel_time = duration;

  const EfficiencyProfile eff = efficiency_profile(psi0, traj.states.back(), traj, field);
  r.s0 = eff.s0;
  r.s = eff.s;
  r.eta_ge = eff.eta_ge;
  r.eta_se_min = eff.eta_se_min;
  r.eta_se_max = eff.eta_se_max;
  r.eta_se_mean = eff.eta_se_mean;

  if (field.stationary()) {
    r.kappa2 = curvature_stationary(traj.bloch.front(), field);
  } else {
    std::vector<double> k2;
    k2.reserve(traj.size());
    for (const auto& sample : curvature_profile(traj, field)) k2.push_back(sample.kappa2);
    r.kappa2 = simpson(traj.times, k2) / duration;
  }

  const ComplexityReport cx = complexity_report(traj.angles, r.s);
  r.v_bar = cx.volume.v_bar;
  r.v_max = cx.volume.v_max;
  r.c = cx.c;
  r.l_c = cx.l_c;
  r.shape = cx.volume.shape;
  r.theta_min = cx.volume.theta_min;
  r.theta_max = cx.volume.theta_max;
  r.phi_min = cx.volume.phi_min;
  r.phi_max = cx.volume.phi_max;
  r.quadrature_error = std::max(eff.quadrature_error, cx.volume.quadrature_error);
  for (const auto& e : traj.angles.events) {
    if (e.kind == TrackEventKind::PoleCrossing) r.pole_times.push_back(e.time);
  }
  out.v_instant = instantaneous_volume_samples(traj.angles);
  return out;
}

MetricReport evaluate_report(const Evolution& evo, const PropagationConfig& cfg) {
  return evaluate(evo, cfg).report;
}

namespace {

constexpr std::array<std::string_view, 7> kFixtureNames = {
    "fig4-AB", "fig4-BC", "fig4-CA", "fig5-AB-opt", "fig5-AB-sub", "fig5-CD-opt", "fig5-CD-sub"};

}  // namespace

std::span<const std::string_view> fixture_names() noexcept { return kFixtureNames; }

Evolution fixture(std::string_view name) {
  const double s = 1.0 / std::sqrt(2.0);
  const complex i{0.0, 1.0};
  // cos(pi/8) and sin(pi/8)
  const double rp = std::sqrt(2.0 + std::sqrt(2.0)) / 2.0;
  const double rm = std::sqrt(2.0 - std::sqrt(2.0)) / 2.0;
  constexpr double E = 1.0;

  const PureState plus_x{s, s};
  const PureState plus_y{s, s * i};
  const PureState up{1.0, 0.0};
  const PureState a5{rp, -i * rm};
  const PureState b5{rp, i * rm};
  const PureState c5{rm, i * rp};
  const PureState d5{rm, -i * rp};

  auto make = [&](const PureState& from, const PureState& to, Vec3 h) {
    return Evolution{std::string(name), from, to, FieldSpec::constant(h), std::nullopt};
  };
  if (name == "fig4-AB") return make(plus_x, plus_y, {0.0, 0.0, E});
  if (name == "fig4-BC") return make(plus_y, up, {E, 0.0, 0.0});
  if (name == "fig4-CA") return make(up, plus_x, {0.0, E, 0.0});
  if (name == "fig5-AB-opt") return make(a5, b5, {-E, 0.0, 0.0});
  if (name == "fig5-AB-sub") return make(a5, b5, {0.0, 0.0, E});
  if (name == "fig5-CD-opt") return make(c5, d5, {-E, 0.0, 0.0});
  if (name == "fig5-CD-sub") return make(c5, d5, {0.0, 0.0, -E});
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

MetricReport run_fixture(std::string_view name, const PropagationConfig& cfg) {
  return evaluate_report(fixture(name), cfg);
}

SweepResult sweep_alpha(std::span<const double> alphas_in, const BlochVector& a_hat, const BlochVector& b_hat,
                        double energy, const PropagationConfig& cfg, unsigned threads) {
  if (alphas_in.empty()) throw Error(ErrorCode::InvalidArgument, "alpha grid is empty");
  std::vector<double> alphas(alphas_in.begin(), alphas_in.end());
  std::sort(alphas.begin(), alphas.end());
  // Surface a degenerate pair before spawning any work.
  family_axis(a_hat, b_hat, alphas.front());
  const PureState from = state_from_bloch(a_hat);
  const PureState to = state_from_bloch(b_hat);

  SweepResult result;
  result.points.resize(alphas.size());
  std::vector<std::exception_ptr> failures(alphas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < alphas.size(); k = next++) {
      try {
        const FieldSpec field = family_hamiltonian({a_hat, b_hat, alphas[k], energy});
        Evolution evo{"alpha", from, to, field, std::nullopt};
        result.points[k] = {alphas[k], evaluate_report(evo, cfg)};
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, alphas.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Report the failure of the smallest alpha so errors are deterministic too.
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  for (std::size_t k = 1; k < result.points.size(); ++k) {
    if (result.points[k].report.travel_time < result.points[result.argmin].report.travel_time) result.argmin = k;
  }
  return result;
}

}  // namespace qgeo
