#include "qgeo/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qgeo/error.hpp"
#include "qgeo/quadrature.hpp"

namespace qgeo {

std::string_view shape_name(Shape s) noexcept {
  switch (s) {
    case Shape::Area2D: return "area";
    case Shape::MeridianLine: return "meridian";
    case Shape::ParallelLine: return "parallel";
    case Shape::Point: return "point";
  }
  return "unknown";
}

Shape classify_shape(const AngleTrack& track, double eps) {
  if (track.size() == 0) return Shape::Point;
  const auto [tlo, thi] = std::minmax_element(track.theta_u.begin(), track.theta_u.end());
  const auto [plo, phi] = std::minmax_element(track.phi_u.begin(), track.phi_u.end());
  const bool flat_theta = *thi - *tlo < eps;
  const bool flat_phi = *phi - *plo < eps;
  if (flat_theta && flat_phi) return Shape::Point;
  if (flat_phi) return Shape::MeridianLine;
  if (flat_theta) return Shape::ParallelLine;
  return Shape::Area2D;
}

namespace {

// Antiderivative of |sin x|.
double abs_sin_primitive(double x) {
  const double k = std::floor(x / kPi);
  return 2.0 * k + 1.0 - std::cos(x - k * kPi);
}

struct Box {
  double theta_lo, theta_hi, phi_lo, phi_hi;

  void include(double theta, double phi) {
    theta_lo = std::min(theta_lo, theta);
    theta_hi = std::max(theta_hi, theta);
    phi_lo = std::min(phi_lo, phi);
    phi_hi = std::max(phi_hi, phi);
  }
};

struct Measure {
  Shape shape;
  double parallel_sin;  // |sin| of the mean polar angle, ParallelLine only

  double operator()(const Box& b) const {
    switch (shape) {
      case Shape::Area2D: return 0.25 * abs_sin_integral(b.theta_lo, b.theta_hi) * (b.phi_hi - b.phi_lo);
      case Shape::MeridianLine: return 0.5 * (b.theta_hi - b.theta_lo);
      case Shape::ParallelLine: return 0.5 * parallel_sin * (b.phi_hi - b.phi_lo);
      case Shape::Point: return 0.0;
    }
    return 0.0;
  }
};

Measure measure_for(const AngleTrack& track) {
  const Shape shape = classify_shape(track);
  double mean_theta = 0.0;
  if (track.size() > 0) {
    mean_theta = std::accumulate(track.theta_u.begin(), track.theta_u.end(), 0.0) /
                 static_cast<double>(track.size());
  }
  return {shape, std::abs(std::sin(mean_theta))};
}

Box start_box(const AngleTrack& track) {
  return {track.theta_u[0], track.theta_u[0], track.phi_u[0], track.phi_u[0]};
}

}  // namespace

double abs_sin_integral(double lo, double hi) {
  if (hi < lo) std::swap(lo, hi);
  return abs_sin_primitive(hi) - abs_sin_primitive(lo);
}

double instantaneous_volume(const AngleTrack& track, double t) {
  if (track.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty angle track");
  if (t < track.times.front() || t > track.times.back()) {
    throw Error(ErrorCode::InvalidArgument, "time outside the track");
  }
  const Measure measure = measure_for(track);
  Box box = start_box(track);
  std::size_t i = 1;
  for (; i < track.size() && track.times[i] <= t; ++i) box.include(track.theta_u[i], track.phi_u[i]);
  if (i < track.size() && track.times[i - 1] < t) {
    const double w = (t - track.times[i - 1]) / (track.times[i] - track.times[i - 1]);
    box.include(track.theta_u[i - 1] + w * (track.theta_u[i] - track.theta_u[i - 1]),
                track.phi_u[i - 1] + w * (track.phi_u[i] - track.phi_u[i - 1]));
  }
  return measure(box);
}

std::vector<double> instantaneous_volume_samples(const AngleTrack& track) {
  std::vector<double> v(track.size());
  if (track.size() == 0) return v;
  const Measure measure = measure_for(track);
  Box box = start_box(track);
  for (std::size_t i = 0; i < track.size(); ++i) {
    box.include(track.theta_u[i], track.phi_u[i]);
    v[i] = measure(box);
  }
  return v;
}

namespace {

struct Averaged {
  double value;
  double error;
};

Averaged average_volume(const AngleTrack& track) {
  if (track.size() < 2 || !(track.times.back() - track.times.front() > 0.0)) {
    throw Error(ErrorCode::ZeroDuration, "accessed volume needs a positive duration");
  }
  const auto v = instantaneous_volume_samples(track);
  const QuadratureResult q = simpson_with_error(track.times, v);
  const double duration = track.times.back() - track.times.front();
  return {q.value / duration, q.error / duration};
}

}  // namespace

double accessed_volume(const AngleTrack& track) { return average_volume(track).value; }

double accessible_volume(const AngleTrack& track) {
  if (track.size() == 0) return 0.0;
  const Measure measure = measure_for(track);
  Box box = start_box(track);
  for (std::size_t i = 1; i < track.size(); ++i) box.include(track.theta_u[i], track.phi_u[i]);
  return measure(box);
}

VolumeReport volume_report(const AngleTrack& track) {
  VolumeReport r;
  const Averaged avg = average_volume(track);
  r.v_bar = avg.value;
  r.quadrature_error = avg.error;
  r.v_max = accessible_volume(track);
  r.shape = classify_shape(track);
  const auto [tlo, thi] = std::minmax_element(track.theta_u.begin(), track.theta_u.end());
  const auto [plo, phi] = std::minmax_element(track.phi_u.begin(), track.phi_u.end());
  r.theta_min = *tlo;
  r.theta_max = *thi;
  r.phi_min = *plo;
  r.phi_max = *phi;
  return r;
}

double complexity(double v_bar, double v_max) {
  if (!(v_max > 1e-15)) throw Error(ErrorCode::PointTrajectory, "accessible volume vanishes");
  return std::clamp((v_max - v_bar) / v_max, 0.0, 1.0);
}

double complexity_length_scale(double s, double c) {
  if (s < 0.0 || c < 0.0) throw Error(ErrorCode::InvalidArgument, "length and complexity must be non-negative");
  if (c >= 1.0 - 1e-12) throw Error(ErrorCode::MaximalComplexity, "complexity is 1; length scale diverges");
  return s / std::sqrt(1.0 - c);
}

ComplexityReport complexity_report(const AngleTrack& track, double s) {
  ComplexityReport r;
  r.volume = volume_report(track);
  r.s = s;
  r.c = complexity(r.volume.v_bar, r.volume.v_max);
  r.l_c = complexity_length_scale(s, r.c);
  return r;
}

}  // namespace qgeo
