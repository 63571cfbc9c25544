#pragma once

// Accessed and accessible volumes of an angle track, and the complexity
// measures built on them. Areas use the sqrt(g) = sin(theta)/4 weight; the
// one-dimensional shapes use the line elements dtheta/2 and sin(theta) dphi/2.

#include <string_view>
#include <vector>

#include "qgeo/qubit.hpp"

namespace qgeo {

inline constexpr double kTotalVolume = kPi;

enum class Shape { Area2D, MeridianLine, ParallelLine, Point };

std::string_view shape_name(Shape s) noexcept;

struct VolumeReport {
  double v_bar = 0.0;
  double v_max = 0.0;
  Shape shape = Shape::Point;
  double theta_min = 0.0;
  double theta_max = 0.0;
  double phi_min = 0.0;
  double phi_max = 0.0;
  double quadrature_error = 0.0;
};

struct ComplexityReport {
  double c = 0.0;
  double l_c = 0.0;
  double s = 0.0;
  VolumeReport volume;
};

Shape classify_shape(const AngleTrack& track, double eps = 1e-9);

/// Integral of |sin x| over [lo, hi] (lo <= hi), valid for any real bounds.
double abs_sin_integral(double lo, double hi);

/// Measure of the region swept up to time t: the running bounding box of the
/// unwrapped angles seen so far, weighted for the track's shape.
double instantaneous_volume(const AngleTrack& track, double t);

/// instantaneous_volume at every sample of the track.
std::vector<double> instantaneous_volume_samples(const AngleTrack& track);

/// Time average of the instantaneous volume. Throws ZeroDuration.
double accessed_volume(const AngleTrack& track);

/// Measure of the bounding box of the whole track.
double accessible_volume(const AngleTrack& track);

VolumeReport volume_report(const AngleTrack& track);

/// (v_max - v_bar) / v_max. Throws PointTrajectory when v_max <= 1e-15.
double complexity(double v_bar, double v_max);

/// s / sqrt(1 - c). Throws MaximalComplexity when c >= 1 - 1e-12.
double complexity_length_scale(double s, double c);

ComplexityReport complexity_report(const AngleTrack& track, double s);

}  // namespace qgeo
