#pragma once

#include <span>

namespace qgeo {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // |fine - coarse|, coarse uses every other sample
};

/// Composite Simpson rule on an arbitrary monotone grid. Pairs of intervals
/// use the non-uniform three-point rule; an odd trailing interval is closed
/// with the matching three-point correction. Two samples fall back to the
/// trapezoid rule, one sample gives 0.
double simpson(std::span<const double> x, std::span<const double> f);

/// Simpson value plus a two-grid error estimate.
QuadratureResult simpson_with_error(std::span<const double> x, std::span<const double> f);

}  // namespace qgeo
