#pragma once

#include <string>

namespace qgeo {

/// Closed form such as "pi/(4*sqrt(2))" when value lies within 1e-9 of
/// (p/q) * base for base in {1, sqrt2, 1/sqrt2, pi, pi*sqrt2, pi/sqrt2},
/// q in {1, 2, 3, 4, 8} and |p| <= 32. Smaller q wins. Empty when none fits.
std::string symbolic(double value);

}  // namespace qgeo
