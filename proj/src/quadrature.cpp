#include "qgeo/quadrature.hpp"

#include <cmath>
#include <vector>

#include "qgeo/error.hpp"

namespace qgeo {

namespace {

double pair_rule(double h0, double h1, double f0, double f1, double f2) {
  const double sum = h0 + h1;
  return sum / 6.0 * ((2.0 - h1 / h0) * f0 + sum * sum / (h0 * h1) * f1 + (2.0 - h0 / h1) * f2);
}

// Integral over the last interval [x1, x2] of the parabola through three points.
double tail_rule(double h1, double h2, double f0, double f1, double f2) {
  return f2 * (2.0 * h2 * h2 + 3.0 * h1 * h2) / (6.0 * (h1 + h2)) +
         f1 * (h2 * h2 + 3.0 * h1 * h2) / (6.0 * h1) - f0 * h2 * h2 * h2 / (6.0 * h1 * (h1 + h2));
}

}  // namespace

double simpson(std::span<const double> x, std::span<const double> f) {
  if (x.size() != f.size()) throw Error(ErrorCode::InvalidArgument, "abscissae and values differ in length");
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * (x[1] - x[0]) * (f[0] + f[1]);

  double total = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const double h0 = x[i + 1] - x[i];
    const double h1 = x[i + 2] - x[i + 1];
    if (h0 <= 0.0 || h1 <= 0.0) {
      if (h0 < 0.0 || h1 < 0.0) throw Error(ErrorCode::InvalidArgument, "grid must be increasing");
      // repeated abscissae contribute nothing
      total += 0.5 * (h0 * (f[i] + f[i + 1]) + h1 * (f[i + 1] + f[i + 2]));
      continue;
    }
    total += pair_rule(h0, h1, f[i], f[i + 1], f[i + 2]);
  }
  if (i + 1 < n) {
    const double h1 = x[n - 2] - x[n - 3];
    const double h2 = x[n - 1] - x[n - 2];
    if (h1 > 0.0 && h2 > 0.0) {
      total += tail_rule(h1, h2, f[n - 3], f[n - 2], f[n - 1]);
    } else {
      total += 0.5 * h2 * (f[n - 2] + f[n - 1]);
    }
  }
  return total;
}

QuadratureResult simpson_with_error(std::span<const double> x, std::span<const double> f) {
  QuadratureResult r;
  r.value = simpson(x, f);
  if (x.size() < 5) return r;
  std::vector<double> xc;
  std::vector<double> fc;
  xc.reserve(x.size() / 2 + 2);
  fc.reserve(x.size() / 2 + 2);
  for (std::size_t i = 0; i < x.size(); i += 2) {
    xc.push_back(x[i]);
    fc.push_back(f[i]);
  }
  if (xc.back() != x.back()) {
    xc.push_back(x.back());
    fc.push_back(f.back());
  }
  r.error = std::abs(r.value - simpson(xc, fc));
  return r;
}

}  // namespace qgeo
