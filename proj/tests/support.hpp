#pragma once

// Random generators and independent reference computations shared by tests.

#include <cmath>
#include <complex>
#include <random>

#include "qgeo/qubit.hpp"

namespace testing {

using qgeo::complex;
using qgeo::PureState;
using qgeo::Vec3;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234abcdULL);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Vec3 random_unit() {
  std::normal_distribution<double> n;
  for (;;) {
    const Vec3 v{n(rng()), n(rng()), n(rng())};
    const double r = qgeo::norm(v);
    if (r > 1e-3) return v / r;
  }
}

inline PureState random_state() {
  std::normal_distribution<double> n;
  for (;;) {
    const PureState s{{n(rng()), n(rng())}, {n(rng()), n(rng())}};
    const double r = qgeo::norm(s);
    if (r > 1e-3) return {s.c0 / r, s.c1 / r};
  }
}

inline Vec3 random_field(double lo = 0.2, double hi = 3.0) { return random_unit() * uniform(lo, hi); }

/// exp(-i H t) psi by scaling and squaring a truncated Taylor series.
inline PureState expm_apply(double h0, const Vec3& h, double t, const PureState& psi) {
  const complex mi{0.0, -1.0};
  complex a[2][2] = {{mi * t * (h0 + h.z), mi * t * complex{h.x, -h.y}},
                     {mi * t * complex{h.x, h.y}, mi * t * (h0 - h.z)}};
  int squarings = 0;
  const double size = std::abs(t) * (std::abs(h0) + qgeo::norm(h));
  while (size / std::ldexp(1.0, squarings) > 0.25) ++squarings;
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& row : a)
    for (auto& x : row) x *= scale;
  complex u[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
  complex term[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
  for (int k = 1; k < 30; ++k) {
    complex next[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) next[i][j] = (term[i][0] * a[0][j] + term[i][1] * a[1][j]) / double(k);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        term[i][j] = next[i][j];
        u[i][j] += term[i][j];
      }
  }
  for (int s = 0; s < squarings; ++s) {
    complex sq[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sq[i][j] = u[i][0] * u[0][j] + u[i][1] * u[1][j];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) u[i][j] = sq[i][j];
  }
  return {u[0][0] * psi.c0 + u[0][1] * psi.c1, u[1][0] * psi.c0 + u[1][1] * psi.c1};
}

/// Bloch vector from the density matrix |psi><psi| traced against Paulis.
inline Vec3 bloch_reference(const PureState& s) {
  const double n = std::norm(s.c0) + std::norm(s.c1);
  const complex rho01 = s.c0 * std::conj(s.c1);
  return Vec3{2.0 * rho01.real(), -2.0 * rho01.imag(), std::norm(s.c0) - std::norm(s.c1)} / n;
}

/// Largest |eigenvalue| of h0 + h.sigma from the 2x2 characteristic polynomial.
inline double spectral_norm_reference(double h0, const Vec3& h) {
  const double tr = 2.0 * h0;
  const double det = h0 * h0 - qgeo::dot(h, h);
  const double disc = std::sqrt(tr * tr / 4.0 - det);
  return std::max(std::abs(tr / 2.0 + disc), std::abs(tr / 2.0 - disc));
}

inline double fidelity(const PureState& a, const PureState& b) { return std::abs(qgeo::inner(a, b)); }

}  // namespace testing
