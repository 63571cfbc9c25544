#pragma once

// Flat `key = value` run configuration.
//
//   initial.c0_re / c0_im / c1_re / c1_im    or  initial.theta / initial.phi
//   target.*                                 same forms
//   hamiltonian.h0 / hx / hy / hz            constant field
//   hamiltonian.family.a_hat = x, y, z       family field (with b_hat, alpha,
//   hamiltonian.family.b_hat = x, y, z         energy)
//   t_end = <number> | auto
//   samples = <int>
//   format = table | csv | json
//   sweep.alpha = a1, a2, ...                or  sweep.alpha_range = start, stop, count
//
// Numbers are arithmetic expressions over literals, `pi` and `sqrt(...)`,
// e.g. `3*pi/4` or `sqrt(2+sqrt(2))/2`. `#` starts a comment.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgeo/scenarios.hpp"

namespace qgeo {

struct RunConfig {
  Evolution evolution;
  std::optional<FamilySpec> family;
  std::vector<double> sweep_alphas;
  std::optional<std::size_t> samples;
  std::optional<std::string> format;
};

/// Throws InvalidConfig naming the offending key, or DegeneratePair.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Evaluates a numeric expression as accepted in config values.
double parse_number(std::string_view text);

}  // namespace qgeo
