#include "qgeo/format.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace qgeo {

namespace {

struct Base {
  double value;
  const char* num;
  const char* den;  // empty when the base has no denominator
};

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPiV = std::numbers::pi;

constexpr std::array<Base, 6> kBases = {{{1.0, "1", ""},
                                         {kSqrt2, "sqrt(2)", ""},
                                         {1.0 / kSqrt2, "1", "sqrt(2)"},
                                         {kPiV, "pi", ""},
                                         {kPiV * kSqrt2, "pi*sqrt(2)", ""},
                                         {kPiV / kSqrt2, "pi", "sqrt(2)"}}};

std::string render(int p, int q, const Base& b) {
  const std::string num = b.num;
  const std::string den = b.den;
  std::string top;
  if (p == 1) top = num;
  else if (p == -1) top = "-" + num;
  else top = num == "1" ? std::to_string(p) : std::to_string(p) + "*" + num;

  std::string bottom;
  if (q == 1) bottom = den;
  else bottom = den.empty() ? std::to_string(q) : "(" + std::to_string(q) + "*" + den + ")";
  return bottom.empty() ? top : top + "/" + bottom;
}

int gcd(int a, int b) { return b == 0 ? (a < 0 ? -a : a) : gcd(b, a % b); }

}  // namespace

std::string symbolic(double value) {
  if (!std::isfinite(value)) return {};
  if (std::abs(value) <= 1e-9) return "0";
  for (int q : {1, 2, 3, 4, 8}) {
    for (const Base& b : kBases) {
      const double p_real = value * q / b.value;
      const double p = std::round(p_real);
      if (p == 0.0 || std::abs(p) > 32.0) continue;
      if (gcd(static_cast<int>(p), q) != 1) continue;  // reached with a smaller q already
      if (std::abs(value - p / q * b.value) <= 1e-9) return render(static_cast<int>(p), q, b);
    }
  }
  return {};
}

}  // namespace qgeo
