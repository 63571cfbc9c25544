#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qgeo/config.hpp"
#include "qgeo/error.hpp"
#include "qgeo/format.hpp"
#include "support.hpp"

using namespace qgeo;
using doctest::Approx;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kAbSub = R"(
# tilted pair, field along z
initial.c0_re = sqrt(2+sqrt(2))/2
initial.c1_im = -sqrt(2-sqrt(2))/2
target.theta = pi/4
target.phi = pi/2
hamiltonian.hz = 1
t_end = auto
)";

}  // namespace

TEST_CASE("number expressions") {
  CHECK(parse_number("1.5") == 1.5);
  CHECK(parse_number("pi") == Approx(kPi));
  CHECK(parse_number("3*pi/4") == Approx(3 * kPi / 4));
  CHECK(parse_number(" -pi/2 ") == Approx(-kPi / 2));
  CHECK(parse_number("pi/sqrt(2)") == Approx(kPi / std::sqrt(2.0)));
  CHECK(parse_number("1e-3") == Approx(1e-3));
  CHECK_THROWS(parse_number("abc"));
  CHECK_THROWS(parse_number(""));
  CHECK_THROWS(parse_number("sqrt(2"));
  CHECK_THROWS(parse_number("sqrt(-1)"));
  CHECK_THROWS(parse_number("1 +"));
}

TEST_CASE("sums, parentheses and nested roots") {
  CHECK(parse_number("sqrt(2+sqrt(2))/2") == Approx(std::cos(kPi / 8)).epsilon(1e-15));
  CHECK(parse_number("(1 + 2) * 3 - 4/2") == Approx(7.0));
  CHECK(parse_number("--2") == 2.0);
  CHECK_THROWS(parse_number("2 pi"));
}

TEST_CASE("config equivalent to a fixture") {
  const auto cfg = parse_config(kAbSub);
  const auto a = evaluate_report(cfg.evolution);
  const auto b = run_fixture("fig5-AB-sub");
  CHECK(a.travel_time == Approx(b.travel_time).epsilon(1e-12));
  CHECK(a.s == Approx(b.s).epsilon(1e-12));
  CHECK(a.c == Approx(b.c).epsilon(1e-12));
  CHECK(a.l_c == Approx(b.l_c).epsilon(1e-12));
  CHECK(a.kappa2 == Approx(b.kappa2).epsilon(1e-12));
}

TEST_CASE("family config and sweep grids") {
  const auto cfg = parse_config(R"(
hamiltonian.family.a_hat = 1, 0, 0
hamiltonian.family.b_hat = 0, 1, 0
hamiltonian.family.energy = 2
sweep.alpha_range = 0, pi, 5
samples = 513
format = json
)");
  REQUIRE(cfg.family);
  CHECK(cfg.family->energy == 2.0);
  REQUIRE(cfg.sweep_alphas.size() == 5);
  CHECK(cfg.sweep_alphas[2] == Approx(kPi / 2));
  CHECK(cfg.samples == 513u);
  CHECK(cfg.format == "json");
  CHECK(physically_equal(cfg.evolution.initial, state_from_bloch({1, 0, 0})));

  const auto list = parse_config("hamiltonian.family.a_hat = 1,0,0\nhamiltonian.family.b_hat = 0,1,0\nsweep.alpha = pi/2, 0\n");
  CHECK(list.sweep_alphas.size() == 2);
}

TEST_CASE("validation errors name the field") {
  CHECK(code_of([] { parse_config("initial.theta = 1\n"); }) == ErrorCode::InvalidConfig);
  CHECK(message_of([] { parse_config("initial.theta = 1\n"); }).find("hamiltonian") != std::string::npos);
  CHECK(message_of([] { parse_config("bogus.key = 1\n"); }).find("bogus.key") != std::string::npos);
  CHECK(message_of([] { parse_config("hamiltonian.hz = x\ninitial.theta = 1\n"); }).find("hamiltonian.hz") !=
        std::string::npos);
  CHECK(message_of([] { parse_config("hamiltonian.hz = 1\ninitial.theta = 1\n"); }).find("t_end") !=
        std::string::npos);
  CHECK(message_of([] { parse_config("hamiltonian.hz = 1\nhamiltonian.family.alpha = 1\n"); }).find("hamiltonian") !=
        std::string::npos);
  CHECK(code_of([] { parse_config("hamiltonian.hz = 1\ninitial.theta = 1\nt_end = 1\nsamples = 2\n"); }) ==
        ErrorCode::InvalidConfig);
  CHECK(code_of([] { parse_config("hamiltonian.hz = 1\ninitial.theta = 1\nt_end = 1\nformat = xml\n"); }) ==
        ErrorCode::InvalidConfig);
  CHECK(code_of([] { parse_config("hamiltonian.hz = 1\ninitial.theta = 1\ninitial.c0_re = 1\nt_end = 1\n"); }) ==
        ErrorCode::InvalidConfig);
  CHECK(code_of([] { parse_config("hamiltonian.hz = 1\nhamiltonian.hz = 2\n"); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { parse_config("no equals sign\n"); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { parse_config("hamiltonian.family.a_hat = 1,0,0\nhamiltonian.family.b_hat = 0,1,0\nsweep.alpha =\n"); }) ==
        ErrorCode::InvalidConfig);
}

TEST_CASE("degenerate family pair") {
  CHECK(code_of([] {
          parse_config("hamiltonian.family.a_hat = 0,0,1\nhamiltonian.family.b_hat = 0,0,2\nhamiltonian.family.alpha = 1\n");
        }) == ErrorCode::DegeneratePair);
}

TEST_CASE("zero duration is a numerical failure, not a config error") {
  const auto cfg = parse_config("hamiltonian.hz = 1\ninitial.theta = pi/2\nt_end = 0\n");
  CHECK(code_of([&] { evaluate_report(cfg.evolution); }) == ErrorCode::ZeroDuration);
  CHECK_FALSE(is_usage_error(ErrorCode::ZeroDuration));
  CHECK(is_usage_error(ErrorCode::InvalidConfig));
}

TEST_CASE("amplitudes are normalized") {
  const auto cfg = parse_config("initial.c0_re = 3\ninitial.c1_im = 4\nhamiltonian.hx = 1\nt_end = 1\n");
  CHECK(cfg.evolution.initial.c0.real() == Approx(0.6));
  CHECK(cfg.evolution.initial.c1.imag() == Approx(0.8));
}

TEST_CASE("missing file") {
  CHECK(code_of([] { load_config("/nonexistent/qgeo.cfg"); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("symbolic annotation") {
  CHECK(symbolic(kPi / 2) == "pi/2");
  CHECK(symbolic(kPi / std::sqrt(2.0)) == "pi/sqrt(2)");
  CHECK(symbolic(kPi / (4 * std::sqrt(2.0))) == "pi/(4*sqrt(2))");
  CHECK(symbolic(std::sqrt(2.0) * kPi / 4) == "pi/(2*sqrt(2))");
  CHECK(symbolic(1 / std::sqrt(2.0)) == "1/sqrt(2)");
  CHECK(symbolic(0.5) == "1/2");
  CHECK(symbolic(4.0) == "4");
  CHECK(symbolic(-3 * kPi / 4) == "-3*pi/4");
  CHECK(symbolic(0.0) == "0");
  CHECK(symbolic(0.123456) == "");
}
