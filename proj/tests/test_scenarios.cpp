#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qgeo/error.hpp"
#include "qgeo/scenarios.hpp"
#include "support.hpp"

using namespace qgeo;
using doctest::Approx;

namespace {

const double s2 = 1.0 / std::sqrt(2.0);
const Vec3 A5{0, -s2, s2};
const Vec3 B5{0, s2, s2};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

void check_vec(const Vec3& got, const Vec3& want) {
  CHECK(got.x == Approx(want.x).epsilon(1e-14));
  CHECK(got.y == Approx(want.y).epsilon(1e-14));
  CHECK(got.z == Approx(want.z).epsilon(1e-14));
}

}  // namespace

TEST_CASE("family examples") {
  check_vec(family_hamiltonian({{1, 0, 0}, {0, 1, 0}, kPi / 2, 1.0}).field(0), {0, 0, 1});
  check_vec(family_hamiltonian({A5, B5, kPi / 2, 1.0}).field(0), {-1, 0, 0});
  check_vec(family_hamiltonian({A5, B5, 0.0, 1.0}).field(0), {0, 0, 1});
  check_vec(family_hamiltonian({A5, B5, 0.0, 2.5}).field(0), {0, 0, 2.5});
}

TEST_CASE("family keeps the target on the precession circle") {
  for (int i = 0; i < 500; ++i) {
    const Vec3 a = testing::random_unit(), b = testing::random_unit();
    if (norm(cross(a, b)) < 1e-3 || norm(a + b) < 1e-3) continue;
    const Vec3 n = family_axis(a, b, testing::uniform(0, kPi));
    CHECK(norm(n) == Approx(1.0));
    CHECK(std::abs(dot(a, n) - dot(b, n)) < 1e-12);
  }
}

TEST_CASE("degenerate pairs are rejected") {
  CHECK(code_of([] { family_axis({0, 0, 1}, {0, 0, 1}, 1.0); }) == ErrorCode::DegeneratePair);
  CHECK(code_of([] { family_axis({0, 0, 1}, {0, 0, -1}, 1.0); }) == ErrorCode::DegeneratePair);
  CHECK(code_of([] { family_hamiltonian({{1, 0, 0}, {0, 1, 0}, 4.0, 1.0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { family_hamiltonian({{1, 0, 0}, {0, 1, 0}, 1.0, 0.0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fixture fig4-AB") {
  const auto r = run_fixture("fig4-AB");
  CHECK(r.eta_ge == Approx(1.0).epsilon(1e-12));
  CHECK(r.eta_se_min == Approx(1.0).epsilon(1e-12));
  CHECK(r.kappa2 == Approx(0.0).epsilon(1e-12));
  CHECK(r.c == Approx(0.5).epsilon(1e-9));
  CHECK(r.l_c == Approx(kPi / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(r.travel_time == Approx(kPi / 4).epsilon(1e-12));
}

TEST_CASE("fixture fig5-AB-sub") {
  const auto r = run_fixture("fig5-AB-sub");
  CHECK(r.eta_ge == Approx(s2).epsilon(1e-12));
  CHECK(r.eta_se_mean == Approx(s2).epsilon(1e-12));
  CHECK(r.kappa2 == Approx(4.0).epsilon(1e-12));
  CHECK(r.c == Approx(0.5).epsilon(1e-9));
  CHECK(r.l_c == Approx(kPi).epsilon(1e-9));
  CHECK(r.travel_time == Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("fixture fig5-CD-opt") {
  const auto r = run_fixture("fig5-CD-opt");
  CHECK(r.eta_ge == Approx(1.0).epsilon(1e-12));
  CHECK(r.eta_se_min == Approx(1.0).epsilon(1e-12));
  CHECK(r.kappa2 == Approx(0.0).epsilon(1e-12));
  CHECK(r.c == Approx(0.5).epsilon(1e-9));
  CHECK(r.l_c == Approx(kPi / std::sqrt(2.0)).epsilon(1e-9));
  REQUIRE(r.pole_times.size() == 1);
  CHECK(r.pole_times[0] == Approx(kPi / 8).epsilon(1e-9));
}

TEST_CASE("fixture names") {
  CHECK(fixture_names().size() == 7);
  for (auto name : fixture_names()) CHECK(fixture(name).name == name);
  CHECK(code_of([] { fixture("bogus"); }) == ErrorCode::UnknownFixture);
}

TEST_CASE("equal geodesic distance gives equal complexity") {
  const double c0 = run_fixture("fig4-AB").c;
  for (auto n : {"fig4-BC", "fig4-CA", "fig5-AB-opt", "fig5-CD-opt"}) CHECK(run_fixture(n).c == Approx(c0).epsilon(1e-9));
  CHECK(run_fixture("fig5-AB-sub").c == Approx(run_fixture("fig5-CD-sub").c).epsilon(1e-9));
}

TEST_CASE("sweep over the x-to-y family") {
  const std::vector<double> grid{0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};
  const auto r = sweep_alpha(grid, {1, 0, 0}, {0, 1, 0}, 1.0);
  REQUIRE(r.points.size() == 5);
  CHECK(r.argmin == 2);
  CHECK(r.points[2].report.travel_time == Approx(kPi / 4).epsilon(1e-12));
  CHECK(r.points[2].report.kappa2 < 1e-20);
  for (std::size_t i = 0; i < 5; ++i) {
    if (i != 2) CHECK(r.points[i].report.kappa2 > 0.0);
    CHECK(r.points[i].report.travel_time >= r.points[2].report.travel_time);
  }
}

TEST_CASE("alpha = 0 reproduces the sub-optimal travel time") {
  const std::vector<double> grid{0.0};
  const auto r = sweep_alpha(grid, A5, B5, 1.0);
  CHECK(r.points[0].report.travel_time == Approx(kPi / 2).epsilon(1e-12));
  CHECK(r.points[0].report.c == Approx(run_fixture("fig5-AB-sub").c).epsilon(1e-12));
  CHECK(r.points[0].report.l_c == Approx(run_fixture("fig5-AB-sub").l_c).epsilon(1e-12));
}

TEST_CASE("sweep is sorted and independent of the thread count") {
  std::vector<double> grid;
  for (int k = 16; k >= 0; --k) grid.push_back(kPi * k / 16);
  const Vec3 a = normalized(Vec3{1, 0.2, -0.3}), b = normalized(Vec3{-0.1, 1, 0.5});
  PropagationConfig cfg;
  cfg.samples = 1025;
  const auto one = sweep_alpha(grid, a, b, 1.7, cfg, 1);
  const auto many = sweep_alpha(grid, a, b, 1.7, cfg, 8);
  REQUIRE(one.points.size() == many.points.size());
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    if (i > 0) CHECK(one.points[i].alpha > one.points[i - 1].alpha);
    CHECK(one.points[i].alpha == many.points[i].alpha);
    CHECK(one.points[i].report.travel_time == many.points[i].report.travel_time);
    CHECK(one.points[i].report.l_c == many.points[i].report.l_c);
  }
  CHECK(one.argmin == many.argmin);
}

TEST_CASE("sweep rejects empty and degenerate grids") {
  CHECK(code_of([] { sweep_alpha({}, {1, 0, 0}, {0, 1, 0}, 1.0); }) == ErrorCode::InvalidArgument);
  const std::vector<double> grid{1.0};
  CHECK(code_of([&] { sweep_alpha(grid, {1, 0, 0}, {1, 0, 0}, 1.0); }) == ErrorCode::DegeneratePair);
}

TEST_CASE("every family member reaches the target within one period") {
  for (int i = 0; i < 100; ++i) {
    const Vec3 a = testing::random_unit(), b = testing::random_unit();
    if (norm(cross(a, b)) < 1e-2 || norm(a + b) < 1e-2) continue;
    const double alpha = testing::uniform(0, kPi);
    const FamilySpec spec{a, b, alpha, testing::uniform(0.5, 2)};
    const auto field = family_hamiltonian(spec);
    const auto from = state_from_bloch(a), to = state_from_bloch(b);
    const double t = travel_time(field, from, to);
    CHECK(t <= kPi / spec.energy * (1 + 1e-12));
    CHECK(std::abs(inner(to, propagate_stationary(field, from, t))) >= 1 - 1e-9);
  }
}

TEST_CASE("explicit durations and zero duration") {
  Evolution evo = fixture("fig4-AB");
  evo.t_end = kPi / 8;
  const auto r = evaluate_report(evo);
  CHECK(r.travel_time == Approx(kPi / 8));
  CHECK(r.s0 == Approx(kPi / 4).epsilon(1e-12));
  evo.t_end = 0.0;
  CHECK(code_of([&] { evaluate_report(evo); }) == ErrorCode::ZeroDuration);
  evo.t_end.reset();
  evo.target.reset();
  CHECK(code_of([&] { evaluate_report(evo); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("time-varying evolution runs through the integrator") {
  Evolution evo;
  evo.name = "rotating";
  evo.initial = {s2, s2};
  evo.field = FieldSpec::time_varying([](double t) { return Vec3{0.3 * std::cos(t), 0.3 * std::sin(t), 1.0}; },
                                      [](double t) { return Vec3{-0.3 * std::sin(t), 0.3 * std::cos(t), 0.0}; });
  evo.t_end = 2.0;
  PropagationConfig cfg;
  cfg.samples = 1001;
  const auto e = evaluate(evo, cfg);
  CHECK(e.trajectory.size() == 1001);
  CHECK(e.report.s >= e.report.s0 - 1e-9);
  CHECK(e.report.kappa2 > 0.0);
  CHECK(e.report.c >= 0.0);
  CHECK(e.report.c <= 1.0);
  CHECK(e.v_instant.size() == 1001);
}
