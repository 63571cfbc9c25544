#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "qgeo/qgeo.h"

using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("fixtures through the C interface") {
  REQUIRE(qgeo_fixture_count() == 7);
  CHECK(std::string(qgeo_fixture_name(0)) == "fig4-AB");
  CHECK(qgeo_fixture_name(7) == nullptr);

  qgeo_report* r = nullptr;
  REQUIRE(qgeo_fixture_run("fig5-AB-sub", 0, &r) == QGEO_OK);
  CHECK(qgeo_report_value(r, QGEO_KAPPA2) == Approx(4.0));
  CHECK(qgeo_report_value(r, QGEO_L_C) == Approx(kPi));
  CHECK(qgeo_report_value(r, QGEO_TRAVEL_TIME) == Approx(kPi / 2));
  CHECK(std::isnan(qgeo_report_value(r, QGEO_METRIC_COUNT)));
  CHECK(std::string(qgeo_report_shape(r)) == "parallel");
  CHECK(std::string(qgeo_report_name(r)) == "fig5-AB-sub");
  CHECK(qgeo_report_trajectory_size(r) == 4096);

  double row[QGEO_TRAJECTORY_COLUMNS];
  REQUIRE(qgeo_report_trajectory_row(r, 4095, row) == QGEO_OK);
  CHECK(row[0] == Approx(kPi / 2));
  CHECK(row[10] == Approx(std::sqrt(2.0) * kPi / 4));
  CHECK(qgeo_report_trajectory_row(r, 4096, row) == QGEO_INVALID_ARGUMENT);
  qgeo_report_free(r);
}

TEST_CASE("samples override") {
  qgeo_report* r = nullptr;
  REQUIRE(qgeo_fixture_run("fig5-CD-opt", 129, &r) == QGEO_OK);
  CHECK(qgeo_report_trajectory_size(r) == 129);
  CHECK(qgeo_report_pole_count(r) == 1);
  CHECK(qgeo_report_pole_time(r, 0) == Approx(kPi / 8).epsilon(1e-9));
  qgeo_report_free(r);
}

TEST_CASE("errors carry a status and a message") {
  qgeo_report* r = reinterpret_cast<qgeo_report*>(0x1);
  const qgeo_status st = qgeo_fixture_run("bogus", 0, &r);
  CHECK(st == QGEO_UNKNOWN_FIXTURE);
  CHECK(r == nullptr);
  CHECK(std::string(qgeo_status_name(st)) == "UnknownFixture");
  CHECK(qgeo_status_is_usage(st) == 1);
  CHECK(std::string(qgeo_last_error()).find("unknown fixture") != std::string::npos);
  CHECK(qgeo_fixture_run(nullptr, 0, &r) == QGEO_INVALID_ARGUMENT);
  CHECK(qgeo_fixture_run("fig4-AB", 2, &r) == QGEO_INVALID_ARGUMENT);
  CHECK(qgeo_status_is_usage(QGEO_ZERO_DURATION) == 0);
  CHECK(std::string(qgeo_status_name(QGEO_ZERO_DURATION)) == "ZeroDuration");
  CHECK(std::string(qgeo_status_name(QGEO_OK)) == "Ok");
}

TEST_CASE("config run and numeric failures") {
  qgeo_config* cfg = nullptr;
  REQUIRE(qgeo_config_parse("hamiltonian.hz = 1\ninitial.theta = pi/2\nt_end = 0\nformat = csv\n", &cfg) == QGEO_OK);
  CHECK(std::string(qgeo_config_format(cfg)) == "csv");
  qgeo_report* r = nullptr;
  CHECK(qgeo_config_run(cfg, 0, &r) == QGEO_ZERO_DURATION);
  CHECK(r == nullptr);
  qgeo_config_free(cfg);

  CHECK(qgeo_config_parse("hamiltonian.family.a_hat = 0,0,1\nhamiltonian.family.b_hat = 0,0,1\nhamiltonian.family.alpha = pi/2\n", &cfg) ==
        QGEO_DEGENERATE_PAIR);
  CHECK(cfg == nullptr);
  CHECK(qgeo_config_load("/nonexistent.cfg", &cfg) == QGEO_INVALID_CONFIG);
}

TEST_CASE("sweeps") {
  qgeo_config* cfg = nullptr;
  REQUIRE(qgeo_config_parse("hamiltonian.family.a_hat = 1,0,0\nhamiltonian.family.b_hat = 0,1,0\n"
                            "sweep.alpha_range = 0, pi, 5\n",
                            &cfg) == QGEO_OK);
  qgeo_sweep* sw = nullptr;
  REQUIRE(qgeo_config_sweep(cfg, 257, 2, &sw) == QGEO_OK);
  CHECK(qgeo_sweep_size(sw) == 5);
  CHECK(qgeo_sweep_argmin(sw) == 2);
  CHECK(qgeo_sweep_alpha(sw, 2) == Approx(kPi / 2));
  CHECK(qgeo_report_value(qgeo_sweep_report(sw, 2), QGEO_TRAVEL_TIME) == Approx(kPi / 4));
  CHECK(qgeo_report_trajectory_size(qgeo_sweep_report(sw, 2)) == 0);
  CHECK(qgeo_sweep_report(sw, 5) == nullptr);
  qgeo_sweep_free(sw);
  qgeo_config_free(cfg);

  REQUIRE(qgeo_config_parse("hamiltonian.hz = 1\ninitial.theta = 1\nt_end = 1\n", &cfg) == QGEO_OK);
  CHECK(qgeo_config_sweep(cfg, 0, 0, &sw) == QGEO_INVALID_CONFIG);
  qgeo_config_free(cfg);
}

TEST_CASE("metric keys and symbolic annotation") {
  CHECK(std::string(qgeo_metric_key(QGEO_ETA_SE_MEAN)) == "eta_se_mean");
  CHECK(std::string(qgeo_metric_key(QGEO_QUADRATURE_ERROR)) == "quadrature_error");
  CHECK(qgeo_metric_key(QGEO_METRIC_COUNT) == nullptr);

  char buf[64];
  CHECK(qgeo_symbolic(kPi / std::sqrt(2.0), buf, sizeof buf) == std::strlen("pi/sqrt(2)"));
  CHECK(std::string(buf) == "pi/sqrt(2)");
  char tiny[4];
  CHECK(qgeo_symbolic(kPi / std::sqrt(2.0), tiny, sizeof tiny) == 10);
  CHECK(std::string(tiny) == "pi/");
  CHECK(qgeo_symbolic(0.1234567, buf, sizeof buf) == 0);
  CHECK(qgeo_symbolic(0.5, nullptr, 0) == 3);
}

TEST_CASE("free functions accept null") {
  qgeo_report_free(nullptr);
  qgeo_config_free(nullptr);
  qgeo_sweep_free(nullptr);
  CHECK(qgeo_sweep_size(nullptr) == 0);
  CHECK(std::isnan(qgeo_report_value(nullptr, QGEO_S)));
}
