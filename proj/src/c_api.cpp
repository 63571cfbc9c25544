#include "qgeo/qgeo.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>

#include "qgeo/config.hpp"
#include "qgeo/error.hpp"
#include "qgeo/format.hpp"
#include "qgeo/scenarios.hpp"

struct qgeo_report {
  qgeo::MetricReport report;
  qgeo::Trajectory trajectory;
  std::vector<double> v_instant;
};

struct qgeo_config {
  qgeo::RunConfig cfg;
};

struct qgeo_sweep {
  std::vector<double> alphas;
  std::vector<qgeo_report> reports;
  std::size_t argmin = 0;
};

namespace {

thread_local std::string g_last_error;

qgeo_status to_status(qgeo::ErrorCode code) {
  return static_cast<qgeo_status>(static_cast<int>(code) + 1);
}

qgeo_status fail(qgeo_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
qgeo_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return QGEO_OK;
  } catch (const qgeo::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QGEO_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QGEO_INTERNAL, e.what());
  } catch (...) {
    return fail(QGEO_INTERNAL, "unknown failure");
  }
}

qgeo::PropagationConfig propagation(std::size_t samples) {
  qgeo::PropagationConfig p;
  if (samples != 0) p.samples = samples;
  return p;
}

constexpr const char* kMetricKeys[QGEO_METRIC_COUNT] = {
    "s0",    "s",      "travel_time", "eta_ge", "eta_se_min",       "eta_se_max", "eta_se_mean", "kappa2", "v_bar",
    "v_max", "c",      "l_c",         "quadrature_error", "theta_min", "theta_max", "phi_min", "phi_max"};

}  // namespace

extern "C" {

const char* qgeo_status_name(qgeo_status status) {
  switch (status) {
    case QGEO_OK: return "Ok";
    case QGEO_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case QGEO_INTERNAL: return "Internal";
    default: break;
  }
  const int raw = static_cast<int>(status) - 1;
  if (raw < 0 || raw > static_cast<int>(qgeo::ErrorCode::InvalidConfig)) return "Unknown";
  return qgeo::error_name(static_cast<qgeo::ErrorCode>(raw)).data();
}

int qgeo_status_is_usage(qgeo_status status) {
  if (status == QGEO_BUFFER_TOO_SMALL) return 1;
  const int raw = static_cast<int>(status) - 1;
  if (raw < 0 || raw > static_cast<int>(qgeo::ErrorCode::InvalidConfig)) return 0;
  return qgeo::is_usage_error(static_cast<qgeo::ErrorCode>(raw)) ? 1 : 0;
}

const char* qgeo_last_error(void) { return g_last_error.c_str(); }

size_t qgeo_fixture_count(void) { return qgeo::fixture_names().size(); }

const char* qgeo_fixture_name(size_t index) {
  const auto names = qgeo::fixture_names();
  return index < names.size() ? names[index].data() : nullptr;
}

qgeo_status qgeo_fixture_run(const char* name, size_t samples, qgeo_report** out) {
  if (name == nullptr || out == nullptr) return fail(QGEO_INVALID_ARGUMENT, "InvalidArgument: null pointer");
  *out = nullptr;
  return guarded([&] {
    auto eval = qgeo::evaluate(qgeo::fixture(name), propagation(samples));
    *out = new qgeo_report{std::move(eval.report), std::move(eval.trajectory), std::move(eval.v_instant)};
  });
}

qgeo_status qgeo_config_load(const char* path, qgeo_config** out) {
  if (path == nullptr || out == nullptr) return fail(QGEO_INVALID_ARGUMENT, "InvalidArgument: null pointer");
  *out = nullptr;
  return guarded([&] { *out = new qgeo_config{qgeo::load_config(path)}; });
}

qgeo_status qgeo_config_parse(const char* text, qgeo_config** out) {
  if (text == nullptr || out == nullptr) return fail(QGEO_INVALID_ARGUMENT, "InvalidArgument: null pointer");
  *out = nullptr;
  return guarded([&] { *out = new qgeo_config{qgeo::parse_config(text)}; });
}

void qgeo_config_free(qgeo_config* cfg) { delete cfg; }

const char* qgeo_config_format(const qgeo_config* cfg) {
  return cfg != nullptr && cfg->cfg.format ? cfg->cfg.format->c_str() : nullptr;
}

qgeo_status qgeo_config_run(const qgeo_config* cfg, size_t samples, qgeo_report** out) {
  if (cfg == nullptr || out == nullptr) return fail(QGEO_INVALID_ARGUMENT, "InvalidArgument: null pointer");
  *out = nullptr;
  return guarded([&] {
    const std::size_t n = samples != 0 ? samples : cfg->cfg.samples.value_or(0);
    auto eval = qgeo::evaluate(cfg->cfg.evolution, propagation(n));
    *out = new qgeo_report{std::move(eval.report), std::move(eval.trajectory), std::move(eval.v_instant)};
  });
}

qgeo_status qgeo_config_sweep(const qgeo_config* cfg, size_t samples, unsigned threads, qgeo_sweep** out) {
  if (cfg == nullptr || out == nullptr) return fail(QGEO_INVALID_ARGUMENT, "InvalidArgument: null pointer");
  *out = nullptr;
  if (!cfg->cfg.family) return fail(QGEO_INVALID_CONFIG, "InvalidConfig: hamiltonian: sweeps need a family Hamiltonian");
  if (cfg->cfg.sweep_alphas.empty()) return fail(QGEO_INVALID_CONFIG, "InvalidConfig: sweep: alpha grid is empty");
  return guarded([&] {
    const std::size_t n = samples != 0 ? samples : cfg->cfg.samples.value_or(0);
    const auto& fam = *cfg->cfg.family;
    const auto result = qgeo::sweep_alpha(cfg->cfg.sweep_alphas, fam.a_hat, fam.b_hat, fam.energy, propagation(n), threads);
    auto sweep = std::make_unique<qgeo_sweep>();
    sweep->argmin = result.argmin;
    for (const auto& p : result.points) {
      sweep->alphas.push_back(p.alpha);
      sweep->reports.push_back(qgeo_report{p.report, {}, {}});
    }
    *out = sweep.release();
  });
}

size_t qgeo_sweep_size(const qgeo_sweep* sweep) { return sweep != nullptr ? sweep->alphas.size() : 0; }

double qgeo_sweep_alpha(const qgeo_sweep* sweep, size_t index) {
  if (sweep == nullptr || index >= sweep->alphas.size()) return std::numeric_limits<double>::quiet_NaN();
  return sweep->alphas[index];
}

const qgeo_report* qgeo_sweep_report(const qgeo_sweep* sweep, size_t index) {
  if (sweep == nullptr || index >= sweep->reports.size()) return nullptr;
  return &sweep->reports[index];
}

size_t qgeo_sweep_argmin(const qgeo_sweep* sweep) { return sweep != nullptr ? sweep->argmin : 0; }

void qgeo_sweep_free(qgeo_sweep* sweep) { delete sweep; }

double qgeo_report_value(const qgeo_report* report, qgeo_metric metric) {
  if (report == nullptr) return std::numeric_limits<double>::quiet_NaN();
  const auto& r = report->report;
  switch (metric) {
    case QGEO_S0: return r.s0;
    case QGEO_S: return r.s;
    case QGEO_TRAVEL_TIME: return r.travel_time;
    case QGEO_ETA_GE: return r.eta_ge;
    case QGEO_ETA_SE_MIN: return r.eta_se_min;
    case QGEO_ETA_SE_MAX: return r.eta_se_max;
    case QGEO_ETA_SE_MEAN: return r.eta_se_mean;
    case QGEO_KAPPA2: return r.kappa2;
    case QGEO_V_BAR: return r.v_bar;
    case QGEO_V_MAX: return r.v_max;
    case QGEO_C: return r.c;
    case QGEO_L_C: return r.l_c;
    case QGEO_QUADRATURE_ERROR: return r.quadrature_error;
    case QGEO_THETA_MIN: return r.theta_min;
    case QGEO_THETA_MAX: return r.theta_max;
    case QGEO_PHI_MIN: return r.phi_min;
    case QGEO_PHI_MAX: return r.phi_max;
    case QGEO_METRIC_COUNT: break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

const char* qgeo_metric_key(qgeo_metric metric) {
  const int m = static_cast<int>(metric);
  return m >= 0 && m < QGEO_METRIC_COUNT ? kMetricKeys[m] : nullptr;
}

const char* qgeo_report_name(const qgeo_report* report) {
  return report != nullptr ? report->report.name.c_str() : nullptr;
}

const char* qgeo_report_shape(const qgeo_report* report) {
  return report != nullptr ? qgeo::shape_name(report->report.shape).data() : nullptr;
}

size_t qgeo_report_pole_count(const qgeo_report* report) {
  return report != nullptr ? report->report.pole_times.size() : 0;
}

double qgeo_report_pole_time(const qgeo_report* report, size_t index) {
  if (report == nullptr || index >= report->report.pole_times.size()) return std::numeric_limits<double>::quiet_NaN();
  return report->report.pole_times[index];
}

size_t qgeo_report_trajectory_size(const qgeo_report* report) {
  return report != nullptr ? report->trajectory.size() : 0;
}

qgeo_status qgeo_report_trajectory_row(const qgeo_report* report, size_t index, double row[QGEO_TRAJECTORY_COLUMNS]) {
  if (report == nullptr || row == nullptr) return fail(QGEO_INVALID_ARGUMENT, "InvalidArgument: null pointer");
  const auto& tr = report->trajectory;
  if (index >= tr.size()) return fail(QGEO_INVALID_ARGUMENT, "InvalidArgument: trajectory row out of range");
  const auto& s = tr.states[index];
  const auto& b = tr.bloch[index];
  const double values[QGEO_TRAJECTORY_COLUMNS] = {tr.times[index], s.c0.real(), s.c0.imag(), s.c1.real(),
                                                  s.c1.imag(), b.x, b.y, b.z, tr.angles.theta_u[index],
                                                  tr.angles.phi_u[index], report->v_instant[index]};
  std::memcpy(row, values, sizeof values);
  return QGEO_OK;
}

void qgeo_report_free(qgeo_report* report) { delete report; }

size_t qgeo_symbolic(double value, char* buf, size_t len) {
  const std::string s = qgeo::symbolic(value);
  if (buf != nullptr && len > 0) {
    const std::size_t n = std::min(len - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return s.size();
}

}  // extern "C"
