// qgeo command-line front end; talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgeo/qgeo.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

// Report columns in output order.
constexpr qgeo_metric kReportMetrics[] = {QGEO_S0,          QGEO_S,      QGEO_TRAVEL_TIME, QGEO_ETA_GE,
                                          QGEO_ETA_SE_MIN,  QGEO_ETA_SE_MAX, QGEO_ETA_SE_MEAN, QGEO_KAPPA2,
                                          QGEO_V_BAR,       QGEO_V_MAX,  QGEO_C,           QGEO_L_C,
                                          QGEO_QUADRATURE_ERROR};

constexpr qgeo_metric kSweepMetrics[] = {QGEO_TRAVEL_TIME, QGEO_S0,    QGEO_S,     QGEO_ETA_GE,
                                         QGEO_ETA_SE_MEAN, QGEO_KAPPA2, QGEO_V_BAR, QGEO_V_MAX,
                                         QGEO_C,           QGEO_L_C};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string symbolic(double v) {
  char buf[64];
  const std::size_t n = qgeo_symbolic(v, buf, sizeof buf);
  return n == 0 ? std::string{} : std::string(buf);
}

int report_failure(qgeo_status st) {
  std::cerr << "error: " << qgeo_last_error() << '\n';
  return qgeo_status_is_usage(st) ? kExitUsage : kExitNumeric;
}

struct ReportPtr {
  qgeo_report* p = nullptr;
  ~ReportPtr() { qgeo_report_free(p); }
};

struct ConfigPtr {
  qgeo_config* p = nullptr;
  ~ConfigPtr() { qgeo_config_free(p); }
};

struct SweepPtr {
  qgeo_sweep* p = nullptr;
  ~SweepPtr() { qgeo_sweep_free(p); }
};

void print_table(std::ostream& os, const qgeo_report* r) {
  os << std::left;
  os << std::setw(18) << "evolution" << qgeo_report_name(r) << '\n';
  for (qgeo_metric m : kReportMetrics) {
    const double v = qgeo_report_value(r, m);
    const std::string sym = m == QGEO_QUADRATURE_ERROR ? std::string{} : symbolic(v);
    os << std::setw(18) << qgeo_metric_key(m);
    if (sym.empty()) os << num(v) << '\n';
    else os << std::setw(20) << num(v) << sym << '\n';
  }
  os << std::setw(18) << "shape" << qgeo_report_shape(r) << '\n';
  os << std::setw(18) << "pole_events" << qgeo_report_pole_count(r);
  for (std::size_t i = 0; i < qgeo_report_pole_count(r); ++i) {
    os << (i == 0 ? "  at t = " : ", ") << num(qgeo_report_pole_time(r, i));
  }
  os << '\n';
}

void print_csv(std::ostream& os, const qgeo_report* r) {
  os << "evolution";
  for (qgeo_metric m : kReportMetrics) os << ',' << qgeo_metric_key(m);
  os << ",shape,pole_events\n";
  os << qgeo_report_name(r);
  for (qgeo_metric m : kReportMetrics) os << ',' << num(qgeo_report_value(r, m));
  os << ',' << qgeo_report_shape(r) << ',' << qgeo_report_pole_count(r) << '\n';
}

// Round-trip through the 12-digit text form so JSON carries the same digits.
double twelve_digits(double v) { return std::stod(num(v)); }

void print_json(std::ostream& os, const qgeo_report* r) {
  nlohmann::ordered_json j;
  j["evolution"] = qgeo_report_name(r);
  nlohmann::ordered_json sym = nlohmann::ordered_json::object();
  for (qgeo_metric m : kReportMetrics) {
    const double v = qgeo_report_value(r, m);
    j[qgeo_metric_key(m)] = twelve_digits(v);
    const std::string s = m == QGEO_QUADRATURE_ERROR ? std::string{} : symbolic(v);
    if (!s.empty()) sym[qgeo_metric_key(m)] = s;
  }
  j["shape"] = qgeo_report_shape(r);
  nlohmann::ordered_json poles = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < qgeo_report_pole_count(r); ++i) poles.push_back(twelve_digits(qgeo_report_pole_time(r, i)));
  j["pole_times"] = poles;
  j["symbolic"] = sym;
  os << j.dump(2) << '\n';
}

int emit_report(const qgeo_report* r, const std::string& format, const std::string& dump_path) {
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) {
      std::cerr << "error: cannot write trajectory to '" << dump_path << "'\n";
      return kExitUsage;
    }
    out << "t,re_c0,im_c0,re_c1,im_c1,x,y,z,theta_u,phi_u,v_instant\n";
    double row[QGEO_TRAJECTORY_COLUMNS];
    for (std::size_t i = 0; i < qgeo_report_trajectory_size(r); ++i) {
      qgeo_report_trajectory_row(r, i, row);
      for (int c = 0; c < QGEO_TRAJECTORY_COLUMNS; ++c) out << (c ? "," : "") << num(row[c]);
      out << '\n';
    }
  }
  if (format == "csv") print_csv(std::cout, r);
  else if (format == "json") print_json(std::cout, r);
  else print_table(std::cout, r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric quality metrics of qubit evolutions"};
  app.require_subcommand(1);

  std::string format;
  std::size_t samples = 0;
  std::string dump_path;
  std::string out_path;
  unsigned threads = 0;

  auto* fixture = app.add_subcommand("fixture", "Evaluate a built-in evolution");
  std::string fixture_name;
  fixture->add_option("name", fixture_name, "Fixture name")->required();

  auto* run = app.add_subcommand("run", "Evaluate the evolution described by a config file");
  std::string config_path;
  run->add_option("config", config_path, "Config file")->required();

  auto* sweep = app.add_subcommand("sweep", "Sweep the family parameter alpha");
  sweep->add_option("config", config_path, "Config file")->required();
  sweep->add_option("--out", out_path, "Write the CSV here instead of standard output");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* list = app.add_subcommand("list", "List fixture names");

  for (auto* sub : {fixture, run}) {
    sub->add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--dump-trajectory", dump_path, "Write per-sample trajectory CSV");
  }
  for (auto* sub : {fixture, run, sweep}) {
    sub->add_option("--samples", samples, "Grid points per trajectory")->check(CLI::Range(std::size_t{3}, std::size_t{100000000}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (list->parsed()) {
    for (std::size_t i = 0; i < qgeo_fixture_count(); ++i) std::cout << qgeo_fixture_name(i) << '\n';
    return 0;
  }

  if (fixture->parsed()) {
    ReportPtr r;
    if (qgeo_status st = qgeo_fixture_run(fixture_name.c_str(), samples, &r.p); st != QGEO_OK) {
      return report_failure(st);
    }
    return emit_report(r.p, format.empty() ? "table" : format, dump_path);
  }

  ConfigPtr cfg;
  if (qgeo_status st = qgeo_config_load(config_path.c_str(), &cfg.p); st != QGEO_OK) return report_failure(st);

  if (run->parsed()) {
    ReportPtr r;
    if (qgeo_status st = qgeo_config_run(cfg.p, samples, &r.p); st != QGEO_OK) return report_failure(st);
    if (format.empty()) format = qgeo_config_format(cfg.p) ? qgeo_config_format(cfg.p) : "table";
    return emit_report(r.p, format, dump_path);
  }

  SweepPtr sw;
  if (qgeo_status st = qgeo_config_sweep(cfg.p, samples, threads, &sw.p); st != QGEO_OK) return report_failure(st);

  std::ostringstream csv;
  csv << "alpha";
  for (qgeo_metric m : kSweepMetrics) csv << ',' << qgeo_metric_key(m);
  csv << '\n';
  for (std::size_t i = 0; i < qgeo_sweep_size(sw.p); ++i) {
    csv << num(qgeo_sweep_alpha(sw.p, i));
    for (qgeo_metric m : kSweepMetrics) csv << ',' << num(qgeo_report_value(qgeo_sweep_report(sw.p, i), m));
    csv << '\n';
  }

  const std::size_t best = qgeo_sweep_argmin(sw.p);
  const double alpha = qgeo_sweep_alpha(sw.p, best);
  const double t = qgeo_report_value(qgeo_sweep_report(sw.p, best), QGEO_TRAVEL_TIME);
  std::ostringstream summary;
  summary << "argmin alpha=" << num(alpha);
  if (auto s = symbolic(alpha); !s.empty()) summary << " (" << s << ")";
  summary << " travel_time=" << num(t);
  if (auto s = symbolic(t); !s.empty()) summary << " (" << s << ")";
  summary << '\n';

  if (out_path.empty()) {
    std::cout << csv.str();
    std::cerr << summary.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    out << csv.str();
    std::cout << summary.str();
  }
  return 0;
}
