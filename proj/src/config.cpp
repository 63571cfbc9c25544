#include "qgeo/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qgeo/error.hpp"

namespace qgeo {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void bad(std::string_view key, const std::string& why) {
  throw Error(ErrorCode::InvalidConfig, std::string(key) + ": " + why);
}

const std::set<std::string_view> kKnownKeys = {
    "initial.c0_re", "initial.c0_im", "initial.c1_re", "initial.c1_im", "initial.theta", "initial.phi",
    "target.c0_re", "target.c0_im", "target.c1_re", "target.c1_im", "target.theta", "target.phi",
    "hamiltonian.h0", "hamiltonian.hx", "hamiltonian.hy", "hamiltonian.hz",
    "hamiltonian.family.a_hat", "hamiltonian.family.b_hat", "hamiltonian.family.alpha",
    "hamiltonian.family.energy", "t_end", "samples", "format", "sweep.alpha", "sweep.alpha_range"};

class Entries {
 public:
  explicit Entries(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  bool has(std::string_view key) const { return kv_.count(std::string(key)) != 0; }
  bool any_with_prefix(std::string_view prefix) const {
    for (const auto& [k, v] : kv_) {
      if (std::string_view(k).starts_with(prefix)) return true;
    }
    return false;
  }
  const std::string& raw(std::string_view key) const { return kv_.at(std::string(key)); }

  double number(std::string_view key, double fallback) const {
    if (!has(key)) return fallback;
    try {
      const double v = parse_number(raw(key));
      if (!std::isfinite(v)) bad(key, "value is not finite");
      return v;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidConfig) throw;
      bad(key, e.what());
    }
  }

  std::vector<double> list(std::string_view key) const {
    std::vector<double> out;
    if (trim(raw(key)).empty()) bad(key, "empty list");
    for (auto part : split(raw(key), ',')) {
      try {
        out.push_back(parse_number(part));
      } catch (const Error& e) {
        bad(key, e.what());
      }
    }
    return out;
  }

  Vec3 vector(std::string_view key) const {
    const auto v = list(key);
    if (v.size() != 3) bad(key, "expected three comma-separated components");
    const Vec3 r{v[0], v[1], v[2]};
    if (!(norm(r) > 0.0)) bad(key, "vector must be non-zero");
    return normalized(r);
  }

 private:
  std::map<std::string, std::string> kv_;
};

std::optional<PureState> read_state(const Entries& e, const std::string& prefix) {
  const bool amplitudes = e.has(prefix + ".c0_re") || e.has(prefix + ".c0_im") || e.has(prefix + ".c1_re") ||
                          e.has(prefix + ".c1_im");
  const bool angles = e.has(prefix + ".theta") || e.has(prefix + ".phi");
  if (amplitudes && angles) bad(prefix, "give either amplitudes or angles, not both");
  if (angles) {
    if (!e.has(prefix + ".theta")) bad(prefix + ".theta", "missing");
    const double theta = e.number(prefix + ".theta", 0.0);
    const double phi = e.number(prefix + ".phi", 0.0);
    if (theta < 0.0 || theta > kPi) bad(prefix + ".theta", "must lie in [0, pi]");
    return state_from_angles({theta, phi});
  }
  if (amplitudes) {
    const PureState s{complex{e.number(prefix + ".c0_re", 0.0), e.number(prefix + ".c0_im", 0.0)},
                      complex{e.number(prefix + ".c1_re", 0.0), e.number(prefix + ".c1_im", 0.0)}};
    if (!(norm(s) > 0.0)) bad(prefix, "amplitudes are all zero");
    return normalized_state(s);
  }
  return std::nullopt;
}

}  // namespace

namespace {

// expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
// unary := ('+'|'-') unary | atom, atom := number | pi | sqrt(expr) | (expr)
class Expression {
 public:
  explicit Expression(std::string_view text) : text_(text) {}

  double evaluate() {
    const double v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::InvalidArgument, "cannot read number '" + std::string(text_) + "': " + why);
  }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip();
    if (text_.substr(pos_).starts_with(w)) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else return v;
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  double atom() {
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (accept_word("sqrt")) {
      if (!accept('(')) fail("expected '(' after sqrt");
      const double v = expr();
      if (!accept(')')) fail("missing ')'");
      if (v < 0.0) fail("square root of a negative number");
      return std::sqrt(v);
    }
    if (accept_word("pi")) return kPi;
    skip();
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc{} || ptr == first) fail(pos_ < text_.size() ? "not a number" : "empty");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_number(std::string_view text) { return Expression(text).evaluate(); }

RunConfig parse_config(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key(trim(l.substr(0, eq)));
    if (!kKnownKeys.count(key)) bad(key, "unknown key (line " + std::to_string(lineno) + ")");
    if (kv.count(key)) bad(key, "given twice (line " + std::to_string(lineno) + ")");
    kv[key] = std::string(trim(l.substr(eq + 1)));
  }
  const Entries e(std::move(kv));

  RunConfig cfg;
  const bool constant = e.has("hamiltonian.h0") || e.has("hamiltonian.hx") || e.has("hamiltonian.hy") ||
                        e.has("hamiltonian.hz");
  const bool family = e.any_with_prefix("hamiltonian.family.");
  if (constant && family) bad("hamiltonian", "give either h0/hx/hy/hz or family.*, not both");
  if (!constant && !family) bad("hamiltonian", "missing; give h0/hx/hy/hz or family.*");

  const bool sweeping = e.has("sweep.alpha") || e.has("sweep.alpha_range");
  if (e.has("sweep.alpha") && e.has("sweep.alpha_range")) bad("sweep", "give either alpha or alpha_range");
  if (sweeping && !family) bad("sweep", "alpha sweeps need a family Hamiltonian");
  if (e.has("sweep.alpha")) cfg.sweep_alphas = e.list("sweep.alpha");
  if (e.has("sweep.alpha_range")) {
    const auto r = e.list("sweep.alpha_range");
    if (r.size() != 3) bad("sweep.alpha_range", "expected start, stop, count");
    const double count = r[2];
    if (count < 1.0 || count != std::floor(count) || count > 1e6) {
      bad("sweep.alpha_range", "count must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(count);
    for (std::size_t k = 0; k < n; ++k) {
      cfg.sweep_alphas.push_back(n == 1 ? r[0] : r[0] + (r[1] - r[0]) * static_cast<double>(k) / static_cast<double>(n - 1));
    }
  }
  for (double a : cfg.sweep_alphas) {
    if (a < 0.0 || a > kPi + 1e-12) bad("sweep", "alpha values must lie in [0, pi]");
  }

  Evolution& evo = cfg.evolution;
  evo.name = "config";
  if (family) {
    if (!e.has("hamiltonian.family.a_hat")) bad("hamiltonian.family.a_hat", "missing");
    if (!e.has("hamiltonian.family.b_hat")) bad("hamiltonian.family.b_hat", "missing");
    if (!e.has("hamiltonian.family.alpha") && !sweeping) bad("hamiltonian.family.alpha", "missing");
    FamilySpec spec;
    spec.a_hat = e.vector("hamiltonian.family.a_hat");
    spec.b_hat = e.vector("hamiltonian.family.b_hat");
    spec.alpha = e.number("hamiltonian.family.alpha", kPi / 2.0);
    spec.energy = e.number("hamiltonian.family.energy", 1.0);
    if (!(spec.energy > 0.0)) bad("hamiltonian.family.energy", "must be positive");
    if (spec.alpha < 0.0 || spec.alpha > kPi + 1e-12) bad("hamiltonian.family.alpha", "must lie in [0, pi]");
    evo.field = family_hamiltonian(spec);  // DegeneratePair for a = +-b
    cfg.family = spec;
    evo.initial = state_from_bloch(spec.a_hat);
    evo.target = state_from_bloch(spec.b_hat);
  } else {
    evo.field = FieldSpec::constant({e.number("hamiltonian.hx", 0.0), e.number("hamiltonian.hy", 0.0),
                                     e.number("hamiltonian.hz", 0.0)},
                                    e.number("hamiltonian.h0", 0.0));
  }

  if (auto s = read_state(e, "initial")) {
    evo.initial = *s;
  } else if (!family) {
    bad("initial", "missing; give amplitudes or angles");
  }
  if (auto s = read_state(e, "target")) evo.target = *s;

  const std::string t_end = e.has("t_end") ? std::string(trim(e.raw("t_end"))) : "auto";
  if (t_end == "auto") {
    if (!evo.target) bad("t_end", "auto needs a target state");
    evo.t_end.reset();
  } else {
    const double t = e.number("t_end", 0.0);
    if (t < 0.0) bad("t_end", "must be non-negative");
    evo.t_end = t;
  }

  if (e.has("samples")) {
    const double n = e.number("samples", 0.0);
    if (n < 3.0 || n != std::floor(n) || n > 1e8) bad("samples", "must be an integer >= 3");
    cfg.samples = static_cast<std::size_t>(n);
  }
  if (e.has("format")) {
    const std::string f(trim(e.raw("format")));
    if (f != "table" && f != "csv" && f != "json") bad("format", "must be table, csv or json");
    cfg.format = f;
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace qgeo
