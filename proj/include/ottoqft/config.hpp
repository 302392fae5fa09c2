#ifndef OTTOQFT_CONFIG_HPP
#define OTTOQFT_CONFIG_HPP

// Flat `key = value` run configuration. `#` starts a comment, keys are
// case-sensitive and unknown keys are rejected. Command-line overrides are
// applied on top of the document and reported as `--set #n` in errors.

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "ottoqft/error.hpp"

namespace ottoqft {

enum class SweepMode { curve_tau2, grid_couplings, single_point, verify };

inline std::string_view to_string(SweepMode m) {
  switch (m) {
    case SweepMode::curve_tau2: return "curve-tau2";
    case SweepMode::grid_couplings: return "grid-couplings";
    case SweepMode::single_point: return "single-point";
    case SweepMode::verify: return "verify";
  }
  return "?";
}

struct Axis {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  double at(int i) const {
    if (i == count - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  std::vector<double> values() const {
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = at(i);
    return v;
  }
};

/// Checks run by `ottoqft verify`, with their pass thresholds.
struct VerifyOptions {
  unsigned long long seed = 20240601;
  int fock_cases = 50;
  int fock_dim = 60;
  int property_cases = 10000;
  int identity_cases = 1000;
  double tol_p1 = 1e-8;
  double tol_p2 = 1e-6;
  double tol_weyl = 1e-8;
  double tol_partition = 1e-12;
  double tol_identity = 1e-12;
  double tol_quadrature = 1e-3;
  double tol_dawson = 1e-12;
  double tol_dawson_asymptotic = 1e-10;
  double tol_first_law = 1e-12;
  double tol_fixed_point = 1e-12;
  double tol_signaling = 1e-15;
};

struct SweepSpec {
  SweepMode mode = SweepMode::single_point;
  // sigma-scaled physical inputs
  double omega1 = 0.0;
  double omega2 = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::optional<double> initial_p;
  Axis tau2_axis;
  Axis lambda1_axis;
  Axis lambda2_axis;
  std::string output_path;  // empty: standard output
  VerifyOptions verify;
};

namespace config_detail {

struct Entry {
  std::string value;
  std::string where;  // "line 3" or "--set #1"
};

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] inline void fail(const std::string& where, std::string_view key, const std::string& msg) {
  throw Error(ErrorKind::validation, where + ": " + std::string(key) + ": " + msg);
}

inline void add_line(std::map<std::string, Entry>& out, std::string_view raw, const std::string& where,
                     bool allow_override) {
  std::string_view line = raw;
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  line = trim(line);
  if (line.empty()) return;
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) throw Error(ErrorKind::validation, where + ": expected key = value");
  const std::string key(trim(line.substr(0, eq)));
  const std::string value(trim(line.substr(eq + 1)));
  if (key.empty()) throw Error(ErrorKind::validation, where + ": empty key");
  if (value.empty()) fail(where, key, "empty value");
  if (!allow_override && out.contains(key)) fail(where, key, "duplicate key");
  out[key] = {value, where};
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.contains(key); }

  const Entry& entry(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw Error(ErrorKind::validation, "missing key: " + key);
    used_.push_back(key);
    return it->second;
  }

  double number(const std::string& key) {
    const Entry& e = entry(key);
    double v = 0.0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) fail(e.where, key, "unparsable number '" + e.value + "'");
    return v;
  }

  long long integer(const std::string& key) {
    const Entry& e = entry(key);
    long long v = 0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) fail(e.where, key, "unparsable integer '" + e.value + "'");
    return v;
  }

  double positive(const std::string& key) {
    const double v = number(key);
    if (!(v > 0.0)) fail(entries_.at(key).where, key, "must be > 0");
    return v;
  }

  double non_negative(const std::string& key) {
    const double v = number(key);
    if (!(v >= 0.0)) fail(entries_.at(key).where, key, "must be >= 0");
    return v;
  }

  Axis axis(const std::string& name, bool non_negative_start) {
    Axis a;
    a.start = non_negative_start ? non_negative(name + "_start") : number(name + "_start");
    a.stop = number(name + "_stop");
    const long long n = integer(name + "_count");
    if (n < 2 || n > 10'000'000) fail(entries_.at(name + "_count").where, name + "_count", "must be >= 2");
    a.count = static_cast<int>(n);
    if (!(a.start < a.stop)) fail(entries_.at(name + "_stop").where, name + "_stop", "must exceed " + name + "_start");
    return a;
  }

  std::string where(const std::string& key) const { return entries_.at(key).where; }

  void reject_unused(SweepMode mode) const {
    for (const auto& [key, e] : entries_) {
      bool used = false;
      for (const auto& u : used_) used = used || u == key;
      if (!used) fail(e.where, key, "unknown key for mode " + std::string(to_string(mode)));
    }
  }

 private:
  std::map<std::string, Entry> entries_;
  std::vector<std::string> used_;
};

inline SweepMode parse_mode(Reader& r) {
  const Entry& e = r.entry("mode");
  if (e.value == "curve-tau2") return SweepMode::curve_tau2;
  if (e.value == "grid-couplings") return SweepMode::grid_couplings;
  if (e.value == "single-point") return SweepMode::single_point;
  if (e.value == "verify") return SweepMode::verify;
  fail(e.where, "mode", "expected curve-tau2, grid-couplings, single-point or verify, got '" + e.value + "'");
}

inline void parse_verify(Reader& r, VerifyOptions& v) {
  auto opt_tol = [&](const char* key, double& dst) {
    if (r.has(key)) dst = r.positive(key);
  };
  auto opt_count = [&](const char* key, int& dst, int min) {
    if (!r.has(key)) return;
    const long long n = r.integer(key);
    if (n < min || n > 1'000'000) fail(r.where(key), key, "must be >= " + std::to_string(min));
    dst = static_cast<int>(n);
  };
  if (r.has("seed")) {
    const long long s = r.integer("seed");
    if (s < 0) fail(r.where("seed"), "seed", "must be >= 0");
    v.seed = static_cast<unsigned long long>(s);
  }
  opt_count("fock_cases", v.fock_cases, 1);
  opt_count("fock_dim", v.fock_dim, 2);
  opt_count("property_cases", v.property_cases, 1);
  opt_count("identity_cases", v.identity_cases, 1);
  opt_tol("tol_p1", v.tol_p1);
  opt_tol("tol_p2", v.tol_p2);
  opt_tol("tol_weyl", v.tol_weyl);
  opt_tol("tol_partition", v.tol_partition);
  opt_tol("tol_identity", v.tol_identity);
  opt_tol("tol_quadrature", v.tol_quadrature);
  opt_tol("tol_dawson", v.tol_dawson);
  opt_tol("tol_dawson_asymptotic", v.tol_dawson_asymptotic);
  opt_tol("tol_first_law", v.tol_first_law);
  opt_tol("tol_fixed_point", v.tol_fixed_point);
  opt_tol("tol_signaling", v.tol_signaling);
}

}  // namespace config_detail

/// Parses and validates a configuration document plus `key=value` overrides.
inline SweepSpec parse_config(std::string_view text, const std::vector<std::string>& overrides = {}) {
  using namespace config_detail;
  std::map<std::string, Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    add_line(entries, line, "line " + std::to_string(++line_no), false);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  for (std::size_t i = 0; i < overrides.size(); ++i)
    add_line(entries, overrides[i], "--set #" + std::to_string(i + 1), true);

  Reader r(std::move(entries));
  SweepSpec s;
  s.mode = parse_mode(r);

  if (s.mode != SweepMode::verify) {
    s.omega1 = r.positive("omega1");
    s.omega2 = r.positive("omega2");
    s.tau1 = r.number("tau1");
  }
  switch (s.mode) {
    case SweepMode::curve_tau2:
      s.lambda1 = r.non_negative("lambda1");
      s.lambda2 = r.non_negative("lambda2");
      s.tau2_axis = r.axis("tau2", false);
      if (!(s.tau2_axis.start > s.tau1)) fail(r.where("tau2_start"), "tau2_start", "must exceed tau1");
      break;
    case SweepMode::grid_couplings:
      s.tau2 = r.number("tau2");
      if (!(s.tau2 > s.tau1)) fail(r.where("tau2"), "tau2", "must exceed tau1");
      s.lambda1_axis = r.axis("lambda1", true);
      s.lambda2_axis = r.axis("lambda2", true);
      break;
    case SweepMode::single_point:
      s.tau2 = r.number("tau2");
      if (!(s.tau2 > s.tau1)) fail(r.where("tau2"), "tau2", "must exceed tau1");
      s.lambda1 = r.non_negative("lambda1");
      s.lambda2 = r.non_negative("lambda2");
      if (r.has("initial_p")) {
        const double p = r.number("initial_p");
        if (!(p >= 0.0 && p <= 1.0)) fail(r.where("initial_p"), "initial_p", "must lie in [0,1]");
        s.initial_p = p;
      }
      break;
    case SweepMode::verify:
      parse_verify(r, s.verify);
      break;
  }
  if (r.has("output")) s.output_path = r.entry("output").value;
  r.reject_unused(s.mode);
  return s;
}

}  // namespace ottoqft

#endif
