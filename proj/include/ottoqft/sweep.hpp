#ifndef OTTOQFT_SWEEP_HPP
#define OTTOQFT_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstddef>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ottoqft/config.hpp"
#include "ottoqft/cycle.hpp"
#include "ottoqft/error.hpp"
#include "ottoqft/minkowski.hpp"

namespace ottoqft {

/// Shortest text that is still 17 significant digits; re-parses to the same double.
/// Negative zero prints as 0.
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) return "nan";
  return {buf, ptr};
}

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Evaluates fn(0..n-1) on `jobs` workers; results land in index order.
template <class Fn>
auto parallel_map(std::size_t n, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(n);
  jobs = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

namespace sweep_detail {

inline CycleConfig make_cycle(const SweepSpec& s, double tau2, double lambda1, double lambda2) {
  return {{s.tau1, s.omega1, lambda1, 1.0}, {tau2, s.omega2, lambda2, 1.0}, s.initial_p};
}

inline std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : "nan"; }

inline const char* flag(bool b) { return b ? "true" : "false"; }

inline std::string curve_row(const SweepSpec& s, double tau2) {
  const MinkowskiCycle c = minkowski_cycle(make_cycle(s, tau2, s.lambda1, s.lambda2));
  const double w = c.work.work;
  std::string row;
  for (const std::string& f :
       {format_number(tau2), format_number(c.theta), format_number(c.moments.nu1), format_number(c.moments.nu2),
        format_number(c.moments.e12), format_number(c.moments.mu12), opt(c.p_cyclic), opt(c.p1), format_number(w)}) {
    row += f;
    row += ',';
  }
  row += flag(!c.work.degenerate && w > 0.0);
  row += '\n';
  return row;
}

inline std::string grid_row(const SweepSpec& s, double lambda1, double lambda2) {
  const MinkowskiCycle c = minkowski_cycle(make_cycle(s, s.tau2, lambda1, lambda2));
  const double w = c.work.work;
  return format_number(lambda1) + ',' + format_number(lambda2) + ',' + format_number(w) + ',' +
         flag(!c.work.degenerate && w > 0.0) + '\n';
}

}  // namespace sweep_detail

/// CSV for a curve-tau2 or grid-couplings spec. LF line endings, header first,
/// rows in grid order (lambda1 outer, lambda2 inner for the grid).
inline std::string run_sweep(const SweepSpec& spec, unsigned jobs = default_jobs()) {
  using namespace sweep_detail;
  std::string csv;
  std::vector<std::string> rows;
  if (spec.mode == SweepMode::curve_tau2) {
    csv = "tau2_over_sigma,theta,nu1,nu2,E12,mu12,p_cyclic,p1,w_ext_sigma,pwc\n";
    const auto grid = spec.tau2_axis.values();
    rows = parallel_map(grid.size(), jobs, [&](std::size_t i) { return curve_row(spec, grid[i]); });
  } else if (spec.mode == SweepMode::grid_couplings) {
    csv = "lambda1_over_sigma,lambda2_over_sigma,w_ext_sigma,pwc\n";
    const auto l1 = spec.lambda1_axis.values();
    const auto l2 = spec.lambda2_axis.values();
    rows = parallel_map(l1.size() * l2.size(), jobs,
                        [&](std::size_t i) { return grid_row(spec, l1[i / l2.size()], l2[i % l2.size()]); });
  } else {
    throw Error(ErrorKind::validation, "run_sweep needs mode curve-tau2 or grid-couplings, got " +
                                           std::string(to_string(spec.mode)));
  }
  for (const auto& r : rows) csv += r;
  return csv;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::io, "failed writing '" + path + "'");
}

struct PointResult {
  MomentSet moments;
  double theta = 0.0;
  WorkReport report;
};

inline PointResult run_point(const SweepSpec& spec) {
  const CycleConfig c = sweep_detail::make_cycle(spec, spec.tau2, spec.lambda1, spec.lambda2);
  PointResult r;
  r.moments = minkowski_cycle(c).moments;
  r.theta = theta(c);
  r.report = stroke_ledger(c, r.moments);
  return r;
}

/// `key = value` lines; w_ext and efficiency are left out for open cycles.
inline std::string format_point(const PointResult& r) {
  std::ostringstream os;
  auto line = [&](const char* k, const std::string& v) { os << k << " = " << v << '\n'; };
  const WorkReport& w = r.report;
  line("theta", format_number(r.theta));
  line("nu1", format_number(r.moments.nu1));
  line("nu2", format_number(r.moments.nu2));
  line("E12", format_number(r.moments.e12));
  line("mu12", format_number(r.moments.mu12));
  line("p", format_number(w.p));
  line("p1", format_number(w.p1));
  line("p2", format_number(w.p2));
  line("w1", format_number(w.w1));
  line("q2", format_number(w.q2));
  line("w3", format_number(w.w3));
  line("q4", format_number(w.q4));
  line("q_total", format_number(w.q_total));
  if (w.w_ext) line("w_ext", format_number(*w.w_ext));
  if (w.efficiency) line("efficiency", format_number(*w.efficiency));
  line("pwc", sweep_detail::flag(w.pwc));
  line("degenerate", sweep_detail::flag(w.degenerate));
  line("closed", sweep_detail::flag(w.closed));
  return os.str();
}

}  // namespace ottoqft

#endif
