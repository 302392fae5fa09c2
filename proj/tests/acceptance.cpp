// Acceptance suite. `acceptance` runs every criterion, `acceptance N` runs one.
// Prints one PASS/FAIL line per criterion; exit status 1 if any failed.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "ottoqft/ottoqft.hpp"

using namespace ottoqft;

namespace {

// Thresholds and sample sizes, fixed here rather than read from any config.
constexpr unsigned long long kSeed = 20240601;
constexpr int kNullCases = 1000;
constexpr int kCycleCases = 10000;
constexpr int kFockCases = 50;
constexpr int kFockDim = 60;
constexpr double kFockMaxAlpha = 0.5;
constexpr int kKernelCases = 1000;
constexpr double kTolFirstLaw = 1e-12;
constexpr double kTolFixedPoint = 1e-12;
constexpr double kTolP1 = 1e-8;
constexpr double kTolP2 = 1e-6;
constexpr double kTolWeyl = 1e-8;
constexpr double kTolPartition = 1e-12;
constexpr double kTolIdentity = 1e-12;
constexpr double kTolQuadrature = 1e-3;
constexpr double kTolDawsonSeries = 1e-12;
constexpr double kTolDawsonAsymptotic = 1e-10;
constexpr double kDawsonOne = 0.538079506912768;
constexpr double kTolDawsonOne = 1e-12;
constexpr double kTolSignaling = 1e-15;
constexpr double kCutoffMax = 1e-6;
constexpr double kSignalMin = 1e-4;
constexpr double kCurveStep = 0.01;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

template <class Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome within_time(Outcome o, double elapsed, double limit) {
  o.detail += " runtime " + sci(elapsed) + " s (limit " + sci(limit) + " s)";
  o.passed = o.passed && elapsed < limit;
  return o;
}

Outcome no_signaling_null() {
  Outcome o;
  int nonzero = 0;
  const double t = seconds([&] {
    ensemble::Rng rng(kSeed);
    for (int i = 0; i < kNullCases; ++i) {
      auto c = ensemble::random_cycle(rng);
      c.moments.e12 = 0.0;
      if (extracted_work(c.moments, c.theta, c.omega1 - c.omega2).work != 0.0) ++nonzero;
    }
  });
  o.passed = nonzero == 0;
  o.detail = std::to_string(nonzero) + " of " + std::to_string(kNullCases) + " nonzero;";
  return within_time(o, t, 1.0);
}

Outcome signal_cutoff() {
  Outcome o;
  double late = 0.0;
  double early = 0.0;
  int sign_changes = 0;
  const double t = seconds([&] {
    std::vector<double> in_window;
    for (int i = 1; 0.2 + i * kCurveStep < 3.0 - 1e-9; ++i) in_window.push_back(0.2 + i * kCurveStep);
    std::vector<double> tail;
    for (int i = 0; 4.5 + i * kCurveStep <= 8.0 + 1e-9; ++i) tail.push_back(4.5 + i * kCurveStep);
    const auto head = figure4a_curve(1.0, 3.0, 0.0, 100.0, 1.0, in_window);
    const auto rest = figure4a_curve(1.0, 3.0, 0.0, 100.0, 1.0, tail);
    for (std::size_t i = 0; i < head.size(); ++i) {
      early = std::max(early, std::abs(head[i].w_ext));
      if (i > 0 && head[i].w_ext * head[i - 1].w_ext < 0.0) ++sign_changes;
    }
    for (const auto& p : rest) late = std::max(late, std::abs(p.w_ext));
  });
  o.passed = late < kCutoffMax && early > kSignalMin && sign_changes >= 1;
  o.detail = "max|W| on [4.5,8] = " + sci(late) + " (< " + sci(kCutoffMax) + "), max|W| on (0.2,3) = " + sci(early) +
             " (> " + sci(kSignalMin) + "), sign changes " + std::to_string(sign_changes) + ";";
  return within_time(o, t, 1.0);
}

struct CycleSweep {
  double first_law = 0.0;
  double fixed_point = 0.0;
  int outside_unit = 0;
  int closed = 0;
};

CycleSweep cycle_sweep() {
  CycleSweep s;
  ensemble::Rng rng(kSeed);
  for (int i = 0; i < kCycleCases; ++i) {
    const auto c = ensemble::random_cycle(rng);
    const auto p = cyclic_initial_population(c.moments, c.theta);
    if (!p) continue;
    ++s.closed;
    const double dw = c.omega1 - c.omega2;
    const double p1 = p_after_first(*p, c.moments);
    const double p2 = p_after_second(*p, c.moments, c.theta);
    const double w = extracted_work(c.moments, c.theta, dw).work;
    const double q2 = c.omega1 * (p1 - *p);
    const double q4 = c.omega2 * (p2 - p1);
    s.first_law = std::max({s.first_law, std::abs(w - (q2 + q4)), std::abs(w - (p1 - *p) * dw)});
    s.fixed_point = std::max(s.fixed_point, std::abs(p2 - *p));
    if (!(*p >= 0.0 && *p <= 1.0)) ++s.outside_unit;
  }
  return s;
}

Outcome first_law() {
  CycleSweep s;
  const double t = seconds([&] { s = cycle_sweep(); });
  Outcome o{s.first_law < kTolFirstLaw && s.closed > 0,
            "max deviation " + sci(s.first_law) + " (< " + sci(kTolFirstLaw) + ") over " + std::to_string(s.closed) +
                " closed cycles;"};
  return within_time(o, t, 1.0);
}

Outcome fixed_point() {
  const CycleSweep s = cycle_sweep();
  return {s.fixed_point < kTolFixedPoint && s.outside_unit == 0 && s.closed > 0,
          "max |p2(p*) - p*| " + sci(s.fixed_point) + " (< " + sci(kTolFixedPoint) + "), p* outside [0,1]: " +
              std::to_string(s.outside_unit)};
}

Outcome sign_law() {
  ensemble::Rng rng(kSeed);
  int tested = 0;
  int violations = 0;
  for (int i = 0; i < kCycleCases; ++i) {
    const auto c = ensemble::random_cycle(rng);
    const double dw = c.omega1 - c.omega2;
    const double s = std::sin(2.0 * c.moments.e12) * std::sin(c.theta);
    if (!(dw > 0.0) || !(c.moments.nu1 < 1.0) || s == 0.0) continue;
    const WorkValue w = extracted_work(c.moments, c.theta, dw);
    if (w.degenerate) continue;
    ++tested;
    if (!((w.work > 0.0 && s < 0.0) || (w.work < 0.0 && s > 0.0))) ++violations;
  }
  return {violations == 0 && tested > 0,
          std::to_string(violations) + " violations in " + std::to_string(tested) + " cycles with dOmega > 0"};
}

std::vector<ensemble::FockCase> fock_cases() {
  ensemble::Rng rng(kSeed);
  std::vector<ensemble::FockCase> out;
  for (int i = 0; i < kFockCases; ++i) out.push_back(ensemble::random_fock_case(rng, kFockMaxAlpha, kFockDim));
  return out;
}

Outcome fock_equivalence() {
  double d1 = 0.0;
  double d2 = 0.0;
  const double t = seconds([&] {
    for (const auto& c : fock_cases()) {
      const MomentSet m = moment_set_from_kernel(single_mode_kernel(c.params));
      const FockPopulations f = simulate_cycle_fock(c.params, c.omega1, c.omega2, c.tau1, c.tau2, c.p);
      d1 = std::max(d1, std::abs(f.p1 - p_after_first(c.p, m)));
      d2 = std::max(d2, std::abs(f.p2 - p_after_second(c.p, m, c.omega1 * c.tau1 - c.omega2 * c.tau2)));
    }
  });
  Outcome o{d1 < kTolP1 && d2 < kTolP2, "max |dp1| " + sci(d1) + " (< " + sci(kTolP1) + "), max |dp2| " + sci(d2) +
                                             " (< " + sci(kTolP2) + ");"};
  return within_time(o, t, 30.0);
}

Outcome weyl_moment_check() {
  double dev = 0.0;
  double part = 0.0;
  auto partition = [](const WeylMoments& w) { return std::abs(w.cccc + w.cssc + w.sccs + w.ssss - 1.0); };
  for (const auto& c : fock_cases()) {
    dev = std::max(dev, verify_weyl_moments(c.params));
    part = std::max(part, partition(weyl_moments(moment_set_from_kernel(single_mode_kernel(c.params)))));
  }
  ensemble::Rng rng(kSeed);
  for (int i = 0; i < kKernelCases; ++i) part = std::max(part, partition(weyl_moments(ensemble::random_moments(rng))));
  return {dev < kTolWeyl && part < kTolPartition, "max moment deviation " + sci(dev) + " (< " + sci(kTolWeyl) +
                                                      "), partition of unity " + sci(part) + " (< " +
                                                      sci(kTolPartition) + ")"};
}

Outcome cosh_sinh_identities() {
  ensemble::Rng rng(kSeed);
  double dev = 0.0;
  for (int i = 0; i < kKernelCases; ++i) {
    const TabulatedKernel k = ensemble::random_kernel(rng);
    const MomentSet m = moment_set_from_kernel(k);
    const SumDifferenceNu sd = nu_of_sum_and_difference(k);
    const double n = m.nu1 * m.nu2;
    dev = std::max({dev, std::abs(sd.minus + sd.plus - 2.0 * n * std::cosh(4.0 * m.mu12)),
                    std::abs(sd.minus - sd.plus - 2.0 * n * std::sinh(4.0 * m.mu12))});
  }
  return {dev < kTolIdentity, "max deviation " + sci(dev) + " (< " + sci(kTolIdentity) + ") over " +
                                  std::to_string(kKernelCases) + " kernels"};
}

Outcome quadrature() {
  double dev = 0.0;
  const double t = seconds([&] { dev = quadrature_grid_deviation(); });
  Outcome o{dev < kTolQuadrature, "max relative deviation " + sci(dev) + " (< " + sci(kTolQuadrature) + ");"};
  return within_time(o, t, 10.0);
}

Outcome dawson_accuracy() {
  const double series = dawson_series_deviation();
  const double asym = dawson_asymptotic_deviation();
  const double one = std::abs(dawson(1.0) - kDawsonOne);
  return {series < kTolDawsonSeries && asym < kTolDawsonAsymptotic && one <= kTolDawsonOne,
          "series " + sci(series) + " (< " + sci(kTolDawsonSeries) + "), asymptotic rel " + sci(asym) + " (< " +
              sci(kTolDawsonAsymptotic) + "), |D(1) - ref| " + sci(one)};
}

Outcome thermal_invariance() {
  const cplx a1{0.31, -0.17}, a2{-0.12, 0.44};
  const double e0 = moment_set_from_kernel(single_mode_kernel({a1, a2, 0.0, 2})).e12;
  double dev = 0.0;
  for (double nbar : {0.5, 1.0, 5.0})
    dev = std::max(dev, std::abs(moment_set_from_kernel(single_mode_kernel({a1, a2, nbar, 2})).e12 - e0));
  return {dev <= kTolSignaling, "max |E12(nbar) - E12(0)| " + sci(dev) + " (<= " + sci(kTolSignaling) + ")"};
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / ("ottoqft_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "curve.cfg";
  std::ofstream(cfg) << "mode = curve-tau2\nomega1 = 1\nomega2 = 3\ntau1 = 0\nlambda1 = 100\nlambda2 = 1\n"
                        "tau2_start = 0.05\ntau2_stop = 8\ntau2_count = 800\n";
  const std::string cli = OTTOQFT_CLI_PATH;
  const int r1 = shell(cli + " sweep --config " + cfg.string() + " --jobs 1 --set output=" + (dir / "a.csv").string());
  const int r2 = shell(cli + " sweep --config " + cfg.string() + " --jobs 4 --set output=" + (dir / "b.csv").string());
  const std::string a = slurp(dir / "a.csv");
  const std::string b = slurp(dir / "b.csv");
  const int rv = shell(cli + " verify > " + (dir / "verify.txt").string() + " 2>&1");
  std::filesystem::remove_all(dir);
  const bool identical = r1 == 0 && r2 == 0 && !a.empty() && a == b;
  return {identical && rv == 0, std::string("sweep outputs ") + (identical ? "byte-identical" : "differ") + " (" +
                                    std::to_string(a.size()) + " bytes), verify exit " + std::to_string(rv)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{
      no_signaling_null, signal_cutoff,    first_law,  fixed_point,     sign_law,         fock_equivalence,
      weyl_moment_check, cosh_sinh_identities, quadrature, dawson_accuracy, thermal_invariance, cli_determinism};

  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: acceptance [1-%zu]...\n", criteria.size());
      return 2;
    }
    which.push_back(n);
  }
  if (which.empty())
    for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) which.push_back(n);

  bool all = true;
  for (int n : which) {
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("criterion %2d: %s  %s\n", n, o.passed ? "PASS" : "FAIL", o.detail.c_str());
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
