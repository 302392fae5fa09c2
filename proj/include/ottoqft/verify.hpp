#ifndef OTTOQFT_VERIFY_HPP
#define OTTOQFT_VERIFY_HPP

// The `ottoqft verify` suite: every closed form against its brute-force or
// high-precision counterpart, with measured deviation and threshold.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "ottoqft/algebra.hpp"
#include "ottoqft/config.hpp"
#include "ottoqft/cycle.hpp"
#include "ottoqft/dawson.hpp"
#include "ottoqft/dawson_reference.hpp"
#include "ottoqft/ensemble.hpp"
#include "ottoqft/minkowski.hpp"
#include "ottoqft/oracle.hpp"

namespace ottoqft {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  std::string text() const {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3);
    for (const auto& c : checks)
      os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(34) << c.name << " deviation " << c.deviation
         << "  threshold " << c.threshold << '\n';
    std::size_t failed = 0;
    for (const auto& c : checks) failed += c.passed ? 0 : 1;
    if (failed == 0) {
      os << "all " << checks.size() << " checks passed\n";
    } else {
      os << failed << " of " << checks.size() << " checks failed:";
      for (const auto& c : checks)
        if (!c.passed) os << ' ' << c.name;
      os << '\n';
    }
    return os.str();
  }
};

namespace verify_detail {

inline double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline CheckResult below(std::string name, double dev, double tol) { return {std::move(name), dev, tol, dev < tol}; }

}  // namespace verify_detail

/// Fock oracle against the closed-form p1 and p2 over `cases` random single-mode setups.
/// `flip_e12` negates E12 on the formula side; only meant for mutation testing.
inline std::pair<double, double> fock_population_deviation(const VerifyOptions& o, bool flip_e12 = false) {
  ensemble::Rng rng(o.seed);
  double d1 = 0.0;
  double d2 = 0.0;
  for (int i = 0; i < o.fock_cases; ++i) {
    const auto c = ensemble::random_fock_case(rng, 0.5, o.fock_dim);
    MomentSet m = moment_set_from_kernel(single_mode_kernel(c.params));
    if (flip_e12) m.e12 = -m.e12;
    const double th = c.omega1 * c.tau1 - c.omega2 * c.tau2;
    const FockPopulations f = simulate_cycle_fock(c.params, c.omega1, c.omega2, c.tau1, c.tau2, c.p);
    d1 = std::max(d1, std::abs(f.p1 - p_after_first(c.p, m)));
    d2 = std::max(d2, std::abs(f.p2 - p_after_second(c.p, m, th)));
  }
  return {d1, d2};
}

/// Largest |dawson - 50-digit Maclaurin| on n points spread over [-6, 6].
inline double dawson_series_deviation(double crossover = detail::kDawsonCrossover, int n = 200) {
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -6.0 + 12.0 * i / (n - 1);
    dev = std::max(dev, std::abs(detail::dawson_with_crossover(x, crossover) - reference::dawson_maclaurin(x)));
  }
  return dev;
}

inline double dawson_asymptotic_deviation(int n = 200) {
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = 6.0 + 44.0 * i / (n - 1);
    dev = std::max(dev, verify_detail::relative(dawson(x), reference::dawson_asymptotic(x)));
  }
  return dev;
}

/// Max relative gap between quadrature and closed-form Minkowski moments on a
/// 5x5x5 grid over (lambda1, lambda2, dtau) in [0.5,100] x [0.5,2] x [0.25,3].
inline double quadrature_grid_deviation() {
  const Axis l1{0.5, 100.0, 5}, l2{0.5, 2.0, 5}, dt{0.25, 3.0, 5};
  double dev = 0.0;
  for (double a : l1.values())
    for (double b : l2.values())
      for (double t : dt.values()) {
        const MomentSet q = quadrature_minkowski_moments(a, b, 1.0, t);
        const MomentSet m = minkowski_moments({a, b, 1.0, t});
        using verify_detail::relative;
        dev = std::max({dev, relative(q.nu1, m.nu1), relative(q.nu2, m.nu2), relative(q.e12, m.e12),
                        relative(q.mu12, m.mu12)});
      }
  return dev;
}

inline VerifyReport run_verify(const VerifyOptions& o = {}) {
  using verify_detail::below;
  VerifyReport rep;

  const auto [d1, d2] = fock_population_deviation(o);
  rep.checks.push_back(below("fock p1 vs closed form", d1, o.tol_p1));
  rep.checks.push_back(below("fock p2 vs closed form", d2, o.tol_p2));

  {
    ensemble::Rng rng(o.seed + 1);
    double dev = 0.0;
    for (int i = 0; i < o.fock_cases; ++i) dev = std::max(dev, verify_weyl_moments(ensemble::random_fock_case(rng, 0.5, o.fock_dim).params));
    rep.checks.push_back(below("weyl moments vs fock traces", dev, o.tol_weyl));
  }

  {
    ensemble::Rng rng(o.seed + 2);
    double part = 0.0;
    double ident = 0.0;
    for (int i = 0; i < o.identity_cases; ++i) {
      const TabulatedKernel k = ensemble::random_kernel(rng);
      const MomentSet m = moment_set_from_kernel(k);
      const WeylMoments w = weyl_moments(m);
      part = std::max(part, std::abs(w.cccc + w.cssc + w.sccs + w.ssss - 1.0));
      const SumDifferenceNu sd = nu_of_sum_and_difference(k);
      ident = std::max({ident, std::abs(sd.minus + sd.plus - 2.0 * m.nu1 * m.nu2 * std::cosh(4.0 * m.mu12)),
                        std::abs(sd.minus - sd.plus - 2.0 * m.nu1 * m.nu2 * std::sinh(4.0 * m.mu12))});
    }
    rep.checks.push_back(below("weyl partition of unity", part, o.tol_partition));
    rep.checks.push_back(below("cosh/sinh nu identities", ident, o.tol_identity));
  }

  rep.checks.push_back(below("minkowski quadrature vs analytic", quadrature_grid_deviation(), o.tol_quadrature));
  rep.checks.push_back(below("dawson vs maclaurin |x|<=6", dawson_series_deviation(), o.tol_dawson));
  rep.checks.push_back(below("dawson vs asymptotic x in [6,50]", dawson_asymptotic_deviation(), o.tol_dawson_asymptotic));

  {
    ensemble::Rng rng(o.seed + 3);
    double first_law = 0.0;
    double fixed = 0.0;
    double null_work = 0.0;
    for (int i = 0; i < o.property_cases; ++i) {
      const auto c = ensemble::random_cycle(rng);
      const double dw = c.omega1 - c.omega2;
      if (const auto p = cyclic_initial_population(c.moments, c.theta)) {
        const double p1 = p_after_first(*p, c.moments);
        const double p2 = p_after_second(*p, c.moments, c.theta);
        const double w = extracted_work(c.moments, c.theta, dw).work;
        const double q = c.omega1 * (p1 - *p) + c.omega2 * (p2 - p1);
        first_law = std::max({first_law, std::abs(w - q), std::abs(w - (p1 - *p) * dw)});
        fixed = std::max(fixed, std::abs(p2 - *p));
      }
      MomentSet silent = c.moments;
      silent.e12 = 0.0;
      null_work = std::max(null_work, std::abs(extracted_work(silent, c.theta, dw).work));
    }
    rep.checks.push_back(below("first law", first_law, o.tol_first_law));
    rep.checks.push_back(below("cyclicity fixed point", fixed, o.tol_fixed_point));
    rep.checks.push_back({"no-signaling null work", null_work, 0.0, null_work == 0.0});
  }

  {
    const cplx a1{0.31, -0.17}, a2{-0.12, 0.44};
    const double e0 = moment_set_from_kernel(single_mode_kernel({a1, a2, 0.0, 2})).e12;
    double dev = 0.0;
    for (double nbar : {0.5, 1.0, 5.0})
      dev = std::max(dev, std::abs(moment_set_from_kernel(single_mode_kernel({a1, a2, nbar, 2})).e12 - e0));
    rep.checks.push_back({"E12 independent of nbar", dev, o.tol_signaling, dev <= o.tol_signaling});
  }
  return rep;
}

}  // namespace ottoqft

#endif
