#ifndef OTTOQFT_CYCLE_HPP
#define OTTOQFT_CYCLE_HPP

// Otto-cycle bookkeeping for a delta-coupled detector: two adiabatic gap changes
// and two instantaneous field kicks, closed by the cyclicity condition p2 = p.

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "ottoqft/algebra.hpp"
#include "ottoqft/error.hpp"

namespace ottoqft {

/// One delta kick. All quantities are in units of the smearing width sigma.
struct InteractionEvent {
  double tau = 0.0;       // proper time of the kick
  double gap = 1.0;       // energy gap Omega at the kick
  double coupling = 0.0;  // lambda-tilde = lambda * eta
  double width = 1.0;     // sigma
};

struct CycleConfig {
  InteractionEvent first;
  InteractionEvent second;
  std::optional<double> initial_p;
};

inline void validate(const InteractionEvent& e) {
  if (!std::isfinite(e.tau)) throw Error(ErrorKind::validation, "non-finite kick time");
  if (!(e.gap > 0.0) || !std::isfinite(e.gap)) throw Error(ErrorKind::validation, "gap must be > 0");
  if (!(e.coupling >= 0.0) || !std::isfinite(e.coupling))
    throw Error(ErrorKind::validation, "coupling must be >= 0");
  if (!(e.width > 0.0) || !std::isfinite(e.width)) throw Error(ErrorKind::validation, "width must be > 0");
}

inline void validate(const CycleConfig& c) {
  validate(c.first);
  validate(c.second);
  if (!(c.second.tau > c.first.tau))
    throw Error(ErrorKind::validation, "second kick must come after the first (tau2 > tau1)");
  if (c.initial_p) detail::guard_probability(*c.initial_p);
}

/// theta = Omega1 tau1 - Omega2 tau2, the relative monopole phase of the kicks.
inline double theta(const CycleConfig& c) {
  validate(c.first);
  validate(c.second);
  return c.first.gap * c.first.tau - c.second.gap * c.second.tau;
}

namespace detail {
inline constexpr double kDegenerateTol = 1e-12;
}

/// Initial excited population that makes p2 = p.
///
/// Returns nullopt when |nu1 nu2 alpha - 1| < 1e-12: no kick disturbed the
/// qubit, every p is a fixed point, and the cycle does no work.
inline std::optional<double> cyclic_initial_population(const MomentSet& m, double theta) {
  const double denom = contraction_factor(m, theta) - 1.0;
  if (std::abs(denom) < detail::kDegenerateTol) return std::nullopt;
  const double num = 0.5 * m.nu2 * std::sin(2.0 * m.e12) * std::sin(theta);
  const double p = 0.5 - num / denom;
  if (p < -detail::kSimplexTol || p > 1.0 + detail::kSimplexTol) {
    std::ostringstream os;
    os.precision(17);
    os << "cyclic population " << p << " outside [0,1]";
    throw Error(ErrorKind::kernel_inconsistency, os.str());
  }
  return std::clamp(p, 0.0, 1.0);
}

struct WorkValue {
  double work = 0.0;
  bool degenerate = false;
};

/// Work extracted over one closed cycle, -(p - 1/2)(1 - nu1) delta_omega with p
/// the cyclic population, written as a single ratio so that E12 = 0 yields an
/// exact zero.
inline WorkValue extracted_work(const MomentSet& m, double theta, double delta_omega) {
  if (!std::isfinite(delta_omega)) throw Error(ErrorKind::domain, "non-finite delta_omega");
  const double denom = contraction_factor(m, theta) - 1.0;
  if (std::abs(denom) < detail::kDegenerateTol) return {0.0, true};
  const double num = 0.5 * m.nu2 * std::sin(2.0 * m.e12) * std::sin(theta) * (1.0 - m.nu1);
  return {num / denom * delta_omega, false};
}

/// True iff sin(2 E12) sin(theta) < 0 and nu1 < 1. Assumes delta_omega > 0;
/// with Omega1 < Omega2 the sign of the work flips.
inline bool positive_work_condition(const MomentSet& m, double theta) {
  return std::sin(2.0 * m.e12) * std::sin(theta) < 0.0 && m.nu1 < 1.0;
}

/// Per-stroke ledger. Works are done on the qubit; heats are absorbed by it.
struct WorkReport {
  double p = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double w1 = 0.0;  // gap Omega2 -> Omega1
  double q2 = 0.0;  // first kick at Omega1
  double w3 = 0.0;  // gap Omega1 -> Omega2
  double q4 = 0.0;  // second kick at Omega2
  std::optional<double> w_ext;  // only for closed cycles
  double q_total = 0.0;
  std::optional<double> efficiency;  // w_ext / q2
  bool pwc = false;
  bool degenerate = false;
  bool closed = false;
};

inline WorkReport stroke_ledger(const CycleConfig& config, const MomentSet& m) {
  validate(config);
  const double th = theta(config);
  const double o1 = config.first.gap;
  const double o2 = config.second.gap;
  const double delta_omega = o1 - o2;

  WorkReport r;
  const std::optional<double> cyclic = cyclic_initial_population(m, th);
  if (!cyclic) {
    r.degenerate = true;
    r.closed = true;
    r.w_ext = 0.0;
    if (config.initial_p) r.p = r.p1 = r.p2 = *config.initial_p;
    return r;
  }

  r.p = config.initial_p.value_or(*cyclic);
  r.p1 = p_after_first(r.p, m);
  r.p2 = p_after_second(r.p, m, th);
  r.w1 = r.p * delta_omega;
  r.q2 = o1 * (r.p1 - r.p);
  r.w3 = -r.p1 * delta_omega;
  r.q4 = o2 * (r.p2 - r.p1);
  r.q_total = r.q2 + r.q4;
  r.closed = !config.initial_p || std::abs(r.p2 - r.p) <= detail::kSimplexTol;
  if (r.closed) {
    r.w_ext = -(r.w1 + r.w3);
    r.pwc = *r.w_ext > 0.0;
    if (r.q2 != 0.0) r.efficiency = *r.w_ext / r.q2;
  }
  return r;
}

}  // namespace ottoqft

#endif
