#ifndef OTTOQFT_MINKOWSKI_HPP
#define OTTOQFT_MINKOWSKI_HPP

// Closed-form smeared kernel of an inertial detector with Gaussian smearing
// F(x) = exp(-|x|^2/sigma^2) / (sqrt(pi) sigma)^3 coupled to the massless
// Minkowski vacuum in 3+1 dimensions.

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <tuple>
#include <sstream>
#include <vector>

#include "ottoqft/algebra.hpp"
#include "ottoqft/cycle.hpp"
#include "ottoqft/dawson.hpp"
#include "ottoqft/error.hpp"

namespace ottoqft {

struct MinkowskiParams {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double sigma = 1.0;
  double dtau = 0.0;  // tau2 - tau1
};

inline void validate(const MinkowskiParams& p) {
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma)) throw Error(ErrorKind::validation, "sigma must be > 0");
  if (!(p.lambda1 >= 0.0) || !std::isfinite(p.lambda1))
    throw Error(ErrorKind::validation, "lambda1 must be >= 0");
  if (!(p.lambda2 >= 0.0) || !std::isfinite(p.lambda2))
    throw Error(ErrorKind::validation, "lambda2 must be >= 0");
  if (!(p.dtau >= 0.0) || !std::isfinite(p.dtau)) throw Error(ErrorKind::validation, "dtau must be >= 0");
}

inline MomentSet minkowski_moments(const MinkowskiParams& p) {
  using std::numbers::pi;
  validate(p);
  const double s2 = p.sigma * p.sigma;
  const double x = p.dtau / (std::numbers::sqrt2 * p.sigma);
  const double l12 = p.lambda1 * p.lambda2;

  MomentSet m;
  m.nu1 = std::exp(-p.lambda1 * p.lambda1 / (2.0 * pi * pi * s2));
  m.nu2 = std::exp(-p.lambda2 * p.lambda2 / (2.0 * pi * pi * s2));
  m.e12 = l12 / (2.0 * pi * std::sqrt(pi) * s2) * x * std::exp(-x * x);
  m.mu12 = l12 / (4.0 * pi * pi * s2) * (1.0 - 2.0 * x * dawson(x));

  for (auto [nu, name, l] : {std::tuple{m.nu1, "lambda1", p.lambda1}, std::tuple{m.nu2, "lambda2", p.lambda2}}) {
    if (nu == 0.0) {
      std::ostringstream os;
      os << name << "/sigma = " << l / p.sigma << " makes nu underflow to zero";
      throw Error(ErrorKind::range, os.str());
    }
  }
  return m;
}

/// Everything a sweep row needs about one Minkowski cycle.
struct MinkowskiCycle {
  MomentSet moments;
  double theta = 0.0;
  std::optional<double> p_cyclic;
  std::optional<double> p1;
  WorkValue work;
};

/// Moments plus closed-cycle work for two equally smeared kicks.
inline MinkowskiCycle minkowski_cycle(const CycleConfig& c) {
  validate(c);
  if (c.first.width != c.second.width)
    throw Error(ErrorKind::validation, "the Minkowski kernel needs equal smearing widths");
  MinkowskiCycle out;
  out.moments = minkowski_moments(
      {c.first.coupling, c.second.coupling, c.first.width, c.second.tau - c.first.tau});
  out.theta = theta(c);
  out.p_cyclic = cyclic_initial_population(out.moments, out.theta);
  if (out.p_cyclic) out.p1 = p_after_first(*out.p_cyclic, out.moments);
  out.work = extracted_work(out.moments, out.theta, c.first.gap - c.second.gap);
  return out;
}

struct CurvePoint {
  double tau2 = 0.0;
  double w_ext = 0.0;  // in units of 1/sigma, i.e. W_ext sigma at sigma = 1
};

/// Work as a function of the second kick time, everything else fixed.
inline std::vector<CurvePoint> figure4a_curve(double omega1, double omega2, double tau1, double lambda1,
                                              double lambda2, std::span<const double> tau2_grid) {
  for (std::size_t i = 0; i < tau2_grid.size(); ++i) {
    if (!(tau2_grid[i] > tau1)) throw Error(ErrorKind::validation, "tau2 grid must lie after tau1");
    if (i > 0 && !(tau2_grid[i] > tau2_grid[i - 1]))
      throw Error(ErrorKind::validation, "tau2 grid must be strictly increasing");
  }
  std::vector<CurvePoint> curve;
  curve.reserve(tau2_grid.size());
  for (double t2 : tau2_grid) {
    CycleConfig c{{tau1, omega1, lambda1, 1.0}, {t2, omega2, lambda2, 1.0}, std::nullopt};
    curve.push_back({t2, minkowski_cycle(c).work.work});
  }
  return curve;
}

}  // namespace ottoqft

#endif
