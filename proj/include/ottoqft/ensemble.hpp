#ifndef OTTOQFT_ENSEMBLE_HPP
#define OTTOQFT_ENSEMBLE_HPP

// Random but physically realizable inputs for property sweeps. Kernels come from
// two thermal bosonic modes, so every MomentSet drawn here is realized by an
// actual quasi-free state.

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "ottoqft/algebra.hpp"
#include "ottoqft/oracle.hpp"

namespace ottoqft::ensemble {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline cplx random_coupling(Rng& rng, double max_abs) {
  return std::polar(uniform(rng, 0.0, max_abs), uniform(rng, -std::numbers::pi, std::numbers::pi));
}

/// W_jk = sum over two modes of (2 n_m + 1) Re(a_jm conj(a_km)) + i Im(a_jm conj(a_km)).
inline TabulatedKernel random_kernel(Rng& rng, double max_abs = 0.6, double max_nbar = 2.0) {
  TabulatedKernel k;
  for (int mode = 0; mode < 2; ++mode) {
    const cplx a1 = random_coupling(rng, max_abs);
    const cplx a2 = random_coupling(rng, max_abs);
    const double nbar = uniform(rng, 0.0, max_nbar);
    const SingleModeKernel sm{a1, a2, nbar};
    k.w11 += sm.wightman(Kick::first, Kick::first).real();
    k.w22 += sm.wightman(Kick::second, Kick::second).real();
    k.w12 += sm.wightman(Kick::first, Kick::second);
  }
  return k;
}

inline MomentSet random_moments(Rng& rng) { return moment_set_from_kernel(random_kernel(rng)); }

struct RandomCycle {
  MomentSet moments;
  double theta = 0.0;
  double omega1 = 1.0;
  double omega2 = 1.0;
};

inline RandomCycle random_cycle(Rng& rng) {
  RandomCycle c;
  c.moments = random_moments(rng);
  c.theta = uniform(rng, -10.0, 10.0);
  c.omega1 = uniform(rng, 0.1, 5.0);
  c.omega2 = uniform(rng, 0.1, 5.0);
  return c;
}

/// Single-mode oracle case: |alpha| <= max_abs, nbar in {0, 1}.
struct FockCase {
  FockParams params;
  double omega1 = 1.0;
  double omega2 = 1.0;
  double tau1 = 0.0;
  double tau2 = 1.0;
  double p = 0.0;
};

inline FockCase random_fock_case(Rng& rng, double max_abs = 0.5, int dim = 60) {
  FockCase c;
  c.params.alpha1 = random_coupling(rng, max_abs);
  c.params.alpha2 = random_coupling(rng, max_abs);
  c.params.nbar = std::uniform_int_distribution<int>(0, 1)(rng);
  c.params.dim = dim;
  c.omega1 = uniform(rng, 0.1, 5.0);
  c.omega2 = uniform(rng, 0.1, 5.0);
  c.tau1 = uniform(rng, -2.0, 2.0);
  c.tau2 = c.tau1 + uniform(rng, 0.05, 4.0);
  c.p = uniform(rng, 0.0, 1.0);
  return c;
}

}  // namespace ottoqft::ensemble

#endif
