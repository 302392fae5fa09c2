// Minimal library use: one Minkowski cycle and its stroke ledger.

#include <cstdio>

#include "ottoqft/ottoqft.hpp"

int main() {
  using namespace ottoqft;
  // tau, gap, coupling, width; sigma = 1
  const CycleConfig cycle{{0.0, 1.0, 100.0, 1.0}, {0.5, 3.0, 1.0, 1.0}, {}};
  const MinkowskiCycle mc = minkowski_cycle(cycle);
  const WorkReport r = stroke_ledger(cycle, mc.moments);

  std::printf("nu1 %.6g  nu2 %.6g  E12 %.6g  mu12 %.6g\n", mc.moments.nu1, mc.moments.nu2, mc.moments.e12,
              mc.moments.mu12);
  std::printf("p %.6f  p1 %.6f  p2 %.6f\n", r.p, r.p1, r.p2);
  std::printf("q2 %.6f  q4 %.6f  w_ext %.6f  pwc %s\n", r.q2, r.q4, r.w_ext.value_or(0.0), r.pwc ? "yes" : "no");
}
