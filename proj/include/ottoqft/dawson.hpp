#ifndef OTTOQFT_DAWSON_HPP
#define OTTOQFT_DAWSON_HPP

#include <cmath>

namespace ottoqft {

namespace detail {

inline constexpr double kDawsonCrossover = 6.0;
inline constexpr int kDawsonFractionDepth = 24;

// e^{-x^2} sum_n x^{2n+1} / (n! (2n+1)). Every term is positive, so the sum
// keeps full relative precision where the alternating series would cancel.
inline double dawson_series(double x) {
  const double x2 = x * x;
  double term = x;  // x^{2n+1} / n!
  double sum = x;
  for (int n = 1; n < 400; ++n) {
    term *= x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (n > x2 && add < 1e-17 * sum) break;
  }
  return std::exp(-x2) * sum;
}

// Laplace continued fraction 1 / (2(x - (1/2)/(x - 1/(x - (3/2)/(x - ...))))),
// evaluated bottom-up; good to a few ulp for x >= 6.
inline double dawson_fraction(double x) {
  double tail = 0.0;
  for (int n = kDawsonFractionDepth; n >= 1; --n) tail = 0.5 * n / (x - tail);
  return 0.5 / (x - tail);
}

inline double dawson_with_crossover(double x, double crossover) {
  const double ax = std::abs(x);
  const double v = ax <= crossover ? dawson_series(ax) : dawson_fraction(ax);
  return std::signbit(x) ? -v : v;
}

}  // namespace detail

/// Dawson function D+(x) = (sqrt(pi)/2) e^{-x^2} erfi(x).
inline double dawson(double x) {
  if (std::isnan(x)) return x;
  if (std::isinf(x)) return 0.0;
  return detail::dawson_with_crossover(x, detail::kDawsonCrossover);
}

}  // namespace ottoqft

#endif
