#ifndef OTTOQFT_DAWSON_REFERENCE_HPP
#define OTTOQFT_DAWSON_REFERENCE_HPP

// 50-digit reference values for the Dawson function, used only for checking.
// Deliberately different algorithms from ottoqft::dawson.

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ottoqft::reference {

using hp = boost::multiprecision::cpp_bin_float_50;

/// Alternating Maclaurin series sum_n (-1)^n 2^n x^{2n+1} / (2n+1)!!.
/// Loses about x^2 / ln 10 digits to cancellation; fine for |x| <= 8.
inline double dawson_maclaurin(double x) {
  const hp xx = x;
  const hp x2 = xx * xx;
  hp term = xx;
  hp sum = xx;
  for (int n = 0; n < 2000; ++n) {
    term *= -2 * x2 / (2 * n + 3);
    sum += term;
    if (n > x * x && abs(term) < hp("1e-45")) break;
  }
  return static_cast<double>(sum);
}

/// Asymptotic series (1/2x) sum_n (2n-1)!! / (2x^2)^n, cut at its smallest term.
inline double dawson_asymptotic(double x) {
  const hp xx = x;
  const hp z = 1 / (2 * xx * xx);
  hp term = 1;
  hp sum = 1;
  for (int n = 1; n < 10000; ++n) {
    const hp next = term * (2 * n - 1) * z;
    if (abs(next) >= abs(term) || abs(next) < hp("1e-45")) break;
    term = next;
    sum += term;
  }
  return static_cast<double>(sum / (2 * xx));
}

}  // namespace ottoqft::reference

#endif
