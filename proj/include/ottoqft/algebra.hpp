#ifndef OTTOQFT_ALGEBRA_HPP
#define OTTOQFT_ALGEBRA_HPP

// Quasi-free kernel contract, the six Weyl moments of a two-kick history and
// the excited-state population maps of the delta-coupled detector.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <sstream>
#include <string>

#include "ottoqft/error.hpp"

namespace ottoqft {

using cplx = std::complex<double>;

/// Which of the two delta kicks a smeared field refers to.
enum class Kick { first, second };

/// Anything that can report the smeared two-point function W(f_i, f_j) for the
/// two kick smearings. W(f_i, f_i) must be real and non-negative and
/// W(f_1, f_2) = mu_12 + (i/2) E_12.
template <class K>
concept QuasiFreeKernel = requires(const K& k, Kick a, Kick b) {
  { k.wightman(a, b) } -> std::convertible_to<cplx>;
};

/// Kernel given directly by its three independent entries. W(f_2, f_1) is the
/// complex conjugate of W(f_1, f_2).
struct TabulatedKernel {
  double w11 = 0.0;
  double w22 = 0.0;
  cplx w12{0.0, 0.0};

  cplx wightman(Kick a, Kick b) const noexcept {
    if (a == b) return a == Kick::first ? cplx{w11, 0.0} : cplx{w22, 0.0};
    return a == Kick::first ? w12 : std::conj(w12);
  }
};

/// The four numbers through which any field state, geometry and trajectory
/// enters the cycle: nu_j = exp(-2 W(f_j, f_j)), the smeared causal propagator
/// E(f_1, f_2) and the symmetric correlator mu(Ef_1, Ef_2).
struct MomentSet {
  double nu1 = 1.0;
  double nu2 = 1.0;
  double e12 = 0.0;
  double mu12 = 0.0;

  friend bool operator==(const MomentSet&, const MomentSet&) = default;
};

inline void validate(const MomentSet& m) {
  auto fail = [](const char* what, double v) {
    std::ostringstream os;
    os.precision(17);
    os << what << " = " << v;
    throw Error(ErrorKind::domain, os.str());
  };
  if (!std::isfinite(m.nu1) || !(m.nu1 > 0.0 && m.nu1 <= 1.0)) fail("nu1 outside (0,1]", m.nu1);
  if (!std::isfinite(m.nu2) || !(m.nu2 > 0.0 && m.nu2 <= 1.0)) fail("nu2 outside (0,1]", m.nu2);
  if (!std::isfinite(m.e12)) fail("non-finite e12", m.e12);
  if (!std::isfinite(m.mu12)) fail("non-finite mu12", m.mu12);
}

namespace detail {

inline constexpr double kMaxExponent = 700.0;
inline constexpr double kConsistencyTol = 1e-9;
inline constexpr double kSimplexTol = 1e-12;

inline void guard_exponent(double mu12) {
  if (std::abs(4.0 * mu12) > kMaxExponent) {
    std::ostringstream os;
    os.precision(17);
    os << "|4 mu12| exceeds " << kMaxExponent << " (mu12 = " << mu12 << ")";
    throw Error(ErrorKind::range, os.str());
  }
}

inline void guard_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "population p = " << p << " outside [0,1]";
    throw Error(ErrorKind::domain, os.str());
  }
}

}  // namespace detail

/// Reduces a kernel to its MomentSet.
template <QuasiFreeKernel K>
MomentSet moment_set_from_kernel(const K& kernel) {
  const cplx w11 = kernel.wightman(Kick::first, Kick::first);
  const cplx w22 = kernel.wightman(Kick::second, Kick::second);
  const cplx w12 = kernel.wightman(Kick::first, Kick::second);
  for (cplx w : {w11, w22, w12}) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw Error(ErrorKind::invalid_kernel, "non-finite Wightman value");
  }
  if (w11.real() < 0.0 || w22.real() < 0.0)
    throw Error(ErrorKind::contract_violation, "negative diagonal Wightman value");
  if (std::abs(w11.imag()) > 1e-12 * (1.0 + w11.real()) ||
      std::abs(w22.imag()) > 1e-12 * (1.0 + w22.real()))
    throw Error(ErrorKind::contract_violation, "diagonal Wightman value is not real");

  MomentSet m;
  m.nu1 = std::exp(-2.0 * w11.real());
  m.nu2 = std::exp(-2.0 * w22.real());
  m.e12 = 2.0 * w12.imag();
  m.mu12 = w12.real();
  if (m.nu1 == 0.0 || m.nu2 == 0.0)
    throw Error(ErrorKind::range, "nu underflows to zero; coupling too strong");
  return m;
}

/// nu of the summed and differenced smearings, obtained from bilinearity:
/// W(f1 +- f2, f1 +- f2) = W11 +- 2 mu12 + W22.
struct SumDifferenceNu {
  double minus = 1.0;  // nu_{f1 - f2}
  double plus = 1.0;   // nu_{f1 + f2}
};

template <QuasiFreeKernel K>
SumDifferenceNu nu_of_sum_and_difference(const K& kernel) {
  const double w11 = cplx(kernel.wightman(Kick::first, Kick::first)).real();
  const double w22 = cplx(kernel.wightman(Kick::second, Kick::second)).real();
  const double mu = cplx(kernel.wightman(Kick::first, Kick::second)).real();
  return {std::exp(-2.0 * (w11 - 2.0 * mu + w22)), std::exp(-2.0 * (w11 + 2.0 * mu + w22))};
}

/// The six distinct field expectations left after tracing out the field from
/// two sequential kicks U_j = 1 (x) C_j - i mu_j (x) S_j, with C_j = cos(phi_j),
/// S_j = sin(phi_j).
struct WeylMoments {
  double cccc = 0.0;  // omega(C1 C2^2 C1)
  double cssc = 0.0;  // omega(C1 S2^2 C1)
  double sccs = 0.0;  // omega(S1 C2^2 S1)
  double ssss = 0.0;  // omega(S1 S2^2 S1)
  cplx csc_s{};       // omega(C1 S2 C2 S1)
  cplx ssc_c{};       // omega(S1 S2 C2 C1)
};

inline WeylMoments weyl_moments(const MomentSet& m) {
  validate(m);
  detail::guard_exponent(m.mu12);
  const double c4 = m.nu1 * m.nu2 * std::cosh(4.0 * m.mu12);
  const double s4 = m.nu1 * std::sinh(4.0 * m.mu12);
  const double c2 = m.nu2 * std::cos(2.0 * m.e12);
  const double s2 = std::sin(2.0 * m.e12);

  WeylMoments w;
  w.cccc = 0.25 * (1.0 + m.nu1 + c4 + c2);
  w.cssc = 0.25 * (1.0 + m.nu1 - c4 - c2);
  w.sccs = 0.25 * (1.0 - m.nu1 - c4 + c2);
  w.ssss = 0.25 * (1.0 - m.nu1 + c4 - c2);
  w.csc_s = 0.25 * m.nu2 * cplx(s4, -s2);
  w.ssc_c = 0.25 * m.nu2 * cplx(s4, s2);
  return w;
}

/// p1 = 1/2 + (p - 1/2) nu1.
inline double p_after_first(double p, const MomentSet& m) {
  detail::guard_probability(p);
  validate(m);
  return 0.5 + (p - 0.5) * m.nu1;
}

/// alpha = e^{4 mu} sin^2(theta/2) + e^{-4 mu} cos^2(theta/2).
///
/// Throws kernel_inconsistency when nu1 nu2 alpha leaves (0, 1] by more than
/// 1e-9: no quasi-free state realizes such a MomentSet. A product of exactly 0
/// is accepted since it only arises from floating underflow.
inline double alpha_factor(const MomentSet& m, double theta) {
  validate(m);
  detail::guard_exponent(m.mu12);
  if (!std::isfinite(theta)) throw Error(ErrorKind::domain, "non-finite theta");
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  const double alpha = std::exp(4.0 * m.mu12) * s * s + std::exp(-4.0 * m.mu12) * c * c;
  const double product = m.nu1 * m.nu2 * alpha;
  if (!(product >= 0.0) || product > 1.0 + detail::kConsistencyTol) {
    std::ostringstream os;
    os.precision(17);
    os << "nu1 nu2 alpha = " << product << " outside (0,1]";
    throw Error(ErrorKind::kernel_inconsistency, os.str());
  }
  return alpha;
}

/// nu1 nu2 alpha, clamped into [0, 1].
inline double contraction_factor(const MomentSet& m, double theta) {
  return std::min(m.nu1 * m.nu2 * alpha_factor(m, theta), 1.0);
}

/// p2 = 1/2 [1 + nu2 sin(2 E12) sin(theta) + (2p - 1) nu1 nu2 alpha].
inline double p_after_second(double p, const MomentSet& m, double theta) {
  detail::guard_probability(p);
  const double k = contraction_factor(m, theta);
  const double p2 =
      0.5 * (1.0 + m.nu2 * std::sin(2.0 * m.e12) * std::sin(theta) + (2.0 * p - 1.0) * k);
  if (p2 < -detail::kSimplexTol || p2 > 1.0 + detail::kSimplexTol) {
    std::ostringstream os;
    os.precision(17);
    os << "p2 = " << p2 << " leaves [0,1]";
    throw Error(ErrorKind::kernel_inconsistency, os.str());
  }
  return std::clamp(p2, 0.0, 1.0);
}

}  // namespace ottoqft

#endif
