#ifndef OTTOQFT_ORACLE_HPP
#define OTTOQFT_ORACLE_HPP

// Brute-force cross-checks that share no code path with the closed forms:
//  * a qubit coupled to one truncated bosonic mode, kicked by the exact unitaries
//    U_j = 1 (x) cos(phi_j) - i mu_j (x) sin(phi_j), with cos/sin taken through a
//    Hermitian eigendecomposition of the truncated field matrix;
//  * direct radial quadrature of the Gaussian-smeared Minkowski Wightman integral.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "ottoqft/algebra.hpp"
#include "ottoqft/error.hpp"

namespace ottoqft {

/// One field mode standing in for the smeared field. At kick j the field is
/// phi_j = alpha_j a + conj(alpha_j) a^dagger, in a Gibbs state with mean
/// occupation nbar (nbar = 0 is the vacuum), truncated to dim levels.
struct FockParams {
  cplx alpha1{0.0, 0.0};
  cplx alpha2{0.0, 0.0};
  double nbar = 0.0;
  int dim = 60;
};

inline void validate(const FockParams& fp) {
  if (fp.dim < 2) throw Error(ErrorKind::validation, "Fock truncation dim must be >= 2");
  if (!(fp.nbar >= 0.0) || !std::isfinite(fp.nbar)) throw Error(ErrorKind::validation, "nbar must be >= 0");
  for (cplx a : {fp.alpha1, fp.alpha2})
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw Error(ErrorKind::validation, "non-finite mode coupling");
}

/// W(f_j, f_k) = alpha_j conj(alpha_k) (nbar + 1) + conj(alpha_j) alpha_k nbar,
/// folded into (2 nbar + 1) Re(alpha_j conj(alpha_k)) + i Im(alpha_j conj(alpha_k))
/// so the imaginary part carries no nbar rounding.
struct SingleModeKernel {
  cplx alpha1{};
  cplx alpha2{};
  double nbar = 0.0;

  cplx wightman(Kick a, Kick b) const noexcept {
    const cplx x = (a == Kick::first ? alpha1 : alpha2) * std::conj(b == Kick::first ? alpha1 : alpha2);
    return {(2.0 * nbar + 1.0) * x.real(), a == b ? 0.0 : x.imag()};
  }
};

inline SingleModeKernel single_mode_kernel(const FockParams& fp) {
  validate(fp);
  return {fp.alpha1, fp.alpha2, fp.nbar};
}

namespace fock {

using Matrix = Eigen::MatrixXcd;

inline Matrix annihilation(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline Matrix field_operator(cplx alpha, int dim) {
  const Matrix a = annihilation(dim);
  return alpha * a + std::conj(alpha) * a.adjoint();
}

struct CosSin {
  Matrix cos;
  Matrix sin;
};

inline CosSin cos_sin(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::accuracy, "eigendecomposition failed");
  const Eigen::VectorXd w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  const Eigen::VectorXcd c = w.array().cos().cast<cplx>();
  const Eigen::VectorXcd s = w.array().sin().cast<cplx>();
  return {v * c.asDiagonal() * v.adjoint(), v * s.asDiagonal() * v.adjoint()};
}

inline Matrix field_state(double nbar, int dim) {
  Eigen::VectorXd w(dim);
  const double q = nbar > 0.0 ? nbar / (nbar + 1.0) : 0.0;
  double x = 1.0;
  for (int n = 0; n < dim; ++n, x *= q) w[n] = x;
  w /= w.sum();
  return w.cast<cplx>().asDiagonal();
}

// Monopole mu(tau) = e^{i Omega tau}|e><g| + h.c. in the basis (|e>, |g>).
inline Eigen::Matrix2cd monopole(double omega, double tau) {
  Eigen::Matrix2cd m;
  const cplx ph = std::polar(1.0, omega * tau);
  m << 0.0, ph, std::conj(ph), 0.0;
  return m;
}

inline Matrix kron(const Eigen::Matrix2cd& q, const Matrix& f) {
  const auto d = f.rows();
  Matrix out(2 * d, 2 * d);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block(i * d, j * d, d, d) = q(i, j) * f;
  return out;
}

inline Matrix kick_unitary(const CosSin& cs, double omega, double tau) {
  return kron(Eigen::Matrix2cd::Identity(), cs.cos) - cplx(0.0, 1.0) * kron(monopole(omega, tau), cs.sin);
}

inline double excited_population(const Matrix& joint) {
  const auto d = joint.rows() / 2;
  return joint.block(0, 0, d, d).trace().real();
}

inline Matrix field_marginal(const Matrix& joint) {
  const auto d = joint.rows() / 2;
  return joint.block(0, 0, d, d) + joint.block(d, d, d, d);
}

inline void guard_truncation(const Matrix& field, int dim) {
  constexpr double kTopLevelMax = 1e-10;
  const double top = std::abs(field(dim - 1, dim - 1).real());
  if (top >= kTopLevelMax) {
    std::ostringstream os;
    os << "highest Fock level holds population " << top << " at dim = " << dim
       << "; rerun with dim >= " << 2 * dim;
    throw Error(ErrorKind::truncation, os.str());
  }
}

}  // namespace fock

struct FockPopulations {
  double p1 = 0.0;
  double p2 = 0.0;
  double trace = 1.0;  // of the final joint state
};

inline FockPopulations simulate_cycle_fock(const FockParams& fp, double omega1, double omega2, double tau1,
                                           double tau2, double p) {
  validate(fp);
  detail::guard_probability(p);
  if (!(tau2 > tau1)) throw Error(ErrorKind::validation, "tau2 must exceed tau1");

  using fock::Matrix;
  const int d = fp.dim;
  const Matrix field0 = fock::field_state(fp.nbar, d);
  fock::guard_truncation(field0, d);

  Eigen::Matrix2cd qubit = Eigen::Matrix2cd::Zero();
  qubit(0, 0) = p;
  qubit(1, 1) = 1.0 - p;
  Matrix rho = fock::kron(qubit, field0);

  const Matrix u1 = fock::kick_unitary(fock::cos_sin(fock::field_operator(fp.alpha1, d)), omega1, tau1);
  const Matrix u2 = fock::kick_unitary(fock::cos_sin(fock::field_operator(fp.alpha2, d)), omega2, tau2);

  rho = u1 * rho * u1.adjoint();
  fock::guard_truncation(fock::field_marginal(rho), d);
  FockPopulations out;
  out.p1 = fock::excited_population(rho);

  rho = u2 * rho * u2.adjoint();
  fock::guard_truncation(fock::field_marginal(rho), d);
  out.p2 = fock::excited_population(rho);
  out.trace = rho.trace().real();
  return out;
}

/// The six field expectations evaluated as explicit truncated-matrix traces.
inline WeylMoments fock_weyl_moments(const FockParams& fp) {
  validate(fp);
  using fock::Matrix;
  const int d = fp.dim;
  const Matrix rho = fock::field_state(fp.nbar, d);
  const fock::CosSin k1 = fock::cos_sin(fock::field_operator(fp.alpha1, d));
  const fock::CosSin k2 = fock::cos_sin(fock::field_operator(fp.alpha2, d));

  const Matrix after1 = k1.cos * rho * k1.cos + k1.sin * rho * k1.sin;
  fock::guard_truncation(after1, d);
  fock::guard_truncation(k2.cos * after1 * k2.cos + k2.sin * after1 * k2.sin, d);

  auto expect = [&](const Matrix& op) { return (rho * op).trace(); };
  WeylMoments w;
  w.cccc = expect(k1.cos * k2.cos * k2.cos * k1.cos).real();
  w.cssc = expect(k1.cos * k2.sin * k2.sin * k1.cos).real();
  w.sccs = expect(k1.sin * k2.cos * k2.cos * k1.sin).real();
  w.ssss = expect(k1.sin * k2.sin * k2.sin * k1.sin).real();
  w.csc_s = expect(k1.cos * k2.sin * k2.cos * k1.sin);
  w.ssc_c = expect(k1.sin * k2.sin * k2.cos * k1.cos);
  return w;
}

inline double max_deviation(const WeylMoments& a, const WeylMoments& b) {
  return std::max({std::abs(a.cccc - b.cccc), std::abs(a.cssc - b.cssc), std::abs(a.sccs - b.sccs),
                   std::abs(a.ssss - b.ssss), std::abs(a.csc_s - b.csc_s), std::abs(a.ssc_c - b.ssc_c)});
}

/// Largest gap between the matrix-trace moments and the closed forms fed by the
/// same mode's MomentSet.
inline double verify_weyl_moments(const FockParams& fp) {
  return max_deviation(fock_weyl_moments(fp), weyl_moments(moment_set_from_kernel(single_mode_kernel(fp))));
}

enum class QuadratureRule { trapezoid, simpson };

struct QuadratureSpec {
  double k_max = 14.0;   // momentum cutoff, units of 1/sigma
  int n_points = 4096;   // panels on [0, k_max]; rounded up to even for Simpson
  QuadratureRule rule = QuadratureRule::simpson;
  double tolerance = 1e-10;  // allowed change of the normalized integrals under doubling
};

inline void validate(const QuadratureSpec& s) {
  if (!(s.k_max > 0.0) || !std::isfinite(s.k_max)) throw Error(ErrorKind::validation, "k_max must be > 0");
  if (s.n_points < 16) throw Error(ErrorKind::validation, "n_points must be >= 16");
  if (!(s.tolerance > 0.0)) throw Error(ErrorKind::validation, "tolerance must be > 0");
}

/// int_0^{k_max} k exp(-k^2 sigma^2 / 2) exp(i k dtau) dk on a fixed composite rule.
/// The phase is e^{+i k dtau} because W(f1, f2) pairs the earlier kick first:
/// e^{-i|k|(t1 - t2)} with t2 - t1 = dtau.
inline cplx radial_wightman_integral(double dtau, double sigma, double k_max, int panels, QuadratureRule rule) {
  if (rule == QuadratureRule::simpson && panels % 2 != 0) ++panels;
  const double h = k_max / panels;
  auto f = [&](double k) { return k * std::exp(-0.5 * k * k * sigma * sigma) * std::polar(1.0, k * dtau); };
  cplx sum{0.0, 0.0};
  for (int i = 0; i <= panels; ++i) {
    double w;
    if (i == 0 || i == panels)
      w = rule == QuadratureRule::simpson ? 1.0 / 3.0 : 0.5;
    else
      w = rule == QuadratureRule::simpson ? (i % 2 ? 4.0 / 3.0 : 2.0 / 3.0) : 1.0;
    sum += w * f(i * h);
  }
  return sum * h;
}

/// Minkowski MomentSet from direct quadrature of
/// W(f_i, f_j) = (lambda_i lambda_j / 4 pi^2) int_0^inf k e^{-k^2 sigma^2/2} e^{i k dtau_ij} dk.
inline MomentSet quadrature_minkowski_moments(double lambda1, double lambda2, double sigma, double dtau,
                                              const QuadratureSpec& spec = {}) {
  validate(spec);
  if (!(sigma > 0.0)) throw Error(ErrorKind::validation, "sigma must be > 0");
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0)) throw Error(ErrorKind::validation, "couplings must be >= 0");
  if (spec.k_max * sigma < 12.0) throw Error(ErrorKind::validation, "k_max * sigma must be >= 12");

  auto refined = [&](double dt) {
    const cplx coarse = radial_wightman_integral(dt, sigma, spec.k_max, spec.n_points, spec.rule);
    const cplx fine = radial_wightman_integral(dt, sigma, spec.k_max, 2 * spec.n_points, spec.rule);
    // normalize by the dtau = 0 value 1/sigma^2 so the tolerance is scale free
    if (std::abs(fine - coarse) * sigma * sigma > spec.tolerance) {
      std::ostringstream os;
      os << "quadrature not converged at dtau = " << dt << " (doubling changes it by " << std::abs(fine - coarse)
         << ")";
      throw Error(ErrorKind::accuracy, os.str());
    }
    return fine;
  };

  const double pref = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  const cplx i0 = refined(0.0);
  const cplx i12 = refined(dtau);
  TabulatedKernel k;
  k.w11 = pref * lambda1 * lambda1 * i0.real();
  k.w22 = pref * lambda2 * lambda2 * i0.real();
  k.w12 = pref * lambda1 * lambda2 * i12;
  return moment_set_from_kernel(k);
}

}  // namespace ottoqft

#endif
