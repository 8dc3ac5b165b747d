#pragma once

// Continuous dual Hahn polynomials
//   w_m(x^2) = 3F2(-m, a+ix, a-ix; a+b, a+c; 1),
// their orthogonality measure on [0, inf), and spectra of truncated Jacobi
// matrices for multiplication by x^2.

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <mpfr.h>

#include "mpb/radical.hpp"

namespace mpb {

using Real = long double;
using HighReal = boost::multiprecision::cpp_bin_float_50;

struct HahnParams {
  Rational a, b, c;
  Rational d = 0;  // shift of the multiplication operator x^2 + d
  Rational s = 3;  // variable scale: w~_m(x^2) = w_m((x/s)^2)

  /// Throws std::invalid_argument unless a >= 0, b > 0, c > 0, s > 0.
  void validate() const;
  std::string to_string() const;
};

/// (0, 1/3, 2/3) with d = 1: the weight -1 subspace.
HahnParams odd_weight_params();
/// (1/2, 1/6, 5/6) with d = 1/4: the weight 0 subspace.
HahnParams even_weight_params();

/// A_m = (m+a+b)(m+a+c)
Rational hahn_A(const HahnParams& p, unsigned m);
/// C_m = m(m+b+c-1)
Rational hahn_C(const HahnParams& p, unsigned m);
/// ||w_m||^2 = m! (b+c)_m / ((a+b)_m (a+c)_m)
Rational hahn_norm(const HahnParams& p, unsigned m);

template <class T>
T rational_to(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else if constexpr (std::is_floating_point_v<T>) {
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
    const T out = static_cast<T>(mpfr_get_ld(t, MPFR_RNDN));
    mpfr_clear(t);
    return out;
  } else {
    return T(q.get_num().get_str()) / T(q.get_den().get_str());
  }
}

/// Terminating 3F2 sum evaluated in the arithmetic of T; y stands for x^2.
/// With T = Rational the result is exact.
template <class T>
T cdh_eval(unsigned m, const T& y, const HahnParams& p) {
  const T a = rational_to<T>(p.a);
  const T ab = rational_to<T>(p.a + p.b);
  const T ac = rational_to<T>(p.a + p.c);
  T term = T(1);
  T sum = T(1);
  for (unsigned j = 0; j < m; ++j) {
    // (a+ix)_j (a-ix)_j = prod_{r<j} ((a+r)^2 + x^2)
    const T ar = a + T(static_cast<long>(j));
    term *= T(static_cast<long>(j) - static_cast<long>(m)) * (ar * ar + y);
    term /= (ab + T(static_cast<long>(j))) * (ac + T(static_cast<long>(j))) * T(static_cast<long>(j) + 1);
    sum += term;
  }
  return sum;
}

/// log |Gamma(z)| for Re z > 0: upward recurrence to |z| >= 16, then the Stirling series.
Real log_abs_gamma(std::complex<Real> z);

/// Density of the orthogonality measure at x >= 0 (unscaled variable).
Real measure_density(Real x, const HahnParams& p);

/// Adaptive composite Gauss-Legendre on [lo, hi]; throws std::runtime_error
/// if refinement is exhausted before |error| <= max(abs_tol, rel_tol * |I|).
Real integrate(const std::function<Real(Real)>& f, Real lo, Real hi, Real abs_tol, Real rel_tol);

/// Upper end of the integration range: the integrand x^(2(m+l)) tail is below `tail_tol`.
Real integration_cutoff(const HahnParams& p, unsigned degree_m, unsigned degree_l, Real tail_tol = 1e-30L);

struct QuadratureResult {
  Real value = 0;
  Real expected = 0;
  Real cutoff = 0;
  /// |value - expected| / max(|expected|, sqrt(h_m h_l))
  Real relative_error = 0;
};

QuadratureResult quadrature_orthogonality(unsigned m, unsigned l, const HahnParams& p);
/// Total mass of the measure (expected 1).
QuadratureResult quadrature_mass(const HahnParams& p);
/// mu([0, x]) for each x in `xs` (ascending), unscaled variable.
std::vector<Real> measure_cdf(const HahnParams& p, const std::vector<Real>& xs);

struct TridiagonalOperator {
  std::vector<Real> diag;
  std::vector<Real> offdiag;  // size diag.size() - 1

  std::size_t size() const { return diag.size(); }
  void validate() const;
};

/// Symmetrized Jacobi matrix of multiplication by x^2 (unscaled variable):
/// diag_m = A_m + C_m - a^2, offdiag_m = sqrt(A_m C_{m+1}).
TridiagonalOperator jacobi_matrix(const HahnParams& p, std::size_t N);

/// Number of eigenvalues strictly below `shift` (Sturm sequence).
std::size_t sturm_count(const TridiagonalOperator& t, Real shift);

/// All eigenvalues, ascending, by Sturm bisection. Each bracket is shrunk to
/// max(tol, 4 eps |lambda|); throws std::runtime_error past the iteration cap.
std::vector<Real> eig_tridiag(const TridiagonalOperator& t, Real tol = 1e-12L);

/// Squared first components of the normalized eigenvectors (Gauss weights),
/// by inverse iteration at each supplied eigenvalue.
std::vector<Real> spectral_weights(const TridiagonalOperator& t, const std::vector<Real>& eigenvalues);

struct HistogramBin {
  Real lo = 0;
  Real hi = 0;
  std::size_t count = 0;
};

struct SpectrumReport {
  int weight = 0;
  std::size_t size = 0;
  HahnParams params;
  /// -C = 2 s^2 theta + offset, theta an eigenvalue of the unscaled Jacobi matrix.
  Real offset = 0;
  std::vector<Real> jacobi_eigenvalues;
  std::vector<Real> casimir_values;  // eigenvalues of -C, ascending
  Real min = 0;
  Real max = 0;
  std::vector<HistogramBin> histogram;
  /// sup |F_N - F| between the spectral measure of e_0 and the orthogonality measure.
  Real kolmogorov = -1;
};

/// Hahn parameters matching the weight -1 or 0 subspace; other weights throw.
HahnParams params_for_weight(int weight);

SpectrumReport spectrum_report(int weight, std::size_t N, bool with_kolmogorov = true, std::size_t bins = 20);

}  // namespace mpb
