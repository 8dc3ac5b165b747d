#pragma once

// Restriction of the n = 2 metaplectic representation to the principal sl(2):
// weight spaces, the Casimir action on them, highest weight vectors, and the
// catalog of discrete components.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpb/hahn.hpp"
#include "mpb/metaplectic.hpp"

namespace mpb {

/// Eigenvalue of dLambda(H) on p if p is an eigenvector, otherwise nullopt.
std::optional<Rational> h_eigenvalue(const FockPolynomial& p);

/// Weight -1 - 3 a1 + a2 of z1^a1 z2^a2.
int monomial_weight(const MultiIndex& alpha);

struct WeightBasis {
  int weight = 0;
  int k = 0;        // weight = -3k + residue
  int residue = 0;  // in {-1, 0, 1}
  MultiIndex extra;
  /// True for weights -1 and 0, where W_m = I^m extra / ((x)_m (y)_m).
  bool normalized = false;
  std::vector<Rational> scale;  // W_m = scale[m] * I^m * extra
  std::vector<FockPolynomial> entries;
  std::vector<Rational> norms;  // ||W_m||^2
};

/// Entries m = 0..m_max; throws std::logic_error if orthogonality fails.
WeightBasis weight_basis(int weight, unsigned m_max);

enum class TridiagonalKind {
  ninth_raising_lowering,  // (1/9) Lambda(E+) Lambda(E-), weights -1 and 0
  casimir,                 // full Casimir, every other weight
};

struct CoefficientTriple {
  unsigned m = 0;
  Rational alpha;  // coefficient of W_{m+1}
  Rational beta;   // coefficient of W_m
  Rational gamma;  // coefficient of W_{m-1}
};

struct CasimirTridiagonal {
  int weight = 0;
  TridiagonalKind kind = TridiagonalKind::casimir;
  std::vector<CoefficientTriple> triples;  // m = 0..m_max
  std::vector<Rational> norms;             // ||W_m||^2, m = 0..m_max+1
};

/// The operator in the weight basis, read off by exact inner products; throws
/// std::logic_error if the expansion is not exactly tridiagonal.
CasimirTridiagonal casimir_tridiagonal(int weight, unsigned m_max);

struct MatchEntry {
  unsigned m = 0;
  std::string field;  // "alpha", "beta", "gamma", "norm"
  Rational expected;
  Rational actual;
  bool ok = false;
};

struct MatchReport {
  HahnParams params;
  std::vector<MatchEntry> entries;
  bool matched() const;
  std::optional<unsigned> first_mismatch() const;
};

/// alpha_m = A_m, gamma_m = C_m, beta_m = -(A_m + C_m - a^2 + d/s^2) and
/// ||W_m||^2 = m!(b+c)_m / ((a+b)_m (a+c)_m).
MatchReport match_hahn_params(const CasimirTridiagonal& data, const HahnParams& candidate);

/// k! / (l! (k+l)!)
Rational hwv_coefficient(unsigned k, unsigned l);

struct HwvSeries {
  unsigned k = 0;
  unsigned L = 0;
  std::vector<Rational> a;          // f_l = a_l I^l z1^k
  std::vector<FockPolynomial> terms;
  FockPolynomial truncation;        // sum_{l <= L} f_l
  FockPolynomial residual;          // Lambda(E+) truncation
  FockPolynomial casimir_defect;    // (C - (nu^2/2 - nu)) truncation, nu = 3k+1
  bool coefficients_match = false;  // a_l == k!/(l!(k+l)!)
  bool residual_top_band = false;   // residual == z2^2 f_L, degree k+4L+2
  bool casimir_interior_clean = false;  // defect vanishes below degree k+4L
};

/// Solves sqrt(3) d1 d2 f_{l+1} = z2^2 f_l degree by degree from f_0 = z1^k.
HwvSeries solve_hwv(unsigned k, unsigned L);

enum class ConvergenceVerdict { convergent, divergent };
std::string to_string(ConvergenceVerdict v);

struct NormPartials {
  unsigned k = 0;
  unsigned L = 0;
  std::vector<Rational> partial_sums;  // S_0..S_L, exact
  ConvergenceVerdict verdict = ConvergenceVerdict::convergent;
  /// k = 0: S_{2M} - S_M for M = 16, 32, ...; k >= 1: tail bounds at the same M.
  std::vector<std::uint64_t> doubling_points;
  std::vector<Real> doubling_values;
  /// k = 0: rigorous lower bound on every increment; k >= 1: tail bound past S_L.
  Real bound = 0;
};

/// Exact partial sums of ||f||^2 = sum a_l^2 ||I^l z1^k||^2 and a verdict.
NormPartials hwv_norm_partials(unsigned k, unsigned L);

/// Closed form (5/3)_L (4/3)_L / (L! (2)_L) of S_L for k = 1.
Rational hwv_norm_partial_k1(unsigned L);

struct NormEnclosure {
  unsigned k = 0;
  std::uint64_t terms = 0;  // S_L with L = terms
  HighReal lower;           // S_L
  HighReal upper;           // S_L + rigorous tail bound
};

/// Enclosure of ||f||^2 for k >= 1 no wider than `width`.
NormEnclosure hwv_norm_enclosure(unsigned k, double width);

struct KernelElement {
  unsigned degree = 0;
  FockPolynomial element;
  int weight = 0;
};

struct LwsScanReport {
  unsigned degree_bound = 0;
  std::vector<KernelElement> kernel;
  int max_weight = 0;
  bool no_lowest_weight = false;  // every weight < 1
};

/// A lowest-degree term of a solution of Lambda(E-) f = 0 must satisfy d2^2 f_0 = 0.
bool admissible_lowest_term(const FockPolynomial& f0);
LwsScanReport no_lws_scan(unsigned degree_bound);

enum class ReprKind { principal_even, principal_odd, complementary, highest_weight, lowest_weight };
std::string to_string(ReprKind kind);

struct ReprDescriptor {
  ReprKind kind = ReprKind::highest_weight;
  Rational parameter;  // lambda for the series, nu for highest/lowest weight
  /// Throws std::invalid_argument when the parameter is out of range.
  void validate() const;
  /// -nu for highest weight, +nu for lowest weight.
  int extremal_weight() const;
};

enum class Parity { all, even, odd };

/// sigma_{-(3k+1)} for k = 1..k_max, filtered by the parity of k.
std::vector<ReprDescriptor> discrete_components(Parity parity, unsigned k_max);

/// -1/2 - lambda^2 for the series, nu^2/2 - nu for highest/lowest weight.
Rational rep_casimir_eigenvalue(const ReprDescriptor& r);

/// Truncated sum_{m <= M} e_m(z) e~_m(x^2) on the weight -1 (or 0) subspace.
std::complex<Real> generalized_eigenfunction(Real x, std::span<const std::complex<Real>> z, unsigned M, int weight = -1);

/// Coefficients on e_0..e_{M-1} of (-C - (2x^2 + 1/2)) applied to the truncation.
std::vector<Real> eigenfunction_mode_residuals(Real x, unsigned M, int weight = -1);

}  // namespace mpb
