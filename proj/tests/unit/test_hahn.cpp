#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mpb/hahn.hpp"

using namespace mpb;

namespace {

constexpr long double pi = std::numbers::pi_v<long double>;

// log(pi x / sinh(pi x)) without overflow
long double log_abs_gamma_one_plus_ix_sq(long double x) {
  const long double t = pi * x;
  return std::log(t) - (t - std::log(2.0L) + std::log1p(-std::exp(-2 * t)));
}

// log(pi / cosh(pi x))
long double log_abs_gamma_half_plus_ix_sq(long double x) {
  const long double t = pi * x;
  return std::log(pi) - (t - std::log(2.0L) + std::log1p(std::exp(-2 * t)));
}

}  // namespace

TEST_CASE("dual_hahn_low_degree_values") {
  const HahnParams p = odd_weight_params();
  CHECK(cdh_eval<Rational>(0, Rational(7, 3), p) == 1);
  CHECK(cdh_eval<Rational>(1, Rational(0), p) == 1);
  const HahnParams q = even_weight_params();
  for (const Rational y : {Rational(0), Rational(1, 2), Rational(5)}) {
    const Rational expected = 1 - (q.a * q.a + y) / ((q.a + q.b) * (q.a + q.c));
    CHECK(cdh_eval<Rational>(1, y, q) == expected);
  }
}

TEST_CASE("three_term_recurrence_in_high_precision") {
  // -(a^2 + y) w_m = A_m w_{m+1} - (A_m + C_m) w_m + C_m w_{m-1}
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ys(0.0, 40.0);
  for (const HahnParams& p : {odd_weight_params(), even_weight_params()}) {
    const HighReal a = rational_to<HighReal>(p.a);
    for (int trial = 0; trial < 10; ++trial) {
      const HighReal y = HighReal(ys(rng));
      for (unsigned m = 1; m <= 30; ++m) {
        const HighReal A = rational_to<HighReal>(hahn_A(p, m));
        const HighReal C = rational_to<HighReal>(hahn_C(p, m));
        const HighReal wm = cdh_eval<HighReal>(m, y, p);
        const HighReal lhs = -(a * a + y) * wm;
        const HighReal rhs = A * cdh_eval<HighReal>(m + 1, y, p) - (A + C) * wm + C * cdh_eval<HighReal>(m - 1, y, p);
        const HighReal scale = abs(A * cdh_eval<HighReal>(m + 1, y, p)) + abs((A + C) * wm) + abs(lhs) + 1;
        CHECK(static_cast<double>(abs(lhs - rhs) / scale) <= 1e-10);
      }
    }
  }
}

TEST_CASE("log_gamma_against_closed_forms") {
  for (long double x : {0.5L, 1.0L, 2.5L, 7.0L, 10.25L}) {
    CHECK(static_cast<double>(std::abs(log_abs_gamma({x, 0}) - std::lgamma(x))) <= 1e-13);
  }
  for (long double x : {0.01L, 0.3L, 1.0L, 4.0L, 17.5L, 55.0L, 100.0L}) {
    CHECK(static_cast<double>(std::abs(2 * log_abs_gamma({1, x}) - log_abs_gamma_one_plus_ix_sq(x))) <= 1e-13);
    CHECK(static_cast<double>(std::abs(2 * log_abs_gamma({0.5L, x}) - log_abs_gamma_half_plus_ix_sq(x))) <= 1e-13);
  }
}

TEST_CASE("measure_density_values") {
  const HahnParams p = odd_weight_params();
  // |Gamma(ix)/Gamma(2ix)|^2 -> 4, so the limit is 4 Gamma(1/3) Gamma(2/3) / (2 pi)
  const double at_zero = 4.0 * std::tgamma(1.0 / 3) * std::tgamma(2.0 / 3) / (2 * std::numbers::pi);
  CHECK(static_cast<double>(measure_density(0, p)) == doctest::Approx(at_zero).epsilon(1e-12));
  CHECK(static_cast<double>(measure_density(1e-6L, p)) == doctest::Approx(at_zero).epsilon(1e-9));
  CHECK(static_cast<double>(measure_density(0, p)) == doctest::Approx(4 / std::sqrt(3.0)).epsilon(1e-12));
  for (const HahnParams& q : {odd_weight_params(), even_weight_params()}) {
    for (int i = 0; i <= 400; ++i) CHECK(measure_density(0.05L * i, q) >= 0);
  }
  CHECK(measure_density(0, even_weight_params()) == 0);
}

TEST_CASE("orthogonality_by_quadrature") {
  const QuadratureResult q11 = quadrature_orthogonality(1, 1, odd_weight_params());
  CHECK(static_cast<double>(q11.expected) == doctest::Approx(4.5));
  CHECK(q11.relative_error <= 1e-8L);
  const QuadratureResult q01 = quadrature_orthogonality(0, 1, odd_weight_params());
  CHECK(q01.expected == 0);
  CHECK(q01.relative_error <= 1e-8L);
  const QuadratureResult q22 = quadrature_orthogonality(2, 2, even_weight_params());
  CHECK(static_cast<double>(q22.expected) == doctest::Approx(81.0 / 70));
  CHECK(q22.relative_error <= 1e-8L);
  CHECK(hahn_norm(even_weight_params(), 2) == Rational(81, 70));
  for (const HahnParams& p : {odd_weight_params(), even_weight_params()}) {
    CHECK(quadrature_mass(p).relative_error <= 1e-10L);
  }
}

TEST_CASE("adaptive_quadrature") {
  CHECK(static_cast<double>(integrate([](Real x) { return x * x; }, 0, 1, 1e-15L, 1e-15L)) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(static_cast<double>(integrate([](Real x) { return std::exp(-x); }, 0, 50, 1e-15L, 1e-14L)) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(integrate([](Real x) { return 1 / x; }, 0, 1, 1e-15L, 1e-15L), std::runtime_error);
}

TEST_CASE("jacobi_matrix_entries") {
  const TridiagonalOperator t1 = jacobi_matrix(odd_weight_params(), 1);
  REQUIRE(t1.size() == 1);
  CHECK(static_cast<double>(t1.diag[0]) == doctest::Approx(2.0 / 9));
  const TridiagonalOperator t = jacobi_matrix(odd_weight_params(), 50);
  CHECK(static_cast<double>(t.offdiag[0]) == doctest::Approx(std::sqrt(2.0) / 3));
  for (Real e : t.offdiag) CHECK(e >= 0);
  const std::vector<Real> single = eig_tridiag(t1);
  REQUIRE(single.size() == 1);
  CHECK(static_cast<double>(std::abs(single[0] - t1.diag[0])) <= 1e-15);
}

TEST_CASE("two_by_two_eigenvalues_match_quadratic_formula") {
  for (const HahnParams& p : {odd_weight_params(), even_weight_params()}) {
    const TridiagonalOperator t = jacobi_matrix(p, 2);
    const long double d0 = t.diag[0], d1 = t.diag[1], e = t.offdiag[0];
    const long double mid = (d0 + d1) / 2, rad = std::sqrt((d0 - d1) * (d0 - d1) / 4 + e * e);
    const std::vector<Real> ev = eig_tridiag(t);
    CHECK(static_cast<double>(std::abs(ev[0] - (mid - rad))) <= 1e-12);
    CHECK(static_cast<double>(std::abs(ev[1] - (mid + rad))) <= 1e-12);
  }
}

TEST_CASE("truncated_spectra_interlace_and_are_nonnegative") {
  for (const HahnParams& p : {odd_weight_params(), even_weight_params()}) {
    const std::vector<Real> a = eig_tridiag(jacobi_matrix(p, 10));
    const std::vector<Real> b = eig_tridiag(jacobi_matrix(p, 11));
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(b[i] <= a[i]);
      CHECK(a[i] <= b[i + 1]);
    }
    for (Real v : eig_tridiag(jacobi_matrix(p, 300))) CHECK(v >= -1e-9L);
    const TridiagonalOperator t = jacobi_matrix(p, 40);
    const std::vector<Real> ev = eig_tridiag(t);
    CHECK(sturm_count(t, ev[20]) <= 20);
    CHECK(sturm_count(t, (ev[20] + ev[21]) / 2) == 21);
  }
}

TEST_CASE("gauss_weights_reproduce_moments") {
  const HahnParams p = odd_weight_params();
  const TridiagonalOperator t = jacobi_matrix(p, 60);
  const std::vector<Real> ev = eig_tridiag(t);
  const std::vector<Real> w = spectral_weights(t, ev);
  Real m0 = 0, m1 = 0, m2 = 0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    m0 += w[i];
    m1 += w[i] * ev[i];
    m2 += w[i] * ev[i] * ev[i];
  }
  // e_0^T J^k e_0
  CHECK(static_cast<double>(m0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(static_cast<double>(m1) == doctest::Approx(static_cast<double>(t.diag[0])).epsilon(1e-10));
  CHECK(static_cast<double>(m2) == doctest::Approx(static_cast<double>(t.diag[0] * t.diag[0] + t.offdiag[0] * t.offdiag[0])).epsilon(1e-10));
}

TEST_CASE("spectrum_stays_above_one_half") {
  for (int weight : {-1, 0}) {
    Real previous = 1e300L;
    for (std::size_t N : {100u, 200u, 400u, 800u}) {
      const SpectrumReport r = spectrum_report(weight, N, false);
      CHECK(r.min >= 0.5L - 1e-6L);
      CHECK(r.min < previous);
      previous = r.min;
      for (Real v : r.casimir_values) CHECK(v >= 0.5L - 1e-6L);
      std::size_t counted = 0;
      for (const auto& b : r.histogram) counted += b.count;
      CHECK(counted == N);
    }
  }
}

TEST_CASE("parameter_validation") {
  HahnParams bad = odd_weight_params();
  bad.b = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(params_for_weight(1), std::invalid_argument);
  TridiagonalOperator t;
  t.diag = {1, 2};
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}
