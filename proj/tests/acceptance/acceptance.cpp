// One line per acceptance criterion; exit status is nonzero if any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "mpb/branching.hpp"

using namespace mpb;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= limit_s) o.require(false, "runtime " + std::to_string(elapsed) + " s over " + std::to_string(limit_s) + " s");
  if (!o.passed) ++failures;
  std::printf("criterion %d: %s  %s  (%.2f s / %.0f s)%s%s\n", id, o.passed ? "PASS" : "FAIL", title, elapsed, limit_s,
              o.detail.empty() ? "" : "  -- ", o.detail.c_str());
  std::fflush(stdout);
}

RadicalMatrix bracket(const RadicalMatrix& a, const RadicalMatrix& b) { return a * b - b * a; }

// ||I^m z^extra||^2 from the single-monomial form (sqrt3/9)^m z1^(m+a) z2^(3m+b) and ||z^alpha||^2 = alpha!.
Rational monomial_norm(unsigned m, unsigned a, unsigned b) {
  Rational c = Rational(factorial(m + a) * factorial(3 * m + b));
  for (unsigned j = 0; j < m; ++j) c /= 27;
  return c;
}

Rational poch(Rational x, unsigned m) {
  Rational p = 1;
  for (unsigned j = 0; j < m; ++j) p *= x + j;
  return p;
}

Rational hahn_norm_oracle(const Rational& a, const Rational& b, const Rational& c, unsigned m) {
  return Rational(factorial(m)) * poch(b + c, m) / (poch(a + b, m) * poch(a + c, m));
}

}  // namespace

int main() {
  criterion(1, "principal embedding exact for n = 1..8", 1.0, [] {
    Outcome o;
    for (std::size_t n = 1; n <= 8; ++n) {
      const PrincipalTriple t = principal_sl2(n);
      const RadicalMatrix H = t.H.full(), Ep = t.Eplus.full(), Em = t.Eminus.full();
      const std::string tag = " at n=" + std::to_string(n);
      o.require(bracket(H, Ep) == RadicalScalar(2L) * Ep, "[H,E+] != 2E+" + tag);
      o.require(bracket(H, Em) == RadicalScalar(-2L) * Em, "[H,E-] != -2E-" + tag);
      o.require(bracket(Ep, Em) == H, "[E+,E-] != H" + tag);
      o.require(Em == Ep.transpose(), "E- != (E+)^t" + tag);
      for (const SpElement* x : {&t.H, &t.Eplus, &t.Eminus}) {
        o.require(x->B == x->B.transpose() && x->C == x->C.transpose(), "block symmetry" + tag);
      }
      o.require(verify_sl2_matrix(t).all_passed(), "verification report" + tag);
    }
    return o;
  });

  criterion(2, "operator-level sl(2) relations and Casimir centrality, n = 2", 1.0, [] {
    Outcome o;
    const RadicalScalar r3 = sqrt_int(3);
    WeylOperator H = WeylOperator::identity(2, -1L);
    H += WeylOperator::term(-3L, {1, 0}, {1, 0});
    H += WeylOperator::term(1L, {0, 1}, {0, 1});
    WeylOperator Ep = WeylOperator::term(-r3, {0, 0}, {1, 1});
    Ep += WeylOperator::term(1L, {0, 2}, {0, 0});
    WeylOperator Em = WeylOperator::term(-1L, {0, 0}, {0, 2});
    Em += WeylOperator::term(r3, {1, 1}, {0, 0});
    const Sl2Operators s = sl2_operators();
    o.require(s.H == H && s.Eplus == Ep && s.Eminus == Em, "dLambda images differ from the explicit operators");
    o.require(commutator(H, Ep) == RadicalScalar(2L) * Ep, "[H,E+] != 2E+");
    o.require(commutator(H, Em) == RadicalScalar(-2L) * Em, "[H,E-] != -2E-");
    o.require(commutator(Ep, Em) == H, "[E+,E-] != H");
    WeylOperator C = RadicalScalar(2L) * compose(Ep, Em) - H + RadicalScalar(Rational(1, 2)) * compose(H, H);
    o.require(C == casimir_operator(), "Casimir differs from library form");
    o.require(commutator(C, Ep).is_zero(), "[C,E+] != 0");
    o.require(commutator(C, Em).is_zero(), "[C,E-] != 0");
    o.require(commutator(C, H).is_zero(), "[C,H] != 0");
    return o;
  });

  criterion(3, "norm closed forms equal inner products, m <= 20, k <= 10, z1 and z2", 5.0, [] {
    Outcome o;
    for (unsigned m = 0; m <= 20; ++m) {
      for (unsigned k = 0; k <= 10; ++k) {
        const std::string tag = " m=" + std::to_string(m) + " k=" + std::to_string(k);
        const Rational c1 = norm_closed_form({m, k, ExtraVariable::z1});
        const Rational c2 = norm_closed_form({m, k, ExtraVariable::z2});
        o.require(c1 == monomial_norm(m, k, 0), "z1 closed form vs factorial oracle" + tag);
        o.require(c2 == monomial_norm(m, 0, k), "z2 closed form vs factorial oracle" + tag);
        o.require(norm_squared(monomial_expand_invariant(m, {k, 0})) == RadicalScalar(c1), "z1 inner product" + tag);
        o.require(norm_squared(monomial_expand_invariant(m, {0, k})) == RadicalScalar(c2), "z2 inner product" + tag);
      }
    }
    return o;
  });

  criterion(4, "Casimir tridiagonalization to m = 100 and Hahn parameter match", 30.0, [] {
    Outcome o;
    struct Case {
      int weight;
      Rational x, y, beta1, beta0;  // alpha = (m+x)(m+y), beta = -(2m^2 + beta1 m + beta0)
      Rational a, b, c, d;
    };
    const Case cases[] = {
        {-1, Rational(1, 3), Rational(2, 3), 1, Rational(1, 3), 0, Rational(1, 3), Rational(2, 3), 1},
        {0, Rational(2, 3), Rational(4, 3), 2, Rational(2, 3), Rational(1, 2), Rational(1, 6), Rational(5, 6), Rational(1, 4)},
    };
    for (const Case& cs : cases) {
      const CasimirTridiagonal d = casimir_tridiagonal(cs.weight, 100);
      const std::string tag = " weight " + std::to_string(cs.weight);
      o.require(d.triples.size() == 101, "triple count" + tag);
      for (const auto& t : d.triples) {
        const Rational m = t.m;
        o.require(t.alpha == (m + cs.x) * (m + cs.y), "alpha at m=" + std::to_string(t.m) + tag);
        o.require(t.beta == -(2 * m * m + cs.beta1 * m + cs.beta0), "beta at m=" + std::to_string(t.m) + tag);
        o.require(t.gamma == m * m, "gamma at m=" + std::to_string(t.m) + tag);
        o.require(d.norms[t.m] == hahn_norm_oracle(cs.a, cs.b, cs.c, t.m), "norm at m=" + std::to_string(t.m) + tag);
      }
      const HahnParams p = params_for_weight(cs.weight);
      o.require(p.a == cs.a && p.b == cs.b && p.c == cs.c && p.d == cs.d, "reported parameters" + tag);
      o.require(match_hahn_params(d, p).matched(), "parameter match" + tag);
    }
    return o;
  });

  criterion(5, "Hahn orthogonality by quadrature, m,l <= 10, rel <= 1e-8; mass 1 to 1e-10", 20.0, [] {
    Outcome o;
    for (const HahnParams& p : {odd_weight_params(), even_weight_params()}) {
      for (unsigned m = 0; m <= 10; ++m) {
        for (unsigned l = 0; l <= 10; ++l) {
          const QuadratureResult q = quadrature_orthogonality(m, l, p);
          const Real expected = m == l ? rational_to<Real>(hahn_norm_oracle(p.a, p.b, p.c, m)) : 0;
          const Real scale = std::sqrt(rational_to<Real>(hahn_norm_oracle(p.a, p.b, p.c, m)) *
                                       rational_to<Real>(hahn_norm_oracle(p.a, p.b, p.c, l)));
          const Real rel = std::abs(q.value - expected) / (m == l ? expected : scale);
          o.require(rel <= 1e-8L, "m=" + std::to_string(m) + " l=" + std::to_string(l) + " " + p.to_string() + " rel " + std::to_string(static_cast<double>(rel)));
        }
      }
      const QuadratureResult mass = quadrature_mass(p);
      o.require(std::abs(mass.value - 1) <= 1e-10L, "mass " + p.to_string());
    }
    return o;
  });

  criterion(6, "spectrum: -C >= 1/2 at N = 2000, minimum decreasing over N = 250..2000, Kolmogorov <= 0.05", 60.0, [] {
    Outcome o;
    for (int weight : {-1, 0}) {
      const std::string tag = " weight " + std::to_string(weight);
      Real previous = INFINITY;
      for (std::size_t N : {250u, 500u, 1000u}) {
        const Real min = spectrum_report(weight, N, false).min;
        o.require(min < previous && min >= 0.5L - 1e-6L, "minimum not decreasing at N=" + std::to_string(N) + tag);
        previous = min;
      }
      const SpectrumReport r = spectrum_report(weight, 2000);
      for (Real v : r.casimir_values) o.require(v >= 0.5L - 1e-6L, "eigenvalue below 1/2" + tag);
      o.require(r.min < previous, "minimum not decreasing at N=2000" + tag);
      char buf[160];
      std::snprintf(buf, sizeof buf, "Kolmogorov %.4Lf > 0.05%s (min %.6Lf)", r.kolmogorov, tag.c_str(), r.min);
      o.require(r.kolmogorov <= 0.05L, buf);
    }
    return o;
  });

  criterion(7, "highest weight vectors k = 1..5, L = 30; k = 0 diverges; k = 1 norm to 1e-10", 20.0, [] {
    Outcome o;
    for (unsigned k = 1; k <= 5; ++k) {
      const std::string tag = " k=" + std::to_string(k);
      const HwvSeries s = solve_hwv(k, 30);
      for (unsigned l = 0; l <= 30; ++l) {
        const Rational expected = Rational(factorial(k)) / Rational(factorial(l) * factorial(k + l));
        o.require(s.a[l] == expected, "coefficient l=" + std::to_string(l) + tag);
        // f_l = a_l I^l z1^k is a single monomial
        const FockPolynomial f = monomial_expand_invariant(l, {k, 0}) * RadicalScalar(expected);
        o.require(s.terms[l] == f, "term l=" + std::to_string(l) + tag);
      }
      // E+ f = z2^2 f_30, degree k + 122
      const FockPolynomial residual = apply(sl2_operators().Eplus, s.truncation);
      o.require(residual == FockPolynomial::monomial({0, 2}) * s.terms[30], "E+ residual" + tag);
      o.require(residual.degree() == static_cast<int>(k + 122) && residual.low_degree() == static_cast<int>(k + 122), "residual band" + tag);
      const Rational nu = 3 * k + 1;
      const FockPolynomial defect = apply(casimir_operator(), s.truncation) - s.truncation * RadicalScalar(nu * nu / 2 - nu);
      o.require(defect.filter_degree([k](unsigned d) { return d <= k + 4 * 29; }).is_zero(), "Casimir on interior degrees" + tag);
    }
    // k = 0: increments S_2M - S_M bounded below by sqrt(3)/(2 pi) log((2M+2)/(M+2)) > 0
    const NormPartials p0 = hwv_norm_partials(0, 30);
    const Real K = std::sqrt(3.0L) / (2 * std::numbers::pi_v<long double>);
    o.require(p0.verdict == ConvergenceVerdict::divergent, "k=0 verdict");
    for (std::size_t i = 0; i < p0.doubling_values.size(); ++i) {
      const Real M = static_cast<Real>(p0.doubling_points[i]);
      o.require(p0.doubling_values[i] >= K * std::log((2 * M + 2) / (M + 2)), "k=0 doubling increment at M=" + std::to_string(p0.doubling_points[i]));
    }
    o.require(hwv_norm_partials(1, 30).verdict == ConvergenceVerdict::convergent, "k=1 verdict");
    const NormEnclosure e = hwv_norm_enclosure(1, 1e-10);
    const NormEnclosure finer = hwv_norm_enclosure(1, 1e-12);
    o.require(e.upper - e.lower <= HighReal(1e-10), "k=1 enclosure wider than 1e-10");
    o.require(finer.lower >= e.lower && finer.upper <= e.upper, "k=1 enclosures not nested");
    const HighReal gauss = 9 * sqrt(HighReal(3)) / (4 * boost::math::constants::pi<HighReal>());
    o.require(e.lower <= gauss && gauss <= e.upper, "k=1 enclosure misses 9 sqrt(3) / (4 pi)");
    return o;
  });

  criterion(8, "no lowest weight vectors to degree 12; discrete catalog and even part", 5.0, [] {
    Outcome o;
    const LwsScanReport scan = no_lws_scan(12);
    for (const auto& e : scan.kernel) {
      o.require(e.weight <= 0, "kernel element of positive weight in degree " + std::to_string(e.degree));
      const auto& [alpha, c] = *e.element.terms().begin();
      o.require(alpha[1] <= 1, "kernel element not of the form z1^a or z1^a z2");
      o.require(e.weight == -1 - 3 * static_cast<int>(alpha[0]) + static_cast<int>(alpha[1]), "kernel weight");
    }
    o.require(scan.kernel.size() == 2 * 12 + 1, "kernel dimension count");
    const auto all = discrete_components(Parity::all, 12);
    for (unsigned k = 1; k <= 12; ++k) {
      o.require(all[k - 1].kind == ReprKind::highest_weight && all[k - 1].extremal_weight() == -static_cast<int>(3 * k + 1), "catalog entry k=" + std::to_string(k));
    }
    const auto even = discrete_components(Parity::even, 12);
    o.require(even.size() == 6, "even part size");
    for (unsigned l = 1; l <= even.size(); ++l) {
      o.require(even[l - 1].extremal_weight() == -static_cast<int>(6 * l + 1), "even part l=" + std::to_string(l));
    }
    return o;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
