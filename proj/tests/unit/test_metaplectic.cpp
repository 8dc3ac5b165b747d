#include <doctest.h>

#include "mpb/metaplectic.hpp"

using namespace mpb;

TEST_CASE("principal_triples_satisfy_sl2_relations") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const VerificationReport r = verify_sl2_matrix(principal_sl2(n));
    CHECK(r.checks.size() == 4);
    CHECK(r.all_passed());
  }
}

TEST_CASE("perturbed_triple_is_rejected") {
  PrincipalTriple t = principal_sl2(2);
  // beta_1 sits at row n-1, column 0 of the upper block of E+
  t.Eplus.B(1, 0) = sqrt_int(2);
  t.Eplus.B(0, 1) = sqrt_int(2);
  t.Eminus = SpElement::from_full(t.Eplus.full().transpose());
  const VerificationReport r = verify_sl2_matrix(t);
  CHECK_FALSE(r.all_passed());
  bool bracket_failed = false;
  for (const auto& c : r.checks) {
    if (c.id == "[E+,E-]=H") bracket_failed = !c.passed;
  }
  CHECK(bracket_failed);
}

TEST_CASE("n2_triple_entries") {
  const PrincipalTriple t = principal_sl2(2);
  CHECK(t.H.A(0, 0) == RadicalScalar(3L));
  CHECK(t.H.A(1, 1) == RadicalScalar(-1L));
  CHECK(t.Eplus.B(1, 0) == sqrt_int(3));
  CHECK(t.Eplus.C(1, 1) == RadicalScalar(2L));
  CHECK(t.Eplus.A.is_zero());
}

TEST_CASE("metaplectic_images_of_the_n2_triple") {
  const Sl2Operators s = sl2_operators();
  WeylOperator H = WeylOperator::identity(2, -1L);
  H += WeylOperator::term(-3L, {1, 0}, {1, 0});
  H += WeylOperator::term(1L, {0, 1}, {0, 1});
  WeylOperator Ep = WeylOperator::term(-sqrt_int(3), {0, 0}, {1, 1});
  Ep += WeylOperator::term(1L, {0, 2}, {0, 0});
  WeylOperator Em = WeylOperator::term(-1L, {0, 0}, {0, 2});
  Em += WeylOperator::term(sqrt_int(3), {1, 1}, {0, 0});
  CHECK(s.H == H);
  CHECK(s.Eplus == Ep);
  CHECK(s.Eminus == Em);
}

TEST_CASE("cartan_image_is_diagonal_on_monomials") {
  const Sl2Operators s = sl2_operators();
  for (unsigned a = 0; a <= 5; ++a) {
    for (unsigned b = 0; b <= 5; ++b) {
      const long w = -1 - 3 * static_cast<long>(a) + static_cast<long>(b);
      CHECK(apply(s.H, FockPolynomial::monomial({a, b})) == FockPolynomial::monomial({a, b}, RadicalScalar(w)));
    }
  }
}

TEST_CASE("dlambda_is_linear_and_a_homomorphism_for_larger_n") {
  for (std::size_t n : {1u, 3u}) {
    const PrincipalTriple t = principal_sl2(n);
    SpElement sum = SpElement::zero(n);
    sum.A = t.H.A + t.Eplus.A;
    sum.B = t.H.B + t.Eplus.B;
    sum.C = t.H.C + t.Eplus.C;
    CHECK(dLambda(sum) == dLambda(t.H) + dLambda(t.Eplus));
    CHECK(commutator(dLambda(t.Eplus), dLambda(t.Eminus)) == dLambda(t.H));
    CHECK(commutator(dLambda(t.H), dLambda(t.Eplus)) == RadicalScalar(2L) * dLambda(t.Eplus));
  }
}

TEST_CASE("sp_element_validation") {
  SpElement x = SpElement::zero(2);
  x.B(0, 1) = RadicalScalar(1L);
  CHECK_THROWS_AS(x.validate(), std::invalid_argument);
  CHECK_THROWS_AS(principal_sl2(0), std::invalid_argument);
  RadicalMatrix bad(4, 4);
  bad(0, 0) = RadicalScalar(1L);
  CHECK_THROWS_AS(SpElement::from_full(bad), std::invalid_argument);
}
