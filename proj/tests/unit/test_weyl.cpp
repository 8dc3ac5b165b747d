#include <doctest.h>

#include <random>

#include "mpb/metaplectic.hpp"

using namespace mpb;

namespace {

MultiIndex random_index(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> d(0, max_degree);
  unsigned a = d(rng);
  std::uniform_int_distribution<unsigned> split(0, a);
  const unsigned b = split(rng);
  return {b, a - b};
}

WeylOperator random_operator(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> radical(0, 1);
  WeylOperator op(2);
  for (int i = terms(rng); i > 0; --i) {
    const RadicalScalar c = radical(rng) ? RadicalScalar::radical(coeff(rng), 3) : RadicalScalar(static_cast<long>(coeff(rng)));
    op.add_term(random_index(rng, max_degree / 2), random_index(rng, max_degree / 2), c);
  }
  return op;
}

FockPolynomial random_polynomial(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  FockPolynomial p(2);
  for (int i = 0; i < 3; ++i) p.add_term(random_index(rng, max_degree), RadicalScalar(static_cast<long>(coeff(rng))));
  return p;
}

}  // namespace

TEST_CASE("sl2_action_on_small_polynomials") {
  const Sl2Operators s = sl2_operators();
  CHECK(apply(s.H, FockPolynomial::monomial({1, 0})) == FockPolynomial::monomial({1, 0}, RadicalScalar(-4L)));
  CHECK(apply(s.Eplus, FockPolynomial::constant(2, 1L)) == FockPolynomial::monomial({0, 2}));
  FockPolynomial expected(2);
  expected.add_term({1, 1}, RadicalScalar::radical(Rational(-2, 3), 3));
  expected.add_term({2, 4}, RadicalScalar(Rational(1, 3)));
  CHECK(apply(s.Eminus, monomial_expand_invariant(1, {0, 0})) == expected);
}

TEST_CASE("normal_ordering_of_products") {
  const WeylOperator d1 = WeylOperator::partial(2, 0);
  const WeylOperator z1 = WeylOperator::coordinate(2, 0);
  WeylOperator expected = WeylOperator::term(1L, {1, 0}, {1, 0});
  expected += WeylOperator::identity(2);
  CHECK(compose(d1, z1) == expected);
  CHECK(commutator(WeylOperator::partial(2, 1), WeylOperator::coordinate(2, 1)) == WeylOperator::identity(2));
  // d2^2 o z2^2 = z2^2 d2^2 + 4 z2 d2 + 2
  WeylOperator dd = WeylOperator::term(1L, {0, 0}, {0, 2});
  WeylOperator zz = WeylOperator::term(1L, {0, 2}, {0, 0});
  WeylOperator sum = WeylOperator::term(1L, {0, 2}, {0, 2});
  sum += WeylOperator::term(4L, {0, 1}, {0, 1});
  sum += WeylOperator::identity(2, 2L);
  CHECK(compose(dd, zz) == sum);
}

TEST_CASE("sl2_relations_as_operator_identities") {
  const Sl2Operators s = sl2_operators();
  CHECK(commutator(s.Eplus, s.Eminus) == s.H);
  CHECK(commutator(s.H, s.Eplus) == RadicalScalar(2L) * s.Eplus);
  CHECK(commutator(s.H, s.Eminus) == RadicalScalar(-2L) * s.Eminus);
  const WeylOperator C = casimir_operator();
  CHECK(commutator(C, s.Eplus).is_zero());
  CHECK(commutator(C, s.Eminus).is_zero());
  CHECK(commutator(C, s.H).is_zero());
}

TEST_CASE("formal_adjoints") {
  const Sl2Operators s = sl2_operators();
  CHECK(formal_adjoint(WeylOperator::term(1L, {0, 2}, {0, 0})) == WeylOperator::term(1L, {0, 0}, {0, 2}));
  CHECK(formal_adjoint(s.Eplus) == -s.Eminus);
  CHECK(formal_adjoint(s.Eminus) == -s.Eplus);
  CHECK(formal_adjoint(s.H) == s.H);
}

TEST_CASE("adjoint_matches_inner_product_on_low_degree_monomials") {
  // <A p, q> = <p, A* q> over all monomials of degree <= 6.
  const Sl2Operators s = sl2_operators();
  std::vector<FockPolynomial> monos;
  for (unsigned d = 0; d <= 6; ++d) {
    for (unsigned a = 0; a <= d; ++a) monos.push_back(FockPolynomial::monomial({a, d - a}));
  }
  for (const WeylOperator* op : {&s.H, &s.Eplus, &s.Eminus}) {
    const WeylOperator adj = formal_adjoint(*op);
    for (const auto& p : monos) {
      for (const auto& q : monos) CHECK(inner_product(apply(*op, p), q) == inner_product(p, apply(adj, q)));
    }
  }
}

TEST_CASE("adjoint_identity_on_random_operators") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const WeylOperator op = random_operator(rng, 4);
    const FockPolynomial p = random_polynomial(rng, 8);
    const FockPolynomial q = random_polynomial(rng, 8);
    CHECK(inner_product(apply(op, p), q) == inner_product(p, apply(formal_adjoint(op), q)));
  }
}

TEST_CASE("composition_is_sound_on_random_inputs") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 150; ++i) {
    const WeylOperator a = random_operator(rng, 4);
    const WeylOperator b = random_operator(rng, 4);
    const FockPolynomial p = random_polynomial(rng, 8);
    CHECK(apply(compose(a, b), p) == apply(a, apply(b, p)));
  }
}

TEST_CASE("casimir_on_constant_and_z2") {
  const WeylOperator C = casimir_operator();
  FockPolynomial one(2), z2(2);
  one.add_term({0, 0}, RadicalScalar(Rational(-9, 2)));
  one.add_term({1, 3}, RadicalScalar::radical(2, 3));
  z2.add_term({0, 1}, RadicalScalar(-12L));
  z2.add_term({1, 4}, RadicalScalar::radical(2, 3));
  CHECK(apply(C, FockPolynomial::constant(2, 1L)) == one);
  CHECK(apply(C, FockPolynomial::monomial({0, 1})) == z2);
  // 18 I = 2 sqrt(3) z1 z2^3
  CHECK(monomial_expand_invariant(1, {0, 0}) * RadicalScalar(18L) == FockPolynomial::monomial({1, 3}, RadicalScalar::radical(2, 3)));
}
