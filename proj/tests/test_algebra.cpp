#include <doctest.h>

#include "ipsd/algebra.hpp"

using namespace ipsd;

namespace {

RatMatrix top_block(const RatMatrix& a, std::size_t n) {
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j);
  return b;
}

}  // namespace

TEST_CASE("spin ladder operators satisfy the su(2) relations exactly") {
  for (int two_j : {1, 2, 3, 4}) {
    OperatorTriple r = su2_rep(two_j);
    CHECK(r.dim == static_cast<std::size_t>(two_j + 1));
    CHECK((commutator(r.zero, r.plus) - r.plus).is_zero());
    CHECK((commutator(r.zero, r.minus) + r.minus).is_zero());
    CHECK((commutator(r.plus, r.minus) - r.zero * Rational(2)).is_zero());
  }
}

TEST_CASE("truncated su(1,1) ladder operators satisfy the relations on the exact block") {
  for (int m : {1, 2, 3, 4}) {
    OperatorTriple r = su11_rep(m, 12);
    CHECK(r.exact_dim == 11);
    CHECK(top_block(commutator(r.zero, r.plus) - r.plus, r.exact_dim).is_zero());
    CHECK(top_block(commutator(r.zero, r.minus) + r.minus, r.exact_dim).is_zero());
    CHECK(top_block(commutator(r.plus, r.minus) + r.zero * Rational(2), r.exact_dim).is_zero());
  }
}

TEST_CASE("creation and annihilation satisfy the canonical commutation relation") {
  OperatorTriple r = heisenberg_rep(10);
  RatMatrix c = commutator(r.minus, r.plus) - RatMatrix::identity(r.dim);
  CHECK(top_block(c, r.exact_dim).is_zero());
}

TEST_CASE("representation matrix elements") {
  OperatorTriple r = su2_rep(3);
  CHECK(r.plus(1, 0) == 3);   // (2j - 0) into |1>
  CHECK(r.plus(3, 2) == 1);   // (2j - 2)
  CHECK(r.minus(1, 2) == 2);  // eta = 2 lowers with weight 2
  CHECK(r.zero(0, 0) == Rational(-3, 2));
  CHECK(r.zero(3, 3) == Rational(3, 2));

  OperatorTriple k = su11_rep(1, 6);
  CHECK(k.plus(1, 0) == Rational(1, 2));
  CHECK(k.plus(3, 2) == Rational(5, 2));
  CHECK(k.minus(2, 3) == 3);
  CHECK(k.zero(2, 2) == Rational(9, 4));
}

TEST_CASE("exponential of the raising operator has binomial matrix elements") {
  for (int two_j : {1, 2, 3}) {
    OperatorTriple r = su2_rep(two_j);
    RatMatrix s = exp_raising(r.plus);
    // Row eta, column xi: sum over chains of raisings, each step multiplying
    // (2j - level); closed form binomial(2j - xi, eta - xi).
    for (int eta = 0; eta <= two_j; ++eta)
      for (int xi = 0; xi <= two_j; ++xi)
        CHECK(s(eta, xi) == Rational(binomial(two_j - xi, eta - xi)));
    // Group inverse.
    CHECK(exp_raising(r.plus * Rational(-1)) * s == RatMatrix::identity(r.dim));
  }
}

TEST_CASE("su(1,1) raising exponential matches the double-factorial form at m=1") {
  OperatorTriple k = su11_rep(1, 8);
  RatMatrix s = exp_raising(k.plus);
  for (int eta = 0; eta < 8; ++eta)
    for (int xi = 0; xi <= eta; ++xi) {
      Rational pochhammer = rising_factorial(Rational(1, 2) + xi, eta - xi) /
                            Rational(factorial(eta - xi));
      CHECK(s(eta, xi) == pochhammer);
      Rational closed = Rational(double_factorial_odd(eta)) /
                        (Rational(double_factorial_odd(xi)) * factorial(eta - xi) *
                         pow_rational(2, eta - xi));
      CHECK(s(eta, xi) == closed);
    }
}

TEST_CASE("exp_raising rejects non-nilpotent input") {
  CHECK_THROWS_AS(exp_raising(RatMatrix::identity(3)), NotNilpotentOrTriangular);
}

TEST_CASE("tensor embedding follows the last-site-fastest ordering") {
  OperatorTriple r = su2_rep(1);
  RatMatrix id = RatMatrix::identity(2);
  CHECK(tensor_site_operator(r.plus, 0, 2) == kron(r.plus, id));
  CHECK(tensor_site_operator(r.plus, 1, 2) == kron(id, r.plus));
  CHECK(total_operator(r.plus, 2) == kron(r.plus, id) + kron(id, r.plus));
}

TEST_CASE("exponential of a sum of commuting site operators factorizes") {
  OperatorTriple r = su2_rep(2);
  RatMatrix total = total_operator(r.plus, 2);
  RatMatrix site = exp_raising(r.plus);
  CHECK(exp_raising(total) == kron(site, site));
}

TEST_CASE("invalid representation parameters are rejected") {
  CHECK_THROWS_AS(su2_rep(0), InvalidSpin);
  CHECK_THROWS_AS(su2_rep(-2), InvalidSpin);
  CHECK_THROWS_AS(su11_rep(0, 8), AlgebraError);
  CHECK_THROWS_AS(su11_rep(2, 1), CutoffTooSmall);
}
