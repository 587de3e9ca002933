#include <doctest.h>

#include "ipsd/algebra.hpp"
#include "ipsd/models.hpp"

using namespace ipsd;

namespace {

Rational entry(const CTMCGenerator& g, const Config& from, const Config& to) {
  auto f = g.space().index_of(from), t = g.space().index_of(to);
  REQUIRE(f);
  REQUIRE(t);
  for (const auto& [target, r] : g.transitions_from(*f))
    if (target == *t) return r;
  return 0;
}

bool zero_row_sums(const CTMCGenerator& g) {
  RatMatrix l = g.dense();
  for (std::size_t i = 0; i < l.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < l.cols(); ++j) s += l(i, j);
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("partial exclusion two-site rates") {
  Kernel k = chain_kernel(2);
  int two_j = 4;
  CTMCGenerator g = sep2j_generator(k, two_j, std::nullopt);
  for (int a = 0; a <= two_j; ++a)
    for (int b = 0; b <= two_j; ++b) {
      if (a > 0 && b < two_j)
        CHECK(entry(g, {a, b}, {a - 1, b + 1}) == Rational(a) * (two_j - b));
      if (b > 0 && a < two_j)
        CHECK(entry(g, {a, b}, {a + 1, b - 1}) == Rational(b) * (two_j - a));
    }
  CHECK(zero_row_sums(g));
}

TEST_CASE("inclusion-walker two-site rates at m=1") {
  Kernel k = chain_kernel(2);
  CTMCGenerator g = sip_generator(k, 1, 5);
  for (int a = 1; a <= 5; ++a) {
    int b = 5 - a;
    CHECK(entry(g, {a, b}, {a - 1, b + 1}) == Rational(2 * a) * (2 * b + 1));
  }
  CHECK(zero_row_sums(g));
}

TEST_CASE("independent walkers hop at their occupation number") {
  Kernel k = chain_kernel(3);
  CTMCGenerator g = irw_generator(k, 3);
  CHECK(entry(g, {3, 0, 0}, {2, 1, 0}) == 3);
  CHECK(entry(g, {1, 1, 1}, {1, 0, 2}) == 1);
  CHECK(entry(g, {0, 2, 1}, {1, 1, 1}) == 2);
  // No next-nearest hops on a chain.
  CHECK(entry(g, {3, 0, 0}, {2, 0, 1}) == 0);
  CHECK(zero_row_sums(g));
}

TEST_CASE("sector enumeration is conserved by the dynamics") {
  Kernel k = chain_kernel(3);
  CTMCGenerator g = sep2j_generator(k, 3, 4);
  CHECK(g.conserved() == 4);
  for (std::size_t s = 0; s < g.space().size(); ++s) {
    const Config& c = g.space().state(s);
    CHECK(c[0] + c[1] + c[2] == 4);
  }
  CHECK_THROWS_AS(sep2j_generator(k, 1, 4), EmptySector);
}

TEST_CASE("ladder exclusion total escape rate counts free target levels") {
  Kernel k = chain_kernel(2);
  int levels = 2;
  CTMCGenerator g = ladder_sep_generator(k, levels, 1);
  // One particle at (site 0, level 0): it may hop to either free level of
  // site 1 at rate p(0,1) = 1 each.
  Config zeta{1, 0, 0, 0};
  auto s = g.space().index_of(zeta);
  REQUIRE(s);
  CHECK(g.total_rate(*s) == 2);
  // Full ladder has no free levels anywhere: absorbing.
  CTMCGenerator full = ladder_sep_generator(k, levels, 4);
  CHECK(full.space().size() == 1);
  CHECK(full.total_rate(0) == 0);
}

TEST_CASE("ladder projection sums the levels per site") {
  CHECK(ladder_projection({1, 0, 1, 1}, 2, 2) == Config{1, 2});
  CHECK(ladder_projection({0, 0, 0, 0, 0, 1}, 3, 2) == Config{0, 0, 1});
}

TEST_CASE("two-site exclusion Hamiltonian matches the rate-built generator") {
  // L^T = J1+ J2- + J1- J2+ + 2 J1^0 J2^0 - (2 j^2) 1.
  for (int two_j : {1, 2, 3, 4}) {
    OperatorTriple r = su2_rep(two_j);
    RatMatrix id = RatMatrix::identity(r.dim);
    RatMatrix lt = kron(r.plus, r.minus) + kron(r.minus, r.plus) +
                   Rational(2) * kron(r.zero, r.zero) -
                   Rational(two_j * two_j, 2) * kron(id, id);
    CTMCGenerator g = sep2j_generator(chain_kernel(2), two_j, std::nullopt);
    CHECK(g.dense().transpose() == lt);
  }
}

TEST_CASE("two-site inclusion Hamiltonian matches the rate-built generator") {
  // L^T = 4 (K1+ K2- + K1- K2+ - 2 K1^0 K2^0 + 1/8).
  std::size_t cutoff = 7;
  OperatorTriple r = su11_rep(1, cutoff);
  RatMatrix id = RatMatrix::identity(cutoff);
  RatMatrix lt = Rational(4) * (kron(r.plus, r.minus) + kron(r.minus, r.plus) -
                                Rational(2) * kron(r.zero, r.zero) +
                                Rational(1, 8) * kron(id, id));
  StateSpace full = StateSpace::full({static_cast<int>(cutoff) - 1, static_cast<int>(cutoff) - 1});
  for (int total = 0; total <= static_cast<int>(cutoff) - 2; ++total) {
    CTMCGenerator g = sip_generator(chain_kernel(2), 1, total);
    RatMatrix block = restrict_to(lt, full, g.space());
    CHECK(g.dense().transpose() == block);
  }
}

TEST_CASE("two-site walker Hamiltonian matches the rate-built generator") {
  // L^T = -(a1+ - a2+)(a1- - a2-).
  std::size_t cutoff = 7;
  OperatorTriple r = heisenberg_rep(cutoff);
  RatMatrix id = RatMatrix::identity(cutoff);
  RatMatrix ap = kron(r.plus, id) - kron(id, r.plus);
  RatMatrix am = kron(r.minus, id) - kron(id, r.minus);
  RatMatrix lt = Rational(-1) * (ap * am);
  StateSpace full = StateSpace::full({static_cast<int>(cutoff) - 1, static_cast<int>(cutoff) - 1});
  for (int total = 0; total <= static_cast<int>(cutoff) - 2; ++total) {
    CTMCGenerator g = irw_generator(chain_kernel(2), total);
    CHECK(g.dense().transpose() == restrict_to(lt, full, g.space()));
  }
}

TEST_CASE("reservoir birth and death rates at the boundary") {
  Kernel k = boundary_chain_kernel(2, Rational(1, 4), Rational(3, 4));
  int two_j = 2;
  CTMCGenerator g = boundary_sep2j_generator(k, two_j);
  CHECK(entry(g, {0, 0}, {1, 0}) == Rational(1, 4) * 2);  // birth rho (2j - 0)
  CHECK(entry(g, {1, 0}, {0, 0}) == Rational(3, 4));      // death (1 - rho) eta
  CHECK(entry(g, {0, 1}, {0, 2}) == Rational(3, 4));      // right birth rho (2j - 1)
  CHECK(entry(g, {0, 2}, {0, 1}) == Rational(1, 4) * 2);  // right death
  CHECK(zero_row_sums(g));
}

TEST_CASE("absorbing dual moves particles into sinks and conserves the total") {
  Kernel k = boundary_chain_kernel(3, Rational(1, 4), Rational(3, 4));
  CTMCGenerator g = dual_absorbing_sep2j_generator(k, 1, 2);
  CHECK(g.space().n_slots() == 5);
  CHECK(entry(g, {1, 1, 0, 0, 0}, {0, 1, 0, 1, 0}) == 1);  // absorb at left, rate xi_0
  CHECK(entry(g, {0, 0, 1, 0, 1}, {0, 0, 0, 0, 2}) == 1);  // absorb at right
  CHECK(entry(g, {1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}) == 1);  // bulk hop unchanged
  for (std::size_t s = 0; s < g.space().size(); ++s) {
    const Config& c = g.space().state(s);
    int total = 0;
    for (int x : c) total += x;
    CHECK(total == 2);
  }

  CTMCGenerator gs = dual_absorbing_sip_generator(k, 2, 2);
  CHECK(entry(gs, {2, 0, 0, 0, 0}, {1, 0, 0, 1, 0}) == 4);  // absorb at rate 2 xi_0
  CHECK(entry(gs, {1, 1, 0, 0, 0}, {0, 2, 0, 0, 0}) == 2 * (2 * 1 + 2));
}

TEST_CASE("pair redistribution law from detailed balance") {
  // m=2 is uniform for any bond total.
  for (int n : {1, 2, 3, 5}) {
    std::vector<Rational> law = gamma_hat_law(2, n);
    for (const auto& p : law) CHECK(p == Rational(1, n + 1));
  }
  // Laws are normalized probability vectors.
  for (int m : {1, 3, 4}) {
    std::vector<Rational> law = gamma_hat_law(m, 4);
    Rational z = 0;
    for (const auto& p : law) {
      CHECK(p > 0);
      z += p;
    }
    CHECK(z == 1);
  }
  // Symmetry under k <-> N - k.
  std::vector<Rational> law = gamma_hat_law(3, 5);
  for (int k = 0; k <= 5; ++k) CHECK(law[k] == law[5 - k]);
}

TEST_CASE("pair chain generator has zero row sums and matches the law's balance") {
  RatMatrix l = dual_pair_chain(3, 4);
  for (std::size_t i = 0; i < l.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < l.cols(); ++j) s += l(i, j);
    CHECK(s == 0);
  }
  std::vector<Rational> mu = gamma_hat_law(3, 4);
  for (int k = 0; k < 4; ++k) CHECK(mu[k] * l(k, k + 1) == mu[k + 1] * l(k + 1, k));
}

TEST_CASE("even moments of the energy share") {
  // m=2: eps/E uniform on [-1,1], so E[(eps/E)^{2k}] = 1/(2k+1).
  for (int k = 1; k <= 4; ++k)
    CHECK(gamma_even_moment_ratio(2, k) == Rational(1, 2 * k + 1));
  // Midpoint-fraction moments: E[B^a (1-B)^b] for B ~ Beta(m/2, m/2).
  CHECK(beta_joint_moment(2, 1, 0) == Rational(1, 2));
  CHECK(beta_joint_moment(2, 1, 1) == Rational(1, 6));
  CHECK(beta_joint_moment(1, 2, 0) == Rational(3, 8));
  CHECK(beta_joint_moment(4, 1, 1) == Rational(1, 5));
}

TEST_CASE("closed-form two-site flow conserves the sum and decays the difference") {
  auto [x1, x2] = deterministic_flow({2.0, 0.0}, 0.0);
  CHECK(x1 == 2.0);
  CHECK(x2 == 0.0);
  auto [y1, y2] = deterministic_flow({2.0, 0.0}, 0.7);
  CHECK(y1 + y2 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(y1 - y2 == doctest::Approx(2.0 * std::exp(-1.4)).epsilon(1e-12));
}
