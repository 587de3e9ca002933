#include <doctest.h>

#include "ipsd/duality.hpp"
#include "ipsd/verify.hpp"

using namespace ipsd;

namespace {

std::vector<Rational> binomial_product_measure(const StateSpace& sp, int two_j,
                                               const Rational& rho) {
  std::vector<Rational> mu;
  for (const Config& c : sp.states()) {
    Rational w = 1;
    for (int n : c)
      w *= Rational(binomial(two_j, n)) * pow_rational(rho, n) *
           pow_rational(1 - rho, two_j - n);
    mu.push_back(w);
  }
  return mu;
}

}  // namespace

TEST_CASE("conjugation from a reversible measure") {
  Kernel k = chain_kernel(2);
  CTMCGenerator g = sep2j_generator(k, 2, 2);
  ConjugationQ q = q_from_reversible_measure(g, binomial_product_measure(g.space(), 2, Rational(1, 2)));
  RatMatrix l = g.dense();
  CHECK(q.matrix() * l * q.inverse_matrix() == l.transpose());
  // A non-reversible measure is rejected with a witness.
  std::vector<Rational> bad(g.space().size(), 1);
  bad[0] = 7;
  CHECK_THROWS_AS(q_from_reversible_measure(g, bad), NotReversible);
}

TEST_CASE("symmetry to duality and back for the two-site exclusion pair") {
  for (int two_j : {1, 2, 3}) {
    Kernel k = chain_kernel(2);
    CTMCGenerator g = sep2j_generator(k, two_j, std::nullopt);
    RatMatrix l = g.dense();
    OperatorTriple r = su2_rep(two_j);
    RatMatrix s = exp_raising(total_operator(r.plus, 2));
    ConjugationQ q = q_from_reversible_measure(
        g, binomial_product_measure(g.space(), two_j, Rational(1, 2)));
    // S commutes with L^T here, so D = Q^{-1} S.
    RatMatrix d = duality_from_symmetry(s, q, l, TheoremSide::SymmetryOfTranspose);
    CHECK(verify_selfduality(l, d).zero);
    // Entries factorize as binomial ratios per site.
    RatMatrix expected =
        duality_matrix(sep2j_duality(two_j), g.space(), g.space());
    // The binomial-product Q at rho = 1/2 carries a density factor
    // (1/2)^{2j n_sites}; the derived D differs from the closed form by that
    // constant only.
    Rational scale = pow_rational(Rational(2), 2 * two_j);
    CHECK(d == expected * scale);
    CHECK(verify_selfduality(l, expected).zero);
    // Roundtrip: the closed-form duality regenerates a symmetry.
    RatMatrix s2 = symmetry_from_duality(expected, q, l);
    CHECK(commutator(s2, l).is_zero());
  }
}

TEST_CASE("hypothesis violations are detected") {
  Kernel k = chain_kernel(2);
  CTMCGenerator g = sep2j_generator(k, 1, std::nullopt);
  RatMatrix l = g.dense();
  ConjugationQ q = q_from_reversible_measure(
      g, binomial_product_measure(g.space(), 1, Rational(1, 2)));
  RatMatrix not_sym(l.rows(), l.cols());
  not_sym(0, 1) = 1;
  CHECK_THROWS_AS(duality_from_symmetry(not_sym, q, l, TheoremSide::SymmetryOfL), NotASymmetry);
  // A diagonal that separates the two single-particle states breaks the
  // conjugation identity on the symmetric hop block.
  ConjugationQ bad_q{std::vector<Rational>(l.rows(), Rational(1))};
  bad_q.diag[1] = 2;
  CHECK_THROWS_AS(duality_from_symmetry(RatMatrix::identity(l.rows()), bad_q, l,
                                        TheoremSide::SymmetryOfL),
                  NotAConjugation);
}

TEST_CASE("sector self-duality for the three bulk families") {
  Kernel k3 = chain_kernel(3);
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= na; ++nb) {
      CHECK(verify_selfduality_sectors(sep2j_generator(k3, 2, na),
                                       sep2j_generator(k3, 2, nb), sep2j_duality(2))
                .zero);
      CHECK(verify_selfduality_sectors(sip_generator(k3, 1, na), sip_generator(k3, 1, nb),
                                       sip_duality(1))
                .zero);
      CHECK(verify_selfduality_sectors(irw_generator(k3, na), irw_generator(k3, nb),
                                       irw_duality())
                .zero);
    }
}

TEST_CASE("a perturbed duality function fails verification") {
  Kernel k = chain_kernel(2);
  CTMCGenerator g = sep2j_generator(k, 1, std::nullopt);
  RatMatrix d = duality_matrix(sep2j_duality(1), g.space(), g.space());
  d(1, 2) += Rational(1, 5);
  Residual r = verify_selfduality(g.dense(), d);
  CHECK(!r.zero);
  CHECK(r.witness.value != 0);
}

TEST_CASE("momentum and energy diffusions are dual to the inclusion walkers") {
  for (const char* shape : {"chain2", "chain3"}) {
    Kernel k = chain_kernel(shape[5] - '0');
    for (int total = 1; total <= 3; ++total) {
      CTMCGenerator dual1 = sip_generator(k, 1, total);
      CHECK(verify_duality_diffusion(bmp_operator(k, 1), dual1, [](const Config& xi) {
              return duality_polynomial(ContinuousModel::BMP, xi, 1);
            }).zero);
      for (int m : {1, 2, 3}) {
        CTMCGenerator dual = sip_generator(k, m, total);
        CHECK(verify_duality_diffusion(bep_operator(k, m), dual, [m](const Config& xi) {
                return duality_polynomial(ContinuousModel::BEP, xi, m);
              }).zero);
      }
    }
  }
}

TEST_CASE("deterministic flow is dual to the independent walkers") {
  Kernel k = chain_kernel(2);
  for (int total = 1; total <= 4; ++total) {
    CTMCGenerator dual = irw_generator(k, total);
    CHECK(verify_duality_diffusion(deterministic_flow_operator(), dual, [](const Config& xi) {
            return duality_polynomial(ContinuousModel::DetFlow, xi);
          }).zero);
  }
}

TEST_CASE("boundary-driven exclusion is dual to the absorbing walkers") {
  Kernel k = boundary_chain_kernel(3, Rational(1, 4), Rational(3, 4));
  for (int two_j : {1, 2}) {
    CTMCGenerator l = boundary_sep2j_generator(k, two_j);
    for (int total = 1; total <= 2; ++total) {
      CTMCGenerator ld = dual_absorbing_sep2j_generator(k, two_j, total);
      RatMatrix d = duality_matrix(boundary_sep2j_duality(k, two_j), l.space(), ld.space());
      CHECK(verify_duality(l.dense(), ld.dense(), d).zero);
    }
  }
}

TEST_CASE("boundary-driven energy diffusion is dual to the absorbing walkers") {
  Kernel k = boundary_chain_kernel(3, Rational(1), Rational(2));
  for (int m : {1, 2}) {
    DiffOperator l = boundary_bep_operator(k, m);
    for (int total = 1; total <= 2; ++total) {
      CTMCGenerator ld = dual_absorbing_sip_generator(k, m, total);
      CHECK(verify_duality_diffusion(l, ld, [&k, m](const Config& xi) {
              return boundary_bep_duality_polynomial(k, m, xi);
            }).zero);
    }
  }
}

TEST_CASE("conjugacy pair residuals") {
  Kernel k = chain_kernel(2);
  CTMCGenerator g = irw_generator(k, 2);
  RatMatrix l = g.dense();
  RatMatrix d = duality_matrix(irw_duality(), g.space(), g.space());
  ConjugacyReport rep = conjugacy_pair_check(l, l.transpose(), d, d.inverse());
  CHECK(rep.forward.zero);
  CHECK(rep.backward.zero);
  ConjugacyReport bad = conjugacy_pair_check(l, l, d, d);
  CHECK(!bad.forward.zero);
}

TEST_CASE("site intertwining of continuous and discrete ladders") {
  // x^{2 xi} / (2 xi - 1)!! intertwines the quadratic representation with
  // the m=1 discrete series.
  std::vector<Polynomial> c_bmp;
  for (int xi = 0; xi <= 9; ++xi)
    c_bmp.push_back(
        Polynomial::monomial(1, {2 * xi}, Rational(Integer(1), double_factorial_odd(xi))));
  IntertwiningReport r1 = check_intertwining(bmp_site_ladder(), su11_rep(1, 12), c_bmp);
  CHECK(r1.zero);

  for (int m : {1, 2, 3}) {
    std::vector<Polynomial> c_bep;
    for (int xi = 0; xi <= 9; ++xi)
      c_bep.push_back(Polynomial::monomial(
          1, {xi}, 1 / (pow_rational(2, xi) * rising_factorial(Rational(m, 2), xi))));
    IntertwiningReport r = check_intertwining(bep_site_ladder(m), su11_rep(m, 12), c_bep);
    CHECK(r.zero);
  }

  // Breaking one family member is reported with its location.
  std::vector<Polynomial> broken = c_bmp;
  broken[3] = broken[3] * Rational(2);
  IntertwiningReport bad = check_intertwining(bmp_site_ladder(), su11_rep(1, 12), broken);
  CHECK(!bad.zero);
  CHECK(!bad.detail.empty());
}

TEST_CASE("thermalized bond duality holds for the derived pair law") {
  for (int m : {1, 2, 3})
    for (int total = 0; total <= 3; ++total)
      for (int xi = 0; xi <= total; ++xi)
        CHECK(thermal_duality_residual(m, xi, total - xi).is_zero());
}
