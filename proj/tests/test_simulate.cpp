#include <doctest.h>

#include <cmath>
#include <numeric>

#include "ipsd/simulate.hpp"
#include "ipsd/verify.hpp"

using namespace ipsd;

TEST_CASE("counter-based streams are reproducible and independent") {
  CounterRng a(42, 0), b(42, 0), c(42, 1), d(7, 0);
  bool all_equal = true, stream_differs = false, seed_differs = false;
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = a.next_u64();
    all_equal = all_equal && (x == b.next_u64());
    stream_differs = stream_differs || (x != c.next_u64());
    seed_differs = seed_differs || (x != d.next_u64());
  }
  CHECK(all_equal);
  CHECK(stream_differs);
  CHECK(seed_differs);
}

TEST_CASE("uniform draws live in the half-open unit interval") {
  CounterRng rng(1, 0);
  double mean = 0.0;
  for (int i = 0; i < 20000; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    mean += u;
  }
  CHECK(mean / 20000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("distribution samplers match their first moments") {
  CounterRng rng(3, 0);
  long n = 20000;
  double se = 0.0, sg = 0.0, sb = 0.0;
  for (long i = 0; i < n; ++i) {
    se += rng.exponential(2.0);
    sg += rng.gamma(1.5);
    sb += rng.beta(1.0, 1.0);
  }
  CHECK(se / n == doctest::Approx(0.5).epsilon(0.03));
  CHECK(sg / n == doctest::Approx(1.5).epsilon(0.03));
  CHECK(sb / n == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("jump-rate views agree with the enumerated generators") {
  Kernel k = chain_kernel(3);
  struct Case {
    RateView view;
    CTMCGenerator gen;
  };
  std::vector<Case> cases;
  cases.push_back({sep2j_rate_view(k, 2), sep2j_generator(k, 2, 3)});
  cases.push_back({sip_rate_view(k, 2), sip_generator(k, 2, 3)});
  cases.push_back({irw_rate_view(k), irw_generator(k, 3)});
  for (const auto& [view, gen] : cases) {
    for (std::size_t s = 0; s < gen.space().size(); ++s) {
      const Config& c = gen.space().state(s);
      std::vector<Move> moves = view(c);
      double total_view = 0.0;
      for (const Move& m : moves) total_view += m.rate;
      CHECK(total_view == doctest::Approx(static_cast<double>(gen.total_rate(s))).epsilon(1e-12));
      for (const Move& m : moves) {
        auto t = gen.space().index_of(m.target);
        REQUIRE(t);
        Rational exact = 0;
        for (const auto& [tt, r] : gen.transitions_from(s))
          if (tt == *t) exact = r;
        CHECK(m.rate == doctest::Approx(static_cast<double>(exact)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("trajectories conserve the particle number and stop at t_end") {
  Kernel k = chain_kernel(4);
  RateView view = sip_rate_view(k, 1);
  Config init{3, 0, 0, 1};
  CounterRng rng(11, 0);
  TrajectoryResult tr = gillespie(view, init, 0.5, rng);
  CHECK(std::accumulate(tr.state.begin(), tr.state.end(), 0) == 4);
  CHECK(tr.time == 0.5);

  TrajectoryResult still = gillespie(view, init, 0.0, rng);
  CHECK(still.state == init);
  CHECK(still.n_events == 0);
}

TEST_CASE("absorbing duals end with every particle in a sink") {
  Kernel k = boundary_chain_kernel(3, Rational(1, 4), Rational(3, 4));
  RateView view = dual_absorbing_sep2j_rate_view(k, 1);
  CounterRng rng(5, 0);
  for (int rep = 0; rep < 20; ++rep) {
    Config fin = run_absorbing_dual(k, view, {1, 0, 1, 0, 0}, rng);
    CHECK(fin[0] + fin[1] + fin[2] == 0);
    CHECK(fin[3] + fin[4] == 2);
  }
  Kernel closed = chain_kernel(3);
  RateView bulk = sep2j_rate_view(closed, 1);
  CHECK_THROWS_AS(run_absorbing_dual(closed, bulk, {1, 0, 0}, rng), NotAbsorbable);
}

TEST_CASE("single-particle absorption frequencies match the exact law") {
  Kernel k = boundary_chain_kernel(3, Rational(1, 4), Rational(3, 4));
  CTMCGenerator dual = dual_absorbing_sep2j_generator(k, 1, 1);
  Config start{0, 1, 0, 0, 0};
  std::vector<Rational> law = absorption_distribution(dual, 3, *dual.space().index_of(start));
  auto left = dual.space().index_of({0, 0, 0, 1, 0});
  REQUIRE(left);
  double p_left = static_cast<double>(law[*left]);
  RateView view = dual_absorbing_sep2j_rate_view(k, 1);
  CounterRng rng(9, 0);
  int n = 4000, hits = 0;
  for (int i = 0; i < n; ++i)
    if (run_absorbing_dual(k, view, start, rng)[3] == 1) ++hits;
  double se = std::sqrt(p_left * (1 - p_left) / n);
  CHECK(std::abs(hits / double(n) - p_left) < 4 * se);
}

TEST_CASE("momentum exchange conserves the kinetic energy exactly") {
  Kernel k = chain_kernel(3);
  std::vector<double> x{1.0, -0.5, 2.0, 0.25, 0.0, 1.5};
  double e0 = 0.0;
  for (double v : x) e0 += v * v;
  CounterRng rng(13, 0);
  std::vector<double> y = simulate_bmp(k, 2, x, 0.5, 1e-3, rng);
  double e1 = 0.0;
  for (double v : y) e1 += v * v;
  CHECK(e1 == doctest::Approx(e0).epsilon(1e-10));
  bool moved = false;
  for (std::size_t i = 0; i < x.size(); ++i) moved = moved || x[i] != y[i];
  CHECK(moved);
}

TEST_CASE("energy dynamics conserves the total energy") {
  Kernel k = chain_kernel(3);
  std::vector<double> z{2.0, 0.0, 1.0};
  CounterRng rng(17, 0);
  std::vector<double> w = simulate_bep(k, 2, z, 0.4, 1e-3, rng);
  CHECK(w[0] + w[1] + w[2] == doctest::Approx(3.0).epsilon(1e-10));
  for (double v : w) CHECK(v >= 0.0);
}

TEST_CASE("instantaneous thermalization preserves the conserved quantity") {
  Kernel k = chain_kernel(4);
  CounterRng rng(19, 0);
  ThermalizationSpec spec = kmp_thermal_spec(k, 2);
  std::vector<double> z = simulate_thermalization(spec, {1.0, 2.0, 0.0, 0.5}, 3.0, rng);
  CHECK(z[0] + z[1] + z[2] + z[3] == doctest::Approx(3.5).epsilon(1e-10));
  for (double v : z) CHECK(v >= 0.0);

  ThermalizationSpec dual_spec = dual_kmp_thermal_spec(k, 2);
  Config eta = simulate_dual_thermalization(dual_spec, {3, 0, 1, 0}, 3.0, rng);
  CHECK(std::accumulate(eta.begin(), eta.end(), 0) == 4);
}

TEST_CASE("product-measure samplers hit their exact site laws") {
  CounterRng rng(23, 0);
  long n = 20000;

  double mean_b = 0.0;
  for (long i = 0; i < n; ++i) mean_b += sample_binomial_product(4, {0.25}, rng)[0];
  CHECK(mean_b / n == doctest::Approx(1.0).epsilon(0.03));

  double mean_p = 0.0;
  for (long i = 0; i < n; ++i) mean_p += sample_poisson_product({1.5}, rng)[0];
  CHECK(mean_p / n == doctest::Approx(1.5).epsilon(0.03));

  // Occupation frequencies against the exact marginal
  // (2k-1)!! lambda^k / (Z k!) with Z = 1/sqrt(1 - 2 lambda).
  int m = 1;
  double lambda = 0.25;
  std::vector<long> counts(12, 0);
  for (long i = 0; i < n; ++i) {
    int v = sample_sip_product(m, {lambda}, rng)[0];
    ++counts[std::min(v, 11)];
  }
  double z = 1.0 / std::sqrt(1.0 - 2.0 * lambda);
  std::vector<double> probs(12);
  double w = 1.0, acc = 0.0;
  for (int k = 0; k < 11; ++k) {
    probs[k] = w / z;
    acc += probs[k];
    w *= 2.0 * lambda * (m / 2.0 + k) / (k + 1);
  }
  probs[11] = 1.0 - acc;
  double stat = 0.0;
  int dof = 0;
  for (int k = 0; k < 12; ++k) {
    double expected = n * probs[k];
    if (expected < 5) continue;
    stat += (counts[k] - expected) * (counts[k] - expected) / expected;
    ++dof;
  }
  CHECK(chi_square_pvalue(stat, dof - 1) > 0.01);

  double mean_c = 0.0;
  for (long i = 0; i < n; ++i) mean_c += sample_chi_squared_product(3, {2.0}, rng)[0];
  CHECK(mean_c / n == doctest::Approx(6.0).epsilon(0.03));
}
