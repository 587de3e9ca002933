#include "ipsd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ipsd {

namespace {

struct MeanStderr {
  double mean = 0.0, stderr_ = 0.0;
};

MeanStderr sample_mean(const Sampler& f, long n, CounterRng& rng) {
  double sum = 0.0, sumsq = 0.0;
  for (long i = 0; i < n; ++i) {
    double x = f(rng);
    sum += x;
    sumsq += x * x;
  }
  double mean = sum / n;
  double var = std::max(0.0, sumsq / n - mean * mean);
  return {mean, std::sqrt(var / n)};
}

MCComparison compare_once(const Sampler& lhs, const Sampler& rhs, long n,
                          std::uint64_t seed, std::uint64_t stream_base, double k_sigma) {
  CounterRng rl(seed, stream_base), rr(seed, stream_base + 1);
  MeanStderr a = sample_mean(lhs, n, rl);
  MeanStderr b = sample_mean(rhs, n, rr);
  MCComparison c;
  c.lhs = a.mean;
  c.rhs = b.mean;
  c.lhs_stderr = a.stderr_;
  c.rhs_stderr = b.stderr_;
  c.n_samples = n;
  double se = std::sqrt(a.stderr_ * a.stderr_ + b.stderr_ * b.stderr_);
  c.z_score = se > 0.0 ? std::abs(a.mean - b.mean) / se : (a.mean == b.mean ? 0.0 : HUGE_VAL);
  c.pass = c.z_score <= k_sigma;
  return c;
}

}  // namespace

MCComparison mc_compare(const Sampler& lhs, const Sampler& rhs, long n,
                        std::uint64_t seed, double k_sigma) {
  MCComparison c = compare_once(lhs, rhs, n, seed, 0, k_sigma);
  if (c.pass) return c;
  // One rerun at 4x on fresh streams guards against multiple-testing flukes.
  c = compare_once(lhs, rhs, 4 * n, seed, 2, k_sigma);
  c.reran = true;
  return c;
}

MCComparison mc_duality_check(const RateView& primal, const RateView& dual,
                              const DualityFunction& D, const Config& eta0,
                              const Config& xi0, double t, long n, std::uint64_t seed) {
  Sampler lhs = [&](CounterRng& rng) {
    TrajectoryResult tr = gillespie(primal, eta0, t, rng);
    return static_cast<double>(D(tr.state, xi0));
  };
  Sampler rhs = [&](CounterRng& rng) {
    TrajectoryResult tr = gillespie(dual, xi0, t, rng);
    return static_cast<double>(D(eta0, tr.state));
  };
  return mc_compare(lhs, rhs, n, seed);
}

std::optional<std::pair<std::size_t, std::size_t>> detailed_balance_check(
    const CTMCGenerator& L, const std::vector<Rational>& mu) {
  auto rate_between = [&](std::size_t a, std::size_t b) {
    for (const auto& [t, r] : L.transitions_from(a))
      if (t == b) return r;
    return Rational(0);
  };
  for (std::size_t s = 0; s < L.space().size(); ++s)
    for (const auto& [t, r] : L.transitions_from(s))
      if (mu[s] * r != mu[t] * rate_between(t, s)) return std::make_pair(s, t);
  return std::nullopt;
}

void lumping_check(const CTMCGenerator& fine, const CTMCGenerator& coarse,
                   const std::function<Config(const Config&)>& pi) {
  const StateSpace& fsp = fine.space();
  const StateSpace& csp = coarse.space();
  for (std::size_t s = 0; s < fsp.size(); ++s) {
    auto c0 = csp.index_of(pi(fsp.state(s)));
    if (!c0) throw NotLumpable("projection leaves the coarse space");
    std::map<std::size_t, Rational> lumped;
    for (const auto& [t, r] : fine.transitions_from(s)) {
      std::size_t c = *csp.index_of(pi(fsp.state(t)));
      if (c != *c0) lumped[c] += r;
    }
    std::map<std::size_t, Rational> expected;
    for (const auto& [c, r] : coarse.transitions_from(*c0)) expected[c] += r;
    if (lumped != expected) {
      std::ostringstream os;
      os << "rate mismatch from fine state " << s << " (coarse class " << *c0 << ")";
      throw NotLumpable(os.str());
    }
  }
}

namespace {

bool is_absorbed(const Config& c, int n_sites) {
  return std::all_of(c.begin(), c.begin() + n_sites, [](int x) { return x == 0; });
}

}  // namespace

AbsorptionResult absorption_solve(const Kernel& k, const CTMCGenerator& dual,
                                  std::size_t max_states) {
  const StateSpace& sp = dual.space();
  if (sp.size() > max_states) throw SectorTooLarge("absorbing sector exceeds dense-solve budget");
  int n = k.n_sites();
  std::vector<Rational> values(sp.size());
  std::vector<long> transient_index(sp.size(), -1);
  std::vector<std::size_t> transient;
  for (std::size_t s = 0; s < sp.size(); ++s) {
    const Config& c = sp.state(s);
    if (is_absorbed(c, n)) {
      Rational v = 1;
      for (int e = 0; e < k.n_sinks(); ++e)
        v *= pow_rational(k.reservoir_param(k.boundary()[e]), c[n + e]);
      values[s] = v;
    } else {
      transient_index[s] = static_cast<long>(transient.size());
      transient.push_back(s);
    }
  }
  // R(s) h(s) - sum_{transient t} r(s,t) h(t) = sum_{absorbed t} r(s,t) h(t).
  std::size_t nt = transient.size();
  RatMatrix a(nt, nt);
  std::vector<Rational> b(nt);
  for (std::size_t row = 0; row < nt; ++row) {
    std::size_t s = transient[row];
    a(row, row) = dual.total_rate(s);
    for (const auto& [t, r] : dual.transitions_from(s)) {
      if (transient_index[t] >= 0)
        a(row, static_cast<std::size_t>(transient_index[t])) -= r;
      else
        b[row] += r * values[t];
    }
  }
  std::vector<Rational> h = a.solve(std::move(b));
  for (std::size_t row = 0; row < nt; ++row) values[transient[row]] = h[row];
  return {std::move(values)};
}

std::vector<Rational> absorption_distribution(const CTMCGenerator& dual, int n_sites,
                                              std::size_t s0) {
  const StateSpace& sp = dual.space();
  std::vector<long> transient_index(sp.size(), -1);
  std::vector<std::size_t> transient, absorbed;
  for (std::size_t s = 0; s < sp.size(); ++s) {
    if (is_absorbed(sp.state(s), n_sites)) {
      absorbed.push_back(s);
    } else {
      transient_index[s] = static_cast<long>(transient.size());
      transient.push_back(s);
    }
  }
  std::vector<Rational> dist(sp.size());
  if (transient_index[s0] < 0) {
    dist[s0] = 1;
    return dist;
  }
  std::size_t nt = transient.size();
  RatMatrix a(nt, nt);
  for (std::size_t row = 0; row < nt; ++row) {
    std::size_t s = transient[row];
    a(row, row) = dual.total_rate(s);
    for (const auto& [t, r] : dual.transitions_from(s))
      if (transient_index[t] >= 0) a(row, static_cast<std::size_t>(transient_index[t])) -= r;
  }
  RatMatrix ainv = a.inverse();
  // P(absorb in t) = sum over transient u of N(s0, u) r(u, t) with
  // N = A^{-1} the expected-visit weights.
  std::size_t row0 = static_cast<std::size_t>(transient_index[s0]);
  for (std::size_t u = 0; u < nt; ++u) {
    const Rational& w = ainv(row0, u);
    if (w == 0) continue;
    for (const auto& [t, r] : dual.transitions_from(transient[u]))
      if (transient_index[t] < 0) dist[t] += w * r;
  }
  return dist;
}

namespace {

// One dual particle at each site in turn; h_i = E_i[prod rho^{sink}].
std::vector<Rational> one_particle_absorption(const Kernel& k,
                                              const CTMCGenerator& dual) {
  AbsorptionResult res = absorption_solve(k, dual);
  const StateSpace& sp = dual.space();
  std::vector<Rational> h(k.n_sites());
  for (int i = 0; i < k.n_sites(); ++i) {
    Config c(sp.n_slots(), 0);
    c[i] = 1;
    h[i] = res.values[*sp.index_of(c)];
  }
  return h;
}

}  // namespace

std::vector<Rational> stationary_profile_sep2j(const Kernel& k, int two_j) {
  CTMCGenerator dual = dual_absorbing_sep2j_generator(k, two_j, 1);
  std::vector<Rational> h = one_particle_absorption(k, dual);
  for (auto& v : h) v *= two_j;
  return h;
}

std::vector<Rational> stationary_profile_energy(const Kernel& k, int m) {
  CTMCGenerator dual = dual_absorbing_sip_generator(k, m, 1);
  std::vector<Rational> h = one_particle_absorption(k, dual);
  for (auto& v : h) v *= m;
  return h;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - i / n));
    d = std::max(d, std::abs((i + 1) / n - f));
  }
  return d;
}

double ks_critical(long n, double alpha) {
  // Asymptotic Kolmogorov quantiles: c(0.05) = 1.358, c(0.01) = 1.628.
  double c = alpha <= 0.01 ? 1.628 : 1.358;
  return c / std::sqrt(static_cast<double>(n));
}

double chi_square_statistic(const std::vector<long>& counts, const std::vector<double>& probs) {
  long n = 0;
  for (long c : counts) n += c;
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double expected = n * probs[i];
    double diff = counts[i] - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

namespace {

double log_gamma(double x) { return std::lgamma(x); }

// Regularized lower incomplete gamma P(a, x) by series / continued fraction.
double reg_gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
  }
  // Lentz continued fraction for Q(a, x).
  double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  double q = std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
  return 1.0 - q;
}

}  // namespace

double chi_square_pvalue(double stat, int dof) {
  return 1.0 - reg_gamma_p(dof / 2.0, stat / 2.0);
}

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double lbeta = log_gamma(a) + log_gamma(b) - log_gamma(a + b);
  double front = std::exp(a * std::log(x) + b * std::log(1.0 - x) - lbeta) / a;
  // Lentz continued fraction; use the symmetry for fast convergence.
  if (x > (a + 1.0) / (a + b + 2.0)) return 1.0 - incomplete_beta(b, a, 1.0 - x);
  double tiny = 1e-300;
  double c = 1.0, d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m < 300; ++m) {
    double m2 = 2.0 * m;
    double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return front * h;
}

double redistribution_cdf(int m, double b) {
  return incomplete_beta(m / 2.0, m / 2.0, b);
}

Rational gamma_hat_stationarity_residual(int m, int N) {
  RatMatrix L = dual_pair_chain(m, N);
  std::vector<Rational> mu = gamma_hat_law(m, N);
  Rational worst = 0;
  for (std::size_t j = 0; j < L.cols(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < L.rows(); ++i) s += mu[i] * L(i, j);
    if (abs(s) > abs(worst)) worst = s;
  }
  return worst;
}

Polynomial thermal_duality_residual(int m, int xi_i, int xi_j) {
  Polynomial d = duality_polynomial(ContinuousModel::BEP, {xi_i, xi_j}, m);
  // Continuous side: each z1^a z2^b averages to E[B^a (1-B)^b] (z1+z2)^{a+b}.
  Polynomial z1 = Polynomial::variable(2, 0), z2 = Polynomial::variable(2, 1);
  Polynomial e = z1 + z2;
  Polynomial lhs(2);
  for (const auto& [mi, c] : d.terms())
    lhs = lhs + e.pow(mi[0] + mi[1]) * (c * beta_joint_moment(m, mi[0], mi[1]));
  // Discrete side: redistribute the dual pair by the stationary pair law.
  int n_bond = xi_i + xi_j;
  std::vector<Rational> law = gamma_hat_law(m, n_bond);
  Polynomial rhs(2);
  for (int k = 0; k <= n_bond; ++k)
    rhs = rhs + duality_polynomial(ContinuousModel::BEP, {k, n_bond - k}, m) * law[k];
  return lhs - rhs;
}

namespace {

// TV between the laws of two sector generators started from eta0, where the
// first space embeds into the second (capped vs uncapped occupations).
double tv_between(const CTMCGenerator& capped, double t_capped,
                  const CTMCGenerator& reference, double t_ref, const Config& eta0) {
  const StateSpace& csp = capped.space();
  const StateSpace& rsp = reference.space();
  std::vector<Real> pc = distribution_at(capped.dense(), *csp.index_of(eta0), Real(t_capped));
  std::vector<Real> pr = distribution_at(reference.dense(), *rsp.index_of(eta0), Real(t_ref));
  Real s = 0;
  for (std::size_t r = 0; r < rsp.size(); ++r) {
    auto c = csp.index_of(rsp.state(r));
    Real q = c ? pc[*c] : Real(0);
    s += abs(q - pr[r]);
  }
  return static_cast<double>(s / 2);
}

}  // namespace

std::vector<double> limit_table_j(const Kernel& k, const std::vector<int>& two_j_list,
                                  const Config& eta0, double t) {
  int total = 0;
  for (int x : eta0) total += x;
  CTMCGenerator irw = irw_generator(k, total);
  std::vector<double> out;
  for (int two_j : two_j_list) {
    CTMCGenerator sep = sep2j_generator(k, two_j, total);
    out.push_back(tv_between(sep, t / two_j, irw, t, eta0));
  }
  return out;
}

std::vector<double> limit_table_m(const Kernel& k, const std::vector<int>& m_list,
                                  const Config& xi0, double t) {
  int total = 0;
  for (int x : xi0) total += x;
  CTMCGenerator irw = irw_generator(k, total, 2);
  std::vector<double> out;
  for (int m : m_list) {
    CTMCGenerator sip = sip_generator(k, m, total);
    out.push_back(tv_between(sip, t / m, irw, t, xi0));
  }
  return out;
}

std::pair<double, double> integrate_deterministic_flow(std::pair<double, double> x0,
                                                       double t, double dt) {
  long steps = std::lround(t / dt);
  double x1 = x0.first, x2 = x0.second;
  for (long s = 0; s < steps; ++s) {
    // Midpoint step of dx1/dt = -(x1 - x2), dx2/dt = (x1 - x2); the
    // difference obeys d' = -2d, so the half-step shrinks d by (1 - dt).
    double d_mid = (x1 - x2) * (1.0 - dt);
    x1 += -d_mid * dt;
    x2 += d_mid * dt;
  }
  return {x1, x2};
}

}  // namespace ipsd
