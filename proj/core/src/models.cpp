#include "ipsd/models.hpp"

#include <cmath>
#include <functional>

namespace ipsd {

void CTMCGenerator::add_rate(std::size_t from, std::size_t to, const Rational& rate) {
  if (rate < 0) throw ModelError("negative transition rate");
  if (rate == 0) return;
  if (from == to) throw ModelError("diagonal rate not allowed");
  for (auto& [t, r] : transitions_[from])
    if (t == to) { r += rate; return; }
  transitions_[from].emplace_back(to, rate);
}

void CTMCGenerator::add_rate(const Config& from, const Config& to, const Rational& rate) {
  auto f = space_.index_of(from), t = space_.index_of(to);
  if (!f || !t) throw ModelError("transition endpoint outside state space");
  add_rate(*f, *t, rate);
}

Rational CTMCGenerator::total_rate(std::size_t s) const {
  Rational sum = 0;
  for (const auto& [t, r] : transitions_[s]) sum += r;
  return sum;
}

RatMatrix CTMCGenerator::dense() const {
  RatMatrix L(space_.size(), space_.size());
  for (std::size_t s = 0; s < space_.size(); ++s) {
    for (const auto& [t, r] : transitions_[s]) {
      L(s, t) += r;
      L(s, s) -= r;
    }
  }
  return L;
}

namespace {

StateSpace bulk_space(int n_sites, int cap, std::optional<int> sector) {
  std::vector<int> caps(n_sites, cap);
  if (sector) return StateSpace::sector(caps, *sector);
  if (cap < 0) throw ModelError("unbounded occupation requires a sector");
  return StateSpace::full(caps);
}

// Generic bulk hopping process: rate(i->l) = p(i,l) * factor(eta_i, eta_l).
template <typename F>
void add_hops(CTMCGenerator& g, const Kernel& k, F&& factor) {
  const StateSpace& sp = g.space();
  for (std::size_t s = 0; s < sp.size(); ++s) {
    const Config& eta = sp.state(s);
    for (int i = 0; i < k.n_sites(); ++i) {
      if (eta[i] == 0) continue;
      for (int l : k.neighbors(i)) {
        Rational f = factor(eta[i], eta[l]);
        if (f == 0) continue;
        Config to = eta;
        to[i] -= 1;
        to[l] += 1;
        auto t = sp.index_of(to);
        if (!t) continue;  // capped full space: blocked move
        g.add_rate(s, *t, k.rate(i, l) * f);
      }
    }
  }
}

}  // namespace

CTMCGenerator sep2j_generator(const Kernel& k, int two_j, std::optional<int> sector) {
  if (sector && *sector > two_j * k.n_sites()) throw EmptySector("sector exceeds capacity");
  CTMCGenerator g(bulk_space(k.n_sites(), two_j, sector), sector);
  add_hops(g, k, [two_j](int ni, int nl) { return Rational(ni) * (two_j - nl); });
  return g;
}

CTMCGenerator sip_generator(const Kernel& k, int m, int sector) {
  CTMCGenerator g(bulk_space(k.n_sites(), -1, sector), sector);
  add_hops(g, k, [m](int ni, int nl) { return Rational(2 * ni) * (2 * nl + m); });
  return g;
}

CTMCGenerator irw_generator(const Kernel& k, int sector, const Rational& rate_scale) {
  CTMCGenerator g(bulk_space(k.n_sites(), -1, sector), sector);
  add_hops(g, k, [&rate_scale](int ni, int) { return rate_scale * ni; });
  return g;
}

CTMCGenerator ladder_sep_generator(const Kernel& k, int levels, std::optional<int> sector) {
  int n = k.n_sites();
  std::vector<int> caps(static_cast<std::size_t>(n) * levels, 1);
  StateSpace sp = sector ? StateSpace::sector(caps, *sector) : StateSpace::full(caps);
  CTMCGenerator g(std::move(sp), sector);
  const StateSpace& space = g.space();
  for (std::size_t s = 0; s < space.size(); ++s) {
    const Config& zeta = space.state(s);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < levels; ++a) {
        if (!zeta[i * levels + a]) continue;
        // p(i,i) = 0, so there are no intra-site level exchanges.
        for (int l : k.neighbors(i))
          for (int b = 0; b < levels; ++b) {
            if (zeta[l * levels + b]) continue;
            Config to = zeta;
            to[i * levels + a] = 0;
            to[l * levels + b] = 1;
            g.add_rate(s, *space.index_of(to), k.rate(i, l));
          }
      }
  }
  return g;
}

Config ladder_projection(const Config& zeta, int n_sites, int levels) {
  Config eta(n_sites, 0);
  for (int i = 0; i < n_sites; ++i)
    for (int a = 0; a < levels; ++a) eta[i] += zeta[i * levels + a];
  return eta;
}

CTMCGenerator boundary_sep2j_generator(const Kernel& k, int two_j) {
  if (k.boundary().empty()) throw MissingReservoirParam("kernel has no boundary sites");
  CTMCGenerator g(bulk_space(k.n_sites(), two_j, std::nullopt), std::nullopt);
  add_hops(g, k, [two_j](int ni, int nl) { return Rational(ni) * (two_j - nl); });
  const StateSpace& sp = g.space();
  for (std::size_t s = 0; s < sp.size(); ++s) {
    const Config& eta = sp.state(s);
    for (int i : k.boundary()) {
      const Rational& rho = k.reservoir_param(i);
      if (eta[i] < two_j) {
        Config to = eta;
        to[i] += 1;
        g.add_rate(s, *sp.index_of(to), rho * (two_j - eta[i]));
      }
      if (eta[i] > 0) {
        Config to = eta;
        to[i] -= 1;
        g.add_rate(s, *sp.index_of(to), (1 - rho) * eta[i]);
      }
    }
  }
  return g;
}

namespace {

CTMCGenerator dual_absorbing_generator(const Kernel& k, int site_cap, int sector,
                                       std::function<Rational(int, int)> hop_factor,
                                       std::function<Rational(int)> absorb_rate) {
  if (k.boundary().empty()) throw MissingSinks("kernel has no sink sites");
  int n = k.n_sites();
  std::vector<int> caps(n, site_cap);
  caps.resize(n + k.n_sinks(), -1);  // sink occupancy unbounded
  CTMCGenerator g(StateSpace::sector(caps, sector), sector);
  const StateSpace& sp = g.space();
  for (std::size_t s = 0; s < sp.size(); ++s) {
    const Config& xi = sp.state(s);
    for (int i = 0; i < n; ++i) {
      if (xi[i] == 0) continue;
      for (int l : k.neighbors(i)) {
        Rational f = hop_factor(xi[i], xi[l]);
        if (f == 0) continue;
        Config to = xi;
        to[i] -= 1;
        to[l] += 1;
        g.add_rate(s, *sp.index_of(to), k.rate(i, l) * f);
      }
      if (k.is_boundary(i)) {
        Config to = xi;
        to[i] -= 1;
        to[k.sink_of(i)] += 1;
        g.add_rate(s, *sp.index_of(to), absorb_rate(xi[i]));
      }
    }
  }
  return g;
}

}  // namespace

CTMCGenerator dual_absorbing_sep2j_generator(const Kernel& k, int two_j, int sector) {
  return dual_absorbing_generator(
      k, two_j, sector,
      [two_j](int ni, int nl) { return Rational(ni) * (two_j - nl); },
      [](int ni) { return Rational(ni); });
}

CTMCGenerator dual_absorbing_sip_generator(const Kernel& k, int m, int sector) {
  return dual_absorbing_generator(
      k, -1, sector,
      [m](int ni, int nl) { return Rational(2 * ni) * (2 * nl + m); },
      [](int ni) { return Rational(2 * ni); });
}

ThermalizationSpec kmp_thermal_spec(const Kernel& k, int m) {
  if (m < 1) throw InvalidM("m must be >= 1");
  return ThermalizationSpec{k, m, RedistributionKind::ContinuousEnergy};
}

ThermalizationSpec dual_kmp_thermal_spec(const Kernel& k, int m) {
  if (m < 1) throw InvalidM("m must be >= 1");
  return ThermalizationSpec{k, m, RedistributionKind::DiscreteParticles};
}

std::vector<Rational> gamma_hat_law(int m, int N) {
  if (m < 1) throw InvalidM("m must be >= 1");
  std::vector<Rational> mu(N + 1);
  mu[0] = 1;
  for (int k = 0; k + 1 <= N; ++k) {
    // detailed balance: mu(k+1)/mu(k) = rate(k->k+1)/rate(k+1->k)
    Rational up = Rational(2 * (N - k)) * (2 * k + m);
    Rational down = Rational(2 * (k + 1)) * (2 * (N - k - 1) + m);
    mu[k + 1] = mu[k] * up / down;
  }
  Rational z = 0;
  for (const auto& p : mu) z += p;
  for (auto& p : mu) p /= z;
  return mu;
}

Rational gamma_even_moment_ratio(int m, int k) {
  Rational r = 1;
  for (int s = 1; s <= k; ++s) r *= Rational(2 * s - 1, m + 2 * s - 1);
  return r;
}

Rational beta_joint_moment(int m, int a, int b) {
  Rational half_m(m, 2);
  return rising_factorial(half_m, a) * rising_factorial(half_m, b) /
         rising_factorial(Rational(m), a + b);
}

RatMatrix dual_pair_chain(int m, int N) {
  RatMatrix L(N + 1, N + 1);
  for (int k = 0; k <= N; ++k) {
    if (k < N) {
      Rational up = Rational(2 * (N - k)) * (2 * k + m);
      L(k, k + 1) = up;
      L(k, k) -= up;
    }
    if (k > 0) {
      Rational down = Rational(2 * k) * (2 * (N - k) + m);
      L(k, k - 1) = down;
      L(k, k) -= down;
    }
  }
  return L;
}

std::pair<double, double> deterministic_flow(std::pair<double, double> x0, double t) {
  double mean = (x0.first + x0.second) / 2;
  double halfdiff = (x0.first - x0.second) / 2;
  double d = halfdiff * std::exp(-2.0 * t);
  return {mean + d, mean - d};
}

}  // namespace ipsd
