#include "ipsd/simulate.hpp"

#include <algorithm>
#include <cmath>

namespace ipsd {

namespace {

double to_double(const Rational& r) { return static_cast<double>(r); }

// Ordered site pairs (i, l) with p(i, l) > 0.
std::vector<std::pair<int, int>> ordered_bonds(const Kernel& k) {
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i < k.n_sites(); ++i)
    for (int l : k.neighbors(i)) bonds.emplace_back(i, l);
  return bonds;
}

std::vector<std::tuple<int, int, double>> unordered_bonds(const Kernel& k) {
  std::vector<std::tuple<int, int, double>> bonds;
  for (int i = 0; i < k.n_sites(); ++i)
    for (int l : k.neighbors(i))
      if (i < l) bonds.emplace_back(i, l, to_double(k.rate(i, l)));
  return bonds;
}

}  // namespace

RateView sep2j_rate_view(const Kernel& k, int two_j) {
  auto bonds = ordered_bonds(k);
  return [bonds, &k, two_j](const Config& c) {
    std::vector<Move> moves;
    for (const auto& [i, l] : bonds) {
      if (c[i] == 0 || c[l] == two_j) continue;
      double rate = to_double(k.rate(i, l)) * c[i] * (two_j - c[l]);
      Config t = c;
      --t[i];
      ++t[l];
      moves.push_back({std::move(t), rate});
    }
    return moves;
  };
}

RateView sip_rate_view(const Kernel& k, int m) {
  auto bonds = ordered_bonds(k);
  return [bonds, &k, m](const Config& c) {
    std::vector<Move> moves;
    for (const auto& [i, l] : bonds) {
      if (c[i] == 0) continue;
      double rate = to_double(k.rate(i, l)) * 2.0 * c[i] * (2.0 * c[l] + m);
      Config t = c;
      --t[i];
      ++t[l];
      moves.push_back({std::move(t), rate});
    }
    return moves;
  };
}

RateView irw_rate_view(const Kernel& k, double rate_scale) {
  auto bonds = ordered_bonds(k);
  return [bonds, &k, rate_scale](const Config& c) {
    std::vector<Move> moves;
    for (const auto& [i, l] : bonds) {
      if (c[i] == 0) continue;
      double rate = rate_scale * to_double(k.rate(i, l)) * c[i];
      Config t = c;
      --t[i];
      ++t[l];
      moves.push_back({std::move(t), rate});
    }
    return moves;
  };
}

RateView boundary_sep2j_rate_view(const Kernel& k, int two_j) {
  auto bulk = sep2j_rate_view(k, two_j);
  return [bulk, &k, two_j](const Config& c) {
    std::vector<Move> moves = bulk(c);
    for (int i : k.boundary()) {
      double rho = to_double(k.reservoir_param(i));
      if (c[i] < two_j) {
        Config t = c;
        ++t[i];
        moves.push_back({std::move(t), rho * (two_j - c[i])});
      }
      if (c[i] > 0) {
        Config t = c;
        --t[i];
        moves.push_back({std::move(t), (1.0 - rho) * c[i]});
      }
    }
    return moves;
  };
}

namespace {

RateView absorbing_view(const Kernel& k, RateView bulk_site_view,
                        std::function<double(int)> absorb_rate) {
  int n = k.n_sites();
  return [bulk_site_view = std::move(bulk_site_view), absorb_rate = std::move(absorb_rate),
          &k, n](const Config& c) {
    Config sites(c.begin(), c.begin() + n);
    std::vector<Move> moves;
    for (Move& m : bulk_site_view(sites)) {
      Config t = c;
      std::copy(m.target.begin(), m.target.end(), t.begin());
      moves.push_back({std::move(t), m.rate});
    }
    for (int i : k.boundary()) {
      if (c[i] == 0) continue;
      Config t = c;
      --t[i];
      ++t[k.sink_of(i)];
      moves.push_back({std::move(t), absorb_rate(i) * c[i]});
    }
    return moves;
  };
}

}  // namespace

RateView dual_absorbing_sep2j_rate_view(const Kernel& k, int two_j) {
  return absorbing_view(k, sep2j_rate_view(k, two_j), [](int) { return 1.0; });
}

RateView dual_absorbing_sip_rate_view(const Kernel& k, int m) {
  return absorbing_view(k, sip_rate_view(k, m), [](int) { return 2.0; });
}

TrajectoryResult gillespie(const RateView& view, const Config& init, double t_end,
                           CounterRng& rng, long max_events) {
  TrajectoryResult res;
  res.state = init;
  std::vector<double> weights;
  while (res.n_events < max_events) {
    std::vector<Move> moves = view(res.state);
    double total = 0.0;
    weights.clear();
    for (const Move& m : moves) {
      weights.push_back(m.rate);
      total += m.rate;
    }
    if (total <= 0.0) {
      res.time = t_end;
      return res;
    }
    double wait = rng.exponential(total);
    if (res.time + wait >= t_end) {
      res.time = t_end;
      return res;
    }
    res.time += wait;
    res.state = std::move(moves[rng.discrete(weights, total)].target);
    ++res.n_events;
  }
  throw SimulateError("event budget exhausted before t_end");
}

Config run_absorbing_dual(const Kernel& k, const RateView& view, const Config& init,
                          CounterRng& rng, long max_events) {
  if (k.boundary().empty()) throw NotAbsorbable("kernel has no boundary sites");
  int n = k.n_sites();
  Config state = init;
  std::vector<double> weights;
  for (long ev = 0; ev < max_events; ++ev) {
    bool done = std::all_of(state.begin(), state.begin() + n, [](int x) { return x == 0; });
    if (done) return state;
    std::vector<Move> moves = view(state);
    double total = 0.0;
    weights.clear();
    for (const Move& m : moves) {
      weights.push_back(m.rate);
      total += m.rate;
    }
    if (total <= 0.0) throw NotAbsorbable("stuck in a transient state with no moves");
    state = std::move(moves[rng.discrete(weights, total)].target);
  }
  throw SimulateError("event budget exhausted before absorption");
}

std::vector<double> simulate_bmp(const Kernel& k, int levels, std::vector<double> x,
                                 double t_end, double dt, CounterRng& rng) {
  auto bonds = unordered_bonds(k);
  long n_steps = std::lround(t_end / dt);
  for (long step = 0; step < n_steps; ++step) {
    for (const auto& [i, l, p] : bonds) {
      double sd = std::sqrt(2.0 * p * dt);
      for (int a = 0; a < levels; ++a)
        for (int b = 0; b < levels; ++b) {
          double theta = rng.normal(0.0, sd);
          double c = std::cos(theta), s = std::sin(theta);
          double& u = x[static_cast<std::size_t>(i) * levels + a];
          double& v = x[static_cast<std::size_t>(l) * levels + b];
          double nu = c * u - s * v;
          double nv = s * u + c * v;
          u = nu;
          v = nv;
        }
    }
  }
  return x;
}

std::vector<double> simulate_bep(const Kernel& k, int m, const std::vector<double>& z,
                                 double t_end, double dt, CounterRng& rng) {
  std::size_t n = z.size();
  std::vector<double> x(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (int a = 0; a < m; ++a) {
      double g = rng.normal();
      x[i * m + a] = g;
      norm2 += g * g;
    }
    double scale = norm2 > 0.0 ? std::sqrt(z[i] / norm2) : 0.0;
    for (int a = 0; a < m; ++a) x[i * m + a] *= scale;
  }
  x = simulate_bmp(k, m, std::move(x), t_end, dt, rng);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a) out[i] += x[i * m + a] * x[i * m + a];
  return out;
}

std::vector<double> simulate_thermalization(const ThermalizationSpec& spec,
                                            std::vector<double> z, double t_end,
                                            CounterRng& rng) {
  auto bonds = unordered_bonds(spec.kernel);
  double total = 0.0;
  std::vector<double> weights;
  for (const auto& [i, l, p] : bonds) {
    weights.push_back(p);
    total += p;
  }
  double half_m = spec.m / 2.0;
  double t = 0.0;
  for (;;) {
    t += rng.exponential(total);
    if (t >= t_end) return z;
    const auto& [i, l, p] = bonds[rng.discrete(weights, total)];
    double e = z[i] + z[l];
    double b = rng.beta(half_m, half_m);
    z[i] = b * e;
    z[l] = (1.0 - b) * e;
  }
}

Config simulate_dual_thermalization(const ThermalizationSpec& spec, Config eta,
                                    double t_end, CounterRng& rng) {
  auto bonds = unordered_bonds(spec.kernel);
  double total = 0.0;
  std::vector<double> weights;
  for (const auto& [i, l, p] : bonds) {
    weights.push_back(p);
    total += p;
  }
  double t = 0.0;
  for (;;) {
    t += rng.exponential(total);
    if (t >= t_end) return eta;
    const auto& [i, l, p] = bonds[rng.discrete(weights, total)];
    int n_bond = eta[i] + eta[l];
    std::vector<Rational> law = gamma_hat_law(spec.m, n_bond);
    std::vector<double> w(law.size());
    for (std::size_t kk = 0; kk < law.size(); ++kk) w[kk] = static_cast<double>(law[kk]);
    int k_new = static_cast<int>(rng.discrete(w, 1.0));
    eta[i] = k_new;
    eta[l] = n_bond - k_new;
  }
}

Config sample_binomial_product(int two_j, const std::vector<double>& rho, CounterRng& rng) {
  Config c(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) c[i] = rng.binomial(two_j, rho[i]);
  return c;
}

Config sample_poisson_product(const std::vector<double>& lambda, CounterRng& rng) {
  Config c(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) c[i] = rng.poisson(lambda[i]);
  return c;
}

Config sample_sip_product(int m, const std::vector<double>& lambda, CounterRng& rng) {
  Config c(lambda.size());
  const double tail = std::ldexp(1.0, -40);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    // Unnormalized weights w(xi) = (2 lambda)^xi (m/2)_xi / xi!; at m=1 this
    // is the (2 xi - 1)!! lambda^xi / xi! marginal. Accumulate the prefix
    // until the remaining mass bound falls below the tail cutoff.
    std::vector<double> w{1.0};
    double sum = 1.0;
    for (int xi = 1;; ++xi) {
      double next = w.back() * 2.0 * lambda[i] * (m / 2.0 + xi - 1) / xi;
      w.push_back(next);
      sum += next;
      // Ratio of consecutive weights approaches 2 lambda; geometric bound.
      double ratio = 2.0 * lambda[i] * (m / 2.0 + xi) / (xi + 1);
      if (ratio < 1.0 && next * ratio / (1.0 - ratio) < tail * sum) break;
      if (xi > 10000) throw SimulateError("sip product weight series diverges (lambda too large)");
    }
    c[i] = static_cast<int>(rng.discrete(w, sum));
  }
  return c;
}

std::vector<double> sample_chi_squared_product(int m, const std::vector<double>& T,
                                               CounterRng& rng) {
  std::vector<double> z(T.size());
  for (std::size_t i = 0; i < T.size(); ++i) z[i] = T[i] * rng.chi_squared(m);
  return z;
}

}  // namespace ipsd
