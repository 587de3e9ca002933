#ifndef IPSD_RNG_HPP
#define IPSD_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace ipsd {

// Counter-based stream: each draw encrypts (counter, stream) under the seed
// key (Philox-style 2x64 bijection, 10 rounds). Streams with distinct
// (seed, stream) pairs are independent; trajectories are reproducible from
// the pair alone.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(seed), stream_(stream), counter_(0), have_spare_(false), spare_block_(0) {}

  std::uint64_t next_u64() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_block_;
    }
    std::uint64_t c0 = counter_++, c1 = stream_, k = key_;
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi, lo;
      mulhilo(kMultiplier, c0, hi, lo);
      std::uint64_t new0 = hi ^ k ^ c1;
      c1 = lo;
      c0 = new0;
      k += kWeyl;
    }
    spare_block_ = c1;
    have_spare_ = true;
    return c0;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

  double normal(double mean = 0.0, double stddev = 1.0) {
    if (have_normal_) {
      have_normal_ = false;
      return mean + stddev * spare_normal_;
    }
    double u1, u2;
    do { u1 = uniform(); } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_normal_ = r * std::sin(2.0 * M_PI * u2);
    have_normal_ = true;
    return mean + stddev * r * std::cos(2.0 * M_PI * u2);
  }

  // Marsaglia-Tsang; alpha > 0.
  double gamma(double alpha) {
    if (alpha < 1.0) {
      double u;
      do { u = uniform(); } while (u <= 0.0);
      return gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
    }
    double d = alpha - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double beta(double a, double b) {
    double x = gamma(a);
    double y = gamma(b);
    return x / (x + y);
  }

  double chi_squared(int dof) { return 2.0 * gamma(dof / 2.0); }

  int binomial(int n, double p) {
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (uniform() < p) ++k;
    return k;
  }

  int poisson(double mean) {
    double l = std::exp(-mean), p = 1.0;
    int k = 0;
    do {
      ++k;
      p *= uniform();
    } while (p > l);
    return k - 1;
  }

  // Index sampled proportionally to the weights.
  std::size_t discrete(const std::vector<double>& weights, double total) {
    double u = uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return weights.size() - 1;
  }

 private:
  static constexpr std::uint64_t kMultiplier = 0xD2B74407B1CE6E93ULL;
  static constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;

  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
  }

  std::uint64_t key_, stream_, counter_;
  bool have_spare_;
  std::uint64_t spare_block_;
  bool have_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace ipsd

#endif
