#ifndef IPSD_MODELS_HPP
#define IPSD_MODELS_HPP

#include <optional>

#include "ipsd/lattice.hpp"
#include "ipsd/statespace.hpp"

namespace ipsd {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingReservoirParam : ModelError { using ModelError::ModelError; };
struct MissingSinks : ModelError { using ModelError::ModelError; };
struct InvalidM : ModelError { using ModelError::ModelError; };

// Sparse rate matrix over an enumerated state space; the diagonal is implied
// by zero row sums. Immutable once built.
class CTMCGenerator {
 public:
  CTMCGenerator(StateSpace space, std::optional<int> conserved)
      : space_(std::move(space)),
        conserved_(conserved),
        transitions_(space_.size()) {}

  const StateSpace& space() const { return space_; }
  std::optional<int> conserved() const { return conserved_; }

  const std::vector<std::pair<std::size_t, Rational>>& transitions_from(std::size_t s) const {
    return transitions_[s];
  }

  void add_rate(std::size_t from, std::size_t to, const Rational& rate);
  void add_rate(const Config& from, const Config& to, const Rational& rate);

  Rational total_rate(std::size_t s) const;
  // Dense L with diagonal -sum of off-diagonals.
  RatMatrix dense() const;

 private:
  StateSpace space_;
  std::optional<int> conserved_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> transitions_;
};

// --- bulk particle models (slots = sites) ---

// Partial exclusion with at most 2j particles per site; rate for a move
// i->l is p(i,l) eta_i (2j - eta_l). sector: total particle number; if
// absent, the full product space {0..2j}^S is enumerated.
CTMCGenerator sep2j_generator(const Kernel& k, int two_j, std::optional<int> sector);

// Inclusion-type walkers (dual-BEP): move i->j at rate 2 xi_i (2 xi_j + m).
CTMCGenerator sip_generator(const Kernel& k, int m, int sector);

// Independent walkers: move i->l at rate p(i,l) eta_i.
CTMCGenerator irw_generator(const Kernel& k, int sector, const Rational& rate_scale = 1);

// Exclusion on the ladder graph S x {1..m}; slots are (site, level) pairs,
// slot index = site*m + level, occupancy 0/1.
CTMCGenerator ladder_sep_generator(const Kernel& k, int levels, std::optional<int> sector);

// Projection from ladder configurations to per-site counts.
Config ladder_projection(const Config& zeta, int n_sites, int levels);

// --- boundary-driven models ---

// Bulk 2j-SEP plus birth rate rho_i (2j - eta_i) and death rate
// (1 - rho_i) eta_i at boundary sites; full state space.
CTMCGenerator boundary_sep2j_generator(const Kernel& k, int two_j);

// Dual of the boundary-driven 2j-SEP: bulk 2j-SEP over sites plus absorption
// i -> i_e at rate xi_i; slots = sites then sinks, total conserved.
CTMCGenerator dual_absorbing_sep2j_generator(const Kernel& k, int two_j, int sector);

// Dual of the boundary-driven m-BEP: bulk SIP(m) plus absorption at rate
// 2 xi_i at boundary sites.
CTMCGenerator dual_absorbing_sip_generator(const Kernel& k, int m, int sector);

// --- instantaneous thermalization ---

enum class RedistributionKind { ContinuousEnergy, DiscreteParticles };

struct ThermalizationSpec {
  Kernel kernel;
  int m = 2;
  RedistributionKind kind = RedistributionKind::ContinuousEnergy;
};

ThermalizationSpec kmp_thermal_spec(const Kernel& k, int m);
ThermalizationSpec dual_kmp_thermal_spec(const Kernel& k, int m);

// Stationary law of the dual pair chain with k + l = N: probability that the
// first site holds k particles, k = 0..N. Derived from detailed balance of
// the pair-chain rates (k -> k+1 at rate 2(N-k)(2k+m), k -> k-1 at rate
// 2k(2(N-k)+m)); exact rationals.
std::vector<Rational> gamma_hat_law(int m, int N);

// E[eps^{2k}] / E^{2k} for eps distributed as the continuous bond-stationary
// redistribution law with parameter m: prod_{r=1..k} (2r-1)/(m+2r-1).
Rational gamma_even_moment_ratio(int m, int k);

// E[B^a (1-B)^b] for B ~ Beta(m/2, m/2): (m/2)_a (m/2)_b / (m)_{a+b}.
Rational beta_joint_moment(int m, int a, int b);

// The generator of the dual pair chain on {0..N} (occupation of the first
// site), used for exact stationarity checks of gamma_hat_law.
RatMatrix dual_pair_chain(int m, int N);

// --- deterministic two-site flow ---

// x1(t) = mean + halfdiff e^{-2t}, x2(t) = mean - halfdiff e^{-2t}.
std::pair<double, double> deterministic_flow(std::pair<double, double> x0, double t);

}  // namespace ipsd

#endif
