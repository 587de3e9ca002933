#ifndef IPSD_SIMULATE_HPP
#define IPSD_SIMULATE_HPP

#include <functional>

#include "ipsd/models.hpp"
#include "ipsd/rng.hpp"

namespace ipsd {

struct SimulateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAbsorbable : SimulateError { using SimulateError::SimulateError; };

// Local move: target configuration and jump rate. Rate views are built
// directly from the kernel and model parameters, independently of the
// enumerated-generator path, so simulation cross-checks the matrices.
struct Move {
  Config target;
  double rate;
};
using RateView = std::function<std::vector<Move>(const Config&)>;

RateView sep2j_rate_view(const Kernel& k, int two_j);
RateView sip_rate_view(const Kernel& k, int m);
RateView irw_rate_view(const Kernel& k, double rate_scale = 1.0);
// Bulk moves plus boundary birth/death; configurations over sites only.
RateView boundary_sep2j_rate_view(const Kernel& k, int two_j);
// Duals with absorption; configurations carry sink slots after the sites.
RateView dual_absorbing_sep2j_rate_view(const Kernel& k, int two_j);
RateView dual_absorbing_sip_rate_view(const Kernel& k, int m);

struct TrajectoryResult {
  Config state;
  double time = 0.0;
  long n_events = 0;
};

// Continuous-time jump chain from `init` until time `t_end` (or absorption
// when no move has positive rate).
TrajectoryResult gillespie(const RateView& view, const Config& init, double t_end,
                           CounterRng& rng, long max_events = 50'000'000);

// Runs an absorbing dual until every particle sits in a sink slot. Throws
// NotAbsorbable if the kernel has no boundary sites.
Config run_absorbing_dual(const Kernel& k, const RateView& view, const Config& init,
                          CounterRng& rng, long max_events = 50'000'000);

// --- diffusions ---

// Momentum-exchange dynamics on site coordinates x[site*levels + level]:
// per time step and bond, each level pair is rotated by a centered Gaussian
// angle with variance 2 p(i,l) dt. Each rotation is an isometry, so the
// total energy sum x^2 is conserved exactly up to roundoff.
std::vector<double> simulate_bmp(const Kernel& k, int levels, std::vector<double> x,
                                 double t_end, double dt, CounterRng& rng);

// Energy diffusion with parameter m, simulated through a random orthogonal
// lift: each energy z_i becomes m coordinates drawn on the sphere of radius
// sqrt(z_i), evolved as the momentum dynamics, then projected back.
std::vector<double> simulate_bep(const Kernel& k, int m, const std::vector<double>& z,
                                 double t_end, double dt, CounterRng& rng);

// --- instantaneous thermalization ---

// Continuous energies: each bond with p(i,l) > 0 rings at rate p(i,l); on a
// ring the bond energy E = z_i + z_l is redistributed as (BE, (1-B)E) with
// B ~ Beta(m/2, m/2).
std::vector<double> simulate_thermalization(const ThermalizationSpec& spec,
                                            std::vector<double> z, double t_end,
                                            CounterRng& rng);

// Discrete particles: on a ring the bond total N is redistributed by the
// stationary pair law of the dual chain.
Config simulate_dual_thermalization(const ThermalizationSpec& spec, Config eta,
                                    double t_end, CounterRng& rng);

// --- stationary product measures ---

// Independent Binomial(two_j, rho_i) occupations.
Config sample_binomial_product(int two_j, const std::vector<double>& rho, CounterRng& rng);

// Independent Poisson(lambda_i) occupations.
Config sample_poisson_product(const std::vector<double>& lambda, CounterRng& rng);

// Independent negative-binomial-type occupations with site weight
// w(xi) = lambda^xi (m/2)_xi / xi!; inverse CDF with tail below 2^-40.
Config sample_sip_product(int m, const std::vector<double>& lambda, CounterRng& rng);

// Independent scaled chi-squared energies: z_i = T_i * ChiSq(m), the
// reservoir equilibrium of the energy models (mean m T_i).
std::vector<double> sample_chi_squared_product(int m, const std::vector<double>& T,
                                               CounterRng& rng);

}  // namespace ipsd

#endif
