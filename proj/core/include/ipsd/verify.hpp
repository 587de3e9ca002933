#ifndef IPSD_VERIFY_HPP
#define IPSD_VERIFY_HPP

#include "ipsd/duality.hpp"
#include "ipsd/expm.hpp"
#include "ipsd/simulate.hpp"

namespace ipsd {

struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotLumpable : VerifyError { using VerifyError::VerifyError; };
struct SectorTooLarge : VerifyError { using VerifyError::VerifyError; };

// --- Monte Carlo comparisons ---

struct MCComparison {
  double lhs = 0.0, rhs = 0.0;
  double lhs_stderr = 0.0, rhs_stderr = 0.0;
  long n_samples = 0;
  double z_score = 0.0;
  bool pass = false;
  bool reran = false;  // a failed first pass was repeated with 4x samples
};

using Sampler = std::function<double(CounterRng&)>;

// Two-sided mean comparison at k_sigma combined standard errors. A failing
// first pass is rerun once with 4x samples on fresh streams before the
// verdict is final.
MCComparison mc_compare(const Sampler& lhs, const Sampler& rhs, long n,
                        std::uint64_t seed, double k_sigma = 3.0);

// E[D(eta_t, xi0)] vs E[D(eta0, xi_t)] by trajectory sampling on both sides.
MCComparison mc_duality_check(const RateView& primal, const RateView& dual,
                              const DualityFunction& D, const Config& eta0,
                              const Config& xi0, double t, long n, std::uint64_t seed);

// --- exact structural checks ---

// Exhaustive detailed-balance check; nullopt means pass, otherwise a witness
// state pair.
std::optional<std::pair<std::size_t, std::size_t>> detailed_balance_check(
    const CTMCGenerator& L, const std::vector<Rational>& mu);

// Lumpability of `fine` onto `coarse` under the state projection pi: for
// every fine state, the summed rate into each coarse class must equal the
// coarse rate from its own class. Exact; throws NotLumpable with a witness.
void lumping_check(const CTMCGenerator& fine, const CTMCGenerator& coarse,
                   const std::function<Config(const Config&)>& pi);

// --- absorption and stationary profiles ---

// Exact absorption data of an absorbing dual whose slots are sites then
// sinks. values[s] = E_s[prod_e param_e^{sink_e at absorption}] with
// param_e the reservoir parameter of boundary site e.
struct AbsorptionResult {
  std::vector<Rational> values;
};
AbsorptionResult absorption_solve(const Kernel& k, const CTMCGenerator& dual,
                                  std::size_t max_states = 10000);

// Distribution over absorbed states (indices into dual.space()) starting
// from state s0; zero for transient states.
std::vector<Rational> absorption_distribution(const CTMCGenerator& dual, int n_sites,
                                              std::size_t s0);

// Stationary E[eta_i] of the boundary-driven 2j-SEP via the one-particle
// absorbing dual: 2j * sum_e P_i(absorb at e) rho_e.
std::vector<Rational> stationary_profile_sep2j(const Kernel& k, int two_j);

// Stationary E[z_i] of the boundary-driven energy model with parameter m:
// m * sum_e P_i(absorb at e) T_e.
std::vector<Rational> stationary_profile_energy(const Kernel& k, int m);

// --- distribution tests ---

// Kolmogorov-Smirnov statistic of samples against an exact CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
// Critical value at significance alpha (0.01 or 0.05).
double ks_critical(long n, double alpha);

// Pearson chi-square statistic of counts against expected probabilities and
// the associated upper tail p-value.
double chi_square_statistic(const std::vector<long>& counts, const std::vector<double>& probs);
double chi_square_pvalue(double stat, int dof);

// Regularized incomplete beta I_x(a, b), for redistribution-law CDFs.
double incomplete_beta(double a, double b, double x);

// CDF of the bond redistribution fraction B ~ Beta(m/2, m/2); the energy
// share is eps = E (2B - 1).
double redistribution_cdf(int m, double b);

// Max-abs entry of gamma_hat(m, N)^T L for the pair chain; exact, zero iff
// the detailed-balance law is stationary.
Rational gamma_hat_stationarity_residual(int m, int N);

// Thermalized duality on one bond, two sites: residual polynomial of
// (T - id) D(., (xi_i, xi_j)) against the discrete redistribution
// (T_hat - id) applied to the dual pair; exact in (z_i, z_j), zero iff the
// thermalized processes are dual.
Polynomial thermal_duality_residual(int m, int xi_i, int xi_j);

// --- limit tables ---

// Total-variation distance between the 2j-SEP law at time t/(2j) and the
// independent-walker law at time t, per listed 2j; exact via the matrix
// exponential oracle on the shared particle-number sector.
std::vector<double> limit_table_j(const Kernel& k, const std::vector<int>& two_j_list,
                                  const Config& eta0, double t);

// Same for SIP(m) at time t/m against rate-2 independent walkers at time t.
std::vector<double> limit_table_m(const Kernel& k, const std::vector<int>& m_list,
                                  const Config& xi0, double t);

// Forward integration of the two-site deterministic energy flow with step
// dt, for dt-gated comparison against the closed form.
std::pair<double, double> integrate_deterministic_flow(std::pair<double, double> x0,
                                                       double t, double dt);

}  // namespace ipsd

#endif
