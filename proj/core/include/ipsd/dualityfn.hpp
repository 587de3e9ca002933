#ifndef IPSD_DUALITYFN_HPP
#define IPSD_DUALITYFN_HPP

#include <functional>

#include "ipsd/lattice.hpp"
#include "ipsd/poly.hpp"
#include "ipsd/statespace.hpp"

namespace ipsd {

struct UnsupportedModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Factorized duality function, evaluated exactly per configuration pair.
using DualityFunction = std::function<Rational(const Config&, const Config&)>;

// Classical exclusion self-duality: prod_{i: xi_i=1} eta_i.
DualityFunction sep_duality();

// 2j-SEP self-duality: prod_i C(eta_i, xi_i) / C(2j, xi_i).
DualityFunction sep2j_duality(int two_j);

// SIP(m) self-duality per site: eta!/(eta-xi)! / (2^xi (m/2)_xi); at m=1
// this is eta! / ((eta-xi)! (2 xi - 1)!!).
DualityFunction sip_duality(int m);

// Independent walkers: prod_i eta_i!/(eta_i - xi_i)!.
DualityFunction irw_duality();

// Boundary-driven SEP2j vs absorbing dual. The dual configuration runs over
// sites then sinks; sink particles contribute rho_i^{xi_sink}.
DualityFunction boundary_sep2j_duality(const Kernel& k, int two_j);

// Single-site factors, exposed for closed-form cross-checks.
Rational sep2j_site_duality(int two_j, int eta, int xi);
Rational sip_site_duality(int m, int eta, int xi);

// Build the dense matrix D(eta, xi) over enumerated spaces.
RatMatrix duality_matrix(const DualityFunction& D, const StateSpace& primal,
                         const StateSpace& dual);

enum class ContinuousModel { BMP, BEP, DetFlow, IRWDual };

// Duality polynomial in the continuous coordinates for a fixed dual
// configuration xi over sites:
//   BMP:  prod_i x_i^{2 xi_i} / (2 xi_i - 1)!!   (variables x_i, m=1 levels)
//   BEP:  prod_i z_i^{xi_i} / (2^{xi_i} (m/2)_{xi_i})
//   DetFlow / IRWDual: prod_i x_i^{xi_i}
Polynomial duality_polynomial(ContinuousModel model, const Config& xi, int m = 1);

// Boundary-driven BEP(m) vs absorbing SIP dual: bulk factor times
// T_i^{xi_sink} on sinks; xi runs over sites then sinks.
Polynomial boundary_bep_duality_polynomial(const Kernel& k, int m, const Config& xi);

}  // namespace ipsd

#endif
