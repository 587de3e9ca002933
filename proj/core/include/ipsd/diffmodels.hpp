#ifndef IPSD_DIFFMODELS_HPP
#define IPSD_DIFFMODELS_HPP

#include "ipsd/lattice.hpp"
#include "ipsd/poly.hpp"

namespace ipsd {

// Momentum-exchange diffusion on site-level coordinates x_{i,a} (variable
// index i*m + a): sum over bonds {i,j} and level pairs (a,b) of
// p(i,j) (x_{i,a} d_{j,b} - x_{j,b} d_{i,a})^2, in expanded normal form.
DiffOperator bmp_operator(const Kernel& k, int levels);

// Energy diffusion in site coordinates z_i:
// sum_{bonds} p(i,j) [4 z_i z_j (d_i - d_j)^2 - 2m (z_i - z_j)(d_i - d_j)].
DiffOperator bep_operator(const Kernel& k, int m);

// Bulk BEP plus reservoir terms 2 T_i (m d_i + 2 z_i d_i^2) - 2 z_i d_i at
// boundary sites.
DiffOperator boundary_bep_operator(const Kernel& k, int m);

// First-order drift of the m -> infinity energy limit:
// sum_{bonds} p(i,j) (-2)(z_i - z_j)(d_i - d_j).
DiffOperator deterministic_energy_operator(const Kernel& k);

// Generator of the two-site deterministic flow -(x1 - x2)(d_1 - d_2).
DiffOperator deterministic_flow_operator();

// Single-site representation K^+ = x^2/2, K^- = d^2/2, K^0 = 1/4 + (x/2) d
// acting on one continuous variable, used for intertwining checks.
struct ContinuousLadder {
  DiffOperator plus, minus, zero;
};
ContinuousLadder bmp_site_ladder();

// Energy-coordinate representation K^+ = z/2, K^- = 2 z d^2 + m d,
// K^0 = z d + m/4.
ContinuousLadder bep_site_ladder(int m);

}  // namespace ipsd

#endif
