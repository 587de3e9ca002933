#ifndef IPSD_ALGEBRA_HPP
#define IPSD_ALGEBRA_HPP

#include <string>

#include "ipsd/matrix.hpp"

namespace ipsd {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSpin : AlgebraError { using AlgebraError::AlgebraError; };
struct CutoffTooSmall : AlgebraError { using AlgebraError::AlgebraError; };
struct NotNilpotentOrTriangular : AlgebraError { using AlgebraError::AlgebraError; };

enum class RepKind { SU2, SU11, Heisenberg };

// Raising/lowering/diagonal ladder operators in one representation.
// For truncated infinite representations, exact_dim is the number of leading
// basis vectors on which operator products are free of truncation loss;
// exact checks downstream must stay inside conserved sectors below it.
struct OperatorTriple {
  RatMatrix plus, minus, zero;
  std::size_t dim = 0;
  RepKind kind = RepKind::SU2;
  std::size_t exact_dim = 0;
};

// Spin-j ladder operators on the (2j+1)-dimensional space, j given as 2j.
// J+|n> = (2j-n)|n+1>, J-|n> = n|n-1>, J0|n> = (n-j)|n>.
OperatorTriple su2_rep(int two_j);

// Discrete-series SU(1,1) ladder operators with parameter m, truncated:
// K+|n> = (m/2+n)|n+1>, K-|n> = n|n-1>, K0|n> = (m/4+n)|n>.
OperatorTriple su11_rep(int m, std::size_t cutoff);

// a+|n> = |n+1>, a-|n> = n|n-1>; zero component is the identity.
OperatorTriple heisenberg_rep(std::size_t cutoff);

// Exact matrix exponential of a nilpotent (strictly triangular) matrix via
// the terminating power series.
RatMatrix exp_raising(const RatMatrix& a);

// Embed a single-site operator at `site` in an n_sites Kronecker product,
// identities elsewhere. Basis is lexicographic with the last site fastest.
RatMatrix tensor_site_operator(const RatMatrix& op, int site, int n_sites);

// Sum over sites of the embedded operator (total ladder operator).
RatMatrix total_operator(const RatMatrix& op, int n_sites);

}  // namespace ipsd

#endif
