#ifndef IPSD_DUALITY_HPP
#define IPSD_DUALITY_HPP

#include "ipsd/algebra.hpp"
#include "ipsd/diffmodels.hpp"
#include "ipsd/dualityfn.hpp"
#include "ipsd/models.hpp"

namespace ipsd {

struct DualityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotReversible : DualityError { using DualityError::DualityError; };
struct NotASymmetry : DualityError { using DualityError::DualityError; };
struct NotAConjugation : DualityError { using DualityError::DualityError; };

// Diagonal conjugation matrix built from a measure mu with Q L Q^{-1} = L^T.
struct ConjugationQ {
  std::vector<Rational> diag;
  RatMatrix matrix() const;
  RatMatrix inverse_matrix() const;
};

// Verifies detailed balance of mu w.r.t. L exhaustively, then returns the
// diagonal Q. Throws NotReversible naming a witness pair otherwise.
ConjugationQ q_from_reversible_measure(const CTMCGenerator& L,
                                       const std::vector<Rational>& mu);

enum class TheoremSide {
  SymmetryOfL,          // D = S Q^{-1}
  SymmetryOfTranspose,  // D = Q^{-1} S
};

// Converts a symmetry into a self-duality matrix (checks the hypotheses).
RatMatrix duality_from_symmetry(const RatMatrix& S, const ConjugationQ& Q,
                                const RatMatrix& L, TheoremSide side);

// Converts a self-duality matrix into a symmetry S = D Q; verifies [S,L]=0.
RatMatrix symmetry_from_duality(const RatMatrix& D, const ConjugationQ& Q,
                                const RatMatrix& L);

// Exact residual of L D - D L_dual^T; empty witness value means pass.
struct Residual {
  bool zero = true;
  RatMatrix::Witness witness;
};
Residual verify_duality(const RatMatrix& L, const RatMatrix& L_dual, const RatMatrix& D);
inline Residual verify_selfduality(const RatMatrix& L, const RatMatrix& D) {
  return verify_duality(L, L, D);
}

// Self-duality of a sector-block-diagonal generator: checks
// L_A D = D L_B^T for the given row/column sector generators with D from a
// closed form.
Residual verify_selfduality_sectors(const CTMCGenerator& LA, const CTMCGenerator& LB,
                                    const DualityFunction& D);

// Duality of a diffusion generator against a jump dual: for every dual state
// xi, compares L applied to D(.,xi) with sum_xi' L_dual(xi,xi') D(.,xi') as
// exact polynomials. D_of maps a dual configuration to its polynomial.
Residual verify_duality_diffusion(const DiffOperator& L, const CTMCGenerator& L_dual,
                                  const std::function<Polynomial(const Config&)>& D_of);

// Conjugacy check of Definition-style pairs: A C = C B and C~ A = B C~.
struct ConjugacyReport {
  Residual forward;   // A C - C B
  Residual backward;  // C~ A - B C~
};
ConjugacyReport conjugacy_pair_check(const RatMatrix& A, const RatMatrix& B,
                                     const RatMatrix& C, const RatMatrix& Ctilde);

// Intertwining K^a C = C Kappa^a for a in {+,-,0}: K acts on the continuous
// variable of the family C(.,xi), Kappa is the discrete triple. C is given
// for xi = 0..n_family-1; identities are checked for xi up to
// n_family-2 (the raising side needs C(.,xi+1)).
struct IntertwiningReport {
  bool zero = true;
  std::string detail;  // which component and xi failed
};
IntertwiningReport check_intertwining(const ContinuousLadder& K, const OperatorTriple& kappa,
                                      const std::vector<Polynomial>& C);

}  // namespace ipsd

#endif
