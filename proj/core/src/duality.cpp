#include "ipsd/duality.hpp"

#include <sstream>

namespace ipsd {

RatMatrix ConjugationQ::matrix() const {
  RatMatrix q(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) q(i, i) = diag[i];
  return q;
}

RatMatrix ConjugationQ::inverse_matrix() const {
  RatMatrix q(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) q(i, i) = 1 / diag[i];
  return q;
}

ConjugationQ q_from_reversible_measure(const CTMCGenerator& L,
                                       const std::vector<Rational>& mu) {
  const StateSpace& sp = L.space();
  if (mu.size() != sp.size()) throw DualityError("measure size mismatch");
  for (const auto& w : mu)
    if (w <= 0) throw NotReversible("measure must be strictly positive");
  RatMatrix dense = L.dense();
  for (std::size_t a = 0; a < sp.size(); ++a)
    for (std::size_t b = 0; b < sp.size(); ++b) {
      if (a == b) continue;
      if (mu[a] * dense(a, b) != mu[b] * dense(b, a)) {
        std::ostringstream os;
        os << "detailed balance fails at state pair (" << a << ", " << b << ")";
        throw NotReversible(os.str());
      }
    }
  return ConjugationQ{mu};
}

RatMatrix duality_from_symmetry(const RatMatrix& S, const ConjugationQ& Q,
                                const RatMatrix& L, TheoremSide side) {
  RatMatrix q = Q.matrix(), qinv = Q.inverse_matrix();
  if (!(q * L * qinv == L.transpose())) throw NotAConjugation("Q L Q^{-1} != L^T");
  if (side == TheoremSide::SymmetryOfL) {
    if (!commutator(S, L).is_zero()) throw NotASymmetry("[S, L] != 0");
    return S * qinv;
  }
  if (!commutator(S, L.transpose()).is_zero()) throw NotASymmetry("[S, L^T] != 0");
  return qinv * S;
}

RatMatrix symmetry_from_duality(const RatMatrix& D, const ConjugationQ& Q,
                                const RatMatrix& L) {
  RatMatrix S = D * Q.matrix();
  if (!commutator(S, L).is_zero()) throw NotASymmetry("D Q does not commute with L");
  return S;
}

Residual verify_duality(const RatMatrix& L, const RatMatrix& L_dual, const RatMatrix& D) {
  RatMatrix r = L * D - D * L_dual.transpose();
  Residual res;
  if (!r.is_zero()) {
    res.zero = false;
    res.witness = r.max_abs_entry();
  }
  return res;
}

Residual verify_selfduality_sectors(const CTMCGenerator& LA, const CTMCGenerator& LB,
                                    const DualityFunction& D) {
  RatMatrix d = duality_matrix(D, LA.space(), LB.space());
  return verify_duality(LA.dense(), LB.dense(), d);
}

Residual verify_duality_diffusion(const DiffOperator& L, const CTMCGenerator& L_dual,
                                  const std::function<Polynomial(const Config&)>& D_of) {
  const StateSpace& sp = L_dual.space();
  Residual res;
  for (std::size_t s = 0; s < sp.size(); ++s) {
    Polynomial lhs = L.apply(D_of(sp.state(s)));
    Polynomial rhs(lhs.n_vars());
    Rational diag = 0;
    for (const auto& [t, r] : L_dual.transitions_from(s)) {
      rhs = rhs + D_of(sp.state(t)) * r;
      diag += r;
    }
    rhs = rhs - D_of(sp.state(s)) * diag;
    if (!(lhs == rhs)) {
      res.zero = false;
      res.witness.row = s;
      return res;
    }
  }
  return res;
}

ConjugacyReport conjugacy_pair_check(const RatMatrix& A, const RatMatrix& B,
                                     const RatMatrix& C, const RatMatrix& Ctilde) {
  ConjugacyReport rep;
  RatMatrix f = A * C - C * B;
  if (!f.is_zero()) { rep.forward.zero = false; rep.forward.witness = f.max_abs_entry(); }
  RatMatrix b = Ctilde * A - B * Ctilde;
  if (!b.is_zero()) { rep.backward.zero = false; rep.backward.witness = b.max_abs_entry(); }
  return rep;
}

IntertwiningReport check_intertwining(const ContinuousLadder& K, const OperatorTriple& kappa,
                                      const std::vector<Polynomial>& C) {
  IntertwiningReport rep;
  if (C.size() < 2) throw DualityError("need at least two family members");
  if (C.size() > kappa.dim) throw DualityError("family exceeds representation cutoff");
  std::size_t n_check = C.size() - 1;
  struct Component {
    const DiffOperator* op;
    const RatMatrix* mat;
    const char* name;
  };
  const Component comps[] = {{&K.plus, &kappa.plus, "+"},
                             {&K.minus, &kappa.minus, "-"},
                             {&K.zero, &kappa.zero, "0"}};
  for (const auto& c : comps) {
    for (std::size_t xi = 0; xi < n_check; ++xi) {
      Polynomial lhs = c.op->apply(C[xi]);
      Polynomial rhs(C[0].n_vars());
      for (std::size_t xip = 0; xip < C.size(); ++xip) {
        const Rational& entry = (*c.mat)(xip, xi);
        if (entry != 0) rhs = rhs + C[xip] * entry;
      }
      if (!(lhs == rhs)) {
        rep.zero = false;
        std::ostringstream os;
        os << "component " << c.name << " at xi=" << xi;
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace ipsd
