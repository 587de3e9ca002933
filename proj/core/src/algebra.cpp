#include "ipsd/algebra.hpp"

namespace ipsd {

OperatorTriple su2_rep(int two_j) {
  if (two_j <= 0) throw InvalidSpin("2j must be a positive integer");
  std::size_t d = static_cast<std::size_t>(two_j) + 1;
  OperatorTriple t;
  t.kind = RepKind::SU2;
  t.dim = t.exact_dim = d;
  t.plus = RatMatrix(d, d);
  t.minus = RatMatrix(d, d);
  t.zero = RatMatrix(d, d);
  for (std::size_t n = 0; n < d; ++n) {
    if (n + 1 < d) t.plus(n + 1, n) = Rational(two_j) - Rational(n);
    if (n > 0) t.minus(n - 1, n) = Rational(n);
    t.zero(n, n) = Rational(n) - Rational(two_j, 2);
  }
  return t;
}

OperatorTriple su11_rep(int m, std::size_t cutoff) {
  if (m <= 0) throw InvalidSpin("su11 parameter m must be a positive integer");
  if (cutoff < 3) throw CutoffTooSmall("su11 cutoff must be >= 3");
  OperatorTriple t;
  t.kind = RepKind::SU11;
  t.dim = cutoff;
  t.exact_dim = cutoff - 1;
  t.plus = RatMatrix(cutoff, cutoff);
  t.minus = RatMatrix(cutoff, cutoff);
  t.zero = RatMatrix(cutoff, cutoff);
  for (std::size_t n = 0; n < cutoff; ++n) {
    if (n + 1 < cutoff) t.plus(n + 1, n) = Rational(m, 2) + Rational(n);
    if (n > 0) t.minus(n - 1, n) = Rational(n);
    t.zero(n, n) = Rational(m, 4) + Rational(n);
  }
  return t;
}

OperatorTriple heisenberg_rep(std::size_t cutoff) {
  if (cutoff < 2) throw CutoffTooSmall("heisenberg cutoff must be >= 2");
  OperatorTriple t;
  t.kind = RepKind::Heisenberg;
  t.dim = cutoff;
  t.exact_dim = cutoff - 1;
  t.plus = RatMatrix(cutoff, cutoff);
  t.minus = RatMatrix(cutoff, cutoff);
  t.zero = RatMatrix::identity(cutoff);
  for (std::size_t n = 0; n < cutoff; ++n) {
    if (n + 1 < cutoff) t.plus(n + 1, n) = 1;
    if (n > 0) t.minus(n - 1, n) = Rational(n);
  }
  return t;
}

RatMatrix exp_raising(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw NotNilpotentOrTriangular("non-square");
  std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (a(i, j) != 0) throw NotNilpotentOrTriangular("not strictly lower triangular");
  RatMatrix result = RatMatrix::identity(n);
  RatMatrix power = RatMatrix::identity(n);
  Integer kfact = 1;
  for (std::size_t k = 1; k < n; ++k) {
    power = power * a;
    if (power.is_zero()) break;
    kfact *= k;
    result = result + power * Rational(Integer(1), kfact);
  }
  return result;
}

RatMatrix tensor_site_operator(const RatMatrix& op, int site, int n_sites) {
  if (site < 0 || site >= n_sites) throw AlgebraError("site index out of range");
  RatMatrix result = site == 0 ? op : RatMatrix::identity(op.rows());
  for (int s = 1; s < n_sites; ++s)
    result = kron(result, s == site ? op : RatMatrix::identity(op.rows()));
  return result;
}

RatMatrix total_operator(const RatMatrix& op, int n_sites) {
  RatMatrix sum = tensor_site_operator(op, 0, n_sites);
  for (int s = 1; s < n_sites; ++s) sum = sum + tensor_site_operator(op, s, n_sites);
  return sum;
}

}  // namespace ipsd
