#include "ipsd/expm.hpp"

namespace ipsd {

namespace {

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix r(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      const Real& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

Real inf_norm(const RealMatrix& a) {
  Real best = 0;
  for (std::size_t i = 0; i < a.n; ++i) {
    Real row = 0;
    for (std::size_t j = 0; j < a.n; ++j) row += abs(a(i, j));
    if (row > best) best = row;
  }
  return best;
}

}  // namespace

RealMatrix to_real(const RatMatrix& m) {
  RealMatrix r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = Real(numerator(m(i, j)).str()) / Real(denominator(m(i, j)).str());
  return r;
}

RealMatrix expm(const RealMatrix& a, const Real& t) {
  std::size_t n = a.n;
  RealMatrix at(n);
  for (std::size_t i = 0; i < n * n; ++i) at.data[i] = a.data[i] * t;
  // Scale so the norm is below 1/2, Taylor to full precision, square back.
  int squarings = 0;
  Real norm = inf_norm(at);
  while (norm > Real(0.5)) {
    norm /= 2;
    ++squarings;
  }
  Real scale = pow(Real(2), -squarings);
  for (auto& x : at.data) x *= scale;

  RealMatrix result(n), term(n);
  for (std::size_t i = 0; i < n; ++i) result(i, i) = term(i, i) = 1;
  const Real eps = pow(Real(10), -45);
  for (int k = 1; k < 200; ++k) {
    term = multiply(term, at);
    for (auto& x : term.data) x /= k;
    for (std::size_t i = 0; i < n * n; ++i) result.data[i] += term.data[i];
    if (inf_norm(term) < eps) break;
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

std::vector<Real> distribution_at(const RatMatrix& L, std::size_t s0, const Real& t) {
  RealMatrix e = expm(to_real(L), t);
  std::vector<Real> row(L.rows());
  for (std::size_t j = 0; j < L.rows(); ++j) row[j] = e(s0, j);
  return row;
}

Real total_variation(const std::vector<Real>& p, const std::vector<Real>& q) {
  Real s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += abs(p[i] - q[i]);
  return s / 2;
}

Real expectation(const std::vector<Real>& p, const std::vector<Rational>& f) {
  Real s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    s += p[i] * Real(numerator(f[i]).str()) / Real(denominator(f[i]).str());
  return s;
}

}  // namespace ipsd
