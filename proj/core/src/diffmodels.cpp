#include "ipsd/diffmodels.hpp"

namespace ipsd {

namespace {

DiffOperator first_order(std::size_t n_vars, const Polynomial& coeff, std::size_t v) {
  MultiIndex d(n_vars, 0);
  d[v] = 1;
  return diff_term(n_vars, coeff, d);
}

}  // namespace

DiffOperator bmp_operator(const Kernel& k, int levels) {
  std::size_t n_vars = static_cast<std::size_t>(k.n_sites()) * levels;
  DiffOperator op(n_vars);
  for (int i = 0; i < k.n_sites(); ++i)
    for (int j = i + 1; j < k.n_sites(); ++j) {
      if (k.rate(i, j) == 0) continue;
      for (int a = 0; a < levels; ++a)
        for (int b = 0; b < levels; ++b) {
          std::size_t vi = i * levels + a, vj = j * levels + b;
          DiffOperator rot = first_order(n_vars, Polynomial::variable(n_vars, vi), vj) -
                             first_order(n_vars, Polynomial::variable(n_vars, vj), vi);
          op = op + (rot * rot) * k.rate(i, j);
        }
    }
  return op;
}

DiffOperator bep_operator(const Kernel& k, int m) {
  std::size_t n = k.n_sites();
  DiffOperator op(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& p = k.rate(i, j);
      if (p == 0) continue;
      Polynomial zi = Polynomial::variable(n, i), zj = Polynomial::variable(n, j);
      MultiIndex di(n, 0), dj(n, 0);
      di[i] = 1;
      dj[j] = 1;
      DiffOperator grad = diff_term(n, Polynomial::constant(n, 1), di) -
                          diff_term(n, Polynomial::constant(n, 1), dj);
      // 4 z_i z_j (d_i - d_j)^2: the coefficient sits left of the derivatives.
      DiffOperator dd = grad * grad;
      DiffOperator second(n);
      for (const auto& [mi, c] : dd.terms()) second.add_term(mi, c * (zi * zj * Rational(4)));
      Polynomial diffz = (zi - zj) * Rational(-2 * m);
      DiffOperator drift = first_order(n, diffz, i) - first_order(n, diffz, j);
      op = op + (second + drift) * p;
    }
  return op;
}

DiffOperator boundary_bep_operator(const Kernel& k, int m) {
  std::size_t n = k.n_sites();
  DiffOperator op = bep_operator(k, m);
  for (int i : k.boundary()) {
    const Rational& T = k.reservoir_param(i);
    Polynomial zi = Polynomial::variable(n, i);
    MultiIndex d1(n, 0), d2(n, 0);
    d1[i] = 1;
    d2[i] = 2;
    op = op + diff_term(n, Polynomial::constant(n, 2 * T * m), d1);
    op = op + diff_term(n, zi * (4 * T), d2);
    op = op + diff_term(n, zi * Rational(-2), d1);
  }
  return op;
}

DiffOperator deterministic_energy_operator(const Kernel& k) {
  std::size_t n = k.n_sites();
  DiffOperator op(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& p = k.rate(i, j);
      if (p == 0) continue;
      Polynomial diffz = (Polynomial::variable(n, i) - Polynomial::variable(n, j)) * Rational(-2);
      op = op + (first_order(n, diffz, i) - first_order(n, diffz, j)) * p;
    }
  return op;
}

DiffOperator deterministic_flow_operator() {
  std::size_t n = 2;
  Polynomial diffx = (Polynomial::variable(n, 0) - Polynomial::variable(n, 1)) * Rational(-1);
  return first_order(n, diffx, 0) - first_order(n, diffx, 1);
}

ContinuousLadder bmp_site_ladder() {
  std::size_t n = 1;
  Polynomial x = Polynomial::variable(n, 0);
  ContinuousLadder L;
  L.plus = diff_term(n, x * x * Rational(1, 2), MultiIndex{0});
  L.minus = diff_term(n, Polynomial::constant(n, Rational(1, 2)), MultiIndex{2});
  L.zero = diff_term(n, Polynomial::constant(n, Rational(1, 4)), MultiIndex{0}) +
           diff_term(n, x * Rational(1, 2), MultiIndex{1});
  return L;
}

ContinuousLadder bep_site_ladder(int m) {
  std::size_t n = 1;
  Polynomial z = Polynomial::variable(n, 0);
  ContinuousLadder L;
  L.plus = diff_term(n, z * Rational(1, 2), MultiIndex{0});
  L.minus = diff_term(n, z * Rational(2), MultiIndex{2}) +
            diff_term(n, Polynomial::constant(n, Rational(m)), MultiIndex{1});
  L.zero = diff_term(n, z, MultiIndex{1}) +
           diff_term(n, Polynomial::constant(n, Rational(m, 4)), MultiIndex{0});
  return L;
}

}  // namespace ipsd
