#ifndef IPSD_POLY_HPP
#define IPSD_POLY_HPP

#include <map>
#include <vector>

#include "ipsd/rational.hpp"

namespace ipsd {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownVariable : PolyError { using PolyError::PolyError; };
struct NotExpressibleInEnergy : PolyError { using PolyError::PolyError; };

// Exponent multi-index over a fixed variable universe.
using MultiIndex = std::vector<int>;

// Exact multivariate polynomial over the rationals. Terms are kept in a
// canonically ordered map; zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() : n_vars_(0) {}
  explicit Polynomial(std::size_t n_vars) : n_vars_(n_vars) {}

  static Polynomial constant(std::size_t n_vars, const Rational& c);
  static Polynomial monomial(std::size_t n_vars, const MultiIndex& mi, const Rational& c);
  // x_v
  static Polynomial variable(std::size_t n_vars, std::size_t v);

  std::size_t n_vars() const { return n_vars_; }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const MultiIndex& mi) const;
  void add_term(const MultiIndex& mi, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial operator-() const { return *this * Rational(-1); }
  bool operator==(const Polynomial& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }

  Polynomial pow(int k) const;
  // Partial derivative d/dx_v.
  Polynomial derivative(std::size_t v) const;
  // Iterated derivative per multi-index.
  Polynomial derivative(const MultiIndex& mi) const;

  Rational eval(const std::vector<Rational>& x) const;
  int degree_in(std::size_t v) const;
  int total_degree() const;

  std::string to_string() const;

 private:
  std::size_t n_vars_;
  std::map<MultiIndex, Rational> terms_;
  void check_vars(const Polynomial& o) const;
};

// Second-order differential operator with polynomial coefficients, stored in
// expanded normal form: one polynomial coefficient per derivative
// multi-index, so operator equality is decidable by coefficient comparison.
class DiffOperator {
 public:
  DiffOperator() : n_vars_(0) {}
  explicit DiffOperator(std::size_t n_vars) : n_vars_(n_vars) {}

  std::size_t n_vars() const { return n_vars_; }
  const std::map<MultiIndex, Polynomial>& terms() const { return terms_; }

  void add_term(const MultiIndex& deriv, const Polynomial& coeff);

  DiffOperator operator+(const DiffOperator& o) const;
  DiffOperator operator-(const DiffOperator& o) const;
  DiffOperator operator*(const Rational& s) const;
  // Operator composition (this after o is applied? No: (*this) ∘ o, i.e.
  // apply o first is the right factor: (a*b)f = a(b(f)).)
  DiffOperator operator*(const DiffOperator& o) const;
  bool operator==(const DiffOperator& o) const {
    return n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  Polynomial apply(const Polynomial& p) const;

 private:
  std::size_t n_vars_;
  std::map<MultiIndex, Polynomial> terms_;
};

Polynomial apply_diff_operator(const DiffOperator& op, const Polynomial& p);

// c * d^|mi|/dx^mi as a DiffOperator.
DiffOperator diff_term(std::size_t n_vars, const Polynomial& coeff, const MultiIndex& deriv);

// D(x,0)=1, D(x,n+1) = (-d/dx + x) D(x,n); single-variable polynomials.
std::vector<Polynomial> hermite_duality_sequence(int n_max);

// Rewrites a polynomial in site-level variables x_{i,a} (m levels per site,
// variable index i*m+a) as a polynomial in the site energies z_i = sum_a
// x_{i,a}^2. Throws NotExpressibleInEnergy if impossible.
Polynomial change_variables_energy(const Polynomial& p, int m);

// Inverse direction: substitute z_i -> sum_a x_{i,a}^2.
Polynomial expand_energy_to_levels(const Polynomial& zp, int m);

}  // namespace ipsd

#endif
