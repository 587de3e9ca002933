#include "ipsd/poly.hpp"

#include <sstream>

namespace ipsd {

Polynomial Polynomial::constant(std::size_t n_vars, const Rational& c) {
  Polynomial p(n_vars);
  p.add_term(MultiIndex(n_vars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(std::size_t n_vars, const MultiIndex& mi, const Rational& c) {
  if (mi.size() != n_vars) throw PolyError("monomial: multi-index size mismatch");
  Polynomial p(n_vars);
  p.add_term(mi, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t v) {
  if (v >= n_vars) throw UnknownVariable("variable index out of range");
  MultiIndex mi(n_vars, 0);
  mi[v] = 1;
  return monomial(n_vars, mi, 1);
}

Rational Polynomial::coeff(const MultiIndex& mi) const {
  auto it = terms_.find(mi);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& mi, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mi, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_vars(const Polynomial& o) const {
  if (n_vars_ != o.n_vars_) throw PolyError("polynomial variable universe mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_vars(o);
  Polynomial r = *this;
  for (const auto& [mi, c] : o.terms_) r.add_term(mi, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_vars(o);
  Polynomial r = *this;
  for (const auto& [mi, c] : o.terms_) r.add_term(mi, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_vars(o);
  Polynomial r(n_vars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      MultiIndex mi(n_vars_);
      for (std::size_t v = 0; v < n_vars_; ++v) mi[v] = a[v] + b[v];
      r.add_term(mi, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rational& s) const {
  Polynomial r(n_vars_);
  if (s == 0) return r;
  for (const auto& [mi, c] : terms_) r.add_term(mi, c * s);
  return r;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(n_vars_, 1);
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Polynomial Polynomial::derivative(std::size_t v) const {
  if (v >= n_vars_) throw UnknownVariable("derivative variable out of range");
  Polynomial r(n_vars_);
  for (const auto& [mi, c] : terms_) {
    if (mi[v] == 0) continue;
    MultiIndex d = mi;
    d[v] -= 1;
    r.add_term(d, c * mi[v]);
  }
  return r;
}

Polynomial Polynomial::derivative(const MultiIndex& mi) const {
  Polynomial r = *this;
  for (std::size_t v = 0; v < mi.size(); ++v)
    for (int k = 0; k < mi[v]; ++k) r = r.derivative(v);
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& x) const {
  if (x.size() != n_vars_) throw PolyError("eval: wrong number of values");
  Rational sum = 0;
  for (const auto& [mi, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < n_vars_; ++v)
      if (mi[v] != 0) t *= pow_rational(x[v], mi[v]);
    sum += t;
  }
  return sum;
}

int Polynomial::degree_in(std::size_t v) const {
  int d = 0;
  for (const auto& [mi, c] : terms_) d = std::max(d, mi[v]);
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [mi, c] : terms_) {
    int t = 0;
    for (int e : mi) t += e;
    d = std::max(d, t);
  }
  return d;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mi, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t v = 0; v < n_vars_; ++v)
      if (mi[v] > 0) {
        os << "*x" << v;
        if (mi[v] > 1) os << "^" << mi[v];
      }
  }
  return os.str();
}

void DiffOperator::add_term(const MultiIndex& deriv, const Polynomial& coeff) {
  if (deriv.size() != n_vars_) throw PolyError("diff term: multi-index size mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(deriv, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
  DiffOperator r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
  DiffOperator r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
  return r;
}

DiffOperator DiffOperator::operator*(const Rational& s) const {
  DiffOperator r(n_vars_);
  for (const auto& [d, c] : terms_) r.add_term(d, c * s);
  return r;
}

namespace {

// Enumerate s <= a componentwise.
void subindices(const MultiIndex& a, std::size_t v, MultiIndex& cur,
                std::vector<MultiIndex>& out) {
  if (v == a.size()) { out.push_back(cur); return; }
  for (int k = 0; k <= a[v]; ++k) {
    cur[v] = k;
    subindices(a, v + 1, cur, out);
  }
}

}  // namespace

DiffOperator DiffOperator::operator*(const DiffOperator& o) const {
  if (n_vars_ != o.n_vars_) throw PolyError("diff operator composition: universe mismatch");
  DiffOperator r(n_vars_);
  for (const auto& [a, ca] : terms_) {
    std::vector<MultiIndex> subs;
    MultiIndex cur(n_vars_);
    subindices(a, 0, cur, subs);
    for (const auto& [b, cb] : o.terms_) {
      // Leibniz: d^a (cb * d^b f) = sum_{s<=a} prod C(a_v,s_v) (d^{a-s} cb) d^{b+s} f
      for (const auto& s : subs) {
        Rational mult = 1;
        MultiIndex as(n_vars_), bs(n_vars_);
        for (std::size_t v = 0; v < n_vars_; ++v) {
          mult *= Rational(binomial(a[v], s[v]));
          as[v] = a[v] - s[v];
          bs[v] = b[v] + s[v];
        }
        Polynomial dc = cb.derivative(as);
        if (dc.is_zero()) continue;
        r.add_term(bs, ca * dc * mult);
      }
    }
  }
  return r;
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
  if (n_vars_ != p.n_vars()) throw UnknownVariable("operator/polynomial universe mismatch");
  Polynomial r(n_vars_);
  for (const auto& [d, c] : terms_) r = r + c * p.derivative(d);
  return r;
}

Polynomial apply_diff_operator(const DiffOperator& op, const Polynomial& p) {
  return op.apply(p);
}

DiffOperator diff_term(std::size_t n_vars, const Polynomial& coeff, const MultiIndex& deriv) {
  DiffOperator op(n_vars);
  op.add_term(deriv, coeff);
  return op;
}

std::vector<Polynomial> hermite_duality_sequence(int n_max) {
  std::vector<Polynomial> out;
  out.push_back(Polynomial::constant(1, 1));
  Polynomial x = Polynomial::variable(1, 0);
  for (int n = 0; n < n_max; ++n) out.push_back(x * out.back() - out.back().derivative(0));
  return out;
}

Polynomial expand_energy_to_levels(const Polynomial& zp, int m) {
  std::size_t n_sites = zp.n_vars();
  std::size_t n_x = n_sites * m;
  std::vector<Polynomial> z_of_x;
  for (std::size_t i = 0; i < n_sites; ++i) {
    Polynomial zi(n_x);
    for (int a = 0; a < m; ++a) {
      MultiIndex mi(n_x, 0);
      mi[i * m + a] = 2;
      zi.add_term(mi, 1);
    }
    z_of_x.push_back(zi);
  }
  Polynomial out(n_x);
  for (const auto& [mi, c] : zp.terms()) {
    Polynomial t = Polynomial::constant(n_x, c);
    for (std::size_t i = 0; i < n_sites; ++i) t = t * z_of_x[i].pow(mi[i]);
    out = out + t;
  }
  return out;
}

Polynomial change_variables_energy(const Polynomial& p, int m) {
  if (p.n_vars() % m != 0) throw PolyError("variable count not a multiple of m");
  std::size_t n_sites = p.n_vars() / m;
  Polynomial rem = p;
  Polynomial zpoly(n_sites);
  // Peel the lex-leading monomial: if rem is expressible, its leading
  // monomial is prod_i x_{i,0}^{2 k_i}.
  while (!rem.is_zero()) {
    auto it = rem.terms().rbegin();
    const MultiIndex& mi = it->first;
    MultiIndex zmi(n_sites, 0);
    for (std::size_t v = 0; v < p.n_vars(); ++v) {
      std::size_t site = v / m, level = v % m;
      if (level == 0) {
        if (mi[v] % 2 != 0) throw NotExpressibleInEnergy("odd leading exponent");
        zmi[site] = mi[v] / 2;
      } else if (mi[v] != 0) {
        throw NotExpressibleInEnergy("leading monomial uses non-leading level");
      }
    }
    Polynomial zterm = Polynomial::monomial(n_sites, zmi, it->second);
    zpoly = zpoly + zterm;
    rem = rem - expand_energy_to_levels(zterm, m);
  }
  return zpoly;
}

}  // namespace ipsd
