#include "ipsd/dualityfn.hpp"

namespace ipsd {

Rational sep2j_site_duality(int two_j, int eta, int xi) {
  if (xi > eta || xi > two_j) return 0;
  return Rational(binomial(eta, xi)) / Rational(binomial(two_j, xi));
}

Rational sip_site_duality(int m, int eta, int xi) {
  if (xi > eta) return 0;
  return Rational(factorial(eta)) /
         (Rational(factorial(eta - xi)) * rising_factorial(Rational(m, 2), xi));
}

DualityFunction sep_duality() {
  return [](const Config& eta, const Config& xi) -> Rational {
    Rational d = 1;
    for (std::size_t i = 0; i < eta.size(); ++i) {
      if (xi[i] == 0) continue;
      if (xi[i] > 1) return 0;
      d *= eta[i];
    }
    return d;
  };
}

DualityFunction sep2j_duality(int two_j) {
  return [two_j](const Config& eta, const Config& xi) -> Rational {
    Rational d = 1;
    for (std::size_t i = 0; i < eta.size(); ++i) d *= sep2j_site_duality(two_j, eta[i], xi[i]);
    return d;
  };
}

DualityFunction sip_duality(int m) {
  return [m](const Config& eta, const Config& xi) -> Rational {
    Rational d = 1;
    for (std::size_t i = 0; i < eta.size(); ++i) d *= sip_site_duality(m, eta[i], xi[i]);
    return d;
  };
}

DualityFunction irw_duality() {
  return [](const Config& eta, const Config& xi) -> Rational {
    Rational d = 1;
    for (std::size_t i = 0; i < eta.size(); ++i) {
      if (xi[i] > eta[i]) return 0;
      d *= Rational(factorial(eta[i])) / Rational(factorial(eta[i] - xi[i]));
    }
    return d;
  };
}

DualityFunction boundary_sep2j_duality(const Kernel& k, int two_j) {
  int n = k.n_sites();
  std::vector<Rational> rho;
  for (int b : k.boundary()) rho.push_back(k.reservoir_param(b));
  return [two_j, n, rho](const Config& eta, const Config& xi) -> Rational {
    Rational d = 1;
    for (int i = 0; i < n; ++i) d *= sep2j_site_duality(two_j, eta[i], xi[i]);
    for (std::size_t e = 0; e < rho.size(); ++e) d *= pow_rational(rho[e], xi[n + e]);
    return d;
  };
}

RatMatrix duality_matrix(const DualityFunction& D, const StateSpace& primal,
                         const StateSpace& dual) {
  RatMatrix m(primal.size(), dual.size());
  for (std::size_t i = 0; i < primal.size(); ++i)
    for (std::size_t j = 0; j < dual.size(); ++j) m(i, j) = D(primal.state(i), dual.state(j));
  return m;
}

Polynomial duality_polynomial(ContinuousModel model, const Config& xi, int m) {
  std::size_t n = xi.size();
  Polynomial p = Polynomial::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (xi[i] == 0) continue;
    MultiIndex mi(n, 0);
    Rational pref = 1;
    switch (model) {
      case ContinuousModel::BMP:
        mi[i] = 2 * xi[i];
        pref = Rational(1) / Rational(double_factorial_odd(xi[i]));
        break;
      case ContinuousModel::BEP:
        mi[i] = xi[i];
        pref = Rational(1) /
               (pow_rational(Rational(2), xi[i]) * rising_factorial(Rational(m, 2), xi[i]));
        break;
      case ContinuousModel::DetFlow:
      case ContinuousModel::IRWDual:
        mi[i] = xi[i];
        break;
      default:
        throw UnsupportedModel("unknown continuous model");
    }
    p = p * Polynomial::monomial(n, mi, pref);
  }
  return p;
}

Polynomial boundary_bep_duality_polynomial(const Kernel& k, int m, const Config& xi) {
  int n = k.n_sites();
  Config bulk(xi.begin(), xi.begin() + n);
  Polynomial p = duality_polynomial(ContinuousModel::BEP, bulk, m);
  Rational sinks = 1;
  for (int e = 0; e < k.n_sinks(); ++e)
    sinks *= pow_rational(k.reservoir_param(k.boundary()[e]), xi[n + e]);
  return p * sinks;
}

}  // namespace ipsd
