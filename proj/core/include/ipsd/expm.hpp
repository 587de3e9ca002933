#ifndef IPSD_EXPM_HPP
#define IPSD_EXPM_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ipsd/matrix.hpp"

namespace ipsd {

// High-precision scalar for the matrix-exponential oracle (independent of
// the exact-rational verification path).
using Real = boost::multiprecision::cpp_bin_float_50;

struct RealMatrix {
  std::size_t n = 0;
  std::vector<Real> data;
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n_) : n(n_), data(n_ * n_) {}
  Real& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

RealMatrix to_real(const RatMatrix& m);

// e^{tA} by scaling-and-squaring with a truncated Taylor series, intended
// for desk-scale dense generators.
RealMatrix expm(const RealMatrix& a, const Real& t);

// Row s0 of e^{tL}: the time-t distribution started from state s0.
std::vector<Real> distribution_at(const RatMatrix& L, std::size_t s0, const Real& t);

Real total_variation(const std::vector<Real>& p, const std::vector<Real>& q);

// sum_s p(s) f(s) for rational values f.
Real expectation(const std::vector<Real>& p, const std::vector<Rational>& f);

}  // namespace ipsd

#endif
