#ifndef IPSD_RATIONAL_HPP
#define IPSD_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace ipsd {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts "3", "-2", "3/4", "1.25".
inline Rational parse_rational(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  Integer den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(Integer(digits), den);
}

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Integer r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

// (2n-1)!! with (-1)!! = 1.
inline Integer double_factorial_odd(long n) {
  Integer r = 1;
  for (long k = 1; k <= n; ++k) r *= 2 * k - 1;
  return r;
}

// binomial(n, k) for integer n >= 0; zero for k < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
  return r;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1), exact in the rationals.
// Evaluates Gamma(a+k)/Gamma(a) for half-integer a without floating Gamma.
inline Rational rising_factorial(const Rational& a, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= a + i;
  return r;
}

inline Rational pow_rational(const Rational& a, long k) {
  if (k < 0) {
    if (a == 0) throw std::domain_error("pow_rational: 0^negative");
    return 1 / pow_rational(a, -k);
  }
  Rational r = 1, b = a;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

}  // namespace ipsd

#endif
