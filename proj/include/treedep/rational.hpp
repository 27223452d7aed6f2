#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace treedep {

// Exact arithmetic scalars. Everything that counts trees or compares
// densities goes through these; no floating point anywhere in the core.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

inline BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return BigRat(num) / BigRat(den);
}

// Always "num/den" with den > 0, reduced. Integers render as "n/1".
inline std::string to_fraction_string(const BigRat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

// Accepts "p/q" or a bare integer "p".
inline BigRat parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

inline BigInt require_integer(const BigRat& x, const char* context) {
  if (denominator(x) != 1)
    throw std::domain_error(std::string(context) + ": expected an integer, got " +
                            to_fraction_string(x));
  return numerator(x);
}

// x^e over the rationals; e may be negative (x != 0).
inline BigRat rat_pow(const BigRat& x, long e) {
  if (e >= 0) {
    BigRat r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
  }
  if (x == 0) throw std::domain_error("0 raised to a negative power");
  return 1 / rat_pow(x, -e);
}

inline BigInt int_pow(const BigInt& base, long e) {
  if (e < 0) throw std::domain_error("negative exponent for integer power");
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace treedep
