#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <string>

#include "gencal/errors.hpp"

namespace gencal {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Scalar traits shared by the form/clifford kernels.  The double and
/// complex kernels compare with a tolerance, the rational kernel exactly.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
  static double abs(double x) { return std::abs(x); }
  static double conj(double x) { return x; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& x, double tol) { return std::abs(x) <= tol; }
  static double abs(const Complex& x) { return std::abs(x); }
  static Complex conj(const Complex& x) { return std::conj(x); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x, double) { return x == 0; }
  static double abs(const Rational& x) {
    return std::abs(static_cast<double>(x));
  }
  static Rational conj(const Rational& x) { return x; }
};

/// Exact square root of a nonnegative rational; fails if not a perfect
/// square (the exact kernel never falls back to floating point).
inline Rational sqrt_exact(const Rational& q) {
  require(q >= 0, ErrorKind::invalid_argument, "sqrt of negative rational");
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer rn = boost::multiprecision::sqrt(num);
  Integer rd = boost::multiprecision::sqrt(den);
  require(rn * rn == num && rd * rd == den, ErrorKind::unsupported,
          "square root is irrational in exact mode");
  return Rational(rn, rd);
}

inline std::string to_string_scalar(double x);
inline std::string to_string_scalar(const Rational& q);

}  // namespace gencal
