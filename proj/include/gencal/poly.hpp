#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gencal/errors.hpp"
#include "gencal/scalar.hpp"

namespace gencal {

/// Multivariate polynomial over Q in x1..xn, n <= 6, degree <= 15 per
/// variable.  Monomial keys pack one exponent per nibble.
class Poly {
public:
  using key_t = std::uint32_t;
  static constexpr int kMaxVars = 6;

  Poly() = default;
  Poly(int v) { if (v != 0) terms_[0] = Rational(v); }  // NOLINT: ring constant
  explicit Poly(const Rational& c) { if (c != 0) terms_[0] = c; }

  static Poly variable(int i) {  // 0-based
    require(i >= 0 && i < kMaxVars, ErrorKind::invalid_argument, "poly variable index");
    Poly p;
    p.terms_[key_t(1) << (4 * i)] = Rational(1);
    return p;
  }
  static Poly monomial(key_t key, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_[key] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
  }
  Poly operator-() const {
    Poly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) r.add_term(mul_keys(ka, kb), ca * cb);
    return r;
  }

  /// Partial derivative with respect to x_{i+1}.
  Poly d(int i) const {
    Poly r;
    for (const auto& [k, c] : terms_) {
      int e = exponent(k, i);
      if (e == 0) continue;
      r.add_term(k - (key_t(1) << (4 * i)), c * e);
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& x) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < kMaxVars; ++i)
        for (int e = 0; e < exponent(k, i); ++e) t *= x[i];
      acc += t;
    }
    return acc;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) {
      (void)c;
      int s = 0;
      for (int i = 0; i < kMaxVars; ++i) s += exponent(k, i);
      d = std::max(d, s);
    }
    return d;
  }

  const std::map<key_t, Rational>& terms() const { return terms_; }
  static int exponent(key_t k, int i) { return int((k >> (4 * i)) & 0xF); }

  std::string str() const;

private:
  static key_t mul_keys(key_t a, key_t b) {
    for (int i = 0; i < kMaxVars; ++i)
      require(exponent(a, i) + exponent(b, i) <= 15, ErrorKind::unsupported,
              "polynomial degree overflow");
    return a + b;
  }
  void add_term(key_t k, const Rational& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (c != 0) terms_[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  std::map<key_t, Rational> terms_;
};

template <>
struct ScalarTraits<Poly> {
  static constexpr bool exact = true;
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(1); }
  static bool is_zero(const Poly& p, double) { return p.is_zero(); }
  static double abs(const Poly& p) { return p.is_zero() ? 0.0 : 1.0; }
  static Poly conj(const Poly& p) { return p; }
};

/// "x1^2*x3 - 3/2*x2" style parser (no parentheses; monomials only).
Poly parse_poly(const std::string& text, int nvars);

}  // namespace gencal
