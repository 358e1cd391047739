#include "gencal/poly.hpp"

#include <cctype>
#include <sstream>

namespace gencal {

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool need_coeff = (a != 1) || (k == 0);
    if (need_coeff) os << a.str();
    bool started = need_coeff;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = exponent(k, i);
      if (e == 0) continue;
      if (started) os << "*";
      os << "x" << (i + 1);
      if (e > 1) os << "^" << e;
      started = true;
    }
  }
  return os.str();
}

Poly parse_poly(const std::string& text, int nvars) {
  Poly out;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (skip(), i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else {
      require(first, ErrorKind::schema, "poly literal: expected sign");
    }
    first = false;
    skip();
    Rational coeff(1);
    Poly::key_t key = 0;
    bool any = false;
    while (i < text.size()) {
      skip();
      if (i < text.size() && text[i] == '*') { ++i; skip(); }
      if (i >= text.size()) break;
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = i;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
          ++i;
        coeff *= Rational(text.substr(start, i - start));
        any = true;
      } else if (c == 'x') {
        ++i;
        require(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
                ErrorKind::schema, "poly literal: variable index expected");
        int vi = text[i] - '0';
        ++i;
        require(vi >= 1 && vi <= nvars && vi <= Poly::kMaxVars, ErrorKind::schema,
                "poly literal: variable out of range");
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          require(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
                  ErrorKind::schema, "poly literal: exponent expected");
          e = text[i] - '0';
          ++i;
        }
        for (int r = 0; r < e; ++r) key += Poly::key_t(1) << (4 * (vi - 1));
        any = true;
      } else {
        break;
      }
    }
    require(any, ErrorKind::schema, "poly literal: empty term");
    out = out + Poly::monomial(key, sign > 0 ? coeff : -coeff);
  }
  return out;
}

}  // namespace gencal
