#include "gencal/form.hpp"

#include <cctype>
#include <cstdio>

namespace gencal {

namespace {

int index_char_value(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'c') return 10 + (c - 'a');
  return -1;
}

char index_value_char(int v) { return v <= 9 ? char('0' + v) : char('a' + v - 10); }

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() const { return s[i]; }
  bool starts_monomial() const {
    return i < s.size() && s[i] == 'e' && i + 1 < s.size() &&
           index_char_value(s[i + 1]) >= 0;
  }
};

// e<indices>, strictly ascending; 1..9,a,b,c for 10..12
mask_t parse_monomial(Cursor& c, int dim) {
  ++c.i;  // 'e'
  mask_t K = 0;
  int prev = 0;
  while (c.i < c.s.size()) {
    int v = index_char_value(c.s[c.i]);
    if (v < 0) break;
    require(v <= dim, ErrorKind::schema, "form literal: index exceeds dimension");
    require(v > prev, ErrorKind::schema, "form literal: indices must ascend");
    K |= mask_t(1) << (v - 1);
    prev = v;
    ++c.i;
  }
  return K;
}

// numbers: 2, 0.5, 3/4, 1.5E-3  (scientific exponent uses capital E; a bare
// lowercase 'e' always starts a basis monomial)
bool parse_number(Cursor& c, std::string& out) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size()) {
    char ch = c.s[c.i];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '/') {
      ++c.i;
      continue;
    }
    if (ch == 'E') {
      ++c.i;
      if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
      continue;
    }
    break;
  }
  out = c.s.substr(start, c.i - start);
  return !out.empty();
}

template <class S, class NumParse>
FormT<S> parse_generic(const std::string& text, int dim, NumParse num) {
  FormT<S> f(dim);
  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.i;
    } else {
      require(first, ErrorKind::schema, "form literal: expected '+' or '-'");
    }
    first = false;
    require(!c.done(), ErrorKind::schema, "form literal: dangling sign");

    S coeff = ScalarTraits<S>::one();
    bool have_coeff = false;
    if (!c.starts_monomial()) {
      std::string tok;
      require(parse_number(c, tok), ErrorKind::schema, "form literal: expected number");
      coeff = num(tok);
      have_coeff = true;
      c.skip_ws();
      if (c.i < c.s.size() && c.peek() == '*') ++c.i;
      c.skip_ws();
    }
    mask_t K = 0;
    if (c.starts_monomial()) {
      K = parse_monomial(c, dim);
    } else {
      require(have_coeff, ErrorKind::schema, "form literal: empty term");
    }
    f[K] += (sign > 0) ? coeff : S(-1) * coeff;
  }
  return f;
}

std::string print_mask(mask_t K) {
  std::string s = "e";
  for (int i = 0; i < kMaxDim; ++i)
    if (K & (mask_t(1) << i)) s += index_value_char(i + 1);
  return s;
}

template <class S, class Fmt>
std::string print_generic(const FormT<S>& f, Fmt fmt, double tol) {
  std::string out;
  for (mask_t K = 0; K < mask_t(f.size()); ++K) {
    if (ScalarTraits<S>::is_zero(f[K], tol)) continue;
    std::string coeff;
    int sign;
    fmt(f[K], coeff, sign);
    if (out.empty()) {
      if (sign < 0) out += "-";
    } else {
      out += (sign < 0) ? " - " : " + ";
    }
    if (K == 0)
      out += coeff;
    else if (coeff == "1")
      out += print_mask(K);
    else
      out += coeff + "*" + print_mask(K);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Form parse_form(const std::string& text, int dim) {
  return parse_generic<double>(text, dim, [](const std::string& tok) {
    require(tok.find('/') == std::string::npos, ErrorKind::schema,
            "rational literal in float mode");
    return std::stod(tok);
  });
}

QForm parse_form_exact(const std::string& text, int dim) {
  return parse_generic<Rational>(text, dim, [](const std::string& tok) {
    require(tok.find('.') == std::string::npos && tok.find('E') == std::string::npos,
            ErrorKind::schema, "decimal literal in exact mode");
    return Rational(tok);
  });
}

std::string print_form(const Form& f) {
  return print_generic(
      f,
      [](double v, std::string& coeff, int& sign) {
        sign = (v < 0) ? -1 : 1;
        coeff = to_string_double(std::abs(v));
      },
      0.0);
}

std::string print_form(const QForm& f) {
  return print_generic(
      f,
      [](const Rational& v, std::string& coeff, int& sign) {
        sign = (v < 0) ? -1 : 1;
        Rational a = v < 0 ? Rational(-v) : v;
        coeff = a.str();
      },
      0.0);
}

std::string print_form(const CForm& f, double tol) {
  return print_generic(
      f,
      [tol](const Complex& v, std::string& coeff, int& sign) {
        if (std::abs(v.imag()) <= tol) {
          sign = (v.real() < 0) ? -1 : 1;
          coeff = to_string_double(std::abs(v.real()));
        } else if (std::abs(v.real()) <= tol) {
          sign = (v.imag() < 0) ? -1 : 1;
          coeff = to_string_double(std::abs(v.imag())) + "i";
        } else {
          sign = 1;
          coeff = "(" + to_string_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
                  to_string_double(std::abs(v.imag())) + "i)";
        }
      },
      tol);
}

}  // namespace gencal
