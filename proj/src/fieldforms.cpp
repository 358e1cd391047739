#include "gencal/fieldforms.hpp"

namespace gencal {

PolyForm d(const PolyForm& w) {
  int n = w.dim();
  require(n <= Poly::kMaxVars, ErrorKind::unsupported,
          "field forms are limited to n <= 6");
  PolyForm out(n);
  for (mask_t K = 0; K < mask_t(w.size()); ++K) {
    const Poly& c = w[K];
    if (c.is_zero()) continue;
    for (int i = 0; i < n; ++i) {
      mask_t bi = mask_t(1) << i;
      if (K & bi) continue;
      Poly dc = c.d(i);
      if (dc.is_zero()) continue;
      int s = wedge_sign(bi, K);
      out[K | bi] = out[K | bi] + (s > 0 ? dc : -dc);
    }
  }
  return out;
}

PolyForm d_H(const PolyForm& w, const PolyForm& H) {
  for (mask_t K = 0; K < mask_t(H.size()); ++K)
    require(popcount(K) == 3 || H[K].is_zero(), ErrorKind::invalid_argument,
            "d_H: twist must be a 3-form");
  return d(w) + wedge(H, w);
}

PolyForm lie_coordinate(int i, const PolyForm& w) {
  require(i >= 0 && i < w.dim(), ErrorKind::invalid_argument,
          "lie derivative: coordinate index out of range");
  PolyForm out(w.dim());
  for (mask_t K = 0; K < mask_t(w.size()); ++K)
    if (!w[K].is_zero()) out[K] = w[K].d(i);
  return out;
}

PolyForm interior_poly(const std::vector<Poly>& X, const PolyForm& w) {
  return interior(X, w);
}

namespace {

std::vector<Poly> lie_bracket(const std::vector<Poly>& X, const std::vector<Poly>& Y) {
  int n = static_cast<int>(X.size());
  std::vector<Poly> out(n);
  for (int i = 0; i < n; ++i) {
    Poly acc;
    for (int j = 0; j < n; ++j) acc = acc + X[j] * Y[i].d(j) - Y[j] * X[i].d(j);
    out[i] = acc;
  }
  return out;
}

PolyForm one_form_of(const std::vector<Poly>& xi, int n) {
  PolyForm f(n);
  for (int i = 0; i < n; ++i) f[mask_t(1) << i] = xi[i];
  return f;
}

std::vector<Poly> coeffs_of_one_form(const PolyForm& f) {
  std::vector<Poly> xi(f.dim());
  for (int i = 0; i < f.dim(); ++i) xi[i] = f[mask_t(1) << i];
  return xi;
}

// Cartan formula; valid for arbitrary polynomial fields.
PolyForm lie_general(const std::vector<Poly>& X, const PolyForm& w) {
  return interior(X, d(w)) + d(interior(X, w));
}

}  // namespace

PolyGenVec courant(const PolyGenVec& a, const PolyGenVec& b) {
  require(a.dim() == b.dim(), ErrorKind::dimension_mismatch, "courant: dimensions");
  int n = a.dim();
  PolyGenVec out;
  out.vec = lie_bracket(a.vec, b.vec);
  PolyForm eta = one_form_of(b.covec, n), xi = one_form_of(a.covec, n);
  // L_X eta - L_Y xi - 1/2 d( X -| eta - Y -| xi )
  PolyForm covec = lie_general(a.vec, eta) - lie_general(b.vec, xi);
  PolyForm corr = d(interior(a.vec, eta) - interior(b.vec, xi));
  Poly half = Poly(Rational(1, 2));
  covec = covec - corr * half;
  out.covec = coeffs_of_one_form(covec);
  return out;
}

QForm eval_form(const PolyForm& w, const std::vector<Rational>& x) {
  std::vector<Rational> xfull(Poly::kMaxVars, Rational(0));
  for (size_t i = 0; i < x.size() && i < xfull.size(); ++i) xfull[i] = x[i];
  QForm out(w.dim());
  for (mask_t K = 0; K < mask_t(w.size()); ++K)
    if (!w[K].is_zero()) out[K] = w[K].eval(xfull);
  return out;
}

namespace {

bool is_basic_and_invariant(const PolyForm& w, int n) {
  mask_t bn = mask_t(1) << (n - 1);
  for (mask_t K = 0; K < mask_t(w.size()); ++K) {
    if (w[K].is_zero()) continue;
    if (K & bn) return false;                 // contains dx^n
    if (!w[K].d(n - 1).is_zero()) return false;  // depends on x_n
  }
  return true;
}

}  // namespace

std::pair<bool, bool> tdual_intertwine_check(const PolyForm& rho0, const PolyForm& rho1,
                                             const PolyForm& phi0, const PolyForm& phi1,
                                             const Poly& phitilde, const PolyForm& theta) {
  int n = rho0.dim();
  require(rho1.dim() == n && phi0.dim() == n && phi1.dim() == n && theta.dim() == n,
          ErrorKind::dimension_mismatch, "intertwine check: dimensions");
  require(is_basic_and_invariant(rho0, n) && is_basic_and_invariant(rho1, n) &&
              is_basic_and_invariant(phi0, n) && is_basic_and_invariant(phi1, n),
          ErrorKind::invalid_argument, "intertwine check: inputs must be basic and invariant");
  require(phitilde.d(n - 1).is_zero(), ErrorKind::invalid_argument,
          "intertwine check: dilaton must be invariant");
  // theta = dx^n + basic invariant piece
  mask_t bn = mask_t(1) << (n - 1);
  PolyForm theta_basic = theta;
  require(theta[bn] == Poly(1), ErrorKind::invalid_argument,
          "intertwine check: theta must have unit dx^n component");
  theta_basic[bn] = Poly();
  require(is_basic_and_invariant(theta_basic, n), ErrorKind::invalid_argument,
          "intertwine check: theta must be invariant with basic remainder");

  PolyForm dphit(n);
  {
    PolyForm f0(n);
    f0[0] = phitilde;
    dphit = d(f0);
  }
  PolyForm dth = d(theta);

  auto holds = [&](const PolyForm& r0, const PolyForm& r1, const PolyForm& p0,
                   const PolyForm& p1) {
    PolyForm lhs0 = -wedge(dphit, r0) + d(r0) + wedge(dth, r1);
    PolyForm lhs1 = wedge(dphit, r1) - d(r1);
    return lhs0.equals(p0, 0.0) && lhs1.equals(p1, 0.0);
  };

  bool direct = holds(rho0, rho1, phi0, phi1);
  // the dual side runs the same equations on the transported data
  bool dualised = holds(-rho1, -rho0, phi1, phi0);
  return {direct, dualised};
}

PolyForm parse_polyform(const std::string& text, int dim) {
  // split into +/- separated terms; each term is poly-factors times an
  // optional basis monomial e<indices>
  PolyForm out(dim);
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
      require(first, ErrorKind::schema, "polyform literal: expected sign");
    }
    first = false;
    skip();
    // collect the scalar factors up to an 'e' monomial
    std::string scalar_part;
    mask_t K = 0;
    bool have_mono = false;
    while (i < text.size() && text[i] != '+' && text[i] != '-') {
      if (text[i] == 'e' && i + 1 < text.size() &&
          ((text[i + 1] >= '1' && text[i + 1] <= '9'))) {
        ++i;
        int prev = 0;
        while (i < text.size() && text[i] >= '1' && text[i] <= '9') {
          int v = text[i] - '0';
          require(v <= dim, ErrorKind::schema, "polyform literal: index exceeds dimension");
          require(v > prev, ErrorKind::schema, "polyform literal: indices must ascend");
          K |= mask_t(1) << (v - 1);
          prev = v;
          ++i;
        }
        have_mono = true;
        skip();
        break;
      }
      scalar_part += text[i];
      ++i;
    }
    // strip trailing '*'
    while (!scalar_part.empty() &&
           (scalar_part.back() == '*' || std::isspace(static_cast<unsigned char>(scalar_part.back()))))
      scalar_part.pop_back();
    Poly coeff = scalar_part.empty() ? Poly(1) : parse_poly(scalar_part, dim);
    (void)have_mono;
    out[K] = out[K] + (sign > 0 ? coeff : -coeff);
  }
  return out;
}

std::string print_polyform(const PolyForm& f) {
  std::string out;
  for (mask_t K = 0; K < mask_t(f.size()); ++K) {
    if (f[K].is_zero()) continue;
    std::string term = "(" + f[K].str() + ")";
    if (K != 0) {
      term += "*e";
      for (int i = 0; i < f.dim(); ++i)
        if (K & (mask_t(1) << i)) term += char(i < 9 ? '1' + i : 'a' + i - 9);
    }
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace gencal
