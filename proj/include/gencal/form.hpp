#pragma once

#include <string>
#include <vector>

#include "gencal/bits.hpp"
#include "gencal/errors.hpp"
#include "gencal/linalg.hpp"
#include "gencal/scalar.hpp"

namespace gencal {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 12;

enum class Parity { even, odd, mixed, zero };

/// Mixed-degree exterior form over R^n, coefficients indexed by subsets of
/// {1..n} (bitmasks).  Dense storage: 2^n scalars, n <= 12.
template <class S>
class FormT {
public:
  FormT() : dim_(0) {}
  explicit FormT(int dim) : dim_(dim), c_(size_t(1) << dim, ScalarTraits<S>::zero()) {
    require(dim >= kMinDim && dim <= kMaxDim, ErrorKind::invalid_argument,
            "form dimension out of range [2,12]");
  }
  static FormT scalar(int dim, const S& v) {
    FormT f(dim);
    f.c_[0] = v;
    return f;
  }
  static FormT basis(int dim, mask_t K) {
    FormT f(dim);
    require(K < (mask_t(1) << dim), ErrorKind::invalid_argument, "basis mask out of range");
    f.c_[K] = ScalarTraits<S>::one();
    return f;
  }

  int dim() const { return dim_; }
  size_t size() const { return c_.size(); }
  const S& operator[](mask_t K) const { return c_[K]; }
  S& operator[](mask_t K) { return c_[K]; }

  FormT operator+(const FormT& o) const {
    check_dim(o);
    FormT r(dim_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  FormT operator-(const FormT& o) const {
    check_dim(o);
    FormT r(dim_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  FormT operator*(const S& t) const {
    FormT r(dim_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * t;
    return r;
  }
  FormT operator-() const { return (*this) * S(-1); }

  bool is_zero(double tol = 1e-9) const {
    for (const auto& v : c_)
      if (!ScalarTraits<S>::is_zero(v, tol)) return false;
    return true;
  }
  bool equals(const FormT& o, double tol = 1e-9) const {
    if (dim_ != o.dim_) return false;
    return (*this - o).is_zero(tol);
  }

  Parity parity(double tol = 1e-9) const {
    bool ev = false, od = false;
    for (mask_t K = 0; K < c_.size(); ++K) {
      if (ScalarTraits<S>::is_zero(c_[K], tol)) continue;
      (popcount(K) & 1) ? od = true : ev = true;
    }
    if (ev && od) return Parity::mixed;
    if (ev) return Parity::even;
    if (od) return Parity::odd;
    return Parity::zero;
  }

  int max_degree(double tol = 1e-9) const {
    int d = -1;
    for (mask_t K = 0; K < c_.size(); ++K)
      if (!ScalarTraits<S>::is_zero(c_[K], tol)) d = std::max(d, popcount(K));
    return d;
  }

  FormT degree_part(int p) const {
    FormT r(dim_);
    for (mask_t K = 0; K < c_.size(); ++K)
      if (popcount(K) == p) r.c_[K] = c_[K];
    return r;
  }
  FormT even_part() const {
    FormT r(dim_);
    for (mask_t K = 0; K < c_.size(); ++K)
      if (!(popcount(K) & 1)) r.c_[K] = c_[K];
    return r;
  }
  FormT odd_part() const { return *this - even_part(); }

private:
  void check_dim(const FormT& o) const {
    require(dim_ == o.dim_, ErrorKind::dimension_mismatch, "form dimensions differ");
  }
  int dim_;
  std::vector<S> c_;
};

using Form = FormT<double>;
using CForm = FormT<Complex>;
using QForm = FormT<Rational>;

/// Generalised vector X + xi in T + T*.
template <class S>
struct GenVecT {
  std::vector<S> vec;    // X
  std::vector<S> covec;  // xi
  int dim() const { return static_cast<int>(vec.size()); }
};

using GenVec = GenVecT<double>;
using GenVecQ = GenVecT<Rational>;

/// Contraction inner product (X+xi, Y+eta) = (xi(Y) + eta(X)) / 2, so that
/// (v,v) = xi(X).
template <class S>
S gpair(const GenVecT<S>& a, const GenVecT<S>& b) {
  S s = ScalarTraits<S>::zero();
  for (int i = 0; i < a.dim(); ++i)
    s += a.covec[i] * b.vec[i] + b.covec[i] * a.vec[i];
  return s / S(2);
}

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

template <class S>
FormT<S> wedge(const FormT<S>& a, const FormT<S>& b) {
  require(a.dim() == b.dim(), ErrorKind::dimension_mismatch, "wedge: dimensions differ");
  FormT<S> r(a.dim());
  const mask_t full = (mask_t(1) << a.dim()) - 1;
  for (mask_t I = 0; I <= full; ++I) {
    const S& ai = a[I];
    if (ScalarTraits<S>::is_zero(ai, 0.0)) continue;
    // enumerate subsets J of the complement of I
    mask_t comp = full & ~I;
    mask_t J = comp;
    while (true) {
      const S& bj = b[J];
      if (!ScalarTraits<S>::is_zero(bj, 0.0)) {
        int s = wedge_sign(I, J);
        r[I | J] += (s > 0) ? ai * bj : S(-1) * ai * bj;
      }
      if (J == 0) break;
      J = (J - 1) & comp;
    }
  }
  return r;
}

/// Interior product X -| a for a plain vector X (coordinates X^i).
template <class S>
FormT<S> interior(const std::vector<S>& X, const FormT<S>& a) {
  require(static_cast<int>(X.size()) == a.dim(), ErrorKind::dimension_mismatch,
          "interior: dimensions differ");
  FormT<S> r(a.dim());
  for (mask_t K = 0; K < mask_t(a.size()); ++K) {
    const S& c = a[K];
    if (ScalarTraits<S>::is_zero(c, 0.0)) continue;
    mask_t rest = K;
    while (rest) {
      mask_t low = rest & (rest - 1);
      int bit = std::countr_zero(rest ^ low);
      rest = low;
      if (ScalarTraits<S>::is_zero(X[bit], 0.0)) continue;
      int s = contract_sign(bit, K);
      S term = X[bit] * c;
      r[K & ~(mask_t(1) << bit)] += (s > 0) ? term : S(-1) * term;
    }
  }
  return r;
}

/// Wedge with the 1-form xi (coordinates xi_i).
template <class S>
FormT<S> one_form_wedge(const std::vector<S>& xi, const FormT<S>& a) {
  require(static_cast<int>(xi.size()) == a.dim(), ErrorKind::dimension_mismatch,
          "one_form_wedge: dimensions differ");
  FormT<S> r(a.dim());
  for (mask_t K = 0; K < mask_t(a.size()); ++K) {
    const S& c = a[K];
    if (ScalarTraits<S>::is_zero(c, 0.0)) continue;
    for (int i = 0; i < a.dim(); ++i) {
      mask_t bi = mask_t(1) << i;
      if (K & bi) continue;
      if (ScalarTraits<S>::is_zero(xi[i], 0.0)) continue;
      int s = wedge_sign(bi, K);
      S term = xi[i] * c;
      r[K | bi] += (s > 0) ? term : S(-1) * term;
    }
  }
  return r;
}

/// Clifford action of X+xi on a form: (X+xi) . a = -X -| a + xi ^ a.
/// Squares to -(v,v) id.
template <class S>
FormT<S> spinor_action(const GenVecT<S>& v, const FormT<S>& a) {
  require(v.dim() == a.dim(), ErrorKind::dimension_mismatch,
          "spinor_action: dimensions differ");
  return one_form_wedge(v.covec, a) - interior(v.vec, a);
}

template <class S>
FormT<S> hat(const FormT<S>& a) {
  FormT<S> r(a.dim());
  for (mask_t K = 0; K < mask_t(a.size()); ++K) {
    int s = hat_sign(popcount(K));
    r[K] = (s > 0) ? a[K] : S(-1) * a[K];
  }
  return r;
}

template <class S>
FormT<S> tilde(const FormT<S>& a) {
  FormT<S> r(a.dim());
  for (mask_t K = 0; K < mask_t(a.size()); ++K) {
    int s = tilde_sign(popcount(K));
    r[K] = (s > 0) ? a[K] : S(-1) * a[K];
  }
  return r;
}

/// Spin(n,n)-invariant pairing <a,b> = [a ^ hat(b)]^n against e^{1..n}.
template <class S>
S mukai(const FormT<S>& a, const FormT<S>& b) {
  require(a.dim() == b.dim(), ErrorKind::dimension_mismatch, "mukai: dimensions differ");
  const mask_t full = (mask_t(1) << a.dim()) - 1;
  S acc = ScalarTraits<S>::zero();
  for (mask_t I = 0; I <= full; ++I) {
    const S& ai = a[I];
    if (ScalarTraits<S>::is_zero(ai, 0.0)) continue;
    mask_t J = full & ~I;
    const S& bj = b[J];
    if (ScalarTraits<S>::is_zero(bj, 0.0)) continue;
    int s = wedge_sign(I, J) * hat_sign(popcount(J));
    S term = ai * bj;
    acc += (s > 0) ? term : S(-1) * term;
  }
  return acc;
}

/// exp(B) for a homogeneous 2-form B, as a finite wedge series.
template <class S>
FormT<S> exp_two_form(const FormT<S>& B) {
  for (mask_t K = 0; K < mask_t(B.size()); ++K)
    require(popcount(K) == 2 || ScalarTraits<S>::is_zero(B[K], 0.0),
            ErrorKind::invalid_argument, "exp_two_form: not a pure 2-form");
  FormT<S> r = FormT<S>::scalar(B.dim(), ScalarTraits<S>::one());
  FormT<S> pw = r;
  S fact = ScalarTraits<S>::one();
  for (int k = 1; 2 * k <= B.dim(); ++k) {
    pw = wedge(pw, B);
    fact = fact * S(k);
    if (pw.is_zero(0.0)) break;
    FormT<S> term(B.dim());
    for (mask_t K = 0; K < mask_t(pw.size()); ++K) term[K] = pw[K] / fact;
    r = r + term;
  }
  return r;
}

/// Pullback along the linear map given by the n_old x n_new matrix A
/// (columns = images of the new basis vectors): (A^* a)_J over the new space.
template <class S>
FormT<S> pullback(const DMat<S>& A, const FormT<S>& a) {
  require(A.rows() == a.dim(), ErrorKind::dimension_mismatch, "pullback: row count");
  int nn = A.cols();
  require(nn >= kMinDim && nn <= kMaxDim, ErrorKind::invalid_argument,
          "pullback: target dimension out of range");
  // substitute e^i -> sum_j A_ij f^j degree by degree
  std::vector<FormT<S>> images;  // pullback of each old e^i as a 1-form
  images.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    FormT<S> im(nn);
    for (int j = 0; j < nn; ++j) im[mask_t(1) << j] = A(i, j);
    images.push_back(im);
  }
  FormT<S> r(nn);
  for (mask_t K = 0; K < mask_t(a.size()); ++K) {
    const S& c = a[K];
    if (ScalarTraits<S>::is_zero(c, 0.0)) continue;
    FormT<S> term = FormT<S>::scalar(nn, c);
    mask_t rest = K;
    while (rest) {
      mask_t low = rest & (rest - 1);
      int bit = std::countr_zero(rest ^ low);
      rest = low;
      term = wedge(term, images[bit]);
      if (term.is_zero(0.0)) break;
    }
    r = r + term;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Metric-dependent operations
// ---------------------------------------------------------------------------

namespace detail {
template <class S>
S minor_det(const DMat<S>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  int p = static_cast<int>(rows.size());
  DMat<S> sub(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) sub(i, j) = m(rows[i], cols[j]);
  return det(sub);
}

inline std::vector<int> mask_bits(mask_t K) {
  std::vector<int> v;
  while (K) {
    mask_t low = K & (K - 1);
    v.push_back(std::countr_zero(K ^ low));
    K = low;
  }
  return v;
}

template <class S> S sqrt_scalar(const S& x);
template <> inline double sqrt_scalar<double>(const double& x) { return std::sqrt(x); }
template <> inline Rational sqrt_scalar<Rational>(const Rational& x) { return sqrt_exact(x); }
}  // namespace detail

/// Metric induced by g on mixed forms: g(e^I, e^J) = det (g^{-1})[I,J].
template <class S>
S form_inner(const DMat<S>& g, const FormT<S>& a, const FormT<S>& b) {
  require(g.rows() == a.dim() && a.dim() == b.dim(), ErrorKind::dimension_mismatch,
          "form_inner: dimensions differ");
  DMat<S> gi = inverse(g);
  S acc = ScalarTraits<S>::zero();
  for (mask_t I = 0; I < mask_t(a.size()); ++I) {
    if (ScalarTraits<S>::is_zero(a[I], 0.0)) continue;
    auto ri = detail::mask_bits(I);
    for (mask_t J = 0; J < mask_t(b.size()); ++J) {
      if (popcount(J) != popcount(I)) continue;
      if (ScalarTraits<S>::is_zero(b[J], 0.0)) continue;
      auto rj = detail::mask_bits(J);
      if (ri.empty())
        acc += a[I] * b[J];
      else
        acc += a[I] * b[J] * detail::minor_det(gi, ri, rj);
    }
  }
  return acc;
}

/// Hodge star for SPD g, defined by b ^ star(a) = g(b,a) vol_g.
template <class S>
FormT<S> hodge_star(const DMat<S>& g, const FormT<S>& a) {
  int n = a.dim();
  require(g.rows() == n && g.cols() == n, ErrorKind::dimension_mismatch,
          "hodge_star: metric shape");
  S dg = det(g);
  require(!ScalarTraits<S>::is_zero(dg, 0.0), ErrorKind::not_spd, "hodge_star: det g == 0");
  S vol = detail::sqrt_scalar<S>(dg);
  DMat<S> gi = inverse(g);
  const mask_t full = (mask_t(1) << n) - 1;
  FormT<S> r(n);
  for (mask_t I = 0; I <= full; ++I) {
    if (ScalarTraits<S>::is_zero(a[I], 0.0)) continue;
    auto ri = detail::mask_bits(I);
    for (mask_t J = 0; J <= full; ++J) {
      if (popcount(J) != popcount(I)) continue;
      S gij = ri.empty() ? ScalarTraits<S>::one()
                         : detail::minor_det(gi, detail::mask_bits(J), ri);
      if (ScalarTraits<S>::is_zero(gij, 0.0)) continue;
      int s = wedge_sign(J, full & ~J);
      S term = a[I] * gij * vol;
      r[full & ~J] += (s > 0) ? term : S(-1) * term;
    }
  }
  return r;
}

/// Riemannian volume form of g as an n-form.
template <class S>
FormT<S> volume_form(const DMat<S>& g, int n) {
  FormT<S> one = FormT<S>::scalar(n, ScalarTraits<S>::one());
  return hodge_star(g, one);
}

// ---------------------------------------------------------------------------
// Literals
// ---------------------------------------------------------------------------

/// Parse the form literal syntax, e.g. "1 + 2*e12 - 0.5*e134".  Indices are
/// the characters 1..9,a,b,c (10..12), strictly ascending.
Form parse_form(const std::string& text, int dim);
QForm parse_form_exact(const std::string& text, int dim);

std::string print_form(const Form& f);
std::string print_form(const QForm& f);
std::string print_form(const CForm& f, double tol = 1e-12);

}  // namespace gencal
