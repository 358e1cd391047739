#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "gencal/errors.hpp"
#include "gencal/scalar.hpp"

namespace gencal {

/// Minimal dense matrix over an arbitrary scalar ring.  Sizes here are tiny
/// (n <= 12, 2n x 2n at worst), so everything is straightforward Gauss.
template <class S>
class DMat {
public:
  DMat() : r_(0), c_(0) {}
  DMat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, ScalarTraits<S>::zero()) {}
  static DMat identity(int n) {
    DMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  DMat transpose() const {
    DMat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DMat operator*(const DMat& o) const {
    require(c_ == o.r_, ErrorKind::dimension_mismatch, "matrix product shape");
    DMat p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const S& aik = (*this)(i, k);
        if (ScalarTraits<S>::is_zero(aik, 0.0)) continue;
        for (int j = 0; j < o.c_; ++j) p(i, j) += aik * o(k, j);
      }
    return p;
  }

  std::vector<S> operator*(const std::vector<S>& x) const {
    require(static_cast<int>(x.size()) == c_, ErrorKind::dimension_mismatch, "matvec shape");
    std::vector<S> y(r_, ScalarTraits<S>::zero());
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  DMat operator+(const DMat& o) const {
    DMat s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
  }
  DMat operator-(const DMat& o) const {
    DMat s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
  }
  DMat operator*(const S& t) const {
    DMat s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * t;
    return s;
  }
  DMat operator-() const { return (*this) * S(-1); }

  std::vector<S> col(int j) const {
    std::vector<S> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const std::vector<S>& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

private:
  int r_, c_;
  std::vector<S> a_;
};

using Mat = DMat<double>;
using MatQ = DMat<Rational>;

template <class S>
S det(DMat<S> m) {
  require(m.rows() == m.cols(), ErrorKind::dimension_mismatch, "det of non-square");
  int n = m.rows();
  S d = ScalarTraits<S>::one();
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    double best = 0.0;
    for (int i = k; i < n; ++i) {
      double a = ScalarTraits<S>::abs(m(i, k));
      if (a > best) { best = a; piv = i; }
    }
    if (piv < 0 || ScalarTraits<S>::is_zero(m(piv, k), 0.0)) return ScalarTraits<S>::zero();
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      d = -d;
    }
    d = d * m(k, k);
    for (int i = k + 1; i < n; ++i) {
      S f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return d;
}

template <class S>
DMat<S> inverse(const DMat<S>& m0) {
  require(m0.rows() == m0.cols(), ErrorKind::dimension_mismatch, "inverse of non-square");
  int n = m0.rows();
  DMat<S> m = m0, inv = DMat<S>::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    double best = 0.0;
    for (int i = k; i < n; ++i) {
      double a = ScalarTraits<S>::abs(m(i, k));
      if (a > best) { best = a; piv = i; }
    }
    require(piv >= 0 && !ScalarTraits<S>::is_zero(m(piv, k), 0.0),
            ErrorKind::invalid_argument, "singular matrix");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    S p = m(k, k);
    for (int j = 0; j < n; ++j) { m(k, j) = m(k, j) / p; inv(k, j) = inv(k, j) / p; }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      S f = m(i, k);
      if (ScalarTraits<S>::is_zero(f, 0.0)) continue;
      for (int j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(k, j);
        inv(i, j) = inv(i, j) - f * inv(k, j);
      }
    }
  }
  return inv;
}

template <class S>
struct KernelResult {
  DMat<S> basis;       // cols x nullity
  int rank = 0;
  double pivot_gap = 0.0;  // smallest kept pivot / largest pivot (float mode)
};

/// Kernel of an r x c matrix by column elimination; pivoting by magnitude.
/// In float mode a column is declared dependent when its pivot falls below
/// tol * (largest pivot seen); the exact kernel uses honest zero tests.
template <class S>
KernelResult<S> kernel(const DMat<S>& A, double tol = 1e-9) {
  int r = A.rows(), c = A.cols();
  DMat<S> m = A;
  DMat<S> E = DMat<S>::identity(c);  // column ops tracked here
  std::vector<bool> dead(c, false);
  std::vector<bool> rowused(r, false);
  double largest = 0.0, smallest_kept = 0.0;
  int rank = 0;
  for (int step = 0; step < c; ++step) {
    // find the largest remaining entry over live columns / unused rows
    int pi = -1, pj = -1;
    double best = 0.0;
    for (int j = 0; j < c; ++j) {
      if (dead[j]) continue;
      for (int i = 0; i < r; ++i) {
        if (rowused[i]) continue;
        double a = ScalarTraits<S>::abs(m(i, j));
        if (a > best) { best = a; pi = i; pj = j; }
      }
    }
    if (pi < 0) break;
    if constexpr (!ScalarTraits<S>::exact) {
      if (largest > 0.0 && best <= tol * largest) break;
    } else {
      if (ScalarTraits<S>::is_zero(m(pi, pj), 0.0)) break;
    }
    largest = std::max(largest, best);
    smallest_kept = best;
    rowused[pi] = true;
    dead[pj] = true;
    ++rank;
    S p = m(pi, pj);
    for (int j = 0; j < c; ++j) {
      if (j == pj || dead[j]) continue;
      S f = m(pi, j) / p;
      if (ScalarTraits<S>::is_zero(f, 0.0)) continue;
      for (int i = 0; i < r; ++i) m(i, j) = m(i, j) - f * m(i, pj);
      for (int i = 0; i < c; ++i) E(i, j) = E(i, j) - f * E(i, pj);
    }
  }
  KernelResult<S> res;
  res.rank = rank;
  res.pivot_gap = (largest > 0.0) ? smallest_kept / largest : 0.0;
  res.basis = DMat<S>(c, c - rank);
  int k = 0;
  for (int j = 0; j < c; ++j)
    if (!dead[j]) {
      for (int i = 0; i < c; ++i) res.basis(i, k) = E(i, j);
      ++k;
    }
  return res;
}

template <class S>
int rank_of(const DMat<S>& A, double tol = 1e-9) {
  return kernel(A, tol).rank;
}

/// Cholesky factor L (lower) with g = L L^T; fails if g is not SPD.
inline Mat cholesky(const Mat& g) {
  int n = g.rows();
  require(g.cols() == n, ErrorKind::not_spd, "metric must be square");
  Mat L(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      if (i == j) {
        require(s > 0.0, ErrorKind::not_spd, "metric not positive definite");
        L(i, i) = std::sqrt(s);
      } else {
        L(i, j) = s / L(j, j);
      }
    }
  }
  return L;
}

inline bool is_symmetric(const Mat& m, double tol = 1e-12) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

inline bool is_skew(const Mat& m, double tol = 1e-12) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (std::abs(m(i, j) + m(j, i)) > tol) return false;
  return true;
}

/// Exact SPD test by leading principal minors (Sylvester).
inline bool is_spd_exact(const MatQ& g) {
  int n = g.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (g(i, j) != g(j, i)) return false;
  for (int k = 1; k <= n; ++k) {
    MatQ lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(i, j) = g(i, j);
    if (det(lead) <= 0) return false;
  }
  return true;
}

/// g-orthonormalise the columns of V (modified Gram-Schmidt).  Returns an
/// n x k matrix with U^T g U = Id; orientation of the column span is kept.
inline Mat gram_schmidt(const Mat& g, const Mat& V) {
  int n = V.rows(), k = V.cols();
  Mat U(n, k);
  for (int j = 0; j < k; ++j) {
    std::vector<double> v = V.col(j);
    for (int p = 0; p < j; ++p) {
      std::vector<double> u = U.col(p);
      std::vector<double> gu = g * u;
      double proj = 0.0;
      for (int i = 0; i < n; ++i) proj += v[i] * gu[i];
      for (int i = 0; i < n; ++i) v[i] -= proj * u[i];
    }
    std::vector<double> gv = g * v;
    double nrm2 = 0.0;
    for (int i = 0; i < n; ++i) nrm2 += v[i] * gv[i];
    require(nrm2 > 1e-18, ErrorKind::invalid_argument, "degenerate column span");
    double inv = 1.0 / std::sqrt(nrm2);
    for (int i = 0; i < n; ++i) U(i, j) = v[i] * inv;
  }
  return U;
}

}  // namespace gencal
