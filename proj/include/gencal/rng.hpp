#pragma once

#include <random>

#include "gencal/dirac.hpp"
#include "gencal/form.hpp"
#include "gencal/linalg.hpp"

namespace gencal {

/// Deterministic random data; distributions are hand-rolled on top of
/// mt19937_64 so that streams are identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double unif() {  // [-1, 1)
    return (double(eng_() >> 11) / 9007199254740992.0) * 2.0 - 1.0;
  }
  double unif01() { return double(eng_() >> 11) / 9007199254740992.0; }
  double gauss() {
    // Box-Muller, portable
    double u1 = std::max(1e-300, unif01());
    double u2 = unif01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
  std::uint64_t raw() { return eng_(); }
  int integer(int lo, int hi) {  // inclusive
    return lo + int(eng_() % std::uint64_t(hi - lo + 1));
  }

  Mat spd(int n) {
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = unif();
    Mat g = A.transpose() * A + Mat::identity(n);
    return g;
  }

  Mat skew(int n, double scale = 1.0) {
    Mat B(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        B(i, j) = scale * unif();
        B(j, i) = -B(i, j);
      }
    return B;
  }

  Form form(int n, double scale = 1.0) {
    Form f(n);
    for (mask_t K = 0; K < mask_t(f.size()); ++K) f[K] = scale * unif();
    return f;
  }

  Form form_of_parity(int n, bool even) {
    Form f(n);
    for (mask_t K = 0; K < mask_t(f.size()); ++K)
      if ((popcount(K) % 2 == 0) == even) f[K] = unif();
    return f;
  }

  QForm qform(int n, int denom_cap = 7) {
    QForm f(n);
    for (mask_t K = 0; K < mask_t(f.size()); ++K)
      f[K] = Rational(integer(-9, 9), integer(1, denom_cap));
    return f;
  }

  GenVec genvec(int n) {
    GenVec v;
    v.vec.resize(n);
    v.covec.resize(n);
    for (int i = 0; i < n; ++i) {
      v.vec[i] = unif();
      v.covec[i] = unif();
    }
    return v;
  }

  Mat plane(int n, int k) {  // n x k with independent columns
    while (true) {
      Mat L(n, k);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) L(i, j) = gauss();
      if (k == 0 || rank_of(L, 1e-6) == k) return L;
    }
  }

  CVec spinor(int N) {
    CVec v(N);
    for (int i = 0; i < N; ++i) v[i] = Complex(gauss(), gauss());
    double nrm = std::sqrt(qnorm2(v));
    for (auto& c : v) c /= nrm;
    return v;
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace gencal
