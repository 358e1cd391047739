#include "gencal/purespinor.hpp"

#include <cmath>

namespace gencal {

namespace {

std::vector<double> covector(const Mat& g, const std::vector<double>& v) {
  return g * v;
}

Form one_form(int n, const std::vector<double>& xi) {
  Form f(n);
  for (int i = 0; i < n; ++i) f[mask_t(1) << i] = xi[i];
  return f;
}

// F components in the g-orthonormal basis U of span(L): F_U = T^{-T} F T^{-1}
// with T = U^T g L the change of basis.
Mat f_in_ortho_basis(const Mat& g, const Mat& L, const Mat& F, const Mat& U) {
  Mat T = U.transpose() * g * L;
  Mat Ti = inverse(T);
  return Ti.transpose() * F * Ti;
}

}  // namespace

Form plane_volume_form(const Mat& g, const Mat& Lortho) {
  int n = Lortho.rows(), k = Lortho.cols();
  Form vol = Form::scalar(n, 1.0);
  for (int a = 0; a < k; ++a)
    vol = wedge(vol, one_form(n, covector(g, Lortho.col(a))));
  return vol;
}

Form extend_two_form(const Mat& g, const IsotropicPair& p) {
  int n = p.ambient(), k = p.dim();
  Form out(n);
  if (k < 2) return out;
  require(is_skew(p.F, 1e-9), ErrorKind::not_skew, "pair: F must be skew");
  Mat U = gram_schmidt(g, p.L);
  Mat FU = f_in_ortho_basis(g, p.L, p.F, U);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (FU(a, b) == 0.0) continue;
      Form w = wedge(one_form(n, covector(g, U.col(a))), one_form(n, covector(g, U.col(b))));
      out = out + w * FU(a, b);
    }
  return out;
}

Form tau_from_pair(const IsotropicPair& p, const Mat& g) {
  int n = p.ambient(), k = p.dim();
  require(n == g.rows(), ErrorKind::dimension_mismatch, "tau_from_pair: dimensions");
  if (k == 0) {
    Form tau = hat(hodge_star(g, Form::scalar(n, 1.0)));
    return tau * double(p.orientation);
  }
  Mat U = gram_schmidt(g, p.L);  // throws on degenerate L
  Form volL = plane_volume_form(g, U) * double(p.orientation);
  Form base = hat(hodge_star(g, volL));
  Form F2 = extend_two_form(g, p);
  return wedge(exp_two_form(F2), base);
}

PureSpinor annihilator(const Form& tau, double tol) {
  require(!tau.is_zero(0.0), ErrorKind::invalid_argument, "annihilator of zero spinor");
  int n = tau.dim();
  DMat<double> A(int(tau.size()), 2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    GenVec v;
    v.vec.assign(n, 0.0);
    v.covec.assign(n, 0.0);
    if (j < n)
      v.vec[j] = 1.0;
    else
      v.covec[j - n] = 1.0;
    Form img = spinor_action(v, tau);
    for (mask_t K = 0; K < mask_t(tau.size()); ++K) A(int(K), j) = img[K];
  }
  auto ker = kernel(A, tol);
  PureSpinor ps;
  ps.tau = tau;
  ps.annihilator = ker.basis;
  ps.pivot_gap = ker.pivot_gap;
  // isotropy check (always holds in theory; guards the tolerance choice)
  for (int a = 0; a < ker.basis.cols(); ++a)
    for (int b = a; b < ker.basis.cols(); ++b) {
      double pr = 0.0, na = 0.0, nb = 0.0;
      for (int i = 0; i < n; ++i) {
        pr += ker.basis(i, a) * ker.basis(n + i, b) + ker.basis(i, b) * ker.basis(n + i, a);
        na += ker.basis(i, a) * ker.basis(i, a) + ker.basis(n + i, a) * ker.basis(n + i, a);
        nb += ker.basis(i, b) * ker.basis(i, b) + ker.basis(n + i, b) * ker.basis(n + i, b);
      }
      require(std::abs(0.5 * pr) <= 1e-6 * std::sqrt(na * nb) + 1e-9,
              ErrorKind::not_pure, "annihilator: kernel is not isotropic at tolerance");
    }
  // rank = column rank of the vector-part block
  Mat P(n, ker.basis.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < ker.basis.cols(); ++j) P(i, j) = ker.basis(i, j);
  ps.rank = rank_of(P, 1e-7);
  return ps;
}

int rank_of_spinor(const Form& tau, double tol) {
  PureSpinor ps = annihilator(tau, tol);
  require(ps.annihilator.cols() == tau.dim(), ErrorKind::not_pure,
          "rank: spinor is not pure (annihilator dimension != n)");
  return ps.rank;
}

Factorization factorize(const Form& tau, const Mat& g, double tol) {
  int n = tau.dim();
  PureSpinor ps = annihilator(tau, tol);
  require(ps.annihilator.cols() == n, ErrorKind::not_pure,
          "factorize: spinor is not pure");
  int k = ps.rank;

  Factorization out;
  out.pair.orientation = +1;
  if (k == 0) {
    out.pair.L = Mat(n, 0);
    out.pair.F = Mat(0, 0);
  } else {
    // pick k kernel columns with independent vector parts (greedy pivoting)
    Mat P(n, ps.annihilator.cols());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < ps.annihilator.cols(); ++j) P(i, j) = ps.annihilator(i, j);
    std::vector<int> chosen;
    Mat accum(n, 0);
    for (int j = 0; j < P.cols() && int(chosen.size()) < k; ++j) {
      Mat trial(n, int(chosen.size()) + 1);
      for (size_t c = 0; c < chosen.size(); ++c) trial.set_col(int(c), P.col(chosen[c]));
      trial.set_col(int(chosen.size()), P.col(j));
      if (rank_of(trial, 1e-7) == int(chosen.size()) + 1) chosen.push_back(j);
    }
    require(int(chosen.size()) == k, ErrorKind::not_pure, "factorize: rank extraction failed");
    Mat L(n, k), F(k, k);
    for (int a = 0; a < k; ++a) L.set_col(a, P.col(chosen[a]));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += ps.annihilator(n + i, chosen[a]) * L(i, b);
        F(a, b) = s;  // xi_a(x_b)
      }
    // symmetrise away elimination noise
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        double v = 0.5 * (F(a, b) - F(b, a));
        F(a, b) = v;
        F(b, a) = -v;
      }
    out.pair.L = L;
    out.pair.F = F;
  }

  Form ref = tau_from_pair(out.pair, g);
  mask_t best = 0;
  double mx = 0.0;
  for (mask_t K = 0; K < mask_t(ref.size()); ++K)
    if (std::abs(ref[K]) > mx) { mx = std::abs(ref[K]); best = K; }
  require(mx > tol, ErrorKind::not_pure, "factorize: degenerate reference spinor");
  double c = tau[best] / ref[best];
  if (c < 0) {
    out.pair.orientation = -1;
    ref = -ref;
    c = -c;
  }
  double scale = 0.0;
  for (mask_t K = 0; K < mask_t(ref.size()); ++K) scale = std::max(scale, std::abs(tau[K]));
  require((ref * c).equals(tau, 1e-6 * std::max(1.0, scale)), ErrorKind::not_pure,
          "factorize: reconstruction mismatch (spinor not pure at tolerance)");
  out.c = c;
  return out;
}

namespace {

// g-orthonormal completion of the orthonormal columns UL to a basis of T.
Mat complete_frame(const Mat& g, const Mat& UL) {
  int n = UL.rows(), k = UL.cols();
  Mat E(n, n);
  for (int j = 0; j < k; ++j) E.set_col(j, UL.col(j));
  int have = k;
  for (int cand = 0; cand < n && have < n; ++cand) {
    std::vector<double> v(n, 0.0);
    v[cand] = 1.0;
    for (int j = 0; j < have; ++j) {
      std::vector<double> u = E.col(j), gu = g * u;
      double pr = 0.0;
      for (int i = 0; i < n; ++i) pr += v[i] * gu[i];
      for (int i = 0; i < n; ++i) v[i] -= pr * u[i];
    }
    std::vector<double> gv = g * v;
    double nrm2 = 0.0;
    for (int i = 0; i < n; ++i) nrm2 += v[i] * gv[i];
    if (nrm2 > 1e-12) {
      double inv = 1.0 / std::sqrt(nrm2);
      for (int i = 0; i < n; ++i) v[i] *= inv;
      E.set_col(have++, v);
    }
  }
  require(have == n, ErrorKind::invalid_argument, "frame completion failed");
  return E;
}

}  // namespace

Mat gluing_matrix(const GeneralisedMetric& G, const IsotropicPair& p) {
  int n = p.ambient(), k = p.dim();
  require(n == G.dim(), ErrorKind::dimension_mismatch, "gluing_matrix: dimensions");
  const Mat& g = G.g();
  if (k == 0) return -Mat::identity(n);
  Mat UL = gram_schmidt(g, p.L);
  Mat E = complete_frame(g, UL);
  // restricted bilinear forms, components in the adapted orthonormal basis
  Mat jB(k, k), FU = f_in_ortho_basis(g, p.L, p.F, UL);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j2 = 0; j2 < n; ++j2) s += UL(i, a) * G.B()(i, j2) * UL(j2, b);
      jB(a, b) = s;
    }
  Mat num = Mat::identity(k) - jB + FU;
  Mat den = Mat::identity(k) + jB - FU;
  Mat block = num * inverse(den);
  Mat Ra(n, n);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) Ra(a, b) = block(a, b);
  for (int a = k; a < n; ++a) Ra(a, a) = -1.0;
  Mat Einv = E.transpose() * g;  // E g-orthonormal
  return E * Ra * Einv;
}

CliffordElement pin_lift(const GeneralisedMetric& G, const IsotropicPair& p) {
  Form tau = tau_from_pair(p, G.g());
  double nrm = G.qnorm(tau);
  require(nrm > 1e-12, ErrorKind::invalid_argument, "pin_lift: zero norm spinor");
  Form u = wedge(exp_two_form(-G.b_form()), tau) * (1.0 / nrm);
  Form u_frame = pullback(G.frame(), u);
  return CliffordElement::from_form(u_frame, G.frame());
}

Mat frame_to_std(const Mat& U, const Mat& R_frame) {
  return U * R_frame * inverse(U);
}

}  // namespace gencal
