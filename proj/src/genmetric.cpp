#include "gencal/genmetric.hpp"

#include <array>
#include <mutex>
#include <optional>

namespace gencal {

Form skew_to_form(const Mat& Bc) {
  int n = Bc.rows();
  require(is_skew(Bc, 1e-9), ErrorKind::not_skew, "B component matrix must be skew");
  Form f(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      f[(mask_t(1) << i) | (mask_t(1) << j)] = Bc(i, j);
  return f;
}

Mat form_to_skew(const Form& B2) {
  int n = B2.dim();
  Mat Bc(n, n);
  for (mask_t K = 0; K < mask_t(B2.size()); ++K) {
    if (B2[K] == 0.0) continue;
    require(popcount(K) == 2, ErrorKind::invalid_argument, "form_to_skew: not a 2-form");
    int i = std::countr_zero(K);
    int j = std::countr_zero(K ^ (mask_t(1) << i));
    Bc(i, j) = B2[K];
    Bc(j, i) = -B2[K];
  }
  return Bc;
}

namespace {

// Parity-dependent signs relating the V- volume action to star_g o hat
// (o tilde for odd n), resolved once per dimension against the
// Clifford-product route on the straight metric and cached.
struct GtildeSigns {
  int even = 0, odd = 0;
};

Form apply_vminus_chain(const Mat& g, const Mat& Bc, const Mat& U, const Form& rho) {
  int n = rho.dim();
  Form acc = rho;
  for (int k = n - 1; k >= 0; --k) {
    GenVec v;
    v.vec = U.col(k);
    std::vector<double> gu = g * v.vec;
    std::vector<double> bu = Bc.transpose() * v.vec;  // X -| B
    v.covec.resize(n);
    for (int i = 0; i < n; ++i) v.covec[i] = -gu[i] + bu[i];
    acc = spinor_action(v, acc);
  }
  return acc;
}

const GtildeSigns& gtilde_signs(int n) {
  static std::array<GtildeSigns, kMaxDim + 1> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  GtildeSigns& s = cache[n];
  if (s.even == 0) {
    Mat id = Mat::identity(n);
    Mat zero(n, n);
    auto resolve = [&](const Form& probe) {
      Form via_cliff = apply_vminus_chain(id, zero, id, probe);
      Form via_star = hodge_star(id, hat((n & 1) ? tilde(probe) : probe));
      for (mask_t K = 0; K < mask_t(probe.size()); ++K)
        if (std::abs(via_star[K]) > 1e-9)
          return (via_cliff[K] / via_star[K] > 0) ? +1 : -1;
      fail(ErrorKind::invalid_argument, "gtilde sign probe degenerate");
    };
    s.even = resolve(Form::scalar(n, 1.0));
    s.odd = resolve(Form::basis(n, 1));
  }
  return s;
}

}  // namespace

GeneralisedMetric::GeneralisedMetric(const Mat& g, const Mat& Bc)
    : n_(g.rows()), g_(g), Bc_(Bc), bform_(skew_to_form(Bc)) {
  require(g.cols() == n_ && Bc.rows() == n_ && Bc.cols() == n_,
          ErrorKind::dimension_mismatch, "metric matrices must be n x n");
  require(is_symmetric(g, 1e-9), ErrorKind::not_spd, "g must be symmetric");
  Mat L = cholesky(g);  // throws if not SPD
  U_ = inverse(L.transpose());

  // G = e^{2B} G0 e^{-2B}, with e^{2B}: X+xi -> X+(xi + X -| B)
  Mat ginv = inverse(g);
  Mat e2b = Mat::identity(2 * n_), e2bi = Mat::identity(2 * n_), G0(2 * n_, 2 * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      e2b(n_ + i, j) = Bc_(j, i);   // (Bc^T)_{ij}
      e2bi(n_ + i, j) = -Bc_(j, i);
      G0(i, n_ + j) = ginv(i, j);
      G0(n_ + i, j) = g(i, j);
    }
  G_ = e2b * G0 * e2bi;

  Mat G2 = G_ * G_;
  for (int i = 0; i < 2 * n_; ++i)
    for (int j = 0; j < 2 * n_; ++j) {
      double want = (i == j) ? 1.0 : 0.0;
      require(std::abs(G2(i, j) - want) < 1e-8, ErrorKind::not_spd,
              "generalised metric: G^2 != Id");
    }
}

GenVec GeneralisedMetric::lift_plus(const std::vector<double>& X) const {
  GenVec v;
  v.vec = X;
  std::vector<double> gx = g_ * X, bx = Bc_.transpose() * X;
  v.covec.resize(n_);
  for (int i = 0; i < n_; ++i) v.covec[i] = gx[i] + bx[i];
  return v;
}

GenVec GeneralisedMetric::lift_minus(const std::vector<double>& X) const {
  GenVec v;
  v.vec = X;
  std::vector<double> gx = g_ * X, bx = Bc_.transpose() * X;
  v.covec.resize(n_);
  for (int i = 0; i < n_; ++i) v.covec[i] = -gx[i] + bx[i];
  return v;
}

Mat GeneralisedMetric::Vplus() const {
  Mat V(2 * n_, n_);
  for (int j = 0; j < n_; ++j) {
    GenVec v = lift_plus(U_.col(j));
    for (int i = 0; i < n_; ++i) {
      V(i, j) = v.vec[i];
      V(n_ + i, j) = v.covec[i];
    }
  }
  return V;
}

Mat GeneralisedMetric::Vminus() const {
  Mat V(2 * n_, n_);
  for (int j = 0; j < n_; ++j) {
    GenVec v = lift_minus(U_.col(j));
    for (int i = 0; i < n_; ++i) {
      V(i, j) = v.vec[i];
      V(n_ + i, j) = v.covec[i];
    }
  }
  return V;
}

Form GeneralisedMetric::gtilde_straight(const Form& rho) const {
  const GtildeSigns& s = gtilde_signs(n_);
  Form ev = rho.even_part(), od = rho.odd_part();
  Form out(n_);
  if (!ev.is_zero(0.0)) {
    Form t = hodge_star(g_, hat((n_ & 1) ? tilde(ev) : ev)) * double(s.even);
    out = out + t;
  }
  if (!od.is_zero(0.0)) {
    Form t = hodge_star(g_, hat((n_ & 1) ? tilde(od) : od)) * double(s.odd);
    out = out + t;
  }
  return out;
}

Form GeneralisedMetric::gtilde(const Form& rho) const {
  require(rho.dim() == n_, ErrorKind::dimension_mismatch, "gtilde: dimension");
  Form ebm = exp_two_form(-bform_);
  Form eb = exp_two_form(bform_);
  return wedge(eb, gtilde_straight(wedge(ebm, rho)));
}

CForm GeneralisedMetric::gtilde(const CForm& rho) const {
  Form re(n_), im(n_);
  for (mask_t K = 0; K < mask_t(rho.size()); ++K) {
    re[K] = rho[K].real();
    im[K] = rho[K].imag();
  }
  Form gre = gtilde(re), gim = gtilde(im);
  CForm out(n_);
  for (mask_t K = 0; K < mask_t(out.size()); ++K) out[K] = Complex(gre[K], gim[K]);
  return out;
}

Form GeneralisedMetric::gtilde_via_clifford(const Form& rho) const {
  return apply_vminus_chain(g_, Bc_, U_, rho);
}

double GeneralisedMetric::qpair(const Form& rho, const Form& tau) const {
  Parity p = rho.parity();
  require(p != Parity::mixed, ErrorKind::parity_mismatch, "qpair: mixed parity");
  int chir = (p == Parity::odd) ? -1 : +1;
  int m = n_ / 2;
  double s = ((m & 1) ? -1.0 : 1.0) * chir;
  return s * mukai(rho, gtilde(tau));
}

double GeneralisedMetric::qnorm(const Form& rho) const {
  if (rho.is_zero(0.0)) return 0.0;
  double q = qpair(rho, rho);
  require(q > -1e-9, ErrorKind::invalid_argument,
          "qnorm: negative quadratic form (sign convention bug)");
  return std::sqrt(std::max(0.0, q));
}

void metric_from_vplus(const Mat& Vp, Mat& g_out, Mat& Bc_out) {
  int n = Vp.rows() / 2;
  require(Vp.cols() == n, ErrorKind::dimension_mismatch, "metric_from_vplus: need n columns");
  Mat P(n, n), Q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      P(i, j) = Vp(i, j);
      Q(i, j) = Vp(n + i, j);
    }
  Mat M = Q * inverse(P);  // = g - Bc
  g_out = Mat(n, n);
  Bc_out = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g_out(i, j) = 0.5 * (M(i, j) + M(j, i));
      Bc_out(i, j) = 0.5 * (M(j, i) - M(i, j));
    }
}

}  // namespace gencal
