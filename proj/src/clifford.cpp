#include "gencal/clifford.hpp"

#include <cmath>

namespace gencal {

namespace {

bool frames_match(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (std::abs(a(i, j) - b(i, j)) > 1e-12) return false;
  return true;
}

double coeff_norm(const CliffordElement& a) {
  double s = 0.0;
  for (mask_t K = 0; K < mask_t(a.size()); ++K) s += a[K] * a[K];
  return std::sqrt(s);
}

}  // namespace

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  require(dim_ == o.dim_, ErrorKind::dimension_mismatch, "clifford add");
  CliffordElement r(dim_, frame_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  require(dim_ == o.dim_, ErrorKind::dimension_mismatch, "clifford sub");
  CliffordElement r(dim_, frame_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CliffordElement CliffordElement::operator*(double t) const {
  CliffordElement r(dim_, frame_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * t;
  return r;
}

bool CliffordElement::is_zero(double tol) const {
  for (double v : c_)
    if (std::abs(v) > tol) return false;
  return true;
}

bool CliffordElement::equals(const CliffordElement& o, double tol) const {
  if (dim_ != o.dim_) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (std::abs(c_[i] - o.c_[i]) > tol) return false;
  return true;
}

Form CliffordElement::to_form() const {
  Form f(dim_);
  for (mask_t K = 0; K < mask_t(size()); ++K) f[K] = c_[K];
  return f;
}

CliffordElement CliffordElement::from_form(const Form& f, const Mat& frame) {
  CliffordElement e(f.dim(), frame);
  for (mask_t K = 0; K < mask_t(f.size()); ++K) e.c_[K] = f[K];
  return e;
}

CliffordElement CliffordElement::from_form(const Form& f) {
  return from_form(f, Mat::identity(f.dim()));
}

CliffordElement cliff_product(const CliffordElement& a, const CliffordElement& b) {
  require(a.dim() == b.dim(), ErrorKind::dimension_mismatch, "clifford product");
  require(frames_match(a.frame(), b.frame()), ErrorKind::frame_mismatch,
          "clifford product: frames differ");
  CliffordElement r(a.dim(), a.frame());
  for (mask_t I = 0; I < mask_t(a.size()); ++I) {
    double ai = a[I];
    if (ai == 0.0) continue;
    for (mask_t J = 0; J < mask_t(b.size()); ++J) {
      double bj = b[J];
      if (bj == 0.0) continue;
      // e_I e_J = (-1)^{pairs (i in I, j in J, j < i)} e_{I xor J};
      // coincident indices square to +1.
      int s = (merge_swaps(I, J) & 1) ? -1 : +1;
      r[I ^ J] += s * ai * bj;
    }
  }
  return r;
}

CliffordElement grade_involution(const CliffordElement& a) {
  CliffordElement r(a.dim(), a.frame());
  for (mask_t K = 0; K < mask_t(a.size()); ++K)
    r[K] = tilde_sign(popcount(K)) * a[K];
  return r;
}

CliffordElement reverse(const CliffordElement& a) {
  CliffordElement r(a.dim(), a.frame());
  for (mask_t K = 0; K < mask_t(a.size()); ++K)
    r[K] = reverse_sign(popcount(K)) * a[K];
  return r;
}

CliffordElement cliff_exp(const CliffordElement& a, double tol, int max_iter) {
  for (mask_t K = 0; K < mask_t(a.size()); ++K)
    require((popcount(K) & 1) == 0 || a[K] == 0.0, ErrorKind::invalid_argument,
            "cliff_exp: element must be even-degree");
  CliffordElement sum = CliffordElement::scalar(a.dim(), 1.0);
  CliffordElement term = sum;
  for (int k = 1; k <= max_iter; ++k) {
    term = cliff_product(term, a) * (1.0 / k);
    sum = sum + term;
    if (coeff_norm(term) < tol * std::max(1.0, coeff_norm(sum))) return sum;
  }
  fail(ErrorKind::convergence, "cliff_exp: series did not converge (ill-scaled input)");
}

CliffordElement pin_inverse(const CliffordElement& a, double tol) {
  CliffordElement n = cliff_product(a, reverse(a));
  double scale = coeff_norm(n);
  require(scale > tol, ErrorKind::invalid_argument, "pin_inverse: zero element");
  for (mask_t K = 1; K < mask_t(n.size()); ++K)
    require(std::abs(n[K]) <= tol * scale, ErrorKind::degree_leak,
            "pin_inverse: a * reverse(a) is not scalar");
  return reverse(a) * (1.0 / n[0]);
}

Mat pin_project(const CliffordElement& a, double tol) {
  int n = a.dim();
  CliffordElement ainv = pin_inverse(a, tol);
  CliffordElement alpha_a = grade_involution(a);
  Mat R(n, n);
  for (int j = 0; j < n; ++j) {
    CliffordElement img =
        cliff_product(cliff_product(alpha_a, CliffordElement::basis(n, mask_t(1) << j)), ainv);
    double scale = coeff_norm(img);
    for (mask_t K = 0; K < mask_t(img.size()); ++K) {
      if (popcount(K) == 1) continue;
      require(std::abs(img[K]) <= tol * std::max(1.0, scale), ErrorKind::degree_leak,
              "pin_project: image of a generator leaks grade");
    }
    for (int i = 0; i < n; ++i) R(i, j) = img[mask_t(1) << i];
  }
  // orthogonality in frame coordinates
  Mat RtR = R.transpose() * R;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double want = (i == j) ? 1.0 : 0.0;
      require(std::abs(RtR(i, j) - want) <= 1e-7, ErrorKind::degree_leak,
              "pin_project: projection is not orthogonal");
    }
  return R;
}

CliffordElement cliff_volume(int dim) {
  return CliffordElement::basis(dim, (mask_t(1) << dim) - 1);
}

}  // namespace gencal
