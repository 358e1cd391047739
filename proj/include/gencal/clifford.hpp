#pragma once

#include "gencal/form.hpp"
#include "gencal/linalg.hpp"

namespace gencal {

/// Element of Cliff(T,g) expressed in a g-orthonormal frame, coefficients
/// indexed by subsets like forms.  Product convention: e_i . e_i = +1,
/// e_i . e_j = -e_j . e_i.  The isomorphism with forms is coefficient
/// identity in the frame.
class CliffordElement {
public:
  CliffordElement() : dim_(0) {}
  explicit CliffordElement(int dim)
      : dim_(dim), c_(size_t(1) << dim, 0.0), frame_(Mat::identity(dim)) {
    require(dim >= kMinDim && dim <= kMaxDim, ErrorKind::invalid_argument,
            "clifford dimension out of range");
  }
  CliffordElement(int dim, const Mat& frame)
      : dim_(dim), c_(size_t(1) << dim, 0.0), frame_(frame) {}

  static CliffordElement scalar(int dim, double v) {
    CliffordElement e(dim);
    e.c_[0] = v;
    return e;
  }
  static CliffordElement basis(int dim, mask_t K) {
    CliffordElement e(dim);
    e.c_[K] = 1.0;
    return e;
  }

  int dim() const { return dim_; }
  size_t size() const { return c_.size(); }
  double& operator[](mask_t K) { return c_[K]; }
  const double& operator[](mask_t K) const { return c_[K]; }
  const Mat& frame() const { return frame_; }

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator*(double t) const;
  CliffordElement operator-() const { return (*this) * -1.0; }
  bool is_zero(double tol = 1e-12) const;
  bool equals(const CliffordElement& o, double tol = 1e-9) const;

  /// Coefficient-identity J-isomorphism with exterior forms (frame coords).
  Form to_form() const;
  static CliffordElement from_form(const Form& f, const Mat& frame);
  static CliffordElement from_form(const Form& f);

private:
  friend CliffordElement cliff_product(const CliffordElement&, const CliffordElement&);
  int dim_;
  std::vector<double> c_;
  Mat frame_;
};

/// Geometric product; associative, frame-checked.
CliffordElement cliff_product(const CliffordElement& a, const CliffordElement& b);

/// Grade involution alpha (tilde on coefficients).
CliffordElement grade_involution(const CliffordElement& a);

/// Reversal anti-automorphism.
CliffordElement reverse(const CliffordElement& a);

/// Power-series exponential for even-degree elements; errors out if the
/// series has not converged within the iteration cap.
CliffordElement cliff_exp(const CliffordElement& a, double tol = 1e-14, int max_iter = 256);

/// Inverse of a (near-)Pin element via a . reverse(a) = scalar.
CliffordElement pin_inverse(const CliffordElement& a, double tol = 1e-9);

/// Twisted-adjoint projection Pin(T,g) -> O(T,g): x -> alpha(a) x a^{-1},
/// returned in frame coordinates.  Errors if any image leaks grade.
/// A unit vector projects to the reflection negating it.
Mat pin_project(const CliffordElement& a, double tol = 1e-9);

/// Volume element of the frame, e_1...e_n.
CliffordElement cliff_volume(int dim);

}  // namespace gencal
