#pragma once

#include "gencal/form.hpp"
#include "gencal/linalg.hpp"

namespace gencal {

/// Skew component matrix <-> 2-form conversions.  Component convention:
/// Bc(i,j) = B(e_i, e_j), i.e. the coefficient of e^i ^ e^j for i < j.
/// The matrix of the map X -> X -| B is then Bc^T = -Bc.
Form skew_to_form(const Mat& Bc);
Mat form_to_skew(const Form& B2);

/// Generalised Riemannian metric on T + T*: the pair (g SPD, B skew)
/// together with the derived 2n x 2n involution G and the eigenbundle
/// frames V+-.  Immutable after construction.
class GeneralisedMetric {
public:
  GeneralisedMetric(const Mat& g, const Mat& Bc);

  int dim() const { return n_; }
  const Mat& g() const { return g_; }
  const Mat& B() const { return Bc_; }
  const Mat& G() const { return G_; }
  Form b_form() const { return skew_to_form(Bc_); }

  /// g-orthonormal oriented frame (columns); from the Cholesky factor.
  const Mat& frame() const { return U_; }

  GenVec lift_plus(const std::vector<double>& X) const;
  GenVec lift_minus(const std::vector<double>& X) const;

  /// 2n x n bases of the +-1 eigenspaces of G (graph lifts of the frame).
  Mat Vplus() const;
  Mat Vminus() const;

  /// Spinor lift of the metric: the action of the V- volume element.
  /// Computed as exp(B) o (sign . star_g o hat [o tilde for odd n]) o exp(-B);
  /// the parity signs are pinned against the Clifford-product route and make
  /// the induced quadratic form nonnegative.
  Form gtilde(const Form& rho) const;
  CForm gtilde(const CForm& rho) const;

  /// Reference route: apply the lifted frame vectors one by one.
  Form gtilde_via_clifford(const Form& rho) const;

  /// Q(rho,tau) = +-(-1)^m <rho, gtilde(tau)> on pure-parity forms.
  double qpair(const Form& rho, const Form& tau) const;

  /// sqrt(Q(rho,rho)); errors if Q is negative beyond tolerance.
  double qnorm(const Form& rho) const;

private:
  Form gtilde_straight(const Form& rho) const;

  int n_;
  Mat g_, Bc_, G_, U_;
  Form bform_;
};

/// Recover (g, Bc) from a 2n x k basis of a maximally positive subspace
/// (the graph property V+ = { X + (g - Bc) X }).
void metric_from_vplus(const Mat& Vp, Mat& g_out, Mat& Bc_out);

}  // namespace gencal
