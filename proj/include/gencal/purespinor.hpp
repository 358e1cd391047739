#pragma once

#include "gencal/clifford.hpp"
#include "gencal/form.hpp"
#include "gencal/genmetric.hpp"

namespace gencal {

/// Oriented k-plane L (basis columns) with a 2-form F on L (components in
/// the column basis) and an orientation flag.
struct IsotropicPair {
  Mat L;            // n x k, columns independent
  Mat F;            // k x k skew, F(i,j) = F(L_i, L_j)
  int orientation = +1;
  int dim() const { return L.cols(); }
  int ambient() const { return L.rows(); }
};

struct PureSpinor {
  Form tau;
  Mat annihilator;   // 2n x n isotropic kernel basis
  int rank = 0;
  double pivot_gap = 0.0;  // elimination diagnostic for the rank decision
};

/// The 2-form p_L^*(F) on T extended from L by g-orthogonal projection.
Form extend_two_form(const Mat& g, const IsotropicPair& p);

/// Pull-back of the L-volume to T through the orthogonal projection.
Form plane_volume_form(const Mat& g, const Mat& Lortho);

/// tau_{L,F} = orientation * e^{p_L^* F} ^ hat(star vol_L).
Form tau_from_pair(const IsotropicPair& p, const Mat& g);

/// Kernel of v -> v . tau over T + T*; checks isotropy of the result.
PureSpinor annihilator(const Form& tau, double tol = 1e-9);

/// n - dim(W_tau intersect T*); equals dim L of the associated pair.
int rank_of_spinor(const Form& tau, double tol = 1e-9);

/// Unique factorisation tau = c * tau_{L,F}, c > 0 pushed into the
/// orientation of L; errors if tau is not pure.
struct Factorization {
  double c = 0.0;
  IsotropicPair pair;
};
Factorization factorize(const Form& tau, const Mat& g, double tol = 1e-9);

/// Gluing matrix R_{L,F} of the pair w.r.t. the generalised metric, in
/// standard coordinates; g-orthogonal.  Blocks in an adapted orthonormal
/// basis: (j*(g-B)+F)(j*(g+B)-F)^{-1} on L and -Id on the complement.
Mat gluing_matrix(const GeneralisedMetric& G, const IsotropicPair& p);

/// Unit Pin(T,g) element J^{-1}(e^{-B} . tau_{L,F} / |tau|_G), in the
/// g-orthonormal frame of G; its projection equals the gluing matrix.
CliffordElement pin_lift(const GeneralisedMetric& G, const IsotropicPair& p);

/// Map a gluing-type matrix between frame and standard coordinates.
Mat frame_to_std(const Mat& U, const Mat& R_frame);

}  // namespace gencal
