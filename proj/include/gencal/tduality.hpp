#pragma once

#include "gencal/genmetric.hpp"
#include "gencal/purespinor.hpp"

namespace gencal {

/// Duality data: a vector X and a 1-form theta with theta(X) = 1.  The
/// adapted basis E has columns x_1..x_{n-1} spanning ker theta and x_n = X;
/// theta is then automatically the last dual basis vector.
template <class S>
struct DualityContextT {
  std::vector<S> X, theta;
  DMat<S> E, Einv;
  int dim() const { return static_cast<int>(X.size()); }
};

using DualityContext = DualityContextT<double>;
using DualityContextQ = DualityContextT<Rational>;

template <class S>
DualityContextT<S> make_duality_context(const std::vector<S>& X, const std::vector<S>& theta);

/// Buscher transform of (g, Bc) -- exact in the rational instantiation.
/// Derived from the graph map g - Bc via the coordinate swap of the duality
/// direction; the classical index formulas drop out of the block inverse.
template <class S>
void buscher_transform(const DMat<S>& g, const DMat<S>& Bc, const DualityContextT<S>& ctx,
                       DMat<S>& g_out, DMat<S>& Bc_out);

GeneralisedMetric tdualize_metric(const GeneralisedMetric& G, const DualityContext& ctx);

/// The O(n,n) matrix of the duality in standard coordinates.
Mat duality_matrix(const DualityContext& ctx);

/// rho^T = (X + -theta) . rho; flips parity and squares to the identity.
template <class S>
FormT<S> tdualize_spinor(const FormT<S>& rho, const DualityContextT<S>& ctx);

/// phi^T = phi - ln |X|_g.
double tdualize_dilaton(double phi, const Mat& g, const DualityContext& ctx);

struct PairDualization {
  IsotropicPair pair;
  double scale = 0.0;   // tau^T = scale * tau_{pair}
  int rank_before = 0;
  int rank_after = 0;
};

/// Transport an isotropic pair: factorise the dualised pure spinor in the
/// dual metric.  The rank shifts by -1 when X lies in L and +1 otherwise;
/// anything else is reported as numerically inconclusive.
PairDualization tdualize_pair(const IsotropicPair& p, const GeneralisedMetric& G,
                              const DualityContext& ctx);

}  // namespace gencal
