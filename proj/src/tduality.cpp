#include "gencal/tduality.hpp"

#include <cmath>

namespace gencal {

template <class S>
DualityContextT<S> make_duality_context(const std::vector<S>& X, const std::vector<S>& theta) {
  int n = static_cast<int>(X.size());
  require(static_cast<int>(theta.size()) == n, ErrorKind::dimension_mismatch,
          "duality context: X and theta sizes differ");
  S pair = ScalarTraits<S>::zero();
  for (int i = 0; i < n; ++i) pair += theta[i] * X[i];
  require(ScalarTraits<S>::is_zero(pair - ScalarTraits<S>::one(), 1e-9),
          ErrorKind::invalid_argument, "duality context: theta(X) != 1");

  DualityContextT<S> ctx;
  ctx.X = X;
  ctx.theta = theta;
  // candidates e_i - theta_i X span ker theta; greedily pick n-1 independent
  ctx.E = DMat<S>(n, n);
  DMat<S> trial(n, n);
  int have = 0;
  for (int cand = 0; cand < n && have < n - 1; ++cand) {
    std::vector<S> v(n, ScalarTraits<S>::zero());
    v[cand] = ScalarTraits<S>::one();
    for (int i = 0; i < n; ++i) v[i] -= theta[cand] * X[i];
    DMat<S> probe(n, have + 1);
    for (int j = 0; j < have; ++j)
      for (int i = 0; i < n; ++i) probe(i, j) = ctx.E(i, j);
    for (int i = 0; i < n; ++i) probe(i, have) = v[i];
    if (rank_of(probe, 1e-9) == have + 1) {
      for (int i = 0; i < n; ++i) ctx.E(i, have) = v[i];
      ++have;
    }
  }
  require(have == n - 1, ErrorKind::invalid_argument, "duality context: basis completion failed");
  for (int i = 0; i < n; ++i) ctx.E(i, n - 1) = X[i];
  ctx.Einv = inverse(ctx.E);
  return ctx;
}

template DualityContextT<double> make_duality_context(const std::vector<double>&,
                                                      const std::vector<double>&);
template DualityContextT<Rational> make_duality_context(const std::vector<Rational>&,
                                                        const std::vector<Rational>&);

template <class S>
void buscher_transform(const DMat<S>& g, const DMat<S>& Bc, const DualityContextT<S>& ctx,
                       DMat<S>& g_out, DMat<S>& Bc_out) {
  int n = g.rows();
  int d = n - 1;
  // graph map of V+ in the adapted basis
  DMat<S> M = ctx.E.transpose() * (g - Bc) * ctx.E;
  S q = M(d, d);
  require(!ScalarTraits<S>::is_zero(q, 1e-12), ErrorKind::invalid_argument,
          "buscher: degenerate duality direction");
  DMat<S> Mt(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) Mt(i, j) = M(i, j) - M(i, d) * M(d, j) / q;
  for (int i = 0; i < d; ++i) {
    Mt(i, d) = M(i, d) / q;
    Mt(d, i) = S(-1) * M(d, i) / q;
  }
  Mt(d, d) = ScalarTraits<S>::one() / q;
  // back to standard coordinates, then split into g and Bc
  DMat<S> Ms = ctx.Einv.transpose() * Mt * ctx.Einv;
  g_out = DMat<S>(n, n);
  Bc_out = DMat<S>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g_out(i, j) = (Ms(i, j) + Ms(j, i)) / S(2);
      Bc_out(i, j) = (Ms(j, i) - Ms(i, j)) / S(2);
    }
}

template void buscher_transform(const Mat&, const Mat&, const DualityContext&, Mat&, Mat&);
template void buscher_transform(const MatQ&, const MatQ&, const DualityContextQ&, MatQ&, MatQ&);

GeneralisedMetric tdualize_metric(const GeneralisedMetric& G, const DualityContext& ctx) {
  Mat g, B;
  buscher_transform(G.g(), G.B(), ctx, g, B);
  return GeneralisedMetric(g, B);
}

Mat duality_matrix(const DualityContext& ctx) {
  int n = ctx.dim();
  Mat swap = Mat::identity(2 * n);
  swap(n - 1, n - 1) = 0.0;
  swap(2 * n - 1, 2 * n - 1) = 0.0;
  swap(n - 1, 2 * n - 1) = 1.0;
  swap(2 * n - 1, n - 1) = 1.0;
  Mat big = Mat(2 * n, 2 * n), bigi = Mat(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      big(i, j) = ctx.E(i, j);
      big(n + i, n + j) = ctx.Einv(j, i);  // E^{-T}
      bigi(i, j) = ctx.Einv(i, j);
      bigi(n + i, n + j) = ctx.E(j, i);    // E^T
    }
  return big * swap * bigi;
}

template <class S>
FormT<S> tdualize_spinor(const FormT<S>& rho, const DualityContextT<S>& ctx) {
  GenVecT<S> v;
  v.vec = ctx.X;
  v.covec.resize(ctx.theta.size());
  for (size_t i = 0; i < ctx.theta.size(); ++i) v.covec[i] = S(-1) * ctx.theta[i];
  return spinor_action(v, rho);
}

template Form tdualize_spinor(const Form&, const DualityContext&);
template QForm tdualize_spinor(const QForm&, const DualityContextQ&);

double tdualize_dilaton(double phi, const Mat& g, const DualityContext& ctx) {
  std::vector<double> gx = g * ctx.X;
  double norm2 = 0.0;
  for (size_t i = 0; i < gx.size(); ++i) norm2 += ctx.X[i] * gx[i];
  require(norm2 > 0.0, ErrorKind::not_spd, "dilaton: |X| must be positive");
  return phi - 0.5 * std::log(norm2);
}

PairDualization tdualize_pair(const IsotropicPair& p, const GeneralisedMetric& G,
                              const DualityContext& ctx) {
  Form tau = tau_from_pair(p, G.g());
  Form taud = tdualize_spinor(tau, ctx);
  GeneralisedMetric Gd = tdualize_metric(G, ctx);
  Factorization f = factorize(taud, Gd.g());
  PairDualization out;
  out.pair = f.pair;
  out.scale = f.c;
  out.rank_before = p.dim();
  out.rank_after = f.pair.dim();
  require(std::abs(out.rank_after - out.rank_before) == 1, ErrorKind::rank_inconclusive,
          "tdualize_pair: rank shift is not +-1 (X nearly tangent at tolerance?)");
  return out;
}

}  // namespace gencal
