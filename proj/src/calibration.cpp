#include "gencal/calibration.hpp"

#include <cmath>
#include <random>

namespace gencal {

namespace {

void check_parity(const Form& rho, int k) {
  Parity p = rho.parity();
  require(p != Parity::mixed, ErrorKind::parity_mismatch,
          "calibration: rho must have pure parity");
  if (p == Parity::zero) return;
  bool even = (p == Parity::even);
  require(even == ((k % 2) == 0), ErrorKind::parity_mismatch,
          "calibration: rho parity does not match dim L mod 2");
}

}  // namespace

double pairing_value(const Form& rho, const IsotropicPair& p, const Mat& g) {
  check_parity(rho, p.dim());
  return mukai(rho, tau_from_pair(p, g));
}

double bound_value(const GeneralisedMetric& G, const IsotropicPair& p) {
  int k = p.dim();
  if (k == 0) return 1.0;
  const Mat& g = G.g();
  Mat U = gram_schmidt(g, p.L);
  Mat FU(k, k), jB(k, k);
  {
    Mat T = U.transpose() * g * p.L;
    Mat Ti = inverse(T);
    FU = Ti.transpose() * p.F * Ti;
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      double s = 0.0;
      for (int i = 0; i < p.ambient(); ++i)
        for (int j = 0; j < p.ambient(); ++j) s += U(i, a) * G.B()(i, j) * U(j, b);
      jB(a, b) = s;
    }
  Mat M = Mat::identity(k) + jB - FU;
  double dt = det(M);
  require(dt > 0.0, ErrorKind::invalid_argument, "bound_value: negative determinant");
  return std::sqrt(dt);
}

CalibrationReport is_calibrated(const Form& rho, const GeneralisedMetric& G,
                                const IsotropicPair& p, double tol) {
  CalibrationReport r;
  r.pairing_value = pairing_value(rho, p, G.g());
  r.bound_value = bound_value(G, p);
  r.deficit = r.bound_value - r.pairing_value;
  r.calibrated = r.deficit <= tol;
  r.orientation_best = (r.pairing_value >= 0.0) ? p.orientation : -p.orientation;
  r.deficit_best = r.bound_value - std::abs(r.pairing_value);
  return r;
}

double spinor_criterion(const DiracSpinor& psiL, const DiracSpinor& psiR,
                        const GeneralisedMetric& G, const IsotropicPair& p) {
  int n = G.dim();
  require(psiL.n == n && psiR.n == n, ErrorKind::dimension_mismatch,
          "spinor_criterion: dimensions");
  const GammaRep& rep = GammaRep::get(n);
  require(std::abs(qnorm2(psiL.amps) - 1.0) < 1e-7 &&
              std::abs(qnorm2(psiR.amps) - 1.0) < 1e-7,
          ErrorKind::invalid_argument, "spinor_criterion: spinors must be unit");
  int m = n / 2;
  Complex phase;
  if (n % 2 == 0) {
    auto cr = rep.chirality_of(psiR.amps, 1e-7);
    auto cl = rep.chirality_of(psiL.amps, 1e-7);
    require(cr.has_value() && cl.has_value(), ErrorKind::invalid_argument,
            "spinor_criterion: chiral spinors required for even n");
    int sgn = ((m * (m + 1) / 2 + p.dim()) % 2) ? -1 : 1;
    phase = double(*cr * sgn) * std::pow(Complex(0, 1), m);
  } else {
    int sgn = ((m * (m + 1) / 2) % 2) ? -1 : 1;
    phase = double(sgn) * std::pow(Complex(0, 1), m + 1);
  }

  Form tau = tau_from_pair(p, G.g());
  double nrm = G.qnorm(tau);
  require(nrm > 1e-12, ErrorKind::invalid_argument, "spinor_criterion: zero-norm spinor");
  Form u = wedge(exp_two_form(-G.b_form()), tau) * (1.0 / nrm);
  Form u_frame = pullback(G.frame(), u);
  CVec rhs = rep.form_act(u_frame, psiR.amps);
  CVec lhs = rep.charge_conj(psiL.amps);
  double res2 = 0.0;
  for (size_t i = 0; i < lhs.size(); ++i) res2 += std::norm(lhs[i] - phase * rhs[i]);
  return std::sqrt(res2);
}

namespace {

struct PointEval {
  double deficit_best;
  double pairing_abs;
};

IsotropicPair assemble_pair(const Mat& Y, const Mat& F) {
  IsotropicPair p;
  p.L = Y;
  p.F = F;
  p.orientation = +1;
  return p;
}

double eval_deficit(const Form& rho, const GeneralisedMetric& G, const Mat& U /*frame*/,
                    const Mat& Z, const Mat& Fc) {
  Mat Y = U * Z;
  IsotropicPair p = assemble_pair(Y, Fc);
  double pairing = mukai(rho, tau_from_pair(p, G.g()));
  double bound = bound_value(G, p);
  return bound - std::abs(pairing);
}

}  // namespace

MaximizerResult find_maximizer(const Form& rho, const GeneralisedMetric& G, int k,
                               const MaximizerOptions& opt) {
  int n = G.dim();
  require(k >= 0 && k <= n, ErrorKind::invalid_argument, "find_maximizer: k out of range");
  check_parity(rho, k);
  MaximizerResult best;
  best.report.deficit_best = 1e300;

  if (k == 0) {
    IsotropicPair p;
    p.L = Mat(n, 0);
    p.F = Mat(0, 0);
    best.pair = p;
    best.report = is_calibrated(rho, G, p);
    best.stationary = true;
    return best;
  }

  const Mat& U = G.frame();
  const double fd = 1e-6;

  for (int restart = 0; restart < opt.restarts; ++restart) {
    std::mt19937_64 rng(opt.seed + 977 * restart);
    auto unif = [&rng]() {
      return (double(rng() >> 11) / 9007199254740992.0) * 2.0 - 1.0;
    };
    // random start: orthonormal Z (euclidean), small F
    Mat Z(n, k), Fc(k, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) Z(i, j) = unif();
    Z = gram_schmidt(Mat::identity(n), Z);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        Fc(i, j) = 0.3 * unif();
        Fc(j, i) = -Fc(i, j);
      }

    double cur = eval_deficit(rho, G, U, Z, Fc);
    double step = opt.step;
    bool stationary = false;
    int it = 0;
    for (; it < opt.budget; ++it) {
      // finite-difference gradient in Z and F
      Mat Dz(n, k), Df(k, k);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
          Mat Zp = Z;
          Zp(i, j) += fd;
          Dz(i, j) = (eval_deficit(rho, G, U, Zp, Fc) - cur) / fd;
        }
      double gnorm2 = 0.0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          Mat Fp = Fc;
          Fp(i, j) += fd;
          Fp(j, i) -= fd;
          double gij = (eval_deficit(rho, G, U, Z, Fp) - cur) / fd;
          Df(i, j) = gij;
          Df(j, i) = -gij;
          gnorm2 += 2 * gij * gij;
        }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) gnorm2 += Dz(i, j) * Dz(i, j);
      if (std::sqrt(gnorm2) < 1e-8) {
        stationary = true;
        break;
      }
      // descent on the deficit: Cayley retraction along -grad
      Mat W = Dz * Z.transpose() - Z * Dz.transpose();  // skew
      bool moved = false;
      for (double t = step; t > 1e-12; t *= 0.5) {
        Mat A = Mat::identity(n) + W * (0.5 * t);
        Mat Bm = Mat::identity(n) - W * (0.5 * t);
        Mat Znew = inverse(Bm) * A * Z;
        // keep strict orthonormality against drift
        Znew = gram_schmidt(Mat::identity(n), Znew);
        Mat Fnew = Fc - Df * t;
        double trial = eval_deficit(rho, G, U, Znew, Fnew);
        if (trial < cur - 1e-14) {
          Z = Znew;
          Fc = Fnew;
          cur = trial;
          moved = true;
          step = std::min(opt.step, t * 2.0);
          break;
        }
      }
      if (!moved) {
        stationary = true;
        break;
      }
      if (cur < opt.tol * 1e-3) {
        stationary = true;
        break;
      }
    }
    if (cur < best.report.deficit_best) {
      Mat Y = U * Z;
      IsotropicPair p = assemble_pair(Y, Fc);
      CalibrationReport rep = is_calibrated(rho, G, p);
      if (rep.pairing_value < 0) {
        p.orientation = -1;
        rep = is_calibrated(rho, G, p);
      }
      best.pair = p;
      best.report = rep;
      best.stationary = stationary;
      best.iterations = it;
    }
  }
  return best;
}

std::pair<double, double> energy_density(const GeneralisedMetric& G, double dilaton,
                                         const Form& C, const IsotropicPair& p) {
  double w = std::exp(-dilaton);
  double dbi = w * bound_value(G, p);
  double wz = 0.0;
  if (!C.is_zero(0.0)) {
    check_parity(C, p.dim());
    wz = w * mukai(C, tau_from_pair(p, G.g()));
  }
  return {dbi, wz};
}

}  // namespace gencal
