#pragma once

#include <cstdint>

#include "gencal/dirac.hpp"
#include "gencal/genmetric.hpp"
#include "gencal/purespinor.hpp"

namespace gencal {

struct CalibrationReport {
  double pairing_value = 0.0;   // <rho, tau_{L,F}> for the given orientation
  double bound_value = 0.0;     // |tau_{L,F}|_G
  double deficit = 0.0;         // bound - pairing
  bool calibrated = false;      // deficit <= tol for the given orientation
  int orientation_best = +1;    // orientation meeting (or closest to) the bound
  double deficit_best = 0.0;    // bound - |pairing|
  double witness_residual = -1.0;  // spinor-criterion residual when requested
};

/// <rho, tau_{L,F}>; rho must have pure parity k mod 2.
double pairing_value(const Form& rho, const IsotropicPair& p, const Mat& g);

/// |tau_{L,F}|_G = sqrt det(j*(g+B) - F) over a g-orthonormal basis of L.
double bound_value(const GeneralisedMetric& G, const IsotropicPair& p);

CalibrationReport is_calibrated(const Form& rho, const GeneralisedMetric& G,
                                const IsotropicPair& p, double tol = 1e-7);

/// Residual |A(psi_L) - phase * (e^{-B} . tau/|tau|) . psi_R| of the spinor
/// equality criterion; vanishing is equivalent to meeting the bound.
double spinor_criterion(const DiracSpinor& psiL, const DiracSpinor& psiR,
                        const GeneralisedMetric& G, const IsotropicPair& p);

struct MaximizerOptions {
  int budget = 400;      // iterations per restart
  int restarts = 8;
  std::uint64_t seed = 42;
  double step = 0.5;
  double tol = 1e-9;
};

struct MaximizerResult {
  IsotropicPair pair;
  CalibrationReport report;
  bool stationary = false;  // false: budget exhausted before stationarity
  int iterations = 0;
};

/// Projected gradient ascent for the pairing/bound deficit over pairs with
/// dim L = k: Cayley retraction on the orthonormal plane factor, joint
/// ascent in F, deterministic restarts.
MaximizerResult find_maximizer(const Form& rho, const GeneralisedMetric& G, int k,
                               const MaximizerOptions& opt = {});

/// Pointwise brane energy density: (e^{-phi} |tau|_G, e^{-phi} <C, tau>).
std::pair<double, double> energy_density(const GeneralisedMetric& G, double dilaton,
                                         const Form& C, const IsotropicPair& p);

}  // namespace gencal
