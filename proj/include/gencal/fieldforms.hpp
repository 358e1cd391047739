#pragma once

#include "gencal/form.hpp"
#include "gencal/poly.hpp"

namespace gencal {

/// Differential form with polynomial coefficients on a single chart of R^n,
/// n <= 6; arithmetic is exact.
using PolyForm = FormT<Poly>;

/// Generalised vector field: polynomial components of X and xi.
struct PolyGenVec {
  std::vector<Poly> vec, covec;
  int dim() const { return static_cast<int>(vec.size()); }
};

/// Exterior derivative.
PolyForm d(const PolyForm& w);

/// Twisted differential d_H = d + H ^ .  for a degree-3 H.
PolyForm d_H(const PolyForm& w, const PolyForm& H);

/// Lie derivative along the coordinate field del_{i+1} (0-based index).
PolyForm lie_coordinate(int i, const PolyForm& w);

/// Interior product with a polynomial vector field.
PolyForm interior_poly(const std::vector<Poly>& X, const PolyForm& w);

/// Courant bracket on sections of T + T*.
PolyGenVec courant(const PolyGenVec& a, const PolyGenVec& b);

PolyForm eval_at(const PolyForm& w, const std::vector<Rational>& x, int) = delete;
QForm eval_form(const PolyForm& w, const std::vector<Rational>& x);

/// Both sides of the duality intertwining statement for the basic
/// decomposition rho = rho0 + theta ^ rho1, phi = phi0 + theta ^ phi1 along
/// the last coordinate.  First: the direct equations; second: the same
/// equations for the dualised data (rho0,rho1) -> (-rho1,-rho0) with the
/// opposite sign of phi.  Inputs must be basic and x_n-independent.
std::pair<bool, bool> tdual_intertwine_check(const PolyForm& rho0, const PolyForm& rho1,
                                             const PolyForm& phi0, const PolyForm& phi1,
                                             const Poly& phitilde, const PolyForm& theta);

/// PolyForm literal: "x1^2*e23 - 3*x2*e1".
PolyForm parse_polyform(const std::string& text, int dim);
std::string print_polyform(const PolyForm& f);

}  // namespace gencal
