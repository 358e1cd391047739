#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "gencal/form.hpp"
#include "gencal/linalg.hpp"

namespace gencal {

using CMat = DMat<Complex>;
using CVec = std::vector<Complex>;

/// Complex Dirac spinor for an n-dimensional Euclidean space.
struct DiracSpinor {
  int n = 0;
  CVec amps;  // length 2^(n/2)
  std::optional<int> chirality;  // +-1 when n even and amps is an eigenvector
};

/// Gamma representation for Cliff(T) acting on Delta_n = C^(2^[n/2]).
///
/// Stored generators are hermitian with gamma_i gamma_j + gamma_j gamma_i =
/// 2 delta_ij.  A tangent vector acts on spinors as i * gamma (so the vector
/// action squares to -|X|^2), which is what makes the volume element act by
/// the dimension-dependent phases below and the inner product q satisfy
/// q(a.Psi, Phi) = q(Psi, hat(a).Phi).  Built once per dimension and shared.
class GammaRep {
public:
  static const GammaRep& get(int n);

  int n() const { return n_; }
  int m() const { return m_; }
  int delta_dim() const { return N_; }
  const CMat& gamma(int j) const { return gammas_[j]; }  // hermitian, 0-based
  const CMat& conj_matrix() const { return C_; }
  const CMat& chirality_op() const { return chi_; }      // n even only

  /// Vector action e_j . Psi = i gamma_j Psi.
  CVec vector_act(int j, const CVec& psi) const;

  /// Action of a mixed-degree (complex) form through ordered gamma products.
  CVec form_act(const CForm& a, const CVec& psi) const;
  CVec form_act(const Form& a, const CVec& psi) const;

  /// Charge conjugation A(Psi) = C conj(Psi): conjugate-linear, with
  /// A(X.Psi) = (-1)^(m+1) X.A(Psi) and A^2 = (-1)^(m(m+1)/2).
  CVec charge_conj(const CVec& psi) const;

  /// A(Psi,Phi) = q(A(Psi), Phi), q conjugate-linear in the first slot.
  Complex bilinear_A(const CVec& psi, const CVec& phi) const;

  /// Fierzing map: sum_K q(A(Psi_L), e_K . Psi_R) e^K.
  CForm fierz(const CVec& psiL, const CVec& psiR) const;

  std::optional<int> chirality_of(const CVec& psi, double tol = 1e-9) const;
  CVec chiral_project(const CVec& psi, int sign) const;

  /// Unit spinor fixed by charge conjugation (real type); seeded
  /// deterministically from `seed`, optionally chirality-projected first.
  CVec real_unit_spinor(uint64_t seed, std::optional<int> chirality = std::nullopt) const;

private:
  explicit GammaRep(int n);
  int n_, m_, N_;
  std::vector<CMat> gammas_;
  CMat C_, chi_;
};

inline Complex qdot(const CVec& a, const CVec& b) {
  Complex s{0.0, 0.0};
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double qnorm2(const CVec& a) { return qdot(a, a).real(); }

CVec operator+(const CVec& a, const CVec& b);
CVec operator-(const CVec& a, const CVec& b);
CVec operator*(const Complex& t, const CVec& a);

/// Named structure forms built by fierzing.
struct StructureForms {
  std::string kind;
  std::map<std::string, CForm> forms;
  bool valid = false;
  std::string detail;
  Form omega;  // SU(3): the real 2-form read off rho0
};

/// kind in {"G2","Spin7","SU3"}; psiR may be omitted for the straight case.
StructureForms structure_forms(const std::string& kind, const DiracSpinor& psiL,
                               const DiracSpinor* psiR = nullptr, double tol = 1e-9);

/// Deterministic basis-adapted unit spinor for a structure kind; the fierz
/// forms then have unit coordinate components (coordinate associative /
/// coassociative / Cayley / complex planes).
DiracSpinor canonical_structure_spinor(const std::string& kind);

}  // namespace gencal
