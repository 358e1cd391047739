#include "gencal/dirac.hpp"

#include <cmath>
#include <mutex>
#include <random>

namespace gencal {

namespace {

CMat kron(const CMat& a, const CMat& b) {
  CMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == Complex(0.0, 0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

CMat pauli(int which) {
  CMat s(2, 2);
  switch (which) {
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = Complex(0, -1); s(1, 0) = Complex(0, 1); break;
    case 3: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    default: s(0, 0) = 1.0; s(1, 1) = 1.0; break;
  }
  return s;
}

CMat sigma_string(int m, int slot, int which) {
  // sigma3^(slot-1) (x) sigma_which (x) Id^(m-slot)
  CMat r = CMat::identity(1);
  for (int p = 1; p <= m; ++p) {
    if (p < slot)
      r = kron(r, pauli(3));
    else if (p == slot)
      r = kron(r, pauli(which));
    else
      r = kron(r, pauli(0));
  }
  return r;
}

Complex ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

int sign_pm(int exponent) { return (exponent & 1) ? -1 : +1; }

}  // namespace

CVec operator+(const CVec& a, const CVec& b) {
  CVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
CVec operator-(const CVec& a, const CVec& b) {
  CVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
CVec operator*(const Complex& t, const CVec& a) {
  CVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

GammaRep::GammaRep(int n) : n_(n), m_(n / 2), N_(1 << (n / 2)) {
  require(n >= kMinDim && n <= kMaxDim, ErrorKind::invalid_argument,
          "gamma representation: dimension out of range");
  gammas_.reserve(n);
  for (int j = 1; j <= 2 * m_; ++j) {
    int slot = (j + 1) / 2;
    gammas_.push_back(sigma_string(m_, slot, (j % 2) ? 1 : 2));
  }
  if (n & 1) {
    // the sign makes the volume element act by (-1)^(m(m+1)/2) i^(m+1)
    int eps = sign_pm(m_ * (m_ + 3) / 2);
    CMat g = CMat::identity(1);
    for (int p = 0; p < m_; ++p) g = kron(g, pauli(3));
    gammas_.push_back(g * Complex(eps, 0));
  }

  // chirality operator (n even):ps_i+- are eigenvectors of chi = +-1, where
  // the volume acts as +-(-1)^(m(m+1)/2) i^m on them.
  if (!(n & 1)) {
    CMat sig = CMat::identity(1);
    for (int p = 0; p < m_; ++p) sig = kron(sig, pauli(3));
    chi_ = sig * Complex(sign_pm(m_ * (m_ + 3) / 2), 0);
  }

  // charge conjugation: product of the imaginary generators
  C_ = CMat::identity(N_);
  for (int j = 2; j <= 2 * m_; j += 2) C_ = C_ * gammas_[j - 1];

  // construction-time verification of the defining properties
  CMat vol = CMat::identity(N_);
  for (int j = 0; j < n_; ++j) vol = vol * (gammas_[j] * Complex(0, 1));
  if (n & 1) {
    Complex want = Complex(sign_pm(m_ * (m_ + 1) / 2), 0) * ipow(m_ + 1);
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j) {
        Complex w = (i == j) ? want : Complex(0, 0);
        require(std::abs(vol(i, j) - w) < 1e-12, ErrorKind::invalid_argument,
                "gamma build: odd volume action off");
      }
  } else {
    CMat want = chi_ * (Complex(sign_pm(m_ * (m_ + 1) / 2), 0) * ipow(m_));
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j)
        require(std::abs(vol(i, j) - want(i, j)) < 1e-12, ErrorKind::invalid_argument,
                "gamma build: even volume action off");
  }
  // A^2 = (-1)^(m(m+1)/2)
  CMat Cc(N_, N_);
  for (int i = 0; i < N_; ++i)
    for (int j = 0; j < N_; ++j) Cc(i, j) = std::conj(C_(i, j));
  CMat A2 = C_ * Cc;
  Complex want2 = Complex(sign_pm(m_ * (m_ + 1) / 2), 0);
  for (int i = 0; i < N_; ++i)
    for (int j = 0; j < N_; ++j) {
      Complex w = (i == j) ? want2 : Complex(0, 0);
      require(std::abs(A2(i, j) - w) < 1e-12, ErrorKind::invalid_argument,
              "gamma build: A^2 sign off");
    }
}

const GammaRep& GammaRep::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GammaRep>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::unique_ptr<GammaRep>(new GammaRep(n))).first;
  return *it->second;
}

CVec GammaRep::vector_act(int j, const CVec& psi) const {
  CVec out(N_, Complex(0, 0));
  const CMat& g = gammas_[j];
  for (int i = 0; i < N_; ++i) {
    Complex s{0, 0};
    for (int k = 0; k < N_; ++k) s += g(i, k) * psi[k];
    out[i] = Complex(0, 1) * s;
  }
  return out;
}

CVec GammaRep::form_act(const CForm& a, const CVec& psi) const {
  require(a.dim() == n_, ErrorKind::dimension_mismatch, "form_act: dimension");
  // table of gamma_K psi over subsets, built from lowest set bit
  std::vector<CVec> table(a.size());
  table[0] = psi;
  for (mask_t K = 1; K < mask_t(a.size()); ++K) {
    int low = std::countr_zero(K);
    const CVec& prev = table[K ^ (mask_t(1) << low)];
    CVec cur(N_, Complex(0, 0));
    const CMat& g = gammas_[low];
    for (int i = 0; i < N_; ++i) {
      Complex s{0, 0};
      for (int k = 0; k < N_; ++k) s += g(i, k) * prev[k];
      cur[i] = s;
    }
    table[K] = std::move(cur);
  }
  CVec out(N_, Complex(0, 0));
  for (mask_t K = 0; K < mask_t(a.size()); ++K) {
    if (a[K] == Complex(0.0, 0.0)) continue;
    Complex c = a[K] * ipow(popcount(K));
    for (int i = 0; i < N_; ++i) out[i] += c * table[K][i];
  }
  return out;
}

CVec GammaRep::form_act(const Form& a, const CVec& psi) const {
  CForm ca(a.dim());
  for (mask_t K = 0; K < mask_t(a.size()); ++K) ca[K] = Complex(a[K], 0.0);
  return form_act(ca, psi);
}

CVec GammaRep::charge_conj(const CVec& psi) const {
  CVec out(N_, Complex(0, 0));
  for (int i = 0; i < N_; ++i) {
    Complex s{0, 0};
    for (int k = 0; k < N_; ++k) s += C_(i, k) * std::conj(psi[k]);
    out[i] = s;
  }
  return out;
}

Complex GammaRep::bilinear_A(const CVec& psi, const CVec& phi) const {
  return qdot(charge_conj(psi), phi);
}

CForm GammaRep::fierz(const CVec& psiL, const CVec& psiR) const {
  CVec aL = charge_conj(psiL);
  CForm out(n_);
  // gamma_K psi_R table as in form_act
  std::vector<CVec> table(out.size());
  table[0] = psiR;
  for (mask_t K = 1; K < mask_t(out.size()); ++K) {
    int low = std::countr_zero(K);
    const CVec& prev = table[K ^ (mask_t(1) << low)];
    CVec cur(N_, Complex(0, 0));
    const CMat& g = gammas_[low];
    for (int i = 0; i < N_; ++i) {
      Complex s{0, 0};
      for (int k = 0; k < N_; ++k) s += g(i, k) * prev[k];
      cur[i] = s;
    }
    table[K] = std::move(cur);
  }
  for (mask_t K = 0; K < mask_t(out.size()); ++K)
    out[K] = ipow(popcount(K)) * qdot(aL, table[K]);
  return out;
}

std::optional<int> GammaRep::chirality_of(const CVec& psi, double tol) const {
  if (n_ & 1) return std::nullopt;
  double nrm = std::sqrt(qnorm2(psi));
  if (nrm < tol) return std::nullopt;
  CVec cp(N_, Complex(0, 0));
  for (int i = 0; i < N_; ++i)
    for (int k = 0; k < N_; ++k) cp[i] += chi_(i, k) * psi[k];
  double dplus = 0.0, dminus = 0.0;
  for (int i = 0; i < N_; ++i) {
    dplus += std::norm(cp[i] - psi[i]);
    dminus += std::norm(cp[i] + psi[i]);
  }
  if (std::sqrt(dplus) <= tol * nrm) return +1;
  if (std::sqrt(dminus) <= tol * nrm) return -1;
  return std::nullopt;
}

CVec GammaRep::chiral_project(const CVec& psi, int sign) const {
  require(!(n_ & 1), ErrorKind::invalid_argument, "chirality only defined for even n");
  CVec out(N_, Complex(0, 0));
  for (int i = 0; i < N_; ++i) {
    Complex s = psi[i];
    for (int k = 0; k < N_; ++k) s += double(sign) * chi_(i, k) * psi[k];
    out[i] = 0.5 * s;
  }
  return out;
}

CVec GammaRep::real_unit_spinor(uint64_t seed, std::optional<int> chirality) const {
  std::mt19937_64 rng(seed);
  auto unif = [&rng]() { return (double(rng() >> 11) / 9007199254740992.0) * 2.0 - 1.0; };
  for (int attempt = 0; attempt < 64; ++attempt) {
    CVec v(N_);
    for (int i = 0; i < N_; ++i) v[i] = Complex(unif(), unif());
    if (chirality) v = chiral_project(v, *chirality);
    CVec w = v + charge_conj(v);
    double nrm = std::sqrt(qnorm2(w));
    if (nrm > 1e-6) {
      for (auto& c : w) c /= nrm;
      return w;
    }
  }
  fail(ErrorKind::convergence, "real_unit_spinor: could not build a fixed spinor");
}

namespace {

bool degree_support_is(const CForm& f, std::initializer_list<int> degrees, double tol) {
  for (mask_t K = 0; K < mask_t(f.size()); ++K) {
    if (std::abs(f[K]) <= tol) continue;
    int p = popcount(K);
    bool ok = false;
    for (int d : degrees)
      if (p == d) ok = true;
    if (!ok) return false;
  }
  return true;
}

bool is_real_form(const CForm& f, double tol) {
  for (mask_t K = 0; K < mask_t(f.size()); ++K)
    if (std::abs(f[K].imag()) > tol) return false;
  return true;
}

}  // namespace

DiracSpinor canonical_structure_spinor(const std::string& kind) {
  DiracSpinor out;
  if (kind == "G2") {
    const GammaRep& rep = GammaRep::get(7);
    CVec v(rep.delta_dim(), Complex(0, 0));
    v[0] = 1.0;
    CVec w = v + rep.charge_conj(v);
    double nr = std::sqrt(qnorm2(w));
    for (auto& c : w) c /= nr;
    out = DiracSpinor{7, w, std::nullopt};
  } else if (kind == "Spin7") {
    const GammaRep& rep = GammaRep::get(8);
    CVec v(rep.delta_dim(), Complex(0, 0));
    v[0] = 1.0;
    CVec vp = rep.chiral_project(v, +1);
    CVec w = vp + rep.charge_conj(vp);
    double nr = std::sqrt(qnorm2(w));
    require(nr > 1e-9, ErrorKind::invalid_argument, "canonical Spin7 spinor degenerate");
    for (auto& c : w) c /= nr;
    out = DiracSpinor{8, w, +1};
  } else if (kind == "SU3") {
    const GammaRep& rep = GammaRep::get(6);
    for (int b = 0; b < rep.delta_dim(); ++b) {
      CVec v(rep.delta_dim(), Complex(0, 0));
      v[b] = 1.0;
      CVec w = rep.chiral_project(v, +1);
      double nr = std::sqrt(qnorm2(w));
      if (nr < 1e-9) continue;
      for (auto& c : w) c /= nr;
      out = DiracSpinor{6, w, +1};
      break;
    }
    require(out.n == 6, ErrorKind::invalid_argument, "canonical SU3 spinor degenerate");
  } else {
    fail(ErrorKind::invalid_argument, "canonical spinor: kind must be G2|Spin7|SU3");
  }
  return out;
}

StructureForms structure_forms(const std::string& kind, const DiracSpinor& psiL,
                               const DiracSpinor* psiR, double tol) {
  StructureForms out;
  out.kind = kind;
  int need_n = kind == "G2" ? 7 : kind == "Spin7" ? 8 : kind == "SU3" ? 6 : -1;
  require(need_n > 0, ErrorKind::invalid_argument, "structure kind must be G2|Spin7|SU3");
  require(psiL.n == need_n, ErrorKind::invalid_argument,
          "structure_forms: wrong dimension for kind " + kind);
  const GammaRep& rep = GammaRep::get(need_n);
  const CVec& L = psiL.amps;
  const CVec& R = psiR ? psiR->amps : psiL.amps;
  require(std::abs(qnorm2(L) - 1.0) < 1e-7 && std::abs(qnorm2(R) - 1.0) < 1e-7,
          ErrorKind::invalid_argument, "structure_forms: spinors must be unit norm");

  if (kind == "G2") {
    CForm f = rep.fierz(L, R);
    out.forms["rho_ev"] = f.even_part();
    out.forms["rho_od"] = f.odd_part();
    bool support = degree_support_is(f, {0, 3, 4, 7}, tol * 10);
    bool realp = is_real_form(f, tol * 10);
    bool unit0 = std::abs(f[0] - Complex(1, 0)) < 1e-6;
    out.valid = support && realp && unit0;
    out.detail = std::string("degree support {0,3,4,7}: ") + (support ? "ok" : "violated") +
                 "; real: " + (realp ? "ok" : "violated") +
                 "; unit scalar part: " + (unit0 ? "ok" : "violated");
  } else if (kind == "Spin7") {
    CForm f = rep.fierz(L, R);
    auto cl = rep.chirality_of(L, 1e-7), cr = rep.chirality_of(R, 1e-7);
    require(cl.has_value() && cr.has_value(), ErrorKind::invalid_argument, "Spin7 spinors must be chiral");
    bool equal_chir = (*cl == *cr);
    bool support = equal_chir ? degree_support_is(f, {0, 4, 8}, tol * 10)
                              : degree_support_is(f, {1, 3, 5, 7}, tol * 10);
    bool realp = is_real_form(f, tol * 10);
    out.forms["rho"] = f;
    out.valid = support && realp;
    out.detail = std::string(equal_chir ? "even structure" : "odd structure") +
                 "; support: " + (support ? "ok" : "violated") +
                 "; real: " + (realp ? "ok" : "violated");
  } else {  // SU3
    auto cl = rep.chirality_of(L, 1e-7);
    require(cl.has_value(), ErrorKind::invalid_argument, "SU3 spinor must be chiral");
    CForm rho0 = rep.fierz(rep.charge_conj(L), R);
    CForm rho1 = rep.fierz(L, R);
    out.forms["rho0"] = rho0;
    out.forms["rho1"] = rho1;
    // omega read off the degree-2 part of rho0 = exp(-i omega)
    Form omega(6);
    for (mask_t K = 0; K < mask_t(rho0.size()); ++K)
      if (popcount(K) == 2) omega[K] = (Complex(0, 1) * rho0[K]).real();
    out.omega = omega;
    CForm omc(6);
    for (mask_t K = 0; K < mask_t(omega.size()); ++K) omc[K] = Complex(omega[K], 0);
    bool kahler_orth = wedge(rho1, omc).is_zero(1e-7);
    bool scalar_one = std::abs(rho0[0] - Complex(1, 0)) < 1e-6;
    // degree-2k recurrence of exp(-i omega)
    bool recurrence = true;
    CForm part = CForm::scalar(6, rho0[0]);
    CForm miom(6);
    for (mask_t K = 0; K < mask_t(omega.size()); ++K)
      miom[K] = Complex(0, -1) * Complex(omega[K], 0);
    for (int k = 0; 2 * (k + 1) <= 6; ++k) {
      part = wedge(miom, part) * Complex(1.0 / (k + 1), 0);
      if (!part.equals(rho0.degree_part(2 * (k + 1)), 1e-6)) recurrence = false;
    }
    out.valid = kahler_orth && scalar_one && recurrence;
    out.detail = std::string("rho1 ^ omega = 0: ") + (kahler_orth ? "ok" : "violated") +
                 "; scalar part 1: " + (scalar_one ? "ok" : "violated") +
                 "; exp(-i omega) ladder: " + (recurrence ? "ok" : "violated");
  }
  return out;
}

}  // namespace gencal
