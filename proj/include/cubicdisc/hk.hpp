#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>

#include "cubicdisc/residual.hpp"
#include "cubicdisc/sp2.hpp"
#include "cubicdisc/tensor.hpp"

namespace cubicdisc {

// Totally symmetric j-real S_{abcd} in S^4 W*.
template <class T>
class SymQuartic {
 public:
  SymQuartic();
  // Validates total symmetry and j-reality.
  explicit SymQuartic(IndexedTensor<T> s);

  const IndexedTensor<T>& tensor() const { return s_; }
  const T& operator()(int a, int b, int c, int d) const { return s_(a, b, c, d); }
  bool is_zero() const { return s_.is_zero(); }

  // Keys "1134" (sorted, 1-based) for the 35 independent components.
  std::map<std::string, T> independent_components() const;
  static SymQuartic from_independent_components(const std::map<std::string, T>& comps);

  friend SymQuartic operator+(const SymQuartic& x, const SymQuartic& y) { return SymQuartic(x.s_ + y.s_); }
  friend SymQuartic operator-(const SymQuartic& x, const SymQuartic& y) { return SymQuartic(x.s_ - y.s_); }
  friend SymQuartic operator*(const T& c, const SymQuartic& x) { return SymQuartic(c * x.s_); }
  friend bool operator==(const SymQuartic& x, const SymQuartic& y) { return x.s_ == y.s_; }

 private:
  IndexedTensor<T> s_;
};

// Average of symmetrization and j-image; the result is a valid SymQuartic.
template <class T>
SymQuartic<T> realify_quartic(const IndexedTensor<T>& raw);

// Gaussian-integer entries with parts in [-3, 3], symmetrized and j-averaged.
template <class T>
SymQuartic<T> random_quartic(std::mt19937_64& rng);

// (S . g)(x, y, z, w) = S(gx, gy, gz, gw) for g acting on W.
template <class T>
SymQuartic<T> transport(const SymQuartic<T>& s, const Matrix<T>& g);

// Quartic form S(x, x, x, x) for a coordinate column x.
template <class T>
T quartic_form(const SymQuartic<T>& s, const Matrix<T>& x);

struct HKInvariants {
  Residual antisymmetry;   // K(x,y,..) = -K(y,x,..) and K(..,z,w) = -K(..,w,z)
  Residual bianchi;        // cyclic sum over the first three slots
  Residual j_invariance;   // K(x,y,J_s z,J_s w) = K(x,y,z,w), s = 1,2,3
  Residual pair_symmetry;  // K(x,y,z,w) = K(z,w,x,y)
  Residual reality;        // mixed block compatible with the conjugate block
  bool passes(double tol) const {
    return antisymmetry.passes(tol) && bianchi.passes(tol) && j_invariance.passes(tol) &&
           pair_symmetry.passes(tol) && reality.passes(tol);
  }
};

// Hyper-Kaehler curvature-type tensor stored through its mixed block K_{a bbar c dbar}.
template <class T>
class HKTensor {
 public:
  HKTensor();
  explicit HKTensor(IndexedTensor<T> mixed);

  const IndexedTensor<T>& mixed() const { return k_; }
  const T& operator()(int a, int b, int c, int d) const { return k_(a, b, c, d); }
  // Full covariant 4-tensor on V^C.
  VcTensor<T> full() const;
  static HKTensor from_full(const VcTensor<T>& k);
  bool is_zero() const { return k_.is_zero(); }

  friend HKTensor operator+(const HKTensor& x, const HKTensor& y) { return HKTensor(x.k_ + y.k_); }
  friend HKTensor operator-(const HKTensor& x, const HKTensor& y) { return HKTensor(x.k_ - y.k_); }
  friend HKTensor operator*(const T& c, const HKTensor& x) { return HKTensor(c * x.k_); }
  friend bool operator==(const HKTensor& x, const HKTensor& y) { return x.k_ == y.k_; }

 private:
  IndexedTensor<T> k_;
};

template <class T>
HKInvariants check_hk_invariants(const VcTensor<T>& k);

// K_{a bbar c dbar} = S_{a s c t} pi^s_{.bbar} pi^t_{.dbar}
template <class T>
HKTensor<T> kappa(const SymQuartic<T>& s);
// K(x,y,z,w) = S(x,J2y,z,J2w) - S(x,J2y,J2z,w) evaluated on full arrays.
template <class T>
VcTensor<T> kappa_full(const SymQuartic<T>& s);
// S(x,y,z,w) = (K(x,J2y,z,J2w) - K(x,J3y,z,J3w)) / 2 restricted to W.
template <class T>
SymQuartic<T> kappa_inv(const HKTensor<T>& k);

// X_{ab} = K_{a sbar b tbar} Y^{sbar tbar}
template <class T>
EndoOnSp2<T> t_k(const HKTensor<T>& k);
// g(T_K(A) x, y) = 1/2 sum_a K(x, y, h_a, A h_a) in the endomorphism model.
template <class T>
EndoOnSp2<T> t_k_frame(const HKTensor<T>& k);

class DaggerMismatch : public std::invalid_argument {
 public:
  DaggerMismatch(double residual)
      : std::invalid_argument("dagger L != 2 L, residual norm " + std::to_string(residual)), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// K with T_K = L, for L real with dagger L = 2 L.
template <class T>
HKTensor<T> hk_from_endo(const EndoOnSp2<T>& l);

// Lie derivative L = U . K of a curvature tensor along an sp(2) element.
template <class T>
HKTensor<T> lie_derivative(const HKTensor<T>& k, const Sp2Element<T>& u);

template <class T>
struct TangentResult {
  Matrix<T> h;              // 8x8 endomorphism of V^C
  Sp2Element<T> h_element;  // its sp(2) model
  Sp2Element<T> u;          // generator of L used as witness
  Residual in_sp2;          // H preserves pi, commutes with J_s, skew for g
  Residual eigen;           // T_K(H) = -(3/2) H
  Residual reproduces_l;    // H . K = L
  Residual formula;         // H = ((7/2) U - T_K U) / 5
};

class NotInOrbit : public std::invalid_argument {
 public:
  NotInOrbit() : std::invalid_argument("K is not a cubic discriminant") {}
};

// g(Hx,y) = (1/120) sum (L(x,a,b,c) K(y,a,b,c) - L(y,a,b,c) K(x,a,b,c)).
// When u is absent it is recovered by solving L = U . K.
template <class T>
TangentResult<T> tangent_h(const HKTensor<T>& k, const HKTensor<T>& l, std::optional<Sp2Element<T>> u = std::nullopt,
                           double tol = kDefaultTolerance);

struct ContractionCheck {
  Residual first;   // sum K(x,y,a,b) K(z,w,a,b)
  Residual second;  // sum K(x,a,b,y) K(z,a,b,w)
};

template <class T>
ContractionCheck contraction_identities(const HKTensor<T>& k);

// Ricci-type trace sum_a K(h_a, y, z, h_a).
template <class T>
VcTensor<T> ricci_trace(const VcTensor<T>& k);

}  // namespace cubicdisc
