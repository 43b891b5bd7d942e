#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cubicdisc/hk.hpp"

namespace cubicdisc {

// Generators of sp(1) on Delta = C^2, [E1, E2] = E3 and cyclic.
template <class T>
std::array<Matrix<T>, 3> delta_generators();

// Columns are the adapted basis of S^3 Delta inside Delta^(x)3 (index 4 i1 + 2 i2 + i3).
template <class T>
Matrix<T> cube_basis();

// Induced Lie-algebra action of a 2x2 matrix on S^3 Delta in the adapted basis.
template <class T>
Matrix<T> sym_cube_rep(const Matrix<T>& m);

template <class T>
struct InducedStructure {
  T pi_scale;            // induced pi = pi_scale * standard pi on the adapted basis
  Residual pi_match;     // induced pi - pi_scale * pi
  Residual j_match;      // induced j on the adapted basis vs the standard j
};

// pi (x) pi (x) pi and j (x) j (x) j restricted to the adapted basis of S^3 Delta.
template <class T>
InducedStructure<T> induced_structure();

// E_s on W computed through sym_cube_rep.
template <class T>
std::array<Matrix<T>, 3> irrep_generators();
// The same matrices entered by hand, used as golden values.
template <class T>
std::array<Matrix<T>, 3> tabulated_generators();

// Upsilon_s = -pi E_s (symmetric), so that E_s = pi Upsilon_s.
template <class T>
std::array<Matrix<T>, 3> upsilon_matrices(const std::array<Matrix<T>, 3>& e);
template <class T>
std::array<Matrix<T>, 3> tabulated_upsilon();
template <class T>
std::array<Sp2Element<T>, 3> upsilon_elements();

// S = sum_s Ups_s (x) Ups_s - 3/4 (pi_ac pi_bd + pi_ad pi_bc).
template <class T>
SymQuartic<T> s_hat();

// Polynomial in four variables with scalar coefficients.
template <class T>
class Polynomial {
 public:
  using Exponent = std::array<int, 4>;
  Polynomial() = default;
  static Polynomial constant(const T& c);
  static Polynomial variable(int k);

  const std::map<Exponent, T>& terms() const { return terms_; }
  T coefficient(const Exponent& e) const;
  int degree() const;
  T evaluate(const std::array<T, 4>& x) const;
  // Replace every variable by a polynomial.
  Polynomial substitute(const std::array<Polynomial, 4>& values) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    Polynomial out;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Exponent e;
        for (int k = 0; k < 4; ++k) e[k] = ex[k] + ey[k];
        out.terms_[e] += cx * cy;
      }
    out.prune();
    return out;
  }
  friend Polynomial operator*(const T& c, const Polynomial& x) { return constant(c) * x; }
  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }
  std::string to_string() const;

 private:
  void prune();
  std::map<Exponent, T> terms_;
};

// S(x, x, x, x) as a polynomial in the coordinates.
template <class T>
Polynomial<T> quartic_polynomial(const SymQuartic<T>& s);
// The discriminant quartic -18 x1x2x3x4 + 4 sqrt3 x1 x4^3 - 4 sqrt3 x2^3 x3 + 3 x2^2 x4^2 - 9 x1^2 x3^2.
template <class T>
Polynomial<T> tabulated_discriminant_quartic();
// Polarization of a homogeneous quartic into a totally symmetric tensor.
template <class T>
SymQuartic<T> polarize(const Polynomial<T>& p);

// 18abcd - 27a^2d^2 - 4ac^3 - 4b^3d + b^2c^2.
template <class T>
T classical_discriminant(const T& a, const T& b, const T& c, const T& d);
template <class T>
Polynomial<T> classical_discriminant_polynomial();

struct SubstitutionReport {
  int coefficients_compared = 0;  // monomials of degree 4 in four variables
  int mismatches = 0;
  Residual residual;
  bool passes(double tol) const { return mismatches == 0 || residual.passes(tol); }
};

// 3 S(x,x,x,x) under x1 = a, x2 = b/sqrt3, x3 = d, x4 = -c/sqrt3 against the classical discriminant.
template <class T>
SubstitutionReport substitution_check();

struct NamedResidual {
  std::string name;
  Residual residual;
};

// The seven identities for the Upsilon matrices, keyed upsilon_lemma_1 .. upsilon_lemma_7.
template <class T>
std::vector<NamedResidual> upsilon_lemma_checks();

// Orthogonal projection of sp(2) onto the span of the Upsilon elements.
template <class T>
EndoOnSp2<T> proj_sp1ir();

template <class T>
struct ProjectionReport {
  int rank = 0;
  Residual idempotent;     // P^2 = P
  Residual dagger;         // dagger P = 2P - 12/5 Id
  Residual t_k_relation;   // 5 (P - 3/10 Id) = T_K for K = kappa(S)
  Residual reducible_nd;   // (dagger P)^2 = -2 dagger P, both factors nontrivial
  Residual reducible_triv; // (dagger P)^2 = -3/2 dagger P + 10 P, one trivial factor
  Residual brackets_nd;    // the reducible generators close as sp(1)
  Residual brackets_triv;
};

template <class T>
ProjectionReport<T> projection_checks();

// Generators of the reducible embedding with both 2-dim factors nontrivial.
template <class T>
std::array<Matrix<T>, 3> reducible_nd_generators();
// The same with the action on span(e2, e4) removed.
template <class T>
std::array<Matrix<T>, 3> reducible_trivial_generators();

// Frames E_s on V^C, W block pi Upsilon_s and its conjugate block.
template <class T>
std::array<Matrix<T>, 3> script_e_frames();
// The same endomorphisms in the real basis e_a + ebar_a, i(e_a - ebar_a).
template <class T>
std::array<Matrix<T>, 3> script_e_frames_real();
// Real basis change: columns are e_a + ebar_a and i(e_a - ebar_a) in V^C coordinates.
template <class T>
Matrix<T> real_frame();

// g(A, B) = 1/2 trace(G^{-1} A^t G B).
template <class T>
T endo_inner(const Matrix<T>& a, const Matrix<T>& b);

template <class T>
struct FrameReport {
  Residual inner;           // g(E_s, E_t) = 5 delta
  Residual brackets;        // [E_i, E_j] = E_k
  Residual square_sum;      // sum E_s^2 = -15/4 Id
  Residual four_form;       // sum eps_s ^ eps_s = -3/4 Omega
  Residual real_entries;    // the real-basis matrices have real entries
  Residual real_inner;      // 1/2 trace(A^t B) = 5 delta in the real basis
};

template <class T>
FrameReport<T> frame_checks();

// Six generators on a carrier: three for the E factor, three for the H factor,
// each triple satisfying [X1, X2] = X3 cyclically.
template <class T>
struct So4Module {
  std::string name;
  std::array<Matrix<T>, 3> e_factor;
  std::array<Matrix<T>, 3> h_factor;
  std::size_t dim() const { return e_factor[0].rows(); }
};

class ClosureError : public std::invalid_argument {
 public:
  explicit ClosureError(const std::string& what) : std::invalid_argument("generators fail bracket closure: " + what) {}
};

struct IrrepComponent {
  int k = 0;  // S^k E
  int l = 0;  // S^l H
  int multiplicity = 0;
  int dim() const { return (k + 1) * (l + 1) * multiplicity; }
  std::string label() const;
};

struct Decomposition {
  std::vector<IrrepComponent> components;
  int carrier_dim = 0;
  int accounted_dim = 0;
  bool complete() const { return carrier_dim == accounted_dim; }
};

// Casimir eigenvalue of S^k is k(k+2)/4 times the calibration factor (1 in these conventions).
template <class T>
T calibrate_casimir(const So4Module<T>& known_v);

template <class T>
Decomposition casimir_decompose(const So4Module<T>& m, const T& calibration = T(1), int max_k = 12);

template <class T>
So4Module<T> carrier_v();
template <class T>
So4Module<T> carrier_sp2();
// V (x) (orthogonal complement of the Upsilon span in sp(2)), dimension 56.
template <class T>
So4Module<T> carrier_torsion();

}  // namespace cubicdisc
