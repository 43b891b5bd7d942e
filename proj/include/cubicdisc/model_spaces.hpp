#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicdisc/orbit.hpp"

namespace cubicdisc {

// Coframe labels: psi1..psi3, phi1..phi3, th1..th4, thb1..thb4.
inline constexpr int kNumLabels = 14;
inline constexpr int kFirstPsi = 0;
inline constexpr int kFirstPhi = 3;
inline constexpr int kFirstTheta = 6;
inline constexpr int kFirstThetaBar = 10;
inline constexpr int kNumConnection = 6;

const std::array<std::string, kNumLabels>& label_names();
// -1 when unknown.
int label_index(const std::string& name);
inline int theta_label(int vc_index) { return kFirstTheta + vc_index; }
inline bool is_theta_label(int label) { return label >= kFirstTheta; }
// Label of the conjugate coframe element; psi and phi are real.
int conjugate_label(int label);

// Constant-coefficient exterior form in the 14 labels; a monomial is a sorted label set (bitmask).
template <class T>
class Form {
 public:
  using Mask = std::uint32_t;

  Form() = default;
  static Form generator(int label);
  static Form monomial(Mask mask, const T& c = T(1));
  // c * w^i ^ w^j (any order).
  static Form pair(int i, int j, const T& c);

  const std::map<Mask, T>& terms() const { return terms_; }
  T coefficient(Mask mask) const;
  // Coefficient of w^i ^ w^j with the sign of the reordering.
  T coefficient(int i, int j) const;
  void add(Mask mask, const T& c);
  bool is_zero() const { return terms_.empty(); }
  std::vector<T> coefficients() const;

  // Replace every coefficient by its conjugate and every label by its conjugate label.
  Form conjugate() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form x, const Form& y) { return x += y; }
  friend Form operator-(Form x, const Form& y) { return x -= y; }
  friend Form operator*(const T& c, const Form& x) {
    Form out;
    for (const auto& [m, v] : x.terms_) out.add(m, c * v);
    return out;
  }
  friend bool operator==(const Form& x, const Form& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  std::map<Mask, T> terms_;
};

template <class T>
Form<T> wedge(const Form<T>& a, const Form<T>& b);

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }
inline std::uint32_t label_bit(int label) { return std::uint32_t(1) << label; }

// Structure equations d(w^k) = 2-form, for every label.
template <class T>
struct CoframeSystem {
  std::string name;
  std::array<Form<T>, kNumLabels> d;
  std::optional<T> h;

  Form<T> exterior_derivative(const Form<T>& w) const;
  // conj(d w^k) - d(conj w^k) over all labels.
  Residual reality() const;
  friend bool operator==(const CoframeSystem& x, const CoframeSystem& y) { return x.d == y.d; }
};

// Coefficient-wise difference of two structure tables.
template <class T>
Residual table_difference(const CoframeSystem<T>& x, const CoframeSystem<T>& y);

enum class ModelSpace { compact, split, flat };

// Sign of the g-term in d phi1: the value forced by d^2 = 0, or the one tabulated with the family.
enum class Phi1Sign { solved, tabulated };

// Transcribed structure equations of G2/SO(4), G2(2)/SO(4) and the flat model.
template <class T>
CoframeSystem<T> build_coframe(ModelSpace space);
// The one-parameter family solving the first Bianchi identity.
template <class T>
CoframeSystem<T> build_coframe(const T& h, Phi1Sign sign = Phi1Sign::solved);

// Substitute th = lambda * th' in every structure equation (all eight theta labels).
template <class T>
CoframeSystem<T> rescale_frame(const CoframeSystem<T>& cs, const T& lambda);

// Adds delta to the coefficient of w^i ^ w^j in d(w^label).
template <class T>
CoframeSystem<T> perturbed(const CoframeSystem<T>& cs, int label, int i, int j, const T& delta);

template <class T>
struct ClosureResult {
  std::array<Form<T>, kNumLabels> residual;  // d(d w^k)
  Residual total;
  bool closes = false;
};

template <class T>
ClosureResult<T> d_squared_check(const CoframeSystem<T>& cs, double tol = kDefaultTolerance);

// c^k_{ij} with [X_i, X_j] = c^k_{ij} X_k, read from d w^k (X_i, X_j) = -w^k([X_i, X_j]).
template <class T>
class LieTable {
 public:
  LieTable() : c_(kNumLabels * kNumLabels * kNumLabels) {}
  T& operator()(int k, int i, int j) { return c_[(k * kNumLabels + i) * kNumLabels + j]; }
  const T& operator()(int k, int i, int j) const { return c_[(k * kNumLabels + i) * kNumLabels + j]; }
  // Coefficients of [X_i, X_j].
  std::array<T, kNumLabels> bracket(int i, int j) const;
  // Matrix of ad(X_i) restricted to the theta span, as an 8x8 endomorphism of V^C.
  Matrix<T> ad_on_vc(int i) const;

 private:
  std::vector<T> c_;
};

class ClosureFailure : public std::invalid_argument {
 public:
  explicit ClosureFailure(const std::string& name) : std::invalid_argument("d^2 != 0 for coframe " + name) {}
};

class JacobiFailure : public std::invalid_argument {
 public:
  JacobiFailure(int i, int j, int k)
      : std::invalid_argument("Jacobi identity fails on (" + label_names()[i] + ", " + label_names()[j] + ", " +
                              label_names()[k] + ")"),
        triple{i, j, k} {}
  std::array<int, 3> triple;
};

// Throws ClosureFailure when d^2 != 0.
template <class T>
LieTable<T> lie_table_from_coframe(const CoframeSystem<T>& cs, double tol = kDefaultTolerance);

template <class T>
struct JacobiResult {
  int triples = 0;
  Residual total;
  std::optional<std::array<int, 3>> first_failure;
};

template <class T>
JacobiResult<T> jacobi_residual(const LieTable<T>& t, double tol = kDefaultTolerance);
// True, or throws JacobiFailure naming the first offending triple.
template <class T>
bool jacobi_check(const LieTable<T>& t, double tol = kDefaultTolerance);

// R(x,y,z,w) = g(R(x,y)z, w) with R(x,y) = sum over connection labels dX(x,y) ad(X).
template <class T>
VcTensor<T> curvature_from_table(const CoframeSystem<T>& cs, const LieTable<T>& t);

// 4 R0(x,y,z,w) = g(x,w)g(y,z) - g(x,z)g(y,w) + sum_s (-2 w_s(x,y)w_s(z,w) + w_s(x,z)w_s(w,y) + w_s(x,w)w_s(y,z)).
template <class T>
VcTensor<T> projective_curvature(const std::array<Matrix<T>, 3>& complex_structures);

// Ric(y,z) = sum_a R(h_a, y, z, h_a).
template <class T>
VcTensor<T> ricci(const VcTensor<T>& r);
template <class T>
T scalar_curvature(const VcTensor<T>& r);

template <class T>
struct CurvatureData {
  VcTensor<T> r;
  VcTensor<T> r0;
  HKTensor<T> r_prime;
  T r0_coefficient;     // Scal/64 in R = R' + (Scal/64) R0, fixed by trace
  T c;                  // from the g-term of d phi1 against -2iC g
  T scal_from_split;    // 64 * r0_coefficient
  T scal_from_c;        // 128 C / 3
  T scal_trace;         // full Ricci trace of R
  T scal_r0;            // full Ricci trace of R0
  std::array<Matrix<T>, 3> complex_structures;  // ad(2 phi_s) on V^C
  std::array<Matrix<T>, 3> frames;              // ad(psi_s) on V^C
  Residual decomposition;      // R - R' - coefficient * R0, R' read through its mixed block
  Residual tabulated_identity;   // R +- kappa(S) -+ (3/2) R0
  Residual kappa_identity;     // kappa_inv(R') +- S
  Residual r_prime_hk;         // hyper-Kaehler symmetries of R'
  Residual r_prime_traceless;  // Ricci contraction of R'
  Residual einstein;           // Ric - (Scal/8) g
  Residual four_form;          // sum eps_s ^ eps_s + (3/4) Omega
  Residual structures_match;   // model J_s vs the standard J_s
  Residual frames_match;       // model ad(psi_s) vs the standard frames
  Residual psi1_phi1;          // [psi_1, phi_1]
  bool passes(double tol) const;
};

// Compact or split only.
template <class T>
CurvatureData<T> curvature_model(ModelSpace space, double tol = kDefaultTolerance);

// Unknowns: the theta-theta parts of d psi^s + psi^j ^ psi^k and d phi^s + phi^j ^ phi^k
// (6 forms x 28 pairs); equations: the theta^3 part of d(d theta) = 0 for all eight theta labels.
template <class T>
struct BianchiSolution {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t nullity = 0;
  Matrix<T> basis;             // columns span the solution space
  std::vector<T> normalized;   // basis vector scaled so that (F2)_13 = 1
  T g1_diagonal;               // (G1)_{1 1bar} at h = 1
  Residual f2_h_pi;            // F2 - h pi
  Residual f3;                 // F2 - i F3
  Residual d_upsilon;          // D^s + (2h/3) Ups_s pi
  Residual c_zero;             // C^s in both pure blocks
  Residual f1_zero;
  Residual g23_zero;
  Residual g1_formula;         // G1 against F2 through the contraction formula
  Residual matches_family;     // theta-theta parts of build_coframe(1)
  Residual tabulated_family;     // same comparison against the tabulated d phi1 sign
  bool passes(double tol) const;
};

class BianchiDimensionError : public std::runtime_error {
 public:
  BianchiDimensionError(std::size_t nullity, const std::string& basis)
      : std::runtime_error("first Bianchi system has nullity " + std::to_string(nullity) + "; basis:\n" + basis),
        nullity(nullity) {}
  std::size_t nullity;
};

template <class T>
BianchiSolution<T> bianchi_family_solve(double tol = kDefaultTolerance);

}  // namespace cubicdisc
