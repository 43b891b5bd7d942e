#pragma once

#include <array>
#include <vector>

#include "cubicdisc/hk.hpp"

namespace cubicdisc {

// Residuals of every characterization of the cubic-discriminant orbit.
struct MembershipReport {
  Residual condition_I;   // (2T - 7)(2T + 3) = 0
  Residual condition_II;  // bracket identity on all ordered basis pairs
  Residual coord_I;       // coordinate form (I) on S
  Residual coord_II;      // symmetrized coordinate form (II)
  Residual middle_index;  // the equivalent middle-index form of (II)
  bool theorem_verdict = false;
  bool coordinate_verdict = false;
  bool middle_index_verdict = false;
  bool verdict = false;
};

// Theorem route: conditions on T_K. Coordinate residuals are left empty.
template <class T>
MembershipReport is_cd_theorem(const HKTensor<T>& k, double tol = kDefaultTolerance);

// Coordinate route on S, together with the theorem route on kappa(S).
// The verdict here is decided by the coordinate conditions alone.
template <class T>
MembershipReport is_cd_coordinates(const SymQuartic<T>& s, double tol = kDefaultTolerance);

// Z . S = sum over slots S(.., Z x, ..) for Z acting on W; complex Z gives a complex tensor.
template <class T>
IndexedTensor<T> lie_derivative(const SymQuartic<T>& s, const Sp2Element<T>& z);

// Complex nullspace of Z -> Z . S over sp(2) (x) C.
template <class T>
std::vector<Sp2Element<T>> stabilizer_algebra(const SymQuartic<T>& s);

// Rank of Z -> Z . kappa(S) over sp(2), or over sp(2) + sp(1) when with_sp1.
template <class T>
int orbit_dimension(const SymQuartic<T>& s, bool with_sp1);

class SingularCayley : public std::invalid_argument {
 public:
  SingularCayley() : std::invalid_argument("Id + A is singular") {}
};

// (Id - A)(Id + A)^{-1} for the endomorphism A of an sp(2) element.
template <class T>
Matrix<T> cayley_sp2(const Sp2Element<T>& a);

struct GroupCheck {
  Residual preserves_pi;  // g^t pi g = pi
  Residual commutes_j;    // g j = j g
};

template <class T>
GroupCheck check_group_element(const Matrix<T>& g);

// (K . g)(x, y, z, w) = K(gx, gy, gz, gw) with g extended to V^C.
template <class T>
HKTensor<T> transport(const HKTensor<T>& k, const Matrix<T>& g);

template <class T>
struct FramesResult {
  HKTensor<T> k;
  VcTensor<T> k_full;
  Residual four_form;  // sum eps_s ^ eps_s + (3/4) Omega
  Residual brackets;   // [E_i, E_j] = E_k
  bool verdict = false;
};

// K(x,y,z,w) = sum g(E_s x,y) g(E_s z,w) + 3/8 (g(x,w)g(y,z) - g(x,z)g(y,w))
//              + 3/8 sum (w_s(x,z) w_s(w,y) + w_s(x,w) w_s(y,z)),  w_s(x,y) = g(I_s x, y).
// Frames are 8x8 on V^C; they must be g-skew and commute with every I_s.
template <class T>
FramesResult<T> k_from_frames(const std::array<Matrix<T>, 3>& frames, const std::array<Matrix<T>, 3>& complex_structures,
                               double tol = kDefaultTolerance);

// Rank-2 form b(x, y) = g(A x, y).
template <class T>
VcTensor<T> metric_two_form(const Matrix<T>& a);

// (a ^ b)(x,y,z,w) = 1/4 sum over S4 sgn(p) a(x_p1, x_p2) b(x_p3, x_p4).
template <class T>
VcTensor<T> wedge(const VcTensor<T>& a, const VcTensor<T>& b);

// Omega = sum w_s ^ w_s.
template <class T>
VcTensor<T> fundamental_four_form();

}  // namespace cubicdisc
