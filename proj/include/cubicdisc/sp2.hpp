#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicdisc/matrix.hpp"
#include "cubicdisc/residual.hpp"
#include "cubicdisc/tensor.hpp"

namespace cubicdisc {

inline constexpr int kDimSp2 = 10;

class ModelError : public std::invalid_argument {
 public:
  explicit ModelError(const std::string& condition) : std::invalid_argument("violated condition: " + condition) {}
};

// Element of sp(2) (complexified) in the symmetric model: a symmetric 4x4 matrix X_{ab}.
template <class T>
class Sp2Element {
 public:
  Sp2Element() : x_(kDimW, kDimW) {}
  explicit Sp2Element(Matrix<T> x);

  const Matrix<T>& matrix() const { return x_; }
  const T& operator()(int a, int b) const { return x_(a, b); }
  // Fixed by the j-map, i.e. an element of the real form.
  bool is_real() const;
  Sp2Element jmap() const;

  Sp2Element& operator+=(const Sp2Element& o) { x_ += o.x_; return *this; }
  Sp2Element& operator-=(const Sp2Element& o) { x_ -= o.x_; return *this; }
  Sp2Element& operator*=(const T& s) { x_ *= s; return *this; }
  friend Sp2Element operator+(Sp2Element x, const Sp2Element& y) { return x += y; }
  friend Sp2Element operator-(Sp2Element x, const Sp2Element& y) { return x -= y; }
  friend Sp2Element operator*(const T& s, Sp2Element x) { return x *= s; }
  friend bool operator==(const Sp2Element& x, const Sp2Element& y) { return x.x_ == y.x_; }

 private:
  Matrix<T> x_;
};

// Endomorphism of sp(2) (x) C as a 10x10 matrix acting on coordinates in the $-basis.
template <class T>
using EndoOnSp2 = Matrix<T>;

// A^a_b = pi^{as} X_{sb}
template <class T>
Matrix<T> to_endomorphism(const Sp2Element<T>& x);
// Inverse of to_endomorphism; checks that a preserves pi (and commutes with j when require_real).
template <class T>
Sp2Element<T> from_endomorphism(const Matrix<T>& a, bool require_real = true);
// The same element acting on V^C: blocks pi X on W and X pi on Wbar.
template <class T>
Matrix<T> vc_endomorphism(const Sp2Element<T>& x);

template <class T>
Sp2Element<T> bracket(const Sp2Element<T>& x, const Sp2Element<T>& y);
template <class T>
T inner(const Sp2Element<T>& x, const Sp2Element<T>& y);

template <class T>
class Sp2Algebra {
 public:
  Sp2Algebra();

  // $_{ab} for a <= b, lexicographic.
  const std::vector<Sp2Element<T>>& basis() const { return dollar_; }
  // sharp^{ab} = (e^a (x) e^b + e^b (x) e^a) / 2 for a <= b.
  const std::vector<Sp2Element<T>>& sharp_basis() const { return sharp_; }
  // $_{aa} for a == b, 2 $_{ab} otherwise.
  const std::vector<Sp2Element<T>>& sharp_duals() const { return sharp_dual_; }
  // Dual of an arbitrary basis with respect to inner().
  std::vector<Sp2Element<T>> dual_basis(const std::vector<Sp2Element<T>>& b) const;

  Matrix<T> coordinates(const Sp2Element<T>& x) const;
  Sp2Element<T> element(const Matrix<T>& coords) const;
  Sp2Element<T> apply(const EndoOnSp2<T>& l, const Sp2Element<T>& x) const;
  // Matrix of a linear map given by its values on the $-basis.
  EndoOnSp2<T> matrix_of(const std::vector<Sp2Element<T>>& images) const;

  EndoOnSp2<T> ad(const Sp2Element<T>& x) const;
  // (dagger L) X = sum_s [E*_s, L [E_s, X]] over the pairs (sharp, sharp*).
  EndoOnSp2<T> dagger(const EndoOnSp2<T>& l) const;
  // Same sum over an arbitrary basis and its dual.
  EndoOnSp2<T> dagger(const EndoOnSp2<T>& l, const std::vector<Sp2Element<T>>& b) const;
  // L commutes with the j-map on the $-basis.
  bool preserves_real_form(const EndoOnSp2<T>& l) const;
  // Orthogonal projection onto span(v) w.r.t. inner(); v must be linearly independent.
  EndoOnSp2<T> projection_onto(const std::vector<Sp2Element<T>>& v) const;
  // Spanning set of the real form: X + jX and i(X - jX) over the $-basis, reduced to a basis.
  std::vector<Sp2Element<T>> real_basis() const;

 private:
  std::vector<Sp2Element<T>> dollar_, sharp_, sharp_dual_;
  std::vector<std::array<int, 2>> pivot_;
};

template <class T>
const Sp2Algebra<T>& sp2_algebra();

}  // namespace cubicdisc
