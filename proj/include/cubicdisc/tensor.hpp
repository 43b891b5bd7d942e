#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cubicdisc/matrix.hpp"
#include "cubicdisc/scalar.hpp"

namespace cubicdisc {

inline constexpr int kDimW = 4;
inline constexpr int kDimV = 8;

enum class Variance { upper, lower };
enum class Bar { plain, barred };

struct IndexSlot {
  Variance variance = Variance::lower;
  Bar bar = Bar::plain;

  static IndexSlot up() { return {Variance::upper, Bar::plain}; }
  static IndexSlot low() { return {Variance::lower, Bar::plain}; }
  static IndexSlot up_bar() { return {Variance::upper, Bar::barred}; }
  static IndexSlot low_bar() { return {Variance::lower, Bar::barred}; }

  IndexSlot flipped_bar() const { return {variance, bar == Bar::plain ? Bar::barred : Bar::plain}; }
  std::string code() const;
  static IndexSlot from_code(const std::string& code);

  friend bool operator==(const IndexSlot& x, const IndexSlot& y) {
    return x.variance == y.variance && x.bar == y.bar;
  }
};

using Signature = std::vector<IndexSlot>;

// One block of a tensor on V^C = W + Wbar: every index runs over 0..3 and the
// slot kinds say which of W, Wbar (or their duals) each index refers to.
// A real tensor also carries the bar-flipped block, equal to the conjugate array.
template <class T>
class IndexedTensor {
 public:
  IndexedTensor() = default;
  explicit IndexedTensor(Signature sig, bool real = true);
  IndexedTensor(Signature sig, std::vector<T> components, bool real = true);

  std::size_t rank() const { return sig_.size(); }
  const Signature& signature() const { return sig_; }
  const std::vector<T>& components() const { return comps_; }
  bool real() const { return real_; }

  T& at(const std::vector<int>& idx) { return comps_[offset(idx)]; }
  const T& at(const std::vector<int>& idx) const { return comps_[offset(idx)]; }
  template <class... I>
  T& operator()(I... idx) {
    return comps_[offset({int(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return comps_[offset({int(idx)...})];
  }
  T& flat(std::size_t k) { return comps_[k]; }
  const T& flat(std::size_t k) const { return comps_[k]; }

  // Result slot k is source slot perm[k].
  IndexedTensor permuted(const std::vector<int>& perm) const;
  bool is_zero() const;

  IndexedTensor& operator+=(const IndexedTensor& o);
  IndexedTensor& operator-=(const IndexedTensor& o);
  IndexedTensor& operator*=(const T& s);
  friend IndexedTensor operator+(IndexedTensor x, const IndexedTensor& y) { return x += y; }
  friend IndexedTensor operator-(IndexedTensor x, const IndexedTensor& y) { return x -= y; }
  friend IndexedTensor operator*(IndexedTensor x, const T& s) { return x *= s; }
  friend IndexedTensor operator*(const T& s, IndexedTensor x) { return x *= s; }
  friend bool operator==(const IndexedTensor& x, const IndexedTensor& y) {
    return x.sig_ == y.sig_ && x.comps_ == y.comps_;
  }

  std::size_t offset(const std::vector<int>& idx) const;
  std::vector<int> multi_index(std::size_t flat) const;

 private:
  Signature sig_;
  std::vector<T> comps_{T()};
  bool real_ = true;
};

template <class T>
IndexedTensor<T> outer(const IndexedTensor<T>& x, const IndexedTensor<T>& y);

// Sum over a matched upper/lower pair of the same bar class.
template <class T>
IndexedTensor<T> contract(const IndexedTensor<T>& t, int slot_a, int slot_b);

// contract(outer(x, y), slot_x, rank(x) + slot_y)
template <class T>
IndexedTensor<T> contract(const IndexedTensor<T>& x, int slot_x, const IndexedTensor<T>& y, int slot_y);

// Antilinear extension of the quaternionic structure j.
template <class T>
IndexedTensor<T> jmap(const IndexedTensor<T>& t);

template <class T>
IndexedTensor<T> raise(const IndexedTensor<T>& t, int slot);
template <class T>
IndexedTensor<T> lower(const IndexedTensor<T>& t, int slot);
template <class T>
IndexedTensor<T> symmetrize(const IndexedTensor<T>& t, const std::vector<int>& slots);
template <class T>
IndexedTensor<T> antisymmetrize(const IndexedTensor<T>& t, const std::vector<int>& slots);
template <class T>
IndexedTensor<T> bar_conjugate(const IndexedTensor<T>& t);

// Covariant tensor on V^C (8^rank entries), basis order e_1..e_4, e_1bar..e_4bar.
template <class T>
class VcTensor {
 public:
  VcTensor() = default;
  explicit VcTensor(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<T>& components() const { return comps_; }

  template <class... I>
  T& operator()(I... idx) {
    return comps_[offset({int(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return comps_[offset({int(idx)...})];
  }
  T& at(const std::vector<int>& idx) { return comps_[offset(idx)]; }
  const T& at(const std::vector<int>& idx) const { return comps_[offset(idx)]; }
  T& flat(std::size_t k) { return comps_[k]; }
  const T& flat(std::size_t k) const { return comps_[k]; }

  VcTensor permuted(const std::vector<int>& perm) const;
  // Infinitesimal action of an endomorphism a: -sum_k T(.., a x_k, ..).
  VcTensor act(const Matrix<T>& a) const;
  // Pullback by a linear map m in the listed slots (all slots when empty): T(.., m x_k, ..).
  VcTensor pullback(const Matrix<T>& m, const std::vector<int>& slots = {}) const;
  // Trace of two slots with the inverse metric.
  VcTensor trace(int slot_a, int slot_b) const;
  bool is_zero() const;

  VcTensor& operator+=(const VcTensor& o);
  VcTensor& operator-=(const VcTensor& o);
  VcTensor& operator*=(const T& s);
  friend VcTensor operator+(VcTensor x, const VcTensor& y) { return x += y; }
  friend VcTensor operator-(VcTensor x, const VcTensor& y) { return x -= y; }
  friend VcTensor operator*(VcTensor x, const T& s) { return x *= s; }
  friend VcTensor operator*(const T& s, VcTensor x) { return x *= s; }
  friend bool operator==(const VcTensor& x, const VcTensor& y) {
    return x.rank_ == y.rank_ && x.comps_ == y.comps_;
  }

  std::size_t offset(const std::vector<int>& idx) const;
  std::vector<int> multi_index(std::size_t flat) const;

 private:
  std::size_t rank_ = 0;
  std::vector<T> comps_{T()};
};

// Full V^C array of a covariant tensor given by one block (and its conjugate block when real).
template <class T>
VcTensor<T> expand_to_vc(const IndexedTensor<T>& t);

template <class T>
struct StructureTensors {
  IndexedTensor<T> pi_lower;       // pi_{ab}
  IndexedTensor<T> pi_upper;       // pi^{ab}
  IndexedTensor<T> pi_up_lowbar;   // pi^a_{.bbar}
  IndexedTensor<T> pi_upbar_low;   // pi^{abar}_{.b}
  IndexedTensor<T> g_lower;        // g_{a bbar}
  IndexedTensor<T> g_upper;        // g^{a bbar}
  Matrix<T> pi;                    // 4x4 array of pi_{ab}
  Matrix<T> metric;                // 8x8 g on V^C
  Matrix<T> symplectic;            // 8x8 pi on V^C (complex bilinear extension)
  std::array<Matrix<T>, 3> J;      // J_1, J_2, J_3 on V^C
};

template <class T>
const StructureTensors<T>& standard_structure();

// Coordinates of j(x) for x in W: j(x)^a = sum_s pi_{s a} conj(x^s).
template <class T>
Matrix<T> j_on_vector(const Matrix<T>& x);

// Real endomorphism of V^C with W block a (4x4) and conjugate block on Wbar.
template <class T>
Matrix<T> realify_endomorphism(const Matrix<T>& a);

template <class T>
T evaluate(const VcTensor<T>& t, const std::vector<Matrix<T>>& vectors);

}  // namespace cubicdisc
