#include "cubicdisc/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cubicdisc {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

std::string slot_name(const IndexSlot& s, int pos) {
  return "slot " + std::to_string(pos) + " (" + s.code() + ")";
}

template <class T>
void check_slot(const IndexedTensor<T>& t, int slot) {
  if (slot < 0 || std::size_t(slot) >= t.rank())
    throw std::out_of_range("slot " + std::to_string(slot) + " out of range for rank " +
                            std::to_string(t.rank()));
}

// Move slot `from` of t to position `to`, shifting the others.
template <class T>
IndexedTensor<T> move_slot(const IndexedTensor<T>& t, int from, int to) {
  std::vector<int> order(t.rank());
  std::iota(order.begin(), order.end(), 0);
  order.erase(order.begin() + from);
  order.insert(order.begin() + to, from);
  return t.permuted(order);
}

template <class T>
IndexedTensor<T> metric_tensor(IndexSlot first, IndexSlot second) {
  IndexedTensor<T> g({first, second});
  for (int a = 0; a < kDimW; ++a) g(a, a) = T(1);
  return g;
}

template <class T>
void check_same_kind(const IndexedTensor<T>& t, const std::vector<int>& slots) {
  if (slots.empty()) throw std::invalid_argument("empty slot list");
  std::vector<int> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated slot in slot list");
  for (int s : slots) check_slot(t, s);
  for (int s : slots)
    if (!(t.signature()[s] == t.signature()[slots[0]]))
      throw std::invalid_argument("slots of different kinds: " + slot_name(t.signature()[slots[0]], slots[0]) +
                                  " and " + slot_name(t.signature()[s], s));
}

template <class T>
IndexedTensor<T> permutation_average(const IndexedTensor<T>& t, const std::vector<int>& slots, bool alternating) {
  check_same_kind(t, slots);
  std::vector<int> perm(slots.size());
  std::iota(perm.begin(), perm.end(), 0);
  IndexedTensor<T> acc(t.signature(), t.real());
  long count = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> order(t.rank());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t k = 0; k < slots.size(); ++k) order[slots[k]] = slots[perm[k]];
    IndexedTensor<T> term = t.permuted(order);
    if (alternating && (inversions % 2)) acc -= term;
    else acc += term;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  acc *= frac<T>(1, count);
  return acc;
}

}  // namespace

std::string IndexSlot::code() const {
  std::string s = variance == Variance::upper ? "up" : "low";
  if (bar == Bar::barred) s += "_bar";
  return s;
}

IndexSlot IndexSlot::from_code(const std::string& code) {
  if (code == "up") return up();
  if (code == "low") return low();
  if (code == "up_bar") return up_bar();
  if (code == "low_bar") return low_bar();
  throw std::invalid_argument("unknown index slot code '" + code + "'");
}

template <class T>
IndexedTensor<T>::IndexedTensor(Signature sig, bool real)
    : sig_(std::move(sig)), comps_(ipow(kDimW, sig_.size())), real_(real) {}

template <class T>
IndexedTensor<T>::IndexedTensor(Signature sig, std::vector<T> components, bool real)
    : sig_(std::move(sig)), comps_(std::move(components)), real_(real) {
  if (comps_.size() != ipow(kDimW, sig_.size()))
    throw std::invalid_argument("component count " + std::to_string(comps_.size()) + " does not match 4^" +
                                std::to_string(sig_.size()));
}

template <class T>
std::size_t IndexedTensor<T>::offset(const std::vector<int>& idx) const {
  if (idx.size() != sig_.size()) throw std::invalid_argument("index count does not match tensor rank");
  std::size_t k = 0;
  for (int i : idx) {
    if (i < 0 || i >= kDimW) throw std::out_of_range("index value out of range 0..3");
    k = k * kDimW + std::size_t(i);
  }
  return k;
}

template <class T>
std::vector<int> IndexedTensor<T>::multi_index(std::size_t flat) const {
  std::vector<int> idx(sig_.size());
  for (std::size_t k = sig_.size(); k-- > 0;) {
    idx[k] = int(flat % kDimW);
    flat /= kDimW;
  }
  return idx;
}

template <class T>
IndexedTensor<T> IndexedTensor<T>::permuted(const std::vector<int>& perm) const {
  if (perm.size() != rank()) throw std::invalid_argument("permutation length does not match rank");
  Signature sig(rank());
  for (std::size_t k = 0; k < rank(); ++k) sig[k] = sig_[perm[k]];
  IndexedTensor out(sig, real_);
  std::vector<int> src(rank());
  for (std::size_t f = 0; f < comps_.size(); ++f) {
    const auto idx = out.multi_index(f);
    for (std::size_t k = 0; k < rank(); ++k) src[perm[k]] = idx[k];
    out.comps_[f] = comps_[offset(src)];
  }
  return out;
}

template <class T>
bool IndexedTensor<T>::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const T& x) { return x.is_zero(); });
}

template <class T>
IndexedTensor<T>& IndexedTensor<T>::operator+=(const IndexedTensor& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("adding tensors of different signatures");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

template <class T>
IndexedTensor<T>& IndexedTensor<T>::operator-=(const IndexedTensor& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("subtracting tensors of different signatures");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

template <class T>
IndexedTensor<T>& IndexedTensor<T>::operator*=(const T& s) {
  for (auto& x : comps_) x *= s;
  return *this;
}

template <class T>
IndexedTensor<T> outer(const IndexedTensor<T>& x, const IndexedTensor<T>& y) {
  Signature sig = x.signature();
  sig.insert(sig.end(), y.signature().begin(), y.signature().end());
  IndexedTensor<T> out(sig, x.real() && y.real());
  const std::size_t ny = y.components().size();
  for (std::size_t i = 0; i < x.components().size(); ++i) {
    const T& a = x.flat(i);
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < ny; ++j)
      if (!y.flat(j).is_zero()) out.flat(i * ny + j) = a * y.flat(j);
  }
  return out;
}

template <class T>
IndexedTensor<T> contract(const IndexedTensor<T>& t, int slot_a, int slot_b) {
  check_slot(t, slot_a);
  check_slot(t, slot_b);
  const auto& sa = t.signature()[slot_a];
  const auto& sb = t.signature()[slot_b];
  if (slot_a == slot_b || sa.variance == sb.variance || sa.bar != sb.bar)
    throw std::invalid_argument("illegal contraction of " + slot_name(sa, slot_a) + " with " +
                                slot_name(sb, slot_b));
  Signature sig;
  for (std::size_t k = 0; k < t.rank(); ++k)
    if (int(k) != slot_a && int(k) != slot_b) sig.push_back(t.signature()[k]);
  IndexedTensor<T> out(sig, t.real());
  std::vector<int> full(t.rank());
  for (std::size_t f = 0; f < out.components().size(); ++f) {
    const auto idx = out.multi_index(f);
    std::size_t p = 0;
    for (std::size_t k = 0; k < t.rank(); ++k)
      if (int(k) != slot_a && int(k) != slot_b) full[k] = idx[p++];
    T sum;
    for (int c = 0; c < kDimW; ++c) {
      full[slot_a] = full[slot_b] = c;
      const T& v = t.at(full);
      if (!v.is_zero()) sum += v;
    }
    out.flat(f) = sum;
  }
  return out;
}

template <class T>
IndexedTensor<T> contract(const IndexedTensor<T>& x, int slot_x, const IndexedTensor<T>& y, int slot_y) {
  check_slot(x, slot_x);
  check_slot(y, slot_y);
  return contract(outer(x, y), slot_x, int(x.rank()) + slot_y);
}

template <class T>
IndexedTensor<T> jmap(const IndexedTensor<T>& t) {
  const Matrix<T>& pi = standard_structure<T>().pi;
  // pi is a signed permutation: column a has its single entry in row partner(a).
  std::array<int, kDimW> partner{};
  for (int a = 0; a < kDimW; ++a)
    for (int s = 0; s < kDimW; ++s)
      if (!pi(s, a).is_zero()) partner[a] = s;
  IndexedTensor<T> out(t.signature(), t.real());
  std::vector<int> src(t.rank());
  for (std::size_t f = 0; f < out.components().size(); ++f) {
    const auto idx = out.multi_index(f);
    T factor(1);
    for (std::size_t k = 0; k < t.rank(); ++k) {
      src[k] = partner[idx[k]];
      factor *= pi(src[k], idx[k]);
    }
    out.flat(f) = factor * t.at(src).conj();
  }
  return out;
}

template <class T>
IndexedTensor<T> raise(const IndexedTensor<T>& t, int slot) {
  check_slot(t, slot);
  const IndexSlot s = t.signature()[slot];
  if (s.variance != Variance::lower) throw std::invalid_argument("raise needs a lower slot, got " + slot_name(s, slot));
  // g^{c a}: the new upper slot has the opposite bar class.
  const IndexedTensor<T> g = metric_tensor<T>(IndexSlot{Variance::upper, s.flipped_bar().bar},
                                              IndexSlot{Variance::upper, s.bar});
  return move_slot(contract(g, 1, t, slot), 0, slot);
}

template <class T>
IndexedTensor<T> lower(const IndexedTensor<T>& t, int slot) {
  check_slot(t, slot);
  const IndexSlot s = t.signature()[slot];
  if (s.variance != Variance::upper) throw std::invalid_argument("lower needs an upper slot, got " + slot_name(s, slot));
  const IndexedTensor<T> g = metric_tensor<T>(IndexSlot{Variance::lower, s.flipped_bar().bar},
                                              IndexSlot{Variance::lower, s.bar});
  return move_slot(contract(g, 1, t, slot), 0, slot);
}

template <class T>
IndexedTensor<T> symmetrize(const IndexedTensor<T>& t, const std::vector<int>& slots) {
  return permutation_average(t, slots, false);
}

template <class T>
IndexedTensor<T> antisymmetrize(const IndexedTensor<T>& t, const std::vector<int>& slots) {
  return permutation_average(t, slots, true);
}

template <class T>
IndexedTensor<T> bar_conjugate(const IndexedTensor<T>& t) {
  Signature sig;
  for (const auto& s : t.signature()) sig.push_back(s.flipped_bar());
  std::vector<T> comps;
  comps.reserve(t.components().size());
  for (const auto& x : t.components()) comps.push_back(x.conj());
  return IndexedTensor<T>(sig, std::move(comps), t.real());
}

template <class T>
VcTensor<T>::VcTensor(std::size_t rank) : rank_(rank), comps_(ipow(kDimV, rank)) {}

template <class T>
std::size_t VcTensor<T>::offset(const std::vector<int>& idx) const {
  if (idx.size() != rank_) throw std::invalid_argument("index count does not match tensor rank");
  std::size_t k = 0;
  for (int i : idx) k = k * kDimV + std::size_t(i);
  return k;
}

template <class T>
std::vector<int> VcTensor<T>::multi_index(std::size_t flat) const {
  std::vector<int> idx(rank_);
  for (std::size_t k = rank_; k-- > 0;) {
    idx[k] = int(flat % kDimV);
    flat /= kDimV;
  }
  return idx;
}

template <class T>
VcTensor<T> VcTensor<T>::permuted(const std::vector<int>& perm) const {
  VcTensor out(rank_);
  std::vector<int> src(rank_);
  for (std::size_t f = 0; f < comps_.size(); ++f) {
    const auto idx = multi_index(f);
    for (std::size_t k = 0; k < rank_; ++k) src[perm[k]] = idx[k];
    out.comps_[f] = comps_[offset(src)];
  }
  return out;
}

template <class T>
VcTensor<T> VcTensor<T>::act(const Matrix<T>& a) const {
  VcTensor out(rank_);
  std::vector<int> src(rank_);
  for (std::size_t f = 0; f < comps_.size(); ++f) {
    const auto idx = multi_index(f);
    T sum;
    for (std::size_t k = 0; k < rank_; ++k) {
      src = idx;
      for (int m = 0; m < kDimV; ++m) {
        const T& am = a(m, idx[k]);
        if (am.is_zero()) continue;
        src[k] = m;
        const T& v = comps_[offset(src)];
        if (!v.is_zero()) sum -= am * v;
      }
    }
    out.comps_[f] = sum;
  }
  return out;
}

template <class T>
VcTensor<T> VcTensor<T>::pullback(const Matrix<T>& m, const std::vector<int>& slots) const {
  VcTensor cur = *this;
  const std::size_t stride_total = comps_.size();
  for (std::size_t k = 0; k < rank_; ++k) {
    if (!slots.empty() && std::find(slots.begin(), slots.end(), int(k)) == slots.end()) continue;
    VcTensor next(rank_);
    const std::size_t stride = ipow(kDimV, rank_ - 1 - k);
    for (std::size_t f = 0; f < stride_total; ++f) {
      const int ik = int((f / stride) % kDimV);
      const std::size_t base = f - std::size_t(ik) * stride;
      T sum;
      for (int j = 0; j < kDimV; ++j) {
        const T& mj = m(j, ik);
        if (mj.is_zero()) continue;
        const T& v = cur.comps_[base + std::size_t(j) * stride];
        if (!v.is_zero()) sum += mj * v;
      }
      next.comps_[f] = sum;
    }
    cur = std::move(next);
  }
  return cur;
}

template <class T>
VcTensor<T> VcTensor<T>::trace(int slot_a, int slot_b) const {
  const Matrix<T>& g = standard_structure<T>().metric;  // equal to its own inverse
  VcTensor out(rank_ - 2);
  std::vector<int> full(rank_);
  for (std::size_t f = 0; f < out.comps_.size(); ++f) {
    const auto idx = out.multi_index(f);
    std::size_t p = 0;
    for (std::size_t k = 0; k < rank_; ++k)
      if (int(k) != slot_a && int(k) != slot_b) full[k] = idx[p++];
    T sum;
    for (int c = 0; c < kDimV; ++c)
      for (int d = 0; d < kDimV; ++d) {
        if (g(c, d).is_zero()) continue;
        full[slot_a] = c;
        full[slot_b] = d;
        const T& v = comps_[offset(full)];
        if (!v.is_zero()) sum += g(c, d) * v;
      }
    out.comps_[f] = sum;
  }
  return out;
}

template <class T>
bool VcTensor<T>::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const T& x) { return x.is_zero(); });
}

template <class T>
VcTensor<T>& VcTensor<T>::operator+=(const VcTensor& o) {
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

template <class T>
VcTensor<T>& VcTensor<T>::operator-=(const VcTensor& o) {
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

template <class T>
VcTensor<T>& VcTensor<T>::operator*=(const T& s) {
  for (auto& x : comps_) x *= s;
  return *this;
}

template <class T>
VcTensor<T> expand_to_vc(const IndexedTensor<T>& t) {
  for (const auto& s : t.signature())
    if (s.variance != Variance::lower) throw std::invalid_argument("expand_to_vc expects a covariant tensor");
  VcTensor<T> out(t.rank());
  std::vector<int> idx(t.rank());
  for (std::size_t f = 0; f < t.components().size(); ++f) {
    const auto m = t.multi_index(f);
    for (std::size_t k = 0; k < t.rank(); ++k) idx[k] = m[k] + (t.signature()[k].bar == Bar::barred ? kDimW : 0);
    out.at(idx) = t.flat(f);
    if (t.real() && t.rank() > 0) {
      for (std::size_t k = 0; k < t.rank(); ++k) idx[k] = (idx[k] + kDimW) % kDimV;
      out.at(idx) = t.flat(f).conj();
    }
  }
  return out;
}

namespace {

template <class T>
StructureTensors<T> build_structure() {
  StructureTensors<T> s;
  s.pi = Matrix<T>(kDimW, kDimW);
  // pi = e^1 ^ e^3 + e^2 ^ e^4
  s.pi(0, 2) = T(1);
  s.pi(2, 0) = T(-1);
  s.pi(1, 3) = T(1);
  s.pi(3, 1) = T(-1);

  auto from_matrix = [](Signature sig, const Matrix<T>& m) {
    IndexedTensor<T> t(std::move(sig));
    for (int a = 0; a < kDimW; ++a)
      for (int b = 0; b < kDimW; ++b) t(a, b) = m(a, b);
    return t;
  };
  const Matrix<T> id = Matrix<T>::identity(kDimW);
  s.pi_lower = from_matrix({IndexSlot::low(), IndexSlot::low()}, s.pi);
  s.g_lower = from_matrix({IndexSlot::low(), IndexSlot::low_bar()}, id);
  s.g_upper = from_matrix({IndexSlot::up(), IndexSlot::up_bar()}, id);
  // pi^{ab} = g^{a cbar} g^{b dbar} pi_{cbar dbar}, and pi_{cbar dbar} is the conjugate of pi_{cd}.
  s.pi_upper = raise(raise(bar_conjugate(s.pi_lower), 0), 1);
  // pi^a_{.bbar} = g^{a cbar} pi_{cbar bbar}; pi^{abar}_{.b} = g^{abar c} pi_{cb}.
  s.pi_up_lowbar = raise(bar_conjugate(s.pi_lower), 0);
  s.pi_upbar_low = raise(s.pi_lower, 0);

  s.metric = Matrix<T>(kDimV, kDimV);
  s.symplectic = Matrix<T>(kDimV, kDimV);
  for (int a = 0; a < kDimW; ++a) {
    s.metric(a, a + kDimW) = T(1);
    s.metric(a + kDimW, a) = T(1);
    for (int b = 0; b < kDimW; ++b) {
      s.symplectic(a, b) = s.pi(a, b);
      s.symplectic(a + kDimW, b + kDimW) = s.pi(a, b).conj();
    }
  }
  Matrix<T> j1(kDimV, kDimV), j2(kDimV, kDimV);
  for (int a = 0; a < kDimW; ++a) {
    j1(a, a) = T::imag_unit();
    j1(a + kDimW, a + kDimW) = -T::imag_unit();
    for (int b = 0; b < kDimW; ++b) {
      // J_2 e_bbar = -pi_{ab} e_a and J_2 e_b = -pi_{ab} e_abar
      j2(a, b + kDimW) = -s.pi(a, b);
      j2(a + kDimW, b) = -s.pi(a, b);
    }
  }
  s.J = {j1, j2, j1 * j2};
  return s;
}

}  // namespace

template <class T>
const StructureTensors<T>& standard_structure() {
  static const StructureTensors<T> s = build_structure<T>();
  return s;
}

template <class T>
Matrix<T> j_on_vector(const Matrix<T>& x) {
  const Matrix<T>& pi = standard_structure<T>().pi;
  return pi.transpose() * x.conj();
}

template <class T>
Matrix<T> realify_endomorphism(const Matrix<T>& a) {
  Matrix<T> m(kDimV, kDimV);
  for (int i = 0; i < kDimW; ++i)
    for (int j = 0; j < kDimW; ++j) {
      m(i, j) = a(i, j);
      m(i + kDimW, j + kDimW) = a(i, j).conj();
    }
  return m;
}

template <class T>
T evaluate(const VcTensor<T>& t, const std::vector<Matrix<T>>& vectors) {
  if (vectors.size() != t.rank()) throw std::invalid_argument("evaluate: wrong number of vectors");
  T sum;
  for (std::size_t f = 0; f < t.components().size(); ++f) {
    const T& v = t.flat(f);
    if (v.is_zero()) continue;
    const auto idx = t.multi_index(f);
    T term = v;
    for (std::size_t k = 0; k < idx.size() && !term.is_zero(); ++k) term *= vectors[k](idx[k], 0);
    sum += term;
  }
  return sum;
}

#define CUBICDISC_INSTANTIATE(T)                                                              \
  template class IndexedTensor<T>;                                                            \
  template class VcTensor<T>;                                                                 \
  template IndexedTensor<T> outer(const IndexedTensor<T>&, const IndexedTensor<T>&);          \
  template IndexedTensor<T> contract(const IndexedTensor<T>&, int, int);                      \
  template IndexedTensor<T> contract(const IndexedTensor<T>&, int, const IndexedTensor<T>&, int); \
  template IndexedTensor<T> jmap(const IndexedTensor<T>&);                                    \
  template IndexedTensor<T> raise(const IndexedTensor<T>&, int);                              \
  template IndexedTensor<T> lower(const IndexedTensor<T>&, int);                              \
  template IndexedTensor<T> symmetrize(const IndexedTensor<T>&, const std::vector<int>&);     \
  template IndexedTensor<T> antisymmetrize(const IndexedTensor<T>&, const std::vector<int>&); \
  template IndexedTensor<T> bar_conjugate(const IndexedTensor<T>&);                           \
  template VcTensor<T> expand_to_vc(const IndexedTensor<T>&);                                 \
  template const StructureTensors<T>& standard_structure();                                   \
  template Matrix<T> j_on_vector(const Matrix<T>&);                                           \
  template Matrix<T> realify_endomorphism(const Matrix<T>&);                                  \
  template T evaluate(const VcTensor<T>&, const std::vector<Matrix<T>>&);

CUBICDISC_INSTANTIATE(ExactScalar)
CUBICDISC_INSTANTIATE(FloatScalar)

}  // namespace cubicdisc
