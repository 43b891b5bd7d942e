#include "cubicdisc/orbit.hpp"

#include <numeric>

namespace cubicdisc {

namespace {

const Signature kQuartic = {IndexSlot::low(), IndexSlot::low(), IndexSlot::low(), IndexSlot::low()};

Signature lower_slots(int rank) { return Signature(rank, IndexSlot::low()); }

template <class T>
std::vector<T> flatten(const std::vector<Sp2Element<T>>& xs) {
  std::vector<T> out;
  for (const auto& x : xs) out.insert(out.end(), x.matrix().data().begin(), x.matrix().data().end());
  return out;
}

template <class T>
Residual sym_residual(const IndexedTensor<T>& six) {
  const IndexedTensor<T> sym = symmetrize(six, {0, 1, 2, 3});
  return measure(sym.components(), norm_of(six.components()));
}

// Columns are flattened tensors; returns the rank.
template <class T>
int column_rank(const std::vector<std::vector<T>>& cols) {
  if (cols.empty()) return 0;
  Matrix<T> m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return rank(m);
}

}  // namespace

template <class T>
MembershipReport is_cd_theorem(const HKTensor<T>& k, double tol) {
  const auto& alg = sp2_algebra<T>();
  const EndoOnSp2<T> tk = t_k(k);
  const EndoOnSp2<T> id = EndoOnSp2<T>::identity(kDimSp2);
  MembershipReport r;
  r.condition_I = measure_difference((T(2) * tk - T(7) * id) * (T(2) * tk + T(3) * id), Matrix<T>(kDimSp2, kDimSp2));

  std::vector<Sp2Element<T>> lhs, rhs;
  const auto& b = alg.basis();
  std::vector<Sp2Element<T>> tb;
  for (const auto& x : b) tb.push_back(alg.apply(tk, x));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      lhs.push_back(bracket(tb[i], tb[j]) - alg.apply(tk, bracket(tb[i], b[j])));
      rhs.push_back(frac<T>(3, 2) * (alg.apply(tk, bracket(b[i], b[j])) - bracket(b[i], tb[j])));
    }
  r.condition_II = measure_difference(flatten(lhs), flatten(rhs));
  r.theorem_verdict = r.condition_I.passes(tol) && r.condition_II.passes(tol);
  r.verdict = r.theorem_verdict;
  return r;
}

template <class T>
MembershipReport is_cd_coordinates(const SymQuartic<T>& s, double tol) {
  MembershipReport r = is_cd_theorem(kappa(s), tol);
  const auto& st = standard_structure<T>();
  const Matrix<T>& pl = st.pi;
  auto pu = [&](int a, int b) -> const T& { return st.pi_upper(a, b); };
  const IndexedTensor<T>& q = s.tensor();

  // P_{a m b n} = pi^{st} S_{s m ..} S_{t n ..}: first collect pi^{st} S_{s a b c}.
  IndexedTensor<T> raised(lower_slots(4));  // R^t_{abc} = pi^{st} S_{s a b c}
  for (int t = 0; t < kDimW; ++t)
    for (int a = 0; a < kDimW; ++a)
      for (int b = 0; b < kDimW; ++b)
        for (int c = 0; c < kDimW; ++c) {
          T sum;
          for (int sg = 0; sg < kDimW; ++sg)
            if (!pu(sg, t).is_zero()) sum += pu(sg, t) * q(sg, a, b, c);
          raised(t, a, b, c) = sum;
        }
  // pair(x..; y..) = pi^{st} S_{s x1 x2 x3} S_{t y1 y2 y3}
  auto pair = [&](int x1, int x2, int x3, int y1, int y2, int y3) {
    T sum;
    for (int t = 0; t < kDimW; ++t) {
      const T& v = q(t, y1, y2, y3);
      if (!v.is_zero()) sum += raised(t, x1, x2, x3) * v;
    }
    return sum;
  };

  // (I): pi^{st} pi^{mn} S_{s m a b} S_{t n c d} = 2 S_{abcd} + 21/8 (pi_ac pi_bd + pi_ad pi_bc)
  IndexedTensor<T> lhs1(kQuartic), rhs1(kQuartic);
  const T c218 = frac<T>(21, 8);
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b)
      for (int c = 0; c < kDimW; ++c)
        for (int d = 0; d < kDimW; ++d) {
          T sum;
          for (int m = 0; m < kDimW; ++m)
            for (int n = 0; n < kDimW; ++n)
              if (!pu(m, n).is_zero()) sum += pu(m, n) * pair(m, a, b, n, c, d);
          lhs1(a, b, c, d) = sum;
          rhs1(a, b, c, d) = T(2) * q(a, b, c, d) + c218 * (pl(a, c) * pl(b, d) + pl(a, d) * pl(b, c));
        }
  r.coord_I = measure_difference(lhs1.components(), rhs1.components());

  // (II) and the middle-index form, symmetrized over the first four slots of [a b c d | m n].
  IndexedTensor<T> two(lower_slots(6)), middle(lower_slots(6));
  const T c34 = frac<T>(3, 4), c14 = frac<T>(1, 4), c12 = frac<T>(1, 2);
  for (std::size_t f = 0; f < two.components().size(); ++f) {
    const auto i = two.multi_index(f);
    const int a = i[0], b = i[1], c = i[2], d = i[3], m = i[4], n = i[5];
    two.flat(f) = pair(a, b, c, d, m, n) + c34 * q(a, b, c, m) * pl(n, d) + c34 * q(a, b, c, n) * pl(m, d);
    middle.flat(f) = pair(m, a, b, n, c, d) - c14 * q(a, b, c, d) * pl(m, n) + c12 * pl(a, m) * q(n, b, c, d) -
                     c12 * pl(a, n) * q(m, b, c, d);
  }
  r.coord_II = sym_residual(two);
  r.middle_index = sym_residual(middle);
  r.coordinate_verdict = r.coord_I.passes(tol) && r.coord_II.passes(tol);
  r.middle_index_verdict = r.coord_I.passes(tol) && r.middle_index.passes(tol);
  r.verdict = r.coordinate_verdict;
  return r;
}

template <class T>
IndexedTensor<T> lie_derivative(const SymQuartic<T>& s, const Sp2Element<T>& z) {
  const Matrix<T> a = to_endomorphism(z);
  IndexedTensor<T> out(kQuartic);
  const IndexedTensor<T>& q = s.tensor();
  for (std::size_t f = 0; f < out.components().size(); ++f) {
    auto idx = out.multi_index(f);
    T sum;
    for (int slot = 0; slot < 4; ++slot) {
      const int keep = idx[slot];
      for (int m = 0; m < kDimW; ++m) {
        if (a(m, keep).is_zero()) continue;
        idx[slot] = m;
        sum += a(m, keep) * q.at(idx);
      }
      idx[slot] = keep;
    }
    out.flat(f) = sum;
  }
  return out;
}

template <class T>
std::vector<Sp2Element<T>> stabilizer_algebra(const SymQuartic<T>& s) {
  const auto& alg = sp2_algebra<T>();
  std::vector<std::vector<T>> cols;
  for (const auto& b : alg.basis()) cols.push_back(lie_derivative(s, b).components());
  Matrix<T> m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  const Matrix<T> ns = nullspace(m);
  std::vector<Sp2Element<T>> out;
  for (std::size_t j = 0; j < ns.cols(); ++j) out.push_back(alg.element(ns.column(j)));
  return out;
}

template <class T>
int orbit_dimension(const SymQuartic<T>& s, bool with_sp1) {
  const auto& alg = sp2_algebra<T>();
  const VcTensor<T> k = kappa(s).full();
  std::vector<std::vector<T>> cols;
  for (const auto& b : alg.basis()) cols.push_back(k.act(vc_endomorphism(b)).components());
  if (with_sp1)
    for (const auto& j : standard_structure<T>().J) cols.push_back(k.act(j).components());
  return column_rank(cols);
}

template <class T>
Matrix<T> cayley_sp2(const Sp2Element<T>& a) {
  const Matrix<T> e = to_endomorphism(a);
  const Matrix<T> id = Matrix<T>::identity(kDimW);
  const auto inv = try_inverse(id + e);
  if (!inv) throw SingularCayley();
  return (id - e) * *inv;
}

template <class T>
GroupCheck check_group_element(const Matrix<T>& g) {
  const Matrix<T>& pi = standard_structure<T>().pi;
  GroupCheck c;
  c.preserves_pi = measure_difference(g.transpose() * pi * g, pi);
  // j(x) = pi^t conj(x)
  c.commutes_j = measure_difference(g * pi.transpose(), pi.transpose() * g.conj());
  return c;
}

template <class T>
HKTensor<T> transport(const HKTensor<T>& k, const Matrix<T>& g) {
  return HKTensor<T>::from_full(k.full().pullback(realify_endomorphism(g)));
}

template <class T>
VcTensor<T> metric_two_form(const Matrix<T>& a) {
  const Matrix<T> w = a.transpose() * standard_structure<T>().metric;
  VcTensor<T> out(2);
  for (int x = 0; x < kDimV; ++x)
    for (int y = 0; y < kDimV; ++y) out(x, y) = w(x, y);
  return out;
}

template <class T>
VcTensor<T> wedge(const VcTensor<T>& a, const VcTensor<T>& b) {
  // each of the 6 shuffles appears 4 times among the 24 permutations
  VcTensor<T> out(4);
  for (int x = 0; x < kDimV; ++x)
    for (int y = 0; y < kDimV; ++y)
      for (int z = 0; z < kDimV; ++z)
        for (int w = 0; w < kDimV; ++w)
          out(x, y, z, w) = a(x, y) * b(z, w) - a(x, z) * b(y, w) + a(x, w) * b(y, z) + a(z, w) * b(x, y) -
                            a(y, w) * b(x, z) + a(y, z) * b(x, w);
  return out;
}

template <class T>
VcTensor<T> fundamental_four_form() {
  VcTensor<T> out(4);
  for (const auto& j : standard_structure<T>().J) {
    const VcTensor<T> w = metric_two_form(j);
    out += wedge(w, w);
  }
  return out;
}

template <class T>
FramesResult<T> k_from_frames(const std::array<Matrix<T>, 3>& frames, const std::array<Matrix<T>, 3>& cs,
                               double tol) {
  const Matrix<T>& g = standard_structure<T>().metric;
  for (int s = 0; s < 3; ++s) {
    if (!measure_difference(frames[s].transpose() * g, -(g * frames[s])).passes(tol))
      throw ModelError("frame " + std::to_string(s + 1) + " is skew for g");
    for (int t = 0; t < 3; ++t)
      if (!measure_difference(frames[s] * cs[t], cs[t] * frames[s]).passes(tol))
        throw ModelError("frame " + std::to_string(s + 1) + " commutes with I_" + std::to_string(t + 1));
  }
  FramesResult<T> r;
  r.brackets = measure_difference(commutator(frames[0], frames[1]), frames[2]);
  r.brackets.merge(measure_difference(commutator(frames[1], frames[2]), frames[0]));
  r.brackets.merge(measure_difference(commutator(frames[2], frames[0]), frames[1]));

  std::array<VcTensor<T>, 3> eps, om;
  VcTensor<T> ee(4), omega(4);
  for (int s = 0; s < 3; ++s) {
    eps[s] = metric_two_form(frames[s]);
    om[s] = metric_two_form(cs[s]);
    ee += wedge(eps[s], eps[s]);
    omega += wedge(om[s], om[s]);
  }
  r.four_form = measure_difference((ee + frac<T>(3, 4) * omega).components(), VcTensor<T>(4).components());

  const T c38 = frac<T>(3, 8);
  VcTensor<T> k(4);
  for (int x = 0; x < kDimV; ++x)
    for (int y = 0; y < kDimV; ++y)
      for (int z = 0; z < kDimV; ++z)
        for (int w = 0; w < kDimV; ++w) {
          T v = c38 * (g(x, w) * g(y, z) - g(x, z) * g(y, w));
          for (int s = 0; s < 3; ++s)
            v += eps[s](x, y) * eps[s](z, w) + c38 * (om[s](x, z) * om[s](w, y) + om[s](x, w) * om[s](y, z));
          k(x, y, z, w) = v;
        }
  r.k_full = k;
  r.k = HKTensor<T>::from_full(k);
  r.verdict = r.four_form.passes(tol) && r.brackets.passes(tol);
  return r;
}

#define CUBICDISC_INSTANTIATE(T)                                                                              \
  template MembershipReport is_cd_theorem(const HKTensor<T>&, double);                                        \
  template MembershipReport is_cd_coordinates(const SymQuartic<T>&, double);                                  \
  template IndexedTensor<T> lie_derivative(const SymQuartic<T>&, const Sp2Element<T>&);                        \
  template std::vector<Sp2Element<T>> stabilizer_algebra(const SymQuartic<T>&);                               \
  template int orbit_dimension(const SymQuartic<T>&, bool);                                                   \
  template Matrix<T> cayley_sp2(const Sp2Element<T>&);                                                        \
  template GroupCheck check_group_element(const Matrix<T>&);                                                  \
  template HKTensor<T> transport(const HKTensor<T>&, const Matrix<T>&);                                       \
  template VcTensor<T> metric_two_form(const Matrix<T>&);                                                     \
  template VcTensor<T> wedge(const VcTensor<T>&, const VcTensor<T>&);                                         \
  template VcTensor<T> fundamental_four_form<T>();                                                            \
  template FramesResult<T> k_from_frames(const std::array<Matrix<T>, 3>&, const std::array<Matrix<T>, 3>&, \
                                         double);

CUBICDISC_INSTANTIATE(ExactScalar)
CUBICDISC_INSTANTIATE(FloatScalar)

}  // namespace cubicdisc
