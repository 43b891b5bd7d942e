#include "cubicdisc/hk.hpp"

#include <algorithm>

#include "cubicdisc/orbit.hpp"

namespace cubicdisc {

namespace {

const Signature kQuarticSig = {IndexSlot::low(), IndexSlot::low(), IndexSlot::low(), IndexSlot::low()};
const Signature kMixedSig = {IndexSlot::low(), IndexSlot::low_bar(), IndexSlot::low(), IndexSlot::low_bar()};

int bar_index(int a) { return (a + kDimW) % kDimV; }

template <class T>
Residual tensor_difference(const VcTensor<T>& x, const VcTensor<T>& y) {
  return measure_difference(x.components(), y.components());
}

}  // namespace

template <class T>
SymQuartic<T>::SymQuartic() : s_(kQuarticSig) {}

template <class T>
SymQuartic<T>::SymQuartic(IndexedTensor<T> s) : s_(std::move(s)) {
  if (!(s_.signature() == kQuarticSig)) throw ModelError("S has four lower unbarred slots");
  for (const std::vector<int>& p : {std::vector<int>{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}})
    if (!measure_difference(s_.permuted(p).components(), s_.components()).passes(kDefaultTolerance))
      throw ModelError("S is totally symmetric");
  if (!measure_difference(jmap(s_).components(), s_.components()).passes(kDefaultTolerance))
    throw ModelError("S_{abcd} = (jS)_{abcd}");
}

template <class T>
std::map<std::string, T> SymQuartic<T>::independent_components() const {
  std::map<std::string, T> out;
  for (int a = 0; a < kDimW; ++a)
    for (int b = a; b < kDimW; ++b)
      for (int c = b; c < kDimW; ++c)
        for (int d = c; d < kDimW; ++d)
          out[std::string{char('1' + a), char('1' + b), char('1' + c), char('1' + d)}] = s_(a, b, c, d);
  return out;
}

template <class T>
SymQuartic<T> SymQuartic<T>::from_independent_components(const std::map<std::string, T>& comps) {
  IndexedTensor<T> s(kQuarticSig);
  for (std::size_t f = 0; f < s.components().size(); ++f) {
    auto idx = s.multi_index(f);
    std::sort(idx.begin(), idx.end());
    std::string key;
    for (int i : idx) key += char('1' + i);
    auto it = comps.find(key);
    if (it == comps.end()) throw std::invalid_argument("missing quartic component " + key);
    s.flat(f) = it->second;
  }
  if (comps.size() != 35) throw std::invalid_argument("a symmetric quartic has 35 independent components");
  return SymQuartic(std::move(s));
}

template <class T>
SymQuartic<T> realify_quartic(const IndexedTensor<T>& raw) {
  const IndexedTensor<T> sym = symmetrize(raw, {0, 1, 2, 3});
  return SymQuartic<T>(frac<T>(1, 2) * (sym + jmap(sym)));
}

template <class T>
SymQuartic<T> random_quartic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  IndexedTensor<T> raw(kQuarticSig);
  for (std::size_t f = 0; f < raw.components().size(); ++f) {
    const int re = dist(rng);
    const int im = dist(rng);
    raw.flat(f) = T(re) + T(im) * T::imag_unit();
  }
  return realify_quartic(raw);
}

template <class T>
SymQuartic<T> transport(const SymQuartic<T>& s, const Matrix<T>& g) {
  IndexedTensor<T> cur = s.tensor();
  for (int slot = 0; slot < 4; ++slot) {
    IndexedTensor<T> next(kQuarticSig);
    for (std::size_t f = 0; f < next.components().size(); ++f) {
      auto idx = next.multi_index(f);
      const int target = idx[slot];
      T sum;
      for (int m = 0; m < kDimW; ++m) {
        if (g(m, target).is_zero()) continue;
        idx[slot] = m;
        sum += g(m, target) * cur.at(idx);
      }
      next.flat(f) = sum;
    }
    cur = std::move(next);
  }
  return SymQuartic<T>(std::move(cur));
}

template <class T>
T quartic_form(const SymQuartic<T>& s, const Matrix<T>& x) {
  T sum;
  for (std::size_t f = 0; f < s.tensor().components().size(); ++f) {
    const T& v = s.tensor().flat(f);
    if (v.is_zero()) continue;
    const auto idx = s.tensor().multi_index(f);
    sum += v * x(idx[0], 0) * x(idx[1], 0) * x(idx[2], 0) * x(idx[3], 0);
  }
  return sum;
}

template <class T>
HKTensor<T>::HKTensor() : k_(kMixedSig) {}

template <class T>
HKTensor<T>::HKTensor(IndexedTensor<T> mixed) : k_(std::move(mixed)) {
  if (!(k_.signature() == kMixedSig)) throw ModelError("K is given by its mixed block K_{a bbar c dbar}");
}

template <class T>
VcTensor<T> HKTensor<T>::full() const {
  VcTensor<T> out(4);
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b)
      for (int c = 0; c < kDimW; ++c)
        for (int d = 0; d < kDimW; ++d) {
          const int B = b + kDimW, D = d + kDimW, A = a + kDimW, C = c + kDimW;
          out(a, B, c, D) = k_(a, b, c, d);
          out(a, B, C, d) = -k_(a, b, d, c);
          out(A, b, c, D) = -k_(b, a, c, d);
          out(A, b, C, d) = k_(b, a, d, c);
        }
  return out;
}

template <class T>
HKTensor<T> HKTensor<T>::from_full(const VcTensor<T>& k) {
  IndexedTensor<T> m(kMixedSig);
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b)
      for (int c = 0; c < kDimW; ++c)
        for (int d = 0; d < kDimW; ++d) m(a, b, c, d) = k(a, b + kDimW, c, d + kDimW);
  return HKTensor(std::move(m));
}

template <class T>
HKInvariants check_hk_invariants(const VcTensor<T>& k) {
  const auto& st = standard_structure<T>();
  HKInvariants r;
  r.antisymmetry = tensor_difference(k.permuted({1, 0, 2, 3}), T(-1) * k);
  r.antisymmetry.merge(tensor_difference(k.permuted({0, 1, 3, 2}), T(-1) * k));
  r.bianchi = tensor_difference(k + k.permuted({2, 0, 1, 3}) + k.permuted({1, 2, 0, 3}), VcTensor<T>(4));
  r.j_invariance = tensor_difference(k.pullback(st.J[0], {2, 3}), k);
  for (int s = 1; s < 3; ++s) r.j_invariance.merge(tensor_difference(k.pullback(st.J[s], {2, 3}), k));
  r.pair_symmetry = tensor_difference(k.permuted({2, 3, 0, 1}), k);
  VcTensor<T> flipped(4);
  for (std::size_t f = 0; f < k.components().size(); ++f) {
    auto idx = k.multi_index(f);
    for (auto& i : idx) i = bar_index(i);
    flipped.flat(f) = k.at(idx).conj();
  }
  r.reality = tensor_difference(flipped, k);
  return r;
}

template <class T>
HKTensor<T> kappa(const SymQuartic<T>& s) {
  const auto& pmix = standard_structure<T>().pi_up_lowbar;
  // [a, c, t, bbar] then [a, c, bbar, dbar]
  const IndexedTensor<T> t1 = contract(s.tensor(), 1, pmix, 0);
  const IndexedTensor<T> t2 = contract(t1, 2, pmix, 0);
  return HKTensor<T>(t2.permuted({0, 2, 1, 3}));
}

template <class T>
VcTensor<T> kappa_full(const SymQuartic<T>& s) {
  const Matrix<T>& j2 = standard_structure<T>().J[1];
  const VcTensor<T> full = expand_to_vc(s.tensor());
  return full.pullback(j2, {1, 3}) - full.pullback(j2, {1, 2});
}

template <class T>
SymQuartic<T> kappa_inv(const HKTensor<T>& k) {
  const auto& st = standard_structure<T>();
  const VcTensor<T> full = k.full();
  const VcTensor<T> s = frac<T>(1, 2) * (full.pullback(st.J[1], {1, 3}) - full.pullback(st.J[2], {1, 3}));
  IndexedTensor<T> block(kQuarticSig);
  for (std::size_t f = 0; f < block.components().size(); ++f) block.flat(f) = s.at(block.multi_index(f));
  return SymQuartic<T>(std::move(block));
}

template <class T>
EndoOnSp2<T> t_k(const HKTensor<T>& k) {
  const auto& alg = sp2_algebra<T>();
  std::vector<Sp2Element<T>> images;
  for (const auto& y : alg.basis()) {
    IndexedTensor<T> ylow({IndexSlot::low(), IndexSlot::low()});
    for (int a = 0; a < kDimW; ++a)
      for (int b = 0; b < kDimW; ++b) ylow(a, b) = y(a, b);
    const IndexedTensor<T> yup = raise(raise(ylow, 0), 1);  // Y^{sbar tbar}
    // [a, sbar, b, tbar] x [sbar', tbar'] -> [a, b, tbar, tbar'] -> [a, b]
    const IndexedTensor<T> x = contract(contract(k.mixed(), 1, yup, 0), 2, 3);
    Matrix<T> xm(kDimW, kDimW);
    for (int a = 0; a < kDimW; ++a)
      for (int b = 0; b < kDimW; ++b) xm(a, b) = x(a, b);
    images.emplace_back(xm);
  }
  return alg.matrix_of(images);
}

template <class T>
EndoOnSp2<T> t_k_frame(const HKTensor<T>& k) {
  const auto& alg = sp2_algebra<T>();
  const Matrix<T>& g = standard_structure<T>().metric;
  const VcTensor<T> full = k.full();
  std::vector<Sp2Element<T>> images;
  for (const auto& b : alg.basis()) {
    const Matrix<T> a = vc_endomorphism(b);
    // bilinear form (x, y) -> 1/2 sum_{c,d} K(x, y, e_c, A e_d) g^{cd}
    Matrix<T> form(kDimV, kDimV);
    for (int x = 0; x < kDimV; ++x)
      for (int y = 0; y < kDimV; ++y) {
        T sum;
        for (int c = 0; c < kDimV; ++c) {
          const int d = bar_index(c);
          for (int m = 0; m < kDimV; ++m)
            if (!a(m, d).is_zero()) sum += full(x, y, c, m) * a(m, d);
        }
        form(x, y) = frac<T>(1, 2) * sum;
      }
    // g(T x, y) = form(x, y)  =>  T = (form g^{-1})^t
    const Matrix<T> t = (form * g).transpose();
    Matrix<T> w(kDimW, kDimW);
    for (int i = 0; i < kDimW; ++i)
      for (int j = 0; j < kDimW; ++j) w(i, j) = t(i, j);
    images.push_back(from_endomorphism(w, false));
  }
  return alg.matrix_of(images);
}

template <class T>
HKTensor<T> hk_from_endo(const EndoOnSp2<T>& l) {
  const auto& alg = sp2_algebra<T>();
  const Residual r = measure_difference(alg.dagger(l), T(2) * l);
  if (!r.passes(kDefaultTolerance)) throw DaggerMismatch(r.norm);
  if (!alg.preserves_real_form(l)) throw ModelError("L maps the real form of sp(2) to itself");
  // L($_{ab})_{mn} = S_{mnab}
  std::vector<Sp2Element<T>> images;
  for (const auto& b : alg.basis()) images.push_back(alg.apply(l, b));
  IndexedTensor<T> s(kQuarticSig);
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b) {
      const int lo = std::min(a, b), hi = std::max(a, b);
      const int k = lo * kDimW - lo * (lo - 1) / 2 + (hi - lo);
      for (int m = 0; m < kDimW; ++m)
        for (int n = 0; n < kDimW; ++n) s(m, n, a, b) = images[k](m, n);
    }
  return kappa(SymQuartic<T>(std::move(s)));
}

template <class T>
HKTensor<T> lie_derivative(const HKTensor<T>& k, const Sp2Element<T>& u) {
  // sum over slots of K(.., U x, ..)
  return HKTensor<T>::from_full(T(-1) * k.full().act(vc_endomorphism(u)));
}

template <class T>
TangentResult<T> tangent_h(const HKTensor<T>& k, const HKTensor<T>& l, std::optional<Sp2Element<T>> u, double tol) {
  if (!is_cd_theorem(k, tol).verdict) throw NotInOrbit();
  const auto& alg = sp2_algebra<T>();
  const auto& st = standard_structure<T>();
  TangentResult<T> out;
  if (u) {
    out.u = *u;
  } else {
    const std::size_t n = l.mixed().components().size();
    Matrix<T> a(n, kDimSp2), rhs(n, 1);
    for (int j = 0; j < kDimSp2; ++j) {
      const HKTensor<T> d = lie_derivative(k, alg.basis()[j]);
      for (std::size_t i = 0; i < n; ++i) a(i, j) = d.mixed().flat(i);
    }
    for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = l.mixed().flat(i);
    const auto sol = solve(a, rhs);
    if (!sol) throw std::invalid_argument("L is not of the form U . K for any U in sp(2)");
    out.u = alg.element(*sol);
    if (!measure_difference(lie_derivative(k, out.u).mixed().components(), l.mixed().components()).passes(tol))
      throw std::invalid_argument("L is not of the form U . K for any U in sp(2)");
  }

  const VcTensor<T> kf = k.full();
  const VcTensor<T> lf = l.full();
  Matrix<T> form(kDimV, kDimV);
  for (int x = 0; x < kDimV; ++x)
    for (int y = 0; y < kDimV; ++y) {
      T sum;
      for (int a = 0; a < kDimV; ++a)
        for (int b = 0; b < kDimV; ++b)
          for (int c = 0; c < kDimV; ++c) {
            const int ab = bar_index(a), bb = bar_index(b), cb = bar_index(c);
            const T& l1 = lf(x, a, b, c);
            const T& l2 = lf(y, a, b, c);
            if (!l1.is_zero()) sum += l1 * kf(y, ab, bb, cb);
            if (!l2.is_zero()) sum -= l2 * kf(x, ab, bb, cb);
          }
      form(x, y) = frac<T>(1, 120) * sum;
    }
  out.h = (form * st.metric).transpose();

  Matrix<T> w(kDimW, kDimW);
  for (int i = 0; i < kDimW; ++i)
    for (int j = 0; j < kDimW; ++j) w(i, j) = out.h(i, j);
  const Matrix<T> zero8(kDimV, kDimV);
  try {
    out.h_element = from_endomorphism(w, true);
    out.in_sp2 = measure_difference(out.h, vc_endomorphism(out.h_element));
  } catch (const ModelError&) {
    out.in_sp2 = measure_difference(out.h, zero8);
    out.in_sp2.zero = false;
    out.in_sp2.norm = std::max(out.in_sp2.norm, 1.0);
  }
  for (const auto& j : st.J) out.in_sp2.merge(measure_difference(out.h * j, j * out.h));
  out.in_sp2.merge(measure_difference(out.h.transpose() * st.metric, -(st.metric * out.h)));

  const EndoOnSp2<T> tk = t_k(k);
  const Sp2Element<T> th = alg.apply(tk, out.h_element);
  out.eigen = measure_difference(th.matrix(), (frac<T>(-3, 2) * out.h_element).matrix());
  out.reproduces_l =
      measure_difference(lie_derivative(k, out.h_element).mixed().components(), l.mixed().components());
  const Sp2Element<T> expected = frac<T>(1, 5) * (frac<T>(7, 2) * out.u - alg.apply(tk, out.u));
  out.formula = measure_difference(out.h_element.matrix(), expected.matrix());
  return out;
}

template <class T>
ContractionCheck contraction_identities(const HKTensor<T>& k) {
  const auto& st = standard_structure<T>();
  const VcTensor<T> kf = k.full();
  const Matrix<T>& g = st.metric;
  std::array<VcTensor<T>, 3> omega;
  for (int s = 0; s < 3; ++s) omega[s] = metric_two_form(st.J[s]);
  const T c21_8 = frac<T>(21, 8), c21_16 = frac<T>(21, 16);

  VcTensor<T> lhs1(4), rhs1(4), lhs2(4), rhs2(4);
  for (int x = 0; x < kDimV; ++x)
    for (int y = 0; y < kDimV; ++y)
      for (int z = 0; z < kDimV; ++z)
        for (int w = 0; w < kDimV; ++w) {
          T s1, s2;
          for (int a = 0; a < kDimV; ++a)
            for (int b = 0; b < kDimV; ++b) {
              const int ab = bar_index(a), bb = bar_index(b);
              const T& p = kf(x, y, a, b);
              if (!p.is_zero()) s1 += p * kf(z, w, ab, bb);
              const T& q = kf(x, a, b, y);
              if (!q.is_zero()) s2 += q * kf(z, ab, bb, w);
            }
          lhs1(x, y, z, w) = s1;
          lhs2(x, y, z, w) = s2;
          T om1, om2;
          for (int s = 0; s < 3; ++s) {
            om1 += omega[s](x, z) * omega[s](y, w) - omega[s](x, w) * omega[s](y, z);
            om2 += omega[s](x, w) * omega[s](y, z);
          }
          rhs1(x, y, z, w) = T(4) * kf(x, y, z, w) + c21_8 * (g(x, z) * g(y, w) - g(x, w) * g(y, z)) + c21_8 * om1;
          rhs2(x, y, z, w) =
              T(2) * kf(x, z, y, w) + c21_8 * g(x, z) * g(y, w) + c21_16 * g(x, w) * g(y, z) - c21_16 * om2;
        }
  return {tensor_difference(lhs1, rhs1), tensor_difference(lhs2, rhs2)};
}

template <class T>
VcTensor<T> ricci_trace(const VcTensor<T>& k) {
  return k.trace(0, 3);
}

#define CUBICDISC_INSTANTIATE(T)                                                                         \
  template class SymQuartic<T>;                                                                          \
  template class HKTensor<T>;                                                                            \
  template SymQuartic<T> realify_quartic(const IndexedTensor<T>&);                                       \
  template SymQuartic<T> random_quartic(std::mt19937_64&);                                               \
  template SymQuartic<T> transport(const SymQuartic<T>&, const Matrix<T>&);                              \
  template T quartic_form(const SymQuartic<T>&, const Matrix<T>&);                                       \
  template HKInvariants check_hk_invariants(const VcTensor<T>&);                                         \
  template HKTensor<T> kappa(const SymQuartic<T>&);                                                      \
  template VcTensor<T> kappa_full(const SymQuartic<T>&);                                                 \
  template SymQuartic<T> kappa_inv(const HKTensor<T>&);                                                  \
  template EndoOnSp2<T> t_k(const HKTensor<T>&);                                                         \
  template EndoOnSp2<T> t_k_frame(const HKTensor<T>&);                                                   \
  template HKTensor<T> hk_from_endo(const EndoOnSp2<T>&);                                                \
  template HKTensor<T> lie_derivative(const HKTensor<T>&, const Sp2Element<T>&);                         \
  template TangentResult<T> tangent_h(const HKTensor<T>&, const HKTensor<T>&, std::optional<Sp2Element<T>>, \
                                      double);                                                           \
  template ContractionCheck contraction_identities(const HKTensor<T>&);                                  \
  template VcTensor<T> ricci_trace(const VcTensor<T>&);

CUBICDISC_INSTANTIATE(ExactScalar)
CUBICDISC_INSTANTIATE(FloatScalar)

}  // namespace cubicdisc
