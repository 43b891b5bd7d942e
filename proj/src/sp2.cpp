#include "cubicdisc/sp2.hpp"

namespace cubicdisc {

namespace {

template <class T>
IndexedTensor<T> as_tensor(const Matrix<T>& x) {
  IndexedTensor<T> t({IndexSlot::low(), IndexSlot::low()});
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b) t(a, b) = x(a, b);
  return t;
}

template <class T>
Matrix<T> as_matrix(const IndexedTensor<T>& t) {
  Matrix<T> x(kDimW, kDimW);
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b) x(a, b) = t(a, b);
  return x;
}

}  // namespace

template <class T>
Sp2Element<T>::Sp2Element(Matrix<T> x) : x_(std::move(x)) {
  if (x_.rows() != kDimW || x_.cols() != kDimW) throw ModelError("X is 4x4");
  const Matrix<T> t = x_.transpose();
  if (!measure_difference(x_, t).passes(kDefaultTolerance)) throw ModelError("X_{ab} = X_{ba}");
  if constexpr (!is_exact_v<T>) x_ = frac<T>(1, 2) * (x_ + t);
}

template <class T>
Sp2Element<T> Sp2Element<T>::jmap() const {
  return Sp2Element(as_matrix(cubicdisc::jmap(as_tensor(x_))));
}

template <class T>
bool Sp2Element<T>::is_real() const {
  return measure_difference(jmap().matrix(), x_).passes(kDefaultTolerance);
}

template <class T>
Matrix<T> to_endomorphism(const Sp2Element<T>& x) {
  return standard_structure<T>().pi * x.matrix();
}

template <class T>
Sp2Element<T> from_endomorphism(const Matrix<T>& a, bool require_real) {
  const Matrix<T>& pi = standard_structure<T>().pi;
  if (a.rows() != kDimW || a.cols() != kDimW) throw ModelError("A is a 4x4 endomorphism of W");
  // pi^{-1} = -pi
  const Matrix<T> x = -(pi * a);
  if (!measure_difference(x, x.transpose()).passes(kDefaultTolerance))
    throw ModelError("A preserves pi (pi(Ax,y) + pi(x,Ay) = 0)");
  Sp2Element<T> out{x};
  if (require_real && !out.is_real()) throw ModelError("A commutes with j");
  return out;
}

template <class T>
Matrix<T> vc_endomorphism(const Sp2Element<T>& x) {
  const Matrix<T>& pi = standard_structure<T>().pi;
  const Matrix<T> w = pi * x.matrix();
  const Matrix<T> wbar = x.matrix() * pi;
  Matrix<T> m(kDimV, kDimV);
  for (int i = 0; i < kDimW; ++i)
    for (int j = 0; j < kDimW; ++j) {
      m(i, j) = w(i, j);
      m(i + kDimW, j + kDimW) = wbar(i, j);
    }
  return m;
}

// [X,Y]_{ab} = pi^{st}(X_{as} Y_{tb} + X_{bs} Y_{ta}) = (X pi Y - Y pi X)_{ab}
template <class T>
Sp2Element<T> bracket(const Sp2Element<T>& x, const Sp2Element<T>& y) {
  const Matrix<T>& pi = standard_structure<T>().pi;
  return Sp2Element<T>(x.matrix() * pi * y.matrix() - y.matrix() * pi * x.matrix());
}

// pi^{ac} pi^{bd} X_{ab} Y_{cd}
template <class T>
T inner(const Sp2Element<T>& x, const Sp2Element<T>& y) {
  const Matrix<T>& pi = standard_structure<T>().pi;
  const Matrix<T> m = pi.transpose() * x.matrix() * pi;
  T s;
  for (int c = 0; c < kDimW; ++c)
    for (int d = 0; d < kDimW; ++d) s += m(c, d) * y(c, d);
  return s;
}

template <class T>
Sp2Algebra<T>::Sp2Algebra() {
  const Matrix<T>& pi = standard_structure<T>().pi;
  const T half = frac<T>(1, 2);
  for (int a = 0; a < kDimW; ++a)
    for (int b = a; b < kDimW; ++b) {
      Matrix<T> s(kDimW, kDimW);
      s(a, b) += half;
      s(b, a) += half;
      sharp_.emplace_back(s);
    }
  // $_{ab} = pi_{as} pi_{bt} sharp^{st}: entries (pi_{am} pi_{bn} + pi_{an} pi_{bm}) / 2
  for (int a = 0; a < kDimW; ++a)
    for (int b = a; b < kDimW; ++b) {
      Matrix<T> d(kDimW, kDimW);
      for (int m = 0; m < kDimW; ++m)
        for (int n = 0; n < kDimW; ++n) d(m, n) = half * (pi(a, m) * pi(b, n) + pi(a, n) * pi(b, m));
      dollar_.emplace_back(d);
    }
  std::size_t k = 0;
  for (int a = 0; a < kDimW; ++a)
    for (int b = a; b < kDimW; ++b, ++k)
      sharp_dual_.push_back(a == b ? dollar_[k] : T(2) * dollar_[k]);
  for (const auto& d : dollar_) {
    std::array<int, 2> p{-1, -1};
    for (int m = 0; m < kDimW && p[0] < 0; ++m)
      for (int n = m; n < kDimW; ++n)
        if (!d(m, n).is_zero()) {
          p = {m, n};
          break;
        }
    pivot_.push_back(p);
  }
}

template <class T>
std::vector<Sp2Element<T>> Sp2Algebra<T>::dual_basis(const std::vector<Sp2Element<T>>& b) const {
  Matrix<T> gram(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) gram(i, j) = inner(b[i], b[j]);
  const Matrix<T> inv = inverse(gram);
  std::vector<Sp2Element<T>> dual;
  for (std::size_t k = 0; k < b.size(); ++k) {
    Sp2Element<T> e;
    for (std::size_t l = 0; l < b.size(); ++l)
      if (!inv(l, k).is_zero()) e += inv(l, k) * b[l];
    dual.push_back(e);
  }
  return dual;
}

template <class T>
Matrix<T> Sp2Algebra<T>::coordinates(const Sp2Element<T>& x) const {
  Matrix<T> c(kDimSp2, 1);
  for (int k = 0; k < kDimSp2; ++k) {
    const auto [m, n] = pivot_[k];
    c(k, 0) = x(m, n) / dollar_[k](m, n);
  }
  return c;
}

template <class T>
Sp2Element<T> Sp2Algebra<T>::element(const Matrix<T>& coords) const {
  Sp2Element<T> x;
  for (int k = 0; k < kDimSp2; ++k)
    if (!coords(k, 0).is_zero()) x += coords(k, 0) * dollar_[k];
  return x;
}

template <class T>
Sp2Element<T> Sp2Algebra<T>::apply(const EndoOnSp2<T>& l, const Sp2Element<T>& x) const {
  return element(l * coordinates(x));
}

template <class T>
EndoOnSp2<T> Sp2Algebra<T>::matrix_of(const std::vector<Sp2Element<T>>& images) const {
  EndoOnSp2<T> m(kDimSp2, kDimSp2);
  for (int j = 0; j < kDimSp2; ++j) {
    const Matrix<T> c = coordinates(images[j]);
    for (int i = 0; i < kDimSp2; ++i) m(i, j) = c(i, 0);
  }
  return m;
}

template <class T>
EndoOnSp2<T> Sp2Algebra<T>::ad(const Sp2Element<T>& x) const {
  std::vector<Sp2Element<T>> images;
  for (const auto& b : dollar_) images.push_back(bracket(x, b));
  return matrix_of(images);
}

template <class T>
EndoOnSp2<T> Sp2Algebra<T>::dagger(const EndoOnSp2<T>& l) const {
  std::vector<Sp2Element<T>> images;
  for (const auto& x : dollar_) {
    Sp2Element<T> acc;
    for (std::size_t s = 0; s < sharp_.size(); ++s)
      acc += bracket(sharp_dual_[s], apply(l, bracket(sharp_[s], x)));
    images.push_back(acc);
  }
  return matrix_of(images);
}

template <class T>
EndoOnSp2<T> Sp2Algebra<T>::dagger(const EndoOnSp2<T>& l, const std::vector<Sp2Element<T>>& b) const {
  const auto dual = dual_basis(b);
  std::vector<Sp2Element<T>> images;
  for (const auto& x : dollar_) {
    Sp2Element<T> acc;
    for (std::size_t s = 0; s < b.size(); ++s) acc += bracket(dual[s], apply(l, bracket(b[s], x)));
    images.push_back(acc);
  }
  return matrix_of(images);
}

template <class T>
bool Sp2Algebra<T>::preserves_real_form(const EndoOnSp2<T>& l) const {
  for (const auto& x : dollar_)
    if (!measure_difference(apply(l, x.jmap()).matrix(), apply(l, x).jmap().matrix()).passes(kDefaultTolerance))
      return false;
  return true;
}

template <class T>
EndoOnSp2<T> Sp2Algebra<T>::projection_onto(const std::vector<Sp2Element<T>>& v) const {
  const std::size_t n = v.size();
  Matrix<T> gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = inner(v[i], v[j]);
  const Matrix<T> ginv = inverse(gram);
  std::vector<Sp2Element<T>> images;
  for (const auto& x : dollar_) {
    Sp2Element<T> p;
    for (std::size_t i = 0; i < n; ++i) {
      T c;
      for (std::size_t j = 0; j < n; ++j) c += ginv(i, j) * inner(v[j], x);
      p += c * v[i];
    }
    images.push_back(p);
  }
  return matrix_of(images);
}

template <class T>
std::vector<Sp2Element<T>> Sp2Algebra<T>::real_basis() const {
  std::vector<Sp2Element<T>> candidates;
  for (const auto& x : dollar_) {
    const Sp2Element<T> jx = x.jmap();
    candidates.push_back(x + jx);
    candidates.push_back(T::imag_unit() * (x - jx));
  }
  std::vector<Sp2Element<T>> chosen;
  for (const auto& c : candidates) {
    Matrix<T> m(kDimSp2, chosen.size() + 1);
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      const auto cj = coordinates(chosen[j]);
      for (int i = 0; i < kDimSp2; ++i) m(i, j) = cj(i, 0);
    }
    const auto cc = coordinates(c);
    for (int i = 0; i < kDimSp2; ++i) m(i, chosen.size()) = cc(i, 0);
    if (rank(m) == chosen.size() + 1) chosen.push_back(c);
  }
  return chosen;
}

template <class T>
const Sp2Algebra<T>& sp2_algebra() {
  static const Sp2Algebra<T> algebra;
  return algebra;
}

#define CUBICDISC_INSTANTIATE(T)                                                       \
  template class Sp2Element<T>;                                                        \
  template class Sp2Algebra<T>;                                                        \
  template Matrix<T> to_endomorphism(const Sp2Element<T>&);                            \
  template Sp2Element<T> from_endomorphism(const Matrix<T>&, bool);                    \
  template Matrix<T> vc_endomorphism(const Sp2Element<T>&);                            \
  template Sp2Element<T> bracket(const Sp2Element<T>&, const Sp2Element<T>&);          \
  template T inner(const Sp2Element<T>&, const Sp2Element<T>&);                        \
  template const Sp2Algebra<T>& sp2_algebra();

CUBICDISC_INSTANTIATE(ExactScalar)
CUBICDISC_INSTANTIATE(FloatScalar)

}  // namespace cubicdisc
