#include "cubicdisc/irrep.hpp"

#include <sstream>

#include "cubicdisc/orbit.hpp"

namespace cubicdisc {

namespace {

const Signature kQuartic = {IndexSlot::low(), IndexSlot::low(), IndexSlot::low(), IndexSlot::low()};

template <class T>
T half() {
  return frac<T>(1, 2);
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

// Coordinates in the orthonormal real-coefficient columns of the cube basis, with a reconstruction check.
template <class T>
Matrix<T> cube_coordinates(const Matrix<T>& vectors) {
  const Matrix<T> b = cube_basis<T>();
  const Matrix<T> coords = b.transpose() * vectors;
  if (!measure_difference(b * coords, vectors).passes(kDefaultTolerance))
    throw std::domain_error("vector outside S^3 Delta");
  return coords;
}

template <class T>
Residual residual_of_zero(const std::vector<T>& v) {
  return measure(v, 0.0);
}

template <class T>
Residual matrices_difference(const std::array<Matrix<T>, 3>& x, const std::array<Matrix<T>, 3>& y) {
  Residual r = measure_difference(x[0], y[0]);
  r.merge(measure_difference(x[1], y[1]));
  r.merge(measure_difference(x[2], y[2]));
  return r;
}

template <class T>
Residual cyclic_brackets(const std::array<Matrix<T>, 3>& x) {
  Residual r = measure_difference(commutator(x[0], x[1]), x[2]);
  r.merge(measure_difference(commutator(x[1], x[2]), x[0]));
  r.merge(measure_difference(commutator(x[2], x[0]), x[1]));
  return r;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

template <class T>
Matrix<T> casimir(const std::array<Matrix<T>, 3>& x) {
  return -(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

}  // namespace

template <class T>
std::array<Matrix<T>, 3> delta_generators() {
  const T i = imag_unit<T>();
  const T h = half<T>();
  return {Matrix<T>{{-h * i, T()}, {T(), h * i}}, Matrix<T>{{T(), -h}, {h, T()}},
          Matrix<T>{{T(), h * i}, {h * i, T()}}};
}

template <class T>
Matrix<T> cube_basis() {
  const T r = T(1) / sqrt3<T>();
  Matrix<T> b(8, 4);
  b(0, 0) = T(1);
  b(1, 1) = r;
  b(2, 1) = r;
  b(4, 1) = r;
  b(7, 2) = T(1);
  b(3, 3) = -r;
  b(5, 3) = -r;
  b(6, 3) = -r;
  return b;
}

template <class T>
Matrix<T> sym_cube_rep(const Matrix<T>& m) {
  const Matrix<T> id = Matrix<T>::identity(2);
  const Matrix<T> d = kron(kron(m, id), id) + kron(kron(id, m), id) + kron(kron(id, id), m);
  return cube_coordinates(d * cube_basis<T>());
}

template <class T>
InducedStructure<T> induced_structure() {
  const Matrix<T> pd{{T(), T(1)}, {T(-1), T()}};
  const Matrix<T> pi3 = kron(kron(pd, pd), pd);
  const Matrix<T> b = cube_basis<T>();
  const Matrix<T> induced = b.transpose() * pi3 * b;
  const Matrix<T>& pi = standard_structure<T>().pi;
  InducedStructure<T> out;
  out.pi_scale = induced(0, 2) / pi(0, 2);
  out.pi_match = measure_difference(induced, out.pi_scale * pi);
  // j(d1) = d2, j(d2) = -d1, extended antilinearly
  const Matrix<T> jd{{T(), T(-1)}, {T(1), T()}};
  const Matrix<T> j3 = kron(kron(jd, jd), jd);
  const Matrix<T> jw = cube_coordinates(j3 * b.conj());
  Matrix<T> expected(kDimW, kDimW);
  for (int a = 0; a < kDimW; ++a) {
    Matrix<T> unit(kDimW, 1);
    unit(a, 0) = T(1);
    const Matrix<T> col = j_on_vector(unit);
    for (int r = 0; r < kDimW; ++r) expected(r, a) = col(r, 0);
  }
  out.j_match = measure_difference(jw, expected);
  return out;
}

template <class T>
std::array<Matrix<T>, 3> irrep_generators() {
  const auto d = delta_generators<T>();
  return {sym_cube_rep(d[0]), sym_cube_rep(d[1]), sym_cube_rep(d[2])};
}

template <class T>
std::array<Matrix<T>, 3> tabulated_generators() {
  const T i = imag_unit<T>();
  const T h = half<T>();
  const T s = sqrt3<T>() * h;
  const T z;
  return {
      Matrix<T>{{-T(3) * h * i, z, z, z}, {z, -h * i, z, z}, {z, z, T(3) * h * i, z}, {z, z, z, h * i}},
      Matrix<T>{{z, -s, z, z}, {s, z, z, T(1)}, {z, z, z, -s}, {z, T(-1), s, z}},
      Matrix<T>{{z, i * s, z, z}, {i * s, z, z, -i}, {z, z, z, -i * s}, {z, -i, -i * s, z}},
  };
}

template <class T>
std::array<Matrix<T>, 3> upsilon_matrices(const std::array<Matrix<T>, 3>& e) {
  const Matrix<T>& pi = standard_structure<T>().pi;
  return {-(pi * e[0]), -(pi * e[1]), -(pi * e[2])};
}

template <class T>
std::array<Matrix<T>, 3> tabulated_upsilon() {
  const T i = imag_unit<T>();
  const T h = half<T>();
  const T s = sqrt3<T>() * h;
  const T z;
  const T a = -T(3) * h * i;
  return {
      Matrix<T>{{z, z, a, z}, {z, z, z, -h * i}, {a, z, z, z}, {z, -h * i, z, z}},
      Matrix<T>{{z, z, z, s}, {z, T(1), -s, z}, {z, -s, z, z}, {s, z, z, T(1)}},
      Matrix<T>{{z, z, z, i * s}, {z, i, i * s, z}, {z, i * s, z, z}, {i * s, z, z, -i}},
  };
}

template <class T>
std::array<Sp2Element<T>, 3> upsilon_elements() {
  const auto u = upsilon_matrices(irrep_generators<T>());
  return {Sp2Element<T>(u[0]), Sp2Element<T>(u[1]), Sp2Element<T>(u[2])};
}

template <class T>
SymQuartic<T> s_hat() {
  const auto u = upsilon_matrices(irrep_generators<T>());
  const Matrix<T>& pi = standard_structure<T>().pi;
  const T c = frac<T>(3, 4);
  IndexedTensor<T> s(kQuartic);
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b)
      for (int g = 0; g < kDimW; ++g)
        for (int d = 0; d < kDimW; ++d) {
          T v = -c * (pi(a, g) * pi(b, d) + pi(a, d) * pi(b, g));
          for (const auto& m : u) v += m(a, b) * m(g, d);
          s(a, b, g, d) = v;
        }
  return SymQuartic<T>(std::move(s));
}

template <class T>
Polynomial<T> Polynomial<T>::constant(const T& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_[{0, 0, 0, 0}] = c;
  return p;
}

template <class T>
Polynomial<T> Polynomial<T>::variable(int k) {
  Polynomial p;
  Exponent e{0, 0, 0, 0};
  e[k] = 1;
  p.terms_[e] = T(1);
  return p;
}

template <class T>
T Polynomial<T>::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? T() : it->second;
}

template <class T>
int Polynomial<T>::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

template <class T>
T Polynomial<T>::evaluate(const std::array<T, 4>& x) const {
  T sum;
  for (const auto& [e, c] : terms_) {
    T term = c;
    for (int k = 0; k < 4; ++k)
      for (int p = 0; p < e[k]; ++p) term *= x[k];
    sum += term;
  }
  return sum;
}

template <class T>
Polynomial<T> Polynomial<T>::substitute(const std::array<Polynomial, 4>& values) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(c);
    for (int k = 0; k < 4; ++k)
      for (int p = 0; p < e[k]; ++p) term = term * values[k];
    out += term;
  }
  return out;
}

template <class T>
Polynomial<T>& Polynomial<T>::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  prune();
  return *this;
}

template <class T>
Polynomial<T>& Polynomial<T>::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  prune();
  return *this;
}

template <class T>
void Polynomial<T>::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

template <class T>
std::string Polynomial<T>::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int k = 0; k < 4; ++k)
      if (e[k] > 0) os << "*x" << (k + 1) << (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
  }
  return first ? "0" : os.str();
}

template <class T>
Polynomial<T> quartic_polynomial(const SymQuartic<T>& s) {
  Polynomial<T> out;
  for (std::size_t f = 0; f < s.tensor().components().size(); ++f) {
    const T& v = s.tensor().flat(f);
    if (v.is_zero()) continue;
    Polynomial<T> term = Polynomial<T>::constant(v);
    for (int i : s.tensor().multi_index(f)) term = term * Polynomial<T>::variable(i);
    out += term;
  }
  return out;
}

template <class T>
Polynomial<T> tabulated_discriminant_quartic() {
  using P = Polynomial<T>;
  const P x1 = P::variable(0), x2 = P::variable(1), x3 = P::variable(2), x4 = P::variable(3);
  const T r3 = sqrt3<T>();
  return T(-18) * (x1 * x2 * x3 * x4) + (T(4) * r3) * (x1 * x4 * x4 * x4) - (T(4) * r3) * (x2 * x2 * x2 * x3) +
         T(3) * (x2 * x2 * x4 * x4) - T(9) * (x1 * x1 * x3 * x3);
}

template <class T>
SymQuartic<T> polarize(const Polynomial<T>& p) {
  IndexedTensor<T> s(kQuartic);
  for (std::size_t f = 0; f < s.components().size(); ++f) {
    const auto idx = s.multi_index(f);
    typename Polynomial<T>::Exponent e{0, 0, 0, 0};
    for (int i : idx) ++e[i];
    if (e[0] + e[1] + e[2] + e[3] != 4) continue;
    int arrangements = factorial(4);
    for (int k = 0; k < 4; ++k) arrangements /= factorial(e[k]);
    s.flat(f) = p.coefficient(e) / T(arrangements);
  }
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] + e[2] + e[3] != 4) throw std::invalid_argument("polarize: polynomial is not a homogeneous quartic");
  return SymQuartic<T>(std::move(s));
}

template <class T>
T classical_discriminant(const T& a, const T& b, const T& c, const T& d) {
  return T(18) * a * b * c * d - T(27) * a * a * d * d - T(4) * a * c * c * c - T(4) * b * b * b * d + b * b * c * c;
}

template <class T>
Polynomial<T> classical_discriminant_polynomial() {
  using P = Polynomial<T>;
  const P a = P::variable(0), b = P::variable(1), c = P::variable(2), d = P::variable(3);
  return T(18) * (a * b * c * d) - T(27) * (a * a * d * d) - T(4) * (a * c * c * c) - T(4) * (b * b * b * d) +
         b * b * c * c;
}

template <class T>
SubstitutionReport substitution_check() {
  using P = Polynomial<T>;
  const T r = T(1) / sqrt3<T>();
  const std::array<P, 4> sub = {P::variable(0), r * P::variable(1), P::variable(3), (-r) * P::variable(2)};
  const P lhs = T(3) * quartic_polynomial(s_hat<T>()).substitute(sub);
  const P rhs = classical_discriminant_polynomial<T>();
  SubstitutionReport rep;
  std::vector<T> diffs;
  double scale = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c) {
        const typename P::Exponent e{a, b, c, 4 - a - b - c};
        ++rep.coefficients_compared;
        const T d = lhs.coefficient(e) - rhs.coefficient(e);
        if (!d.is_zero()) ++rep.mismatches;
        diffs.push_back(d);
        scale = std::max(scale, rhs.coefficient(e).magnitude());
      }
  // terms of other degrees would also be mismatches
  for (const auto& [e, c] : (lhs - rhs).terms())
    if (e[0] + e[1] + e[2] + e[3] != 4) ++rep.mismatches;
  rep.residual = measure(diffs, scale);
  if (!is_exact_v<T>) rep.mismatches = rep.residual.passes(kDefaultTolerance) ? 0 : rep.mismatches;
  return rep;
}

template <class T>
std::vector<NamedResidual> upsilon_lemma_checks() {
  const auto& st = standard_structure<T>();
  const Matrix<T>& pi = st.pi;
  auto pu = [&](int a, int b) { return st.pi_upper(a, b); };
  const auto ups = upsilon_matrices(irrep_generators<T>());
  const SymQuartic<T> sh = polarize(tabulated_discriminant_quartic<T>());
  const auto& q = sh.tensor();
  std::vector<NamedResidual> out;

  // (1)
  Residual r1 = measure(std::vector<T>{}, 0.0);
  for (const auto& u : ups) {
    r1.merge(measure_difference(u, u.transpose()));
    IndexedTensor<T> t({IndexSlot::low(), IndexSlot::low()});
    for (int a = 0; a < kDimW; ++a)
      for (int b = 0; b < kDimW; ++b) t(a, b) = u(a, b);
    r1.merge(measure_difference(jmap(t).components(), t.components()));
  }
  out.push_back({"upsilon_lemma_1", r1});

  // (2)
  std::vector<T> d2;
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) {
      T v;
      for (int a = 0; a < kDimW; ++a)
        for (int b = 0; b < kDimW; ++b)
          for (int sg = 0; sg < kDimW; ++sg)
            for (int ta = 0; ta < kDimW; ++ta) v += pu(a, sg) * pu(b, ta) * ups[s](a, b) * ups[t](sg, ta);
      d2.push_back(v - (s == t ? T(5) : T()));
    }
  out.push_back({"upsilon_lemma_2", measure(d2, 5.0)});

  // (3)
  Residual r3 = measure(std::vector<T>{}, 0.0);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    Matrix<T> m(kDimW, kDimW);
    for (int a = 0; a < kDimW; ++a)
      for (int b = 0; b < kDimW; ++b) {
        T v;
        for (int sg = 0; sg < kDimW; ++sg)
          for (int ta = 0; ta < kDimW; ++ta)
            v += pu(sg, ta) * (ups[i](a, sg) * ups[j](b, ta) + ups[i](b, sg) * ups[j](a, ta));
        m(a, b) = v;
      }
    r3.merge(measure_difference(m, ups[k]));
  }
  out.push_back({"upsilon_lemma_3", r3});

  // (4)
  std::vector<T> d4;
  for (int s = 0; s < 3; ++s) {
    const Matrix<T> up = ups[s] * pi;  // (Ups pi^{..})_{a t}, pi^{st} numerically pi_{st}
    for (std::size_t f = 0; f < q.components().size(); ++f) {
      const auto idx = q.multi_index(f);
      T v;
      for (int slot = 0; slot < 4; ++slot) {
        std::vector<int> rest;
        for (int o = 0; o < 4; ++o)
          if (o != slot) rest.push_back(idx[o]);
        for (int t = 0; t < kDimW; ++t) v += up(idx[slot], t) * q(t, rest[0], rest[1], rest[2]);
      }
      d4.push_back(v);
    }
  }
  out.push_back({"upsilon_lemma_4", measure(d4, norm_of(q.components()))});

  // (5)
  std::vector<T> d5;
  const T c34 = frac<T>(3, 4);
  for (std::size_t f = 0; f < q.components().size(); ++f) {
    const auto i = q.multi_index(f);
    T lhs;
    for (const auto& u : ups) lhs += u(i[0], i[1]) * u(i[2], i[3]);
    d5.push_back(lhs - q.flat(f) - c34 * (pi(i[0], i[2]) * pi(i[1], i[3]) + pi(i[0], i[3]) * pi(i[1], i[2])));
  }
  out.push_back({"upsilon_lemma_5", measure(d5, norm_of(q.components()))});

  // (6)
  Residual r6 = measure(std::vector<T>{}, 0.0);
  for (const auto& u : ups) {
    Matrix<T> m(kDimW, kDimW);
    for (int a = 0; a < kDimW; ++a)
      for (int b = 0; b < kDimW; ++b) {
        T v;
        for (int sg = 0; sg < kDimW; ++sg)
          for (int ta = 0; ta < kDimW; ++ta) {
            if (u(sg, ta).is_zero()) continue;
            for (int g = 0; g < kDimW; ++g)
              for (int d = 0; d < kDimW; ++d) v += u(sg, ta) * pu(sg, g) * pu(ta, d) * q(a, b, g, d);
          }
        m(a, b) = v;
      }
    r6.merge(measure_difference(m, frac<T>(7, 2) * u));
  }
  out.push_back({"upsilon_lemma_6", r6});

  // (7)
  Matrix<T> m7(kDimW, kDimW);
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b) {
      T v;
      for (const auto& u : ups)
        for (int sg = 0; sg < kDimW; ++sg)
          for (int ta = 0; ta < kDimW; ++ta) v += pu(sg, ta) * u(a, sg) * u(b, ta);
      m7(a, b) = v;
    }
  out.push_back({"upsilon_lemma_7", measure_difference(m7, frac<T>(15, 4) * pi)});
  return out;
}

template <class T>
EndoOnSp2<T> proj_sp1ir() {
  const auto u = upsilon_elements<T>();
  return sp2_algebra<T>().projection_onto({u[0], u[1], u[2]});
}

template <class T>
std::array<Matrix<T>, 3> reducible_nd_generators() {
  const T h = half<T>();
  const T hi = h * imag_unit<T>();
  const T z;
  return {
      Matrix<T>{{z, z, h, z}, {z, z, z, h}, {-h, z, z, z}, {z, -h, z, z}},
      Matrix<T>{{z, z, hi, z}, {z, z, z, hi}, {hi, z, z, z}, {z, hi, z, z}},
      Matrix<T>{{hi, z, z, z}, {z, hi, z, z}, {z, z, -hi, z}, {z, z, z, -hi}},
  };
}

template <class T>
std::array<Matrix<T>, 3> reducible_trivial_generators() {
  auto g = reducible_nd_generators<T>();
  for (auto& m : g)
    for (int k : {1, 3})
      for (int o = 0; o < kDimW; ++o) {
        m(k, o) = T();
        m(o, k) = T();
      }
  return g;
}

template <class T>
ProjectionReport<T> projection_checks() {
  const auto& alg = sp2_algebra<T>();
  const EndoOnSp2<T> id = EndoOnSp2<T>::identity(kDimSp2);
  const EndoOnSp2<T> p = proj_sp1ir<T>();
  ProjectionReport<T> r;
  r.rank = static_cast<int>(rank(p));
  r.idempotent = measure_difference(p * p, p);
  r.dagger = measure_difference(alg.dagger(p), T(2) * p - frac<T>(12, 5) * id);
  r.t_k_relation = measure_difference(T(5) * (p - frac<T>(3, 10) * id), t_k(kappa(s_hat<T>())));

  auto projection_of = [&](const std::array<Matrix<T>, 3>& gens) {
    std::vector<Sp2Element<T>> v;
    for (const auto& e : gens) v.push_back(from_endomorphism(e, false));
    return alg.projection_onto(v);
  };
  const auto nd = reducible_nd_generators<T>();
  const EndoOnSp2<T> dnd = alg.dagger(projection_of(nd));
  r.reducible_nd = measure_difference(dnd * dnd, T(-2) * dnd);
  r.brackets_nd = cyclic_brackets(nd);
  const auto tr = reducible_trivial_generators<T>();
  const EndoOnSp2<T> ptr = projection_of(tr);
  const EndoOnSp2<T> dtr = alg.dagger(ptr);
  r.reducible_triv = measure_difference(dtr * dtr, frac<T>(-3, 2) * dtr + T(10) * ptr);
  r.brackets_triv = cyclic_brackets(tr);
  return r;
}

template <class T>
std::array<Matrix<T>, 3> script_e_frames() {
  const auto u = upsilon_elements<T>();
  return {vc_endomorphism(u[0]), vc_endomorphism(u[1]), vc_endomorphism(u[2])};
}

template <class T>
Matrix<T> real_frame() {
  const T i = imag_unit<T>();
  Matrix<T> p(kDimV, kDimV);
  for (int a = 0; a < kDimW; ++a) {
    p(a, a) = T(1);
    p(a + kDimW, a) = T(1);
    p(a, a + kDimW) = i;
    p(a + kDimW, a + kDimW) = -i;
  }
  return p;
}

template <class T>
std::array<Matrix<T>, 3> script_e_frames_real() {
  const Matrix<T> p = real_frame<T>();
  const Matrix<T> pinv = inverse(p);
  const auto e = script_e_frames<T>();
  return {pinv * e[0] * p, pinv * e[1] * p, pinv * e[2] * p};
}

template <class T>
T endo_inner(const Matrix<T>& a, const Matrix<T>& b) {
  const Matrix<T>& g = standard_structure<T>().metric;
  return half<T>() * (inverse(g) * a.transpose() * g * b).trace();
}

template <class T>
FrameReport<T> frame_checks() {
  const auto e = script_e_frames<T>();
  const auto re = script_e_frames_real<T>();
  FrameReport<T> r;
  std::vector<T> d, dr, imag;
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) {
      const T expected = s == t ? T(5) : T();
      d.push_back(endo_inner(e[s], e[t]) - expected);
      dr.push_back(half<T>() * (re[s].transpose() * re[t]).trace() - expected);
    }
  for (const auto& m : re)
    for (const auto& x : m.data()) imag.push_back(x - x.conj());
  r.inner = measure(d, 5.0);
  r.real_inner = measure(dr, 5.0);
  r.real_entries = measure(imag, 1.0);
  r.brackets = cyclic_brackets(e);
  r.square_sum = measure_difference(e[0] * e[0] + e[1] * e[1] + e[2] * e[2],
                                    frac<T>(-15, 4) * Matrix<T>::identity(kDimV));
  VcTensor<T> ee(4);
  for (const auto& m : e) {
    const VcTensor<T> w = metric_two_form(m);
    ee += wedge(w, w);
  }
  r.four_form = measure_difference(ee.components(), (frac<T>(-3, 4) * fundamental_four_form<T>()).components());
  return r;
}

std::string IrrepComponent::label() const {
  auto part = [](int n, const char* name) {
    if (n == 0) return std::string("1");
    if (n == 1) return std::string(name);
    return "S" + std::to_string(n) + name;
  };
  return part(k, "E") + " (x) " + part(l, "H");
}

template <class T>
T calibrate_casimir(const So4Module<T>& v) {
  const Matrix<T> c = casimir(v.e_factor);
  const T value = c(0, 0);
  if (!measure_difference(c, value * Matrix<T>::identity(v.dim())).passes(kDefaultTolerance))
    throw std::invalid_argument("calibration carrier is not E-isotypic");
  return value / frac<T>(15, 4);
}

template <class T>
Decomposition casimir_decompose(const So4Module<T>& m, const T& calibration, int max_k) {
  const std::size_t n = m.dim();
  for (const auto* f : {&m.e_factor, &m.h_factor})
    if (!cyclic_brackets(*f).passes(kDefaultTolerance)) throw ClosureError(m.name);
  for (const auto& x : m.e_factor)
    for (const auto& y : m.h_factor)
      if (!measure_difference(commutator(x, y), Matrix<T>(n, n)).passes(kDefaultTolerance))
        throw ClosureError(m.name + " (factors do not commute)");

  const Matrix<T> ce = casimir(m.e_factor);
  const Matrix<T> ch = casimir(m.h_factor);
  const Matrix<T> id = Matrix<T>::identity(n);
  Decomposition out;
  out.carrier_dim = static_cast<int>(n);
  for (int k = 0; k <= max_k; ++k) {
    const T lk = calibration * frac<T>(k * (k + 2), 4);
    const Matrix<T> ae = ce - lk * id;
    if (rank(ae) == n) continue;
    for (int l = 0; l <= max_k; ++l) {
      const T ll = calibration * frac<T>(l * (l + 2), 4);
      const Matrix<T> ah = ch - ll * id;
      Matrix<T> stacked(2 * n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          stacked(i, j) = ae(i, j);
          stacked(n + i, j) = ah(i, j);
        }
      const int nullity = static_cast<int>(n - rank(stacked));
      if (nullity == 0) continue;
      const int block = (k + 1) * (l + 1);
      IrrepComponent c{k, l, nullity / block};
      if (nullity % block != 0) c.multiplicity = -nullity;  // inconsistent eigenspace size
      out.components.push_back(c);
      if (c.multiplicity > 0) out.accounted_dim += c.dim();
    }
  }
  return out;
}

template <class T>
So4Module<T> carrier_v() {
  const auto& st = standard_structure<T>();
  const T h = half<T>();
  return {"V", script_e_frames<T>(), {h * st.J[0], h * st.J[1], h * st.J[2]}};
}

template <class T>
So4Module<T> carrier_sp2() {
  const auto& alg = sp2_algebra<T>();
  const auto u = upsilon_elements<T>();
  const Matrix<T> zero(kDimSp2, kDimSp2);
  return {"sp(2)", {alg.ad(u[0]), alg.ad(u[1]), alg.ad(u[2])}, {zero, zero, zero}};
}

template <class T>
So4Module<T> carrier_torsion() {
  const auto& alg = sp2_algebra<T>();
  const auto u = upsilon_elements<T>();
  // complement: coordinates annihilated by <Ups_t, .>
  Matrix<T> functionals(3, kDimSp2);
  for (int t = 0; t < 3; ++t)
    for (int k = 0; k < kDimSp2; ++k) functionals(t, k) = inner(u[t], alg.basis()[k]);
  const Matrix<T> comp = nullspace(functionals);
  const std::size_t c = comp.cols();
  std::array<Matrix<T>, 3> restricted;
  for (int s = 0; s < 3; ++s) {
    const auto sol = solve(comp, alg.ad(u[s]) * comp);
    if (!sol) throw ClosureError("complement of the Upsilon span is not ad-invariant");
    restricted[s] = *sol;
  }
  const auto v = carrier_v<T>();
  const Matrix<T> iv = Matrix<T>::identity(kDimV);
  const Matrix<T> ic = Matrix<T>::identity(c);
  So4Module<T> out;
  out.name = "V (x) sp(1)-complement";
  for (int s = 0; s < 3; ++s) {
    out.e_factor[s] = kron(v.e_factor[s], ic) + kron(iv, restricted[s]);
    out.h_factor[s] = kron(v.h_factor[s], ic);
  }
  return out;
}

#define CUBICDISC_INSTANTIATE(T)                                                                \
  template std::array<Matrix<T>, 3> delta_generators<T>();                                      \
  template Matrix<T> cube_basis<T>();                                                           \
  template Matrix<T> sym_cube_rep(const Matrix<T>&);                                            \
  template InducedStructure<T> induced_structure<T>();                                          \
  template std::array<Matrix<T>, 3> irrep_generators<T>();                                      \
  template std::array<Matrix<T>, 3> tabulated_generators<T>();                                    \
  template std::array<Matrix<T>, 3> upsilon_matrices(const std::array<Matrix<T>, 3>&);          \
  template std::array<Matrix<T>, 3> tabulated_upsilon<T>();                                       \
  template std::array<Sp2Element<T>, 3> upsilon_elements<T>();                                  \
  template SymQuartic<T> s_hat<T>();                                                            \
  template class Polynomial<T>;                                                                 \
  template Polynomial<T> quartic_polynomial(const SymQuartic<T>&);                              \
  template Polynomial<T> tabulated_discriminant_quartic<T>();                                     \
  template SymQuartic<T> polarize(const Polynomial<T>&);                                        \
  template T classical_discriminant(const T&, const T&, const T&, const T&);                    \
  template Polynomial<T> classical_discriminant_polynomial<T>();                                \
  template SubstitutionReport substitution_check<T>();                                          \
  template std::vector<NamedResidual> upsilon_lemma_checks<T>();                                \
  template EndoOnSp2<T> proj_sp1ir<T>();                                                        \
  template std::array<Matrix<T>, 3> reducible_nd_generators<T>();                               \
  template std::array<Matrix<T>, 3> reducible_trivial_generators<T>();                          \
  template ProjectionReport<T> projection_checks<T>();                                          \
  template std::array<Matrix<T>, 3> script_e_frames<T>();                                       \
  template Matrix<T> real_frame<T>();                                                           \
  template std::array<Matrix<T>, 3> script_e_frames_real<T>();                                  \
  template T endo_inner(const Matrix<T>&, const Matrix<T>&);                                    \
  template FrameReport<T> frame_checks<T>();                                                    \
  template T calibrate_casimir(const So4Module<T>&);                                            \
  template Decomposition casimir_decompose(const So4Module<T>&, const T&, int);                 \
  template So4Module<T> carrier_v<T>();                                                         \
  template So4Module<T> carrier_sp2<T>();                                                       \
  template So4Module<T> carrier_torsion<T>();

CUBICDISC_INSTANTIATE(ExactScalar)
CUBICDISC_INSTANTIATE(FloatScalar)

}  // namespace cubicdisc
