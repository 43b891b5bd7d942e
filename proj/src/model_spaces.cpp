#include "cubicdisc/model_spaces.hpp"

#include <algorithm>
#include <sstream>

#include "cubicdisc/irrep.hpp"

namespace cubicdisc {

const std::array<std::string, kNumLabels>& label_names() {
  static const std::array<std::string, kNumLabels> names{"psi1", "psi2", "psi3", "phi1", "phi2", "phi3", "th1",
                                                          "th2",  "th3",  "th4",  "thb1", "thb2", "thb3", "thb4"};
  return names;
}

int label_index(const std::string& name) {
  const auto& n = label_names();
  const auto it = std::find(n.begin(), n.end(), name);
  return it == n.end() ? -1 : int(it - n.begin());
}

int conjugate_label(int label) {
  if (label < kFirstTheta) return label;
  return label < kFirstThetaBar ? label + kDimW : label - kDimW;
}

namespace {

std::vector<int> labels_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int l = 0; l < kNumLabels; ++l)
    if (mask & label_bit(l)) out.push_back(l);
  return out;
}

// Sign of sorting a list of distinct labels.
int sort_sign(std::vector<int> v) {
  int inversions = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

template <class T>
T signed_unit(int sign) {
  return sign > 0 ? T(1) : T(-1);
}

// Residual of a list of forms against zero, scaled by a reference coefficient list.
template <class T>
Residual forms_residual(const std::vector<Form<T>>& diffs, const std::vector<T>& reference) {
  std::vector<T> all;
  for (const auto& f : diffs)
    for (const auto& [m, c] : f.terms()) all.push_back(c);
  return measure(all, norm_of(reference));
}

template <class T>
std::vector<T> table_coefficients(const CoframeSystem<T>& cs) {
  std::vector<T> out;
  for (const auto& f : cs.d)
    for (const auto& [m, c] : f.terms()) out.push_back(c);
  return out;
}

}  // namespace

template <class T>
Form<T> Form<T>::generator(int label) {
  return monomial(label_bit(label));
}

template <class T>
Form<T> Form<T>::monomial(Mask mask, const T& c) {
  Form f;
  f.add(mask, c);
  return f;
}

template <class T>
Form<T> Form<T>::pair(int i, int j, const T& c) {
  Form f;
  if (i == j) return f;
  f.add(label_bit(i) | label_bit(j), i < j ? c : -c);
  return f;
}

template <class T>
T Form<T>::coefficient(Mask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? T() : it->second;
}

template <class T>
T Form<T>::coefficient(int i, int j) const {
  if (i == j) return T();
  const T c = coefficient(label_bit(i) | label_bit(j));
  return i < j ? c : -c;
}

template <class T>
void Form<T>::add(Mask mask, const T& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class T>
std::vector<T> Form<T>::coefficients() const {
  std::vector<T> out;
  for (const auto& [m, c] : terms_) out.push_back(c);
  return out;
}

template <class T>
Form<T> Form<T>::conjugate() const {
  Form out;
  for (const auto& [m, c] : terms_) {
    std::vector<int> mapped;
    Mask image = 0;
    for (int l : labels_of(m)) {
      mapped.push_back(conjugate_label(l));
      image |= label_bit(conjugate_label(l));
    }
    out.add(image, signed_unit<T>(sort_sign(mapped)) * c.conj());
  }
  return out;
}

template <class T>
Form<T>& Form<T>::operator+=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

template <class T>
Form<T>& Form<T>::operator-=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

template <class T>
std::string Form<T>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int l : labels_of(m)) os << (l == labels_of(m).front() ? " " : "^") << label_names()[l];
  }
  return os.str();
}

template <class T>
Form<T> wedge(const Form<T>& a, const Form<T>& b) {
  Form<T> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      int swaps = 0;
      for (int l : labels_of(mb)) swaps += popcount(ma & ~((label_bit(l) << 1) - 1));
      out.add(ma | mb, swaps % 2 ? -(ca * cb) : ca * cb);
    }
  return out;
}

template <class T>
Form<T> CoframeSystem<T>::exterior_derivative(const Form<T>& w) const {
  Form<T> out;
  for (const auto& [m, c] : w.terms()) {
    const auto ls = labels_of(m);
    for (std::size_t k = 0; k < ls.size(); ++k) {
      typename Form<T>::Mask prefix = 0, suffix = 0;
      for (std::size_t q = 0; q < k; ++q) prefix |= label_bit(ls[q]);
      for (std::size_t q = k + 1; q < ls.size(); ++q) suffix |= label_bit(ls[q]);
      const T sc = k % 2 ? -c : c;
      out += wedge(wedge(Form<T>::monomial(prefix, sc), d[ls[k]]), Form<T>::monomial(suffix));
    }
  }
  return out;
}

template <class T>
Residual CoframeSystem<T>::reality() const {
  std::vector<Form<T>> diffs;
  for (int k = 0; k < kNumLabels; ++k) diffs.push_back(d[k].conjugate() - d[conjugate_label(k)]);
  return forms_residual(diffs, table_coefficients(*this));
}

template <class T>
Residual table_difference(const CoframeSystem<T>& x, const CoframeSystem<T>& y) {
  std::vector<Form<T>> diffs;
  for (int k = 0; k < kNumLabels; ++k) diffs.push_back(x.d[k] - y.d[k]);
  std::vector<T> ref = table_coefficients(x);
  const std::vector<T> other = table_coefficients(y);
  if (norm_of(other) > norm_of(ref)) ref = other;
  return forms_residual(diffs, ref);
}

namespace {

int psi(int s) { return kFirstPsi + s; }
int phi(int s) { return kFirstPhi + s; }
int th(int a) { return kFirstTheta + a; }
int thb(int a) { return kFirstThetaBar + a; }

// -w^{s+1} ^ w^{s+2} within a triple of labels starting at first.
template <class T>
Form<T> triple_part(int first, int s) {
  return Form<T>::pair(first + (s + 1) % 3, first + (s + 2) % 3, T(-1));
}

// pi^s_{.bbar} (Ups)_{a s} th^a ^ thb^b
template <class T>
Form<T> upsilon_mixed(int s) {
  const auto& st = standard_structure<T>();
  const Matrix<T> ups = upsilon_elements<T>()[s].matrix();
  Form<T> f;
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b) {
      T c;
      for (int sg = 0; sg < kDimW; ++sg) c += st.pi_up_lowbar(sg, b) * ups(a, sg);
      f += Form<T>::pair(th(a), thb(b), c);
    }
  return f;
}

// sum_a th^a ^ thb^a
template <class T>
Form<T> hermitian_part() {
  Form<T> f;
  for (int a = 0; a < kDimW; ++a) f += Form<T>::pair(th(a), thb(a), T(1));
  return f;
}

// sum pi_{ab} th^a ^ th^b over the chosen block.
template <class T>
Form<T> symplectic_part(bool barred) {
  const auto& st = standard_structure<T>();
  Form<T> f;
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b) {
      const T p = barred ? st.pi(a, b).conj() : st.pi(a, b);
      f += barred ? Form<T>::pair(thb(a), thb(b), p) : Form<T>::pair(th(a), th(b), p);
    }
  return f;
}

// Torsion-free equations for d th^a and d thb^a.
template <class T>
void fill_theta(CoframeSystem<T>& cs) {
  const auto& st = standard_structure<T>();
  const auto ups = upsilon_elements<T>();
  const T i = T::imag_unit();
  const T half = frac<T>(1, 2);
  for (int a = 0; a < kDimW; ++a) {
    Form<T> f, fb;
    for (int s = 0; s < 3; ++s)
      for (int b = 0; b < kDimW; ++b) {
        T c, cb;
        for (int sg = 0; sg < kDimW; ++sg) {
          c += st.pi_upper(a, sg) * ups[s](sg, b);
          cb += st.pi_upper(a, sg).conj() * ups[s](sg, b).conj();
        }
        f -= Form<T>::pair(psi(s), th(b), c);
        fb -= Form<T>::pair(psi(s), thb(b), cb);
      }
    f -= Form<T>::pair(phi(0), th(a), half * i);
    fb += Form<T>::pair(phi(0), thb(a), half * i);
    for (int b = 0; b < kDimW; ++b) {
      const T p = half * st.pi_up_lowbar(a, b);
      f += Form<T>::pair(phi(1), thb(b), p) + Form<T>::pair(phi(2), thb(b), i * p);
      const T pb = half * st.pi_upbar_low(a, b);
      fb += Form<T>::pair(phi(1), th(b), pb) - Form<T>::pair(phi(2), th(b), i * pb);
    }
    cs.d[th(a)] = f;
    cs.d[thb(a)] = fb;
  }
}

template <class T>
CoframeSystem<T> connection_only(const std::string& name) {
  CoframeSystem<T> cs;
  cs.name = name;
  for (int s = 0; s < 3; ++s) {
    cs.d[psi(s)] = triple_part<T>(kFirstPsi, s);
    cs.d[phi(s)] = triple_part<T>(kFirstPhi, s);
  }
  fill_theta(cs);
  return cs;
}

// th^1^th^3 + th^2^th^4 and the same on the barred block.
template <class T>
std::pair<Form<T>, Form<T>> tabulated_pi_pairs() {
  return {Form<T>::pair(th(0), th(2), T(1)) + Form<T>::pair(th(1), th(3), T(1)),
          Form<T>::pair(thb(0), thb(2), T(1)) + Form<T>::pair(thb(1), thb(3), T(1))};
}

}  // namespace

template <class T>
CoframeSystem<T> build_coframe(ModelSpace space) {
  const T i = T::imag_unit();
  const T three_half = frac<T>(3, 2);
  switch (space) {
    case ModelSpace::flat:
      return connection_only<T>("flat");
    case ModelSpace::compact:
    case ModelSpace::split: {
      const bool compact = space == ModelSpace::compact;
      CoframeSystem<T> cs = connection_only<T>(compact ? "compact" : "split");
      const T sign = compact ? T(1) : T(-1);
      for (int s = 0; s < 3; ++s) cs.d[psi(s)] += sign * upsilon_mixed<T>(s);
      const auto [w, wb] = tabulated_pi_pairs<T>();
      cs.d[phi(0)] -= sign * (three_half * i) * hermitian_part<T>();
      cs.d[phi(1)] -= sign * three_half * (w + wb);
      cs.d[phi(2)] += sign * (three_half * i) * (w - wb);
      return cs;
    }
  }
  throw std::invalid_argument("unknown model space");
}

template <class T>
CoframeSystem<T> build_coframe(const T& h, Phi1Sign sign) {
  CoframeSystem<T> cs = connection_only<T>("h-family");
  cs.h = h;
  const T i = T::imag_unit();
  const T half = frac<T>(1, 2);
  for (int s = 0; s < 3; ++s) cs.d[psi(s)] -= (frac<T>(2, 3) * h) * upsilon_mixed<T>(s);
  const T g_coeff = sign == Phi1Sign::solved ? i * h : -(i * h);
  cs.d[phi(0)] += g_coeff * hermitian_part<T>();
  const Form<T> w = symplectic_part<T>(false), wb = symplectic_part<T>(true);
  cs.d[phi(1)] += (half * h) * (w + wb);
  cs.d[phi(2)] -= (half * i * h) * (w - wb);
  return cs;
}

template <class T>
CoframeSystem<T> rescale_frame(const CoframeSystem<T>& cs, const T& lambda) {
  const typename Form<T>::Mask theta_mask = ((1u << kNumLabels) - 1) & ~((1u << kFirstTheta) - 1);
  const T inv = lambda.inverse();
  auto substitute = [&](const Form<T>& f) {
    Form<T> out;
    for (const auto& [m, c] : f.terms()) {
      T factor(1);
      for (int q = 0; q < popcount(m & theta_mask); ++q) factor *= lambda;
      out.add(m, factor * c);
    }
    return out;
  };
  CoframeSystem<T> out;
  out.name = cs.name + " (rescaled)";
  for (int k = 0; k < kNumLabels; ++k) {
    out.d[k] = substitute(cs.d[k]);
    if (is_theta_label(k)) out.d[k] = inv * out.d[k];
  }
  if (cs.h) out.h = lambda * lambda * *cs.h;
  return out;
}

template <class T>
CoframeSystem<T> perturbed(const CoframeSystem<T>& cs, int label, int i, int j, const T& delta) {
  CoframeSystem<T> out = cs;
  out.name = cs.name + " (perturbed)";
  out.d[label] += Form<T>::pair(i, j, delta);
  return out;
}

template <class T>
ClosureResult<T> d_squared_check(const CoframeSystem<T>& cs, double tol) {
  ClosureResult<T> out;
  std::vector<Form<T>> all;
  for (int k = 0; k < kNumLabels; ++k) {
    out.residual[k] = cs.exterior_derivative(cs.d[k]);
    all.push_back(out.residual[k]);
  }
  out.total = forms_residual(all, table_coefficients(cs));
  out.closes = out.total.passes(tol);
  return out;
}

template <class T>
std::array<T, kNumLabels> LieTable<T>::bracket(int i, int j) const {
  std::array<T, kNumLabels> out;
  for (int k = 0; k < kNumLabels; ++k) out[k] = (*this)(k, i, j);
  return out;
}

template <class T>
Matrix<T> LieTable<T>::ad_on_vc(int i) const {
  Matrix<T> m(kDimV, kDimV);
  for (int c = 0; c < kDimV; ++c)
    for (int r = 0; r < kDimV; ++r) m(r, c) = (*this)(th(r), i, th(c));
  return m;
}

template <class T>
LieTable<T> lie_table_from_coframe(const CoframeSystem<T>& cs, double tol) {
  if (!d_squared_check(cs, tol).closes) throw ClosureFailure(cs.name);
  LieTable<T> t;
  for (int k = 0; k < kNumLabels; ++k)
    for (const auto& [m, c] : cs.d[k].terms()) {
      const auto ls = labels_of(m);
      if (ls.size() != 2) throw ModelError("d of a coframe element is a 2-form");
      t(k, ls[0], ls[1]) = -c;
      t(k, ls[1], ls[0]) = c;
    }
  return t;
}

template <class T>
JacobiResult<T> jacobi_residual(const LieTable<T>& t, double tol) {
  JacobiResult<T> out;
  std::vector<T> all, scale;
  auto nested = [&](int i, int j, int k, std::array<T, kNumLabels>& acc) {
    for (int m = 0; m < kNumLabels; ++m) {
      const T& cm = t(m, i, j);
      if (cm.is_zero()) continue;
      for (int l = 0; l < kNumLabels; ++l) acc[l] += cm * t(l, m, k);
    }
  };
  for (int i = 0; i < kNumLabels; ++i)
    for (int j = i + 1; j < kNumLabels; ++j)
      for (int k = j + 1; k < kNumLabels; ++k) {
        std::array<T, kNumLabels> acc;
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        const Residual r = measure(std::vector<T>(acc.begin(), acc.end()), 1.0);
        if (!r.passes(tol) && !out.first_failure) out.first_failure = std::array<int, 3>{i, j, k};
        all.insert(all.end(), acc.begin(), acc.end());
        ++out.triples;
      }
  for (int k = 0; k < kNumLabels; ++k)
    for (int i = 0; i < kNumLabels; ++i)
      for (int j = 0; j < kNumLabels; ++j) scale.push_back(t(k, i, j));
  out.total = measure(all, norm_of(scale));
  return out;
}

template <class T>
bool jacobi_check(const LieTable<T>& t, double tol) {
  const auto r = jacobi_residual(t, tol);
  if (r.first_failure) {
    const auto [i, j, k] = *r.first_failure;
    throw JacobiFailure(i, j, k);
  }
  return true;
}

template <class T>
VcTensor<T> curvature_from_table(const CoframeSystem<T>& cs, const LieTable<T>& t) {
  VcTensor<T> r(4);
  for (int x = 0; x < kNumConnection; ++x) {
    const Matrix<T> ad = t.ad_on_vc(x);
    for (int a = 0; a < kDimV; ++a)
      for (int b = 0; b < kDimV; ++b) {
        const T dx = cs.d[x].coefficient(th(a), th(b));
        if (dx.is_zero()) continue;
        // g(ad(X) e_c, e_d) = ad(dbar, c)
        for (int c = 0; c < kDimV; ++c)
          for (int d = 0; d < kDimV; ++d) r(a, b, c, d) += dx * ad((d + kDimW) % kDimV, c);
      }
  }
  return r;
}

template <class T>
VcTensor<T> projective_curvature(const std::array<Matrix<T>, 3>& complex_structures) {
  const Matrix<T>& g = standard_structure<T>().metric;
  std::array<VcTensor<T>, 3> w;
  for (int s = 0; s < 3; ++s) w[s] = metric_two_form(complex_structures[s]);
  const T quarter = frac<T>(1, 4);
  VcTensor<T> r(4);
  for (int x = 0; x < kDimV; ++x)
    for (int y = 0; y < kDimV; ++y)
      for (int z = 0; z < kDimV; ++z)
        for (int v = 0; v < kDimV; ++v) {
          T acc = g(x, v) * g(y, z) - g(x, z) * g(y, v);
          for (int s = 0; s < 3; ++s)
            acc += T(-2) * w[s](x, y) * w[s](z, v) + w[s](x, z) * w[s](v, y) + w[s](x, v) * w[s](y, z);
          r(x, y, z, v) = quarter * acc;
        }
  return r;
}

template <class T>
VcTensor<T> ricci(const VcTensor<T>& r) {
  return r.trace(0, 3);
}

template <class T>
T scalar_curvature(const VcTensor<T>& r) {
  return ricci(r).trace(0, 1).flat(0);
}

template <class T>
bool CurvatureData<T>::passes(double tol) const {
  for (const Residual* r : {&decomposition, &tabulated_identity, &kappa_identity, &r_prime_hk, &r_prime_traceless,
                            &einstein, &four_form, &structures_match, &frames_match, &psi1_phi1})
    if (!r->passes(tol)) return false;
  return true;
}

template <class T>
CurvatureData<T> curvature_model(ModelSpace space, double tol) {
  if (space == ModelSpace::flat) throw std::invalid_argument("curvature_model needs the compact or split space");
  const auto& st = standard_structure<T>();
  const CoframeSystem<T> cs = build_coframe<T>(space);
  const LieTable<T> table = lie_table_from_coframe(cs, tol);
  CurvatureData<T> out;
  out.r = curvature_from_table(cs, table);
  for (int s = 0; s < 3; ++s) {
    out.complex_structures[s] = T(2) * table.ad_on_vc(phi(s));
    out.frames[s] = table.ad_on_vc(psi(s));
  }
  out.r0 = projective_curvature(out.complex_structures);
  out.scal_trace = scalar_curvature(out.r);
  out.scal_r0 = scalar_curvature(out.r0);
  out.r0_coefficient = out.scal_trace / out.scal_r0;
  out.scal_from_split = T(64) * out.r0_coefficient;
  out.c = cs.d[phi(0)].coefficient(th(0), thb(0)) / (T(-2) * T::imag_unit());
  out.scal_from_c = frac<T>(128, 3) * out.c;

  const VcTensor<T> r_prime_full = out.r - out.r0_coefficient * out.r0;
  out.r_prime = HKTensor<T>::from_full(r_prime_full);
  out.decomposition = measure_difference(out.r.components(),
                                         (out.r_prime.full() + out.r0_coefficient * out.r0).components());
  const HKInvariants inv = check_hk_invariants(r_prime_full);
  out.r_prime_hk = inv.antisymmetry;
  out.r_prime_hk.merge(inv.bianchi).merge(inv.j_invariance).merge(inv.pair_symmetry).merge(inv.reality);

  const SymQuartic<T> s = s_hat<T>();
  const T sign = space == ModelSpace::compact ? T(-1) : T(1);
  const VcTensor<T> k_full = kappa(s).full();
  out.tabulated_identity =
      measure_difference(out.r.components(), (sign * k_full - (sign * frac<T>(3, 2)) * out.r0).components());
  out.kappa_identity = measure_difference(kappa_inv(out.r_prime).tensor().components(), (sign * s).tensor().components());
  out.r_prime_traceless = measure(ricci(r_prime_full).components(), norm_of(r_prime_full.components()));

  const VcTensor<T> ric = ricci(out.r);
  VcTensor<T> g_tensor(2);
  for (int a = 0; a < kDimV; ++a)
    for (int b = 0; b < kDimV; ++b) g_tensor(a, b) = st.metric(a, b);
  out.einstein = measure_difference(ric.components(), (out.scal_trace / T(8) * g_tensor).components());

  VcTensor<T> eps_sum(4), omega(4);
  for (int q = 0; q < 3; ++q) {
    const VcTensor<T> e = metric_two_form(out.frames[q]);
    const VcTensor<T> w = metric_two_form(out.complex_structures[q]);
    eps_sum += wedge(e, e);
    omega += wedge(w, w);
  }
  out.four_form = measure_difference(eps_sum.components(), (frac<T>(-3, 4) * omega).components());

  std::vector<T> model, standard;
  for (int q = 0; q < 3; ++q) {
    const auto& a = out.complex_structures[q].data();
    const auto& b = st.J[q].data();
    model.insert(model.end(), a.begin(), a.end());
    standard.insert(standard.end(), b.begin(), b.end());
  }
  out.structures_match = measure_difference(model, standard);
  model.clear();
  standard.clear();
  const auto frames = script_e_frames<T>();
  for (int q = 0; q < 3; ++q) {
    const auto& a = out.frames[q].data();
    const auto& b = frames[q].data();
    model.insert(model.end(), a.begin(), a.end());
    standard.insert(standard.end(), b.begin(), b.end());
  }
  out.frames_match = measure_difference(model, standard);
  const auto br = table.bracket(psi(0), phi(0));
  out.psi1_phi1 = measure(std::vector<T>(br.begin(), br.end()), 1.0);
  return out;
}

template <class T>
bool BianchiSolution<T>::passes(double tol) const {
  if (nullity != 1) return false;
  for (const Residual* r : {&f2_h_pi, &f3, &d_upsilon, &c_zero, &f1_zero, &g23_zero, &g1_formula, &matches_family})
    if (!r->passes(tol)) return false;
  return true;
}

template <class T>
BianchiSolution<T> bianchi_family_solve([[maybe_unused]] double tol) {
  const auto& st = standard_structure<T>();
  const auto ups = upsilon_elements<T>();
  const T i = T::imag_unit();

  std::vector<std::pair<int, int>> pairs;
  for (int a = kFirstTheta; a < kNumLabels; ++a)
    for (int b = a + 1; b < kNumLabels; ++b) pairs.emplace_back(a, b);
  std::vector<typename Form<T>::Mask> cubes;
  for (int a = kFirstTheta; a < kNumLabels; ++a)
    for (int b = a + 1; b < kNumLabels; ++b)
      for (int c = b + 1; c < kNumLabels; ++c) cubes.push_back(label_bit(a) | label_bit(b) | label_bit(c));
  const std::size_t n_pairs = pairs.size();
  const std::size_t n_unknowns = kNumConnection * n_pairs;

  auto system_with = [&](const std::vector<T>& u) {
    CoframeSystem<T> cs = connection_only<T>("bianchi");
    for (int x = 0; x < kNumConnection; ++x)
      for (std::size_t p = 0; p < n_pairs; ++p)
        cs.d[x] += Form<T>::pair(pairs[p].first, pairs[p].second, u[x * n_pairs + p]);
    return cs;
  };
  auto theta_cubed = [&](const CoframeSystem<T>& cs) {
    std::vector<T> out;
    for (int a = kFirstTheta; a < kNumLabels; ++a) {
      const Form<T> dd = cs.exterior_derivative(cs.d[a]);
      for (auto m : cubes) out.push_back(dd.coefficient(m));
    }
    return out;
  };

  BianchiSolution<T> out;
  out.unknowns = n_unknowns;
  const std::vector<T> base = theta_cubed(system_with(std::vector<T>(n_unknowns)));
  out.equations = base.size();
  Matrix<T> a(out.equations, n_unknowns);
  for (std::size_t j = 0; j < n_unknowns; ++j) {
    std::vector<T> u(n_unknowns);
    u[j] = T(1);
    const auto col = theta_cubed(system_with(u));
    for (std::size_t r = 0; r < col.size(); ++r) a(r, j) = col[r] - base[r];
  }
  out.basis = nullspace(a);
  out.nullity = out.basis.cols();
  if (out.nullity != 1) {
    std::ostringstream os;
    for (std::size_t c = 0; c < out.basis.cols(); ++c) {
      os << "[";
      for (std::size_t r = 0; r < out.basis.rows(); ++r)
        if (!out.basis(r, c).is_zero()) os << " u" << r << "=" << out.basis(r, c).to_string();
      os << " ]\n";
    }
    throw BianchiDimensionError(out.nullity, os.str());
  }

  // Coefficient of w^p ^ w^q in the theta-theta part of form x.
  auto unknown_index = [&](int p, int q) {
    for (std::size_t k = 0; k < n_pairs; ++k)
      if (pairs[k] == std::make_pair(std::min(p, q), std::max(p, q))) return k;
    throw std::logic_error("pair");
  };
  const T pivot = out.basis(4 * n_pairs + unknown_index(th(0), th(2)), 0);
  if (pivot.is_zero()) throw ModelError("(F2)_13 spans the solution family");
  out.normalized.resize(n_unknowns);
  for (std::size_t r = 0; r < n_unknowns; ++r) out.normalized[r] = out.basis(r, 0) / pivot;
  auto u = [&](int x, int p, int q) {
    if (p == q) return T();
    const T v = out.normalized[x * n_pairs + unknown_index(p, q)];
    return p < q ? v : -v;
  };

  const T h(1);
  std::vector<T> f2, f2_ref, f3, d_diff, c_vals, f1_vals, g23_vals, g1, g1_ref;
  for (int al = 0; al < kDimW; ++al)
    for (int be = 0; be < kDimW; ++be) {
      if (al < be) {
        f2.push_back(u(4, th(al), th(be)));
        f2_ref.push_back(h * st.pi(al, be));
        f2.push_back(u(4, thb(al), thb(be)));
        f2_ref.push_back(h * st.pi(al, be).conj());
        f3.push_back(u(4, th(al), th(be)) - i * u(5, th(al), th(be)));
        for (int s = 0; s < 3; ++s) {
          c_vals.push_back(u(s, th(al), th(be)));
          c_vals.push_back(u(s, thb(al), thb(be)));
        }
        f1_vals.push_back(u(3, th(al), th(be)));
        f1_vals.push_back(u(3, thb(al), thb(be)));
      }
      for (int s = 0; s < 3; ++s) {
        T ref;
        for (int sg = 0; sg < kDimW; ++sg) ref += ups[s](al, sg) * st.pi_up_lowbar(sg, be);
        d_diff.push_back(u(s, th(al), thb(be)) + frac<T>(2, 3) * h * ref);
      }
      g23_vals.push_back(u(4, th(al), thb(be)));
      g23_vals.push_back(u(5, th(al), thb(be)));
      // -i pi^s_{.bbar} (F2)_{s a} + (i/2) pi^{st} (F2)_{st} g_{a bbar}
      T ref, trace;
      for (int sg = 0; sg < kDimW; ++sg) {
        ref -= i * st.pi_up_lowbar(sg, be) * u(4, th(sg), th(al));
        for (int tau = 0; tau < kDimW; ++tau) trace += st.pi_upper(sg, tau) * u(4, th(sg), th(tau));
      }
      ref += frac<T>(1, 2) * i * trace * st.g_lower(al, be);
      g1.push_back(u(3, th(al), thb(be)));
      g1_ref.push_back(ref);
    }
  out.f2_h_pi = measure_difference(f2, f2_ref);
  out.f3 = measure(f3, norm_of(f2));
  out.d_upsilon = measure(d_diff, norm_of(out.normalized));
  out.c_zero = measure(c_vals, norm_of(out.normalized));
  out.f1_zero = measure(f1_vals, norm_of(out.normalized));
  out.g23_zero = measure(g23_vals, norm_of(out.normalized));
  out.g1_formula = measure_difference(g1, g1_ref);
  out.g1_diagonal = u(3, th(0), thb(0));

  auto family_diff = [&](Phi1Sign sign) {
    const CoframeSystem<T> fam = build_coframe<T>(h, sign);
    std::vector<T> lhs, rhs;
    for (int x = 0; x < kNumConnection; ++x)
      for (const auto& [p, q] : pairs) {
        lhs.push_back(u(x, p, q));
        rhs.push_back(fam.d[x].coefficient(p, q));
      }
    return measure_difference(lhs, rhs);
  };
  out.matches_family = family_diff(Phi1Sign::solved);
  out.tabulated_family = family_diff(Phi1Sign::tabulated);
  return out;
}

#define CUBICDISC_INSTANTIATE(T)                                                                         \
  template class Form<T>;                                                                                \
  template struct CoframeSystem<T>;                                                                      \
  template class LieTable<T>;                                                                            \
  template Form<T> wedge(const Form<T>&, const Form<T>&);                                                \
  template Residual table_difference(const CoframeSystem<T>&, const CoframeSystem<T>&);                  \
  template CoframeSystem<T> build_coframe(ModelSpace);                                                   \
  template CoframeSystem<T> build_coframe(const T&, Phi1Sign);                                           \
  template CoframeSystem<T> rescale_frame(const CoframeSystem<T>&, const T&);                            \
  template CoframeSystem<T> perturbed(const CoframeSystem<T>&, int, int, int, const T&);                 \
  template ClosureResult<T> d_squared_check(const CoframeSystem<T>&, double);                            \
  template LieTable<T> lie_table_from_coframe(const CoframeSystem<T>&, double);                          \
  template JacobiResult<T> jacobi_residual(const LieTable<T>&, double);                                  \
  template bool jacobi_check(const LieTable<T>&, double);                                                \
  template VcTensor<T> curvature_from_table(const CoframeSystem<T>&, const LieTable<T>&);                \
  template VcTensor<T> projective_curvature(const std::array<Matrix<T>, 3>&);                            \
  template VcTensor<T> ricci(const VcTensor<T>&);                                                        \
  template T scalar_curvature(const VcTensor<T>&);                                                       \
  template struct CurvatureData<T>;                                                                      \
  template CurvatureData<T> curvature_model(ModelSpace, double);                                         \
  template struct BianchiSolution<T>;                                                                    \
  template BianchiSolution<T> bianchi_family_solve(double);

CUBICDISC_INSTANTIATE(ExactScalar)
CUBICDISC_INSTANTIATE(FloatScalar)

}  // namespace cubicdisc
