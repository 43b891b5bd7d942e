#include "cubicdisc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "cubicdisc/irrep.hpp"

namespace cubicdisc {

namespace {

template <class T>
class Recorder {
 public:
  Recorder(SuiteResult& out, double tol) : out_(out), tol_(tol) {}

  double tol() const { return tol_; }

  void residual(const std::string& name, const Residual& r, const std::string& detail = "") {
    CheckResult c;
    c.name = name;
    c.pass = r.passes(tol_);
    c.measured = true;
    c.exact_zero = r.exact && r.zero;
    c.residual = r.relative();
    c.detail = detail.empty() ? (c.exact_zero ? "exact-zero" : "") : detail;
    out_.checks.push_back(c);
  }

  void flag(const std::string& name, bool ok, const std::string& detail) {
    CheckResult c;
    c.name = name;
    c.pass = ok;
    c.exact_zero = false;
    c.detail = detail;
    out_.checks.push_back(c);
  }

  void equal(const std::string& name, long long got, long long want) {
    flag(name, got == want, "observed " + std::to_string(got) + ", expected " + std::to_string(want));
  }

  void observe(const std::string& key, const std::string& value) { out_.observations[key] = value; }

  // Runs fn and records a failed check if it throws.
  template <class F>
  void guarded(const std::string& name, F fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      flag(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  SuiteResult& out_;
  double tol_;
};

template <class T>
Residual scalar_residual(const T& got, const T& want) {
  return measure_difference(std::vector<T>{got}, std::vector<T>{want});
}

template <class T>
Residual merged(const std::vector<Residual>& rs) {
  Residual out;
  out.exact = is_exact_v<T>;
  for (const auto& r : rs) out.merge(r);
  return out;
}

template <class T>
std::size_t nullity_of(const Matrix<T>& m) {
  return m.cols() - rank(m);
}

template <class T>
Sp2Element<T> random_real_element(std::mt19937_64& rng) {
  const auto& rb = sp2_algebra<T>().real_basis();
  std::uniform_int_distribution<int> dist(-2, 2);
  for (;;) {
    Sp2Element<T> x;
    bool nonzero = false;
    for (const auto& b : rb) {
      const int c = dist(rng);
      if (c == 0) continue;
      nonzero = true;
      x += T(c) * b;
    }
    if (nonzero) return x;
  }
}

template <class T>
Matrix<T> random_group_element(std::mt19937_64& rng) {
  for (;;) {
    try {
      return cayley_sp2(random_real_element<T>(rng));
    } catch (const SingularCayley&) {
    }
  }
}

// Basis of {L : dagger L = 2 L} inside the 100-dim space of endomorphisms of sp(2).
template <class T>
std::vector<EndoOnSp2<T>> dagger_two_eigenspace() {
  const auto& alg = sp2_algebra<T>();
  const int n = kDimSp2;
  Matrix<T> op(n * n, n * n);
  for (int c = 0; c < n * n; ++c) {
    EndoOnSp2<T> e(n, n);
    e(c / n, c % n) = T(1);
    const EndoOnSp2<T> img = alg.dagger(e) - T(2) * e;
    for (int r = 0; r < n * n; ++r) op(r, c) = img(r / n, r % n);
  }
  const Matrix<T> ns = nullspace(op);
  std::vector<EndoOnSp2<T>> out;
  for (std::size_t k = 0; k < ns.cols(); ++k) {
    EndoOnSp2<T> l(n, n);
    for (int r = 0; r < n * n; ++r) l(r / n, r % n) = ns(r, k);
    out.push_back(l);
  }
  return out;
}

// X -> j(L(jX)), the real-form conjugate of L.
template <class T>
EndoOnSp2<T> j_conjugate(const EndoOnSp2<T>& l) {
  const auto& alg = sp2_algebra<T>();
  std::vector<Sp2Element<T>> images;
  for (const auto& x : alg.basis()) images.push_back(alg.apply(l, x.jmap()).jmap());
  return alg.matrix_of(images);
}

template <class T>
void preliminaries(Recorder<T>& rec, std::mt19937_64& rng) {
  const auto& st = standard_structure<T>();
  const auto& alg = sp2_algebra<T>();
  const T i = T::imag_unit();
  const T r3 = T::sqrt3();
  rec.residual("scalar_field_identities",
               merged<T>({scalar_residual(i * i, T(-1)), scalar_residual(r3 * r3, T(3)),
                          scalar_residual((T(1) + r3 * i) * (T(1) + r3 * i).inverse(), T(1))}));

  T pi_pi;
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b) pi_pi += st.pi_upper(a, b) * st.pi_lower(a, b);
  rec.residual("pi_full_contraction_is_4", scalar_residual(pi_pi, T(4)));

  const Matrix<T> id8 = Matrix<T>::identity(kDimV);
  std::vector<Residual> quat;
  for (int s = 0; s < 3; ++s) {
    quat.push_back(measure_difference(st.J[s] * st.J[s], -id8));
    quat.push_back(measure_difference(st.J[s] * st.J[(s + 1) % 3], st.J[(s + 2) % 3]));
    quat.push_back(measure_difference(st.J[s].transpose() * st.metric, -(st.metric * st.J[s])));
  }
  rec.residual("quaternion_relations", merged<T>(quat));

  std::vector<Residual> jac;
  const auto& basis = alg.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      for (std::size_t c = b + 1; c < basis.size(); ++c) {
        const Sp2Element<T> sum = bracket(bracket(basis[a], basis[b]), basis[c]) +
                                  bracket(bracket(basis[b], basis[c]), basis[a]) +
                                  bracket(bracket(basis[c], basis[a]), basis[b]);
        jac.push_back(measure(sum.matrix().data(), 1.0));
      }
  rec.residual("sp2_jacobi", merged<T>(jac));

  const EndoOnSp2<T> id = Matrix<T>::identity(kDimSp2);
  rec.residual("dagger_identity_is_minus_6", measure_difference(alg.dagger(id), T(-6) * id));

  std::vector<Residual> rt, hk, full;
  for (int n = 0; n < 5; ++n) {
    const SymQuartic<T> s = random_quartic<T>(rng);
    const HKTensor<T> k = kappa(s);
    rt.push_back(measure_difference(kappa_inv(k).tensor().components(), s.tensor().components()));
    full.push_back(measure_difference(kappa_full(s).components(), k.full().components()));
    const HKInvariants inv = check_hk_invariants(k.full());
    hk.push_back(merged<T>({inv.antisymmetry, inv.bianchi, inv.j_invariance, inv.pair_symmetry, inv.reality}));
  }
  rec.residual("kappa_inverse_roundtrip", merged<T>(rt));
  rec.residual("kappa_full_matches_blocks", merged<T>(full));
  rec.residual("kappa_hk_symmetries", merged<T>(hk));

  std::vector<Residual> two_l, back_k, frame;
  for (int n = 0; n < 20; ++n) {
    const HKTensor<T> k = kappa(random_quartic<T>(rng));
    const EndoOnSp2<T> l = t_k(k);
    two_l.push_back(measure_difference(alg.dagger(l), T(2) * l));
    back_k.push_back(measure_difference(hk_from_endo(l).mixed().components(), k.mixed().components()));
    if (n < 3) frame.push_back(measure_difference(t_k_frame(k), l));
  }
  rec.residual("dagger_eq_2l_from_k", merged<T>(two_l));
  rec.residual("k_from_l_recovers_k", merged<T>(back_k));
  rec.residual("t_k_frame_matches_contraction", merged<T>(frame));

  const auto eig = dagger_two_eigenspace<T>();
  rec.equal("dagger_two_eigenspace_dim", eig.size(), 35);
  std::uniform_int_distribution<int> dist(-2, 2);
  std::vector<Residual> real_ok, l_back;
  for (int n = 0; n < 20; ++n) {
    EndoOnSp2<T> l(kDimSp2, kDimSp2);
    for (const auto& b : eig) l += (T(dist(rng)) + T(dist(rng)) * i) * b;
    l = frac<T>(1, 2) * (l + j_conjugate(l));
    real_ok.push_back(measure_difference(alg.dagger(l), T(2) * l));
    l_back.push_back(measure_difference(t_k(hk_from_endo(l)), l));
  }
  rec.residual("dagger_eq_2l_random_l", merged<T>(real_ok));
  rec.residual("l_from_k_recovers_l", merged<T>(l_back));

  bool rejected = false;
  try {
    hk_from_endo(id);
  } catch (const DaggerMismatch&) {
    rejected = true;
  }
  rec.flag("k_from_l_rejects_identity", rejected, "identity is not in the 2-eigenspace of dagger");
}

template <class T>
void irrep(Recorder<T>& rec, std::mt19937_64&) {
  const auto ind = induced_structure<T>();
  rec.residual("induced_pi_scale_is_1", scalar_residual(ind.pi_scale, T(1)));
  rec.residual("induced_pi_matches", ind.pi_match);
  rec.residual("induced_j_matches", ind.j_match);

  const auto e = irrep_generators<T>();
  const auto pe = tabulated_generators<T>();
  const auto u = upsilon_matrices(e);
  const auto pu = tabulated_upsilon<T>();
  std::vector<Residual> gen, ups;
  for (int s = 0; s < 3; ++s) {
    gen.push_back(measure_difference(e[s], pe[s]));
    ups.push_back(measure_difference(u[s], pu[s]));
  }
  rec.residual("generators_match_tabulated", merged<T>(gen));
  rec.residual("upsilon_match_tabulated", merged<T>(ups));
  for (const auto& c : upsilon_lemma_checks<T>()) rec.residual(c.name, c.residual);

  const SymQuartic<T> s = s_hat<T>();
  rec.residual("s_hat_golden_values",
               merged<T>({scalar_residual(s(0, 1, 2, 3), frac<T>(-3, 4)), scalar_residual(s(0, 3, 3, 3), T::sqrt3()),
                          scalar_residual(s(0, 2, 0, 2), frac<T>(-3, 2))}));
  rec.residual("s_hat_matches_tabulated_quartic",
               measure_difference(s.tensor().components(),
                                  polarize(tabulated_discriminant_quartic<T>()).tensor().components()));
  const SubstitutionReport sub = substitution_check<T>();
  rec.flag("discriminant_substitution", sub.passes(rec.tol()) && sub.coefficients_compared == 35,
           std::to_string(sub.coefficients_compared) + " coefficients, " + std::to_string(sub.mismatches) +
               " mismatches");
  rec.residual("discriminant_repeated_root", scalar_residual(classical_discriminant(T(1), T(0), T(-3), T(2)), T(0)));
  rec.residual("discriminant_golden", scalar_residual(classical_discriminant(T(1), T(0), T(-1), T(0)), T(4)));

  const ProjectionReport<T> p = projection_checks<T>();
  rec.equal("projection_rank", p.rank, 3);
  rec.residual("projection_idempotent", p.idempotent);
  rec.residual("projection_dagger", p.dagger);
  rec.residual("projection_t_k_relation", p.t_k_relation);
  rec.residual("reducible_both_factors", p.reducible_nd);
  rec.residual("reducible_one_trivial_factor", p.reducible_triv);
  rec.residual("reducible_brackets_both", p.brackets_nd);
  rec.residual("reducible_brackets_trivial", p.brackets_triv);

  const EndoOnSp2<T> tk = t_k(kappa(s));
  const EndoOnSp2<T> id = Matrix<T>::identity(kDimSp2);
  rec.equal("t_k_eigen_7_2_multiplicity", nullity_of<T>(tk - frac<T>(7, 2) * id), 3);
  rec.equal("t_k_eigen_minus_3_2_multiplicity", nullity_of<T>(tk + frac<T>(3, 2) * id), 7);

  const FrameReport<T> f = frame_checks<T>();
  rec.residual("frames_inner_5_delta", f.inner);
  rec.residual("frames_brackets", f.brackets);
  rec.residual("frames_square_sum", f.square_sum);
  rec.residual("frames_four_form", f.four_form);
  rec.residual("frames_real_entries", f.real_entries);
  rec.residual("frames_real_inner", f.real_inner);
  const FramesResult<T> kf = k_from_frames(script_e_frames<T>(), standard_structure<T>().J);
  rec.residual("k_from_frames_is_kappa_s_hat", measure_difference(kf.k.mixed().components(), kappa(s).mixed().components()));

  const T cal = calibrate_casimir(carrier_v<T>());
  rec.residual("casimir_calibration", scalar_residual(cal, T(1)));
  auto describe = [](const Decomposition& d) {
    std::vector<std::string> parts;
    for (const auto& c : d.components) parts.push_back(c.label() + " x" + std::to_string(c.multiplicity));
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " + " : "") + parts[k];
    return out + " (" + std::to_string(d.accounted_dim) + "/" + std::to_string(d.carrier_dim) + ")";
  };
  auto expect = [&](const std::string& name, const So4Module<T>& m, std::vector<std::array<int, 3>> want) {
    rec.guarded(name, [&] {
      const Decomposition d = casimir_decompose(m, cal);
      std::vector<std::array<int, 3>> got;
      for (const auto& c : d.components) got.push_back({c.k, c.l, c.multiplicity});
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      rec.flag(name, d.complete() && got == want, describe(d));
    });
  };
  expect("casimir_v", carrier_v<T>(), {{3, 1, 1}});
  expect("casimir_sp2", carrier_sp2<T>(), {{2, 0, 1}, {6, 0, 1}});
  expect("casimir_torsion_56", carrier_torsion<T>(), {{9, 1, 1}, {7, 1, 1}, {5, 1, 1}, {3, 1, 1}});
}

template <class T>
void orbit(Recorder<T>& rec, std::mt19937_64& rng) {
  const SymQuartic<T> s = s_hat<T>();
  const HKTensor<T> k = kappa(s);
  const MembershipReport m = is_cd_coordinates(s, rec.tol());
  rec.residual("s_hat_condition_I", m.condition_I);
  rec.residual("s_hat_condition_II", m.condition_II);
  rec.residual("s_hat_coordinate_I", m.coord_I);
  rec.residual("s_hat_coordinate_II", m.coord_II);
  rec.residual("s_hat_middle_index", m.middle_index);

  bool agree = m.theorem_verdict == m.coordinate_verdict && m.coordinate_verdict == m.middle_index_verdict;
  int transported_ok = 0, perturbed_rejected = 0;
  std::vector<Residual> group, equiv;
  for (int n = 0; n < 20; ++n) {
    const Matrix<T> g = random_group_element<T>(rng);
    const GroupCheck gc = check_group_element(g);
    group.push_back(merged<T>({gc.preserves_pi, gc.commutes_j}));
    const SymQuartic<T> st = transport(s, g);
    if (n < 3) equiv.push_back(measure_difference(kappa(st).mixed().components(), transport(k, g).mixed().components()));
    const MembershipReport r = is_cd_coordinates(st, rec.tol());
    agree = agree && r.theorem_verdict == r.coordinate_verdict && r.coordinate_verdict == r.middle_index_verdict;
    if (r.theorem_verdict && r.coordinate_verdict && r.middle_index_verdict) ++transported_ok;
  }
  for (int n = 0; n < 20; ++n) {
    const MembershipReport r = is_cd_coordinates(s + random_quartic<T>(rng), rec.tol());
    agree = agree && r.theorem_verdict == r.coordinate_verdict && r.coordinate_verdict == r.middle_index_verdict;
    if (!r.theorem_verdict && !r.coordinate_verdict && !r.middle_index_verdict) ++perturbed_rejected;
  }
  rec.residual("cayley_elements_in_group", merged<T>(group));
  rec.residual("kappa_equivariance", merged<T>(equiv));
  rec.equal("cayley_transports_accepted", transported_ok, 20);
  rec.equal("perturbations_rejected", perturbed_rejected, 20);
  rec.flag("predicates_agree", agree, "theorem, coordinate and middle-index verdicts on 41 samples");

  const auto stab = stabilizer_algebra(s);
  rec.equal("stabilizer_dimension", stab.size(), 3);
  const auto& alg = sp2_algebra<T>();
  const auto ups = upsilon_elements<T>();
  Matrix<T> span(kDimSp2, stab.size() + 3);
  for (std::size_t c = 0; c < stab.size() + 3; ++c) {
    const Matrix<T> co = alg.coordinates(c < stab.size() ? stab[c] : ups[c - stab.size()]);
    for (int r = 0; r < kDimSp2; ++r) span(r, c) = co(r, 0);
  }
  rec.equal("stabilizer_is_upsilon_span", rank(span), 3);
  rec.equal("orbit_dimension_sp2_sp1", orbit_dimension(s, true), 7);
  rec.observe("orbit_dimension_sp2_only", std::to_string(orbit_dimension(s, false)));
  rec.observe("generic_stabilizer_dimension", std::to_string(stabilizer_algebra(random_quartic<T>(rng)).size()));

  const auto pr = proj_sp1ir<T>();
  const Sp2Element<T> u_sp1 = ups[0];
  const Sp2Element<T> u_perp = alg.apply(Matrix<T>::identity(kDimSp2) - pr, alg.real_basis()[0]);
  for (const auto& [tag, u] : {std::pair<std::string, Sp2Element<T>>{"tangent_sp1ir", u_sp1}, {"tangent_complement", u_perp}}) {
    rec.guarded(tag, [&, tag = tag, u = u] {
      const TangentResult<T> t = tangent_h(k, lie_derivative(k, u), std::optional<Sp2Element<T>>(u), rec.tol());
      rec.residual(tag + "_in_sp2", t.in_sp2);
      rec.residual(tag + "_eigen", t.eigen);
      rec.residual(tag + "_reproduces_l", t.reproduces_l);
      rec.residual(tag + "_formula", t.formula);
    });
  }
  const ContractionCheck cc = contraction_identities(k);
  rec.residual("contraction_identity_1", cc.first);
  rec.residual("contraction_identity_2", cc.second);
}

template <class T>
void models(Recorder<T>& rec, std::mt19937_64&) {
  for (const auto& [tag, space] : {std::pair<std::string, ModelSpace>{"compact", ModelSpace::compact},
                                   {"split", ModelSpace::split},
                                   {"flat", ModelSpace::flat}}) {
    const CoframeSystem<T> cs = build_coframe<T>(space);
    rec.residual(tag + "_reality", cs.reality());
    rec.residual(tag + "_d_squared", d_squared_check(cs, rec.tol()).total);
    rec.guarded(tag + "_jacobi", [&, tag = tag] {
      const JacobiResult<T> j = jacobi_residual(lie_table_from_coframe(cs, rec.tol()), rec.tol());
      rec.residual(tag + "_jacobi", j.total, std::to_string(j.triples) + " triples");
      rec.equal(tag + "_jacobi_triples", j.triples, 364);
    });
  }
  const CoframeSystem<T> compact = build_coframe<T>(ModelSpace::compact);
  rec.residual("compact_is_h_minus_3_2", table_difference(compact, build_coframe<T>(frac<T>(-3, 2))));
  rec.residual("split_is_h_3_2", table_difference(build_coframe<T>(ModelSpace::split), build_coframe<T>(frac<T>(3, 2))));
  rec.residual("flat_is_h_0", table_difference(build_coframe<T>(ModelSpace::flat), build_coframe<T>(T(0))));
  rec.residual("split_is_compact_with_f_eq_ie",
               table_difference(rescale_frame(compact, T::imag_unit()), build_coframe<T>(ModelSpace::split)));
  for (const auto& [tag, h] : {std::pair<std::string, T>{"h_minus_3_2", frac<T>(-3, 2)},
                               {"h_0", T(0)},
                               {"h_3_2", frac<T>(3, 2)},
                               {"h_1", T(1)}})
    rec.residual("family_" + tag + "_d_squared", d_squared_check(build_coframe<T>(h), rec.tol()).total);
  const Residual tabulated = d_squared_check(build_coframe<T>(T(1), Phi1Sign::tabulated), rec.tol()).total;
  rec.flag("family_tabulated_phi1_sign_fails_closure", !tabulated.passes(rec.tol()),
           "d^2 residual with the g-term of d phi1 as -i h: " + std::to_string(tabulated.relative()));
  const Residual pert = d_squared_check(perturbed(compact, kFirstPsi, kFirstPsi + 1, kFirstPsi + 2, T(1)), rec.tol()).total;
  rec.flag("perturbed_table_fails_closure", !pert.passes(rec.tol()),
           "relative d^2 residual " + std::to_string(pert.relative()));
  rec.guarded("compact_bracket_psi1_psi2", [&] {
    const LieTable<T> t = lie_table_from_coframe(compact, rec.tol());
    auto b = t.bracket(kFirstPsi, kFirstPsi + 1);
    b[kFirstPsi + 2] -= T(1);
    rec.residual("compact_bracket_psi1_psi2", measure(std::vector<T>(b.begin(), b.end()), 1.0));
    const Matrix<T> ad = t.ad_on_vc(kFirstPhi);
    Matrix<T> want(kDimV, kDimV);
    for (int a = 0; a < kDimW; ++a) {
      want(a, a) = frac<T>(1, 2) * T::imag_unit();
      want(a + kDimW, a + kDimW) = -frac<T>(1, 2) * T::imag_unit();
    }
    rec.residual("compact_ad_phi1_diagonal", measure_difference(ad, want));
  });

  for (const auto& [tag, space] : {std::pair<std::string, ModelSpace>{"compact", ModelSpace::compact},
                                   {"split", ModelSpace::split}}) {
    rec.guarded(tag + "_curvature", [&, tag = tag, space = space] {
      const CurvatureData<T> c = curvature_model<T>(space, rec.tol());
      rec.residual(tag + "_curvature_identity", c.tabulated_identity);
      rec.residual(tag + "_curvature_decomposition", c.decomposition);
      rec.residual(tag + "_r_prime_kappa_inverse", c.kappa_identity);
      rec.residual(tag + "_r_prime_hk_type", c.r_prime_hk);
      rec.residual(tag + "_r_prime_ricci_traceless", c.r_prime_traceless);
      rec.residual(tag + "_einstein", c.einstein);
      rec.residual(tag + "_eps_wedge_eps", c.four_form);
      rec.residual(tag + "_model_complex_structures", c.structures_match);
      rec.residual(tag + "_model_frames", c.frames_match);
      rec.residual(tag + "_psi1_phi1_commute", c.psi1_phi1);
      rec.residual(tag + "_r0_coefficient", scalar_residual(c.r0_coefficient, tag == "compact" ? frac<T>(3, 2) : frac<T>(-3, 2)));
      rec.observe(tag + "_scal_from_r0_coefficient", c.scal_from_split.to_string());
      rec.observe(tag + "_scal_from_c", c.scal_from_c.to_string());
      rec.observe(tag + "_scal_ricci_trace", c.scal_trace.to_string());
      rec.observe(tag + "_scal_of_r0", c.scal_r0.to_string());
      rec.observe(tag + "_c", c.c.to_string());
    });
  }
}

template <class T>
void bianchi(Recorder<T>& rec, std::mt19937_64&) {
  try {
    const BianchiSolution<T> b = bianchi_family_solve<T>(rec.tol());
    rec.equal("nullity", b.nullity, 1);
    rec.observe("unknowns", std::to_string(b.unknowns));
    rec.observe("equations", std::to_string(b.equations));
    rec.observe("g1_diagonal_at_h_1", b.g1_diagonal.to_string());
    rec.residual("f2_is_h_pi", b.f2_h_pi);
    rec.residual("f2_is_i_f3", b.f3);
    rec.residual("d_is_minus_2h_3_upsilon_pi", b.d_upsilon);
    rec.residual("c_vanishes", b.c_zero);
    rec.residual("f1_vanishes", b.f1_zero);
    rec.residual("g2_g3_vanish", b.g23_zero);
    rec.residual("g1_contraction_formula", b.g1_formula);
    rec.residual("solution_is_h_family", b.matches_family);
    rec.flag("tabulated_phi1_sign_differs", !b.tabulated_family.passes(rec.tol()),
             "relative difference " + std::to_string(b.tabulated_family.relative()));
  } catch (const BianchiDimensionError& e) {
    rec.flag("nullity", false, e.what());
  }
}

template <class T>
void run_named(const std::string& name, Recorder<T>& rec, std::mt19937_64& rng) {
  if (name == "preliminaries") preliminaries(rec, rng);
  if (name == "irrep") irrep(rec, rng);
  if (name == "orbit") orbit(rec, rng);
  if (name == "models") models(rec, rng);
  if (name == "bianchi") bianchi(rec, rng);
}

template <class T>
void run_all(SuiteResult& out, const std::string& name, std::uint64_t seed, double tol) {
  const std::vector<std::string> parts =
      name == "all" ? std::vector<std::string>(suite_names().begin(), suite_names().end() - 1)
                    : std::vector<std::string>{name};
  for (const auto& part : parts) {
    SuiteResult sub;
    Recorder<T> rec(sub, tol);
    std::mt19937_64 rng(seed);
    rec.guarded(part, [&] { run_named(part, rec, rng); });
    for (auto c : sub.checks) {
      if (name == "all") c.name = part + "/" + c.name;
      out.checks.push_back(c);
    }
    for (const auto& [key, v] : sub.observations) out.observations[name == "all" ? part + "/" + key : key] = v;
  }
}

}  // namespace

bool SuiteResult::passes() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

double SuiteResult::max_residual() const {
  double m = 0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"preliminaries", "irrep", "orbit", "models", "bianchi", "all"};
  return names;
}

std::string backend_name(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "float") return Backend::float_;
  throw UsageError("unknown backend '" + s + "' (expected exact or float)");
}

SuiteResult run_suite(const std::string& name, Backend backend, std::uint64_t seed, std::optional<double> tol) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown suite '" + name + "'");
  if (backend == Backend::float_ && !tol) throw UsageError("--tol is required with the float backend");
  if (backend == Backend::exact && tol) throw UsageError("--tol applies only to the float backend");
  if (tol && !(*tol > 0)) throw UsageError("--tol must be positive");
  SuiteResult out;
  out.suite = name;
  out.backend = backend;
  out.seed = seed;
  out.tol = tol;
  const auto t0 = std::chrono::steady_clock::now();
  if (backend == Backend::exact)
    run_all<ExactScalar>(out, name, seed, kDefaultTolerance);
  else
    run_all<FloatScalar>(out, name, seed, *tol);
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::stable_sort(out.checks.begin(), out.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

Json report_json(const SuiteResult& r, const std::string& timestamp) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (r.backend == Backend::exact)
      j["residual"] = c.exact_zero ? "exact-zero" : (c.pass ? "n/a" : "nonzero");
    else
      j["residual"] = c.residual;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  Json obs = Json::object();
  for (const auto& [k, v] : r.observations) obs[k] = v;
  Json out{{"suite", r.suite},
           {"status", r.passes() ? "pass" : "fail"},
           {"backend", backend_name(r.backend)},
           {"seed", r.seed},
           {"tol", r.tol ? Json(*r.tol) : Json(nullptr)},
           {"version", kLibraryVersion},
           {"max_residual", r.max_residual()},
           {"checks", checks},
           {"observations", obs}};
  out["timestamp"] = Json{{"utc", timestamp}, {"wall_seconds", r.wall_seconds}};
  return out;
}

std::string report_markdown(const SuiteResult& r, const std::string& timestamp) {
  std::ostringstream os;
  os << "# verify " << r.suite << ": " << (r.passes() ? "PASS" : "FAIL") << "\n\n";
  os << "- backend: " << backend_name(r.backend) << "\n- seed: " << r.seed << "\n";
  if (r.tol) os << "- tol: " << *r.tol << "\n";
  os << "- version: " << kLibraryVersion << "\n- max residual: " << r.max_residual() << "\n";
  os << "- timestamp: " << timestamp << " (" << r.wall_seconds << " s)\n\n";
  os << "| check | status | residual | detail |\n|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    os << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | ";
    if (r.backend == Backend::exact)
      os << (c.exact_zero ? "exact-zero" : (c.pass ? "n/a" : "nonzero"));
    else
      os << c.residual;
    os << " | " << c.detail << " |\n";
  }
  if (!r.observations.empty()) {
    os << "\n| observation | value |\n|---|---|\n";
    for (const auto& [k, v] : r.observations) os << "| " << k << " | " << v << " |\n";
  }
  return os.str();
}

}  // namespace cubicdisc
