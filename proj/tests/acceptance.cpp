// One line per acceptance criterion; exit status 0 only when all eleven pass.
#include <cstdio>
#include <set>
#include <regex>
#include <string>
#include <vector>

#include "cubicdisc/suites.hpp"

namespace {

using cubicdisc::Backend;
using cubicdisc::CheckResult;
using cubicdisc::SuiteResult;

constexpr std::uint64_t kSeed = 7;
constexpr double kFloatTolerance = 1e-9;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> patterns;  // each must match at least one check of the combined run
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "seven Upsilon identities", {R"(irrep/upsilon_lemma_[1-7])", R"(irrep/upsilon_match_tabulated)"}},
      {2, "discriminant substitution, 35 coefficients; repeated-root cubic",
       {R"(irrep/discriminant_substitution)", R"(irrep/discriminant_repeated_root)",
        R"(irrep/s_hat_matches_tabulated_quartic)"}},
      {3, "dagger Id, dagger P, T_K spectrum, dagger L = 2L both directions",
       {R"(preliminaries/dagger_identity_is_minus_6)", R"(irrep/projection_dagger)", R"(irrep/t_k_eigen_.*)",
        R"(preliminaries/dagger_eq_2l_.*)", R"(preliminaries/k_from_l_recovers_k)",
        R"(preliminaries/l_from_k_recovers_l)", R"(preliminaries/dagger_two_eigenspace_dim)"}},
      {4, "orbit membership of S-hat, 20 transports, 20 perturbations, predicate agreement",
       {R"(orbit/s_hat_.*)", R"(orbit/cayley_.*)", R"(orbit/perturbations_rejected)", R"(orbit/predicates_agree)"}},
      {5, "stabilizer dimension 3 spanning Upsilon; orbit dimension 7",
       {R"(orbit/stabilizer_.*)", R"(orbit/orbit_dimension_sp2_sp1)"}},
      {6, "tangent-space formula for both eigentypes; contraction identities",
       {R"(orbit/tangent_sp1ir_.*)", R"(orbit/tangent_complement_.*)", R"(orbit/contraction_identity_[12])"}},
      {7, "frames E_s and k_from_frames", {R"(irrep/frames_.*)", R"(irrep/k_from_frames_is_kappa_s_hat)"}},
      {8, "model spaces: Jacobi, closure, curvature identity, traceless R', Einstein",
       {R"(models/(compact|split)_jacobi)", R"(models/(compact|split)_jacobi_triples)",
        R"(models/family_h_.*_d_squared)", R"(models/(compact|split)_curvature_identity)",
        R"(models/(compact|split)_r_prime_ricci_traceless)", R"(models/(compact|split)_einstein)"}},
      {9, "first Bianchi system: one-dimensional nullspace and coefficient relations",
       {R"(bianchi/nullity)", R"(bianchi/f2_is_h_pi)", R"(bianchi/d_is_minus_2h_3_upsilon_pi)",
        R"(bianchi/c_vanishes)", R"(bianchi/f1_vanishes)", R"(bianchi/g2_g3_vanish)"}},
      {10, "torsion carrier decomposes as 20 + 16 + 12 + 8", {R"(irrep/casimir_torsion_56)"}},
  };
  return list;
}

std::vector<const CheckResult*> matching(const SuiteResult& r, const std::string& pattern) {
  const std::regex re(pattern);
  std::vector<const CheckResult*> out;
  for (const auto& c : r.checks)
    if (std::regex_match(c.name, re)) out.push_back(&c);
  return out;
}

void report(int number, bool pass, const std::string& title, const std::string& detail) {
  std::printf("criterion %2d: %s  %s [%s]\n", number, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const SuiteResult exact = cubicdisc::run_suite("all", Backend::exact, kSeed, std::nullopt);
  const SuiteResult fl = cubicdisc::run_suite("all", Backend::float_, kSeed, kFloatTolerance);
  bool all = true;

  for (const auto& crit : criteria()) {
    bool pass = true;
    std::size_t count = 0;
    std::string why;
    for (const auto& p : crit.patterns) {
      const auto hits = matching(exact, p);
      if (hits.empty()) {
        pass = false;
        why += " no check matches " + p + ";";
      }
      for (const auto* c : hits) {
        ++count;
        if (!c->pass || (c->measured && !c->exact_zero)) {
          pass = false;
          why += " " + c->name + ": " + (c->detail.empty() ? "nonzero" : c->detail) + ";";
        }
      }
    }
    report(crit.number, pass, crit.title, std::to_string(count) + " checks exact" + why);
    all = all && pass;
  }

  std::set<std::string> exact_zero;
  for (const auto& c : exact.checks)
    if (c.measured && c.exact_zero) exact_zero.insert(c.name);

  bool shadow = fl.passes();
  std::string why;
  double worst = 0;
  std::size_t compared = 0;
  for (const auto& name : exact_zero) {
    const auto hits = matching(fl, std::regex_replace(name, std::regex(R"([.*+?()\[\]|^$\\])"), R"(\$&)"));
    if (hits.size() != 1) {
      shadow = false;
      why += " missing " + name + ";";
      continue;
    }
    ++compared;
    worst = std::max(worst, hits[0]->residual);
    if (!(hits[0]->residual < kFloatTolerance) || !hits[0]->pass) {
      shadow = false;
      why += " " + name + " residual " + std::to_string(hits[0]->residual) + ";";
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu residuals compared, max relative %.3g", compared, worst);
  report(11, shadow, "float backend shadow, relative residual < 1e-9", buf + why);
  all = all && shadow;
  return all ? 0 : 1;
}
