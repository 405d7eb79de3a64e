#include "ckq/verify.hpp"

namespace ckq {

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

VerifyReport verify_spec(const GroupSpec& spec, const VerifyOptions& opt) {
  spec.validate();
  const int N = spec.N, np = spec.nparams();
  VerifyReport rep;

  auto [d, dinv] = d_matrix(N);
  NumMatrix c0(N, N);
  for (int i = 1; i <= N; ++i) c0(i, N + 1 - i) = 1;
  rep.checks.push_back({"Dt C0 D = I", d.transpose() * c0 * d == identity_num(N), ""});

  GroupSpec formal = GroupSpec::formal(N, spec.sigma);
  if (N >= 3) {
    ScalarMatrix rt = r_tilde(formal);
    Point classical{1, 0, std::vector<Rational>(np, 1)};
    rep.checks.push_back({"R-tilde at v = 0 is I", evaluate(rt, classical) == identity_num(N * N), ""});
    rep.checks.push_back({"R-tilde equals conjugated symplectic R", rt == r_tilde_conjugated(formal), ""});
    if (opt.perturb_rtilde) rt(opt.perturb_rtilde->first, opt.perturb_rtilde->second) += ExpScalar::t(np, 2);
    if (N <= 4) {
      auto y = check_yang_baxter(rt, N, random_points(opt.seed, opt.points, np));
      rep.checks.push_back({"Yang-Baxter", y.ok, y.detail});
    }
  }

  for (auto& c : verify_hopf_axioms(formal).checks) {
    c.name = "formal: " + c.name;
    rep.checks.push_back(std::move(c));
  }

  if (spec.nilpotent() != 0) {
    auto g = contract_group(spec);
    AxiomCheck adm{"contracted: Hopf data admissible", g.antipode_failures.empty(), ""};
    if (!adm.ok) adm.detail = g.antipode_failures.front();
    rep.checks.push_back(adm);
    int orth_bad = 0;
    for (const auto& v : g.orth) orth_bad += v.kind == Verdict::Inadmissible;
    rep.checks.push_back({"contracted: orthogonality admissible", orth_bad == 0, ""});
    auto co = check_coassociativity(g.coproduct_raw, np);
    co.name = "contracted: " + co.name;
    rep.checks.push_back(co);
    auto cu = check_counit(g.coproduct_raw, counit(spec), np);
    cu.name = "contracted: " + cu.name;
    rep.checks.push_back(cu);
    if (N == 3) {
      rep.checks.push_back({"contracted: inadmissible RUU entries resolved", g.unresolved() == 0,
                            std::to_string(g.unresolved()) + " unresolved"});
      auto a = check_contracted_antipode(g, random_points(opt.seed, opt.points, np));
      a.name = "contracted: " + a.name;
      rep.checks.push_back(a);
    }
  }
  return rep;
}

}  // namespace ckq
