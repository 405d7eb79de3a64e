#include "ckq/contraction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ckq {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Admissible: return "admissible";
    case Verdict::Trivial: return "trivial";
    case Verdict::Inadmissible: return "inadmissible";
  }
  return "?";
}

ExpScalar substituted_J(const ParamMonomial& J, const CKAssignment& a) {
  return substitute_values(ExpScalar::param(J), a);
}

int series_order(const NCPoly& r) {
  std::map<std::tuple<Word, ParamMonomial, int>, std::set<int>> groups;
  for (const auto& [w, c] : r.terms())
    for (const auto& [mono, coef] : c.terms()) groups[{w, mono.beta, mono.p}].insert(mono.m);
  std::size_t widest = 1;
  for (const auto& [key, ms] : groups) widest = std::max(widest, ms.size());
  return std::max<int>(1, static_cast<int>(widest) - 1);
}

namespace {

NCPoly substitute(const NCPoly& r, const CKAssignment& a) {
  return r.map_coefficients([&a](const ExpScalar& x) { return substitute_values(x, a); });
}

bool expands(const GroupSpec& spec, const ParamMonomial& J) { return (J.support() & spec.nilpotent()) != 0; }

std::vector<ScalarMonomial> monomials(const NCPoly& r) {
  std::vector<ScalarMonomial> out;
  for (const auto& [w, c] : r.terms())
    for (const auto& [mono, coef] : c.terms()) out.push_back(mono);
  return out;
}

NCPoly principal(const NCPoly& r, IndexSet S) {
  return r.map_coefficients([S](const ExpScalar& x) { return principal_part(x, S); });
}

}  // namespace

NCPoly specialize(const NCPoly& r, const GroupSpec& spec, const ParamMonomial& J) {
  NCPoly x = substitute(r, spec.j);
  if (x.is_zero() || !expands(spec, J)) return x;
  ExpScalar Js = substituted_J(J, spec.j);
  int order = series_order(x);
  return x.map_coefficients([&](const ExpScalar& c) { return expand_exponentials(c, Js, order); });
}

RelationVerdict contract_relation(const NCPoly& r, const GroupSpec& spec, const ParamMonomial& J) {
  RelationVerdict out;
  IndexSet S = spec.nilpotent();
  NCPoly x = specialize(r, spec, J);
  if (x.is_zero()) return out;
  ParamMonomial d = common_param_divisor(monomials(x), S);
  x = x.map_coefficients([&](const ExpScalar& c) { return divide_param(c, d, S); });
  NCPoly pp = principal(x, S);
  if (pp.is_zero()) {
    out.kind = Verdict::Inadmissible;
    out.witness = x;
  } else {
    out.kind = Verdict::Admissible;
    out.contracted = pp;
  }
  return out;
}

RelationVerdict contract_relation(const NCPoly& r, const GroupSpec& spec) {
  return contract_relation(r, spec, J_of(spec));
}

std::vector<std::pair<ParamMonomial, NCPoly>> leading_components(const NCPoly& x, IndexSet S) {
  IndexSet all = 0;
  for (int k = 1; k <= kMaxParams; ++k) all = with(all, k);
  std::map<ParamMonomial, NCPoly> parts;
  for (const auto& [w, c] : x.terms())
    for (const auto& [mono, coef] : c.terms()) {
      ScalarMonomial rest = mono;
      rest.beta = mono.beta.restrict(all & ~S);
      ExpScalar e(c.nparams());
      e.add_term(rest, coef);
      parts[mono.beta.restrict(S)] += NCPoly::word(w, e);
    }
  std::vector<std::pair<ParamMonomial, NCPoly>> out;
  for (const auto& [m, p] : parts) {
    bool minimal = true;
    for (const auto& [o, q] : parts)
      if (o != m && m.divisible_by(o)) minimal = false;
    if (minimal && !p.is_zero()) out.emplace_back(m, p);
  }
  return out;
}

int ContractedGroup::count(Verdict v) const {
  int c = 0;
  for (const auto& r : ruu) c += r.kind == v;
  for (const auto& r : orth) c += r.kind == v;
  return c;
}

int ContractedGroup::unresolved() const {
  int c = 0;
  for (const auto* list : {&ruu, &orth})
    for (const auto& r : *list) c += r.kind == Verdict::Inadmissible && !r.resolved;
  return c;
}

std::vector<Gen> ContractedGroup::surviving_generators() const {
  std::vector<Gen> out;
  for (int a = 1; a <= spec.N; ++a)
    for (int b = 1; b <= spec.N; ++b)
      if (!eliminations.count(gen(a, b))) out.push_back(gen(a, b));
  return out;
}

namespace {

// Divide by the substituted range product of the position; Laurent on formal j.
NCPoly contract_antipode_entry(const NCPoly& entry, const GroupSpec& spec, const ParamMonomial& J,
                               const ParamMonomial& pos) {
  IndexSet S = spec.nilpotent();
  NCPoly x = specialize(entry, spec, J);
  ExpScalar den = substitute_values(ExpScalar::param(pos), spec.j);
  const auto& [mono, coef] = *den.terms().begin();
  Coefficient inv = coef.inverse();
  x = x.map_coefficients([&](const ExpScalar& c) { return divide_param(inv * c, mono.beta, S); });
  return principal(x, S);
}

Tensor tensor_eliminate(const Tensor& t, const GenMap& elim) {
  Tensor r = t;
  for (int slot = 0; slot < t.arity(); ++slot)
    r = r.map_factor(slot, [&](const Word& w) {
      int np = t.terms().empty() ? 0 : t.terms().begin()->second.nparams();
      return Tensor::pure({substitute_generators(NCPoly::word(w, ExpScalar(np, 1)), elim)});
    });
  return r;
}

// Matrix position (row, col) of generator u_{ab}: a = s_row, b = s_col.
std::pair<int, int> position(const GroupSpec& spec, Gen g) {
  return {sigma_inverse(spec, gen_row(g)), sigma_inverse(spec, gen_col(g))};
}

bool lower(const GroupSpec& spec, Gen g) {
  auto [r, c] = position(spec, g);
  return r > c;
}

bool single_letter(const Word& w) { return w.size() == 1; }

struct Rule {
  Gen g;
  NCPoly image;
};

std::optional<Rule> square_rule(const NCPoly& r, int np) {
  if (r.size() != 2) return std::nullopt;
  auto it = r.terms().begin();
  const auto& [w0, c0] = *it++;
  const auto& [w1, c1] = *it;
  if (!w0.empty() || w1.size() != 2 || w1[0] != w1[1]) return std::nullopt;
  Gen g = w1[0];
  if (gen_row(g) != gen_col(g) || !(c0 == -c1)) return std::nullopt;
  return Rule{g, NCPoly(ExpScalar(np, 1))};
}

std::optional<Rule> antisymmetry_rule(const NCPoly& r, const GroupSpec& spec) {
  if (r.size() != 2) return std::nullopt;
  auto it = r.terms().begin();
  const auto& [w0, c0] = *it++;
  const auto& [w1, c1] = *it;
  if (!single_letter(w0) || !single_letter(w1) || !(c0 == c1)) return std::nullopt;
  Gen a = w0[0], b = w1[0];
  if (gen_row(a) != gen_col(b) || gen_col(a) != gen_row(b)) return std::nullopt;
  if (lower(spec, b)) std::swap(a, b);
  if (!lower(spec, a)) return std::nullopt;
  return Rule{a, NCPoly::generator(b, ExpScalar(c0.nparams(), -1))};
}

std::optional<Rule> mixed_rule(const NCPoly& r, const GroupSpec& spec) {
  std::vector<Gen> cands;
  for (const auto& [w, c] : r.terms())
    if (single_letter(w) && c.is_constant() && lower(spec, w[0])) cands.push_back(w[0]);
  std::sort(cands.begin(), cands.end(), [&](Gen x, Gen y) { return position(spec, x) < position(spec, y); });
  for (Gen g : cands) {
    int uses = 0;
    for (const auto& [w, c] : r.terms()) uses += static_cast<int>(std::count(w.begin(), w.end(), g));
    if (uses != 1) continue;
    ExpScalar c = r.coeff({g});
    ExpScalar inv(c.nparams(), -c.constant_term().inverse());
    NCPoly rest = r - NCPoly::generator(g, c);
    return Rule{g, inv * rest};
  }
  return std::nullopt;
}

}  // namespace

void eliminate_generators(ContractedGroup& g) {
  const GroupSpec& spec = g.spec;
  int np = spec.nparams();
  GenMap elim;
  std::vector<Gen> order;
  auto try_rules = [&](auto&& rule) -> bool {
    for (const auto& v : g.orth) {
      if (v.kind != Verdict::Admissible) continue;
      NCPoly r = substitute_generators(v.contracted, elim);
      if (r.is_zero()) continue;
      if (auto found = rule(r)) {
        GenMap step{{found->g, found->image}};
        for (auto& [h, img] : elim) img = substitute_generators(img, step);
        elim[found->g] = found->image;
        order.push_back(found->g);
        return true;
      }
    }
    return false;
  };
  for (;;) {
    if (try_rules([&](const NCPoly& r) { return square_rule(r, np); })) continue;
    if (try_rules([&](const NCPoly& r) { return antisymmetry_rule(r, spec); })) continue;
    if (try_rules([&](const NCPoly& r) { return mixed_rule(r, spec); })) continue;
    break;
  }
  if (elim.empty()) throw NonLinearConstraint("no linear orthogonality constraint to eliminate");
  g.eliminations = elim;
  g.elimination_order = order;
}

namespace {

// Keep relations that raise the rank at a fixed evaluation point.
std::vector<NCPoly> independent(const std::vector<NCPoly>& rs, int np) {
  std::vector<Point> pts = random_points(0x5eed, 2, np);
  std::vector<NCPoly> out;
  EchelonBasis basis;
  for (const auto& r : rs) {
    if (r.is_zero()) continue;
    auto v = evaluate(r, pts[0]);
    EchelonBasis::Vec vec(v.begin(), v.end());
    if (basis.insert(vec)) out.push_back(r);
  }
  return out;
}

void apply_eliminations(ContractedGroup& g) {
  int np = g.spec.nparams();
  std::vector<NCPoly> rel, cons;
  for (const auto& v : g.ruu)
    if (v.kind == Verdict::Admissible) rel.push_back(substitute_generators(v.contracted, g.eliminations));
  for (const auto& v : g.orth)
    if (v.kind == Verdict::Admissible) cons.push_back(substitute_generators(v.contracted, g.eliminations));
  g.relations = independent(rel, np);
  g.constraints = independent(cons, np);
  if (g.eliminations.empty()) return;
  GenPolyMap s;
  GenTensorMap d;
  for (Gen h : g.surviving_generators()) {
    if (g.antipode.count(h)) s[h] = substitute_generators(g.antipode.at(h), g.eliminations);
    d[h] = tensor_eliminate(g.coproduct.at(h), g.eliminations);
  }
  g.antipode = s;
  g.coproduct = d;
  std::map<Gen, int> e;
  for (Gen h : g.surviving_generators()) e[h] = g.counit.at(h);
  g.counit = e;
}

}  // namespace

namespace {

void words_upto(const std::vector<Gen>& alphabet, int len, std::vector<Word>& out) {
  out = {Word{}};
  std::vector<Word> layer = {Word{}};
  for (int l = 1; l <= len; ++l) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Gen g : alphabet) {
        Word x = w;
        x.push_back(g);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
}

}  // namespace

bool in_ideal_span(const NCPoly& p, const std::vector<NCPoly>& pool, const std::vector<Gen>& alphabet, int depth,
                   const std::vector<Point>& points) {
  if (p.is_zero()) return true;
  int np = p.nparams();
  std::vector<Word> words;
  words_upto(alphabet, depth, words);
  ExpScalar one(np, 1);
  std::vector<NCPoly> cands;
  for (const auto& r : pool)
    for (const auto& w : words)
      for (const auto& w2 : words)
        if (static_cast<int>(w.size() + w2.size()) <= depth)
          cands.push_back(NCPoly::word(w, one) * r * NCPoly::word(w2, one));
  return span_membership(cands, p, points);
}

void resolve_inadmissible(ContractedGroup& g, const std::vector<Point>& points) {
  IndexSet S = g.spec.nilpotent();
  std::vector<NCPoly> pool = g.relations;
  pool.insert(pool.end(), g.constraints.begin(), g.constraints.end());
  std::vector<Gen> alphabet = g.surviving_generators();
  for (auto& v : g.ruu) {
    if (v.kind != Verdict::Inadmissible) continue;
    std::vector<NCPoly> survivors;
    for (const auto& [m, part] : leading_components(v.witness, S)) {
      NCPoly x = substitute_generators(part, g.eliminations);
      if (!in_ideal_span(x, pool, alphabet, 2, points)) survivors.push_back(x);
    }
    if (survivors.size() > 1) continue;
    v.resolved = true;
    if (!survivors.empty()) v.resolution = survivors.front();
  }
  std::vector<NCPoly> rel = g.relations;
  for (const auto& v : g.ruu)
    if (v.resolved && !v.resolution.is_zero()) rel.push_back(v.resolution);
  g.relations = independent(rel, g.spec.nparams());
}

ContractedGroup contract_group(const GroupSpec& spec, const ContractOptions& opt) {
  spec.validate();
  IndexSet S = spec.nilpotent();
  if (S == 0) throw InvalidSpec("contraction needs at least one nilpotent parameter");
  ContractedGroup g;
  g.spec = spec;
  g.J = opt.J_override ? *opt.J_override : J_of(spec);
  g.J_contracted = principal_part(substituted_J(g.J, spec.j), 0);

  for (const auto& r : ruu_relations(spec)) {
    RelationVerdict v = contract_relation(r.poly, spec, g.J);
    v.tag = r.tag;
    g.ruu.push_back(std::move(v));
  }
  auto [o1, o2] = orthogonality_relations(spec);
  for (const auto* set : {&o1, &o2})
    for (const auto& r : *set) {
      RelationVerdict v = contract_relation(r.poly, spec, g.J);
      v.tag = r.tag;
      g.orth.push_back(std::move(v));
    }

  PolyMatrix sm = antipode_matrix(spec);
  for (int a = 1; a <= spec.N; ++a)
    for (int b = 1; b <= spec.N; ++b) {
      Gen h = gen(spec.sig(a), spec.sig(b));
      try {
        g.antipode[h] = contract_antipode_entry(sm(a, b), spec, g.J, range_product(spec.sig(a), spec.sig(b), spec.N));
      } catch (const NonDivisible&) {
        g.antipode_failures.push_back("S(" + gen_str(h) + ")");
      }
    }

  for (const auto& [h, t] : coproduct_map(spec))
    g.coproduct[h] = t.map_coefficients(
        [&](const ExpScalar& x) { return principal_part(substitute_values(x, spec.j), S); });
  g.counit = counit(spec);

  g.antipode_raw = g.antipode;
  g.coproduct_raw = g.coproduct;

  if (opt.eliminate && spec.N == 3) {
    try {
      eliminate_generators(g);
    } catch (const NonLinearConstraint&) {
    }
  }
  apply_eliminations(g);
  if (opt.resolve && !g.eliminations.empty() && g.count(Verdict::Inadmissible) > 0)
    resolve_inadmissible(g, random_points(opt.seed, opt.points, spec.nparams()));

  if (opt.strict) {
    std::string bad;
    for (const auto* list : {&g.ruu, &g.orth})
      for (const auto& v : *list)
        if (v.kind == Verdict::Inadmissible && !v.resolved) bad += (bad.empty() ? "" : ", ") + v.tag;
    for (const auto& f : g.antipode_failures) bad += (bad.empty() ? "" : ", ") + f;
    if (!bad.empty()) throw AdmissibilityFailure("inadmissible: " + bad);
  }
  return g;
}

AxiomCheck check_contracted_antipode(const ContractedGroup& g, const std::vector<Point>& points) {
  AxiomCheck c{"contracted antipode", true, ""};
  if (!g.antipode_failures.empty()) {
    c.ok = false;
    c.detail = "ill-defined " + g.antipode_failures.front();
    return c;
  }
  std::vector<NCPoly> orth;
  for (const auto& v : g.orth)
    if (v.kind == Verdict::Admissible) orth.push_back(v.contracted);
  int np = g.spec.nparams();
  for (const auto& [h, res] : antipode_residuals(g.coproduct_raw, g.antipode_raw, counit(g.spec), np))
    if (!span_membership(orth, res, points)) {
      c.ok = false;
      c.detail = "residual of " + gen_str(h) + " outside the orthogonality span";
      return c;
    }
  return c;
}

std::string contracted_json(const ContractedGroup& g) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["spec"] = ordered_json::parse(spec_to_json(g.spec));
  j["J"] = g.J.str();
  j["J_contracted"] = g.J_contracted.str();
  ordered_json counts;
  for (Verdict v : {Verdict::Admissible, Verdict::Trivial, Verdict::Inadmissible}) counts[verdict_name(v)] = g.count(v);
  counts["unresolved"] = g.unresolved();
  j["verdicts"] = counts;
  ordered_json inad = ordered_json::array();
  for (const auto* list : {&g.ruu, &g.orth})
    for (const auto& v : *list)
      if (v.kind == Verdict::Inadmissible) {
        ordered_json e = {{"tag", v.tag}, {"resolved", v.resolved}};
        if (v.resolved) e["resolution"] = v.resolution.str();
        else e["witness"] = v.witness.str();
        inad.push_back(e);
      }
  j["inadmissible"] = inad;
  ordered_json elim = ordered_json::array();
  for (Gen h : g.elimination_order) elim.push_back({{"generator", gen_str(h)}, {"image", g.eliminations.at(h).str()}});
  j["eliminations"] = elim;
  ordered_json rel = ordered_json::array();
  for (const auto& r : g.relations) rel.push_back(r.str());
  j["relations"] = rel;
  ordered_json cons = ordered_json::array();
  for (const auto& r : g.constraints) cons.push_back(r.str());
  j["constraints"] = cons;
  ordered_json s = ordered_json::object();
  for (const auto& [h, p] : g.antipode) s[gen_str(h)] = p.str();
  j["antipode"] = s;
  ordered_json fail = ordered_json::array();
  for (const auto& f : g.antipode_failures) fail.push_back(f);
  j["antipode_failures"] = fail;
  ordered_json d = ordered_json::object();
  for (const auto& [h, t] : g.coproduct) d[gen_str(h)] = t.str();
  j["coproduct"] = d;
  return j.dump(2);
}

}  // namespace ckq
