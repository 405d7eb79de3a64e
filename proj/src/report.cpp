#include "ckq/report.hpp"

#include <json.hpp>
#include <sstream>

namespace ckq {

using nlohmann::ordered_json;

namespace {

std::string sigma_text(const std::vector<int>& s) {
  std::string r = "(";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + ")";
}

std::string heading(const GroupSpec& g) {
  std::string r = "SO_v(" + std::to_string(g.N) + "; ";
  for (std::size_t i = 0; i < g.j.values.size(); ++i) r += (i ? ", " : "") + param_name(g.j.values[i]);
  return r + "; " + sigma_text(g.sigma) + ")";
}

std::vector<std::string> rho_strings(int N) {
  std::vector<std::string> r;
  for (const auto& x : rho(N)) r.push_back(x.get_str());
  return r;
}

}  // namespace

std::string class_name(const GroupSpec& g) {
  if (g.nilpotent() == 0 || g.N < 3 || g.N > 6) return "";
  CatalogOptions o;
  o.exact = g.nilpotent();
  o.check_conjugacy = false;
  for (const auto& c : enumerate_catalog(g.N, o))
    for (const auto& m : c.members)
      if (m.sigma == g.sigma) return c.label;
  return "";
}

std::string describe_json(const GroupSpec& g) {
  g.validate();
  PolyMatrix U = generating_matrix(g);
  ordered_json j = ordered_json::parse(spec_to_json(g));
  j["rho"] = rho_strings(g.N);
  j["J"] = J_of(g).str();
  if (g.nilpotent() != 0) j["J_contracted"] = monomial_name(contracted_J(g));
  auto rows = ordered_json::array();
  for (int a = 1; a <= g.N; ++a) {
    std::vector<std::string> row;
    for (int b = 1; b <= g.N; ++b) row.push_back(U(a, b).str());
    rows.push_back(row);
  }
  j["generating_matrix"] = rows;
  if (g.nilpotent() != 0) j["pattern"] = pattern_rows(pattern_of(g));
  return j.dump(2);
}

std::string describe_text(const GroupSpec& g) {
  g.validate();
  PolyMatrix U = generating_matrix(g);
  auto rs = rho_strings(g.N);
  std::ostringstream os;
  os << heading(g) << "\nrho = (";
  for (std::size_t i = 0; i < rs.size(); ++i) os << (i ? ", " : "") << rs[i];
  os << ")\nJ = " << J_of(g).str() << "\n";
  if (g.nilpotent() != 0) os << "J after contraction = " << monomial_name(contracted_J(g)) << "\n";
  os << "U =\n";
  std::vector<std::size_t> width(g.N, 0);
  for (int a = 1; a <= g.N; ++a)
    for (int b = 1; b <= g.N; ++b) width[b - 1] = std::max(width[b - 1], U(a, b).str().size());
  for (int a = 1; a <= g.N; ++a) {
    os << "  ";
    for (int b = 1; b <= g.N; ++b) {
      std::string e = U(a, b).str();
      os << e << std::string(width[b - 1] - e.size() + 2, ' ');
    }
    os << "\n";
  }
  if (g.nilpotent() != 0) {
    os << "pattern =\n";
    for (const auto& r : pattern_rows(pattern_of(g))) os << "  " << r << "\n";
  }
  return os.str();
}

std::string verify_json(const GroupSpec& g, const VerifyOptions& opt, const VerifyReport& rep) {
  ordered_json j;
  j["spec"] = ordered_json::parse(spec_to_json(g));
  j["seed"] = opt.seed;
  j["points"] = opt.points;
  auto arr = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json e = {{"check", c.name}, {"ok", c.ok}};
    if (!c.ok && !c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["result"] = rep.ok() ? "PASS" : "FAIL";
  return j.dump(2);
}

std::string verify_text(const VerifyReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.ok && !c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (rep.ok() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks)\n";
  return os.str();
}

ContractReport contract_report(const GroupSpec& spec, const ContractOptions& opt) {
  ContractReport r{contract_group(spec, opt), class_name(spec), {}, true};
  const auto& c = r.group;
  const int np = spec.nparams();
  r.checks.push_back(check_coassociativity(c.coproduct_raw, np));
  r.checks.push_back(check_counit(c.coproduct_raw, counit(spec), np));
  if (spec.N == 3) r.checks.push_back(check_contracted_antipode(c, random_points(opt.seed, opt.points, np)));
  int orth_bad = 0;
  for (const auto& v : c.orth) orth_bad += v.kind == Verdict::Inadmissible;
  r.checks.push_back({"orthogonality admissible", orth_bad == 0, orth_bad ? std::to_string(orth_bad) + " inadmissible" : ""});
  r.ok = c.antipode_failures.empty() && c.unresolved() == 0;
  for (const auto& x : r.checks) r.ok = r.ok && x.ok;
  return r;
}

std::string contract_json(const ContractReport& r) {
  ordered_json body = ordered_json::parse(contracted_json(r.group));
  ordered_json j;
  j["name"] = r.name;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  auto arr = ordered_json::array();
  for (const auto& x : r.checks) {
    ordered_json e = {{"check", x.name}, {"ok", x.ok}};
    if (!x.ok && !x.detail.empty()) e["detail"] = x.detail;
    arr.push_back(e);
  }
  j["hopf_checks"] = arr;
  j["result"] = r.ok ? "PASS" : "FAIL";
  return j.dump(2);
}

std::string contract_text(const ContractReport& r) {
  const auto& c = r.group;
  std::ostringstream os;
  os << (r.name.empty() ? "contracted group" : r.name) << " = " << heading(c.spec) << "\n";
  os << "J = " << c.J_contracted.str() << "\n";
  os << "verdicts: " << c.count(Verdict::Admissible) << " admissible, " << c.count(Verdict::Trivial) << " trivial, "
     << c.count(Verdict::Inadmissible) << " inadmissible (" << c.unresolved() << " unresolved)\n";
  if (!c.elimination_order.empty()) {
    os << "eliminations:\n";
    for (Gen h : c.elimination_order) os << "  " << gen_str(h) << " = " << c.eliminations.at(h).str() << "\n";
  }
  os << "relations:\n";
  for (const auto& x : c.relations) os << "  " << x.str() << " = 0\n";
  os << "antipode:\n";
  for (const auto& [h, p] : c.antipode) os << "  S(" << gen_str(h) << ") = " << p.str() << "\n";
  for (const auto& f : c.antipode_failures) os << "  ill-defined: " << f << "\n";
  os << "coproduct:\n";
  for (const auto& [h, t] : c.coproduct) os << "  D(" << gen_str(h) << ") = " << t.str() << "\n";
  for (const auto& x : r.checks) os << (x.ok ? "PASS " : "FAIL ") << x.name << "\n";
  os << (r.ok ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace ckq
