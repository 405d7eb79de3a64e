#include "ckq/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ckq {

PatternMatrix pattern_of(const GroupSpec& spec) {
  spec.validate();
  IndexSet S = spec.nilpotent();
  if (S == 0) throw InvalidSpec("pattern_of: no nilpotent parameter");
  PatternMatrix p(spec.N);
  for (int a = 1; a <= spec.N; ++a)
    for (int b = 1; b <= spec.N; ++b) p.at(a, b) = range_product(spec.sig(a), spec.sig(b), spec.N).support() & S;
  return p;
}

IndexSet contracted_J(const GroupSpec& spec) { return J_of(spec).support() & spec.nilpotent(); }

IndexSet relabel(IndexSet s, int N) {
  IndexSet r = 0;
  for (int k : indices(s)) r = with(r, N - k);
  return r;
}

int PatternTransform::position(int a, int N) const {
  int x = perm.at(a - 1);
  return reflect ? N + 1 - x : x;
}

std::pair<PatternMatrix, IndexSet> transform_pattern(const PatternMatrix& p, IndexSet J, const PatternTransform& t,
                                                     bool relaxed) {
  const int N = p.N;
  if (t.relabel && !t.reflect && !relaxed) throw TransformError("relabeling requires reflection");
  if (static_cast<int>(t.perm.size()) != N) throw TransformError("permutation size differs from N");
  PatternMatrix q(N);
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      int x = t.perm[a - 1], y = t.perm[b - 1];
      IndexSet s = p.at(a, b);
      if (t.relabel) s = relabel(s, N);
      if (t.reflect)
        q.at(N + 1 - y, N + 1 - x) = s;
      else
        q.at(x, y) = s;
    }
  return {q, t.relabel ? relabel(J, N) : J};
}

std::vector<PatternTransform> transform_group(int N, bool relaxed) {
  std::vector<PatternTransform> out;
  auto perm = identity_perm(N);
  do {
    out.push_back({perm, false, false});
    out.push_back({perm, true, false});
    out.push_back({perm, true, true});
    if (relaxed) out.push_back({perm, false, true});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

const std::vector<PatternTransform>& cached_group(int N, bool relaxed) {
  static std::map<std::pair<int, bool>, std::vector<PatternTransform>> cache;
  auto key = std::make_pair(N, relaxed);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, transform_group(N, relaxed)).first;
  return it->second;
}

}  // namespace

ClassKey canonical_key(const PatternMatrix& p, IndexSet J, const KeyOptions& opt) {
  std::optional<ClassKey> best;
  for (const auto& t : cached_group(p.N, opt.relaxed)) {
    auto [q, j] = transform_pattern(p, J, t, opt.relaxed);
    ClassKey k{q.e, opt.shadow ? 0u : j};
    if (!best || k < *best) best = std::move(k);
  }
  return *best;
}

std::string conjugacy_name(Conjugacy c) {
  switch (c) {
    case Conjugacy::Verified: return "verified";
    case Conjugacy::Failed: return "failed";
    case Conjugacy::Unchecked: return "unchecked";
  }
  return "?";
}

namespace {

// t -> 1/t and v -> -v
ExpScalar flip_v(const ExpScalar& x) {
  ExpScalar r(x.nparams());
  for (const auto& [mono, c] : x.terms()) {
    ScalarMonomial m = mono;
    m.m = -m.m;
    r.add_term(m, (mono.p % 2) ? Coefficient(-1) * c : c);
  }
  return r;
}

ScalarMatrix flip_v(const ScalarMatrix& m) { return m.map([](const ExpScalar& x) { return flip_v(x); }); }

}  // namespace

Conjugacy check_conjugacy(const Member& a, const Member& b, int N, const KeyOptions& opt) {
  if (N != 3) return Conjugacy::Unchecked;
  const int np = N - 1;
  auto spec_a = GroupSpec::contracted(N, a.sigma, a.S), spec_b = GroupSpec::contracted(N, b.sigma, b.S);
  auto pa = pattern_of(spec_a), pb = pattern_of(spec_b);
  auto fa = GroupSpec::formal(N, a.sigma), fb = GroupSpec::formal(N, b.sigma);
  ScalarMatrix Ra = r_tilde(fa), Rb = r_tilde(fb);
  ScalarMatrix Ca = c_matrices(fa).ctilde, Cb = c_matrices(fb).ctilde;
  ScalarMatrix Ra_f = flip_v(Ra), Ca_f = flip_v(Ca);

  for (const auto& t : cached_group(N, opt.relaxed)) {
    auto [q, j] = transform_pattern(pb, b.J, t, opt.relaxed);
    if (q != pa || (!opt.shadow && j != a.J)) continue;
    for (unsigned signs = 0; signs < (1u << N); ++signs) {
      ScalarMatrix V(N, N, ExpScalar(np));
      for (int x = 1; x <= N; ++x) V(t.position(x, N), x) = ExpScalar(np, (signs >> (x - 1)) & 1 ? -1 : 1);
      ScalarMatrix Vt = V.transpose();
      ScalarMatrix VV = kron(V, V), VVt = VV.transpose();
      ScalarMatrix R = VV * Rb * VVt;
      ScalarMatrix C = V * Cb * Vt;
      if ((R == Ra && C == Ca) || (R == Ra_f && C == Ca_f)) return Conjugacy::Verified;
    }
  }
  return Conjugacy::Failed;
}

namespace {

struct LabelEntry {
  int N;
  std::vector<int> sigma;
  std::vector<int> S;
  const char* name;
};

// Representatives named in the text; the first hit names a class, later hits are aliases.
const std::vector<LabelEntry>& label_table() {
  static const std::vector<LabelEntry> t = {
      {3, {1, 2, 3}, {1}, "E_v^0(2)"},
      {3, {2, 1, 3}, {1}, "E_z(2)"},
      {3, {1, 2, 3}, {1, 2}, "G_v^0(2)"},
      {3, {2, 1, 3}, {1, 2}, "G_v(2)"},
      {3, {1, 2, 3}, {2}, "N_v^0(2)"},
      {3, {2, 1, 3}, {2}, "N_v(2)"},
      {3, {1, 3, 2}, {1}, "~E_v(2)"},
      {3, {1, 3, 2}, {2}, "~N_z(2)"},
      {3, {1, 3, 2}, {1, 2}, "~G_v(2)"},
      {4, {1, 2, 3, 4}, {1}, "E_v(3)"},
      {4, {1, 2, 3, 4}, {2}, "N_v(3)"},
      {4, {1, 3, 4, 2}, {2}, "N_z(3)"},
      {4, {1, 2, 3, 4}, {1, 2}, "G_v(3)"},
      {4, {1, 3, 4, 2}, {1, 2}, "G_w(3)"},
      {4, {1, 2, 3, 4}, {1, 3}, "SO_v(4; i1, i3; s0)"},
      {4, {1, 2, 3, 4}, {1, 2, 3}, "F_v(4)"},
      {4, {1, 3, 4, 2}, {1, 2, 3}, "F_w(4)"},
      {5, {1, 2, 3, 4, 5}, {1}, "E_v(4)"},
      {5, {2, 4, 1, 5, 3}, {1}, "E_z(4)"},
      {5, {1, 2, 3, 4, 5}, {2}, "N_v(4)"},
      {5, {1, 3, 5, 4, 2}, {2}, "N_z(4)"},
      {5, {1, 2, 3, 4, 5}, {1, 2}, "G_v(4)"},
      {5, {1, 3, 5, 4, 2}, {1, 2}, "G_z(4)"},
      {5, {1, 2, 3, 4, 5}, {1, 2, 3, 4}, "F_v(5)"},
      {5, {1, 2, 5, 3, 4}, {1, 2, 3, 4}, "F_v1(5)"},
      {5, {1, 4, 2, 5, 3}, {1, 2, 3, 4}, "F_v2(5)"},
      {5, {1, 3, 5, 4, 2}, {1, 2, 3, 4}, "F_v3(5)"},
      {5, {1, 4, 3, 5, 2}, {1, 2, 3, 4}, "F_v4(5)"},
  };
  return t;
}

std::string sigma_str(const std::vector<int>& s) {
  std::string r = "(";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + ")";
}

std::string S_str(IndexSet S) {
  std::string r = "{";
  bool first = true;
  for (int k : indices(S)) {
    r += (first ? "" : ",") + std::to_string(k);
    first = false;
  }
  return r + "}";
}

}  // namespace

std::vector<ContractionClass> enumerate_catalog(int N, const CatalogOptions& opt) {
  if (N < 3 || N > 6) throw InvalidSpec("enumerate_catalog: N must lie in 3..6");
  const IndexSet all = ((1u << N) - 1) & ~1u;  // bits 1..N-1
  std::map<std::pair<PatternMatrix, IndexSet>, ClassKey> memo;
  std::map<std::pair<int, ClassKey>, ContractionClass> buckets;

  auto sigma = identity_perm(N);
  do {
    for (IndexSet S = 2; S <= all; S += 2) {
      if (opt.subset && (S & ~*opt.subset)) continue;
      if (opt.exact && S != *opt.exact) continue;
      auto spec = GroupSpec::contracted(N, sigma, S);
      auto p = pattern_of(spec);
      IndexSet J = contracted_J(spec);
      auto mk = std::make_pair(p, J);
      auto it = memo.find(mk);
      if (it == memo.end()) it = memo.emplace(mk, canonical_key(p, J, opt.key)).first;
      const ClassKey& key = it->second;
      auto& c = buckets[{std::popcount(S), key}];
      if (c.members.empty()) {
        c.key = key;
        c.nilpotent_count = std::popcount(S);
      }
      c.members.push_back({sigma, S, J});
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<ContractionClass> out;
  for (auto& [k, c] : buckets) {
    std::sort(c.members.begin(), c.members.end(), [](const Member& x, const Member& y) {
      return std::tie(x.S, x.sigma) < std::tie(y.S, y.sigma);
    });
    for (const auto& e : label_table()) {
      if (e.N != N) continue;
      IndexSet S = index_set(e.S);
      bool hit = std::any_of(c.members.begin(), c.members.end(),
                             [&](const Member& m) { return m.sigma == e.sigma && m.S == S; });
      if (!hit) continue;
      if (c.label.empty()) {
        c.label = e.name;
        auto it = std::find_if(c.members.begin(), c.members.end(),
                               [&](const Member& m) { return m.sigma == e.sigma && m.S == S; });
        c.representative = static_cast<int>(it - c.members.begin());
      } else
        c.aliases.push_back(e.name);
    }
    if (c.label.empty()) {
      const auto& m = c.members.front();
      c.label = "SO(" + std::to_string(N) + "; S=" + S_str(m.S) + "; " + sigma_str(m.sigma) + ")";
    }
    const Member& rep = c.members.at(c.representative);
    c.pattern = pattern_of(GroupSpec::contracted(N, rep.sigma, rep.S));
    c.J = rep.J;
    for (const auto& m : c.members)
      c.conjugacy.push_back(opt.check_conjugacy ? check_conjugacy(rep, m, N, opt.key) : Conjugacy::Unchecked);
    out.push_back(std::move(c));
  }
  return out;
}

std::string monomial_name(IndexSet s) {
  if (s == 0) return "1";
  std::string r;
  for (int k : indices(s)) r += (r.empty() ? "" : " ") + std::string("ι") + std::to_string(k);
  return r;
}

std::string legend_symbol(IndexSet s) {
  switch (s) {
    case 0: return "·";
    case 0b10: return "∘";
    case 0b100: return "•";
    case 0b110: return "×";
    case 0b1000: return "△";
    case 0b1010: return "★";
    case 0b1100: return "⋄";
    case 0b1110: return "⊗";
    default: break;
  }
  std::string r = "[";
  for (int k : indices(s)) r += std::to_string(k);
  return r + "]";
}

std::vector<std::string> pattern_rows(const PatternMatrix& p) {
  std::vector<std::string> rows;
  for (int a = 1; a <= p.N; ++a) {
    std::string r;
    for (int b = 1; b <= p.N; ++b) r += (b > 1 ? " " : "") + legend_symbol(p.at(a, b));
    rows.push_back(r);
  }
  return rows;
}

namespace {

const char* kLegend = "· = 1, ∘ = ι1, • = ι2, × = ι1ι2, △ = ι3, ★ = ι1ι3, ⋄ = ι2ι3, ⊗ = ι1ι2ι3, [klm] = ιkιlιm";

std::string mode_name(const CatalogOptions& opt) { return opt.key.shadow ? "classical" : "quantum"; }

}  // namespace

std::string catalog_json(int N, const std::vector<ContractionClass>& classes, const CatalogOptions& opt) {
  nlohmann::ordered_json j;
  j["N"] = N;
  j["mode"] = mode_name(opt);
  if (opt.subset) j["subset"] = indices(*opt.subset);
  if (opt.exact) j["nilpotent"] = indices(*opt.exact);
  j["classes"] = classes.size();
  j["legend"] = kLegend;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : classes) {
    nlohmann::ordered_json e;
    e["label"] = c.label;
    if (!c.aliases.empty()) e["aliases"] = c.aliases;
    e["nilpotent_count"] = c.nilpotent_count;
    e["pattern"] = pattern_rows(c.pattern);
    if (!opt.key.shadow) e["J"] = monomial_name(c.J);
    std::vector<std::string> key;
    for (IndexSet s : c.key.pattern) key.push_back(std::to_string(s));
    e["key"] = key;
    auto ms = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      const auto& m = c.members[i];
      nlohmann::ordered_json mj;
      mj["sigma"] = m.sigma;
      mj["S"] = indices(m.S);
      mj["J"] = monomial_name(m.J);
      mj["conjugacy"] = conjugacy_name(c.conjugacy.at(i));
      ms.push_back(mj);
    }
    e["members"] = ms;
    arr.push_back(e);
  }
  j["catalog"] = arr;
  return j.dump(2);
}

std::string catalog_text(int N, const std::vector<ContractionClass>& classes, const CatalogOptions& opt) {
  std::ostringstream os;
  os << "N = " << N << ", " << mode_name(opt) << ": " << classes.size() << " classes\n";
  os << "legend: " << kLegend << "\n";
  for (const auto& c : classes) {
    os << "\n" << c.label;
    for (const auto& a : c.aliases) os << " = " << a;
    if (!opt.key.shadow) os << "   J = " << monomial_name(c.J);
    os << "   (" << c.members.size() << " members)\n";
    for (int a = 1; a <= N; ++a) {
      os << "  ";
      for (int b = 1; b <= N; ++b) os << (b > 1 ? " " : "") << (b < a ? " " : legend_symbol(c.pattern.at(a, b)));
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace ckq
