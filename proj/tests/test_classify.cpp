#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "diagram_tables.hpp"

using namespace ckq;
using namespace ref;

namespace {

std::set<std::pair<ClassKey, IndexSet>> keyset(const std::vector<ContractionClass>& cs) {
  std::set<std::pair<ClassKey, IndexSet>> s;
  for (const auto& c : cs) s.insert({c.key, c.J});
  return s;
}

GroupSpec spec(std::vector<int> sigma, std::vector<int> S) {
  const int N = static_cast<int>(sigma.size());
  return GroupSpec::contracted(N, std::move(sigma), index_set(S));
}

}  // namespace

TEST_CASE("pattern of a spec") {
  auto p = pattern_of(spec({1, 2, 3}, {1}));
  CHECK(pattern_rows(p)[0] == "· ∘ ∘");
  CHECK(pattern_rows(p)[1] == "∘ · ·");
  auto g = pattern_of(spec({2, 1, 3}, {1, 2}));
  CHECK(pattern_rows(g)[0] == "· ∘ •");
  CHECK(g.at(2, 3) == 0b110);
  auto f = pattern_of(spec({1, 2, 3, 4}, {1, 2, 3}));
  CHECK(f.at(1, 4) == 0b1110);
  CHECK(legend_symbol(f.at(1, 4)) == "⊗");
  for (int a = 1; a <= 4; ++a) {
    CHECK(f.at(a, a) == 0);
    for (int b = 1; b <= 4; ++b) CHECK(f.at(a, b) == f.at(b, a));
  }
  CHECK_THROWS_AS(pattern_of(GroupSpec::formal(3, {1, 2, 3})), InvalidSpec);
}

TEST_CASE("pattern transforms") {
  auto e = pattern_of(spec({1, 2, 3}, {1}));
  auto [same, J] = transform_pattern(e, 0b10, {identity_perm(3), false, false});
  CHECK(same == e);
  CHECK(J == 0b10);

  // Euclid pattern to Newton pattern by reflection and relabeling
  auto n = pattern_of(spec({1, 2, 3}, {2}));
  auto [r, Jr] = transform_pattern(e, 0b10, {identity_perm(3), true, true});
  CHECK(r == n);
  CHECK(Jr == 0b100);

  // (1,3,2) Galilei pattern to the (2,1,3) one
  auto g50 = pattern_of(spec({1, 3, 2}, {1, 2}));
  auto g43 = pattern_of(spec({2, 1, 3}, {1, 2}));
  auto [r2, J2] = transform_pattern(g50, 0b10, {identity_perm(3), true, true});
  CHECK(r2 == g43);
  CHECK(J2 == 0b100);

  CHECK_THROWS_AS(transform_pattern(e, 0b10, {identity_perm(3), false, true}), TransformError);
  CHECK_NOTHROW(transform_pattern(e, 0b10, {identity_perm(3), false, true}, true));
}

TEST_CASE("canonical keys") {
  auto key = [](std::vector<int> s, std::vector<int> S, KeyOptions o = {}) {
    auto g = spec(std::move(s), std::move(S));
    return canonical_key(pattern_of(g), contracted_J(g), o);
  };
  // Galilei patterns agree, J separates them
  CHECK(key({1, 2, 3}, {1, 2}) != key({2, 1, 3}, {1, 2}));
  CHECK(key({1, 2, 3}, {1, 2}, {true, false}) == key({2, 1, 3}, {1, 2}, {true, false}));
  CHECK(key({1, 2, 3}, {1}) == key({1, 3, 2}, {1}));
  CHECK(key({2, 1, 3}, {2}) == key({1, 2, 3}, {2}));

  // invariance under random group elements
  std::mt19937 rng(3);
  for (int N = 3; N <= 5; ++N) {
    auto group = transform_group(N);
    for (int trial = 0; trial < 40; ++trial) {
      auto s = identity_perm(N);
      std::shuffle(s.begin(), s.end(), rng);
      IndexSet S = (rng() % ((1u << (N - 1)) - 1) + 1) << 1;
      auto g = GroupSpec::contracted(N, s, S);
      auto p = pattern_of(g);
      IndexSet J = contracted_J(g);
      const auto& t = group[rng() % group.size()];
      auto [q, Jq] = transform_pattern(p, J, t);
      CHECK(canonical_key(q, Jq) == canonical_key(p, J));
    }
  }
}

TEST_CASE("catalog for N = 3") {
  auto cs = enumerate_catalog(3);
  REQUIRE(cs.size() == 4);
  std::map<std::string, IndexSet> js;
  for (const auto& c : cs) js[c.label] = c.J;
  CHECK(js == std::map<std::string, IndexSet>{
                  {"E_v^0(2)", 0b10}, {"E_z(2)", 0}, {"G_v^0(2)", 0b110}, {"G_v(2)", 0b100}});
  int members = 0;
  for (const auto& c : cs) {
    members += static_cast<int>(c.members.size());
    for (auto r : c.conjugacy) CHECK(r == Conjugacy::Verified);
  }
  CHECK(members == 18);
  std::set<std::pair<ClassKey, IndexSet>> drawn;
  for (const auto& d : diagrams3()) drawn.insert({canonical_key(diagram(d.rows, printed_legend()), d.J), d.J});
  CHECK(drawn == keyset(cs));
  CatalogOptions shadow;
  shadow.key.shadow = true;
  CHECK(enumerate_catalog(3, shadow).size() == 2);
}

TEST_CASE("catalog for N = 4 matches the drawn patterns") {
  auto cs = enumerate_catalog(4);
  REQUIRE(cs.size() == 8);
  std::set<std::pair<ClassKey, IndexSet>> drawn, printed;
  for (const auto& d : diagrams4()) {
    auto p = diagram(d.rows, diagram_legend());
    drawn.insert({canonical_key(p, d.J), d.J});
    auto q = diagram(d.rows, printed_legend());
    printed.insert({canonical_key(q, d.J), d.J});
  }
  CHECK(drawn == keyset(cs));
  CHECK(printed != keyset(cs));
  for (const auto& c : cs) {
    auto it = std::find_if(diagrams4().begin(), diagrams4().end(), [&](const Drawn& d) { return c.label == d.name; });
    REQUIRE(it != diagrams4().end());
    CHECK(c.pattern == diagram(it->rows, diagram_legend()));
  }
  CatalogOptions shadow;
  shadow.key.shadow = true;
  CHECK(enumerate_catalog(4, shadow).size() == 5);
}

TEST_CASE("J values over S_4") {
  std::set<std::string> js;
  auto s = identity_perm(4);
  do js.insert(J_of(GroupSpec::formal(4, s)).str());
  while (std::next_permutation(s.begin(), s.end()));
  CHECK(js == std::set<std::string>{"j1 j2 j3", "j1 j3"});
}

TEST_CASE("N = 5 partial catalogs") {
  CatalogOptions low;
  low.subset = index_set({1, 2});
  auto cs = enumerate_catalog(5, low);
  // the six drawn classes appear; one more class with J = iota2 is found
  CHECK(cs.size() == 7);
  auto keys = keyset(cs);
  for (const auto& d : diagrams5()) {
    auto p = diagram(d.rows, printed_legend());
    CHECK_MESSAGE(keys.count({canonical_key(p, d.J), d.J}) == 1, d.name);
  }
  int unnamed = 0;
  for (const auto& c : cs)
    if (c.label.rfind("SO(", 0) == 0) {
      ++unnamed;
      CHECK(c.J == 0b100);
      CHECK(c.nilpotent_count == 2);
    }
  CHECK(unnamed == 1);

  CatalogOptions flag;
  flag.exact = index_set({1, 2, 3, 4});
  auto fs = enumerate_catalog(5, flag);
  REQUIRE(fs.size() == 5);
  std::set<IndexSet> js;
  for (const auto& c : fs) js.insert(c.J);
  CHECK(js == std::set<IndexSet>{0b11110, 0b01110, 0b10110, 0b01010, 0b10010});
}

TEST_CASE("classical shadow is coarser") {
  for (int N = 3; N <= 5; ++N) {
    CatalogOptions shadow;
    shadow.key.shadow = true;
    shadow.check_conjugacy = false;
    CatalogOptions q;
    q.check_conjugacy = false;
    CHECK(enumerate_catalog(N, shadow).size() < enumerate_catalog(N, q).size());
  }
}

TEST_CASE("catalog output is deterministic") {
  CatalogOptions o;
  auto a = catalog_json(3, enumerate_catalog(3, o), o);
  auto b = catalog_json(3, enumerate_catalog(3, o), o);
  CHECK(a == b);
  CHECK(a.find("\"classes\": 4") != std::string::npos);
  auto t = catalog_text(4, enumerate_catalog(4, o), o);
  CHECK(t.rfind("N = 4, quantum: 8 classes", 0) == 0);
}

TEST_CASE("catalog rejects unsupported N") {
  CHECK_THROWS_AS(enumerate_catalog(2), InvalidSpec);
  CHECK_THROWS_AS(enumerate_catalog(7), InvalidSpec);
}
