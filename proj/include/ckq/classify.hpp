#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckq/ckcore.hpp"

namespace ckq {

/// N x N matrix of squarefree iota-monomials, stored as index sets.
struct PatternMatrix {
  int N = 0;
  std::vector<IndexSet> e;  // row-major

  PatternMatrix() = default;
  explicit PatternMatrix(int n) : N(n), e(static_cast<std::size_t>(n * n), 0) {}
  IndexSet at(int a, int b) const { return e.at((a - 1) * N + (b - 1)); }
  IndexSet& at(int a, int b) { return e.at((a - 1) * N + (b - 1)); }

  friend auto operator<=>(const PatternMatrix&, const PatternMatrix&) = default;
  friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;
};

/// Nilpotent part of (s_a, s_b) at every position; requires S nonempty.
PatternMatrix pattern_of(const GroupSpec& spec);
/// J restricted to the nilpotent set, as an index set.
IndexSet contracted_J(const GroupSpec& spec);

/// Renames iota_k to iota_{N-k}.
IndexSet relabel(IndexSet s, int N);

struct PatternTransform {
  std::vector<int> perm;  // position a goes to perm[a-1]
  bool reflect = false;   // (a,b) -> (N+1-b, N+1-a) after the permutation
  bool relabel = false;   // iota_k -> iota_{N-k}; needs reflect unless relaxed

  /// Image of position a.
  int position(int a, int N) const;
};

struct TransformError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Applies t to (p, J). Throws TransformError for relabel without reflect
/// unless `relaxed`.
std::pair<PatternMatrix, IndexSet> transform_pattern(const PatternMatrix& p, IndexSet J, const PatternTransform& t,
                                                     bool relaxed = false);

/// All N!*3 transforms (permutation x {none, reflect, reflect+relabel}),
/// plus permutation+relabel when relaxed.
std::vector<PatternTransform> transform_group(int N, bool relaxed = false);

struct ClassKey {
  std::vector<IndexSet> pattern;
  IndexSet J = 0;  // 0 in shadow mode (J ignored)

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

struct KeyOptions {
  bool shadow = false;   // compare patterns only
  bool relaxed = false;  // allow relabeling without reflection
};

ClassKey canonical_key(const PatternMatrix& p, IndexSet J, const KeyOptions& opt = {});

struct Member {
  std::vector<int> sigma;
  IndexSet S = 0;
  IndexSet J = 0;
};

enum class Conjugacy { Verified, Failed, Unchecked };
std::string conjugacy_name(Conjugacy c);

struct ContractionClass {
  ClassKey key;
  PatternMatrix pattern;  // pattern of the representative member
  IndexSet J = 0;         // J of the representative member
  int representative = 0;  // the named member, else the first
  int nilpotent_count = 0;
  std::vector<Member> members;  // sorted by (S, sigma)
  std::string label;             // conventional name, or a systematic one
  std::vector<std::string> aliases;
  // Per member: whether a signed conjugation maps it onto the representative.
  std::vector<Conjugacy> conjugacy;
};

struct CatalogOptions {
  KeyOptions key;
  std::optional<IndexSet> subset;  // only S contained in this set
  std::optional<IndexSet> exact;   // only this S
  bool check_conjugacy = true;     // N = 3 only
};

std::vector<ContractionClass> enumerate_catalog(int N, const CatalogOptions& opt = {});

/// Tests U(s1) = V U(s2) V^{-1} and the matching R, C conjugations, with V a signed position map
/// that realizes pattern equivalence (N = 3 only; Unchecked otherwise).
Conjugacy check_conjugacy(const Member& a, const Member& b, int N, const KeyOptions& opt = {});

/// Legend symbol for a monomial: . o * x and the triple-index symbols.
std::string legend_symbol(IndexSet s);
std::string monomial_name(IndexSet s);  // "1", "i1 i2", ...
std::vector<std::string> pattern_rows(const PatternMatrix& p);

std::string catalog_json(int N, const std::vector<ContractionClass>& classes, const CatalogOptions& opt);
std::string catalog_text(int N, const std::vector<ContractionClass>& classes, const CatalogOptions& opt);

}  // namespace ckq
