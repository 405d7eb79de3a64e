#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckq/hopf.hpp"

namespace ckq {

enum class Verdict { Admissible, Trivial, Inadmissible };

std::string verdict_name(Verdict v);

struct RelationVerdict {
  Verdict kind = Verdict::Trivial;
  std::string tag;
  NCPoly contracted;  // principal part after division (Admissible)
  NCPoly witness;     // divided relation with no surviving principal term (Inadmissible)
  // Inadmissible entries only: all but one leading component vanish modulo the
  // contracted relations after elimination; `resolution` is the survivor.
  bool resolved = false;
  NCPoly resolution;
};

/// Leading components of a divided relation: one iota-free polynomial per
/// minimal exponent vector on S.
std::vector<std::pair<ParamMonomial, NCPoly>> leading_components(const NCPoly& x, IndexSet S);

struct AdmissibilityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonLinearConstraint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The parameter monomial in z = J v after value substitution: coefficient and monomial.
ExpScalar substituted_J(const ParamMonomial& J, const CKAssignment& a);

/// Series order needed for t^m so that every group of terms sharing a word,
/// parameter monomial and v-power keeps its leading nonvanishing order.
int series_order(const NCPoly& r);

/// Substitute values and, when J meets the nilpotent set, expand t^m in J v.
NCPoly specialize(const NCPoly& r, const GroupSpec& spec, const ParamMonomial& J);

RelationVerdict contract_relation(const NCPoly& r, const GroupSpec& spec, const ParamMonomial& J);
RelationVerdict contract_relation(const NCPoly& r, const GroupSpec& spec);

struct ContractOptions {
  std::optional<ParamMonomial> J_override;
  bool eliminate = true;  // run generator elimination (N = 3)
  bool resolve = true;    // try to resolve inadmissible RUU entries (needs eliminations)
  std::uint64_t seed = 1;  // evaluation points for resolution
  int points = 3;
  bool strict = false;    // throw AdmissibilityFailure on unresolved inadmissible verdicts or ill-defined antipode
};

struct ContractedGroup {
  GroupSpec spec;
  ParamMonomial J;          // formal J used for the deformation
  ExpScalar J_contracted;   // J after substitution (iota monomial, possibly 1)
  std::vector<RelationVerdict> ruu;
  std::vector<RelationVerdict> orth;
  GenPolyMap antipode;      // contracted S on generators
  std::vector<std::string> antipode_failures;  // ill-defined images
  GenTensorMap coproduct;
  std::map<Gen, int> counit;
  GenPolyMap antipode_raw;  // before elimination
  GenTensorMap coproduct_raw;

  GenMap eliminations;              // generator -> image, after fixpoint
  std::vector<Gen> elimination_order;
  std::vector<NCPoly> relations;    // contracted RUU relations after elimination, nonzero, deduplicated
  std::vector<NCPoly> constraints;  // contracted orthogonality relations after elimination, nonzero

  int count(Verdict v) const;
  int unresolved() const;
  std::vector<Gen> surviving_generators() const;
};

ContractedGroup contract_group(const GroupSpec& spec, const ContractOptions& opt = {});

/// Eliminates generators via linear orthogonality constraints until a fixpoint.
/// Throws NonLinearConstraint when nothing can be eliminated at all.
void eliminate_generators(ContractedGroup& g);

/// Two-sided span test: p lies in span{w r w' : r in pool, |w| + |w'| <= depth} at every point.
bool in_ideal_span(const NCPoly& p, const std::vector<NCPoly>& pool, const std::vector<Gen>& alphabet, int depth,
                   const std::vector<Point>& points);

void resolve_inadmissible(ContractedGroup& g, const std::vector<Point>& points);

/// Contracted S(U)U - I and U S(U) - I lie in the span of contracted orthogonality relations.
AxiomCheck check_contracted_antipode(const ContractedGroup& g, const std::vector<Point>& points);

std::string contracted_json(const ContractedGroup& g);

}  // namespace ckq
