#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckq/ckcore.hpp"

namespace ckq {

struct Relation {
  std::string tag;  // e.g. "RUU(2,7)", "ORTH1(1,3)"
  NCPoly poly;      // understood as poly = 0
};

using RelationSet = std::vector<Relation>;

std::vector<NCPoly> polys(const RelationSet& rs);

/// Entries of R U1 U2 - U2 U1 R, row-major over the N^2 x N^2 positions.
RelationSet ruu_relations(const GroupSpec& spec);
RelationSet ruu_relations(const GroupSpec& spec, const ScalarMatrix& rt);

/// (U C U^t - C, U^t C^{-1} U - C^{-1}) entrywise.
std::pair<RelationSet, RelationSet> orthogonality_relations(const GroupSpec& spec);

using GenTensorMap = std::map<Gen, Tensor>;
using GenPolyMap = std::map<Gen, NCPoly>;

/// C_ikr = (s_i,s_r)(s_r,s_k)/(s_i,s_k); throws std::logic_error if not polynomial.
ParamMonomial coproduct_factor(const GroupSpec& spec, int i, int k, int r);
/// Position matrix: entry (i,k) is Delta(u_{s_i s_k}).
Matrix<Tensor> coproduct(const GroupSpec& spec);
GenTensorMap coproduct_map(const GroupSpec& spec);
std::map<Gen, int> counit(const GroupSpec& spec);

/// S(U) = C U^t C^{-1}, in matrix positions (entries carry the range products).
PolyMatrix antipode_matrix(const GroupSpec& spec);
/// Generator images S(u_{s_a s_b}) = S(U)_ab / (s_a, s_b), Laurent in formal j.
GenPolyMap antipode_generators(const GroupSpec& spec);
/// Generator images from the closed-form table, with its printed ratio factors.
GenPolyMap antipode_closed_form(const GroupSpec& spec);
/// Closed form reassembled in matrix positions (multiplied back by (s_a, s_b)).
PolyMatrix antipode_closed_form_matrix(const GroupSpec& spec);

/// Image of a word under an algebra map given on generators.
Tensor delta_word(const Word& w, const GenTensorMap& delta, int nparams);
/// Image of a word under an anti-homomorphism given on generators.
NCPoly antipode_word(const Word& w, const GenPolyMap& s, int nparams);

struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::string detail;  // first failing entry
};

struct HopfReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
};

/// Coassociativity and counit on generators (given maps, any phase).
AxiomCheck check_coassociativity(const GenTensorMap& delta, int nparams);
AxiomCheck check_counit(const GenTensorMap& delta, const std::map<Gen, int>& eps, int nparams);
/// m(S (x) id) Delta(g) - eps(g) and m(id (x) S) Delta(g) - eps(g) for each generator.
std::vector<std::pair<Gen, NCPoly>> antipode_residuals(const GenTensorMap& delta, const GenPolyMap& s,
                                                       const std::map<Gen, int>& eps, int nparams);

HopfReport verify_hopf_axioms(const GroupSpec& spec);

}  // namespace ckq
