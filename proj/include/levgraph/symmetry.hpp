#pragma once

#include "levgraph/graph.hpp"

namespace levgraph {

inline constexpr std::int64_t kDefaultAutomorphismGuard = 64;

// A vertex map of the form xi o rho: reverse the string when reversed is
// set, then apply the character bijection xi symbol-wise.
struct StructuralAutomorphism {
  std::vector<Symbol> xi;  // permutation of {0, ..., a-1}
  bool reversed = false;

  static StructuralAutomorphism identity(Alphabet alphabet);

  // this applied after other: (*this) o other.
  StructuralAutomorphism compose(const StructuralAutomorphism& other) const;
  StructuralAutomorphism inverse() const;

  bool operator==(const StructuralAutomorphism&) const = default;
};

LevString apply_automorphism(const StructuralAutomorphism& phi, const LevString& u);

// Explicit form: image rank per vertex rank.
using VertexPermutation = std::vector<std::int32_t>;

VertexPermutation to_vertex_permutation(const StructuralAutomorphism& phi,
                                        const GraphSpec& spec);
VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner);
VertexPermutation inverse_permutation(const VertexPermutation& perm);

// Complete automorphism list by backtracking over vertex bijections, with
// iterated color refinement and adjacency-consistency pruning. Output in
// lexicographic order of the permutation arrays.
std::vector<VertexPermutation> enumerate_automorphisms(
    const LevGraph& g, std::int64_t max_vertices = kDefaultAutomorphismGuard);

// All 2 * a! structural automorphisms: every character bijection, with and
// without reversal.
std::vector<StructuralAutomorphism> construct_structural_group(Alphabet alphabet);

// True iff the enumerated automorphisms are exactly the structural ones as
// vertex permutations. Only defined for k1 != k2 with k2 >= 2.
bool match_groups(const LevGraph& g, std::int64_t max_vertices = kDefaultAutomorphismGuard);

struct DeterminingSet {
  GraphSpec spec;
  std::vector<LevString> nodes;
};

// The closed-form determining set of size ceil(a/k2). Defined for
// k1 != k2, k2 >= 2, (k2, a) != (2, 2); throws std::invalid_argument in
// the excluded regimes (use exact_determining_number there).
DeterminingSet build_determining_set(const GraphSpec& spec);

// True iff only the identity automorphism fixes every node pointwise.
bool is_determining(const LevGraph& g, const std::vector<LevString>& nodes,
                    std::int64_t max_vertices = kDefaultAutomorphismGuard);

// Smallest determining set by exhaustive subset search, sizes ascending
// and subsets in lexicographic rank order.
SubsetSearchResult exact_determining_number(
    const LevGraph& g, std::int64_t max_vertices = kDefaultAutomorphismGuard);

// JSON export: each automorphism carries its rank permutation plus its
// structural form {"xi":[...],"reversed":bool} when one matches.
std::string automorphisms_to_json(const LevGraph& g,
                                  const std::vector<VertexPermutation>& automorphisms);

}  // namespace levgraph
