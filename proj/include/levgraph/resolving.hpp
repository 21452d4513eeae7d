#pragma once

#include <optional>
#include <utility>

#include "levgraph/graph.hpp"

namespace levgraph {

inline constexpr std::int64_t kDefaultDimensionGuard = 40;

// Which piece of the construction produced a resolving node. A node kept
// after deduplication carries the tags of every piece that emitted it.
struct ResolvingProvenance {
  enum class Kind {
    kFullLength,  // alpha^{k2}, one per alphabet character
    kShifted,     // shift^i applied to the per-length set of length k2-2i
    kOddTail,     // the per-length set of length k1 when k2-k1 is odd
  };

  Kind kind = Kind::kFullLength;
  int shift = 0;
  int base_length = 0;

  std::string label() const;
  bool operator==(const ResolvingProvenance&) const = default;
};

// Ordered resolving set; every node has at most two runs, so the linear
// kernel applies to every embedding coordinate.
struct ResolvingSet {
  GraphSpec spec;
  std::vector<LevString> nodes;
  std::vector<std::vector<ResolvingProvenance>> provenance;
  std::int64_t raw_size = 0;  // total size of the pieces before deduplication

  std::int64_t size() const { return static_cast<std::int64_t>(nodes.size()); }
};

// The per-length set: all strings (2n)^i (2n+1)^{k-i} for 0 <= i <= k and
// 0 <= n < floor(a/2). Size 1 for k = 0, floor(a/2)*(k+1) otherwise.
std::vector<LevString> build_Rka(int k, Alphabet alphabet);

// Applies the cyclic character shift c -> (c + shift) mod a symbol-wise.
LevString shift_chars(const LevString& w, int shift, Alphabet alphabet);

// The explicit construction: full-length one-run strings, shifted
// per-length sets at lengths k2, k2-2, ..., and the length-k1 set when
// k2-k1 is odd. Deduplicated, deterministic order.
ResolvingSet build_resolving_set(const GraphSpec& spec);

// Upper bound a + floor(a/2)(k1+1) + floor(a/2) * sum_i (k2-2i+1) on the
// constructed set size.
std::int64_t resolving_set_size_bound(const GraphSpec& spec);

// Exact total size of the construction's pieces before deduplication.
std::int64_t resolving_set_raw_size(const GraphSpec& spec);

struct ResolveCheck {
  bool resolving = false;
  // First pair of vertices (in rank order) with identical distance
  // profiles, present exactly when resolving is false.
  std::optional<std::pair<StringRank, StringRank>> witness;
};

// Exhaustive injectivity check of the BFS distance profiles over nodes.
ResolveCheck is_resolving(const LevGraph& g, const std::vector<LevString>& nodes);

// Geodesic distances from u to every node of the resolving set, computed
// through the run-pattern kernels (no graph needed).
using EmbeddingVector = std::vector<int>;
EmbeddingVector embed(const GraphSpec& spec, const ResolvingSet& set, const LevString& u);

// Smallest resolving set by exhaustive subset search, sizes ascending and
// subsets in lexicographic rank order. Guarded by max_vertices; throws
// ResourceLimitError when no resolving subset of size <= max_size exists.
SubsetSearchResult exact_metric_dimension(const LevGraph& g, int max_size = -1,
                                          std::int64_t max_vertices = kDefaultDimensionGuard);

// True iff a^{k2} <= (k2+1)^beta and beta is at most the constructed set
// size, i.e. beta is consistent with both known bounds.
bool check_dimension_bounds(const GraphSpec& spec, int beta);

// Exports. JSON: {"format_version":1,"spec":{...},"resolving_set":[...],
// "embeddings":{"<string>":[...]}}; CSV: header string,c1..cn; text: one
// literal per line with a provenance comment.
std::string resolving_set_to_text(const ResolvingSet& set);
std::string resolving_set_to_json(const ResolvingSet& set);
std::string embedding_to_json(const ResolvingSet& set, const std::vector<LevString>& inputs);
std::string embedding_to_csv(const ResolvingSet& set, const std::vector<LevString>& inputs);

}  // namespace levgraph
