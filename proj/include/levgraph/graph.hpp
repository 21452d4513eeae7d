#pragma once

#include <span>
#include <string>
#include <vector>

#include "levgraph/strings.hpp"

namespace levgraph {

inline constexpr std::int64_t kDefaultVertexBudget = 1'000'000;

// Neighbor counts of a node in the length-unbounded graph, split by the
// neighbor's length. Callers truncate at graph boundaries.
struct DegreeTriple {
  int down = 0;  // length |u| - 1, one per run
  int same = 0;  // length |u|
  int up = 0;    // length |u| + 1

  int total() const { return down + same + up; }
  bool operator==(const DegreeTriple&) const = default;
};

DegreeTriple degree_formula(const LevString& u, Alphabet alphabet);

// Immutable adjacency structure over all strings of the spec, indexed by
// rank. Edges join pairs at edit distance one; neighbor lists are sorted.
class LevGraph {
 public:
  static LevGraph build(const GraphSpec& spec,
                        std::int64_t max_vertices = kDefaultVertexBudget);

  const GraphSpec& spec() const { return spec_; }
  std::int64_t vertex_count() const {
    return static_cast<std::int64_t>(offsets_.size()) - 1;
  }
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(adjacency_.size()) / 2;
  }
  std::span<const std::int32_t> neighbors(StringRank rank) const;
  int degree(StringRank rank) const {
    return static_cast<int>(neighbors(rank).size());
  }
  bool has_edge(StringRank u, StringRank v) const;
  LevString vertex(StringRank rank) const { return unrank(rank, spec_); }
  int length_of(StringRank rank) const;

 private:
  LevGraph() = default;

  GraphSpec spec_;
  std::vector<std::int64_t> offsets_{0};
  std::vector<std::int32_t> adjacency_;
  std::vector<std::int64_t> length_offsets_;  // first rank of each length
};

// Single-source shortest paths by BFS; one distance per rank, -1 never
// occurs on valid sources since the graph is connected. The oracle path.
std::vector<int> geodesic_bfs(const LevGraph& g, StringRank source);
std::vector<int> geodesic_bfs(const LevGraph& g, const LevString& source);

// Geodesic distance without touching the graph: the edit distance when
// k1 < k2 or k1 = k2 <= 2, the Hamming distance when k1 = k2 > 2.
int geodesic_distance(const GraphSpec& spec, const LevString& u, const LevString& v);

// Same dispatch with membership validation against a built graph.
int geodesic_closed_form(const LevGraph& g, const LevString& u, const LevString& v);

// Maximum geodesic distance over all pairs; BFS from every vertex, fanned
// out across worker threads.
int diameter(const LevGraph& g, std::int64_t max_vertices = kDefaultVertexBudget);

// Actual neighbor counts of a vertex split by neighbor length.
DegreeTriple neighbor_length_split(const LevGraph& g, StringRank rank);

// Deterministic exports. DOT uses one node per string literal; JSON is
// {"format_version":1,"spec":{...},"nodes":[...],"edges":[[u,v],...]}.
std::string to_dot(const LevGraph& g);
std::string to_json(const LevGraph& g);

// Smallest subset found by an exhaustive search, as vertex ranks.
struct SubsetSearchResult {
  int size = 0;
  std::vector<StringRank> witness;
};

}  // namespace levgraph
