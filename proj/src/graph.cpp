#include "levgraph/graph.hpp"

#include <algorithm>

#include "json.hpp"
#include "levgraph/edit_distance.hpp"
#include "levgraph/parallel.hpp"

namespace levgraph {

DegreeTriple degree_formula(const LevString& u, Alphabet alphabet) {
  const int len = static_cast<int>(u.size());
  DegreeTriple t;
  t.down = run_count(u);
  t.same = len * (alphabet.size - 1);
  t.up = alphabet.size + len * (alphabet.size - 1);
  return t;
}

LevGraph LevGraph::build(const GraphSpec& spec, std::int64_t max_vertices) {
  const std::int64_t n = spec.vertex_count();
  if (n > max_vertices) {
    throw ResourceLimitError("vertex count " + std::to_string(n) +
                             " exceeds the budget of " +
                             std::to_string(max_vertices) + " vertices");
  }
  LevGraph g;
  g.spec_ = spec;
  g.offsets_.assign(n + 1, 0);
  g.length_offsets_.reserve(spec.k2 - spec.k1 + 2);
  {
    std::int64_t first = 0;
    for (int k = spec.k1; k <= spec.k2; ++k) {
      g.length_offsets_.push_back(first);
      std::int64_t block = 1;
      for (int i = 0; i < k; ++i) block *= spec.a;
      first += block;
    }
    g.length_offsets_.push_back(first);
  }

  std::vector<StringRank> candidates;
  LevString scratch;
  for (StringRank r = 0; r < n; ++r) {
    const LevString w = unrank(r, spec);
    const int len = static_cast<int>(w.size());
    candidates.clear();
    // Substitutions keep the length.
    scratch = w;
    for (int pos = 0; pos < len; ++pos) {
      for (Symbol c = 0; c < spec.a; ++c) {
        if (c == w[pos]) continue;
        scratch[pos] = c;
        candidates.push_back(string_rank(scratch, spec));
      }
      scratch[pos] = w[pos];
    }
    // Deletions: removing any character of a run gives the same string, so
    // delete once per run.
    if (len > 0 && len - 1 >= spec.k1) {
      for (int pos = 0; pos < len; ++pos) {
        if (pos + 1 < len && w[pos] == w[pos + 1]) continue;
        LevString shorter;
        shorter.reserve(len - 1);
        shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
        shorter.insert(shorter.end(), w.begin() + pos + 1, w.end());
        candidates.push_back(string_rank(shorter, spec));
      }
    }
    // Insertions; duplicates are removed below.
    if (len + 1 <= spec.k2) {
      LevString longer(len + 1);
      for (int pos = 0; pos <= len; ++pos) {
        std::copy(w.begin(), w.begin() + pos, longer.begin());
        std::copy(w.begin() + pos, w.end(), longer.begin() + pos + 1);
        for (Symbol c = 0; c < spec.a; ++c) {
          longer[pos] = c;
          candidates.push_back(string_rank(longer, spec));
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    g.offsets_[r + 1] = g.offsets_[r] + static_cast<std::int64_t>(candidates.size());
    for (StringRank c : candidates) {
      g.adjacency_.push_back(static_cast<std::int32_t>(c));
    }
  }
  return g;
}

std::span<const std::int32_t> LevGraph::neighbors(StringRank rank) const {
  if (rank < 0 || rank >= vertex_count()) {
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " outside the vertex range");
  }
  return {adjacency_.data() + offsets_[rank],
          static_cast<std::size_t>(offsets_[rank + 1] - offsets_[rank])};
}

bool LevGraph::has_edge(StringRank u, StringRank v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), static_cast<std::int32_t>(v));
}

int LevGraph::length_of(StringRank rank) const {
  if (rank < 0 || rank >= vertex_count()) {
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " outside the vertex range");
  }
  const auto it = std::upper_bound(length_offsets_.begin(), length_offsets_.end(), rank);
  return spec_.k1 + static_cast<int>(it - length_offsets_.begin()) - 1;
}

std::vector<int> geodesic_bfs(const LevGraph& g, StringRank source) {
  const std::int64_t n = g.vertex_count();
  if (source < 0 || source >= n) {
    throw std::invalid_argument("source rank " + std::to_string(source) +
                                " outside the vertex range");
  }
  std::vector<int> dist(n, -1);
  std::vector<std::int32_t> frontier;
  dist[source] = 0;
  frontier.push_back(static_cast<std::int32_t>(source));
  std::size_t head = 0;
  while (head < frontier.size()) {
    const std::int32_t v = frontier[head++];
    for (std::int32_t w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> geodesic_bfs(const LevGraph& g, const LevString& source) {
  return geodesic_bfs(g, string_rank(source, g.spec()));
}

int geodesic_distance(const GraphSpec& spec, const LevString& u, const LevString& v) {
  for (const LevString* w : {&u, &v}) {
    if (!spec.contains_length(static_cast<std::int64_t>(w->size()))) {
      throw std::invalid_argument("string length " + std::to_string(w->size()) +
                                  " outside [" + std::to_string(spec.k1) + ", " +
                                  std::to_string(spec.k2) + "]");
    }
    for (Symbol s : *w) {
      if (s < 0 || s >= spec.a) {
        throw std::invalid_argument("symbol " + std::to_string(s) +
                                    " outside alphabet of size " +
                                    std::to_string(spec.a));
      }
    }
  }
  if (spec.k1 < spec.k2 || spec.k2 <= 2) return edit_distance_banded(u, v);
  return hamming_distance(u, v);
}

int geodesic_closed_form(const LevGraph& g, const LevString& u, const LevString& v) {
  return geodesic_distance(g.spec(), u, v);
}

int diameter(const LevGraph& g, std::int64_t max_vertices) {
  const std::int64_t n = g.vertex_count();
  if (n > max_vertices) {
    throw ResourceLimitError("vertex count " + std::to_string(n) +
                             " exceeds the budget of " +
                             std::to_string(max_vertices) + " vertices");
  }
  std::vector<int> eccentricity(n, 0);
  parallel_for(0, n, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t v = lo; v < hi; ++v) {
      const std::vector<int> dist = geodesic_bfs(g, v);
      eccentricity[v] = *std::max_element(dist.begin(), dist.end());
    }
  });
  return *std::max_element(eccentricity.begin(), eccentricity.end());
}

DegreeTriple neighbor_length_split(const LevGraph& g, StringRank rank) {
  const int len = g.length_of(rank);
  DegreeTriple t;
  for (std::int32_t w : g.neighbors(rank)) {
    const int wlen = g.length_of(w);
    if (wlen == len - 1) {
      ++t.down;
    } else if (wlen == len) {
      ++t.same;
    } else {
      ++t.up;
    }
  }
  return t;
}

std::string to_dot(const LevGraph& g) {
  const Alphabet alphabet = g.spec().alphabet();
  std::string out = "graph levenshtein {\n";
  const std::int64_t n = g.vertex_count();
  for (StringRank r = 0; r < n; ++r) {
    out += "  \"" + format_string(g.vertex(r), alphabet) + "\";\n";
  }
  for (StringRank u = 0; u < n; ++u) {
    const std::string lu = format_string(g.vertex(u), alphabet);
    for (std::int32_t v : g.neighbors(u)) {
      if (v <= u) continue;
      out += "  \"" + lu + "\" -- \"" + format_string(g.vertex(v), alphabet) + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_json(const LevGraph& g) {
  const Alphabet alphabet = g.spec().alphabet();
  nlohmann::json j;
  j["format_version"] = 1;
  j["spec"] = {{"k1", g.spec().k1}, {"k2", g.spec().k2}, {"a", g.spec().a}};
  nlohmann::json nodes = nlohmann::json::array();
  const std::int64_t n = g.vertex_count();
  for (StringRank r = 0; r < n; ++r) {
    nodes.push_back(format_string(g.vertex(r), alphabet));
  }
  j["nodes"] = std::move(nodes);
  nlohmann::json edges = nlohmann::json::array();
  for (StringRank u = 0; u < n; ++u) {
    for (std::int32_t v : g.neighbors(u)) {
      if (v > u) edges.push_back({u, v});
    }
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

}  // namespace levgraph
