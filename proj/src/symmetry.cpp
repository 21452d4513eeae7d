#include "levgraph/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "json.hpp"

namespace levgraph {

StructuralAutomorphism StructuralAutomorphism::identity(Alphabet alphabet) {
  StructuralAutomorphism phi;
  phi.xi.resize(alphabet.size);
  std::iota(phi.xi.begin(), phi.xi.end(), 0);
  return phi;
}

StructuralAutomorphism StructuralAutomorphism::compose(
    const StructuralAutomorphism& other) const {
  if (xi.size() != other.xi.size()) {
    throw std::invalid_argument("cannot compose automorphisms over different alphabets");
  }
  // Reversal commutes with character maps, so the reversal flags add mod 2
  // and the character bijections compose.
  StructuralAutomorphism out;
  out.reversed = reversed != other.reversed;
  out.xi.resize(xi.size());
  for (std::size_t c = 0; c < xi.size(); ++c) out.xi[c] = xi[other.xi[c]];
  return out;
}

StructuralAutomorphism StructuralAutomorphism::inverse() const {
  StructuralAutomorphism out;
  out.reversed = reversed;
  out.xi.resize(xi.size());
  for (std::size_t c = 0; c < xi.size(); ++c) out.xi[xi[c]] = static_cast<Symbol>(c);
  return out;
}

LevString apply_automorphism(const StructuralAutomorphism& phi, const LevString& u) {
  const int a = static_cast<int>(phi.xi.size());
  LevString out;
  out.reserve(u.size());
  if (phi.reversed) {
    out.assign(u.rbegin(), u.rend());
  } else {
    out = u;
  }
  for (Symbol& s : out) {
    if (s < 0 || s >= a) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet of size " + std::to_string(a));
    }
    s = phi.xi[s];
  }
  return out;
}

VertexPermutation to_vertex_permutation(const StructuralAutomorphism& phi,
                                        const GraphSpec& spec) {
  const std::int64_t n = spec.vertex_count();
  VertexPermutation perm(n);
  StringRank r = 0;
  for (const LevString& w : enumerate_strings(spec)) {
    perm[r++] = static_cast<std::int32_t>(string_rank(apply_automorphism(phi, w), spec));
  }
  return perm;
}

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("cannot compose permutations of different sizes");
  }
  VertexPermutation out(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) out[v] = outer[inner[v]];
  return out;
}

VertexPermutation inverse_permutation(const VertexPermutation& perm) {
  VertexPermutation out(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) out[perm[v]] = static_cast<std::int32_t>(v);
  return out;
}

namespace {

// Iterated refinement: a vertex color is the class of (own color, sorted
// neighbor colors), recomputed until the partition stops splitting.
std::vector<int> refine_colors(const LevGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = g.degree(v);
  {
    std::map<int, int> ids;
    for (int c : colors) ids.emplace(c, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int& c : colors) c = ids[c];
  }
  int classes = 0;
  while (true) {
    std::vector<std::vector<int>> signatures(n);
    for (int v = 0; v < n; ++v) {
      auto& sig = signatures[v];
      sig.push_back(colors[v]);
      for (std::int32_t w : g.neighbors(v)) sig.push_back(colors[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& sig : signatures) ids.emplace(sig, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) colors[v] = ids[signatures[v]];
    if (next == classes) break;
    classes = next;
  }
  return colors;
}

}  // namespace

std::vector<VertexPermutation> enumerate_automorphisms(const LevGraph& g,
                                                       std::int64_t max_vertices) {
  const std::int64_t count = g.vertex_count();
  if (count > max_vertices) {
    throw ResourceLimitError("vertex count " + std::to_string(count) +
                             " exceeds the enumeration guard of " +
                             std::to_string(max_vertices) + " vertices");
  }
  const int n = static_cast<int>(count);
  std::vector<std::uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    for (std::int32_t w : g.neighbors(v)) {
      if (w < 64) adj[v] |= std::uint64_t{1} << w;
    }
  }
  // Ranks above 63 would not fit the bitmask; the default guard forbids
  // them, and a caller-raised guard still may not exceed the mask width.
  if (n > 64) {
    throw ResourceLimitError("enumeration supports at most 64 vertices, got " +
                             std::to_string(n));
  }

  const std::vector<int> colors = refine_colors(g);
  std::vector<std::int32_t> image(n, -1);
  std::vector<bool> used(n, false);
  std::vector<VertexPermutation> found;

  const auto consistent = [&](int v, int w) {
    for (int u = 0; u < v; ++u) {
      const bool edge_vu = (adj[v] >> u) & 1;
      const bool edge_wi = (adj[w] >> image[u]) & 1;
      if (edge_vu != edge_wi) return false;
    }
    return true;
  };

  const std::function<void(int)> search = [&](int v) {
    if (v == n) {
      found.emplace_back(image.begin(), image.end());
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || colors[w] != colors[v]) continue;
      if (!consistent(v, w)) continue;
      image[v] = w;
      used[w] = true;
      search(v + 1);
      used[w] = false;
      image[v] = -1;
    }
  };
  search(0);
  return found;
}

std::vector<StructuralAutomorphism> construct_structural_group(Alphabet alphabet) {
  std::vector<StructuralAutomorphism> out;
  for (bool reversed : {false, true}) {
    std::vector<Symbol> xi(alphabet.size);
    std::iota(xi.begin(), xi.end(), 0);
    do {
      out.push_back({xi, reversed});
    } while (std::next_permutation(xi.begin(), xi.end()));
  }
  return out;
}

bool match_groups(const LevGraph& g, std::int64_t max_vertices) {
  const GraphSpec& spec = g.spec();
  if (spec.k1 == spec.k2 || spec.k2 < 2) {
    throw std::invalid_argument(
        "structural group comparison requires k1 != k2 and k2 >= 2");
  }
  std::vector<VertexPermutation> enumerated = enumerate_automorphisms(g, max_vertices);
  std::vector<VertexPermutation> structural;
  for (const StructuralAutomorphism& phi : construct_structural_group(spec.alphabet())) {
    structural.push_back(to_vertex_permutation(phi, spec));
  }
  std::sort(enumerated.begin(), enumerated.end());
  std::sort(structural.begin(), structural.end());
  // The structural maps must also be pairwise distinct as vertex maps.
  if (std::adjacent_find(structural.begin(), structural.end()) != structural.end()) {
    return false;
  }
  return enumerated == structural;
}

DeterminingSet build_determining_set(const GraphSpec& spec) {
  const int a = spec.a;
  const int k2 = spec.k2;
  if (spec.k1 == spec.k2 || k2 < 2 || (k2 == 2 && a == 2)) {
    throw std::invalid_argument(
        "no closed-form determining set for this spec; use exact_determining_number");
  }
  DeterminingSet out;
  out.spec = spec;

  // Fills characters lo..hi ascending into length-k2 strings, repeating the
  // last character to pad the final block.
  const auto cover_blocks = [&](int lo, int hi) {
    for (int c = lo; c <= hi; c += k2) {
      LevString d(k2);
      for (int i = 0; i < k2; ++i) d[i] = std::min(c + i, hi);
      out.nodes.push_back(std::move(d));
    }
  };

  if (k2 >= a) {
    LevString d;
    if (a == 2) {
      d.assign(k2 - 1, 0);
      d.push_back(1);
    } else {
      d.assign(k2 - a + 2, 0);
      for (Symbol c = 1; c <= a - 2; ++c) d.push_back(c);
    }
    out.nodes.push_back(std::move(d));
  } else if (k2 > 2) {
    LevString d;
    d.assign(2, 0);
    for (Symbol c = 1; c <= k2 - 2; ++c) d.push_back(c);
    out.nodes.push_back(std::move(d));
    cover_blocks(k2 - 1, a - 2);
  } else {
    out.nodes.push_back({0, 1});
    out.nodes.push_back({1, 2});
    cover_blocks(3, a - 2);
  }
  return out;
}

bool is_determining(const LevGraph& g, const std::vector<LevString>& nodes,
                    std::int64_t max_vertices) {
  std::vector<StringRank> ranks;
  ranks.reserve(nodes.size());
  for (const LevString& node : nodes) ranks.push_back(string_rank(node, g.spec()));
  for (const VertexPermutation& perm : enumerate_automorphisms(g, max_vertices)) {
    bool fixes_all = true;
    bool is_identity = true;
    for (std::size_t v = 0; v < perm.size(); ++v) {
      if (perm[v] != static_cast<std::int32_t>(v)) {
        is_identity = false;
        break;
      }
    }
    if (is_identity) continue;
    for (StringRank r : ranks) {
      if (perm[r] != static_cast<std::int32_t>(r)) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) return false;
  }
  return true;
}

SubsetSearchResult exact_determining_number(const LevGraph& g, std::int64_t max_vertices) {
  const std::vector<VertexPermutation> all = enumerate_automorphisms(g, max_vertices);
  std::vector<VertexPermutation> nontrivial;
  for (const VertexPermutation& perm : all) {
    for (std::size_t v = 0; v < perm.size(); ++v) {
      if (perm[v] != static_cast<std::int32_t>(v)) {
        nontrivial.push_back(perm);
        break;
      }
    }
  }
  if (nontrivial.empty()) return {0, {}};

  const int count = static_cast<int>(g.vertex_count());
  const auto determines = [&](const std::vector<StringRank>& subset) {
    for (const VertexPermutation& perm : nontrivial) {
      bool moved = false;
      for (StringRank r : subset) {
        if (perm[r] != static_cast<std::int32_t>(r)) {
          moved = true;
          break;
        }
      }
      if (!moved) return false;
    }
    return true;
  };

  for (int size = 1; size <= count; ++size) {
    std::vector<StringRank> subset(size);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (determines(subset)) return {size, subset};
      int pos = size - 1;
      while (pos >= 0 && subset[pos] == count - size + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int i = pos + 1; i < size; ++i) subset[i] = subset[i - 1] + 1;
    }
  }
  throw std::logic_error("the full vertex set must be determining");
}

std::string automorphisms_to_json(const LevGraph& g,
                                  const std::vector<VertexPermutation>& automorphisms) {
  const GraphSpec& spec = g.spec();
  std::map<VertexPermutation, StructuralAutomorphism> structural;
  for (const StructuralAutomorphism& phi : construct_structural_group(spec.alphabet())) {
    structural.emplace(to_vertex_permutation(phi, spec), phi);
  }
  nlohmann::json j;
  j["format_version"] = 1;
  j["spec"] = {{"k1", spec.k1}, {"k2", spec.k2}, {"a", spec.a}};
  j["count"] = automorphisms.size();
  nlohmann::json list = nlohmann::json::array();
  for (const VertexPermutation& perm : automorphisms) {
    nlohmann::json entry;
    entry["perm"] = perm;
    const auto it = structural.find(perm);
    if (it != structural.end()) {
      entry["structural"] = {{"xi", it->second.xi}, {"reversed", it->second.reversed}};
    } else {
      entry["structural"] = nullptr;
    }
    list.push_back(std::move(entry));
  }
  j["automorphisms"] = std::move(list);
  return j.dump(2) + "\n";
}

}  // namespace levgraph
