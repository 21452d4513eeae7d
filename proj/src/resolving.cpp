#include "levgraph/resolving.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "json.hpp"
#include "levgraph/edit_distance.hpp"
#include "levgraph/parallel.hpp"

namespace levgraph {

namespace {

// |R_{k,a}|: 1 when k = 0, floor(a/2)*(k+1) otherwise.
std::int64_t per_length_size(int k, int a) {
  return k == 0 ? 1 : static_cast<std::int64_t>(a / 2) * (k + 1);
}

std::int64_t saturating_pow(std::int64_t base, int exp) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > kMax / base) return kMax;
    out *= base;
  }
  return out;
}

}  // namespace

std::string ResolvingProvenance::label() const {
  switch (kind) {
    case Kind::kFullLength:
      return "R0";
    case Kind::kShifted:
      return "R1(i=" + std::to_string(shift) + ",len=" + std::to_string(base_length) + ")";
    case Kind::kOddTail:
      return "Rk1(len=" + std::to_string(base_length) + ")";
  }
  return {};
}

std::vector<LevString> build_Rka(int k, Alphabet alphabet) {
  if (k < 0) throw std::invalid_argument("length must be nonnegative");
  std::vector<LevString> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  out.reserve(static_cast<std::size_t>(per_length_size(k, alphabet.size)));
  for (Symbol n = 0; 2 * n + 1 < alphabet.size; ++n) {
    for (int i = 0; i <= k; ++i) {
      LevString w;
      w.reserve(k);
      w.insert(w.end(), i, 2 * n);
      w.insert(w.end(), k - i, 2 * n + 1);
      out.push_back(std::move(w));
    }
  }
  return out;
}

LevString shift_chars(const LevString& w, int shift, Alphabet alphabet) {
  const int a = alphabet.size;
  const int offset = ((shift % a) + a) % a;
  LevString out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (!alphabet.contains(s)) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet of size " + std::to_string(a));
    }
    out.push_back((s + offset) % a);
  }
  return out;
}

ResolvingSet build_resolving_set(const GraphSpec& spec) {
  ResolvingSet set;
  set.spec = spec;
  std::map<LevString, std::size_t> index;
  const auto add = [&](LevString node, ResolvingProvenance tag) {
    ++set.raw_size;
    const auto it = index.find(node);
    if (it != index.end()) {
      set.provenance[it->second].push_back(tag);
      return;
    }
    index.emplace(node, set.nodes.size());
    set.nodes.push_back(std::move(node));
    set.provenance.push_back({tag});
  };

  const Alphabet alphabet = spec.alphabet();
  for (Symbol c = 0; c < spec.a; ++c) {
    add(LevString(spec.k2, c), {ResolvingProvenance::Kind::kFullLength, 0, spec.k2});
  }
  const int half = (spec.k2 - spec.k1) / 2;
  for (int i = 0; i <= half; ++i) {
    const int len = spec.k2 - 2 * i;
    for (const LevString& node : build_Rka(len, alphabet)) {
      add(shift_chars(node, i, alphabet),
          {ResolvingProvenance::Kind::kShifted, i, len});
    }
  }
  if ((spec.k2 - spec.k1) % 2 == 1) {
    for (const LevString& node : build_Rka(spec.k1, alphabet)) {
      add(node, {ResolvingProvenance::Kind::kOddTail, 0, spec.k1});
    }
  }
  return set;
}

std::int64_t resolving_set_size_bound(const GraphSpec& spec) {
  const std::int64_t half_a = spec.a / 2;
  std::int64_t bound = spec.a + half_a * (spec.k1 + 1);
  for (int i = 0; i <= (spec.k2 - spec.k1) / 2; ++i) {
    bound += half_a * (spec.k2 - 2 * i + 1);
  }
  return bound;
}

std::int64_t resolving_set_raw_size(const GraphSpec& spec) {
  std::int64_t total = spec.a;
  for (int i = 0; i <= (spec.k2 - spec.k1) / 2; ++i) {
    total += per_length_size(spec.k2 - 2 * i, spec.a);
  }
  if ((spec.k2 - spec.k1) % 2 == 1) total += per_length_size(spec.k1, spec.a);
  return total;
}

ResolveCheck is_resolving(const LevGraph& g, const std::vector<LevString>& nodes) {
  const std::int64_t n = g.vertex_count();
  std::vector<StringRank> ranks;
  ranks.reserve(nodes.size());
  for (const LevString& node : nodes) ranks.push_back(string_rank(node, g.spec()));

  std::vector<std::vector<int>> rows(ranks.size());
  parallel_for(0, static_cast<std::int64_t>(ranks.size()),
               [&](std::int64_t lo, std::int64_t hi) {
                 for (std::int64_t i = lo; i < hi; ++i) {
                   rows[i] = geodesic_bfs(g, ranks[i]);
                 }
               });

  std::map<std::vector<int>, StringRank> seen;
  std::vector<int> profile(ranks.size());
  for (StringRank v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rows.size(); ++i) profile[i] = rows[i][v];
    const auto [it, inserted] = seen.emplace(profile, v);
    if (!inserted) {
      return {false, std::make_pair(it->second, v)};
    }
  }
  return {true, std::nullopt};
}

EmbeddingVector embed(const GraphSpec& spec, const ResolvingSet& set, const LevString& u) {
  if (!spec.contains_length(static_cast<std::int64_t>(u.size()))) {
    throw std::invalid_argument("string length " + std::to_string(u.size()) +
                                " outside [" + std::to_string(spec.k1) + ", " +
                                std::to_string(spec.k2) + "]");
  }
  EmbeddingVector coords;
  coords.reserve(set.nodes.size());
  // Every node has at most two runs, so the geodesic distance is the
  // run-pattern distance in the regime where geodesic = edit, and the
  // Hamming distance (same dispatch) when k1 = k2.
  for (const LevString& node : set.nodes) {
    coords.push_back(dist_to_run_pattern(u, node));
  }
  return coords;
}

SubsetSearchResult exact_metric_dimension(const LevGraph& g, int max_size,
                                          std::int64_t max_vertices) {
  const std::int64_t n = g.vertex_count();
  if (n > max_vertices) {
    throw ResourceLimitError("vertex count " + std::to_string(n) +
                             " exceeds the exhaustive-search guard of " +
                             std::to_string(max_vertices) + " vertices");
  }
  const int count = static_cast<int>(n);
  if (max_size < 0 || max_size > count) max_size = count;

  std::vector<std::vector<int>> dist(count);
  for (int v = 0; v < count; ++v) dist[v] = geodesic_bfs(g, v);

  std::vector<int> order(count);
  const auto subset_resolves = [&](const std::vector<StringRank>& subset) {
    std::iota(order.begin(), order.end(), 0);
    const auto profile_less = [&](int x, int y) {
      for (StringRank s : subset) {
        if (dist[s][x] != dist[s][y]) return dist[s][x] < dist[s][y];
      }
      return false;
    };
    std::sort(order.begin(), order.end(), profile_less);
    for (int i = 0; i + 1 < count; ++i) {
      if (!profile_less(order[i], order[i + 1])) return false;
    }
    return true;
  };

  for (int size = 0; size <= max_size; ++size) {
    std::vector<StringRank> subset(size);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (subset_resolves(subset)) return {size, subset};
      // Advance to the next combination in lexicographic order.
      int pos = size - 1;
      while (pos >= 0 && subset[pos] == count - size + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int i = pos + 1; i < size; ++i) subset[i] = subset[i - 1] + 1;
    }
  }
  throw ResourceLimitError("no resolving set of size at most " +
                           std::to_string(max_size) + " exists");
}

bool check_dimension_bounds(const GraphSpec& spec, int beta) {
  if (beta < 1) throw std::invalid_argument("beta must be at least 1");
  const bool information_bound =
      saturating_pow(spec.a, spec.k2) <= saturating_pow(spec.k2 + 1, beta);
  const ResolvingSet set = build_resolving_set(spec);
  return information_bound && beta <= set.size();
}

std::string resolving_set_to_text(const ResolvingSet& set) {
  const Alphabet alphabet = set.spec.alphabet();
  std::string out;
  for (std::size_t i = 0; i < set.nodes.size(); ++i) {
    out += format_string(set.nodes[i], alphabet);
    out += "  # ";
    for (std::size_t j = 0; j < set.provenance[i].size(); ++j) {
      if (j > 0) out += ", ";
      out += set.provenance[i][j].label();
    }
    out += "\n";
  }
  return out;
}

namespace {

nlohmann::json spec_json(const GraphSpec& spec) {
  return {{"k1", spec.k1}, {"k2", spec.k2}, {"a", spec.a}};
}

nlohmann::json provenance_json(const ResolvingProvenance& p) {
  switch (p.kind) {
    case ResolvingProvenance::Kind::kFullLength:
      return {{"kind", "R0"}};
    case ResolvingProvenance::Kind::kShifted:
      return {{"kind", "R1"}, {"shift", p.shift}, {"length", p.base_length}};
    case ResolvingProvenance::Kind::kOddTail:
      return {{"kind", "Rk1"}, {"length", p.base_length}};
  }
  return {};
}

}  // namespace

std::string resolving_set_to_json(const ResolvingSet& set) {
  const Alphabet alphabet = set.spec.alphabet();
  nlohmann::json j;
  j["format_version"] = 1;
  j["spec"] = spec_json(set.spec);
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < set.nodes.size(); ++i) {
    nlohmann::json tags = nlohmann::json::array();
    for (const auto& p : set.provenance[i]) tags.push_back(provenance_json(p));
    nodes.push_back({{"string", format_string(set.nodes[i], alphabet)},
                     {"provenance", std::move(tags)}});
  }
  j["resolving_set"] = std::move(nodes);
  return j.dump(2) + "\n";
}

std::string embedding_to_json(const ResolvingSet& set, const std::vector<LevString>& inputs) {
  const Alphabet alphabet = set.spec.alphabet();
  nlohmann::json j;
  j["format_version"] = 1;
  j["spec"] = spec_json(set.spec);
  nlohmann::json names = nlohmann::json::array();
  for (const LevString& node : set.nodes) names.push_back(format_string(node, alphabet));
  j["resolving_set"] = std::move(names);
  nlohmann::json embeddings = nlohmann::json::object();
  for (const LevString& u : inputs) {
    embeddings[format_string(u, alphabet)] = embed(set.spec, set, u);
  }
  j["embeddings"] = std::move(embeddings);
  return j.dump(2) + "\n";
}

std::string embedding_to_csv(const ResolvingSet& set, const std::vector<LevString>& inputs) {
  const Alphabet alphabet = set.spec.alphabet();
  std::string out = "string";
  for (std::size_t i = 1; i <= set.nodes.size(); ++i) out += ",c" + std::to_string(i);
  out += "\n";
  for (const LevString& u : inputs) {
    const std::string literal = format_string(u, alphabet);
    // Comma-form literals (a > 10) need CSV quoting.
    if (literal.find(',') != std::string::npos) {
      out += "\"" + literal + "\"";
    } else {
      out += literal;
    }
    for (int c : embed(set.spec, set, u)) out += "," + std::to_string(c);
    out += "\n";
  }
  return out;
}

}  // namespace levgraph
