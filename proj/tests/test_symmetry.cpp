#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"
#include "levgraph/edit_distance.hpp"
#include "levgraph/symmetry.hpp"
#include "oracle.hpp"

using namespace levgraph;

namespace {

LevString lit(const std::string& text, int a = 10) {
  return parse_string(text, Alphabet(a));
}

bool is_identity(const VertexPermutation& perm) {
  for (std::size_t v = 0; v < perm.size(); ++v) {
    if (perm[v] != static_cast<std::int32_t>(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("apply_automorphism") {
  const StructuralAutomorphism reversal{{0, 1}, true};
  const StructuralAutomorphism swap{{1, 0}, false};
  CHECK(apply_automorphism(reversal, lit("001")) == lit("100"));
  CHECK(apply_automorphism(swap, lit("001")) == lit("110"));
  CHECK(apply_automorphism(reversal, {}).empty());
  // Reversal happens before the character map.
  const StructuralAutomorphism both{{1, 0}, true};
  CHECK(apply_automorphism(both, lit("001")) == lit("011"));
  CHECK_THROWS_AS(apply_automorphism(swap, lit("2", 3)), std::invalid_argument);
}

TEST_CASE("structural composition and inverse") {
  std::mt19937 rng(17);
  const Alphabet alphabet(4);
  const auto group = construct_structural_group(alphabet);
  const auto id = StructuralAutomorphism::identity(alphabet);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& f = group[rng() % group.size()];
    const auto& g = group[rng() % group.size()];
    const LevString w = testutil::random_string(rng, 1 + trial % 7, 4);
    CHECK(apply_automorphism(f.compose(g), w) ==
          apply_automorphism(f, apply_automorphism(g, w)));
    CHECK(f.compose(f.inverse()) == id);
    CHECK(f.inverse().compose(f) == id);
  }
}

TEST_CASE("structural automorphisms preserve edit distance") {
  SUBCASE("exhaustive over the 31-vertex instance, binary alphabet") {
    const auto all = enumerate_strings(GraphSpec(0, 4, 2));
    for (const StructuralAutomorphism& phi : construct_structural_group(Alphabet(2))) {
      for (const LevString& u : all) {
        for (const LevString& v : all) {
          REQUIRE(edit_distance_dp(apply_automorphism(phi, u), apply_automorphism(phi, v)) ==
                  edit_distance_dp(u, v));
        }
      }
    }
  }
  SUBCASE("random pairs under random maps, larger alphabet") {
    std::mt19937 rng(23);
    const auto group = construct_structural_group(Alphabet(3));
    std::uniform_int_distribution<int> len(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
      const auto& phi = group[rng() % group.size()];
      const LevString u = testutil::random_string(rng, len(rng), 3);
      const LevString v = testutil::random_string(rng, len(rng), 3);
      CHECK(edit_distance_dp(apply_automorphism(phi, u), apply_automorphism(phi, v)) ==
            edit_distance_dp(u, v));
    }
  }
}

TEST_CASE("construct_structural_group") {
  CHECK(construct_structural_group(Alphabet(2)).size() == 4);
  CHECK(construct_structural_group(Alphabet(3)).size() == 12);
  CHECK(construct_structural_group(Alphabet(4)).size() == 48);
  const auto group = construct_structural_group(Alphabet(2));
  CHECK(group[0] == StructuralAutomorphism::identity(Alphabet(2)));
  CHECK(group[0].reversed == false);
  CHECK(group[2].reversed == true);
  // Closure under composition and inverse.
  for (const auto& f : group) {
    CHECK(std::count(group.begin(), group.end(), f.inverse()) == 1);
    for (const auto& g : group) {
      CHECK(std::count(group.begin(), group.end(), f.compose(g)) == 1);
    }
  }
}

TEST_CASE("vertex permutation conversion and algebra") {
  const GraphSpec spec(0, 3, 2);
  const auto group = construct_structural_group(spec.alphabet());
  std::set<VertexPermutation> perms;
  for (const auto& phi : group) {
    const VertexPermutation perm = to_vertex_permutation(phi, spec);
    perms.insert(perm);
    CHECK(is_identity(compose(perm, inverse_permutation(perm))));
  }
  CHECK(perms.size() == 4);
}

TEST_CASE("enumerate_automorphisms counts") {
  CHECK(enumerate_automorphisms(LevGraph::build(GraphSpec(0, 3, 2))).size() == 4);
  CHECK(enumerate_automorphisms(LevGraph::build(GraphSpec(1, 3, 3))).size() == 12);
  CHECK(enumerate_automorphisms(LevGraph::build(GraphSpec(0, 1, 2))).size() == 6);
  CHECK(enumerate_automorphisms(LevGraph::build(GraphSpec(0, 1, 3))).size() == 24);
  CHECK(enumerate_automorphisms(LevGraph::build(GraphSpec(2, 2, 2))).size() == 8);
  CHECK(enumerate_automorphisms(LevGraph::build(GraphSpec(2, 3, 2))).size() == 4);
  CHECK(enumerate_automorphisms(LevGraph::build(GraphSpec(1, 2, 4))).size() == 48);
}

TEST_CASE("enumerated automorphisms form a group and are sorted") {
  for (const GraphSpec spec : {GraphSpec(0, 3, 2), GraphSpec(0, 2, 2)}) {
    const LevGraph g = LevGraph::build(spec);
    const auto autos = enumerate_automorphisms(g);
    CHECK(std::is_sorted(autos.begin(), autos.end()));
    CHECK(is_identity(autos.front()));
    const std::set<VertexPermutation> group(autos.begin(), autos.end());
    CHECK(group.size() == autos.size());
    for (const auto& f : autos) {
      CHECK(group.count(inverse_permutation(f)) == 1);
      for (const auto& h : autos) {
        CHECK(group.count(compose(f, h)) == 1);
      }
      // Adjacency must actually be preserved.
      for (StringRank u = 0; u < g.vertex_count(); ++u) {
        for (std::int32_t v : g.neighbors(u)) {
          CHECK(g.has_edge(f[u], f[v]));
        }
      }
    }
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_automorphisms(LevGraph::build(GraphSpec(0, 6, 2))),
                  ResourceLimitError);
}

TEST_CASE("structural properties of enumerated automorphisms") {
  for (const GraphSpec spec : {GraphSpec(0, 3, 2), GraphSpec(1, 3, 3)}) {
    const LevGraph g = LevGraph::build(spec);
    const auto autos = enumerate_automorphisms(g);
    std::vector<Symbol> identity(spec.a);
    std::iota(identity.begin(), identity.end(), 0);
    for (const VertexPermutation& sigma : autos) {
      // Lengths are preserved.
      for (StringRank v = 0; v < g.vertex_count(); ++v) {
        CHECK(g.vertex(sigma[v]).size() == g.vertex(v).size());
      }
      // The one-run strings of full length map among themselves, which
      // pins down a character bijection xi.
      std::vector<Symbol> xi(spec.a, -1);
      for (Symbol c = 0; c < spec.a; ++c) {
        const LevString image = g.vertex(sigma[string_rank(LevString(spec.k2, c), spec)]);
        REQUIRE(run_count(image) == 1);
        REQUIRE(static_cast<int>(image.size()) == spec.k2);
        xi[c] = image[0];
      }
      std::vector<Symbol> sorted_xi = xi;
      std::sort(sorted_xi.begin(), sorted_xi.end());
      CHECK(sorted_xi == identity);
      // Character counts transform through xi.
      for (StringRank v = 0; v < g.vertex_count(); ++v) {
        const LevString u = g.vertex(v);
        const LevString image = g.vertex(sigma[v]);
        for (Symbol c = 0; c < spec.a; ++c) {
          CHECK(count_symbol(u, c, spec.alphabet()) ==
                count_symbol(image, xi[c], spec.alphabet()));
        }
        // Run counts are preserved at the top length.
        if (static_cast<int>(u.size()) == spec.k2) {
          CHECK(run_count(image) == run_count(u));
        }
      }
    }
  }
}

TEST_CASE("match_groups") {
  CHECK(match_groups(LevGraph::build(GraphSpec(0, 3, 2))));
  CHECK(match_groups(LevGraph::build(GraphSpec(2, 3, 2))));
  CHECK(match_groups(LevGraph::build(GraphSpec(1, 3, 3))));
  CHECK(match_groups(LevGraph::build(GraphSpec(1, 2, 4))));
  CHECK_THROWS_AS(match_groups(LevGraph::build(GraphSpec(2, 2, 2))), std::invalid_argument);
  CHECK_THROWS_AS(match_groups(LevGraph::build(GraphSpec(0, 1, 3))), std::invalid_argument);
}

TEST_CASE("build_determining_set") {
  SUBCASE("long binary strings need a single node") {
    const DeterminingSet d = build_determining_set(GraphSpec(0, 3, 2));
    REQUIRE(d.nodes.size() == 1);
    CHECK(d.nodes[0] == lit("001"));
  }
  SUBCASE("length-two strings over three symbols") {
    const DeterminingSet d = build_determining_set(GraphSpec(0, 2, 3));
    REQUIRE(d.nodes.size() == 2);
    CHECK(d.nodes[0] == lit("01"));
    CHECK(d.nodes[1] == lit("12"));
  }
  SUBCASE("wide alphabets cover all but the last character") {
    const DeterminingSet d = build_determining_set(GraphSpec(0, 3, 5));
    REQUIRE(d.nodes.size() == 2);  // ceil(5/3)
    CHECK(d.nodes[0] == lit("001"));
    CHECK(d.nodes[1] == lit("233"));
    std::set<Symbol> used;
    for (const LevString& node : d.nodes) used.insert(node.begin(), node.end());
    for (Symbol c = 0; c <= 3; ++c) CHECK(used.count(c) == 1);
  }
  SUBCASE("mid-size alphabet single node") {
    const DeterminingSet d = build_determining_set(GraphSpec(0, 4, 3));
    REQUIRE(d.nodes.size() == 1);
    CHECK(d.nodes[0] == lit("0001"));
  }
  SUBCASE("sizes match ceil(a/k2) across the regime") {
    for (int a = 2; a <= 7; ++a) {
      for (int k2 = 2; k2 <= 5; ++k2) {
        if (k2 == 2 && a == 2) continue;
        const DeterminingSet d = build_determining_set(GraphSpec(0, k2, a));
        CHECK(static_cast<int>(d.nodes.size()) == (a + k2 - 1) / k2);
        for (const LevString& node : d.nodes) {
          CHECK(static_cast<int>(node.size()) == k2);
        }
      }
    }
  }
  SUBCASE("excluded regimes are rejected") {
    CHECK_THROWS_AS(build_determining_set(GraphSpec(0, 2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(build_determining_set(GraphSpec(3, 3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(build_determining_set(GraphSpec(0, 1, 3)), std::invalid_argument);
  }
}

TEST_CASE("is_determining") {
  const LevGraph g = LevGraph::build(GraphSpec(0, 2, 2));
  CHECK(is_determining(g, {lit("01"), lit("00")}));
  CHECK(!is_determining(g, {}));
  CHECK(!is_determining(g, {lit("0")}));
  CHECK_THROWS_AS(is_determining(g, {lit("000")}), std::invalid_argument);

  SUBCASE("a single full-length run never determines a wider alphabet") {
    const LevGraph h = LevGraph::build(GraphSpec(0, 3, 3));
    CHECK(!is_determining(h, {lit("000")}));
  }
  SUBCASE("the closed-form sets are determining") {
    for (const GraphSpec spec : {GraphSpec(0, 3, 2), GraphSpec(0, 2, 3), GraphSpec(1, 3, 2)}) {
      const LevGraph gg = LevGraph::build(spec);
      CHECK(is_determining(gg, build_determining_set(spec).nodes));
    }
  }
}

TEST_CASE("exact_determining_number") {
  CHECK(exact_determining_number(LevGraph::build(GraphSpec(0, 2, 2))).size == 2);
  CHECK(exact_determining_number(LevGraph::build(GraphSpec(0, 3, 2))).size == 1);
  CHECK(exact_determining_number(LevGraph::build(GraphSpec(0, 1, 2))).size == 2);
  CHECK(exact_determining_number(LevGraph::build(GraphSpec(0, 1, 3))).size == 3);
  CHECK(exact_determining_number(LevGraph::build(GraphSpec(1, 2, 2))).size == 2);

  SUBCASE("witnesses verify and respect the character lower bounds") {
    for (const GraphSpec spec : {GraphSpec(0, 3, 2), GraphSpec(0, 2, 3), GraphSpec(0, 3, 3)}) {
      const LevGraph g = LevGraph::build(spec);
      const SubsetSearchResult result = exact_determining_number(g);
      std::vector<LevString> nodes;
      std::set<Symbol> used;
      for (StringRank r : result.witness) {
        nodes.push_back(g.vertex(r));
        used.insert(nodes.back().begin(), nodes.back().end());
      }
      CHECK(is_determining(g, nodes));
      // At least a-1 characters appear in any determining set here.
      CHECK(static_cast<int>(used.size()) >= spec.a - 1);
      // Never below ceil(a/k2) in this regime.
      CHECK(result.size >= (spec.a + spec.k2 - 1) / spec.k2);
    }
  }
}

TEST_CASE("automorphism JSON export") {
  const LevGraph g = LevGraph::build(GraphSpec(0, 3, 2));
  const auto autos = enumerate_automorphisms(g);
  const auto j = nlohmann::json::parse(automorphisms_to_json(g, autos));
  CHECK(j["format_version"] == 1);
  CHECK(j["count"] == 4);
  REQUIRE(j["automorphisms"].size() == 4);
  for (const auto& entry : j["automorphisms"]) {
    CHECK(entry["perm"].size() == 15);
    CHECK(!entry["structural"].is_null());
    CHECK(entry["structural"]["xi"].size() == 2);
  }
}
