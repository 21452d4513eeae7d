#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "levgraph/edit_distance.hpp"
#include "oracle.hpp"

using namespace levgraph;

namespace {

LevString lit(const std::string& text, int a = 10) {
  return parse_string(text, Alphabet(a));
}

// All strings of length 0..max_len over {0..a-1}, in rank order.
std::vector<LevString> strings_up_to(int max_len, int a) {
  return enumerate_strings(GraphSpec(0, max_len, a));
}

}  // namespace

TEST_CASE("edit_distance_dp fixtures") {
  CHECK(edit_distance_dp(lit("001"), lit("01")) == 1);
  CHECK(edit_distance_dp(lit("010"), lit("101")) == 2);
  CHECK(edit_distance_dp(lit("01121"), lit("01121")) == 0);
  CHECK(edit_distance_dp({}, lit("0110")) == 4);
  CHECK(edit_distance_dp(lit("0110"), {}) == 4);
  CHECK(edit_distance_dp({}, {}) == 0);
}

TEST_CASE("edit_distance_dp agrees with the recursive definition") {
  for (int a : {2, 3}) {
    const auto all = strings_up_to(4, a);
    for (const LevString& u : all) {
      for (const LevString& v : all) {
        CHECK(edit_distance_dp(u, v) == testutil::naive_edit_distance(u, v));
      }
    }
  }
}

TEST_CASE("edit_distance_dp metric axioms, exhaustive") {
  const auto all = strings_up_to(5, 2);
  const int n = static_cast<int>(all.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d[i][j] = edit_distance_dp(all[i], all[j]);
  }
  for (int i = 0; i < n; ++i) {
    CHECK(d[i][i] == 0);
    for (int j = 0; j < n; ++j) {
      CHECK(d[i][j] == d[j][i]);
      if (i != j) CHECK(d[i][j] > 0);
      CHECK(d[i][j] <= std::max(all[i].size(), all[j].size()));
      if (all[i].size() == all[j].size()) {
        CHECK(d[i][j] <= hamming_distance(all[i], all[j]));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        CHECK(d[i][k] <= d[i][j] + d[j][k]);
      }
    }
  }
}

TEST_CASE("edit_distance_banded") {
  SUBCASE("fixtures") {
    CHECK(edit_distance_banded(lit("001"), lit("01")) == 1);
    CHECK(edit_distance_banded({}, lit("012", 3)) == 3);
    CHECK(edit_distance_banded(lit("0101"), lit("0101")) == 0);
  }
  SUBCASE("agrees with the full table on random pairs") {
    std::mt19937 rng(2024);
    for (int a : {2, 4, 16}) {
      std::uniform_int_distribution<int> len(0, 64);
      for (int trial = 0; trial < 3400; ++trial) {
        const LevString u = testutil::random_string(rng, len(rng), a);
        const LevString v = testutil::random_string(rng, len(rng), a);
        REQUIRE(edit_distance_banded(u, v) == edit_distance_dp(u, v));
      }
    }
  }
  SUBCASE("agrees on structured pairs that stress the band edges") {
    // Run-heavy pairs and pairs sharing long prefixes keep optimal paths
    // close to, or exactly on, the band boundary.
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        LevString u(i, 0), v(j, 0);
        u.insert(u.end(), 20 - i, 1);
        v.insert(v.end(), j, 1);
        REQUIRE(edit_distance_banded(u, v) == edit_distance_dp(u, v));
      }
    }
    std::mt19937 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
      std::uniform_int_distribution<int> len(0, 30);
      const LevString shared = testutil::random_string(rng, len(rng), 2);
      LevString u = shared, v = shared;
      const LevString tail_u = testutil::random_string(rng, len(rng) / 3, 2);
      const LevString tail_v = testutil::random_string(rng, len(rng) / 3, 2);
      u.insert(u.end(), tail_u.begin(), tail_u.end());
      v.insert(v.end(), tail_v.begin(), tail_v.end());
      REQUIRE(edit_distance_banded(u, v) == edit_distance_dp(u, v));
    }
  }
}

TEST_CASE("hamming_distance") {
  CHECK(hamming_distance(lit("010"), lit("101")) == 3);
  CHECK(hamming_distance(lit("0110"), lit("0110")) == 0);
  CHECK(hamming_distance({}, {}) == 0);
  CHECK_THROWS_AS(hamming_distance(lit("01"), lit("011")), std::invalid_argument);
  // Alternating strings and their flips: maximal Hamming distance but edit
  // distance at most 2.
  for (int k = 3; k <= 12; ++k) {
    LevString u(k), v(k);
    for (int i = 0; i < k; ++i) {
      u[i] = i % 2;
      v[i] = 1 - i % 2;
    }
    CHECK(hamming_distance(u, v) == k);
    CHECK(edit_distance_dp(u, v) <= 2);
  }
}

TEST_CASE("dist_one_run") {
  SUBCASE("fixtures") {
    CHECK(dist_one_run(lit("01121"), 1, 3) == 2);
    CHECK(edit_distance_dp(lit("01121"), lit("111")) == 2);
    CHECK(dist_one_run({}, 0, 5) == 5);
    CHECK(dist_one_run(lit("2222", 3), 2, 4) == 0);
    CHECK(dist_one_run(lit("01"), 0, 0) == 2);
    CHECK_THROWS_AS(dist_one_run(lit("01"), 0, -1), std::invalid_argument);
  }
  SUBCASE("exhaustive agreement with the full table") {
    for (int a : {2, 3}) {
      for (const LevString& w : strings_up_to(7, a)) {
        for (Symbol alpha = 0; alpha < a; ++alpha) {
          for (int l = 0; l <= 8; ++l) {
            const LevString target(l, alpha);
            REQUIRE(dist_one_run(w, alpha, l) == edit_distance_dp(w, target));
          }
        }
      }
    }
  }
}

TEST_CASE("TwoRunPattern") {
  SUBCASE("normalization") {
    CHECK(TwoRunPattern::make(0, 0, 1, 3) == TwoRunPattern::make(1, 3, 1, 0));
    CHECK(TwoRunPattern::make(1, 2, 1, 3) == TwoRunPattern::make(1, 5, 0, 0));
    CHECK(TwoRunPattern::make(0, 2, 1, 0).beta == 0);
    CHECK_THROWS_AS(TwoRunPattern::make(0, -1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(TwoRunPattern::make(-1, 1, 1, 2), std::invalid_argument);
  }
  SUBCASE("from_string and expand") {
    CHECK(TwoRunPattern::from_string({}).length() == 0);
    CHECK(TwoRunPattern::from_string(lit("000")) == TwoRunPattern::make(0, 3, 0, 0));
    CHECK(TwoRunPattern::from_string(lit("0011")) == TwoRunPattern::make(0, 2, 1, 2));
    CHECK_THROWS_AS(TwoRunPattern::from_string(lit("010")), std::invalid_argument);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> len(0, 9);
      const auto p = TwoRunPattern::make(trial % 4, len(rng), (trial + 1) % 4, len(rng));
      CHECK(TwoRunPattern::from_string(p.expand()) == p);
      CHECK(run_count(p.expand()) <= 2);
    }
  }
}

TEST_CASE("dist_two_run_minform") {
  SUBCASE("fixtures") {
    CHECK(dist_two_run_minform(lit("001"), TwoRunPattern::make(0, 1, 1, 1)) == 1);
    CHECK(dist_two_run_minform(lit("0110"), TwoRunPattern::make(0, 0, 1, 0)) == 4);
    CHECK(dist_two_run_minform({}, TwoRunPattern::make(0, 2, 1, 3)) == 5);
  }
  SUBCASE("exhaustive agreement with the full table, binary alphabet") {
    for (const LevString& w : strings_up_to(10, 2)) {
      for (Symbol alpha = 0; alpha < 2; ++alpha) {
        for (int l = 0; l + 0 <= 10; ++l) {
          for (int r = 0; l + r <= 10; ++r) {
            const auto p = TwoRunPattern::make(alpha, l, 1 - alpha, r);
            REQUIRE(dist_two_run_minform(w, p) == edit_distance_dp(w, p.expand()));
          }
        }
      }
    }
  }
}

TEST_CASE("dist_two_run_linear") {
  SUBCASE("fixtures") {
    CHECK(dist_two_run_linear(lit("001"), TwoRunPattern::make(0, 1, 1, 1)) == 1);
    CHECK(edit_distance_dp(lit("010"), lit("10")) == 1);
    CHECK(dist_two_run_linear(lit("010"), TwoRunPattern::make(1, 1, 0, 1)) == 1);
    CHECK(dist_two_run_linear({}, TwoRunPattern::make(0, 2, 1, 3)) == 5);
    CHECK(dist_two_run_linear(lit("0011"), TwoRunPattern::make(0, 2, 1, 2)) == 0);
  }
  SUBCASE("exhaustive agreement with minform and the full table") {
    for (int a : {2, 3}) {
      for (const LevString& w : strings_up_to(8, a)) {
        for (Symbol alpha = 0; alpha < a; ++alpha) {
          for (Symbol beta = 0; beta < a; ++beta) {
            if (alpha == beta) continue;
            for (int l = 0; l <= 8; ++l) {
              for (int r = 0; l + r <= 8; ++r) {
                const auto p = TwoRunPattern::make(alpha, l, beta, r);
                const int linear = dist_two_run_linear(w, p);
                REQUIRE(linear == dist_two_run_minform(w, p));
                REQUIRE(linear == edit_distance_dp(w, p.expand()));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("dist_to_run_pattern") {
  SUBCASE("fixtures") {
    CHECK(dist_to_run_pattern(lit("010"), lit("011")) == 1);
    CHECK(dist_to_run_pattern(lit("0101"), {}) == 4);
    CHECK_THROWS_AS(dist_to_run_pattern(lit("0"), lit("010")), std::invalid_argument);
  }
  SUBCASE("equal lengths collapse to the Hamming distance") {
    for (int a : {2, 3}) {
      for (const LevString& u : strings_up_to(6, a)) {
        for (const LevString& v : strings_up_to(6, a)) {
          if (u.size() != v.size() || run_count(v) > 2) continue;
          const int h = hamming_distance(u, v);
          REQUIRE(edit_distance_dp(u, v) == h);
          REQUIRE(dist_to_run_pattern(u, v) == h);
        }
      }
    }
  }
  SUBCASE("random agreement with the full table") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10000; ++trial) {
      const int a = 2 + trial % 3;
      std::uniform_int_distribution<int> len(0, 40);
      std::uniform_int_distribution<int> sym(0, a - 1);
      const LevString w = testutil::random_string(rng, len(rng), a);
      const Symbol alpha = sym(rng);
      const Symbol beta = (alpha + 1 + trial % (a - 1)) % a;
      const auto p = TwoRunPattern::make(alpha, len(rng), beta, len(rng));
      const LevString v = p.expand();
      if (run_count(v) > 2) continue;
      REQUIRE(dist_to_run_pattern(w, v) == edit_distance_dp(w, v));
    }
  }
}
