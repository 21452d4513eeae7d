#pragma once

#include "levgraph/strings.hpp"

namespace levgraph {

// The string alpha^alpha_len beta^beta_len, which has at most two runs.
// Instances are normalized so that beta_len > 0 implies alpha_len > 0 and
// alpha != beta; degenerate inputs (empty runs, alpha == beta) collapse to
// a single merged run.
struct TwoRunPattern {
  Symbol alpha = 0;
  int alpha_len = 0;
  Symbol beta = 0;
  int beta_len = 0;

  static TwoRunPattern make(Symbol alpha, int alpha_len, Symbol beta, int beta_len);

  // Decomposes an arbitrary string with at most two runs; throws
  // std::invalid_argument when the string has three or more runs.
  static TwoRunPattern from_string(const LevString& v);

  LevString expand() const;
  int length() const { return alpha_len + beta_len; }
  TwoRunPattern normalized() const { return make(alpha, alpha_len, beta, beta_len); }

  bool operator==(const TwoRunPattern&) const = default;
};

// Exact edit distance (substitutions + indels) via the full dynamic
// programming table, kept to two rows. Reference kernel for everything else.
int edit_distance_dp(const LevString& u, const LevString& v);

// Exact edit distance restricted to a growing diagonal band, doubling the
// band until the result is certified. Agrees with edit_distance_dp on all
// inputs; much faster when the distance is small.
int edit_distance_banded(const LevString& u, const LevString& v);

// Number of mismatched positions; requires |u| == |v|.
int hamming_distance(const LevString& u, const LevString& v);

// Distance from w to the one-run string alpha^len, by the closed form
// max{|w|, len} - min{N_alpha(w), len}. O(|w|).
int dist_one_run(const LevString& w, Symbol alpha, int len);

// Distance from w to alpha^l beta^r by minimizing
// dist(prefix, alpha^l) + dist(suffix, beta^r) over the admissible split
// range. Reference implementation; O(|w|^2).
int dist_two_run_minform(const LevString& w, const TwoRunPattern& p);

// Same value as dist_two_run_minform in a single O(|w|) pass that updates
// the suffix/prefix match counts incrementally across the split range.
int dist_two_run_linear(const LevString& w, const TwoRunPattern& p);

// Distance from w to an arbitrary string v with at most two runs, routed
// through the cheapest applicable kernel (Hamming when |w| == |v|, the
// linear pass otherwise). Throws std::invalid_argument when v has more
// than two runs.
int dist_to_run_pattern(const LevString& w, const LevString& v);

}  // namespace levgraph
