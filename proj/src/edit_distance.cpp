#include "levgraph/edit_distance.hpp"

#include <algorithm>
#include <limits>

namespace levgraph {

TwoRunPattern TwoRunPattern::make(Symbol alpha, int alpha_len, Symbol beta, int beta_len) {
  if (alpha_len < 0 || beta_len < 0) {
    throw std::invalid_argument("run lengths must be nonnegative");
  }
  if (alpha < 0 || beta < 0) {
    throw std::invalid_argument("run symbols must be nonnegative");
  }
  if (alpha_len == 0) {
    alpha = beta;
    alpha_len = beta_len;
    beta_len = 0;
  } else if (alpha == beta) {
    alpha_len += beta_len;
    beta_len = 0;
  }
  if (alpha_len == 0) alpha = 0;  // canonical empty pattern
  if (beta_len == 0) beta = alpha;
  return TwoRunPattern{alpha, alpha_len, beta, beta_len};
}

TwoRunPattern TwoRunPattern::from_string(const LevString& v) {
  const int runs = run_count(v);
  if (runs > 2) {
    throw std::invalid_argument("string has " + std::to_string(runs) +
                                " runs; at most two are supported");
  }
  if (v.empty()) return make(0, 0, 0, 0);
  const int n = static_cast<int>(v.size());
  int split = 1;
  while (split < n && v[split] == v[0]) ++split;
  if (split == n) return make(v[0], n, v[0], 0);
  return make(v[0], split, v[split], n - split);
}

LevString TwoRunPattern::expand() const {
  LevString out;
  out.reserve(static_cast<std::size_t>(length()));
  out.insert(out.end(), alpha_len, alpha);
  out.insert(out.end(), beta_len, beta);
  return out;
}

int edit_distance_dp(const LevString& u, const LevString& v) {
  const LevString* rows = &u;
  const LevString* cols = &v;
  if (rows->size() < cols->size()) std::swap(rows, cols);
  const int m = static_cast<int>(rows->size());
  const int n = static_cast<int>(cols->size());
  std::vector<int> row(n + 1);
  for (int j = 0; j <= n; ++j) row[j] = j;
  for (int i = 1; i <= m; ++i) {
    int diag = row[0];
    row[0] = i;
    const Symbol ri = (*rows)[i - 1];
    for (int j = 1; j <= n; ++j) {
      const int above = row[j];
      const int subst = diag + (ri != (*cols)[j - 1]);
      row[j] = std::min({subst, above + 1, row[j - 1] + 1});
      diag = above;
    }
  }
  return row[n];
}

int edit_distance_banded(const LevString& u, const LevString& v) {
  const LevString* longer = &u;
  const LevString* shorter = &v;
  if (longer->size() < shorter->size()) std::swap(longer, shorter);
  const int m = static_cast<int>(longer->size());
  const int n = static_cast<int>(shorter->size());
  if (n == 0) return m;
  const int gap = m - n;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;

  std::vector<int> prev(n + 1), curr(n + 1);
  for (int band = gap + 1;; band = std::min(band * 2, m + n)) {
    // Cells (i, j) worth visiting satisfy |i-j| + |gap-(i-j)| <= band.
    const int spread = (band - gap) / 2;
    int plo = 0;
    int phi = std::min(n, spread);
    for (int j = plo; j <= phi; ++j) prev[j] = j;
    for (int i = 1; i <= m; ++i) {
      const int jlo = std::max(0, i - gap - spread);
      const int jhi = std::min(n, i + spread);
      const Symbol li = (*longer)[i - 1];
      for (int j = jlo; j <= jhi; ++j) {
        if (j == 0) {
          curr[0] = i;
          continue;
        }
        const int up = (j >= plo && j <= phi) ? prev[j] : kInf;
        const int diag = (j - 1 >= plo && j - 1 <= phi) ? prev[j - 1] : kInf;
        const int left = (j - 1 >= jlo) ? curr[j - 1] : kInf;
        curr[j] = std::min({diag + (li != (*shorter)[j - 1]), up + 1, left + 1});
      }
      std::swap(prev, curr);
      plo = jlo;
      phi = jhi;
    }
    const int result = (n >= plo && n <= phi) ? prev[n] : kInf;
    if (result <= band || band >= m + n) return result;
  }
}

int hamming_distance(const LevString& u, const LevString& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("hamming distance requires equal lengths, got " +
                                std::to_string(u.size()) + " and " +
                                std::to_string(v.size()));
  }
  int mismatches = 0;
  for (std::size_t i = 0; i < u.size(); ++i) mismatches += (u[i] != v[i]);
  return mismatches;
}

int dist_one_run(const LevString& w, Symbol alpha, int len) {
  if (len < 0) throw std::invalid_argument("run length must be nonnegative");
  if (alpha < 0) throw std::invalid_argument("run symbol must be nonnegative");
  int matches = 0;
  for (Symbol s : w) matches += (s == alpha);
  const int k = static_cast<int>(w.size());
  return std::max(k, len) - std::min(matches, len);
}

int dist_two_run_minform(const LevString& w, const TwoRunPattern& pattern) {
  const TwoRunPattern p = pattern.normalized();
  if (p.beta_len == 0) return dist_one_run(w, p.alpha, p.alpha_len);
  const int k = static_cast<int>(w.size());
  const int l = p.alpha_len;
  const int r = p.beta_len;
  const int i0 = std::max(0, std::min(l, k - r));
  const int i1 = std::min(k, std::max(l, k - r));
  int best = std::numeric_limits<int>::max();
  for (int i = i0; i <= i1; ++i) {
    const int cost = dist_one_run(prefix(w, i), p.alpha, l) +
                     dist_one_run(suffix(w, k - i), p.beta, r);
    best = std::min(best, cost);
  }
  return best;
}

int dist_two_run_linear(const LevString& w, const TwoRunPattern& pattern) {
  const TwoRunPattern p = pattern.normalized();
  if (p.beta_len == 0) return dist_one_run(w, p.alpha, p.alpha_len);
  const int k = static_cast<int>(w.size());
  const int l = p.alpha_len;
  const int r = p.beta_len;
  if (k == 0) return l + r;

  const int i0 = std::max(0, std::min(l, k - r));
  const int i1 = std::min(k, std::max(l, k - r));
  int prefix_matches = 0;  // alpha count in w_1..w_i
  int suffix_matches = 0;  // beta count in w_{i+1}..w_k
  for (int i = 0; i < i0; ++i) prefix_matches += (w[i] == p.alpha);
  for (int i = i0; i < k; ++i) suffix_matches += (w[i] == p.beta);

  const auto shortage = [](int x) { return x > 0 ? x : 0; };  // (|x| + x) / 2
  int f2 = shortage(l - prefix_matches) + shortage(r - suffix_matches);
  int best = f2;
  for (int i = i0 + 1; i <= i1; ++i) {
    const Symbol c = w[i - 1];
    if (c == p.beta) {
      if (suffix_matches <= r) ++f2;
      --suffix_matches;
    }
    if (c == p.alpha && prefix_matches < l) {
      --f2;
      best = std::min(best, f2);
      ++prefix_matches;
    }
  }
  const int f1 = std::max(k - l - r, 0);
  return f1 + best;
}

int dist_to_run_pattern(const LevString& w, const LevString& v) {
  const TwoRunPattern p = TwoRunPattern::from_string(v);
  // Equal lengths: the edit distance to a string with at most two runs is
  // the Hamming distance.
  if (w.size() == v.size()) return hamming_distance(w, v);
  return dist_two_run_linear(w, p);
}

}  // namespace levgraph
