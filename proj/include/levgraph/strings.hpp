#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace levgraph {

// Symbols are small non-negative integers in [0, a). A string is a plain
// symbol vector; the empty string is the empty vector.
using Symbol = int;
using LevString = std::vector<Symbol>;

// Index of a string in the (length ascending, then lexicographic)
// enumeration of all strings with length in [k1, k2].
using StringRank = std::int64_t;

// Thrown when an operation would exceed a configured size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Alphabet {0, ..., size-1}; size >= 2.
struct Alphabet {
  int size = 2;

  Alphabet() = default;
  explicit Alphabet(int size_in);

  bool contains(Symbol s) const { return s >= 0 && s < size; }
  bool operator==(const Alphabet&) const = default;
};

// Parameters (k1, k2, a) of one graph instance: all strings of length
// k1..k2 over an alphabet of size a, with edges at edit distance one.
struct GraphSpec {
  int k1 = 0;
  int k2 = 0;
  int a = 2;

  GraphSpec() = default;
  GraphSpec(int k1_in, int k2_in, int a_in);

  Alphabet alphabet() const { return Alphabet(a); }
  int delta() const { return k2 - k1 + 1; }
  bool contains_length(std::int64_t n) const { return n >= k1 && n <= k2; }

  // Sum of a^k over k1 <= k <= k2; throws std::overflow_error when the
  // count does not fit in 64 bits.
  std::int64_t vertex_count() const;

  bool operator==(const GraphSpec&) const = default;
};

// Number of occurrences of alpha in w.
int count_symbol(const LevString& w, Symbol alpha, Alphabet alphabet);

// Number of maximal blocks of a repeated symbol; 0 for the empty string.
int run_count(const LevString& w);

LevString prefix(const LevString& w, int n);
LevString suffix(const LevString& w, int n);

// Mutually inverse bijections between strings with length in [k1, k2] and
// the ranks 0 .. vertex_count-1.
StringRank string_rank(const LevString& w, const GraphSpec& spec);
LevString unrank(StringRank rank, const GraphSpec& spec);

// All strings of the spec in rank order.
std::vector<LevString> enumerate_strings(const GraphSpec& spec);

// Literal syntax shared by all text interfaces: a digit string for a <= 10
// ("01121"), comma separated integers for a > 10 ("0,11,3"), and "-" for
// the empty string.
LevString parse_string(const std::string& text, Alphabet alphabet);
std::string format_string(const LevString& w, Alphabet alphabet);

}  // namespace levgraph
