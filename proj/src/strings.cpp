#include "levgraph/strings.hpp"

#include <limits>

namespace levgraph {

namespace {

std::int64_t checked_pow(int base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::int64_t>::max() / base) {
      throw std::overflow_error("string count overflows the 64-bit range");
    }
    out *= base;
  }
  return out;
}

}  // namespace

Alphabet::Alphabet(int size_in) : size(size_in) {
  if (size < 2) {
    throw std::invalid_argument("alphabet size must be at least 2, got " +
                                std::to_string(size));
  }
}

GraphSpec::GraphSpec(int k1_in, int k2_in, int a_in) : k1(k1_in), k2(k2_in), a(a_in) {
  if (k1 < 0 || k1 > k2) {
    throw std::invalid_argument("invalid length range [" + std::to_string(k1) +
                                ", " + std::to_string(k2) + "]");
  }
  Alphabet validated(a);
  (void)validated;
}

std::int64_t GraphSpec::vertex_count() const {
  std::int64_t total = 0;
  for (int k = k1; k <= k2; ++k) {
    const std::int64_t block = checked_pow(a, k);
    if (total > std::numeric_limits<std::int64_t>::max() - block) {
      throw std::overflow_error("vertex count overflows the 64-bit range");
    }
    total += block;
  }
  return total;
}

int count_symbol(const LevString& w, Symbol alpha, Alphabet alphabet) {
  if (!alphabet.contains(alpha)) {
    throw std::invalid_argument("symbol " + std::to_string(alpha) +
                                " outside alphabet of size " +
                                std::to_string(alphabet.size));
  }
  int count = 0;
  for (Symbol s : w) count += (s == alpha);
  return count;
}

int run_count(const LevString& w) {
  int runs = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    runs += (i == 0 || w[i] != w[i - 1]);
  }
  return runs;
}

LevString prefix(const LevString& w, int n) {
  if (n < 0 || n > static_cast<int>(w.size())) {
    throw std::invalid_argument("prefix length " + std::to_string(n) +
                                " outside [0, " + std::to_string(w.size()) + "]");
  }
  return LevString(w.begin(), w.begin() + n);
}

LevString suffix(const LevString& w, int n) {
  if (n < 0 || n > static_cast<int>(w.size())) {
    throw std::invalid_argument("suffix length " + std::to_string(n) +
                                " outside [0, " + std::to_string(w.size()) + "]");
  }
  return LevString(w.end() - n, w.end());
}

StringRank string_rank(const LevString& w, const GraphSpec& spec) {
  const int n = static_cast<int>(w.size());
  if (!spec.contains_length(n)) {
    throw std::invalid_argument("string length " + std::to_string(n) +
                                " outside [" + std::to_string(spec.k1) + ", " +
                                std::to_string(spec.k2) + "]");
  }
  constexpr StringRank kMax = std::numeric_limits<StringRank>::max();
  StringRank offset = 0;
  for (int k = spec.k1; k < n; ++k) {
    const std::int64_t block = checked_pow(spec.a, k);
    if (offset > kMax - block) {
      throw std::overflow_error("string rank overflows the 64-bit range");
    }
    offset += block;
  }
  StringRank value = 0;
  for (Symbol s : w) {
    if (s < 0 || s >= spec.a) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet of size " +
                                  std::to_string(spec.a));
    }
    if (value > (kMax - s) / spec.a) {
      throw std::overflow_error("string rank overflows the 64-bit range");
    }
    value = value * spec.a + s;
  }
  if (offset > kMax - value) {
    throw std::overflow_error("string rank overflows the 64-bit range");
  }
  return offset + value;
}

LevString unrank(StringRank rank, const GraphSpec& spec) {
  if (rank < 0) {
    throw std::invalid_argument("rank " + std::to_string(rank) + " is negative");
  }
  StringRank rest = rank;
  for (int k = spec.k1; k <= spec.k2; ++k) {
    const std::int64_t block = checked_pow(spec.a, k);
    if (rest < block) {
      LevString w(k);
      for (int i = k - 1; i >= 0; --i) {
        w[i] = static_cast<Symbol>(rest % spec.a);
        rest /= spec.a;
      }
      return w;
    }
    rest -= block;
  }
  throw std::invalid_argument("rank " + std::to_string(rank) +
                              " outside the vertex range of the spec");
}

std::vector<LevString> enumerate_strings(const GraphSpec& spec) {
  std::vector<LevString> out;
  out.reserve(static_cast<std::size_t>(spec.vertex_count()));
  for (int k = spec.k1; k <= spec.k2; ++k) {
    LevString w(k, 0);
    while (true) {
      out.push_back(w);
      int pos = k - 1;
      while (pos >= 0 && w[pos] == spec.a - 1) {
        w[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++w[pos];
    }
  }
  return out;
}

LevString parse_string(const std::string& text, Alphabet alphabet) {
  if (text.empty()) {
    throw std::invalid_argument("empty string literal; use \"-\" for the empty string");
  }
  if (text == "-") return {};
  LevString out;
  if (alphabet.size <= 10) {
    out.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument(std::string("invalid character '") + c +
                                    "' in string literal \"" + text + "\"");
      }
      const Symbol s = c - '0';
      if (!alphabet.contains(s)) {
        throw std::invalid_argument("symbol " + std::to_string(s) +
                                    " outside alphabet of size " +
                                    std::to_string(alphabet.size));
      }
      out.push_back(s);
    }
    return out;
  }
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("invalid symbol token \"" + token +
                                  "\" in string literal \"" + text + "\"");
    }
    const long value = std::stol(token);
    if (!alphabet.contains(static_cast<Symbol>(value))) {
      throw std::invalid_argument("symbol " + token + " outside alphabet of size " +
                                  std::to_string(alphabet.size));
    }
    out.push_back(static_cast<Symbol>(value));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_string(const LevString& w, Alphabet alphabet) {
  if (w.empty()) return "-";
  std::string out;
  if (alphabet.size <= 10) {
    out.reserve(w.size());
    for (Symbol s : w) {
      if (!alphabet.contains(s)) {
        throw std::invalid_argument("symbol " + std::to_string(s) +
                                    " outside alphabet of size " +
                                    std::to_string(alphabet.size));
      }
      out.push_back(static_cast<char>('0' + s));
    }
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!alphabet.contains(w[i])) {
      throw std::invalid_argument("symbol " + std::to_string(w[i]) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet.size));
    }
    if (i > 0) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace levgraph
