// Words over a small integer alphabet: factors, conjugacy, primitivity,
// rational powers and periodicity.
#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace powfact {

using Symbol = std::uint8_t;

// Immutable sequence of symbols, one per byte. Symbols are alphabet indices
// (0, 1, 2, ...), not characters; comparisons are lexicographic on symbol
// values. Positions are 0-based in code.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Symbol>& symbols);

  // Accepts a plain string over [0-9a-zA-Z] ('0' -> 0, ..., 'Z' -> 61) or,
  // when the text contains a comma, a comma-separated list of integers < 256.
  static Word parse(std::string_view text);
  static Word from_bytes(std::string bytes) { return Word(std::move(bytes)); }

  // Inverse of parse: plain string while all symbols fit the 62-character
  // table, comma-separated integers otherwise.
  std::string str() const;

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  Symbol operator[](std::size_t i) const {
    return static_cast<Symbol>(data_[i]);
  }

  Word substr(std::size_t pos, std::size_t len) const {
    return Word(data_.substr(pos, len));
  }
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len, len); }

  friend Word operator+(const Word& a, const Word& b) {
    return Word(a.data_ + b.data_);
  }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  // True when symbols first occur in increasing order 0, 1, 2, ...
  bool is_canonical() const;
  // Remaps symbols to first-occurrence order; the result is canonical.
  Word canonicalized() const;

  const std::string& bytes() const { return data_; }

 private:
  explicit Word(std::string bytes) : data_(std::move(bytes)) {}
  std::string data_;
};

// (length, then lexicographic) order used by every serialized listing.
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::set<Symbol> alphabet(const Word& w);
std::size_t alphabet_size(const Word& w);

// All distinct length-l factors of w (l >= 1); empty when l > |w|.
std::set<Word> factor_set(const Word& w, std::size_t l);

// True iff u occurs in w as a contiguous factor.
bool is_factor(const Word& w, const Word& u);

struct PrimitiveRoot {
  Word root;
  long exponent = 0;
};

// The unique primitive u and maximal e with w = u^e. Rejects the empty word.
PrimitiveRoot primitive_root(const Word& w);
bool is_primitive(const Word& w);

// The rotations v_s(i) v_p(i) for i = 1..|v|, in that order (the last entry
// is v itself). Duplicates appear when v is non-primitive.
std::vector<Word> conjugates(const Word& v);

// The conjugacy class [v] as a set.
std::set<Word> conjugate_set(const Word& v);

// Lexicographically least rotation of v (Booth's algorithm, O(|v|)).
Word canonical_rotation(const Word& v);

// True iff w[i] = w[i+p] wherever both positions exist (p >= 1); vacuously
// true when p >= |w|.
bool has_period(const Word& w, std::size_t p);

// Requires p and q to be periods of w; returns whether gcd(p, q) is one.
// The Fine-Wilf lemma guarantees the answer is true when
// |w| >= p + q - gcd(p, q).
bool fine_wilf(const Word& w, std::size_t p, std::size_t q);

// u^k, the concatenation of k copies of u (k >= 0).
Word pow(const Word& u, long k);

// The alpha-power u^{length/|u|}: the length-`length` prefix of u repeated,
// i.e. u^a u_0 with a = floor(length/|u|) and u_0 a prefix of u. Requires
// u non-empty and length >= 1.
Word rational_power(const Word& u, std::size_t length);

// A rational power with its parts kept: realized = base^{num/|base|},
// num >= |base| >= 1 so the exponent is at least 1.
struct RationalPower {
  Word base;
  std::size_t numerator = 0;
  std::size_t denominator = 0;
  Word realized;
};

RationalPower make_rational_power(const Word& base, std::size_t numerator);

// Hash-set view of all distinct factors of one word, for repeated
// membership tests.
class FactorIndex {
 public:
  explicit FactorIndex(const Word& w);
  bool contains(const Word& u) const {
    return u.size() <= max_len_ && factors_.count(u.bytes()) != 0;
  }
  std::size_t distinct_factors() const { return factors_.size(); }

 private:
  std::unordered_set<std::string> factors_;
  std::size_t max_len_ = 0;
};

}  // namespace powfact

template <>
struct std::hash<powfact::Word> {
  std::size_t operator()(const powfact::Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};
