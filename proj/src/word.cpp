#include "powfact/word.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace powfact {

namespace {

constexpr std::string_view kSymbolChars =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

int symbol_of_char(char c) {
  auto pos = kSymbolChars.find(c);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

}  // namespace

Word::Word(const std::vector<Symbol>& symbols) {
  data_.assign(symbols.begin(), symbols.end());
}

Word Word::parse(std::string_view text) {
  std::string bytes;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view tok = text.substr(pos, next - pos);
      if (tok.empty()) throw std::invalid_argument("empty symbol in word");
      long value = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw std::invalid_argument("bad symbol: " + std::string(tok));
        value = value * 10 + (c - '0');
        if (value > 255) throw std::invalid_argument("symbol out of range");
      }
      bytes.push_back(static_cast<char>(value));
      pos = next + 1;
    }
  } else {
    bytes.reserve(text.size());
    for (char c : text) {
      int s = symbol_of_char(c);
      if (s < 0)
        throw std::invalid_argument(std::string("bad symbol character '") + c +
                                    "'");
      bytes.push_back(static_cast<char>(s));
    }
  }
  return Word(std::move(bytes));
}

std::string Word::str() const {
  bool plain = std::all_of(data_.begin(), data_.end(), [](char c) {
    return static_cast<unsigned char>(c) < kSymbolChars.size();
  });
  std::string out;
  if (plain) {
    out.reserve(size());
    for (char c : data_) out.push_back(kSymbolChars[static_cast<Symbol>(c)]);
  } else {
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(static_cast<int>((*this)[i]));
    }
  }
  return out;
}

bool Word::is_canonical() const {
  Symbol next = 0;
  for (Symbol s : data_) {
    if (s > next) return false;
    if (s == next) ++next;
  }
  return true;
}

Word Word::canonicalized() const {
  std::array<int, 256> remap;
  remap.fill(-1);
  std::string bytes;
  bytes.reserve(size());
  int next = 0;
  for (Symbol s : data_) {
    if (remap[s] < 0) remap[s] = next++;
    bytes.push_back(static_cast<char>(remap[s]));
  }
  return Word(std::move(bytes));
}

std::set<Symbol> alphabet(const Word& w) {
  std::set<Symbol> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.insert(w[i]);
  return out;
}

std::size_t alphabet_size(const Word& w) {
  std::array<bool, 256> seen{};
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!seen[w[i]]) {
      seen[w[i]] = true;
      ++count;
    }
  }
  return count;
}

std::set<Word> factor_set(const Word& w, std::size_t l) {
  if (l < 1) throw std::invalid_argument("factor length must be positive");
  std::set<Word> out;
  if (l > w.size()) return out;
  for (std::size_t i = 0; i + l <= w.size(); ++i) out.insert(w.substr(i, l));
  return out;
}

bool is_factor(const Word& w, const Word& u) {
  return w.bytes().find(u.bytes()) != std::string::npos;
}

bool has_period(const Word& w, std::size_t p) {
  if (p < 1) throw std::invalid_argument("period must be positive");
  for (std::size_t i = p; i < w.size(); ++i)
    if (w[i] != w[i - p]) return false;
  return true;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("primitive root of the empty word");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0 && has_period(w, d))
      return {w.prefix(d), static_cast<long>(n / d)};
  }
  return {w, 1};  // unreachable, d == n always matches
}

bool is_primitive(const Word& w) { return primitive_root(w).exponent == 1; }

std::vector<Word> conjugates(const Word& v) {
  if (v.empty()) throw std::invalid_argument("conjugates of the empty word");
  std::vector<Word> out;
  out.reserve(v.size());
  for (std::size_t i = 1; i <= v.size(); ++i)
    out.push_back(v.suffix(v.size() - i) + v.prefix(i));
  return out;
}

std::set<Word> conjugate_set(const Word& v) {
  auto rots = conjugates(v);
  return {rots.begin(), rots.end()};
}

namespace {

// Booth's least-rotation algorithm on the doubled string.
std::size_t least_rotation_index(const std::string& s) {
  const std::size_t n = s.size();
  std::string d = s + s;
  std::vector<std::ptrdiff_t> fail(d.size(), -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < d.size(); ++j) {
    const auto sj = static_cast<unsigned char>(d[j]);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != static_cast<unsigned char>(d[k + i + 1])) {
      if (sj < static_cast<unsigned char>(d[k + i + 1])) k = j - i - 1;
      i = fail[i];
    }
    if (sj != static_cast<unsigned char>(d[k + i + 1])) {
      if (sj < static_cast<unsigned char>(d[k])) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

}  // namespace

Word canonical_rotation(const Word& v) {
  if (v.empty())
    throw std::invalid_argument("canonical rotation of the empty word");
  std::size_t k = least_rotation_index(v.bytes());
  return v.suffix(v.size() - k) + v.prefix(k);
}

bool fine_wilf(const Word& w, std::size_t p, std::size_t q) {
  if (!has_period(w, p) || !has_period(w, q))
    throw std::invalid_argument("fine_wilf requires both periods to hold");
  return has_period(w, std::gcd(p, q));
}

Word pow(const Word& u, long k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::string bytes;
  bytes.reserve(u.size() * static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) bytes += u.bytes();
  return Word::from_bytes(std::move(bytes));
}

Word rational_power(const Word& u, std::size_t length) {
  if (u.empty()) throw std::invalid_argument("rational power of empty word");
  if (length < 1) throw std::invalid_argument("rational power length < 1");
  std::string bytes;
  bytes.reserve(length);
  while (bytes.size() + u.size() <= length) bytes += u.bytes();
  bytes += u.bytes().substr(0, length - bytes.size());
  return Word::from_bytes(std::move(bytes));
}

RationalPower make_rational_power(const Word& base, std::size_t numerator) {
  if (base.empty()) throw std::invalid_argument("empty rational-power base");
  if (numerator < base.size())
    throw std::invalid_argument("rational-power exponent below 1");
  return {base, numerator, base.size(), rational_power(base, numerator)};
}

FactorIndex::FactorIndex(const Word& w) : max_len_(w.size()) {
  const std::string& bytes = w.bytes();
  for (std::size_t l = 1; l <= bytes.size(); ++l)
    for (std::size_t i = 0; i + l <= bytes.size(); ++i)
      factors_.insert(bytes.substr(i, l));
}

}  // namespace powfact
