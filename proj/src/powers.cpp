#include "powfact/powers.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace powfact {

std::vector<PowerFactor> enumerate_powers(const Word& w) {
  const std::string& bytes = w.bytes();
  std::unordered_set<std::string> seen;
  std::vector<PowerFactor> out;
  for (std::size_t l = 2; l <= bytes.size(); ++l) {
    for (std::size_t i = 0; i + l <= bytes.size(); ++i) {
      auto [it, fresh] = seen.insert(bytes.substr(i, l));
      if (!fresh) continue;
      Word text = Word::from_bytes(*it);
      auto [root, exponent] = primitive_root(text);
      if (exponent >= 2)
        out.push_back({std::move(text), std::move(root), exponent});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PowerFactor& a, const PowerFactor& b) {
              return ShortlexLess{}(a.text, b.text);
            });
  return out;
}

long count_k_powers(const Word& w, long k) {
  if (k < 2) throw std::invalid_argument("k-power exponent must be >= 2");
  long count = 0;
  for (const PowerFactor& p : enumerate_powers(w))
    if (p.exponent % k == 0) ++count;
  return count;
}

long max_exponent(const Word& w, const Word& v) {
  if (v.empty()) throw std::invalid_argument("max_exponent of empty word");
  long e = 0;
  Word current = v;
  while (current.size() <= w.size() && is_factor(w, current)) {
    ++e;
    current = current + v;
  }
  return e;
}

}  // namespace powfact
