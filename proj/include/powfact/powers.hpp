// Distinct power factors of a word: Powers(w), N_k(w), maximal exponents.
#pragma once

#include <vector>

#include "powfact/word.hpp"

namespace powfact {

// One distinct power factor: text = root^exponent with root primitive and
// exponent >= 2 maximal for this text. Equality is by text; root and
// exponent then coincide by uniqueness of primitive roots.
struct PowerFactor {
  Word text;
  Word root;
  long exponent = 0;

  friend bool operator==(const PowerFactor& a, const PowerFactor& b) {
    return a.text == b.text;
  }
};

// All distinct factors of w that are integer powers of exponent >= 2, in
// shortlex order of text. Quadratically many substrings are scanned; this
// naive route is the correctness anchor for everything downstream.
std::vector<PowerFactor> enumerate_powers(const Word& w);

// Number of distinct non-empty k-power factors of w (k >= 2). A factor
// x counts iff x = u^k for some non-empty u, i.e. iff k divides the
// exponent of x over its primitive root.
long count_k_powers(const Word& w, long k);

// Largest e >= 0 with v^e a factor of w; 0 when v itself does not occur.
// v must be non-empty.
long max_exponent(const Word& w, const Word& v);

}  // namespace powfact
