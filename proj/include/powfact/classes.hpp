// Conjugacy-class bookkeeping for power factors: Class/Index/MaxPow and the
// cardinality formula |Class| = |v|(Index - 2) + mp.
#pragma once

#include <vector>

#include "powfact/powers.hpp"

namespace powfact {

// One conjugacy class of primitive roots together with every power factor
// it explains. The class key is the least rotation; whether a particular
// conjugate reaches the index is a per-conjugate property (prim_prime).
struct ClassRecord {
  Word canonical;                // least rotation of the class
  long index = 0;                // max exponent over all conjugates
  std::vector<Word> max_pow;     // power factors of exponent == index
  long mp = 0;                   // |max_pow|
  std::vector<Word> members;     // all power factors rooted in this class
  std::vector<Word> prim_prime;  // conjugates u with u^index a factor of w
};

// One record per conjugacy class of primitive words with a power factor in
// w. Records sort by canonical word (shortlex); all word lists inside a
// record are shortlex-sorted. Members of distinct records are disjoint and
// together cover exactly the texts of enumerate_powers(w).
std::vector<ClassRecord> build_classes(const Word& w);

// The record whose class contains v. v must be primitive and some power of
// a conjugate of v must occur in w.
ClassRecord class_of(const Word& w, const Word& v);

// Primitive factors v of w whose maximal class power v^Index occurs in w:
// the union of prim_prime over all records, shortlex-sorted.
std::vector<Word> prim_prime(const Word& w);

}  // namespace powfact
