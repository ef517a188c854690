#include "powfact/classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace powfact {

std::vector<ClassRecord> build_classes(const Word& w) {
  std::map<Word, std::vector<const PowerFactor*>, ShortlexLess> groups;
  auto powers = enumerate_powers(w);
  for (const PowerFactor& p : powers)
    groups[canonical_rotation(p.root)].push_back(&p);

  std::vector<ClassRecord> out;
  out.reserve(groups.size());
  for (auto& [canonical, items] : groups) {
    ClassRecord rec;
    rec.canonical = canonical;
    // The class index is witnessed by a member: the maximal power of the
    // best conjugate is itself a power factor of w.
    for (const PowerFactor* p : items)
      rec.index = std::max(rec.index, p->exponent);
    for (const PowerFactor* p : items) {
      rec.members.push_back(p->text);
      if (p->exponent == rec.index) {
        rec.max_pow.push_back(p->text);
        rec.prim_prime.push_back(p->root);
      }
    }
    ShortlexLess less;
    std::sort(rec.members.begin(), rec.members.end(), less);
    std::sort(rec.max_pow.begin(), rec.max_pow.end(), less);
    std::sort(rec.prim_prime.begin(), rec.prim_prime.end(), less);
    rec.mp = static_cast<long>(rec.max_pow.size());
    out.push_back(std::move(rec));
  }
  return out;
}

ClassRecord class_of(const Word& w, const Word& v) {
  if (v.empty() || !is_primitive(v))
    throw std::invalid_argument("class_of requires a primitive word");
  Word key = canonical_rotation(v);
  for (ClassRecord& rec : build_classes(w))
    if (rec.canonical == key) return rec;
  throw std::invalid_argument("class of '" + v.str() + "' is empty in '" +
                              w.str() + "'");
}

std::vector<Word> prim_prime(const Word& w) {
  std::vector<Word> out;
  for (const ClassRecord& rec : build_classes(w))
    out.insert(out.end(), rec.prim_prime.begin(), rec.prim_prime.end());
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

}  // namespace powfact
