#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "powfact/classes.hpp"

using namespace powfact;

namespace {
Word W(std::string_view s) { return Word::parse(s); }
}  // namespace

TEST_SUITE("classes") {

TEST_CASE("class records of a pinned word") {
  std::vector<ClassRecord> recs = build_classes(W("10100100"));
  REQUIRE(recs.size() == 3);

  CHECK(recs[0].canonical == W("0"));
  CHECK(recs[0].index == 2);
  CHECK(recs[0].mp == 1);
  CHECK(recs[0].members == std::vector<Word>{W("00")});
  CHECK(recs[0].max_pow == std::vector<Word>{W("00")});
  CHECK(recs[0].prim_prime == std::vector<Word>{W("0")});

  CHECK(recs[1].canonical == W("01"));
  CHECK(recs[1].index == 2);
  CHECK(recs[1].mp == 1);
  CHECK(recs[1].members == std::vector<Word>{W("1010")});
  CHECK(recs[1].prim_prime == std::vector<Word>{W("10")});

  CHECK(recs[2].canonical == W("001"));
  CHECK(recs[2].index == 2);
  CHECK(recs[2].mp == 2);
  CHECK(recs[2].members == std::vector<Word>{W("010010"), W("100100")});
  CHECK(recs[2].max_pow == std::vector<Word>{W("010010"), W("100100")});
  CHECK(recs[2].prim_prime == std::vector<Word>{W("010"), W("100")});
}

TEST_CASE("higher index splits members across exponents") {
  // 0^5: class of "0" holds 00, 000, 0000, 00000 -> index 5, mp 1.
  std::vector<ClassRecord> recs = build_classes(W("00000"));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].canonical == W("0"));
  CHECK(recs[0].index == 5);
  CHECK(recs[0].mp == 1);
  CHECK(recs[0].members.size() == 4);
  CHECK(recs[0].max_pow == std::vector<Word>{W("00000")});
}

TEST_CASE("class size formula and partition on all short binary words") {
  for (std::size_t n = 0; n <= 12; ++n) {
    oracle::for_each_binary(n, [](const std::string& s) {
      Word w = Word::parse(s);
      std::vector<ClassRecord> recs = build_classes(w);
      std::set<std::string> covered;
      std::size_t total = 0;
      for (const ClassRecord& rec : recs) {
        long lhs = static_cast<long>(rec.members.size());
        long v_len = static_cast<long>(rec.canonical.size());
        CHECK(lhs == v_len * (rec.index - 2) + rec.mp);
        CHECK(rec.mp == static_cast<long>(rec.max_pow.size()));
        CHECK(rec.mp == static_cast<long>(rec.prim_prime.size()));
        CHECK(rec.mp >= 1);
        CHECK(rec.index >= 2);
        for (const Word& member : rec.members) covered.insert(member.str());
        total += rec.members.size();
      }
      CHECK(covered == oracle::powers(s));
      CHECK(total == covered.size());  // pairwise disjoint
    });
  }
}

TEST_CASE("members belong to their class and maximal powers are maximal") {
  oracle::for_each_binary(10, [](const std::string& s) {
    Word w = Word::parse(s);
    for (const ClassRecord& rec : build_classes(w)) {
      std::set<std::string> rots = oracle::rotations(rec.canonical.str());
      for (const Word& member : rec.members) {
        std::string root =
            member.str().substr(0, member.size() / oracle::exponent(member.str()));
        CHECK(rots.count(root) == 1);
      }
      for (const Word& u : rec.prim_prime) {
        CHECK(oracle::max_exponent(s, u.str()) ==
              static_cast<std::size_t>(rec.index));
      }
    }
  });
}

TEST_CASE("class lookup by representative") {
  ClassRecord rec = class_of(W("10100100"), W("100"));
  CHECK(rec.canonical == W("001"));
  CHECK(class_of(W("10100100"), W("10")).canonical == W("01"));
  CHECK_THROWS_AS(class_of(W("10100100"), W("00")), std::invalid_argument);
  CHECK_THROWS_AS(class_of(W("10100100"), W("11")), std::invalid_argument);
  CHECK_THROWS_AS(class_of(W("10100100"), W("")), std::invalid_argument);
}

TEST_CASE("primitive factors achieving their class index") {
  std::vector<Word> pp = prim_prime(W("10100100"));
  CHECK(pp == std::vector<Word>{W("0"), W("10"), W("010"), W("100")});
}

}  // TEST_SUITE("classes")
