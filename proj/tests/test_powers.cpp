#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "powfact/powers.hpp"

using namespace powfact;

namespace {
Word W(std::string_view s) { return Word::parse(s); }

std::set<std::string> texts(const std::vector<PowerFactor>& ps) {
  std::set<std::string> out;
  for (const PowerFactor& p : ps) out.insert(p.text.str());
  return out;
}
}  // namespace

TEST_SUITE("powers") {

TEST_CASE("power factors of a pinned word") {
  std::vector<PowerFactor> ps = enumerate_powers(W("10100100"));
  REQUIRE(ps.size() == 4);
  CHECK(ps[0].text == W("00"));
  CHECK(ps[0].root == W("0"));
  CHECK(ps[0].exponent == 2);
  CHECK(ps[1].text == W("1010"));
  CHECK(ps[1].root == W("10"));
  CHECK(ps[1].exponent == 2);
  CHECK(ps[2].text == W("010010"));
  CHECK(ps[2].root == W("010"));
  CHECK(ps[3].text == W("100100"));
  CHECK(ps[3].root == W("100"));
}

TEST_CASE("unary runs stack up powers") {
  std::vector<PowerFactor> ps = enumerate_powers(W("0000"));
  CHECK(texts(ps) == std::set<std::string>{"00", "000", "0000"});
  CHECK(enumerate_powers(W("01")).empty());
  CHECK(enumerate_powers(W("")).empty());
}

TEST_CASE("k-power counts on pinned words") {
  CHECK(count_k_powers(W("10100100"), 2) == 4);
  CHECK(count_k_powers(W("1010100100100"), 3) == 3);
  CHECK(count_k_powers(W("101010"), 3) == 1);
  CHECK(count_k_powers(W("1010"), 2) == 1);
  CHECK(count_k_powers(W("0000"), 2) == 2);
  CHECK(count_k_powers(W("0000"), 3) == 1);
  CHECK(count_k_powers(W("0000"), 4) == 1);
  CHECK(count_k_powers(W(""), 2) == 0);
  CHECK(count_k_powers(W("01"), 2) == 0);
  CHECK_THROWS_AS(count_k_powers(W("01"), 1), std::invalid_argument);
  CHECK_THROWS_AS(count_k_powers(W("01"), 0), std::invalid_argument);
}

TEST_CASE("a power is a k-power exactly when k divides its exponent") {
  // 0^6 contains 00 (exp 2), 000 (exp 3), ...: N_2 counts exponents 2,4,6.
  CHECK(count_k_powers(W("000000"), 2) == 3);
  CHECK(count_k_powers(W("000000"), 3) == 2);
  CHECK(count_k_powers(W("000000"), 5) == 1);
  CHECK(count_k_powers(W("000000"), 6) == 1);
}

TEST_CASE("max exponent by direct factor growth") {
  CHECK(max_exponent(W("10100100"), W("10")) == 2);
  CHECK(max_exponent(W("0000"), W("0")) == 4);
  CHECK(max_exponent(W("0000"), W("00")) == 2);
  CHECK(max_exponent(W("01"), W("1")) == 1);
  CHECK(max_exponent(W("01"), W("10")) == 0);
}

TEST_CASE("agreement with the naive oracle on all short binary words") {
  for (std::size_t n = 0; n <= 11; ++n) {
    oracle::for_each_binary(n, [](const std::string& s) {
      Word w = Word::parse(s);
      CHECK(texts(enumerate_powers(w)) == oracle::powers(s));
      for (long k = 2; k <= 4; ++k)
        CHECK(count_k_powers(w, k) ==
              static_cast<long>(oracle::count_k(s, static_cast<std::size_t>(k))));
    });
  }
}

TEST_CASE("roots returned are primitive and rebuild the text") {
  oracle::for_each_binary(10, [](const std::string& s) {
    for (const PowerFactor& p : enumerate_powers(Word::parse(s))) {
      CHECK(is_primitive(p.root));
      CHECK(p.exponent >= 2);
      CHECK(pow(p.root, p.exponent) == p.text);
    }
  });
}

}  // TEST_SUITE("powers")
