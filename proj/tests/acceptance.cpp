// Acceptance harness: one PASS/FAIL line per criterion, exit 1 if any fails.
// argv[1] is the path to the command-line binary, used for the end-to-end
// reproduction checks; everything else drives the library directly.

#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "powfact/classes.hpp"
#include "powfact/extremal.hpp"
#include "powfact/powers.hpp"
#include "powfact/rauzy.hpp"
#include "powfact/search.hpp"
#include "powfact/word.hpp"

using namespace powfact;

namespace {

Word W(std::string_view s) { return Word::parse(s); }

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

struct Harness {
  bool all_ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    all_ok = false;
    if (++failure_count > 8) return;  // keep the FAIL line readable
    if (detail.tellp() > 0) detail << "; ";
    detail << why;
  }
  int failure_count = 0;

  bool run(const std::string& id, const std::string& label,
           const std::function<void(Harness&)>& body) {
    all_ok = true;
    failure_count = 0;
    detail.str("");
    try {
      body(*this);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    std::cout << (all_ok ? "PASS" : "FAIL") << " " << id << " " << label;
    if (!all_ok) std::cout << " [" << detail.str() << "]";
    std::cout << "\n" << std::flush;
    return all_ok;
  }
};

void expect(Harness& h, bool cond, const std::string& why) {
  if (!cond) h.fail(why);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: powfact_acceptance <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  Harness h;
  int failures = 0;

  failures += !h.run("c01", "family generator reproduces the pinned words", [&](Harness& h) {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"gen --k 2 --m 1", "1010"},
        {"gen --k 2 --m 2", "10100100"},
        {"gen --k 2 --m 3", "1010010001000"},
        {"gen --k 2 --m 4", "1010010001000010000"},
        {"gen --k 3 --m 1", "101010"},
        {"gen --k 3 --m 2", "1010100100100"},
    };
    for (const auto& [args, want] : cases) {
      CommandResult res = run_command("'" + cli + "' " + args);
      expect(h, res.exit_code == 0, args + " exited " + std::to_string(res.exit_code));
      expect(h, res.out == want + "\n", args + " printed '" + res.out + "'");
    }
  });

  failures += !h.run("c02", "generated lengths match the closed form", [&](Harness& h) {
    for (int k = 2; k <= 5; ++k)
      for (int m = 1; m <= 12; ++m)
        expect(h,
               static_cast<long long>(gen_r(k, m).size()) ==
                   expected_length(k, m),
               "length mismatch at k=" + std::to_string(k) +
                   " m=" + std::to_string(m));
  });

  failures += !h.run("c03", "family counts clear both lower bounds", [&](Harness& h) {
    for (int k = 2; k <= 4; ++k)
      for (int m = 1; m <= 8; ++m) {
        FamilyReport rep = verify_family(k, m);
        std::string at = " at k=" + std::to_string(k) + " m=" + std::to_string(m);
        expect(h, rep.length_ok, "length" + at);
        expect(h, rep.count_ok, "count formula" + at);
        expect(h, rep.sqrt_bound_ok, "sqrt-deficit inequality" + at);
      }
  });

  failures += !h.run("c04", "k-power counts respect the slot quotient bound", [&](Harness& h) {
    long long checked = 0;
    auto check_word = [&](const Word& w) {
      const long long slots =
          static_cast<long long>(w.size() - alphabet_size(w));
      std::vector<PowerFactor> ps = enumerate_powers(w);
      for (long long k = 2; k <= 4; ++k) {
        long long c = 0;
        for (const PowerFactor& p : ps)
          if (p.exponent % k == 0) ++c;
        if (c > slots / (k - 1)) {
          h.fail("violation at w=" + w.str() + " k=" + std::to_string(k));
          return;
        }
      }
      ++checked;
    };
    for (int n = 1; n <= 14; ++n) for_each_canonical_word(n, 2, check_word);
    for (int n = 1; n <= 10; ++n) for_each_canonical_word(n, 3, check_word);
    // 2^14 - 1 binary words plus sum of (3^n + 3)/6 ternary words.
    expect(h, checked == 16383 + 14767,
           "enumeration covered " + std::to_string(checked) + " words");
  });

  failures += !h.run("c05", "power-factor totals stay under n minus alphabet", [&](Harness& h) {
    for (std::size_t n = 1; n <= 14; ++n)
      oracle::for_each_binary(n, [&](const std::string& s) {
        Word w = Word::parse(s);
        std::size_t total = enumerate_powers(w).size();
        std::size_t slots = w.size() - alphabet_size(w);
        if (total > slots) h.fail("overflow at w=" + s);
        if (slots > n - 1) h.fail("slot bound shape at w=" + s);
      });
    for (int n = 2; n <= 10; ++n) {
      PowersMaxResult r = exhaustive_powers_max(n, 2);
      expect(h, r.max_count == n - 1,
             "max at n=" + std::to_string(n) + " is " +
                 std::to_string(r.max_count));
      expect(h,
             !r.witnesses.empty() &&
                 r.witnesses.front() == Word::from_bytes(std::string(n, '\0')),
             "unary witness missing at n=" + std::to_string(n));
    }
  });

  failures += !h.run("c06", "class bookkeeping: size formula and partition", [&](Harness& h) {
    for (std::size_t n = 1; n <= 14; ++n)
      oracle::for_each_binary(n, [&](const std::string& s) {
        Word w = Word::parse(s);
        std::vector<ClassRecord> recs = build_classes(w);
        std::set<Word> covered;
        std::size_t total = 0;
        for (const ClassRecord& rec : recs) {
          long expect_size = static_cast<long>(rec.canonical.size()) *
                                 (rec.index - 2) +
                             rec.mp;
          if (static_cast<long>(rec.members.size()) != expect_size) {
            h.fail("size formula at w=" + s + " class=" + rec.canonical.str());
            return;
          }
          covered.insert(rec.members.begin(), rec.members.end());
          total += rec.members.size();
        }
        std::vector<PowerFactor> ps = enumerate_powers(w);
        if (total != ps.size() || covered.size() != ps.size()) {
          h.fail("partition at w=" + s);
          return;
        }
        for (const PowerFactor& p : ps)
          if (!covered.count(p.text)) {
            h.fail("missing member " + p.text.str() + " at w=" + s);
            return;
          }
      });
  });

  failures += !h.run("c07", "independent small-circuit enumerations agree", [&](Harness& h) {
    for (std::size_t n = 1; n <= 12; ++n)
      oracle::for_each_binary(n, [&](const std::string& s) {
        Word w = Word::parse(s);
        std::vector<SmallCircuit> a = small_circuits_graph(w);
        std::vector<SmallCircuit> b = small_circuits_structural(w);
        if (a != b) {
          h.fail("enumerations disagree at w=" + s);
          return;
        }
        if (!small_circuit_bound_check(w).ok()) h.fail("count bound at w=" + s);
      });
  });

  failures += !h.run("c08", "power-to-circuit map is total and injective", [&](Harness& h) {
    for (std::size_t n = 1; n <= 12; ++n)
      oracle::for_each_binary(n, [&](const std::string& s) {
        Word w = Word::parse(s);
        std::vector<InjectionEntry> inj = injection_map(w);
        if (inj.size() != enumerate_powers(w).size()) {
          h.fail("not total at w=" + s);
          return;
        }
        std::set<SmallCircuit> images;
        for (const InjectionEntry& e : inj)
          if (!images.insert(e.circuit).second) {
            h.fail("collision at w=" + s);
            return;
          }
      });
  });

  failures += !h.run("c09", "worked-example values reproduce", [&](Harness& h) {
    expect(h, 5 * (3 - 2) + 3 == 8, "class-size arithmetic");
    Word u = rational_power(W("00010"), 13);
    expect(h, u.str() == "0001000010000", "fractional power spelling");
    expect(h, pow(W("10000"), 3) == W("10") + u, "first factorization");
    expect(h, pow(W("00001"), 3) == W("0") + u + W("1"), "second factorization");
    expect(h, pow(W("00010"), 3) == u + W("10"), "third factorization");
    expect(h, !is_factor(pow(W("00100"), 3), u), "fourth cube must miss it");
    expect(h, !is_factor(pow(W("01000"), 3), u), "fifth cube must miss it");
  });

  failures += !h.run("c10", "property suites hold exhaustively", [&](Harness& h) {
    // Periodicity: two periods p, q on a word of length >= p+q-gcd force
    // the gcd period.
    for (std::size_t n = 1; n <= 16 && h.all_ok; ++n)
      oracle::for_each_binary(n, [&](const std::string& s) {
        Word w = Word::parse(s);
        std::vector<std::size_t> periods;
        for (std::size_t p = 1; p <= n; ++p)
          if (has_period(w, p)) periods.push_back(p);
        for (std::size_t p : periods)
          for (std::size_t q : periods) {
            if (p > q || n < p + q - std::gcd(p, q)) continue;
            if (!fine_wilf(w, p, q)) h.fail("period interaction at w=" + s);
          }
      });
    // Primitive-root reconstruction.
    for (std::size_t n = 1; n <= 14 && h.all_ok; ++n)
      oracle::for_each_binary(n, [&](const std::string& s) {
        Word w = Word::parse(s);
        PrimitiveRoot pr = primitive_root(w);
        if (pow(pr.root, pr.exponent) != w || !is_primitive(pr.root))
          h.fail("root reconstruction at w=" + s);
      });
    // Rotation canonicalization agrees with the naive least rotation and
    // is a conjugacy invariant.
    for (std::size_t n = 1; n <= 12 && h.all_ok; ++n)
      oracle::for_each_binary(n, [&](const std::string& s) {
        Word w = Word::parse(s);
        Word canon = canonical_rotation(w);
        if (canon.str() != oracle::least_rotation(s))
          h.fail("least rotation at w=" + s);
        for (const Word& r : conjugates(w))
          if (canonical_rotation(r) != canon)
            h.fail("rotation invariance at w=" + s);
      });
    // The accelerated power enumeration equals the naive substring oracle.
    for (std::size_t n = 1; n <= 14 && h.all_ok; ++n)
      oracle::for_each_binary(n, [&](const std::string& s) {
        Word w = Word::parse(s);
        std::set<std::string> got;
        for (const PowerFactor& p : enumerate_powers(w)) got.insert(p.text.str());
        if (got != oracle::powers(s)) h.fail("power set at w=" + s);
        for (long k = 2; k <= 3; ++k)
          if (count_k_powers(w, k) !=
              static_cast<long>(oracle::count_k(s, static_cast<std::size_t>(k))))
            h.fail("count mismatch at w=" + s);
      });
  });

  return failures == 0 ? 0 : 1;
}
