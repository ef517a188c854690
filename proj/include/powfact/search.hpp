// Exhaustive computation of N(n, k) over canonical words and empirical
// verification of the power-count bounds with witness words.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "powfact/word.hpp"

namespace powfact {

// Enumeration guard: an invocation refuses to start when sigma^n exceeds
// max_words.
struct SearchBudget {
  std::uint64_t max_words = std::uint64_t{1} << 24;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact maximum of N_k over length-n words on at most sigma symbols,
// together with every canonical word attaining it.
struct SearchResult {
  int n = 0;
  int k = 0;
  int sigma = 0;
  long long max_count = 0;
  long long upper_bound = 0;  // floor((n-1)/(k-1))
  std::vector<Word> witnesses;
};

SearchResult exhaustive_max(int n, int k, int sigma, SearchBudget budget = {});

// Exact maximum of |Powers(w)| over length-n words on at most sigma
// symbols; the bound is n - 1, attained by the unary word.
struct PowersMaxResult {
  int n = 0;
  int sigma = 0;
  long long max_count = 0;
  long long upper_bound = 0;  // n - 1
  std::vector<Word> witnesses;
};

PowersMaxResult exhaustive_powers_max(int n, int sigma,
                                      SearchBudget budget = {});

// First bound violation found by a sweep, reported as falsification output.
struct SweepViolation {
  Word witness;
  std::string check;
};

// One pass over every canonical word of length 1..n_max checking, per word:
// N_k(w) <= floor((|w| - |Alph(w)|)/(k-1)) for each k, |Powers(w)| <=
// |w| - |Alph(w)|, and the small-circuit count bound. The table keeps the
// per-(n, k) maxima with the least witness. The sweep stops at the first
// counterexample.
struct SweepReport {
  std::vector<SearchResult> table;  // rows ordered by (n, k)
  std::optional<SweepViolation> violation;
};

SweepReport bound_sweep(int n_max, const std::vector<int>& ks, int sigma,
                        SearchBudget budget = {});

// Calls fn once per canonical word of length n over at most sigma symbols
// (symbols first occur in increasing order, cutting permutation symmetry).
void for_each_canonical_word(int n, int sigma,
                             const std::function<void(const Word&)>& fn);

}  // namespace powfact
