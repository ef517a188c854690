#include "powfact/search.hpp"

#include <algorithm>

#include "powfact/powers.hpp"
#include "powfact/rauzy.hpp"

namespace powfact {

namespace {

void check_dimensions(int n, int sigma) {
  if (n < 1) throw std::invalid_argument("word length must be >= 1");
  if (sigma < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

// sigma^n, saturating; used only against the budget.
std::uint64_t word_space(int n, int sigma) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(sigma))
      return std::uint64_t{1} << 63;
    total *= static_cast<std::uint64_t>(sigma);
  }
  return total;
}

void enforce_budget(std::uint64_t estimate, const SearchBudget& budget) {
  if (estimate > budget.max_words)
    throw BudgetError("search space of " + std::to_string(estimate) +
                      " words exceeds the budget of " +
                      std::to_string(budget.max_words));
}

void enumerate_rec(std::string& bytes, int pos, int n, int max_used, int sigma,
                   const std::function<void(const Word&)>& fn) {
  if (pos == n) {
    fn(Word::from_bytes(bytes));
    return;
  }
  const int limit = std::min(max_used + 1, sigma - 1);
  for (int s = 0; s <= limit; ++s) {
    bytes[static_cast<std::size_t>(pos)] = static_cast<char>(s);
    enumerate_rec(bytes, pos + 1, n, std::max(max_used, s), sigma, fn);
  }
}

}  // namespace

void for_each_canonical_word(int n, int sigma,
                             const std::function<void(const Word&)>& fn) {
  check_dimensions(n, sigma);
  std::string bytes(static_cast<std::size_t>(n), '\0');
  enumerate_rec(bytes, 0, n, -1, sigma, fn);
}

SearchResult exhaustive_max(int n, int k, int sigma, SearchBudget budget) {
  check_dimensions(n, sigma);
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  enforce_budget(word_space(n, sigma), budget);

  SearchResult res;
  res.n = n;
  res.k = k;
  res.sigma = sigma;
  res.upper_bound = (n - 1) / (k - 1);
  res.max_count = -1;
  for_each_canonical_word(n, sigma, [&](const Word& w) {
    long long c = count_k_powers(w, k);
    if (c > res.max_count) {
      res.max_count = c;
      res.witnesses.assign(1, w);
    } else if (c == res.max_count) {
      res.witnesses.push_back(w);
    }
  });
  return res;
}

PowersMaxResult exhaustive_powers_max(int n, int sigma, SearchBudget budget) {
  check_dimensions(n, sigma);
  enforce_budget(word_space(n, sigma), budget);

  PowersMaxResult res;
  res.n = n;
  res.sigma = sigma;
  res.upper_bound = n - 1;
  res.max_count = -1;
  for_each_canonical_word(n, sigma, [&](const Word& w) {
    long long c = static_cast<long long>(enumerate_powers(w).size());
    if (c > res.max_count) {
      res.max_count = c;
      res.witnesses.assign(1, w);
    } else if (c == res.max_count) {
      res.witnesses.push_back(w);
    }
  });
  return res;
}

SweepReport bound_sweep(int n_max, const std::vector<int>& ks, int sigma,
                        SearchBudget budget) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
  if (ks.empty()) throw std::invalid_argument("no exponents given");
  for (int k : ks)
    if (k < 2) throw std::invalid_argument("k must be >= 2");

  std::uint64_t estimate = 0;
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t term = word_space(n, std::min(sigma, n));
    estimate = (estimate > (std::uint64_t{1} << 63) - term)
                   ? std::uint64_t{1} << 63
                   : estimate + term;
  }
  enforce_budget(estimate, budget);

  SweepReport report;
  for (int n = 1; n <= n_max && !report.violation; ++n) {
    std::vector<SearchResult> rows;
    for (int k : ks) {
      SearchResult row;
      row.n = n;
      row.k = k;
      row.sigma = sigma;
      row.upper_bound = (n - 1) / (k - 1);
      row.max_count = -1;
      rows.push_back(row);
    }
    for_each_canonical_word(n, std::min(sigma, n), [&](const Word& w) {
      if (report.violation) return;
      auto powers = enumerate_powers(w);
      const long long slots =
          static_cast<long long>(w.size() - alphabet_size(w));
      if (static_cast<long long>(powers.size()) > slots) {
        report.violation = {w, "powers-bound"};
        return;
      }
      if (!small_circuit_bound_check(w).ok()) {
        report.violation = {w, "small-circuit-bound"};
        return;
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const int k = rows[i].k;
        long long c = 0;
        for (const PowerFactor& p : powers)
          if (p.exponent % k == 0) ++c;
        if (c * (k - 1) > slots) {
          report.violation = {w, "k-power-bound k=" + std::to_string(k)};
          return;
        }
        if (c > rows[i].max_count) {
          rows[i].max_count = c;
          rows[i].witnesses.assign(1, w);
        }
      }
    });
    for (auto& row : rows) report.table.push_back(std::move(row));
  }
  return report;
}

}  // namespace powfact
