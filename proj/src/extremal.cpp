#include "powfact/extremal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "powfact/powers.hpp"

namespace powfact {

namespace {

void check_km(int k, int m) {
  if (k < 2) throw std::invalid_argument("family exponent k must be >= 2");
  if (m < 1) throw std::invalid_argument("family index m must be >= 1");
}

Word run(Symbol s, int count) {
  return Word::from_bytes(std::string(static_cast<std::size_t>(count),
                                      static_cast<char>(s)));
}

}  // namespace

Word gen_q(int k, int i) {
  check_km(k, i);
  return pow(run(1, 1) + run(0, i), k - 1);
}

Word gen_r(int k, int m) {
  check_km(k, m);
  Word r;
  for (int i = 1; i <= m; ++i) r = r + gen_q(k, i);
  return r + run(1, 1) + run(0, m);
}

long long expected_length(int k, int m) {
  check_km(k, m);
  long long kk = k, mm = m;
  return (kk - 1) * (mm * mm + 3 * mm) / 2 + mm + 1;  // m^2 + 3m is even
}

long long lower_bound_count(int k, int m) {
  check_km(k, m);
  long long kk = k, mm = m;
  return (mm * mm + mm) / 2 + mm / kk;
}

FamilyReport verify_family(int k, int m) {
  check_km(k, m);
  FamilyReport rep;
  rep.k = k;
  rep.m = m;

  Word w = gen_r(k, m);
  rep.n = static_cast<long long>(w.size());
  rep.expected_len = expected_length(k, m);
  rep.lower_bound = lower_bound_count(k, m);
  rep.count = count_k_powers(w, k);
  rep.upper_bound = (rep.n - 1) / (k - 1);

  rep.length_ok = rep.n == rep.expected_len;
  rep.count_margin = rep.count - rep.lower_bound;
  rep.count_ok = rep.count_margin >= 0;
  rep.upper_margin = rep.upper_bound - rep.count;

  // count > n/(k-1) - 2.2*sqrt(n), with 2.2 = 11/5: the deficit
  // d = n - count*(k-1) must satisfy 25 d^2 < 121 (k-1)^2 n when d > 0.
  const long long d = rep.n - rep.count * (k - 1);
  const long long kk1 = k - 1;
  rep.sqrt_bound_ok = d <= 0 || 25 * d * d < 121 * kk1 * kk1 * rep.n;
  rep.sqrt_bound_margin = static_cast<double>(rep.count) -
                       (static_cast<double>(rep.n) / kk1 -
                        2.2 * std::sqrt(static_cast<double>(rep.n)));

  // n/(k-1) - count <= 3(m+1)/2, i.e. 2d <= 3(m+1)(k-1).
  rep.slack_ok = 2 * d <= 3 * static_cast<long long>(m + 1) * kk1;
  rep.slack_margin = 1.5 * (m + 1) - static_cast<double>(d) / kk1;

  return rep;
}

Word gen_fraenkel_simpson(int m) {
  if (m < 1) throw std::invalid_argument("family index m must be >= 1");
  Word out;
  const Word one = run(1, 1);
  for (int i = 1; i <= m; ++i)
    out = out + run(0, i + 1) + one + run(0, i) + one + run(0, i + 1) + one;
  return out;
}

}  // namespace powfact
