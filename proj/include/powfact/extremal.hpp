// Lower-bound word families and their verification: r^(k)_m, the length
// formula, the k-power count bound and the 2.2*sqrt(n) inequality.
#pragma once

#include <cstdint>
#include <vector>

#include "powfact/word.hpp"

namespace powfact {

// q^(k)_i = (1 0^i)^{k-1}, length (k-1)(i+1). Requires k >= 2, i >= 1.
Word gen_q(int k, int i);

// r^(k)_m = q^(k)_1 q^(k)_2 ... q^(k)_m 1 0^m. Requires k >= 2, m >= 1.
Word gen_r(int k, int m);

// Closed form for |r^(k)_m|: (k-1)(m^2 + 3m)/2 + m + 1, always an integer.
long long expected_length(int k, int m);

// Closed form for the guaranteed k-power count of r^(k)_m:
// (m^2 + m)/2 + floor(m/k).
long long lower_bound_count(int k, int m);

// Everything verify_family measures for one (k, m) pair. All inequality
// checks are evaluated in exact integer arithmetic; the doubles are for
// reporting only.
struct FamilyReport {
  int k = 0;
  int m = 0;
  long long n = 0;             // |r^(k)_m| as generated
  long long count = 0;         // brute-force N_k(r^(k)_m)
  long long expected_len = 0;  // length formula
  long long lower_bound = 0;   // count formula
  long long upper_bound = 0;   // floor((n-1)/(k-1))

  bool length_ok = false;   // n == expected_len
  bool count_ok = false;    // count >= lower_bound
  bool sqrt_bound_ok = false;  // count > n/(k-1) - 2.2*sqrt(n), strict
  bool slack_ok = false;    // n/(k-1) - count <= 3(m+1)/2

  long long count_margin = 0;  // count - lower_bound
  double sqrt_bound_margin = 0;   // count - (n/(k-1) - 2.2*sqrt(n))
  double slack_margin = 0;     // 3(m+1)/2 - (n/(k-1) - count)
  long long upper_margin = 0;  // upper_bound - count

  bool ok() const { return length_ok && count_ok && sqrt_bound_ok && slack_ok; }
};

FamilyReport verify_family(int k, int m);

// The classic square-rich concatenation q'_1...q'_m with
// q'_i = 0^{i+1} 1 0^i 1 0^{i+1} 1, kept for comparison experiments.
Word gen_fraenkel_simpson(int m);

}  // namespace powfact
