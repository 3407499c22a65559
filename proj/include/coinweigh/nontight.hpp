#pragma once

#include <vector>

#include "coinweigh/checked.hpp"

namespace coinweigh {

// Exact rational; the non-tight coin floor lands between integers.
struct Rational {
  Int num = 0;
  Int den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Int ceil() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }
};

struct NonTightReport {
  Int n = 0;
  double s_prime = 0;       // positive root of (s+1)(2s+1) = n^2 + n
  Int weight_floor = 0;     // ceil of the continuous V(s',n)
  Rational coin_floor;      // (4n^2 - 4n - 1)/8
  bool dominated = false;
};

// Fewest coins in a downhill imbalance with gap >= 2, minimized over the
// separation point: (4n^2-4n-1)/8. Requires n >= 2.
Rational nontight_coin_floor(Int n);

// Continuous weight floor V(s,n) = 2W_L + 2W_R - (s + (s+1) + ... + n),
// evaluated at the critical point s'. Requires n >= 3.
std::pair<double, Int> nontight_weight_floor(Int n);

// V for real s; exposed so tests can probe the ceiling's stability around s'.
double nontight_v(double s, Int n);

double nontight_s_prime(Int n);

// One report per n in [n_from, n_to]; dominated compares against the tight
// optimum W_M(n) on weight and against the tight coin ceiling (where the
// formula-based ceiling applies, i.e. it exists and n > 6) on coins.
std::vector<NonTightReport> dominance_table(Int n_from, Int n_to);

}  // namespace coinweigh
