#pragma once

#include <optional>
#include <utility>

#include "coinweigh/checked.hpp"

namespace coinweigh {

struct BoundingWeights {
  Int w_left = 0;    // W_L(s,n) = C(s,3)
  Int w_right = 0;   // W_R(s,n) = (s-n-2)(s-n-1)(s+2n)/6
  Int w_bounding = 0;
};

struct BoundsReport {
  Int n = 0;
  Int s_star = 0;  // minimal separation point for the bounding weight
  Int w_left = 0;
  Int w_right = 0;
  Int w_bounding = 0;   // W_B(n)
  Int coin_floor = 0;   // F(s',n) at s' = floor((2n+4)/3)
  std::optional<Int> coin_ceiling;
};

// Requires 2 <= s <= n. w_bounding is 2*w_left when w_left >= w_right and
// 2*w_right - 1 otherwise.
BoundingWeights bounding_weights(Int s, Int n);

// Minimizes W_B(s,n) over s by evaluating the floor/ceil candidates of
// (2n+4)/3; debug builds cross-check against a full scan.
std::pair<Int, Int> min_bounding_weight(Int n);  // (s_star, W_B(n))

// W_M(n): the exact minimum weight of a downhill balanced-or-tight
// verifying weighing, by residue of n mod 3, with the eight embedded
// exception values for n in {8,14,20,26,32,38,44,50}.
Int closed_form_min_weight(Int n);

// F(s,n) = F_L(s,n) + F_R(s,n): fewest coins possible with separation
// point s. Requires 2 <= s <= n.
Int coin_floor(Int s, Int n);

// (floor, ceiling); ceiling is absent for n = 3k+2 with k even and n <= 50.
std::pair<Int, std::optional<Int>> coin_bounds(Int n);

// Cost of the introductory construction: type-1 coins against the
// 1*2 + 2*3 + ... + (n-1)*n right pan. Returns (coins, weight).
std::pair<Int, Int> naive_bound(Int n);

BoundsReport bounds_report(Int n);

// True for the eight n where the bounding weight is not achievable.
bool is_weight_exception(Int n);

}  // namespace coinweigh
