#include "coinweigh/nontight.hpp"

#include <cmath>

#include "coinweigh/bounds.hpp"

namespace coinweigh {

Rational nontight_coin_floor(Int n) {
  if (n < 2) throw OutOfRange("need n >= 2");
  return Rational{4 * n * n - 4 * n - 1, 8};
}

double nontight_s_prime(Int n) {
  if (n < 3) throw OutOfRange("need n >= 3");
  const double nn = static_cast<double>(n);
  return (-3.0 + std::sqrt(1.0 + 8.0 * nn + 8.0 * nn * nn)) / 4.0;
}

double nontight_v(double s, Int n) {
  const double nn = static_cast<double>(n);
  return 2.0 * s * (s - 1.0) * (s - 2.0) / 6.0 +
         2.0 * (s - nn - 1.0) * (s - nn - 2.0) * (s + 2.0 * nn) / 6.0 -
         (nn + s) * (nn - s + 1.0) / 2.0;
}

std::pair<double, Int> nontight_weight_floor(Int n) {
  const double sp = nontight_s_prime(n);
  const double v = nontight_v(sp, n);
  return {sp, static_cast<Int>(std::ceil(v))};
}

std::vector<NonTightReport> dominance_table(Int n_from, Int n_to) {
  if (n_from < 3 || n_from > n_to) throw OutOfRange("need 3 <= n_from <= n_to");
  std::vector<NonTightReport> out;
  out.reserve(static_cast<size_t>(n_to - n_from + 1));
  for (Int n = n_from; n <= n_to; ++n) {
    NonTightReport r;
    r.n = n;
    const auto [sp, floor] = nontight_weight_floor(n);
    r.s_prime = sp;
    r.weight_floor = floor;
    r.coin_floor = nontight_coin_floor(n);
    const Int wm = closed_form_min_weight(n);
    bool dominated = wm < r.weight_floor;
    const auto [cfloor, cceiling] = coin_bounds(n);
    (void)cfloor;
    // The coin-side argument is formula-based only past n = 6; below that the
    // exact small-n minima settle it.
    if (cceiling && n > 6) dominated = dominated && r.coin_floor.ceil() > *cceiling;
    r.dominated = dominated;
    out.push_back(r);
  }
  return out;
}

}  // namespace coinweigh
