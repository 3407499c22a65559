#include "coinweigh/special.hpp"

namespace coinweigh {

namespace {

Weighing solo_vector(Int n, Int top, Int right_count) {
  // Left pan: top, top-1, ..., assigned to types 1..n-1; right pan: type n.
  std::vector<Int> a(static_cast<size_t>(n));
  for (Int i = 1; i < n; ++i) a[i - 1] = top - (i - 1);
  a[n - 1] = -right_count;
  return make_weighing(n, std::move(a));
}

}  // namespace

std::optional<SoloWeighing> construct_solo(Int n, SoloVariant variant) {
  if (n < 2) throw OutOfRange("need n >= 2");
  if (variant == SoloVariant::OneBased) {
    // Left weight is C(n+1,3); a balance needs n | C(n+1,3).
    if (n % 6 == 1 || n % 6 == 5) {
      const Int m = exact_div(checked_mul(n + 1, n - 1), 6);
      return SoloWeighing{solo_vector(n, n - 1, m), SoloKind::Balance};
    }
    if (n == 2 || n == 6) {
      const Int m = exact_div(comb3(n + 1) + 1, n);
      return SoloWeighing{solo_vector(n, n - 1, m), SoloKind::TightImbalance};
    }
    return std::nullopt;
  }
  // ZeroBased: left weight C(n,3); balance needs n | C(n,3), and n >= 3 so
  // that the scale actually holds coins. The imbalance condition only ever
  // holds at n = 1, which needs no weighing at all.
  if (n >= 3 && n % 3 != 0) {
    const Int m = exact_div(checked_mul(n - 1, n - 2), 6);
    return SoloWeighing{solo_vector(n, n - 2, m), SoloKind::Balance};
  }
  return std::nullopt;
}

std::pair<Int, Int> solo_cost(Int n, SoloVariant variant) {
  auto solo = construct_solo(n, variant);
  if (!solo) {
    throw NotExists("no solo weighing for n = " + std::to_string(n));
  }
  if (variant == SoloVariant::OneBased) {
    if (solo->kind == SoloKind::Balance) {
      return {exact_div(4 * n * n - 3 * n - 1, 6), checked_mul(2, comb3(n + 1))};
    }
    // n = 2 or 6: left T_{n-1} coins plus (C(n+1,3)+1)/n on the right.
    const Int coins = checked_add(triangular(n - 1), exact_div(comb3(n + 1) + 1, n));
    return {coins, 2 * comb3(n + 1) + 1};
  }
  return {exact_div(checked_mul(checked_mul(2, n - 1), n - 2), 3), checked_mul(2, comb3(n))};
}

std::optional<Weighing> construct_ap(Int n, Int d) {
  if (n < 3) throw OutOfRange("need n >= 3");
  if (d < 1) throw OutOfRange("need d >= 1");
  if (d != 3 && !(d == 1 && n % 3 == 1)) return std::nullopt;
  const Int a0 = exact_div(checked_mul(checked_mul(2, n - 1), d), 3);
  std::vector<Int> a(static_cast<size_t>(n));
  for (Int i = 0; i < n; ++i) a[i] = a0 - i * d;
  return make_weighing(n, std::move(a));
}

}  // namespace coinweigh
