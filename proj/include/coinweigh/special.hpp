#pragma once

#include <optional>
#include <utility>

#include "coinweigh/weighing.hpp"

namespace coinweigh {

// Solo weighings put exactly one coin type on the right pan; the left pan
// carries consecutive multiplicities.
enum class SoloVariant {
  ZeroBased,  // left multiplicities 0..n-2
  OneBased,   // left multiplicities 1..n-1
};

enum class SoloKind { Balance, TightImbalance };

struct SoloWeighing {
  Weighing weighing;
  SoloKind kind = SoloKind::Balance;
};

// OneBased balances exist iff n = +-1 mod 6, with tight-imbalance stand-ins
// for n = 2 and n = 6. ZeroBased balances exist iff n = +-1 mod 3 and
// n >= 3 (n = 2 would be the empty weighing, which verifies nothing).
std::optional<SoloWeighing> construct_solo(Int n, SoloVariant variant);

// (coins, weight) for an existing solo weighing; throws NotExists otherwise.
std::pair<Int, Int> solo_cost(Int n, SoloVariant variant);

// Balanced weighing with multiplicities a, a-d, ..., a-(n-1)d and
// a = 2(n-1)d/3; exists iff d = 3, or d = 1 with n = 3k+1.
std::optional<Weighing> construct_ap(Int n, Int d);

}  // namespace coinweigh
