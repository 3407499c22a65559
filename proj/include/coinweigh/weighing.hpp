#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coinweigh/checked.hpp"

namespace coinweigh {

// Sign of the signed total T = sum i*a_i (left weight minus right weight).
enum class Outcome { Balance, LeftLighter, LeftHeavier };

// A weighing over n bags: multiplicities[i-1] is the net count of type-i
// coins, left pan minus right pan. One signed count per type, so no coin
// type can sit on both pans.
struct Weighing {
  std::vector<Int> multiplicities;

  Int n() const { return static_cast<Int>(multiplicities.size()); }
};

struct Classification {
  Outcome outcome = Outcome::Balance;
  Int signed_total = 0;
  Int total_coins = 0;
  Int total_weight = 0;
  bool downhill = false;
  bool tight = false;
  bool primitive = false;
  bool has_duplicates = false;
  // Smallest label on the right pan; absent when no multiplicity is negative.
  std::optional<Int> separation_point;
};

// Validates length and that all totals fit in checked 64-bit arithmetic.
Weighing make_weighing(Int n, std::vector<Int> multiplicities);

Classification classify(const Weighing& w);

// Multiplies every multiplicity by k >= 1. Verifying status is preserved
// (the oracle test suite exercises this).
Weighing scale(const Weighing& w, Int k);

// Coin-list form, e.g. {2,1,0,-1} -> "112=4". Types 10 and up are rendered
// space-separated to stay unambiguous.
std::string render(const Weighing& w);

// Inverse of render for a fixed n.
Weighing parse_rendered(Int n, const std::string& text);

// Comma-separated multiplicities, e.g. "4,3,2,0,-1,-2"; n inferred.
Weighing parse_multiplicity_list(const std::string& text);

// {"n": int, "multiplicities": [int, ...]}
std::string weighing_to_json(const Weighing& w);
Weighing weighing_from_json(const std::string& text);

const char* outcome_name(Outcome o);
std::string format_multiplicities(const Weighing& w);

}  // namespace coinweigh
