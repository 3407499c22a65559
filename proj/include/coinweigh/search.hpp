#pragma once

#include <cstdint>
#include <vector>

#include "coinweigh/verify.hpp"
#include "coinweigh/weighing.hpp"

namespace coinweigh {

enum class Objective { Weight, Coins };

enum class Restriction {
  DownhillBalancedOrTight,  // strictly decreasing, T in {0, -1}
  DownhillIncludeNonTight,  // strictly decreasing, T <= 0, oracle-checked for T <= -2
  AllWeighingsViaOracle,    // every vector within caps, brute-force oracle on each
};

struct SearchOptions {
  Int witness_limit = 64;
  int threads = 0;             // 0 = hardware concurrency
  double timeout_seconds = 0;  // 0 = no timeout
  bool include_nontight = false;
  Int oracle_cap = kDefaultOracleCap;
};

struct SearchResult {
  Int n = 0;
  Objective objective = Objective::Weight;
  Int optimum = 0;
  std::vector<Weighing> witnesses;  // lexicographically sorted, at most witness_limit
  bool proven = false;              // the whole space under the restriction was exhausted
  Restriction restriction = Restriction::DownhillBalancedOrTight;
  std::uint64_t nodes_explored = 0;
};

// Weight: the closed-form minimum (a feasible value by construction).
// Coins: the coin count of the weight-optimal construction.
Int default_search_cap(Int n, Objective objective);

// Depth-first search over downhill vectors with signed total 0 or -1,
// separation point chosen first, pruned by the per-s bounding weights /
// coin floors and by running signed-total feasibility. Subtrees run
// concurrently; reported results do not depend on the thread count.
SearchResult search_downhill(Int n, Objective objective, Int cap,
                             const SearchOptions& options = {});

// Enumerates every vector with |a_i| <= multiplicity_cap and objective
// value <= objective_cap, testing each with the brute-force oracle.
// Requires n <= 6.
SearchResult search_all_oracle(Int n, Objective objective, Int multiplicity_cap,
                               Int objective_cap, const SearchOptions& options = {});

const char* objective_name(Objective o);
const char* restriction_name(Restriction r);

}  // namespace coinweigh
