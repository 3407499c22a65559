#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coinweigh/weighing.hpp"

namespace coinweigh {

enum class CaseTag {
  Tiny,                // n <= 2, table row
  Mod1Balance,         // n = 3k+1: the ladder is already balanced
  Mod0TightImbalance,  // n = 3k: ladder plus left-pan triangular groups
  Mod2OddBalance,      // n = 3k+2, k odd: ladder plus (k+1)/2 coins of type n
  Mod2EvenBalance,     // n = 3k+2, k even, n > 50: ladder plus solved suffix groups
  Mod2Exception,       // n in {8,...,50}: embedded exhaustive-search optimum
};

enum class Pan { Left, Right };

// A size-j group adds one coin of each of the j lightest types (left pan,
// weight T_j) or of the j heaviest types (right pan, weight j*n - T_{j-1}).
// Either way the strict decrease of the multiplicities survives.
struct AddedGroup {
  Pan pan = Pan::Left;
  Int group_size = 0;
  Int copies = 0;
};

struct Construction {
  Weighing weighing;
  CaseTag case_tag = CaseTag::Tiny;
  std::vector<AddedGroup> added_groups;
};

// Indices {a,b,c,...} with sum of T_index equal to the target, stored in
// descending order.
struct TriangularDecomposition {
  std::vector<Int> indices;

  Int triangular_sum() const;
  Int index_sum() const;
};

// The multiplicity ladder s-2, s-3, ..., 1, 0, -1, ..., -(n-s+1): the
// cheapest downhill multiplicity set with separation point s.
Weighing base_ladder(Int s, Int n);

// Writes target as a sum of at most three triangular numbers with indices
// <= max_index, minimizing the index sum (ties: lexicographically smallest
// sorted index list). Throws Infeasible when target > 3*T_max_index.
TriangularDecomposition decompose_triangular_le3(Int target, Int max_index);

// Nonnegative group counts b_j (1 <= j <= k) with
//   sum j*b_j       = (n+4)/6   and
//   sum b_j*T_{j-1} = n/2.
// Size-1 groups carry T_0 = 0 and only pad the count constraint.
struct Eq5Solution {
  Int n = 0;
  std::vector<std::pair<Int, Int>> groups;  // (group size j, copies b_j), ascending j

  Int count_sum() const;       // sum j*b_j
  Int triangular_sum() const;  // sum b_j*T_{j-1}
};

// Requires n = 3k+2 with k even and n > 50. Found by a bounded DP over the
// triangular-sum axis that minimizes the group count.
Eq5Solution solve_eq5(Int n);

// A solution for n turns into one for n+42 by adding one size-7 group.
Eq5Solution plus42_lift(const Eq5Solution& sol);

struct ExceptionEntry {
  Weighing weighing;
  Int weight = 0;
  Int coins = 0;
};

// The embedded minimum-weight multiplicity lists for the eight exceptional
// n; absent for every other n.
std::optional<ExceptionEntry> exception_lookup(Int n);

// A downhill, balanced-or-tight verifying weighing of total weight exactly
// closed_form_min_weight(n), for any n >= 2.
Construction construct_weight_optimal(Int n);

const char* case_tag_name(CaseTag tag);

}  // namespace coinweigh
