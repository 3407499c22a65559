#include "coinweigh/construct.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>

#include "coinweigh/bounds.hpp"

namespace coinweigh {

namespace {

const std::map<Int, std::vector<Int>>& exception_lists() {
  static const std::map<Int, std::vector<Int>> lists = {
      {8, {7, 4, 3, 2, 1, 0, -2, -3}},
      {14, {10, 9, 7, 6, 5, 4, 3, 2, 1, 0, -1, -3, -4, -5}},
      {20, {14, 13, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, -1, -2, -4, -5, -6, -7}},
      {26, {19, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
            -1, -2, -3, -5, -6, -7, -8, -9}},
      {32, {21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
            -1, -2, -3, -4, -6, -7, -8, -9, -10, -11}},
      {38, {26, 25, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6,
            5, 4, 3, 2, 1, 0, -1, -2, -3, -4, -5, -6, -8, -9, -10, -11, -12, -14}},
      {44, {29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11,
            10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, -1, -2, -3, -4, -5, -6, -7, -9, -10, -11,
            -12, -13, -14, -16}},
      {50, {35, 32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15,
            14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, -1, -2, -3, -4, -5, -6,
            -7, -8, -9, -11, -12, -13, -14, -15, -17, -18}},
  };
  return lists;
}

struct ExceptionCost {
  Int weight;
  Int coins;
};

const std::map<Int, ExceptionCost>& exception_costs() {
  static const std::map<Int, ExceptionCost> costs = {
      {8, {75, 22}},     {14, {337, 60}},   {20, {917, 118}}, {26, {1943, 196}},
      {32, {3543, 292}}, {38, {5857, 412}}, {44, {8991, 548}}, {50, {13095, 708}},
  };
  return costs;
}

// One extra coin of each of types 1..j on the left pan.
void apply_prefix_group(std::vector<Int>& a, Int j) {
  for (Int i = 0; i < j; ++i) ++a[i];
}

// One extra coin of each of types n-j+1..n on the right pan.
void apply_suffix_group(std::vector<Int>& a, Int j) {
  const Int n = static_cast<Int>(a.size());
  for (Int i = n - j; i < n; ++i) --a[i];
}

std::vector<AddedGroup> group_list(Pan pan, const std::map<Int, Int>& sizes) {
  std::vector<AddedGroup> out;
  for (const auto& [size, copies] : sizes) out.push_back({pan, size, copies});
  return out;
}

}  // namespace

Int TriangularDecomposition::triangular_sum() const {
  Int total = 0;
  for (Int m : indices) total = checked_add(total, triangular(m));
  return total;
}

Int TriangularDecomposition::index_sum() const {
  Int total = 0;
  for (Int m : indices) total += m;
  return total;
}

Weighing base_ladder(Int s, Int n) {
  if (n < 2) throw OutOfRange("need n >= 2");
  if (s < 2 || s > n) throw OutOfRange("separation point must satisfy 2 <= s <= n");
  std::vector<Int> a(static_cast<size_t>(n));
  for (Int i = 1; i <= n; ++i) a[i - 1] = s - 1 - i;
  return make_weighing(n, std::move(a));
}

TriangularDecomposition decompose_triangular_le3(Int target, Int max_index) {
  if (target < 0) throw OutOfRange("target must be nonnegative");
  if (max_index < 1) throw OutOfRange("max_index must be positive");
  if (target > 3 * triangular(max_index)) {
    throw Infeasible("target " + std::to_string(target) + " exceeds 3*T_" +
                     std::to_string(max_index));
  }
  if (target == 0) return {};

  bool found = false;
  Int best_sum = 0;
  std::array<Int, 3> best{};
  for (Int a = 0; a <= max_index; ++a) {
    const Int ta = triangular(a);
    if (ta > target) break;
    for (Int b = a; b <= max_index; ++b) {
      const Int tb = triangular(b);
      if (ta + tb > target) break;
      const Int c = triangular_index(target - ta - tb);
      if (c < b || c > max_index) continue;
      const std::array<Int, 3> cand{a, b, c};
      const Int sum = a + b + c;
      if (!found || sum < best_sum || (sum == best_sum && cand < best)) {
        found = true;
        best_sum = sum;
        best = cand;
      }
    }
  }
  if (!found) throw Infeasible("no 3-triangular decomposition within index bound");

  TriangularDecomposition d;
  for (Int m : best) {
    if (m > 0) d.indices.push_back(m);
  }
  std::sort(d.indices.rbegin(), d.indices.rend());
  return d;
}

Int Eq5Solution::count_sum() const {
  Int total = 0;
  for (const auto& [j, b] : groups) total = checked_add(total, checked_mul(j, b));
  return total;
}

Int Eq5Solution::triangular_sum() const {
  Int total = 0;
  for (const auto& [j, b] : groups) total = checked_add(total, checked_mul(b, triangular(j - 1)));
  return total;
}

Eq5Solution solve_eq5(Int n) {
  if (n <= 50 || n % 6 != 2) {
    throw OutOfRange("solve_eq5 needs n = 3k+2 with k even and n > 50");
  }
  const Int k = (n - 2) / 3;
  const Int count_target = exact_div(n + 4, 6);
  const Int tri_target = exact_div(n, 2);

  // dp[h] = fewest coins (sum of group sizes) writing h as a sum of
  // T_{j-1} over group sizes j >= 2; size-1 groups pad for free afterwards.
  const Int inf = std::numeric_limits<Int>::max() / 2;
  std::vector<Int> dp(static_cast<size_t>(tri_target) + 1, inf);
  std::vector<Int> choice(static_cast<size_t>(tri_target) + 1, 0);
  dp[0] = 0;
  for (Int j = 2; j <= k && triangular(j - 1) <= tri_target; ++j) {
    const Int t = triangular(j - 1);
    for (Int h = t; h <= tri_target; ++h) {
      if (dp[h - t] + j < dp[h]) {
        dp[h] = dp[h - t] + j;
        choice[h] = j;
      }
    }
  }
  if (dp[tri_target] > count_target) {
    throw Infeasible("no group assignment fits the coin budget for n = " +
                     std::to_string(n));
  }

  std::map<Int, Int> groups;
  for (Int h = tri_target; h > 0;) {
    const Int j = choice[h];
    ++groups[j];
    h -= triangular(j - 1);
  }
  const Int pad = count_target - dp[tri_target];
  if (pad > 0) groups[1] += pad;

  Eq5Solution sol;
  sol.n = n;
  sol.groups.assign(groups.begin(), groups.end());
  assert(sol.count_sum() == count_target);
  assert(sol.triangular_sum() == tri_target);
  return sol;
}

Eq5Solution plus42_lift(const Eq5Solution& sol) {
  if (sol.count_sum() != exact_div(sol.n + 4, 6) ||
      sol.triangular_sum() != exact_div(sol.n, 2)) {
    throw Infeasible("plus42_lift input does not satisfy the group constraints");
  }
  Eq5Solution out = sol;
  out.n = sol.n + 42;
  auto it = std::find_if(out.groups.begin(), out.groups.end(),
                         [](const auto& g) { return g.first == 7; });
  if (it != out.groups.end()) {
    ++it->second;
  } else {
    out.groups.emplace_back(7, 1);
    std::sort(out.groups.begin(), out.groups.end());
  }
  return out;
}

std::optional<ExceptionEntry> exception_lookup(Int n) {
  const auto& lists = exception_lists();
  auto it = lists.find(n);
  if (it == lists.end()) return std::nullopt;
  const auto& cost = exception_costs().at(n);
  return ExceptionEntry{make_weighing(n, it->second), cost.weight, cost.coins};
}

Construction construct_weight_optimal(Int n) {
  if (n < 2) throw OutOfRange("need n >= 2");
  Construction result;
  if (n == 2) {
    result.weighing = make_weighing(2, {1, -1});
    result.case_tag = CaseTag::Tiny;
    return result;
  }
  const Int r = n % 3;
  if (r == 1) {
    const Int k = (n - 1) / 3;
    result.weighing = base_ladder(2 * k + 2, n);
    result.case_tag = CaseTag::Mod1Balance;
    return result;
  }
  if (r == 0) {
    const Int k = n / 3;
    const Int s = 2 * k + 1;
    Weighing w = base_ladder(s, n);
    // Raise the left pan by D = W_R - 1 - W_L as triangular prefix groups.
    const Int d = exact_div(checked_mul(n - 2, n + 3), 6);
    const TriangularDecomposition dec = decompose_triangular_le3(d, 2 * k - 1);
    std::map<Int, Int> sizes;
    for (Int j : dec.indices) {
      apply_prefix_group(w.multiplicities, j);
      ++sizes[j];
    }
    result.weighing = make_weighing(n, std::move(w.multiplicities));
    result.case_tag = CaseTag::Mod0TightImbalance;
    result.added_groups = group_list(Pan::Left, sizes);
    return result;
  }
  const Int k = (n - 2) / 3;
  const Int s = 2 * k + 3;
  if (k % 2 == 1) {
    Weighing w = base_ladder(s, n);
    const Int copies = exact_div(k + 1, 2);
    w.multiplicities[n - 1] -= copies;
    result.weighing = make_weighing(n, std::move(w.multiplicities));
    result.case_tag = CaseTag::Mod2OddBalance;
    result.added_groups = {{Pan::Right, 1, copies}};
    return result;
  }
  if (n <= 50) {
    auto entry = exception_lookup(n);
    assert(entry);
    result.weighing = std::move(entry->weighing);
    result.case_tag = CaseTag::Mod2Exception;
    return result;
  }
  Weighing w = base_ladder(s, n);
  const Eq5Solution sol = solve_eq5(n);
  std::map<Int, Int> sizes;
  for (const auto& [j, copies] : sol.groups) {
    for (Int c = 0; c < copies; ++c) apply_suffix_group(w.multiplicities, j);
    sizes[j] += copies;
  }
  result.weighing = make_weighing(n, std::move(w.multiplicities));
  result.case_tag = CaseTag::Mod2EvenBalance;
  result.added_groups = group_list(Pan::Right, sizes);
  return result;
}

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Tiny: return "tiny";
    case CaseTag::Mod1Balance: return "mod1-balance";
    case CaseTag::Mod0TightImbalance: return "mod0-tight-imbalance";
    case CaseTag::Mod2OddBalance: return "mod2-odd-balance";
    case CaseTag::Mod2EvenBalance: return "mod2-even-balance";
    case CaseTag::Mod2Exception: return "mod2-exception";
  }
  return "?";
}

}  // namespace coinweigh
