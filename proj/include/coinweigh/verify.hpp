#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coinweigh/weighing.hpp"

namespace coinweigh {

enum class VerifyMethod {
  FastPathDownhillBalance,
  FastPathTightDownhill,
  FastPathDuplicates,
  BruteForce,
};

struct VerifyReport {
  bool verifying = false;
  VerifyMethod method = VerifyMethod::BruteForce;
  // A relabeling of 1..n (image form) that reproduces the outcome sign;
  // present iff not verifying. Brute force reports the lexicographically
  // first one.
  std::optional<std::vector<Int>> counterexample;
  std::uint64_t permutations_checked = 0;
};

// 10! is ~3.6M permutations, sub-second with early exit. 12 is the hard
// ceiling; anything above it is factorially hopeless.
inline constexpr Int kDefaultOracleCap = 10;
inline constexpr Int kMaxOracleCap = 12;

// Checks every permutation pi != identity of 1..n: verifying iff
// sign(sum pi(i)*a_i) differs from sign(sum i*a_i) for all of them.
VerifyReport is_verifying_bruteforce(const Weighing& w, Int cap = kDefaultOracleCap);

// Fast paths for the shapes where a relabeling can only raise the signed
// total (downhill balance, downhill tight left-lighter imbalance) or where
// a transposition trivially reproduces it (duplicates); brute force else.
VerifyReport is_verifying(const Weighing& w, Int cap = kDefaultOracleCap);

// Minimum over i of a_i - a_{i+1}; requires a downhill weighing with n >= 2.
// Any verifying imbalance with |T| = d has min_gap >= d.
Int min_gap(const Weighing& w);

const char* verify_method_name(VerifyMethod m);

}  // namespace coinweigh
