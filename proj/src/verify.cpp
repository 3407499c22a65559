#include "coinweigh/verify.hpp"

#include <algorithm>
#include <numeric>

namespace coinweigh {

namespace {

int sign_of(Int x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

}  // namespace

VerifyReport is_verifying_bruteforce(const Weighing& w, Int cap) {
  const Int n = w.n();
  if (cap > kMaxOracleCap) throw OutOfRange("oracle cap above 12 is not supported");
  if (n > cap) {
    throw TooLarge("brute-force verification needs n <= " + std::to_string(cap) +
                   ", got n = " + std::to_string(n));
  }
  const Classification c = classify(w);
  const int want = sign_of(c.signed_total);

  VerifyReport report;
  report.method = VerifyMethod::BruteForce;
  std::vector<Int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), Int{1});
  while (std::next_permutation(perm.begin(), perm.end())) {
    ++report.permutations_checked;
    Int total = 0;
    for (Int i = 0; i < n; ++i) total = checked_add(total, checked_mul(perm[i], w.multiplicities[i]));
    if (sign_of(total) == want) {
      report.verifying = false;
      report.counterexample = perm;
      return report;
    }
  }
  report.verifying = true;
  return report;
}

VerifyReport is_verifying(const Weighing& w, Int cap) {
  const Classification c = classify(w);
  if (c.has_duplicates) {
    // Swapping two equal multiplicities leaves the total untouched.
    const auto& a = w.multiplicities;
    const Int n = w.n();
    VerifyReport report;
    report.method = VerifyMethod::FastPathDuplicates;
    report.verifying = false;
    for (Int i = 0; i < n; ++i) {
      for (Int j = i + 1; j < n; ++j) {
        if (a[i] == a[j]) {
          std::vector<Int> perm(static_cast<size_t>(n));
          std::iota(perm.begin(), perm.end(), Int{1});
          std::swap(perm[i], perm[j]);
          report.counterexample = std::move(perm);
          return report;
        }
      }
    }
    return report;  // unreachable
  }
  // A downhill weighing pairs strictly decreasing multiplicities with
  // increasing labels, so every relabeling strictly increases the total.
  // From T = 0 or T = -1 that always flips the outcome.
  if (c.downhill && c.signed_total == 0) {
    VerifyReport report;
    report.method = VerifyMethod::FastPathDownhillBalance;
    report.verifying = true;
    return report;
  }
  if (c.downhill && c.signed_total == -1) {
    VerifyReport report;
    report.method = VerifyMethod::FastPathTightDownhill;
    report.verifying = true;
    return report;
  }
  return is_verifying_bruteforce(w, cap);
}

Int min_gap(const Weighing& w) {
  const Classification c = classify(w);
  if (!c.downhill) throw NotDownhill("min_gap requires a downhill weighing");
  if (w.n() < 2) throw OutOfRange("min_gap requires n >= 2");
  Int best = std::numeric_limits<Int>::max();
  for (size_t i = 0; i + 1 < w.multiplicities.size(); ++i) {
    best = std::min(best, w.multiplicities[i] - w.multiplicities[i + 1]);
  }
  return best;
}

const char* verify_method_name(VerifyMethod m) {
  switch (m) {
    case VerifyMethod::FastPathDownhillBalance: return "fast path: downhill balance";
    case VerifyMethod::FastPathTightDownhill: return "fast path: tight downhill";
    case VerifyMethod::FastPathDuplicates: return "fast path: duplicate multiplicities";
    case VerifyMethod::BruteForce: return "brute force";
  }
  return "?";
}

}  // namespace coinweigh
