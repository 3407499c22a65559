#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "coinweigh/verify.hpp"
#include "test_util.hpp"

using namespace coinweigh;

namespace {

int sign_of(Int x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

Int permuted_total(const std::vector<Int>& a, const std::vector<Int>& perm) {
  Int total = 0;
  for (size_t i = 0; i < a.size(); ++i) total += perm[i] * a[i];
  return total;
}

// Independent reference oracle: plain enumeration, no early exits shared
// with the implementation under test.
bool reference_verifying(const std::vector<Int>& a) {
  const Int n = static_cast<Int>(a.size());
  std::vector<Int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), Int{1});
  const int want = sign_of(permuted_total(a, perm));
  bool ok = true;
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (sign_of(permuted_total(a, perm)) == want) ok = false;
  }
  return ok;
}

}  // namespace

TEST_CASE("brute force on the non-downhill examples") {
  CHECK(is_verifying_bruteforce(make_weighing(3, {3, -3, 1})).verifying);
  CHECK(is_verifying_bruteforce(make_weighing(4, {4, -1, -2, 1})).verifying);
}

TEST_CASE("brute force reports the lexicographically first counterexample") {
  const Weighing w = make_weighing(3, {1, 0, -1});
  const VerifyReport report = is_verifying_bruteforce(w);
  CHECK(!report.verifying);
  REQUIRE(report.counterexample.has_value());

  // Reference enumeration of all counterexamples, in lexicographic order.
  std::vector<Int> perm{1, 2, 3};
  const int want = sign_of(permuted_total(w.multiplicities, perm));
  std::vector<std::vector<Int>> counterexamples;
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (sign_of(permuted_total(w.multiplicities, perm)) == want) counterexamples.push_back(perm);
  }
  REQUIRE(!counterexamples.empty());
  CHECK(*report.counterexample == counterexamples.front());
  // Applying the reported relabeling reproduces the outcome sign.
  CHECK(sign_of(permuted_total(w.multiplicities, *report.counterexample)) == want);
}

TEST_CASE("brute force cap") {
  std::vector<Int> a(11);
  for (int i = 0; i < 11; ++i) a[i] = 10 - 2 * i;
  CHECK_THROWS_AS(is_verifying_bruteforce(make_weighing(11, a)), TooLarge);
  CHECK_THROWS_AS(is_verifying_bruteforce(make_weighing(11, a), 13), OutOfRange);
  CHECK_NOTHROW(is_verifying_bruteforce(make_weighing(11, a), 11));
}

TEST_CASE("fast paths and their tags") {
  const VerifyReport balance = is_verifying(make_weighing(5, {3, 2, 1, 0, -2}));
  CHECK(balance.verifying);
  CHECK(balance.method == VerifyMethod::FastPathDownhillBalance);
  CHECK(balance.permutations_checked == 0);

  const VerifyReport tight = is_verifying(make_weighing(6, {4, 3, 2, 0, -1, -2}));
  CHECK(tight.verifying);
  CHECK(tight.method == VerifyMethod::FastPathTightDownhill);

  const VerifyReport dup = is_verifying(make_weighing(3, {1, 1, -1}));
  CHECK(!dup.verifying);
  CHECK(dup.method == VerifyMethod::FastPathDuplicates);
  CHECK(dup.permutations_checked == 0);
  REQUIRE(dup.counterexample.has_value());
  CHECK(*dup.counterexample == std::vector<Int>{2, 1, 3});
  CHECK(sign_of(permuted_total({1, 1, -1}, *dup.counterexample)) == sign_of(Int{1 + 2 - 3}));

  const VerifyReport brute = is_verifying(make_weighing(3, {3, -3, 1}));
  CHECK(brute.verifying);
  CHECK(brute.method == VerifyMethod::BruteForce);
}

TEST_CASE("fast paths avoid enumeration even past the cap") {
  // Ladder for s = 21, n = 30, with the left pan raised 154 = T_16 + T_5 + T_2
  // to land on a tight imbalance; n = 30 is far beyond the brute-force cap.
  std::vector<Int> a(30);
  for (Int i = 1; i <= 30; ++i) a[i - 1] = 20 - i;
  for (Int g : {16, 5, 2}) {
    for (Int i = 0; i < g; ++i) ++a[i];
  }
  const Weighing w = make_weighing(30, a);
  const Classification c = classify(w);
  REQUIRE(c.downhill);
  REQUIRE(c.signed_total == -1);
  const VerifyReport report = is_verifying(w);
  CHECK(report.verifying);
  CHECK(report.method == VerifyMethod::FastPathTightDownhill);
  CHECK(report.permutations_checked == 0);
}

TEST_CASE("a downhill left-heavier tight weighing is not verifying") {
  // The tight-downhill shortcut is one-sided: relabelings only push the total
  // up, so from +1 the sign never changes.
  const VerifyReport report = is_verifying(make_weighing(2, {1, 0}));
  CHECK(report.method == VerifyMethod::BruteForce);
  CHECK(!report.verifying);
}

TEST_CASE("min_gap") {
  CHECK(min_gap(make_weighing(6, {4, 3, 2, 0, -1, -2})) == 1);
  CHECK(min_gap(make_weighing(4, {4, 2, 0, -2})) == 2);
  CHECK(min_gap(make_weighing(4, {5, 4, 2, -1})) == 1);
  CHECK_THROWS_AS(min_gap(make_weighing(3, {1, 2, 3})), NotDownhill);
  CHECK_THROWS_AS(min_gap(make_weighing(1, {1})), OutOfRange);
}

TEST_CASE("fast path agrees with brute force on every small downhill vector") {
  Int checked = 0;
  for (Int n = 2; n <= 8; ++n) {
    testutil::for_each_downhill(n, -5, 5, [&](const std::vector<Int>& a) {
      const Weighing w{a};
      const VerifyReport fast = is_verifying(w);
      const VerifyReport brute = is_verifying_bruteforce(w);
      CHECK(fast.verifying == brute.verifying);
      ++checked;
    });
  }
  CHECK(checked == 1969);  // sum of C(11,n) for n = 2..8
}

TEST_CASE("rearrangement: relabeling a downhill weighing strictly raises the total") {
  for (int trial = 0; trial < 40; ++trial) {
    const Int n = testutil::rand_int(2, 7);
    const std::vector<Int> a = testutil::random_downhill(n, 6);
    std::vector<Int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), Int{1});
    const Int base = permuted_total(a, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
      CHECK(permuted_total(a, perm) > base);
    }
  }
}

TEST_CASE("scaling keeps weighings verifying") {
  Int scaled_checked = 0;
  for (Int n = 2; n <= 5; ++n) {
    testutil::for_each_vector(n, -4, 4, [&](const std::vector<Int>& a) {
      const Weighing w{a};
      if (!is_verifying_bruteforce(w).verifying) return;
      for (Int k : {2, 3, 5}) {
        CHECK(is_verifying_bruteforce(scale(w, k)).verifying);
        ++scaled_checked;
      }
    });
  }
  // A non-downhill verifying balance scales too.
  for (Int k : {2, 3, 5}) {
    CHECK(is_verifying_bruteforce(scale(make_weighing(3, {3, -3, 1}), k)).verifying);
  }
  CHECK(scaled_checked > 200);
}

TEST_CASE("verifying left-lighter imbalances are downhill with gap >= |T|") {
  Int found = 0;
  const auto probe = [&](const std::vector<Int>& a) {
    const Weighing w{a};
    const Classification c = classify(w);
    if (c.signed_total >= 0) return;
    if (!reference_verifying(a)) return;
    CHECK(c.downhill);
    CHECK(min_gap(w) >= -c.signed_total);
    ++found;
  };
  for (Int n = 2; n <= 5; ++n) testutil::for_each_vector(n, -4, 4, probe);
  testutil::for_each_vector(6, -2, 2, probe);
  CHECK(found > 15);
}

TEST_CASE("oracle fast paths match a from-scratch reference") {
  for (Int n = 2; n <= 5; ++n) {
    testutil::for_each_vector(n, -2, 2, [&](const std::vector<Int>& a) {
      CHECK(is_verifying(Weighing{a}).verifying == reference_verifying(a));
    });
  }
}
