#include "doctest.h"

#include "coinweigh/special.hpp"
#include "coinweigh/verify.hpp"

using namespace coinweigh;

TEST_CASE("solo weighings for five bags") {
  const auto one = construct_solo(5, SoloVariant::OneBased);
  REQUIRE(one.has_value());
  CHECK(one->weighing.multiplicities == std::vector<Int>{4, 3, 2, 1, -4});
  CHECK(one->kind == SoloKind::Balance);
  CHECK(solo_cost(5, SoloVariant::OneBased) == std::pair<Int, Int>{14, 40});

  const auto zero = construct_solo(5, SoloVariant::ZeroBased);
  REQUIRE(zero.has_value());
  CHECK(zero->weighing.multiplicities == std::vector<Int>{3, 2, 1, 0, -2});
  CHECK(solo_cost(5, SoloVariant::ZeroBased) == std::pair<Int, Int>{8, 20});
}

TEST_CASE("solo absence") {
  CHECK(!construct_solo(9, SoloVariant::ZeroBased).has_value());
  CHECK(!construct_solo(4, SoloVariant::OneBased).has_value());
  CHECK_THROWS_AS(solo_cost(9, SoloVariant::ZeroBased), NotExists);
  // n = 2 zero-based would be the empty weighing; it does not exist here
  // even though 2 = -1 mod 3.
  CHECK(!construct_solo(2, SoloVariant::ZeroBased).has_value());
}

TEST_CASE("solo costs evaluate the closed forms") {
  CHECK(solo_cost(7, SoloVariant::OneBased) == std::pair<Int, Int>{29, 112});
  CHECK(solo_cost(7, SoloVariant::ZeroBased) == std::pair<Int, Int>{20, 70});
}

TEST_CASE("the two imbalanced solo cases") {
  const auto two = construct_solo(2, SoloVariant::OneBased);
  REQUIRE(two.has_value());
  CHECK(two->kind == SoloKind::TightImbalance);
  CHECK(two->weighing.multiplicities == std::vector<Int>{1, -1});

  const auto six = construct_solo(6, SoloVariant::OneBased);
  REQUIRE(six.has_value());
  CHECK(six->kind == SoloKind::TightImbalance);
  CHECK(six->weighing.multiplicities == std::vector<Int>{5, 4, 3, 2, 1, -6});
  CHECK(classify(six->weighing).signed_total == -1);
  CHECK(solo_cost(6, SoloVariant::OneBased) == std::pair<Int, Int>{21, 71});
}

TEST_CASE("solo existence matches the modular conditions") {
  for (Int n = 2; n <= 200; ++n) {
    const bool one_based = construct_solo(n, SoloVariant::OneBased).has_value();
    CHECK(one_based == (n % 6 == 1 || n % 6 == 5 || n == 2 || n == 6));
    const bool zero_based = construct_solo(n, SoloVariant::ZeroBased).has_value();
    CHECK(zero_based == (n >= 3 && n % 3 != 0));
  }
}

TEST_CASE("solo non-existence is a divisibility fact") {
  for (Int n = 2; n <= 100; ++n) {
    const Int left_one = comb3(n + 1);
    if (!(n % 6 == 1 || n % 6 == 5)) CHECK(left_one % n != 0);
    const Int left_zero = comb3(n);
    if (n % 3 == 0) CHECK(left_zero % n != 0);
  }
}

TEST_CASE("solo costs and kinds agree with classification") {
  for (Int n = 2; n <= 200; ++n) {
    for (SoloVariant v : {SoloVariant::OneBased, SoloVariant::ZeroBased}) {
      const auto solo = construct_solo(n, v);
      if (!solo) continue;
      const Classification c = classify(solo->weighing);
      CHECK(c.downhill);
      CHECK(solo_cost(n, v) == std::pair<Int, Int>{c.total_coins, c.total_weight});
      if (solo->kind == SoloKind::Balance) {
        CHECK(c.outcome == Outcome::Balance);
      } else {
        CHECK(c.signed_total == -1);
      }
      // Exactly one coin type on the right pan.
      Int negative_types = 0;
      for (Int m : solo->weighing.multiplicities) negative_types += m < 0 ? 1 : 0;
      CHECK(negative_types == 1);
    }
  }
}

TEST_CASE("one-based solo balances hit their closed-form cost for n up to 1000") {
  for (Int n = 2; n <= 1000; ++n) {
    const auto solo = construct_solo(n, SoloVariant::OneBased);
    if (!solo || solo->kind != SoloKind::Balance) continue;
    const Classification c = classify(solo->weighing);
    CHECK(c.total_weight == 2 * comb3(n + 1));
    CHECK(c.total_coins == (4 * n * n - 3 * n - 1) / 6);
  }
}

TEST_CASE("solo weighings pass the oracle") {
  for (Int n = 2; n <= 8; ++n) {
    for (SoloVariant v : {SoloVariant::OneBased, SoloVariant::ZeroBased}) {
      const auto solo = construct_solo(n, v);
      if (!solo) continue;
      CHECK(is_verifying_bruteforce(solo->weighing).verifying);
    }
  }
  for (Int n = 9; n <= 100; ++n) {
    const auto solo = construct_solo(n, SoloVariant::OneBased);
    if (!solo) continue;
    const VerifyReport report = is_verifying(solo->weighing);
    CHECK(report.verifying);
    CHECK(report.method != VerifyMethod::BruteForce);
  }
}

TEST_CASE("arithmetic-progression weighings") {
  const auto ap53 = construct_ap(5, 3);
  REQUIRE(ap53.has_value());
  CHECK(ap53->multiplicities == std::vector<Int>{8, 5, 2, -1, -4});

  const auto ap41 = construct_ap(4, 1);
  REQUIRE(ap41.has_value());
  CHECK(ap41->multiplicities == std::vector<Int>{2, 1, 0, -1});

  CHECK(!construct_ap(5, 1).has_value());
  CHECK(!construct_ap(6, 2).has_value());
  CHECK(!construct_ap(6, 4).has_value());
  CHECK_THROWS_AS(construct_ap(2, 3), OutOfRange);
  CHECK_THROWS_AS(construct_ap(5, 0), OutOfRange);
}

TEST_CASE("the d=3 family has the general form 2n-2, 2n-5, ..., 1-n") {
  for (Int n = 3; n <= 50; ++n) {
    const auto ap = construct_ap(n, 3);
    REQUIRE(ap.has_value());
    for (Int i = 0; i < n; ++i) CHECK(ap->multiplicities[i] == 2 * n - 2 - 3 * i);
    CHECK(ap->multiplicities.back() == 1 - n);
    const Classification c = classify(*ap);
    CHECK(c.outcome == Outcome::Balance);
    CHECK(c.downhill);
    const VerifyReport report = is_verifying(*ap);
    CHECK(report.verifying);
    CHECK(report.method == VerifyMethod::FastPathDownhillBalance);
  }
}

TEST_CASE("AP weighings pass the full oracle at small n") {
  for (Int n = 3; n <= 8; ++n) {
    for (Int d : {1, 3}) {
      const auto ap = construct_ap(n, d);
      if (!ap) continue;
      CHECK(is_verifying_bruteforce(*ap).verifying);
    }
  }
}

TEST_CASE("d=1 APs are primitive; d=3 APs are primitive unless n = 3k+1") {
  for (Int n = 3; n <= 60; ++n) {
    if (const auto ap = construct_ap(n, 1)) CHECK(classify(*ap).primitive);
    const auto ap3 = construct_ap(n, 3);
    REQUIRE(ap3.has_value());
    CHECK(classify(*ap3).primitive == (n % 3 != 1));
  }
}
