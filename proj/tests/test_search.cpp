#include <algorithm>
#include <set>

#include "doctest.h"

#include "coinweigh/bounds.hpp"
#include "coinweigh/construct.hpp"
#include "coinweigh/search.hpp"
#include "test_util.hpp"

using namespace coinweigh;

namespace {

bool has_witness(const SearchResult& r, const std::vector<Int>& mult) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const Weighing& w) { return w.multiplicities == mult; });
}

// Reference optimum by sheer enumeration of every strictly decreasing vector
// with entries in [-cap, cap]; any weighing within the objective cap has all
// |a_i| below it, so nothing is missed.
std::pair<Int, std::set<std::vector<Int>>> reference_downhill(Int n, Objective obj, Int cap) {
  Int best = -1;
  std::set<std::vector<Int>> witnesses;
  testutil::for_each_downhill(n, -cap, cap, [&](const std::vector<Int>& a) {
    const Classification c = classify(Weighing{a});
    if (c.signed_total != 0 && c.signed_total != -1) return;
    const Int value = obj == Objective::Weight ? c.total_weight : c.total_coins;
    if (value > cap) return;
    if (best < 0 || value < best) {
      best = value;
      witnesses.clear();
    }
    if (value == best) witnesses.insert(a);
  });
  return {best, witnesses};
}

}  // namespace

TEST_CASE("search matches a from-scratch enumeration, witnesses included") {
  struct Case {
    Int n;
    Objective obj;
    Int cap;
  };
  const Case cases[] = {
      {2, Objective::Weight, 3},  {3, Objective::Weight, 5},  {4, Objective::Weight, 8},
      {5, Objective::Weight, 20}, {2, Objective::Coins, 2},   {4, Objective::Coins, 4},
      {5, Objective::Coins, 8},   {6, Objective::Coins, 12},  {6, Objective::Coins, 14},
  };
  for (const auto& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.cap);
    const auto [ref_best, ref_witnesses] = reference_downhill(c.n, c.obj, c.cap);
    REQUIRE(ref_best >= 0);
    const SearchResult r = search_downhill(c.n, c.obj, c.cap);
    CHECK(r.optimum == ref_best);
    CHECK(r.proven);
    std::set<std::vector<Int>> got;
    for (const auto& w : r.witnesses) got.insert(w.multiplicities);
    CHECK(got == ref_witnesses);
  }
}

TEST_CASE("downhill weight search reproduces the exceptional n=8 optimum") {
  const SearchResult r = search_downhill(8, Objective::Weight, 75);
  CHECK(r.optimum == 75);
  CHECK(r.proven);
  CHECK(has_witness(r, {7, 4, 3, 2, 1, 0, -2, -3}));
  CHECK(r.restriction == Restriction::DownhillBalancedOrTight);
}

TEST_CASE("downhill coin search at small n") {
  const SearchResult r7 = search_downhill(7, Objective::Coins, 20);
  CHECK(r7.optimum == 13);
  CHECK(r7.proven);

  const SearchResult r10 = search_downhill(10, Objective::Coins, 30);
  CHECK(r10.optimum == 27);
  CHECK(r10.proven);
}

TEST_CASE("weight search equals the closed form for n = 3..14") {
  for (Int n = 3; n <= 14; ++n) {
    const SearchResult r = search_downhill(n, Objective::Weight, default_search_cap(n, Objective::Weight));
    CHECK(r.optimum == closed_form_min_weight(n));
    CHECK(r.proven);
    CHECK(!r.witnesses.empty());
  }
}

TEST_CASE("coin search lands between the published bounds") {
  const Int bold[] = {2, 3, 4, 8, 12, 13};
  for (Int n = 2; n <= 7; ++n) {
    const SearchResult r = search_downhill(n, Objective::Coins, default_search_cap(n, Objective::Coins));
    CHECK(r.optimum == bold[n - 2]);
    CHECK(r.proven);
    const auto [floor, ceiling] = coin_bounds(n);
    CHECK(r.optimum >= floor);
    if (ceiling) CHECK(r.optimum <= *ceiling);
  }
}

TEST_CASE("every witness is verifying") {
  for (Int n = 3; n <= 9; ++n) {
    for (Objective obj : {Objective::Weight, Objective::Coins}) {
      const SearchResult r = search_downhill(n, obj, default_search_cap(n, obj));
      for (const auto& w : r.witnesses) {
        CHECK(is_verifying(w).verifying);
      }
    }
  }
}

TEST_CASE("witness lists are sorted and independent of the thread count") {
  SearchOptions seq;
  seq.threads = 1;
  SearchOptions par;
  par.threads = 4;
  for (Objective obj : {Objective::Weight, Objective::Coins}) {
    const SearchResult a = search_downhill(9, obj, default_search_cap(9, obj), seq);
    const SearchResult b = search_downhill(9, obj, default_search_cap(9, obj), par);
    CHECK(a.optimum == b.optimum);
    CHECK(a.nodes_explored == b.nodes_explored);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (size_t i = 0; i < a.witnesses.size(); ++i) {
      CHECK(a.witnesses[i].multiplicities == b.witnesses[i].multiplicities);
    }
    CHECK(std::is_sorted(a.witnesses.begin(), a.witnesses.end(),
                         [](const Weighing& x, const Weighing& y) {
                           return x.multiplicities < y.multiplicities;
                         }));
  }
}

TEST_CASE("infeasible caps raise CapExceeded") {
  CHECK_THROWS_AS(search_downhill(5, Objective::Weight, 10), CapExceeded);
  CHECK_THROWS_AS(search_downhill(5, Objective::Coins, 5), CapExceeded);
}

TEST_CASE("witness limit truncates to the lexicographically smallest") {
  const SearchResult full = search_downhill(12, Objective::Coins, 47);
  REQUIRE(full.witnesses.size() >= 2);
  SearchOptions small;
  small.witness_limit = 1;
  const SearchResult limited = search_downhill(12, Objective::Coins, 47, small);
  REQUIRE(limited.witnesses.size() == 1);
  CHECK(limited.witnesses[0].multiplicities == full.witnesses[0].multiplicities);
  CHECK(limited.optimum == full.optimum);
}

TEST_CASE("all-vector oracle search on three bags finds the lighter balance") {
  // Total weight 4 is attainable without the downhill shape: two type-1
  // coins against one type-2 coin.
  const SearchResult r = search_all_oracle(3, Objective::Weight, 4, 6);
  CHECK(r.optimum == 4);
  CHECK(r.proven);
  CHECK(has_witness(r, {2, -1, 0}));
  CHECK(has_witness(r, {-2, 1, 0}));
  CHECK(r.restriction == Restriction::AllWeighingsViaOracle);
}

TEST_CASE("all-vector oracle search: small coin optima") {
  const SearchResult r2 = search_all_oracle(2, Objective::Coins, 3, 5);
  CHECK(r2.optimum == 2);
  CHECK(has_witness(r2, {1, -1}));

  const SearchResult r4 = search_all_oracle(4, Objective::Coins, 4, 10);
  CHECK(r4.optimum == 4);
  CHECK(has_witness(r4, {2, 1, 0, -1}));

  CHECK_THROWS_AS(search_all_oracle(7, Objective::Coins, 3, 10), TooLarge);
}

TEST_CASE("oracle search agrees with downhill search except the n=3 weight case") {
  for (Int n = 2; n <= 5; ++n) {
    const Int wcap = default_search_cap(n, Objective::Weight);
    const SearchResult down = search_downhill(n, Objective::Weight, wcap);
    const SearchResult all = search_all_oracle(n, Objective::Weight, wcap, wcap);
    if (n == 3) {
      CHECK(down.optimum == 5);
      CHECK(all.optimum == 4);
    } else {
      CHECK(down.optimum == all.optimum);
    }

    const Int ccap = default_search_cap(n, Objective::Coins);
    const SearchResult down_c = search_downhill(n, Objective::Coins, ccap);
    const SearchResult all_c = search_all_oracle(n, Objective::Coins, ccap, ccap);
    CHECK(down_c.optimum == all_c.optimum);
  }
}

TEST_CASE("including non-tight imbalances never improves the optimum at small n") {
  SearchOptions nt;
  nt.include_nontight = true;
  for (Int n = 3; n <= 6; ++n) {
    for (Objective obj : {Objective::Weight, Objective::Coins}) {
      const Int cap = default_search_cap(n, obj);
      const SearchResult base = search_downhill(n, obj, cap);
      const SearchResult wide = search_downhill(n, obj, cap, nt);
      CHECK(wide.optimum == base.optimum);
      CHECK(wide.restriction == Restriction::DownhillIncludeNonTight);
    }
  }
}

TEST_CASE("non-tight mode matches a from-scratch oracle enumeration") {
  // Reference: every downhill vector with T <= 0 that the plain oracle
  // accepts, smallest objective first.
  SearchOptions nt;
  nt.include_nontight = true;
  struct Case {
    Int n;
    Objective obj;
    Int cap;
  };
  const Case cases[] = {
      {2, Objective::Coins, 6},  {3, Objective::Coins, 7},  {4, Objective::Coins, 9},
      {2, Objective::Weight, 9}, {3, Objective::Weight, 9},
  };
  for (const auto& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.cap);
    Int best = -1;
    std::set<std::vector<Int>> expected;
    testutil::for_each_downhill(c.n, -c.cap, c.cap, [&](const std::vector<Int>& a) {
      const Weighing w{a};
      const Classification cls = classify(w);
      if (cls.signed_total > 0) return;
      const Int value = c.obj == Objective::Weight ? cls.total_weight : cls.total_coins;
      if (value > c.cap) return;
      if (!is_verifying_bruteforce(w).verifying) return;
      if (best < 0 || value < best) {
        best = value;
        expected.clear();
      }
      if (value == best) expected.insert(a);
    });
    REQUIRE(best >= 0);
    const SearchResult r = search_downhill(c.n, c.obj, c.cap, nt);
    CHECK(r.optimum == best);
    std::set<std::vector<Int>> got;
    for (const auto& w : r.witnesses) got.insert(w.multiplicities);
    CHECK(got == expected);
  }
}

TEST_CASE("timeouts surface as unproven results") {
  SearchOptions opts;
  opts.timeout_seconds = 1e-6;
  // Large enough that the subtree walk cannot finish inside the deadline.
  try {
    const SearchResult r =
        search_downhill(30, Objective::Coins, default_search_cap(30, Objective::Coins), opts);
    CHECK(!r.proven);
  } catch (const CapExceeded&) {
    // Nothing found before the deadline; equally acceptable.
  }
}

TEST_CASE("default caps are feasible by construction") {
  for (Int n = 2; n <= 60; ++n) {
    const Construction c = construct_weight_optimal(n);
    CHECK(default_search_cap(n, Objective::Weight) == classify(c.weighing).total_weight);
    CHECK(default_search_cap(n, Objective::Coins) == classify(c.weighing).total_coins);
  }
}
