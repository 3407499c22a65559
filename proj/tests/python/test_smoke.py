"""Smoke tests for the python bindings."""

import math

import pytest

import coinweigh as cw


def test_weighing_roundtrip():
    w = cw.Weighing([2, 1, 0, -1])
    assert w.n == 4
    assert w.multiplicities == [2, 1, 0, -1]
    assert cw.render(w) == "112=4"
    assert cw.parse_rendered(4, "112=4") == w
    with pytest.raises(ValueError):
        cw.make_weighing(3, [2, 0])


def test_classify():
    c = cw.classify(cw.Weighing([4, 3, 2, 0, -1, -2]))
    assert c.outcome == cw.Outcome.LEFT_LIGHTER
    assert c.tight and c.downhill
    assert c.total_coins == 12
    assert c.total_weight == 33
    assert c.separation_point == 5


def test_verify():
    assert cw.is_verifying(cw.Weighing([3, -3, 1])).verifying
    report = cw.is_verifying(cw.Weighing([3, 2, 1, 0, -2]))
    assert report.method == cw.VerifyMethod.FAST_PATH_DOWNHILL_BALANCE
    bad = cw.is_verifying(cw.Weighing([1, 1, -1]))
    assert not bad.verifying and bad.counterexample == [2, 1, 3]


def test_bounds():
    r = cw.bounds_report(8)
    assert (r.s_star, r.w_bounding, r.coin_floor, r.coin_ceiling) == (7, 70, 16, None)
    assert cw.closed_form_min_weight(8) == 75
    assert cw.coin_bounds(13) == (46, 46)
    assert cw.naive_bound(4) == (26, 40)


def test_construct():
    c = cw.construct_weight_optimal(8)
    assert c.weighing.multiplicities == [7, 4, 3, 2, 1, 0, -2, -3]
    assert c.case_tag == cw.CaseTag.MOD2_EXCEPTION
    for n in range(2, 60):
        built = cw.construct_weight_optimal(n)
        assert cw.classify(built.weighing).total_weight == cw.closed_form_min_weight(n)


def test_eq5():
    sol = cw.solve_eq5(62)
    assert sol.count_sum() == 11 and sol.triangular_sum() == 31
    lifted = cw.plus42_lift(sol)
    assert lifted.n == 104
    assert lifted.count_sum() == 18 and lifted.triangular_sum() == 52


def test_search():
    r = cw.search_downhill(8, cw.Objective.WEIGHT)
    assert r.optimum == 75 and r.proven
    assert [w.multiplicities for w in r.witnesses] == [[7, 4, 3, 2, 1, 0, -2, -3]]
    oracle = cw.search_all_oracle(3, cw.Objective.WEIGHT, 4, 6)
    assert oracle.optimum == 4


def test_special_forms():
    solo = cw.construct_solo(5, cw.SoloVariant.ONE_BASED)
    assert solo.weighing.multiplicities == [4, 3, 2, 1, -4]
    assert cw.solo_cost(5, cw.SoloVariant.ONE_BASED) == (14, 40)
    assert cw.construct_solo(9, cw.SoloVariant.ZERO_BASED) is None
    ap = cw.construct_ap(5, 3)
    assert ap.multiplicities == [8, 5, 2, -1, -4]


def test_nontight():
    sp, floor = cw.nontight_weight_floor(8)
    assert floor == 126 and math.isclose(round(sp, 2), 5.26)
    rows = cw.dominance_table(3, 15)
    assert all(r.dominated for r in rows)
    assert cw.nontight_coin_floor(8).ceil() == 28


def test_sequences_offline():
    rows = cw.sequence_table(3, 8)
    assert [r.w_min for r in rows] == [5, 8, 20, 33, 40, 75]
    assert cw.golden_diff_mismatches() == []
    options = cw.OeisOptions()
    options.offline = True
    checks = cw.run_named_oeis_checks(options)
    assert len(checks) == 9
    assert all(c.status == cw.OeisStatus.MATCH for c in checks)
