"""Acceptance gate: the eight headline checks at full scale.

Each test replays one criterion over its complete grid with exact
equality and asserts the runtime stays inside the stated budget.  The
check counts are pinned so a silently shrunken grid fails loudly.
"""

from llclab import selftest


def _gate(fn, budget=None):
    rep = fn("full")
    verdict = "PASS" if rep["ok"] else "FAIL"
    print(
        f"criterion {rep['criterion']} ({rep['name']}): {verdict} "
        f"[{rep['checked']} checks, {round(rep['seconds'], 2)}s]"
    )
    assert rep["ok"], rep["failures"]
    if budget is not None:
        assert rep["seconds"] < budget, f"over budget: {rep['seconds']}s >= {budget}s"
    return rep


def test_criterion_1_gauss_closed_form():
    rep = _gate(selftest.criterion_gauss_closed_form, budget=60)
    assert rep["checked"] == 29300


def test_criterion_2_twisted_gauss_ratio():
    rep = _gate(selftest.criterion_gauss_twist, budget=120)
    assert rep["checked"] == 3_084_560


def test_criterion_3_zeta_integral_collapse():
    rep = _gate(selftest.criterion_zeta_collapse, budget=300)
    assert rep["checked"] == 936


def test_criterion_4_epsilon_matching():
    rep = _gate(selftest.criterion_matching, budget=300)
    assert rep["checked"] == 29300
    assert rep["with_integral_path"] > 0


def test_criterion_5_determination_round_trip():
    rep = _gate(selftest.criterion_determination, budget=60)
    assert rep["checked"] == 29300


def test_criterion_6_facets_and_stability():
    rep = _gate(selftest.criterion_stability, budget=600)
    assert rep["checked"] == 501
    assert rep["nonbarycenter_points"] == 67
    assert rep["functionals"] == 77436


def test_criterion_7_whittaker_pair_invariance():
    rep = _gate(selftest.criterion_pairs, budget=300)
    assert rep["checked"] == 2688


def test_criterion_8_independent_oracles():
    rep = _gate(selftest.criterion_oracles)
    assert rep["checked"] == 6214
