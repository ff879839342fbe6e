import pytest
from hypothesis import given, strategies as st

import latq


def closure_lattices():
    return st.builds(
        lambda seed, n: latq.generate(
            latq.GeneratorSpec("random", seed=seed, n=n)),
        st.integers(0, 5000), st.integers(1, 7))


def test_criteria_hold_on_distributive_zoo(zoo):
    for name in ("c1", "c2", "c3", "c4", "b2", "b3", "p23"):
        L = zoo[name]
        assert latq.raney_join_criterion(L).holds, name
        assert latq.raney_meet_criterion(L).holds, name
        assert latq.distributive_oracle(L).holds, name


def test_criteria_fail_with_witnesses_on_m3_n5(zoo):
    m3, n5 = zoo["m3"], zoo["n5"]
    rj = latq.raney_join_criterion(m3)
    assert not rj.holds
    assert rj.witness == {"x": 1, "computed": 0}
    rm = latq.raney_meet_criterion(n5)
    assert not rm.holds
    assert rm.witness["y"] == 1
    om3 = latq.distributive_oracle(m3)
    assert not om3.holds
    x, y, z = om3.witness["x"], om3.witness["y"], om3.witness["z"]
    assert m3.meet[x, m3.join[y, z]] == om3.witness["lhs"]
    assert m3.join[m3.meet[x, y], m3.meet[x, z]] == om3.witness["rhs"]
    assert om3.witness["lhs"] != om3.witness["rhs"]


@given(closure_lattices())
def test_three_criteria_always_agree(L):
    assert latq.criteria_agree(L)


@given(closure_lattices())
def test_bounded_family_check_matches_criteria(L):
    fam = latq.bounded_family_cd_check(L)
    assert fam.holds == latq.raney_join_criterion(L).holds


def test_bounded_family_witness_replays(zoo):
    L = zoo["m3"]
    res = latq.bounded_family_cd_check(L)
    assert not res.holds
    rows = res.witness["family"]
    lhs = L.inf(L.sup(r) for r in rows)
    assert lhs == res.witness["lhs"]
    # rhs is the join over choice functions of row-element meets
    import itertools
    rhs = L.bottom
    for psi in itertools.product(range(len(rows[0])), repeat=len(rows)):
        term = L.inf(rows[i][psi[i]] for i in range(len(rows)))
        rhs = int(L.join[rhs, term])
    assert rhs == res.witness["rhs"]
    assert lhs != rhs


def test_bounded_family_cap():
    big = latq.generate(latq.GeneratorSpec("boolean", k=4))
    with pytest.raises(latq.CapExceeded):
        latq.bounded_family_cd_check(big, work_cap=10)


def test_is_spatial(zoo):
    assert latq.is_spatial(zoo["c3"])
    assert latq.is_spatial(zoo["b3"])
    # n5: the doubled chain's middle element is not a join of primes
    assert not latq.is_spatial(zoo["n5"])
    assert not latq.is_spatial(zoo["m3"])
    assert latq.is_spatial(zoo["c1"])


def test_profile_fixtures(zoo):
    doc = latq.classify_lattice(zoo["m3"]).as_doc()
    assert doc == {
        "name": "m3", "n": 5, "chain": False, "distributive": False,
        "completely_distributive": False, "smooth": True, "spatial": False,
        "join_primes": [],
    }
    doc = latq.classify_lattice(zoo["c3"]).as_doc()
    assert doc == {
        "name": "c3", "n": 3, "chain": True, "distributive": True,
        "completely_distributive": True, "smooth": False, "spatial": True,
        "join_primes": [1, 2],
    }
    doc = latq.classify_lattice(zoo["n5"]).as_doc()
    assert doc["completely_distributive"] is False
    assert doc["smooth"] is False
    assert doc["join_primes"] == [1, 2]


def test_check_result_doc_timing_flag():
    res = latq.raney_join_criterion(
        latq.generate(latq.GeneratorSpec("chain", n=2)))
    assert "elapsed_ms" not in res.as_doc()
    assert "elapsed_ms" in res.as_doc(timing=True)


@given(closure_lattices())
def test_finite_cd_equals_plain_distributivity(L):
    # on finite carriers the profile's two distributivity fields coincide
    p = latq.classify_lattice(L)
    assert p.completely_distributive == p.distributive
