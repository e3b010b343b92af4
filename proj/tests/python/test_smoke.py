import pytest

import gridhfk

TREFOIL = "n=5; O=[0,1,2,3,4]; X=[2,3,4,0,1]"


def test_unknot():
    r = gridhfk.knot_report(gridhfk.Grid([0, 1], [1, 0]))
    assert r["hfk_hat"] == {(0, 0): 1}
    assert r["genus"] == 0
    assert r["tau"] == 0
    assert r["unknot"]


def test_trefoil_and_mirror():
    g = gridhfk.parse_grid(TREFOIL)
    assert g.n == 5 and g.components == 1
    assert gridhfk.alexander_polynomial(g) == {-1: 1, 0: -1, 1: 1}
    left = gridhfk.hfk_hat(g)
    assert left == {(0, -1): 1, (1, 0): 1, (2, 1): 1}
    right = gridhfk.hfk_hat(g.mirror())
    assert right == {(-m, -a): k for (m, a), k in left.items()}
    r = gridhfk.knot_report(g, jobs=1)
    assert r["tau"] == -1
    assert len(r["hfk_minus"]["towers"]) == 1
    assert r["hfk_minus"]["torsions"] == [(1, 0, 1)]


def test_errors():
    with pytest.raises(gridhfk.InputError):
        gridhfk.parse_grid("n=2; O=[0,1]; X=[0,1]")
    with pytest.raises(ValueError):
        gridhfk.Grid([0, 0], [1, 1])
    big = gridhfk.Grid(list(range(9)), [(i + 2) % 9 for i in range(9)])
    with pytest.raises(gridhfk.CapExceeded):
        gridhfk.hfk_hat(big, cap=8)


def test_surgery():
    assert gridhfk.surgery("trefoil-left", 1)[0]["towers"] == 1
    assert gridhfk.surgery("trefoil-left", 1)[0]["excess"] == 1
    assert gridhfk.surgery("trefoil-left", -1)[0]["excess"] == 0
    lens = gridhfk.surgery("unknot", 5)
    assert len(lens) == 5 and all(c["towers"] == 1 for c in lens)
    assert gridhfk.large_surgery("trefoil-left", 0, "hat")["rank"] == 3
    assert gridhfk.surgery("delta:-1:1,0:-1,1:1", 1)[0]["excess"] == 0


def test_models():
    assert "trefoil-left" in gridhfk.bundled_model_names()
    assert gridhfk.model_check("trefoil-right") == []
    doc = gridhfk.staircase_model("-1:1,0:-1,1:1")
    assert gridhfk.model_check(doc) == []
    bad = '{"generators":[{"id":"a","M":1,"A":1}],"arrows":[],"flip":[["a","a"]]}'
    assert gridhfk.model_check(bad)
