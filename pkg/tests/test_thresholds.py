import pytest

from oracles import all_graphs, has_stable_set, has_triangle

from chibound.generators import cycle_graph
from chibound.thresholds import Mag, format_result, format_value, lemma_threshold, ramsey_bound


def val(lemma, **params):
    return lemma_threshold(lemma, params).value


def test_ramsey_bound():
    assert ramsey_bound(1, 7) == 1
    assert ramsey_bound(2, 2) == 2
    assert ramsey_bound(3, 3) == 6
    assert ramsey_bound(4, 4) == 20
    for s in range(1, 6):
        for t in range(1, 6):
            assert ramsey_bound(s, t) == ramsey_bound(t, s)
    with pytest.raises(ValueError):
        ramsey_bound(0, 3)


def test_ramsey_three_three_sharp():
    # five vertices do not force a triangle or a stable triple
    c5 = cycle_graph(5)
    assert not has_triangle(c5) and not has_stable_set(c5, 3)
    # six vertices always do (exhaustive over all labeled graphs)
    for g in all_graphs(6):
        assert has_triangle(g) or has_stable_set(g, 3)


def test_spot_values():
    assert val("T2.2", c=0, tau=1) == 6
    assert val("T5.1", c=1, d=1, tau=1) == 4
    assert val("T3.2", c=0, tau=0, d=3, k=2) == 0
    assert val("T2.3", d=1, tau=1) == 8
    assert val("T2.5", d=1, tau=1) == 8
    assert val("T2.6", a=2, d=1, tau=1) == 16
    # hand evaluation: d_hat = 3, c1 = T2.6(1,3,1) = 12, then (12+1+2)*12
    r = lemma_threshold("T2.7", {"a": 1, "b": 2, "d": 1, "tau": 1})
    assert r.intermediates == {"d_hat": 3, "c1": 12} and r.value == 15 * 12
    # T3.1: c1 = 2, c2 = max(2*1*2, 2*T2.6(2,1,1)) = max(4, 32) = 32
    assert val("T3.1", k=2, d=1, tau=1) == 32
    assert val("T3.3", r=1, s=1, d=1, ks=[1], tau=7) == 7


def test_t41_t42_hand_values():
    r = lemma_threshold("T4.1", {"k": 1, "d": 1, "tau": 1})
    assert r.intermediates["m"] == 2 and r.intermediates["n"] == 2
    assert r.intermediates["c0"] == 8
    assert r.value == 496
    r2 = lemma_threshold("T4.2", {"k": 1, "d": 1, "tau": 1})
    assert r2.intermediates["n"] == 2
    assert r2.value == (1 << 4) * 496


def test_t52_matches_naive_iteration():
    def naive(n, c, d, tau):
        x = c
        for _ in range(n):
            x = 2 * max(d * tau + x, tau) + d * tau + 1
        return x

    for n in range(0, 12):
        for c in (0, 1, 5):
            for d in (0, 1, 2):
                for tau in (0, 1, 3):
                    assert val("T5.2", n=n, c=c, d=d, tau=tau) == naive(n, c, d, tau)


def test_t6_and_main_small_exact():
    # one application of the tree-split formula: (7 + 0 + 2) * 1
    assert val("T6.1", c=0, d=1, tau=1) == 9
    assert val("T6.2", d=1, tau=0) == 9
    assert val("main", kappa=0, k=1, d=1) == 0
    r = lemma_threshold("main", {"kappa": 1, "k": 1, "d": 1})
    assert r.value == 9 and r.derived_composition


def test_symbolic_fallback_for_huge_values():
    r = lemma_threshold("T6.2", {"d": 1, "tau": 1})
    assert r.value is None
    assert r.blocked_at is not None
    assert r.magnitude is not None and ("10^" in r.magnitude or "tower" in r.magnitude)
    assert r.expr["blocked_at"] == r.blocked_at
    r2 = lemma_threshold("main", {"kappa": 2, "k": 1, "d": 1})
    assert r2.value is None and "tower" in r2.magnitude


def test_digit_limit_is_respected():
    full = lemma_threshold("T4.2", {"k": 2, "d": 2, "tau": 2})
    assert full.value is not None and len(str(full.value)) > 1000
    tight = lemma_threshold("T4.2", {"k": 2, "d": 2, "tau": 2}, digit_limit=100)
    assert tight.value is None and tight.magnitude is not None


def test_monotone_in_each_parameter():
    grids = {
        "T2.2": {"c": range(4), "tau": range(4)},
        "T2.3": {"d": range(1, 4), "tau": range(4)},
        "T2.5": {"d": range(1, 4), "tau": range(4)},
        "T2.6": {"a": range(3), "d": range(1, 4), "tau": range(3)},
        "T2.7": {"a": range(3), "b": range(3), "d": range(1, 3), "tau": range(3)},
        "T3.1": {"k": range(1, 4), "d": range(1, 3), "tau": range(3)},
        "T3.2": {"c": range(3), "tau": range(3), "d": range(1, 3), "k": range(1, 3)},
        # k selects between the two cases; within k >= 2 the value is
        # constant, and the k = 1 case dominates (checked separately)
        "T4.1": {"k": range(2, 4), "d": range(1, 3), "tau": range(3)},
        "T4.2": {"k": range(2, 4), "d": range(1, 3), "tau": range(2)},
        "T5.1": {"c": range(4), "d": range(3), "tau": range(3)},
        "T5.2": {"n": range(4), "c": range(3), "d": range(2), "tau": range(3)},
        "T5.3": {"k": range(2, 4), "d": range(1, 3), "tau": range(2)},
        "T6.1": {"c": range(3), "d": range(1, 3), "tau": range(3)},
    }
    for lemma, grid in grids.items():
        names = list(grid)
        from itertools import product

        for point in product(*(grid[n] for n in names)):
            base = dict(zip(names, point))
            v0 = lemma_threshold(lemma, base).value
            assert v0 is not None, (lemma, base)
            for bump in names:
                nxt = dict(base)
                nxt[bump] = nxt[bump] + 1
                v1 = lemma_threshold(lemma, nxt).value
                assert v1 is not None and v1 >= v0, (lemma, base, bump, v0, v1)


def test_case_split_dominance():
    # the forbidden-set case (k = 1) always needs at least the plain case
    for d in range(1, 3):
        for tau in range(3):
            assert val("T4.1", k=1, d=d, tau=tau) >= val("T4.1", k=2, d=d, tau=tau)


def test_composition_dominance():
    for tau in range(4):
        for d in range(1, 4):
            assert val("T2.3", d=d, tau=tau) >= val("T2.2", c=0, tau=tau)
            for a in range(1, 4):
                assert val("T2.6", a=a, d=d, tau=tau) >= val("T2.5", d=d, tau=tau)


def test_t33_parameter_validation():
    with pytest.raises(ValueError):
        lemma_threshold("T3.3", {"r": 2, "s": 1, "d": 1, "ks": [1], "tau": 1})
    with pytest.raises(ValueError):
        lemma_threshold("T3.3", {"r": 1, "s": 2, "d": 1, "ks": [1], "tau": 1})
    assert val("T3.3", r=2, s=2, d=1, ks=[2, 3], tau=1) > 0


def test_unknown_lemma_and_missing_params():
    with pytest.raises(ValueError):
        lemma_threshold("T9.9", {})
    with pytest.raises(ValueError):
        lemma_threshold("T2.2", {"c": 1})
    with pytest.raises(ValueError):
        lemma_threshold("T2.2", {"c": -1, "tau": 1})


def test_format_helpers():
    assert format_value(123) == "123"
    big = 10 ** 50
    assert "digits" in format_value(big, decimal_digit_cap=10)
    out = format_result(lemma_threshold("T2.2", {"c": 0, "tau": 1}))
    assert "value: 6" in out
    assert str(Mag.of(10 ** 40)).startswith("about 10^40")
