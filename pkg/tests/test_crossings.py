"""Crossings, their poset, and the crossing-formula operators."""

from hypothesis import given
from hypothesis import strategies as st

from crystaltiles.crossings import (
    crossing_form,
    crossing_rvec,
    crystal_op,
    dual_crystal_op,
    enumerate_crossings,
    generate_hw_crystal,
    hw_membership,
    is_reineke,
    poset_leq,
    reineke_vectors,
)
from crystaltiles.lusztig import LusztigDatum, oracle_op, oracle_star_op
from crystaltiles.tiling import build_tiling
from crystaltiles.words import convex_order, enumerate_reduced_words, root_span

WORDS4 = enumerate_reduced_words(4)


def test_worked_crystal_example():
    x = LusztigDatum((2, 1, 2), (3, 1, 2))
    assert crystal_op("eps", 1, x) == 1
    assert crystal_op("f", 1, x).values == (2, 2, 2)
    assert crystal_op("e", 1, x).values == (4, 0, 2)


def test_dual_reineke_vectors_example():
    tiling = build_tiling((2, 1, 2))
    assert reineke_vectors(tiling, 1, dual=True) == {(0, 0, 1)}
    assert reineke_vectors(tiling, 2, dual=True) == {(0, 1, -1), (1, 0, 0)}


def test_running_crossing_example(running_tiling):
    want = ((2, 3), (1, 3), (1, 2), (2, 5), (2, 4), (4, 5), (1, 4))
    match = [
        c
        for c in enumerate_crossings(running_tiling, 3)
        if tuple(t.pair for t in c.tiles) == want
    ]
    assert len(match) == 1
    assert match[0].strips == (3, 1, 2, 4)


def test_crossing_rvec_entries(running_tiling):
    order = convex_order(running_tiling.word)
    for a in range(1, 5):
        for dual in (False, True):
            for c in enumerate_crossings(running_tiling, a, dual):
                r = crossing_rvec(c)
                assert set(r) <= {-1, 0, 1}
                acc = [0] * 4
                for pair, v in zip(order, r):
                    for b in root_span(pair):
                        acc[b - 1] += v
                assert acc == [1 if b == a else 0 for b in range(1, 5)]


def test_poset_leq_is_partial_order(running_tiling):
    for a in (1, 3):
        cs = sorted(
            enumerate_crossings(running_tiling, a),
            key=lambda c: (len(c.tiles), tuple(t.pair for t in c.tiles)),
        )
        for c in cs:
            assert poset_leq(c, c)
            for d in cs:
                if poset_leq(c, d) and poset_leq(d, c):
                    assert c == d
                for e in cs:
                    if poset_leq(c, d) and poset_leq(d, e):
                        assert poset_leq(c, e)


def test_reineke_crossings_exist(running_tiling):
    for a in range(1, 5):
        assert any(is_reineke(c) for c in enumerate_crossings(running_tiling, a))


def test_crossing_form_vs_eps():
    x = LusztigDatum((2, 1, 2), (3, 1, 2))
    tiling = build_tiling((2, 1, 2))
    forms = [crossing_form(c, x) for c in enumerate_crossings(tiling, 1)]
    assert max(forms) == crystal_op("eps", 1, x)


@given(st.sampled_from(WORDS4), st.data())
def test_ops_match_oracle(word, data):
    vals = tuple(data.draw(st.integers(0, 3)) for _ in range(6))
    x = LusztigDatum(word, vals)
    a = data.draw(st.integers(1, 3))
    for kind in ("f", "e", "eps"):
        assert crystal_op(kind, a, x) == oracle_op(kind, a, x)
        assert dual_crystal_op(kind, a, x) == oracle_star_op(kind, a, x)


def test_reselection_example():
    word = (2, 1, 2)
    tiling = build_tiling(word)
    for a in (1, 2):
        for dual in (False, True):
            for c in enumerate_crossings(tiling, a, dual):
                if not is_reineke(c):
                    continue
                r = crossing_rvec(c)
                x = LusztigDatum(word, tuple(max(0, -v) for v in r))
                op = dual_crystal_op if dual else crystal_op
                y = op("f", a, x)
                assert tuple(p - q for p, q in zip(y.values, x.values)) == r


def test_hw_membership_origin():
    x = LusztigDatum((1, 2, 1), (0, 0, 0))
    assert hw_membership(x, (1, 1))
    assert hw_membership(x, (0, 0))
    y = LusztigDatum((1, 2, 1), (2, 0, 0))
    assert not hw_membership(y, (1, 1))


def test_hw_crystal_sizes_n3():
    word = (1, 2, 1)
    for lam, size in [((1, 0), 3), ((0, 1), 3), ((1, 1), 8), ((2, 0), 6), ((2, 1), 15)]:
        assert len(generate_hw_crystal(lam, word)) == size
