import random

import pytest

from oracles import box_shapes, oracle_ct
from skewgenus import (
    BudgetExceeded,
    CorollaryKind,
    LinkKind,
    SkewShape,
    build_corollary_chain,
    chain_threshold,
    classify_link,
    displacement_difficulty,
    main2_cost,
    main2_decomposition,
    make_ram_seq,
    reflect,
    replay_certificate,
    skew_size,
    stage_three_chain,
    stage_two_chain,
    tau,
    translate,
)


def shape(upper, lower):
    return SkewShape(make_ram_seq(lower), make_ram_seq(upper))


def test_tau_examples():
    assert tau(10, 8, 5, 3).entries == (0, 0, 1, 1, 1, 2, 2, 3, 3, 3)
    assert tau(9, 9, 4, 4).entries == (1, 1, 1, 1, 1, 3, 3, 3, 3)
    assert tau(6, 0, 0, 0).entries == (0,) * 6
    with pytest.raises(ValueError):
        tau(5, 3, 4, 0)
    with pytest.raises(ValueError):
        tau(3, 4, 0, 0)


def test_chain_threshold_examples():
    r = chain_threshold(shape((2, 3, 5), (2, 2, 4)))
    assert (r.ct, r.c_delta) == (1, 0)
    r = chain_threshold(shape((2, 2), (0, 0)))
    assert (r.ct, r.c_delta) == (3, 2)
    r = chain_threshold(shape((1, 1, 3, 3), (0, 0, 2, 2)))
    assert (r.ct, r.c_delta) == (2, 0)
    a = make_ram_seq((1, 4))
    r = chain_threshold(SkewShape(a, a))
    assert (r.ct, r.c_delta, len(r.witness)) == (0, 0, 0)


def test_displacement_difficulty_examples():
    assert displacement_difficulty(shape((2, 3, 5), (2, 2, 4))) == 0
    assert displacement_difficulty(shape((0, 2), (0, 1))) == 1
    assert displacement_difficulty(shape((2, 2), (0, 0))) == 2


def test_witness_is_consistent():
    for a, b in box_shapes(max_len=3, top=3):
        s = shape(b, a)
        r = chain_threshold(s)
        w = r.witness
        w.verify()
        assert w.start == s.lower and w.end == s.upper
        assert len(w) == r.ct and w.one_links == r.c_delta
        assert r.c_delta == 2 * r.ct - skew_size(s)
        assert r.c_delta % 2 == skew_size(s) % 2


def test_witness_is_deterministic():
    s = shape((2, 3, 3, 4), (0, 0, 1, 1))
    assert chain_threshold(s).witness == chain_threshold(s).witness


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        chain_threshold(shape((4, 4, 4), (0, 0, 0)), state_budget=3)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("SKEWGENUS_BUDGET", "2")
    with pytest.raises(BudgetExceeded):
        chain_threshold(shape((3, 3), (0, 0)))


def test_search_matches_oracle_small():
    for a, b in box_shapes(max_len=3, top=2):
        assert chain_threshold(shape(b, a)).ct == oracle_ct(a, b), (a, b)


def test_translate_reflect_invariance():
    fixtures = [((2, 2, 4), (2, 3, 5)), ((0, 0), (2, 2)), ((0, 0, 2, 2), (1, 1, 3, 3)), ((0, 1, 1), (2, 3, 3))]
    for a, b in fixtures:
        s = shape(b, a)
        ct = chain_threshold(s).ct
        for n in (-2, 3):
            assert chain_threshold(translate(s, n)).ct == ct
        for n in (4, 7):
            assert chain_threshold(reflect(s, n)).ct == ct


def test_subadditivity_random_triples():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(1, 5)
        pts = sorted(tuple(sorted(rng.randint(0, 4) for _ in range(n))) for _ in range(3))
        a = pts[0]
        b = tuple(max(x, y) for x, y in zip(a, pts[1]))
        c = tuple(max(x, y) for x, y in zip(b, pts[2]))
        lhs = chain_threshold(shape(c, a)).ct
        rhs = chain_threshold(shape(c, b)).ct + chain_threshold(shape(b, a)).ct
        assert lhs <= rhs


def test_corollary_examples():
    ch = build_corollary_chain(CorollaryKind.INCREASE_AC, n=10, a=8, b=5, c=3)
    assert len(ch) == 1 and str(ch.verdicts[0].progression) == "2+7Z"
    ch = build_corollary_chain(CorollaryKind.INCREASE_AB, n=9)
    assert len(ch) == 1 and str(ch.verdicts[0].progression) == "1+5Z"
    assert ch.start == tau(9, 8, 4, 4) and ch.end == tau(9, 9, 5, 4)
    ch = build_corollary_chain(CorollaryKind.FLOOR_CEIL, n=4)
    assert [v.kind for v in ch.verdicts] == [LinkKind.TWO_LINK] * 2
    assert ch.start.entries == (0, 0, 2, 2) and ch.end.entries == (1, 1, 3, 3)


def test_corollary_hypotheses():
    with pytest.raises(ValueError):
        build_corollary_chain(CorollaryKind.INCREASE_AB, n=6)
    with pytest.raises(ValueError):
        build_corollary_chain(CorollaryKind.INCREASE_AC, n=10, a=5, b=3, c=2)
    with pytest.raises(ValueError):
        build_corollary_chain(CorollaryKind.FLOOR_CEIL, n=3)


@pytest.mark.parametrize("n", range(4, 11))
@pytest.mark.parametrize("start", ["floor", "ceil"])
def test_floor_ceil_chains_have_difficulty_zero(n, start):
    ch = build_corollary_chain(CorollaryKind.FLOOR_CEIL, n=n, start=start)
    assert ch.one_links == 0
    f, c = n // 2, (n + 1) // 2
    m, other = (f, c) if start == "floor" else (c, f)
    assert ch.start == tau(n, m, f, 0)
    assert ch.end == tau(n, other, f, 0).shift(1)


def test_stage_chains():
    for a in range(4, 14):
        for ell in (1, 2, 3, 4):
            ch = stage_two_chain(a, ell)
            ch.verify()
            k = (a - 1) // 2
            assert ch.start == tau(a, 2 * k + 1, k, k)
            assert ch.end == tau(a, (a + 1) // 2, a // 2, 0).shift(ell)
            assert ch.one_links <= 1
        b = a + 3
        ch = stage_three_chain(a, b, 1)
        ch.verify()
        assert ch.one_links <= 1


def test_main2_decomposition_examples():
    cert = main2_decomposition(9, 9)
    assert [p.upper for p in cert.node.children] == [9, 1, 23, 9]
    assert cert.upper == 42 == (81 + 4) // 2
    assert main2_decomposition(10, 10).upper == 52
    small = main2_decomposition(4, 4)
    assert small.upper <= 10
    replay_certificate(small)


def test_main2_cost_matches_decomposition():
    for a in range(4, 13):
        for b in range(4, 13):
            for ell in {1, b - 3}:
                assert main2_decomposition(a, b, ell).upper == main2_cost(a, b, ell)


def test_main2_parameters():
    with pytest.raises(ValueError):
        main2_decomposition(3, 9)
    with pytest.raises(ValueError):
        main2_decomposition(9, 9, ell=7)
    with pytest.raises(ValueError):
        main2_decomposition(9, 9, ell=0)


def test_main2_pieces_within_difficulty_one():
    cert = main2_decomposition(10, 11, 2)
    for piece in cert.node.children:
        assert 2 * piece.upper - skew_size(piece.target) <= 1


def test_stage_chain_steps_are_links():
    ch = stage_two_chain(8, 3)
    for lo, hi, v in zip(ch.steps, ch.steps[1:], ch.verdicts):
        assert classify_link(SkewShape(lo, hi)) == v
