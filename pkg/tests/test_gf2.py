from __future__ import annotations

from itertools import product

import hypothesis.strategies as st
import numpy as np
from hypothesis import given

from ksparity import gf2

vectors = st.lists(st.integers(min_value=0, max_value=(1 << 8) - 1), max_size=8)


def _np_rank(vs: list[int], width: int = 8) -> int:
    """Rank over GF(2) by plain row reduction on a 0/1 array."""
    m = np.array([[(v >> b) & 1 for b in range(width)] for v in vs], dtype=np.uint8).reshape(-1, width)
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i, col]), None)
        if pivot is None:
            continue
        m[[r, pivot]] = m[[pivot, r]]
        for i in range(len(m)):
            if i != r and m[i, col]:
                m[i] ^= m[r]
        r += 1
    return r


def test_parity():
    assert gf2.parity(0) == 0
    assert gf2.parity(0b1011) == 1
    assert gf2.parity(0b1001) == 0


def test_bits_are_ascending():
    assert list(gf2.bits(0b101001)) == [0, 3, 5]


@given(vectors)
def test_rank_matches_row_reduction(vs):
    assert gf2.rank(vs) == _np_rank(vs)


@given(vectors)
def test_independent_subset_is_a_basis(vs):
    idx = gf2.independent_subset(vs)
    assert len(idx) == gf2.rank(vs)
    assert gf2.rank([vs[i] for i in idx]) == len(idx)


@given(vectors)
def test_nullspace_vectors_combine_to_zero(vs):
    null = gf2.nullspace(vs)
    assert len(null) == len(vs) - gf2.rank(vs)
    for v in null:
        assert gf2.combine(vs, v) == 0
    assert gf2.rank(null) == len(null)


@given(vectors, st.integers(min_value=0, max_value=255))
def test_solve_finds_a_combination_or_reports_none(vs, target):
    combo = gf2.solve(vs, target)
    reachable = {gf2.combine(vs, c) for c in range(1 << len(vs))} if len(vs) <= 8 else None
    if combo is None:
        assert target not in reachable
    else:
        assert gf2.combine(vs, combo) == target


@given(st.lists(st.integers(min_value=1, max_value=255), max_size=5, unique=True))
def test_span_lists_each_element_once(basis):
    basis = [basis[i] for i in gf2.independent_subset(basis)]
    elements = list(gf2.span(basis))
    assert len(elements) == len(set(elements)) == 1 << len(basis)
    brute = {gf2.combine(basis, c) for c in range(1 << len(basis))}
    assert set(elements) == brute


def test_span_of_nothing_is_zero():
    assert list(gf2.span([])) == [0]


def test_nullspace_small_case():
    # v0 + v1 == v2
    vs = [0b011, 0b110, 0b101]
    assert [gf2.combine(vs, v) for v in gf2.nullspace(vs)] == [0]
    assert set(gf2.nullspace(vs)) == {0b111}


def test_exhaustive_rank_agreement_width3():
    for vs in product(range(8), repeat=3):
        assert gf2.rank(list(vs)) == _np_rank(list(vs), 3)
