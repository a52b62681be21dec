"""Linear algebra over GF(2) with vectors packed into Python integers.

A vector is an ``int`` whose set bits are its nonzero coordinates. A list of
vectors is read as the columns (or rows, the algebra does not care) of a
matrix; combinations of them are again ints, bit ``j`` selecting vector ``j``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence


def parity(v: int) -> int:
    return v.bit_count() & 1


def _eliminate(vectors: Sequence[int]):
    """Reduce ``vectors`` in order.

    Returns ``(pivots, null)`` where ``pivots`` maps a leading bit to a
    ``(vector, combination)`` pair and ``null`` lists the combinations that
    reduce to zero, in input order.
    """
    pivots: dict[int, tuple[int, int]] = {}
    null: list[int] = []
    for j, v in enumerate(vectors):
        combo = 1 << j
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = (v, combo)
                break
            pv, pc = pivots[top]
            v ^= pv
            combo ^= pc
        else:
            null.append(combo)
    return pivots, null


def rank(vectors: Sequence[int]) -> int:
    return len(_eliminate(vectors)[0])


def independent_subset(vectors: Sequence[int]) -> list[int]:
    """Indices of a greedy maximal independent subset, scanning in order."""
    pivots: dict[int, int] = {}
    keep = []
    for j, v in enumerate(vectors):
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                keep.append(j)
                break
            v ^= pivots[top]
    return keep


def solve(vectors: Sequence[int], target: int) -> int | None:
    """Return a combination ``c`` with ``XOR_{j in c} vectors[j] == target``.

    ``None`` if ``target`` is outside the span.
    """
    pivots, _ = _eliminate(vectors)
    combo = 0
    v = target
    while v:
        top = v.bit_length() - 1
        if top not in pivots:
            return None
        pv, pc = pivots[top]
        v ^= pv
        combo ^= pc
    return combo


def nullspace(vectors: Sequence[int]) -> list[int]:
    """A basis of ``{c : XOR_{j in c} vectors[j] == 0}``.

    The basis is deterministic: one element per vector that depends on the
    vectors before it.
    """
    return _eliminate(vectors)[1]


def span(basis: Sequence[int]) -> Iterator[int]:
    """Every element of the span of ``basis``, in reflected Gray-code order.

    Starts with zero. Consecutive outputs differ by exactly one basis vector.
    """
    v = 0
    yield v
    for k in range(1, 1 << len(basis)):
        v ^= basis[(k & -k).bit_length() - 1]
        yield v


def combine(vectors: Sequence[int], combo: int) -> int:
    out = 0
    j = 0
    while combo:
        if combo & 1:
            out ^= vectors[j]
        combo >>= 1
        j += 1
    return out


def bits(v: int) -> Iterator[int]:
    """Indices of the set bits of ``v``, ascending."""
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low
