"""Compact symbols summarizing proofs and projector/basis systems.

Observables proofs get ``12_2-1_5 4_4 1_3``: twelve observables of
multiplicity two, then one context of size five, four of size four, one of
size three. Projector systems get ``16^1_6 32^2_5 4^4_4-1_16 8_12 ...``
where the superscript is the projector rank.

Both halves must carry the same total incidence count, which is checked
whenever a symbol is parsed from text.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import SymbolError

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_SUBSCRIPT = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _right_half(sizes: Iterable[int]) -> tuple[tuple[int, int], ...]:
    hist = Counter(sizes)
    return tuple((hist[s], s) for s in sorted(hist, reverse=True))


@dataclass(frozen=True)
class ObsSymbol:
    left: tuple[tuple[int, int], ...]   # (count, multiplicity)
    right: tuple[tuple[int, int], ...]  # (count, context size)

    @classmethod
    def from_counts(cls, multiplicities: Iterable[int], sizes: Iterable[int]) -> ObsSymbol:
        hist = Counter(multiplicities)
        left = tuple((hist[m], m) for m in sorted(hist))
        return cls(left, _right_half(sizes))

    @property
    def left_total(self) -> int:
        return sum(c * m for c, m in self.left)

    @property
    def right_total(self) -> int:
        return sum(c * s for c, s in self.right)

    @property
    def balanced(self) -> bool:
        return self.left_total == self.right_total

    def __str__(self) -> str:
        lhs = " ".join(f"{c}_{m}" for c, m in self.left)
        rhs = " ".join(f"{c}_{s}" for c, s in self.right)
        return f"{lhs}-{rhs}"

    def pretty(self) -> str:
        lhs = "".join(f"{c}{str(m).translate(_SUBSCRIPT)}" for c, m in self.left)
        rhs = "".join(f"{c}{str(s).translate(_SUBSCRIPT)}" for c, s in self.right)
        return f"{lhs}-{rhs}"

    @classmethod
    def parse(cls, text: str) -> ObsSymbol:
        """Parse ``"12_2-1_5 4_4 1_3"``; raises SymbolError if unbalanced."""
        lhs, rhs = _split(text)
        left = tuple(_pairs(lhs))
        right = tuple(_pairs(rhs))
        sym = cls(left, right)
        if not sym.balanced:
            raise SymbolError(
                f"sum rule fails for {text!r}: {sym.left_total} != {sym.right_total}"
            )
        return sym


@dataclass(frozen=True)
class SystemSymbol:
    left: tuple[tuple[int, int, int], ...]  # (count, rank, multiplicity)
    right: tuple[tuple[int, int], ...]      # (count, basis size)

    @classmethod
    def from_counts(
        cls, rank_multiplicity: Iterable[tuple[int, int]], sizes: Iterable[int]
    ) -> SystemSymbol:
        hist = Counter(rank_multiplicity)
        left = tuple((hist[k], *k) for k in sorted(hist))
        return cls(left, _right_half(sizes))

    @property
    def left_total(self) -> int:
        return sum(c * m for c, _, m in self.left)

    @property
    def right_total(self) -> int:
        return sum(c * s for c, s in self.right)

    @property
    def balanced(self) -> bool:
        return self.left_total == self.right_total

    @property
    def projector_count(self) -> int:
        return sum(c for c, _, _ in self.left)

    @property
    def basis_count(self) -> int:
        return sum(c for c, _ in self.right)

    def __str__(self) -> str:
        lhs = " ".join(f"{c}^{r}_{m}" for c, r, m in self.left)
        rhs = " ".join(f"{c}_{s}" for c, s in self.right)
        return f"{lhs}-{rhs}"

    def pretty(self) -> str:
        lhs = "".join(
            f"{c}{str(r).translate(_SUPERSCRIPT)}{str(m).translate(_SUBSCRIPT)}"
            for c, r, m in self.left
        )
        rhs = "".join(f"{c}{str(s).translate(_SUBSCRIPT)}" for c, s in self.right)
        return f"{lhs}-{rhs}"

    @classmethod
    def parse(cls, text: str) -> SystemSymbol:
        lhs, rhs = _split(text)
        left = []
        for tok in lhs.split():
            m = re.fullmatch(r"(\d+)\^(\d+)_(\d+)", tok)
            if not m:
                raise SymbolError(f"bad projector term {tok!r}")
            left.append(tuple(int(g) for g in m.groups()))
        sym = cls(tuple(left), tuple(_pairs(rhs)))
        if not sym.balanced:
            raise SymbolError(
                f"sum rule fails for {text!r}: {sym.left_total} != {sym.right_total}"
            )
        return sym


def _split(text: str) -> tuple[str, str]:
    parts = text.split("-")
    if len(parts) != 2:
        raise SymbolError(f"symbol needs exactly one '-': {text!r}")
    return parts[0], parts[1]


def _pairs(half: str):
    for tok in half.split():
        m = re.fullmatch(r"(\d+)_(\d+)", tok)
        if not m:
            raise SymbolError(f"bad term {tok!r}")
        yield int(m.group(1)), int(m.group(2))
