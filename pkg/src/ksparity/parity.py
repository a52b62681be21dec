"""Projectors-based parity proofs inside a basis system.

A parity proof is an odd number of bases in which every occurring projector
occurs an even number of times. Selecting bases is choosing a vector ``v``
over GF(2) with one coordinate per basis; the projector condition says
``M v = 0`` for the projector/basis incidence matrix ``M``. So the proofs
are exactly the odd-weight vectors of the nullspace of ``M``.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import product as cartesian

import numpy as np

from . import gf2
from .errors import NotSimpleSystem, SearchBoundExceeded, UnknownBasisLabel
from .projectors import BasisSystem
from .symbols import SystemSymbol


def label_key(label: str) -> tuple[int, int, str]:
    """Hybrids (by number, then letter) before pure bases, as proofs are listed."""
    m = re.fullmatch(r"(\d+)([a-z]?)", label)
    if not m:
        return (2, 0, label)
    number, letter = int(m.group(1)), m.group(2)
    return (0 if letter else 1, number, letter)


@dataclass(frozen=True)
class ParityProof:
    bases: tuple[str, ...]  # canonical order, see label_key
    projector_count: int
    basis_count: int
    symbol: SystemSymbol

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(self.bases)

    def __str__(self) -> str:
        return " ".join(self.bases)


def build_incidence(system: BasisSystem) -> np.ndarray:
    """Projectors x bases 0/1 matrix; row ``i`` is projector ``i + 1``."""
    m = np.zeros((len(system.projectors), len(system.bases)), dtype=np.uint8)
    for j, b in enumerate(system.bases):
        for pid in b.projector_ids:
            m[pid - 1, j] = 1
    return m


def _columns(system: BasisSystem) -> list[int]:
    return [sum(1 << (pid - 1) for pid in b.projector_ids) for b in system.bases]


def proof_symbol(system: BasisSystem, labels: Iterable[str]) -> SystemSymbol:
    labels = list(labels)
    mult: Counter[int] = Counter()
    for lab in labels:
        mult.update(system.basis(lab).projector_ids)
    rank = {p.id: p.rank for p in system.projectors}
    return SystemSymbol.from_counts(
        ((rank[i], m) for i, m in mult.items()), (system.basis(lab).size for lab in labels)
    )


def make_proof(system: BasisSystem, labels: Iterable[str]) -> ParityProof:
    ordered = tuple(sorted(set(labels), key=label_key))
    sym = proof_symbol(system, ordered)
    return ParityProof(ordered, sym.projector_count, len(ordered), sym)


def _proof_from_mask(system: BasisSystem, mask: int) -> ParityProof:
    return make_proof(system, (system.bases[j].label for j in gf2.bits(mask)))


def _check_bound(system: BasisSystem, max_bases: int):
    if len(system.bases) > max_bases:
        raise SearchBoundExceeded(f"{len(system.bases)} bases exceeds bound {max_bases}")


def parity_nullspace(system: BasisSystem) -> list[int]:
    """Basis of base selections with every projector occurring evenly."""
    return gf2.nullspace(_columns(system))


def enumerate_parity_proofs(system: BasisSystem, max_bases: int = 64) -> Iterator[ParityProof]:
    """Every parity proof, walking the nullspace in Gray-code order."""
    _check_bound(system, max_bases)
    for v in gf2.span(parity_nullspace(system)):
        if gf2.parity(v):
            yield _proof_from_mask(system, v)


def count_parity_proofs(system: BasisSystem, max_bases: int = 64) -> int:
    """Number of parity proofs without listing them.

    Weight parity is linear, so if any nullspace basis vector has odd weight
    exactly half of the nullspace is odd; otherwise there are none.
    """
    _check_bound(system, max_bases)
    null = parity_nullspace(system)
    if any(gf2.parity(v) for v in null):
        return 1 << (len(null) - 1)
    return 0


def constructive_enumerate(system: BasisSystem) -> Iterator[ParityProof]:
    """One member from every complementary hybrid pair, completed by pure bases.

    Valid for systems of simple proofs, where the odd-occurrence projectors
    of any such selection are exactly the union of some pure bases.
    """
    proof = system.proof
    if not proof.is_simple():
        raise NotSimpleSystem("proof is not simple")
    pairs = system.hybrid_pairs
    if len(pairs) != len(proof.observables):
        raise NotSimpleSystem(
            f"{len(pairs)} hybrid pairs but {len(proof.observables)} observables"
        )
    cols = {b.label: sum(1 << (pid - 1) for pid in b.projector_ids) for b in system.bases}
    pures = [(b.label, cols[b.label]) for b in system.pure_bases]
    for choice in cartesian((0, 1), repeat=len(pairs)):
        picked = [pr.b if c else pr.a for pr, c in zip(pairs, choice)]
        odd = 0
        for lab in picked:
            odd ^= cols[lab]
        completion = []
        for lab, col in pures:
            part = odd & col
            if part == col:
                completion.append(lab)
                odd ^= col
            elif part:
                raise NotSimpleSystem(f"pure basis {lab} only partly covered by {picked}")
        if odd:
            raise NotSimpleSystem("odd projectors outside the pure bases")
        yield make_proof(system, picked + completion)


@dataclass(frozen=True)
class ParityCheckResult:
    valid: bool
    basis_count: int
    odd_projectors: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.valid


def validate_parity_proof(system: BasisSystem, labels: Iterable[str] | ParityProof) -> ParityCheckResult:
    if isinstance(labels, ParityProof):
        labels = labels.bases
    labels = list(labels)
    for lab in labels:
        system.basis(lab)  # raises UnknownBasisLabel
    if len(set(labels)) != len(labels):
        raise ValueError("repeated basis label")
    mult: Counter[int] = Counter()
    for lab in labels:
        mult.update(system.basis(lab).projector_ids)
    odd = tuple(sorted(pid for pid, m in mult.items() if m % 2))
    valid = len(labels) % 2 == 1 and not odd
    return ParityCheckResult(valid, len(labels), odd)


@dataclass(frozen=True)
class ProofClass:
    symbol: str
    projector_count: int
    basis_count: int
    count: int


def classify(system: BasisSystem, max_bases: int = 64) -> list[ProofClass]:
    """Group all parity proofs by symbol, largest classes first."""
    hist: Counter[SystemSymbol] = Counter()
    for pr in enumerate_parity_proofs(system, max_bases):
        hist[pr.symbol] += 1
    rows = [
        ProofClass(str(sym), sym.projector_count, sym.basis_count, c) for sym, c in hist.items()
    ]
    rows.sort(key=lambda r: (-r.count, r.symbol))
    return rows


@dataclass(frozen=True)
class ProofCriticality:
    critical: bool
    violation: tuple[str, ...] | None

    def __bool__(self) -> bool:
        return self.critical


def check_proof_critical(
    system: BasisSystem, labels: Iterable[str] | ParityProof, max_bases: int = 64
) -> ProofCriticality:
    """True when no proper subset of the proof's bases is itself a parity proof."""
    if isinstance(labels, ParityProof):
        labels = labels.bases
    labels = list(labels)
    if len(labels) > max_bases:
        raise SearchBoundExceeded(f"{len(labels)} bases exceeds bound {max_bases}")
    cols = [sum(1 << (pid - 1) for pid in system.basis(lab).projector_ids) for lab in labels]
    null = gf2.nullspace(cols)
    full = (1 << len(labels)) - 1
    odd = [v for v in null if gf2.parity(v)]
    even = [v for v in null if not gf2.parity(v)]
    if odd:
        base = odd[0]
        # Odd-weight vectors are the coset base + (even subspace).
        for v in [base, *odd[1:], *(base ^ e for e in even)]:
            if v != full:
                return ProofCriticality(False, tuple(labels[j] for j in gf2.bits(v)))
    return ProofCriticality(True, None)


def proof_listing(proofs: Sequence[ParityProof]) -> list[dict]:
    """Records with basis labels, counts and symbol, one per proof."""
    return [
        {
            "bases": list(p.bases),
            "projectors": p.projector_count,
            "basis_count": p.basis_count,
            "symbol": str(p.symbol),
        }
        for p in proofs
    ]


__all__ = [
    "ParityProof",
    "ParityCheckResult",
    "ProofClass",
    "ProofCriticality",
    "UnknownBasisLabel",
    "build_incidence",
    "check_proof_critical",
    "classify",
    "constructive_enumerate",
    "count_parity_proofs",
    "enumerate_parity_proofs",
    "make_proof",
    "proof_listing",
    "proof_symbol",
    "validate_parity_proof",
]
