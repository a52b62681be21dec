"""Dense-matrix ground truth for small qubit counts.

Nothing here uses the symplectic shortcuts of the rest of the package:
operators are built as explicit Kronecker products and every decision is
made numerically, so agreement with the symbolic code is a real check.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import reduce

import networkx as nx
import numpy as np

from .errors import DimensionTooLarge, SearchBoundExceeded
from .pauli import PauliObservable
from .projectors import BasisSystem, Projector, ProjectorSet
from .proof import ObservablesProof

TOL = 1e-9
MAX_QUBITS = 8

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _check_size(n_qubits: int, limit: int = MAX_QUBITS):
    if n_qubits > limit:
        raise DimensionTooLarge(f"{n_qubits} qubits exceeds the dense limit of {limit}")


def materialize(p: PauliObservable) -> np.ndarray:
    """The ``2**N`` square matrix of ``p``, qubit 0 as the leftmost factor."""
    _check_size(p.n_qubits)
    factors = []
    for q in range(p.n_qubits):
        bit = 1 << (p.n_qubits - 1 - q)
        m = _I2
        if p.x & bit:
            m = m @ _X
        if p.z & bit:
            m = m @ _Z
        factors.append(m)
    return (1j ** p.phase_exp) * reduce(np.kron, factors)


def projector_matrix(projector: Projector) -> np.ndarray:
    """``prod_j (I + s_j O_j) / 2`` over every member of the context."""
    n = projector.n_qubits
    _check_size(n)
    eye = np.eye(1 << n, dtype=complex)
    out = eye
    for obs, s in zip(projector.observables, projector.signature):
        out = out @ ((eye + s * materialize(obs)) / 2)
    return out


def is_zero(m: np.ndarray, tol: float = TOL) -> bool:
    return float(np.max(np.abs(m))) < tol


@dataclass
class OracleReport:
    context_failures: list[int] = field(default_factory=list)
    projector_failures: list[int] = field(default_factory=list)  # not idempotent or wrong trace
    orthogonality_mismatches: list[tuple[int, int]] = field(default_factory=list)
    completeness_failures: list[str] = field(default_factory=list)
    pairwise_checked: bool = True

    @property
    def ok(self) -> bool:
        return not (
            self.context_failures
            or self.projector_failures
            or self.orthogonality_mismatches
            or self.completeness_failures
        )

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        out = []
        for c in self.context_failures:
            out.append(f"context {c}: product is not sign * I")
        for p in self.projector_failures:
            out.append(f"projector {p}: not a projector of the declared rank")
        for p, q in self.orthogonality_mismatches:
            out.append(f"projectors {p},{q}: declared orthogonality disagrees with P Q")
        for b in self.completeness_failures:
            out.append(f"basis {b}: projectors do not sum to I")
        if not self.pairwise_checked:
            out.append("pairwise orthogonality skipped (too many qubits)")
        return out


def check_contexts(proof: ObservablesProof) -> list[int]:
    """Contexts whose ordered matrix product is not ``sign * I``."""
    _check_size(proof.n_qubits)
    eye = np.eye(1 << proof.n_qubits, dtype=complex)
    bad = []
    for ctx in proof.contexts:
        mats = [materialize(m) for m in proof.members(ctx)]
        commuting = all(is_zero(a @ b - b @ a) for a in mats for b in mats)
        prod = reduce(np.matmul, mats)
        if ctx.sign is None or not commuting or not is_zero(prod - ctx.sign * eye):
            bad.append(ctx.id)
    return bad


def _matrices(projectors: Sequence[Projector]) -> np.ndarray:
    return np.stack([projector_matrix(p) for p in projectors])


def _overlap_table(mats: np.ndarray) -> np.ndarray:
    return np.einsum("aij,bji->ab", mats, mats).real


def verify_system(system: BasisSystem, pairwise_max_qubits: int = 4) -> OracleReport:
    """Check a basis system against dense matrices, within ``1e-9``."""
    projectors = system.projectors
    n = projectors.n_qubits
    _check_size(n)
    report = OracleReport()
    report.context_failures = check_contexts(system.proof)
    mats = _matrices(projectors)
    for p, m in zip(projectors, mats):
        if not is_zero(m @ m - m) or abs(np.trace(m).real - p.rank) > TOL:
            report.projector_failures.append(p.id)
    if n <= pairwise_max_qubits:
        table = _overlap_table(mats)
        for i, p in enumerate(projectors):
            for j in range(i + 1, len(projectors)):
                q = projectors[j]
                if (abs(table[i, j]) < TOL) != projectors.orthogonal(p.id, q.id):
                    report.orthogonality_mismatches.append((p.id, q.id))
    else:
        report.pairwise_checked = False
    eye = np.eye(1 << n, dtype=complex)
    for b in system.bases:
        total = sum(mats[pid - 1] for pid in b.projector_ids)
        if not is_zero(total - eye):
            report.completeness_failures.append(b.label)
    return report


def coloring_search(
    system: BasisSystem, labels: Iterable[str] | None = None, max_projectors: int = 64
) -> tuple[int, ...] | None:
    """A 0/1 coloring with one 1 per basis and no orthogonal pair both 1.

    Returns the ids colored 1, or None when no coloring exists. Orthogonality
    is decided from the dense matrices.
    """
    bases = [system.basis(lab) for lab in labels] if labels is not None else list(system.bases)
    ids = sorted({pid for b in bases for pid in b.projector_ids})
    if len(ids) > max_projectors:
        raise SearchBoundExceeded(f"{len(ids)} projectors exceeds bound {max_projectors}")
    pos = {pid: k for k, pid in enumerate(ids)}
    mats = _matrices([system.projectors.by_id(pid) for pid in ids])
    table = _overlap_table(mats)
    orth = [
        sum(1 << j for j in range(len(ids)) if abs(table[i, j]) < TOL) for i in range(len(ids))
    ]
    basis_masks = [sum(1 << pos[pid] for pid in b.projector_ids) for b in bases]

    def search(ones: int, zeros: int) -> int | None:
        best = None
        for mask in basis_masks:
            if mask & ones:
                continue
            free = mask & ~zeros
            if not free:
                return None
            if best is None or free.bit_count() < best.bit_count():
                best = free
        if best is None:
            return ones
        while best:
            low = best & -best
            k = low.bit_length() - 1
            found = search(ones | low, zeros | orth[k])
            if found is not None:
                return found
            zeros |= low
            best ^= low
        return None

    found = search(0, 0)
    if found is None:
        return None
    return tuple(ids[k] for k in range(len(ids)) if found >> k & 1)


def basis_clique_oracle(projectors: ProjectorSet, max_qubits: int = 4) -> set[frozenset[int]]:
    """Every basis, found as a maximal clique of the numerical orthogonality graph."""
    _check_size(projectors.n_qubits, max_qubits)
    mats = _matrices(projectors)
    table = _overlap_table(mats)
    graph = nx.Graph()
    graph.add_nodes_from(p.id for p in projectors)
    for i in range(len(projectors)):
        for j in range(i + 1, len(projectors)):
            if abs(table[i, j]) < TOL:
                graph.add_edge(projectors[i].id, projectors[j].id)
    dim = 1 << projectors.n_qubits
    eye = np.eye(dim, dtype=complex)
    found = set()
    for clique in nx.find_cliques(graph):
        total = sum(mats[pid - 1] for pid in clique)
        if is_zero(total - eye):
            found.add(frozenset(clique))
    return found
