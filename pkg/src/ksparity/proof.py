"""Observables-based parity proofs: structure, validation, symbols, criticality.

A proof is a list of N-qubit observables together with contexts, each an
ordered set of mutually commuting observables whose product is +I or -I.
It is a parity proof when every observable sits in an even number of
contexts while an odd number of contexts multiply to -I; then no +-1
valuation can reproduce every context product.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from itertools import combinations

from . import gf2
from .errors import KSError, ProductNotIdentity, ProductNotReal, SearchBoundExceeded
from .pauli import PauliObservable, commutes, parse, product_sign, restrict
from .symbols import ObsSymbol


@dataclass(frozen=True)
class Context:
    id: int
    members: tuple[int, ...]
    sign: int | None  # None when the product is not +-I

    @property
    def size(self) -> int:
        return len(self.members)


def _computed_sign(observables: Sequence[PauliObservable]) -> int | None:
    try:
        return product_sign(observables)
    except (ProductNotIdentity, ProductNotReal):
        return None


@dataclass(frozen=True)
class ObservablesProof:
    n_qubits: int
    observables: tuple[PauliObservable, ...]
    contexts: tuple[Context, ...]
    name: str = ""

    def __post_init__(self):
        for i, p in enumerate(self.observables):
            if p.n_qubits != self.n_qubits:
                raise ValueError(f"observable {i} acts on {p.n_qubits} qubits, expected {self.n_qubits}")
        for ctx in self.contexts:
            for m in ctx.members:
                if not 0 <= m < len(self.observables):
                    raise ValueError(f"context {ctx.id} refers to unknown observable {m}")

    @classmethod
    def build(
        cls,
        observables: Iterable[PauliObservable | str],
        contexts: Iterable[Iterable[int]],
        name: str = "",
    ) -> ObservablesProof:
        """Assemble a proof, computing every context sign from its members."""
        obs = tuple(parse(o) if isinstance(o, str) else o for o in observables)
        if not obs:
            raise ValueError("a proof needs at least one observable")
        n = obs[0].n_qubits
        ctxs = []
        for k, members in enumerate(contexts):
            members = tuple(members)
            bad = [m for m in members if not 0 <= m < len(obs)]
            if bad:
                raise ValueError(f"context {k} refers to unknown observable {bad[0]}")
            sign = _computed_sign([obs[m] for m in members]) if members else None
            ctxs.append(Context(k, members, sign))
        return cls(n, obs, tuple(ctxs), name)

    def members(self, context: Context | int) -> list[PauliObservable]:
        ctx = self.contexts[context] if isinstance(context, int) else context
        return [self.observables[m] for m in ctx.members]

    def multiplicities(self) -> list[int]:
        counts = [0] * len(self.observables)
        for ctx in self.contexts:
            for m in ctx.members:
                counts[m] += 1
        return counts

    @property
    def signs(self) -> tuple[int | None, ...]:
        return tuple(c.sign for c in self.contexts)

    def with_sign(self, context_id: int, sign: int) -> ObservablesProof:
        """Copy with one declared context sign overwritten (for perturbation tests)."""
        ctxs = list(self.contexts)
        ctxs[context_id] = replace(ctxs[context_id], sign=sign)
        return replace(self, contexts=tuple(ctxs))

    def sub_proof(self, context_ids: Iterable[int]) -> ObservablesProof:
        """The proof formed by some contexts, dropping unused observables."""
        keep = sorted(set(context_ids))
        used = sorted({m for k in keep for m in self.contexts[k].members})
        index = {old: new for new, old in enumerate(used)}
        return ObservablesProof.build(
            [self.observables[m] for m in used],
            [[index[m] for m in self.contexts[k].members] for k in keep],
        )

    def is_simple(self) -> bool:
        """Every observable in exactly two contexts; contexts share at most one."""
        if any(m != 2 for m in self.multiplicities()):
            return False
        sets = [set(c.members) for c in self.contexts]
        return all(len(a & b) <= 1 for a, b in combinations(sets, 2))


@dataclass
class ValidationReport:
    non_hermitian: list[int] = field(default_factory=list)
    identity_observables: list[int] = field(default_factory=list)
    duplicate_observables: list[tuple[int, int]] = field(default_factory=list)
    unreferenced: list[int] = field(default_factory=list)
    malformed_contexts: list[tuple[int, str]] = field(default_factory=list)
    commutation_failures: list[tuple[int, int, int]] = field(default_factory=list)
    product_failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(
            (
                self.non_hermitian,
                self.identity_observables,
                self.duplicate_observables,
                self.unreferenced,
                self.malformed_contexts,
                self.commutation_failures,
                self.product_failures,
            )
        )

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        out = []
        out += [f"observable {i} is not Hermitian" for i in self.non_hermitian]
        out += [f"observable {i} is the identity" for i in self.identity_observables]
        out += [f"observables {i} and {j} coincide up to sign" for i, j in self.duplicate_observables]
        out += [f"observable {i} is in no context" for i in self.unreferenced]
        out += [f"context {k}: {why}" for k, why in self.malformed_contexts]
        out += [
            f"context {k}: observables {i} and {j} anticommute"
            for k, i, j in self.commutation_failures
        ]
        out += [f"context {k}: {why}" for k, why in self.product_failures]
        return out


def validate(proof: ObservablesProof) -> ValidationReport:
    """Check the structural preconditions of a proof without raising."""
    rep = ValidationReport()
    obs = proof.observables
    for i, p in enumerate(obs):
        if not p.is_hermitian:
            rep.non_hermitian.append(i)
        if p.is_identity:
            rep.identity_observables.append(i)
    seen: dict[int, int] = {}
    for i, p in enumerate(obs):
        if p.vector in seen:
            rep.duplicate_observables.append((seen[p.vector], i))
        else:
            seen[p.vector] = i
    referenced = {m for c in proof.contexts for m in c.members}
    rep.unreferenced = [i for i in range(len(obs)) if i not in referenced]

    for ctx in proof.contexts:
        if len(ctx.members) < 2:
            rep.malformed_contexts.append((ctx.id, "fewer than two members"))
        if len(set(ctx.members)) != len(ctx.members):
            rep.malformed_contexts.append((ctx.id, "repeated member"))
        anticommuting = False
        for i, j in combinations(ctx.members, 2):
            if not commutes(obs[i], obs[j]):
                rep.commutation_failures.append((ctx.id, i, j))
                anticommuting = True
        if not ctx.members:
            continue
        try:
            actual = product_sign([obs[m] for m in ctx.members])
        except ProductNotIdentity as exc:
            rep.product_failures.append((ctx.id, f"ProductNotIdentity: {exc}"))
            continue
        except ProductNotReal as exc:
            if not anticommuting:
                rep.product_failures.append((ctx.id, f"ProductNotReal: {exc}"))
            continue
        if ctx.sign != actual:
            rep.product_failures.append(
                (ctx.id, f"declared sign {ctx.sign} but product is {'+' if actual > 0 else '-'}I")
            )
    return rep


@dataclass(frozen=True)
class ParityCheck:
    is_proof: bool
    odd_observables: tuple[int, ...]
    negative_contexts: int
    unsigned_contexts: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.is_proof


def is_parity_proof(proof: ObservablesProof) -> ParityCheck:
    """Even multiplicity for every observable and an odd count of -I contexts."""
    mult = proof.multiplicities()
    odd = tuple(i for i, m in enumerate(mult) if m % 2)
    negative = sum(1 for c in proof.contexts if c.sign == -1)
    unsigned = tuple(c.id for c in proof.contexts if c.sign is None)
    ok = not odd and negative % 2 == 1 and not unsigned
    return ParityCheck(ok, odd, negative, unsigned)


def proof_symbol(proof: ObservablesProof) -> ObsSymbol:
    mult = [m for m in proof.multiplicities() if m]
    return ObsSymbol.from_counts(mult, (c.size for c in proof.contexts))


def assignment_search(proof: ObservablesProof, max_observables: int = 30) -> tuple[int, ...] | None:
    """Look for a +-1 value per observable reproducing every context sign.

    Returns ``None`` when no such valuation exists, otherwise the values in
    observable order (unused observables get +1). Backtracking with
    forced-value propagation: once a context has a single unassigned member
    its value is fixed by the sign.
    """
    n_obs = len(proof.observables)
    if n_obs > max_observables:
        raise SearchBoundExceeded(f"{n_obs} observables exceeds bound {max_observables}")
    if any(c.sign is None for c in proof.contexts):
        raise KSError("every context needs a sign before searching for valuations")

    contexts_of: list[list[int]] = [[] for _ in range(n_obs)]
    for k, c in enumerate(proof.contexts):
        for m in c.members:
            contexts_of[m].append(k)
    order = []
    for c in proof.contexts:
        for m in c.members:
            if m not in order:
                order.append(m)

    values = [0] * n_obs  # 0 = unassigned

    def consistent(k: int) -> tuple[bool, int | None]:
        """Is context k still satisfiable; which member (if any) is forced."""
        c = proof.contexts[k]
        prod = 1
        free = []
        for m in c.members:
            if values[m] == 0:
                free.append(m)
            else:
                prod *= values[m]
        if not free:
            return prod == c.sign, None
        if len(free) == 1:
            return True, free[0]
        return True, None

    def assign(m: int, v: int, trail: list[int]) -> bool:
        queue = [(m, v)]
        while queue:
            m, v = queue.pop()
            if values[m]:
                if values[m] != v:
                    return False
                continue
            values[m] = v
            trail.append(m)
            for k in contexts_of[m]:
                ok, forced = consistent(k)
                if not ok:
                    return False
                if forced is not None:
                    c = proof.contexts[k]
                    prod = 1
                    for x in c.members:
                        if x != forced:
                            prod *= values[x]
                    queue.append((forced, c.sign * prod))
        return True

    def undo(trail: list[int]):
        for m in trail:
            values[m] = 0

    def search(pos: int) -> bool:
        while pos < len(order) and values[order[pos]]:
            pos += 1
        if pos == len(order):
            return True
        m = order[pos]
        for v in (1, -1):
            trail: list[int] = []
            if assign(m, v, trail) and search(pos + 1):
                return True
            undo(trail)
        return False

    # Contexts with a single member constrain it directly.
    for c in proof.contexts:
        if len(c.members) == 1:
            trail: list[int] = []
            if not assign(c.members[0], c.sign, trail):
                return None
    if not search(0):
        return None
    return tuple(v or 1 for v in values)


def _sub_proof_vector(incidence: Sequence[int], negative: int) -> int | None:
    """A nonempty set of contexts forming a parity proof, as a bitmask.

    ``incidence[k]`` is the observable bitmask of context ``k``; bit ``k`` of
    ``negative`` marks -I contexts. Prefers the largest-index basis vector.
    """
    null = gf2.nullspace(incidence)
    odd = [v for v in null if gf2.parity(v & negative)]
    return odd[0] if odd else None


@dataclass(frozen=True)
class CriticalityReport:
    context_critical: bool
    qubit_critical: bool
    context_violation: tuple[int, ...] | None = None
    qubit_violation: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def critical(self) -> bool:
        return self.context_critical and self.qubit_critical

    def __bool__(self) -> bool:
        return self.critical


def _context_violation(proof: ObservablesProof) -> tuple[int, ...] | None:
    incidence = [sum(1 << m for m in c.members) for c in proof.contexts]
    negative = sum(1 << c.id for c in proof.contexts if c.sign == -1)
    null = gf2.nullspace(incidence)
    full = (1 << len(proof.contexts)) - 1
    odd = [v for v in null if gf2.parity(v & negative)]
    even = [v for v in null if not gf2.parity(v & negative)]
    if not odd:
        return None
    # All odd vectors form a coset of the even subspace; anything other than
    # the whole proof is a proper sub-proof.
    base = odd[0]
    for v in [base, *odd[1:], *(base ^ e for e in even)]:
        if v != full:
            return tuple(gf2.bits(v))
    return None


def _reduce_to_qubits(proof: ObservablesProof, keep: tuple[int, ...]):
    """Restrict every observable to ``keep`` and keep the contexts that survive.

    A context survives when its restricted members are non-identity,
    pairwise distinct, pairwise commuting and multiply to +-I. Restricted
    observables that coincide are merged.
    """
    restricted = [restrict(p, keep) for p in proof.observables]
    labels: dict[str, int] = {}
    surviving = []
    for c in proof.contexts:
        members = [restricted[m] for m in c.members]
        if any(p.is_identity for p in members):
            continue
        if len({p.letters for p in members}) != len(members):
            continue
        if not all(commutes(a, b) for a, b in combinations(members, 2)):
            continue
        sign = _computed_sign(members)
        if sign is None:
            continue
        ids = [labels.setdefault(p.letters, len(labels)) for p in members]
        surviving.append((c.id, ids, sign))
    return surviving


def check_critical(
    proof: ObservablesProof, max_contexts: int = 24, max_qubits: int = 12
) -> CriticalityReport:
    """Test that no proper sub-collection of contexts, and no proper subset of
    qubits, still carries a parity proof.

    The qubit test restricts all observables to each proper qubit subset and
    asks whether any collection of the surviving contexts is a parity proof.
    """
    if len(proof.contexts) > max_contexts:
        raise SearchBoundExceeded(f"{len(proof.contexts)} contexts exceeds bound {max_contexts}")
    if proof.n_qubits > max_qubits:
        raise SearchBoundExceeded(f"{proof.n_qubits} qubits exceeds bound {max_qubits}")

    ctx_violation = _context_violation(proof)

    qubit_violation = None
    n = proof.n_qubits
    for size in range(1, n):
        for keep in combinations(range(n), size):
            surviving = _reduce_to_qubits(proof, keep)
            if not surviving:
                continue
            incidence = [sum(1 << m for m in ids) for _, ids, _ in surviving]
            negative = sum(1 << k for k, (_, _, s) in enumerate(surviving) if s == -1)
            v = _sub_proof_vector(incidence, negative)
            if v is not None:
                qubit_violation = (keep, tuple(surviving[k][0] for k in gf2.bits(v)))
                break
        if qubit_violation:
            break

    return CriticalityReport(
        context_critical=ctx_violation is None,
        qubit_critical=qubit_violation is None,
        context_violation=ctx_violation,
        qubit_violation=qubit_violation,
    )
