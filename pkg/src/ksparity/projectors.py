"""Projectors and bases generated by an observables proof.

Every context with GF(2) rank ``k`` splits the 2**N-dimensional space into
``2**k`` joint eigenprojectors of rank ``2**(N-k)``, one per eigenvalue
signature compatible with the product relations among its members. Those
sets are the pure bases. Pairwise orthogonal projectors drawn from several
contexts whose ranks add up to ``2**N`` form hybrid bases.

Two joint eigenprojectors ``p`` and ``q`` are orthogonal exactly when some
element of the intersection of their (unsigned) stabilizer groups takes
opposite signs on them. When they are not orthogonal their overlap is

    Tr(p q) = 2**(N - dim(span(p) + span(q)))

which the basis search uses as an exact covering constraint.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product as cartesian

from . import gf2
from .errors import InconsistentContext, SearchBoundExceeded
from .pauli import PauliObservable, identity, multiply, product
from .proof import ObservablesProof
from .symbols import SystemSymbol


@dataclass(frozen=True)
class Projector:
    id: int
    context_id: int
    observables: tuple[PauliObservable, ...]
    signature: tuple[int, ...]
    rank: int

    @property
    def n_qubits(self) -> int:
        return self.observables[0].n_qubits

    @property
    def signature_string(self) -> str:
        return "".join("0" if s > 0 else "1" for s in self.signature)

    @property
    def sign_mask(self) -> int:
        """Bit ``j`` set when member ``j`` has eigenvalue -1."""
        return sum(1 << j for j, s in enumerate(self.signature) if s < 0)

    def with_signature(self, signature: Sequence[int]) -> Projector:
        return Projector(self.id, self.context_id, self.observables, tuple(signature), self.rank)


def _context_layout(members: Sequence[PauliObservable]):
    """Independent generators and, for each dependent member, its expression.

    Returns ``(gens, deps)`` with ``deps[j] = (combo over gens, sign)`` so that
    ``members[j] == sign * product(members[g] for g in combo)``.
    """
    vectors = [m.vector for m in members]
    gens = gf2.independent_subset(vectors)
    deps = {}
    for j in range(len(members)):
        if j in gens:
            continue
        combo = gf2.solve([vectors[g] for g in gens], vectors[j])
        chosen = [gens[t] for t in gf2.bits(combo)]
        prod = product([members[g] for g in chosen])
        if prod == members[j]:
            sign = 1
        elif prod == -members[j]:
            sign = -1
        else:
            raise InconsistentContext("generators do not commute with a dependent member")
        deps[j] = (tuple(chosen), sign)
    return gens, deps


def context_signatures(members: Sequence[PauliObservable], sign: int) -> list[tuple[int, ...]]:
    """All eigenvalue signatures of a context, in numbering order.

    Signatures become binary strings (+1 -> 0, -1 -> 1) and are sorted on
    everything but the last digit, the last digit breaking ties.
    """
    gens, deps = _context_layout(members)
    out = []
    for free in cartesian((1, -1), repeat=len(gens)):
        sig = [0] * len(members)
        for g, s in zip(gens, free):
            sig[g] = s
        for j, (chosen, dsign) in deps.items():
            v = dsign
            for g in chosen:
                v *= sig[g]
            sig[j] = v
        total = 1
        for s in sig:
            total *= s
        if total != sign:
            raise InconsistentContext("signature violates the context sign")
        out.append(tuple(sig))

    def key(sig):
        bits = "".join("0" if s > 0 else "1" for s in sig)
        return bits[:-1], bits[-1:]

    return sorted(out, key=key)


@lru_cache(maxsize=4096)
def _pair_relations(
    members_a: tuple[PauliObservable, ...], members_b: tuple[PauliObservable, ...]
) -> tuple[tuple[tuple[int, int, int], ...], int]:
    """Relations ``prod(a-subset) * prod(b-subset) = +-I`` between two contexts.

    Returns a basis of relations as ``(mask_a, mask_b, minus)`` with
    ``minus == 1`` for -I, and the dimension of ``span(a) + span(b)``.
    """
    ka = len(members_a)
    vectors = [m.vector for m in members_a] + [m.vector for m in members_b]
    null = gf2.nullspace(vectors)
    rels = []
    n = members_a[0].n_qubits
    for c in null:
        ma, mb = c & ((1 << ka) - 1), c >> ka
        prod = identity(n)
        for j in gf2.bits(ma):
            prod = multiply(prod, members_a[j])
        for j in gf2.bits(mb):
            prod = multiply(prod, members_b[j])
        # prod is +-I: each subset multiplies to a Hermitian operator with
        # the same symplectic part.
        rels.append((ma, mb, 1 if prod.phase_exp == 2 else 0))
    return tuple(rels), len(vectors) - len(null)


def _orthogonal_masks(sa: int, sb: int, rels) -> bool:
    return any(gf2.parity(sa & ma) ^ gf2.parity(sb & mb) ^ minus for ma, mb, minus in rels)


def orthogonal(p: Projector, q: Projector) -> bool:
    """Decide ``p q == 0`` from the signed stabilizer rule.

    Within one context this reduces to ``p != q``. Across contexts: some
    product of ``p``'s signed observables is the negative of some product of
    ``q``'s.
    """
    rels, _ = _pair_relations(p.observables, q.observables)
    return _orthogonal_masks(p.sign_mask, q.sign_mask, rels)


def overlap(p: Projector, q: Projector) -> Fraction:
    """``Tr(p q)``: zero when orthogonal, else ``2**(N - dim(span p + span q))``.

    Fractional when the two contexts do not commute.
    """
    rels, dim = _pair_relations(p.observables, q.observables)
    if _orthogonal_masks(p.sign_mask, q.sign_mask, rels):
        return Fraction(0)
    return Fraction(2) ** (p.n_qubits - dim)


@dataclass(frozen=True)
class SignedStabilizer:
    projector_id: int
    generators: tuple[PauliObservable, ...]

    @property
    def size(self) -> int:
        return 1 << len(self.generators)

    @cached_property
    def elements(self) -> frozenset[PauliObservable]:
        n = self.generators[0].n_qubits if self.generators else None
        if n is None:
            raise ValueError("empty generator list")
        out = set()
        for combo in range(self.size):
            g = identity(n)
            for j in gf2.bits(combo):
                g = multiply(g, self.generators[j])
            out.add(g)
        return frozenset(out)

    def __contains__(self, g: PauliObservable) -> bool:
        return g in self.elements

    def __iter__(self) -> Iterator[PauliObservable]:
        return iter(sorted(self.elements, key=lambda e: (e.vector, e.phase_exp)))


def signed_stabilizer(projector: Projector) -> SignedStabilizer:
    """The group generated by ``signature[j] * member[j]``.

    Every element acts as +1 on the projector's range.
    """
    members = projector.observables
    gens = gf2.independent_subset([m.vector for m in members])
    signed = tuple(members[g] if projector.signature[g] > 0 else -members[g] for g in gens)
    return SignedStabilizer(projector.id, signed)


class ProjectorSet(Sequence[Projector]):
    """The numbered projectors of a proof, with cached pairwise data.

    Indexing is 0-based like any sequence; ``by_id`` uses the 1-based
    projector numbers.
    """

    def __init__(self, proof: ObservablesProof, projectors: Sequence[Projector]):
        self.proof = proof
        self._items = tuple(projectors)
        self.n_qubits = proof.n_qubits
        self.by_context: dict[int, tuple[int, ...]] = {}
        for p in self._items:
            self.by_context.setdefault(p.context_id, ())
            self.by_context[p.context_id] += (p.id,)

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, i):
        return self._items[i]

    def by_id(self, pid: int) -> Projector:
        return self._items[pid - 1]

    @cached_property
    def _pairwise(self):
        n = len(self._items)
        orth = [0] * n
        overlaps: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        ctx_members = {p.context_id: p.observables for p in self._items}
        ranks = {}
        for a in ctx_members:
            for b in ctx_members:
                ranks[a, b] = _pair_relations(ctx_members[a], ctx_members[b])
        masks = [p.sign_mask for p in self._items]
        for i, p in enumerate(self._items):
            for j, q in enumerate(self._items):
                rels, dim = ranks[p.context_id, q.context_id]
                if _orthogonal_masks(masks[i], masks[j], rels):
                    orth[i] |= 1 << j
                else:
                    # Tr(p q) in units of 2**-N, so that it is an integer.
                    overlaps[i].append((j, 1 << (2 * self.n_qubits - dim)))
        return orth, overlaps

    @property
    def orthogonality(self) -> list[int]:
        """Bitmask per projector index of the projectors orthogonal to it."""
        return self._pairwise[0]

    def orthogonal(self, pid: int, qid: int) -> bool:
        return bool(self._pairwise[0][pid - 1] >> (qid - 1) & 1)

    def overlaps(self, pid: int) -> list[tuple[int, int]]:
        """``(projector id, Tr(p q))`` for all ``q`` not orthogonal to ``p``."""
        unit = Fraction(1, 1 << self.n_qubits)
        return [(j + 1, w * unit) for j, w in self._pairwise[1][pid - 1]]

    def duplicates(self) -> list[tuple[int, ...]]:
        """Groups of distinct numbers that denote the same operator."""
        groups = []
        seen = set()
        for i, p in enumerate(self._items):
            if i in seen:
                continue
            full = p.rank << self.n_qubits
            same = [
                j for j, w in self._pairwise[1][i] if w == full and self._items[j].rank == p.rank
            ]
            if len(same) > 1:
                groups.append(tuple(j + 1 for j in same))
                seen.update(same)
        return groups


def enumerate_projectors(proof: ObservablesProof) -> ProjectorSet:
    """Number the joint eigenprojectors of every context, contexts in order."""
    out = []
    next_id = 1
    for ctx in proof.contexts:
        if ctx.sign is None:
            raise InconsistentContext(f"context {ctx.id} has no product sign")
        members = tuple(proof.members(ctx))
        sigs = context_signatures(members, ctx.sign)
        rank = 1 << (proof.n_qubits - gf2.rank([m.vector for m in members]))
        for sig in sigs:
            out.append(Projector(next_id, ctx.id, members, sig, rank))
            next_id += 1
    return ProjectorSet(proof, out)


@dataclass(frozen=True)
class Basis:
    label: str
    kind: str  # "pure" or "hybrid"
    projector_ids: frozenset[int]
    contexts: tuple[int, ...]  # contexts whose projectors it uses

    @property
    def size(self) -> int:
        return len(self.projector_ids)

    def sorted_ids(self) -> list[int]:
        return sorted(self.projector_ids)


@dataclass(frozen=True)
class HybridPair:
    number: int
    a: str
    b: str
    contexts: tuple[int, int]
    split: PauliObservable | None  # common group element separating the halves


@dataclass(frozen=True)
class BasisSystem:
    projectors: ProjectorSet
    bases: tuple[Basis, ...]
    hybrid_pairs: tuple[HybridPair, ...]
    method: str = "clique"

    @property
    def proof(self) -> ObservablesProof:
        return self.projectors.proof

    @property
    def pure_bases(self) -> tuple[Basis, ...]:
        return tuple(b for b in self.bases if b.kind == "pure")

    @property
    def hybrid_bases(self) -> tuple[Basis, ...]:
        return tuple(b for b in self.bases if b.kind == "hybrid")

    @cached_property
    def _by_label(self) -> dict[str, int]:
        return {b.label: i for i, b in enumerate(self.bases)}

    def basis(self, label: str) -> Basis:
        from .errors import UnknownBasisLabel

        try:
            return self.bases[self._by_label[label]]
        except KeyError:
            raise UnknownBasisLabel(label) from None

    def index(self, label: str) -> int:
        from .errors import UnknownBasisLabel

        try:
            return self._by_label[label]
        except KeyError:
            raise UnknownBasisLabel(label) from None

    @property
    def labels(self) -> list[str]:
        return [b.label for b in self.bases]

    @cached_property
    def symbol(self) -> SystemSymbol:
        return system_symbol(self)


def _search_bases(projectors: ProjectorSet) -> list[frozenset[int]]:
    """All sets of pairwise orthogonal projectors resolving the identity.

    Treats every projector ``q`` as a demand of ``rank(q)`` that the chosen
    projectors must meet exactly through their overlaps ``Tr(q b)``. At each
    node the demand with the fewest remaining contributors is branched on,
    each branch fixing the lowest-numbered contributor actually used, so
    every basis is produced once.
    """
    n = len(projectors)
    orth, overlaps = projectors._pairwise
    contrib = [sum(1 << j for j, _ in overlaps[q]) for q in range(n)]
    weight = [dict(overlaps[q]) for q in range(n)]
    demand = [p.rank << projectors.n_qubits for p in projectors]  # same units as overlaps
    found: list[frozenset[int]] = []
    chosen: list[int] = []

    def search(cand: int):
        best = None
        best_count = None
        for q in range(n):
            if demand[q] == 0:
                continue
            c = cand & contrib[q]
            if not c:
                return
            cnt = c.bit_count()
            if best_count is None or cnt < best_count:
                best, best_count = q, cnt
                if cnt == 1:
                    break
        if best is None:
            found.append(frozenset(i + 1 for i in chosen))
            return
        c = cand & contrib[best]
        wq = weight[best]
        if sum(wq[j] for j in gf2.bits(c)) < demand[best]:
            return
        excluded = 0
        for b in gf2.bits(c):
            nxt = cand & ~excluded & orth[b]
            chosen.append(b)
            for j, w in overlaps[b]:
                demand[j] -= w
            search(nxt)
            for j, w in overlaps[b]:
                demand[j] += w
            chosen.pop()
            excluded |= 1 << b

    search((1 << n) - 1)
    return found


def _group_elements(rels, members_a) -> list[tuple[int, int, int, PauliObservable]]:
    """Nontrivial common elements of two contexts' groups.

    Each entry is ``(mask_a, mask_b, minus, g)`` with ``g`` the bare letter
    representative, ``prod(a-subset) = s_a g`` and ``prod(b-subset) = s_b g``
    where ``minus`` records ``s_a * s_b``. Duplicated by vector are dropped.
    """
    out = {}
    basis = list(rels)
    n = members_a[0].n_qubits
    for combo in range(1, 1 << len(basis)):
        ma = mb = minus = 0
        for t in gf2.bits(combo):
            ra, rb, rm = basis[t]
            ma ^= ra
            mb ^= rb
            minus ^= rm
        g = identity(n)
        for j in gf2.bits(ma):
            g = multiply(g, members_a[j])
        if g.is_identity or g.vector in out:
            continue
        out[g.vector] = (ma, mb, minus, g)
    return [out[v] for v in sorted(out)]


def _split_halves(projectors: ProjectorSet, a: int, b: int, ma: int, mb: int, minus: int):
    """Projectors of contexts a and b on each side of a split element.

    Returns the hybrid made of a's projectors where the element is +1 and
    b's where it is -1, and its complement.
    """
    pa = [projectors.by_id(i) for i in projectors.by_context[a]]
    pb = [projectors.by_id(i) for i in projectors.by_context[b]]
    # Value of prod(a-subset) on p is (-1)^parity(sign_mask & ma); on q the
    # same element is minus * prod(b-subset).
    plus_a = {p.id for p in pa if not gf2.parity(p.sign_mask & ma)}
    minus_b = {q.id for q in pb if gf2.parity(q.sign_mask & mb) ^ minus}
    h1 = frozenset(plus_a | minus_b)
    h2 = frozenset(set(projectors.by_context[a]) | set(projectors.by_context[b])) - h1
    return h1, h2


def _split_bases(projectors: ProjectorSet) -> list[frozenset[int]]:
    found = [frozenset(ids) for ids in projectors.by_context.values()]
    ctx_members = {p.context_id: p.observables for p in projectors}
    for a, b in combinations(sorted(ctx_members), 2):
        rels, _ = _pair_relations(ctx_members[a], ctx_members[b])
        for ma, mb, minus, _g in _group_elements(rels, ctx_members[a]):
            found.extend(_split_halves(projectors, a, b, ma, mb, minus))
    return found


def _find_split(projectors: ProjectorSet, a: int, b: int, member: frozenset[int]):
    ctx_members = {p.context_id: p.observables for p in projectors}
    rels, _ = _pair_relations(ctx_members[a], ctx_members[b])
    for ma, mb, minus, g in _group_elements(rels, ctx_members[a]):
        if member in _split_halves(projectors, a, b, ma, mb, minus):
            return g.unsigned()
    return None


def classify_bases(
    projectors: ProjectorSet, found: Sequence[frozenset[int]], method: str
) -> BasisSystem:
    """Label bases: pure bases by context, then hybrid pairs, then the rest.

    Hybrid pairs are ordered by the pure bases they mix, then by the sorted
    membership of their ``a`` member; ``a`` is the member holding the lowest
    projector number of the pair.
    """
    pure_sets = {frozenset(ids): ctx for ctx, ids in projectors.by_context.items()}
    context_of = {p.id: p.context_id for p in projectors}
    unique = sorted(set(found), key=lambda s: sorted(s))
    hybrids = [s for s in unique if s not in pure_sets]
    hybrid_set = set(hybrids)
    pair_sets = {}
    for h in hybrids:
        ctxs = sorted({context_of[i] for i in h})
        if len(ctxs) != 2:
            continue
        union = set(projectors.by_context[ctxs[0]]) | set(projectors.by_context[ctxs[1]])
        other = frozenset(union - h)
        if other in hybrid_set and other.isdisjoint(h):
            a_member, b_member = (h, other) if min(h) < min(other) else (other, h)
            pair_sets[a_member] = (b_member, tuple(ctxs))

    ctx_order = {ctx.id: k for k, ctx in enumerate(projectors.proof.contexts)}
    bases = []
    for ids, ctx in sorted(pure_sets.items(), key=lambda kv: ctx_order[kv[1]]):
        bases.append(Basis(str(ctx_order[ctx] + 1), "pure", ids, (ctx,)))

    def pair_key(item):
        a_member, (_, ctxs) = item
        return (sorted(ctx_order[c] for c in ctxs), sorted(a_member))

    pairs = []
    number = len(bases)
    paired = set()
    for a_member, (b_member, ctxs) in sorted(pair_sets.items(), key=pair_key):
        number += 1
        la, lb = f"{number}a", f"{number}b"
        bases.append(Basis(la, "hybrid", a_member, ctxs))
        bases.append(Basis(lb, "hybrid", b_member, ctxs))
        split = _find_split(projectors, ctxs[0], ctxs[1], a_member)
        pairs.append(HybridPair(number, la, lb, ctxs, split))
        paired.update((a_member, b_member))
    for h in hybrids:
        if h not in paired:
            number += 1
            ctxs = tuple(sorted({context_of[i] for i in h}, key=ctx_order.get))
            bases.append(Basis(str(number), "hybrid", h, ctxs))
    return BasisSystem(projectors, tuple(bases), tuple(pairs), method)


def enumerate_bases(
    projectors: ProjectorSet, max_projectors: int = 256, method: str = "clique"
) -> BasisSystem:
    """Find the bases of a projector set.

    ``method="clique"`` searches exhaustively over the orthogonality graph.
    ``method="split"`` only joins halves of two pure bases separated by a
    common group element, which is much cheaper and finds every hybrid pair
    built that way, but not exotic bases mixing three or more contexts.
    """
    if method == "clique":
        if len(projectors) > max_projectors:
            raise SearchBoundExceeded(
                f"{len(projectors)} projectors exceeds bound {max_projectors}"
            )
        found = _search_bases(projectors)
    elif method == "split":
        found = _split_bases(projectors)
    else:
        raise ValueError(f"unknown method {method!r}")
    return classify_bases(projectors, found, method)


def basis_system(proof: ObservablesProof, method: str = "clique", **kwargs) -> BasisSystem:
    return enumerate_bases(enumerate_projectors(proof), method=method, **kwargs)


def system_symbol(system: BasisSystem) -> SystemSymbol:
    mult = {p.id: 0 for p in system.projectors}
    for b in system.bases:
        for i in b.projector_ids:
            mult[i] += 1
    rank = {p.id: p.rank for p in system.projectors}
    return SystemSymbol.from_counts(
        ((rank[i], m) for i, m in mult.items() if m), (b.size for b in system.bases)
    )
