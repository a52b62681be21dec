"""The Kite family of observables proofs and its nine-basis projector proofs.

A Kite has six contexts::

    (A, C, F)  (B, D, E)  (A, B, G)  (C, D, H)      product +I
    (F, E, I1 .. In)                                product +I
    (G, H, I1 .. In)                                product -I

Everything follows from the long context ``(G, H, I1 .. In)``: the wingtips
``F`` and ``E`` are ``G`` and ``H`` with their first letters (one X, one Z)
exchanged, and the body ``A .. D`` is solved for.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product as cartesian

from . import gf2
from .errors import Inconsistent, NoSolution, SearchBoundExceeded, SwapNotApplicable, UnknownName
from .parity import ParityProof, make_proof, validate_parity_proof
from .pauli import (
    PauliObservable,
    commutes,
    multiply,
    parse,
    product_sign,
    symplectic_product,
)
from .projectors import BasisSystem, ProjectorSet, enumerate_bases, enumerate_projectors
from .proof import ObservablesProof

# Context positions in an assembled Kite.
ACF, BDE, ABG, CDH, FE_TAIL, GH_TAIL = range(6)


@dataclass(frozen=True)
class KiteSpec:
    n_qubits: int
    G: PauliObservable
    H: PauliObservable
    tail: tuple[PauliObservable, ...]

    def __post_init__(self):
        if not self.tail:
            raise ValueError("a Kite needs at least one tail observable")
        members = self.long_context
        if any(p.n_qubits != self.n_qubits for p in members):
            raise ValueError("qubit counts differ")
        for i, p in enumerate(members):
            for q in members[i + 1:]:
                if not commutes(p, q):
                    raise ValueError(f"{p} and {q} do not commute")
        if product_sign(members) != -1:
            raise ValueError("(G, H, tail) must multiply to -I")

    @property
    def long_context(self) -> list[PauliObservable]:
        return [self.G, self.H, *self.tail]

    @classmethod
    def from_strings(cls, g: str, h: str, tail: Sequence[str]) -> KiteSpec:
        G, H = parse(g), parse(h)
        return cls(G.n_qubits, G, H, tuple(parse(t) for t in tail))


def standard_tail(n_qubits: int) -> KiteSpec:
    """The ``N + 1`` commuting observables of the odd/even Kite patterns."""
    n = n_qubits
    if n < 3:
        raise ValueError("standard Kite tails need at least 3 qubits")

    def word(letters: dict[int, str], fill: str = "I") -> str:
        return "".join(letters.get(q, fill) for q in range(n))

    if n % 2:
        g = word({0: "Z", n - 1: "Z"})
        h = "X" * n
        tail = [word({i: "Z", n - 1: "Z"}) for i in range(1, n - 1)]
        tail.append("Y" * (n - 1) + "X")
    else:
        g = "Z" * n
        h = word({0: "X", 2: "X"})
        tail = ["YY" + "Z" * (n - 2)]
        tail += [word({k: "X", k + 2: "X"}) for k in range(1, n - 2)]
        tail.append(word({n - 2: "X", n - 1: "X"}))
    return _negative_spec(g, h, tail)


def _negative_spec(g: str, h: str, tail: Sequence[str]) -> KiteSpec:
    """Letter strings carry no sign; negate the last tail row if the product is +I."""
    G, H = parse(g), parse(h)
    rows = [parse(t) for t in tail]
    if product_sign([G, H, *rows]) == 1:
        rows[-1] = -rows[-1]
    return KiteSpec(G.n_qubits, G, H, tuple(rows))


# Long contexts of economical Kites: G first, H second, then the tail.
_COMPRESSED = {
    "kite7": ("ZZZZZII", "XXZXXZZ", ["YIXZZXX", "IYIXIZX", "IIXIXXZ"]),
    "kite11": (
        "ZIZZZXXIXXI",
        "XIXIXXIXZXX",
        ["IIZZZZZZZZZ", "IZXXIZZZIII", "IXIXIIXIIZZ", "YYIIXIIXXIX"],
    ),
    "kite16": (
        "ZZZZZZZZIIIIIIII",
        "XXXXIIIIZZZZIIII",
        [
            "YIIIXXXIXIIIZZII",
            "IYIIYIIIIXXXXIZI",
            "IIIIIYIXYYIIIIXZ",
            "IIYIIIIYIIYIYXIX",
            "IIIYIIYIIIIYIYYY",
        ],
    ),
}


def compressed_tail(name: str) -> KiteSpec:
    try:
        g, h, tail = _COMPRESSED[name]
    except KeyError:
        raise UnknownName(name) from None
    return _negative_spec(g, h, tail)


def _first_letter_swapped(p: PauliObservable, letter: str) -> PauliObservable:
    return parse(letter + p.letters[1:])


def derive_wingtips(spec: KiteSpec) -> tuple[PauliObservable, PauliObservable]:
    """``(F, E)``: ``G`` and ``H`` with their first letters exchanged."""
    g0, h0 = spec.G.letters[0], spec.H.letters[0]
    if {g0, h0} != {"X", "Z"}:
        raise SwapNotApplicable(f"first letters are {g0} and {h0}, not X and Z")
    F = _first_letter_swapped(spec.G, h0)
    E = _first_letter_swapped(spec.H, g0)
    if spec.G.sign < 0:
        F = -F
    if spec.H.sign < 0:
        E = -E
    return F, E


@dataclass(frozen=True)
class KiteBody:
    A: PauliObservable
    B: PauliObservable
    C: PauliObservable
    D: PauliObservable


def _functional(v: PauliObservable) -> int:
    """The row ``w`` with ``parity(w & a.vector) == symplectic_product(a, v)``."""
    return (v.z << v.n_qubits) | v.x


def _consistent(rows: list[tuple[int, int]], width: int) -> bool:
    """Is ``{row . a = rhs}`` solvable? Rows carry their rhs above ``width`` bits."""
    aug = [r | (rhs << width) for r, rhs in rows]
    plain = [r for r, _ in rows]
    return gf2.rank(aug) == gf2.rank(plain)


def solve_body(
    F: PauliObservable,
    E: PauliObservable,
    G: PauliObservable,
    H: PauliObservable,
    others: Sequence[PauliObservable] = (),
) -> Iterator[KiteBody]:
    """All ``(A, B, C, D)`` completing the four short contexts.

    The symplectic parts satisfy ``c = a + f``, ``b = a + g``, ``d = a + f + h``,
    so ``a`` determines everything, and the commutation requirements are
    linear in ``a``. Candidates are produced in lexicographic order of ``A``'s
    letter string (I < X < Y < Z), each as ``+A`` and then ``-A``; those whose
    ``B D E`` product is not ``+I`` or that repeat an observable are skipped.
    """
    if len({F.vector, E.vector, G.vector, H.vector}) < 4:
        raise Inconsistent("F, E, G and H must be distinct")
    if F.vector ^ E.vector != G.vector ^ H.vector:
        raise Inconsistent("f + e != g + h: no symplectic solution")
    n = F.n_qubits
    width = 2 * n
    constraints = [
        (_functional(F), 0),
        (_functional(G), 0),
        (_functional(H), symplectic_product(F, H)),
        (_functional(E), symplectic_product(G, E)),
    ]
    if not _consistent(constraints, width):
        raise NoSolution("commutation constraints are contradictory")
    taken = {p.vector for p in (F, E, G, H, *others)}

    def letters_rows(prefix: str) -> list[tuple[int, int]]:
        rows = []
        for q, ch in enumerate(prefix):
            xb = ch in "XY"
            zb = ch in "YZ"
            rows.append((1 << (width - 1 - q), int(xb)))
            rows.append((1 << (n - 1 - q), int(zb)))
        return rows

    def leaves(prefix: str) -> Iterator[str]:
        if len(prefix) == n:
            yield prefix
            return
        for ch in "IXYZ":
            nxt = prefix + ch
            if _consistent(constraints + letters_rows(nxt), width):
                yield from leaves(nxt)

    for a_letters in leaves(""):
        A = parse(a_letters)
        if A.is_identity:
            continue
        for A_signed in (A, -A):
            C = multiply(A_signed, F)
            B = multiply(A_signed, G)
            D = multiply(C, H)
            if not all(p.is_hermitian for p in (B, C, D)):
                continue
            try:
                if product_sign([B, D, E]) != 1:
                    continue
            except ValueError:
                continue
            vecs = {A.vector, B.vector, C.vector, D.vector}
            if len(vecs) < 4 or 0 in vecs or vecs & taken:
                continue
            yield KiteBody(A_signed, B, C, D)


@dataclass(frozen=True)
class KiteProof:
    spec: KiteSpec
    A: PauliObservable
    B: PauliObservable
    C: PauliObservable
    D: PauliObservable
    E: PauliObservable
    F: PauliObservable
    name: str = ""

    @property
    def G(self) -> PauliObservable:
        return self.spec.G

    @property
    def H(self) -> PauliObservable:
        return self.spec.H

    @property
    def tail(self) -> tuple[PauliObservable, ...]:
        return self.spec.tail

    @property
    def proof(self) -> ObservablesProof:
        obs = [self.A, self.B, self.C, self.D, self.E, self.F, self.G, self.H, *self.tail]
        tail_ids = list(range(8, 8 + len(self.tail)))
        contexts = [
            [0, 2, 5],
            [1, 3, 4],
            [0, 1, 6],
            [2, 3, 7],
            [5, 4, *tail_ids],
            [6, 7, *tail_ids],
        ]
        return ObservablesProof.build(obs, contexts, name=self.name)


def assemble(spec: KiteSpec, name: str = "", solution: int = 0) -> KiteProof:
    """Place a long context on the Kite skeleton, using the ``solution``-th body."""
    F, E = derive_wingtips(spec)
    if product_sign([F, E, *spec.tail]) != 1:
        raise Inconsistent("(F, E, tail) does not multiply to +I")
    for k, body in enumerate(solve_body(F, E, spec.G, spec.H, spec.tail)):
        if k == solution:
            return KiteProof(spec, body.A, body.B, body.C, body.D, E, F, name)
    raise NoSolution(f"fewer than {solution + 1} body solutions")


def all_solutions(spec: KiteSpec, limit: int | None = None) -> list[KiteProof]:
    F, E = derive_wingtips(spec)
    out = []
    for body in solve_body(F, E, spec.G, spec.H, spec.tail):
        out.append(KiteProof(spec, body.A, body.B, body.C, body.D, E, F))
        if limit is not None and len(out) >= limit:
            break
    return out


# Pairs of contexts split by each element, in the order the nine-basis
# construction numbers them.
_NINE_PAIRS = (
    (ACF, ABG, "A"),
    (ACF, CDH, "C"),
    (BDE, ABG, "B"),
    (BDE, CDH, "D"),
    (ACF, FE_TAIL, "F"),
    (BDE, FE_TAIL, "E"),
    (ABG, GH_TAIL, "G"),
    (CDH, GH_TAIL, "H"),
    (FE_TAIL, GH_TAIL, "T"),
)


@dataclass(frozen=True)
class NineBasisProofs:
    system: BasisSystem
    pair_labels: tuple[tuple[str, str], ...]  # system labels of pairs 1..9, (a, b)
    proofs: tuple[ParityProof, ...]
    patterns: tuple[tuple[str, ...], ...]  # the same proofs as "1a", "2b", ..., "9a"


def nine_basis_proofs(
    kite: KiteProof, system: BasisSystem | None = None, max_tail: int = 4
) -> NineBasisProofs:
    """The 16 proofs using one basis from each of nine hybrid pairs.

    Pairs 1-4 are chosen freely; the members of pairs 5-9 are then forced.
    """
    if system is None:
        if len(kite.tail) > max_tail:
            raise SearchBoundExceeded(f"tail length {len(kite.tail)} exceeds bound {max_tail}")
        system = enumerate_bases(enumerate_projectors(kite.proof), method="split")
    tail_product = kite.tail[0]
    for t in kite.tail[1:]:
        tail_product = multiply(tail_product, t)
    elements = {
        "A": kite.A, "B": kite.B, "C": kite.C, "D": kite.D, "E": kite.E,
        "F": kite.F, "G": kite.G, "H": kite.H, "T": tail_product,
    }
    pair_labels = []
    for a, b, key in _NINE_PAIRS:
        target = elements[key].vector
        match = [
            hp for hp in system.hybrid_pairs
            if set(hp.contexts) == {a, b} and hp.split is not None and hp.split.vector == target
        ]
        if len(match) != 1:
            raise NoSolution(f"hybrid pair split by {key} not found")
        pair_labels.append((match[0].a, match[0].b))

    proofs = []
    patterns = []
    for head in cartesian((0, 1), repeat=4):
        hits = []
        for rest in cartesian((0, 1), repeat=5):
            choice = head + rest
            labels = [pair_labels[k][c] for k, c in enumerate(choice)]
            if validate_parity_proof(system, labels):
                hits.append((choice, labels))
        if len(hits) != 1:
            raise NoSolution(f"{len(hits)} completions for selection {head}")
        choice, labels = hits[0]
        proofs.append(make_proof(system, labels))
        patterns.append(tuple(f"{k + 1}{'ab'[c]}" for k, c in enumerate(choice)))
    return NineBasisProofs(system, tuple(pair_labels), tuple(proofs), tuple(patterns))


def ensemble_numbers(projectors: ProjectorSet) -> dict[int, int]:
    """Projector id -> grouped number 1..32 used for Kite projector tables.

    Short contexts contribute four projectors each (1-16). Projectors of the
    long contexts are grouped by their eigenvalues on the first three
    members, giving eight ensembles per context (17-24 and 25-32).
    """
    out = {}
    for ctx, ids in sorted(projectors.by_context.items()):
        for k, pid in enumerate(ids):
            p = projectors.by_id(pid)
            if ctx < FE_TAIL:
                out[pid] = 4 * ctx + k + 1
            else:
                out[pid] = 17 + 8 * (ctx - FE_TAIL) + int(p.signature_string[:3], 2)
    return out
