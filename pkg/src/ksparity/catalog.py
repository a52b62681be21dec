"""Named, ready-made proofs used by the tests and the command line."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import UnknownName
from .kite import KiteProof, assemble, compressed_tail, standard_tail
from .proof import ObservablesProof, proof_symbol

_STAR_CONTEXTS = [
    ["ZZZZ", "ZZXX", "XXII", "XIZX", "IXXZ"],
    ["ZZZZ", "ZZII", "IIZI", "IIIZ"],
    ["ZZXX", "ZZII", "IIXI", "IIIX"],
    ["XIZX", "IIZI", "XIII", "IIIX"],
    ["IXXZ", "IIIZ", "IXII", "IIXI"],
    ["XXII", "XIII", "IXII"],
]

_PERES_MERMIN_CONTEXTS = [
    ["XI", "IX", "XX"],
    ["IZ", "ZI", "ZZ"],
    ["XZ", "ZX", "YY"],
    ["XI", "IZ", "XZ"],
    ["IX", "ZI", "ZX"],
    ["XX", "ZZ", "YY"],
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    proof: ObservablesProof
    provenance: str
    kite: KiteProof | None = None

    @property
    def n_qubits(self) -> int:
        return self.proof.n_qubits

    @property
    def symbol(self) -> str:
        return str(proof_symbol(self.proof))


def from_context_strings(contexts: list[list[str]], name: str = "") -> ObservablesProof:
    """Build a proof from contexts of letter strings, numbering observables on first use."""
    observables: list[str] = []
    for ctx in contexts:
        for o in ctx:
            if o not in observables:
                observables.append(o)
    ids = [[observables.index(o) for o in ctx] for ctx in contexts]
    return ObservablesProof.build(observables, ids, name=name)


def _kite_entry(name: str, spec, provenance: str) -> CatalogEntry:
    kite = assemble(spec, name=name)
    return CatalogEntry(name, kite.proof, provenance, kite)


_FIXED = {
    "star4": lambda: CatalogEntry(
        "star4",
        from_context_strings(_STAR_CONTEXTS, "star4"),
        "4-qubit Star: six contexts, transcribed",
    ),
    "peres-mermin": lambda: CatalogEntry(
        "peres-mermin",
        from_context_strings(_PERES_MERMIN_CONTEXTS, "peres-mermin"),
        "2-qubit Peres-Mermin square, standard rows and columns",
    ),
    "kite3": lambda: _kite_entry("kite3", standard_tail(3), "Kite, odd-qubit pattern, N=3"),
    "kite5": lambda: _kite_entry("kite5", standard_tail(5), "Kite, odd-qubit pattern, N=5"),
    "kite4": lambda: _kite_entry("kite4", standard_tail(4), "Kite, even-qubit pattern, N=4"),
    "kite6": lambda: _kite_entry("kite6", standard_tail(6), "Kite, even-qubit pattern, N=6"),
    "kite7c": lambda: _kite_entry("kite7c", compressed_tail("kite7"), "economical 7-qubit Kite"),
    "kite11c": lambda: _kite_entry("kite11c", compressed_tail("kite11"), "economical 11-qubit Kite"),
    "kite16c": lambda: _kite_entry("kite16c", compressed_tail("kite16"), "economical 16-qubit Kite"),
}

KITE_N_RANGE = range(3, 13)


def names() -> list[str]:
    """Fixed entry names followed by the generated ``kiteN:<k>`` entries."""
    return [*_FIXED, *(f"kiteN:{k}" for k in KITE_N_RANGE)]


def get(name: str) -> CatalogEntry:
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"kiteN:(\d+)", name)
    if m and int(m.group(1)) in KITE_N_RANGE:
        k = int(m.group(1))
        kind = "odd" if k % 2 else "even"
        return _kite_entry(name, standard_tail(k), f"Kite, {kind}-qubit pattern, N={k}")
    raise UnknownName(name)


@dataclass(frozen=True)
class CatalogRow:
    name: str
    n_qubits: int
    symbol: str
    provenance: str


def list_entries() -> list[CatalogRow]:
    rows = []
    for name in names():
        e = get(name)
        rows.append(CatalogRow(name, e.n_qubits, e.symbol, e.provenance))
    return rows


list = list_entries  # noqa: A001
