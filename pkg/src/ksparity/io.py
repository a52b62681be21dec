"""JSON documents for proofs, projector systems and proof listings, plus dot export.

A proof document looks like::

    {"qubits": 2,
     "observables": ["XI", "IX", "XX", ...],
     "contexts": [[0, 1, 2], ...],
     "name": "peres-mermin"}

Context entries are 0-based indices into ``observables``. Context signs are
always recomputed, so a document cannot carry inconsistent signs.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from .errors import DocumentError, KSError
from .parity import ParityProof, proof_listing
from .pauli import to_string
from .projectors import BasisSystem
from .proof import ObservablesProof, proof_symbol


def proof_from_document(doc: Any) -> ObservablesProof:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("qubits", "observables", "contexts"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    qubits, observables, contexts = doc["qubits"], doc["observables"], doc["contexts"]
    if not isinstance(qubits, int) or qubits < 1:
        raise DocumentError("'qubits' must be a positive integer")
    if not isinstance(observables, list) or not all(isinstance(o, str) for o in observables):
        raise DocumentError("'observables' must be a list of strings")
    if not isinstance(contexts, list) or not all(
        isinstance(c, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in c)
        for c in contexts
    ):
        raise DocumentError("'contexts' must be a list of index lists")
    for c in contexts:
        for i in c:
            if not 0 <= i < len(observables):
                raise DocumentError(f"context index {i} out of range")
    try:
        proof = ObservablesProof.build(observables, contexts, name=str(doc.get("name", "")))
    except (KSError, ValueError) as exc:
        raise DocumentError(str(exc)) from exc
    if proof.n_qubits != qubits:
        raise DocumentError(f"observables act on {proof.n_qubits} qubits, document says {qubits}")
    return proof


def loads_proof(text: str) -> ObservablesProof:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return proof_from_document(doc)


def read_proof(path: str | Path) -> ObservablesProof:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return loads_proof(text)


def proof_document(proof: ObservablesProof, provenance: str | None = None) -> dict:
    doc: dict[str, Any] = {
        "qubits": proof.n_qubits,
        "observables": [to_string(o) for o in proof.observables],
        "contexts": [list(c.members) for c in proof.contexts],
    }
    if proof.name:
        doc["name"] = proof.name
    if provenance:
        doc["provenance"] = provenance
    # Informational only; ignored when read back.
    doc["signs"] = [c.sign for c in proof.contexts]
    doc["symbol"] = str(proof_symbol(proof))
    return doc


def system_document(system: BasisSystem) -> dict:
    return {
        "qubits": system.projectors.n_qubits,
        "projectors": [
            {
                "id": p.id,
                "context": p.context_id,
                "signature": p.signature_string,
                "rank": p.rank,
            }
            for p in system.projectors
        ],
        "bases": [
            {"label": b.label, "kind": b.kind, "projectors": b.sorted_ids()}
            for b in system.bases
        ],
        "hybrid_pairs": [
            {
                "number": hp.number,
                "a": hp.a,
                "b": hp.b,
                "contexts": list(hp.contexts),
                "split": to_string(hp.split) if hp.split is not None else None,
            }
            for hp in system.hybrid_pairs
        ],
        "symbol": str(system.symbol),
    }


def listing_document(proofs: Sequence[ParityProof]) -> list[dict]:
    return proof_listing(proofs)


def dumps(doc: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def to_dot(proof: ObservablesProof) -> str:
    """Bipartite incidence graph: observables as circles, contexts as boxes.

    Contexts with product -I are drawn bold.
    """
    name = proof.name or "proof"
    lines = [f'graph "{name}" {{']
    for i, o in enumerate(proof.observables):
        lines.append(f'  o{i} [shape=circle, label="{to_string(o)}"];')
    for c in proof.contexts:
        style = ", style=bold, penwidth=3" if c.sign == -1 else ""
        sign = {1: "+", -1: "-"}.get(c.sign, "?")
        lines.append(f'  c{c.id} [shape=box, label="{sign}"{style}];')
    for c in proof.contexts:
        for m in c.members:
            lines.append(f"  c{c.id} -- o{m};")
    lines.append("}")
    return "\n".join(lines) + "\n"
