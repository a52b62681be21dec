"""
Proof documents and diagrams
============================

Proofs travel as small JSON documents. Context signs are recomputed on
load, and any proof can be drawn as a bipartite dot graph.
"""

# %%
from ksparity import io
from ksparity.proof import is_parity_proof, proof_symbol

document = {
    "qubits": 2,
    "name": "square",
    "observables": ["XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"],
    "contexts": [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7], [2, 5, 8]],
}
square = io.proof_from_document(document)
print("signs:", square.signs)
print("symbol:", proof_symbol(square), "| parity proof:", bool(is_parity_proof(square)))

# %%
print(io.to_dot(square))
