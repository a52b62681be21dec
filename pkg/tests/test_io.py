from __future__ import annotations

import json

import pytest

from ksparity import catalog, io
from ksparity.errors import DocumentError
from ksparity.parity import make_proof
from ksparity.proof import proof_symbol

from reference_data import STAR_EXAMPLE_PROOFS, STAR_SYSTEM_SYMBOL


@pytest.mark.parametrize("name", ["star4", "peres-mermin", "kite3", "kite16c"])
def test_round_trip(name):
    proof = catalog.get(name).proof
    text = io.dumps(io.proof_document(proof))
    back = io.loads_proof(text)
    assert back.observables == proof.observables
    assert back.signs == proof.signs
    assert str(proof_symbol(back)) == str(proof_symbol(proof))


def test_signs_are_recomputed(star):
    doc = io.proof_document(star)
    doc["signs"] = [1] * 6
    assert io.proof_from_document(doc).signs == star.signs


def test_read_from_file(tmp_path, star):
    path = tmp_path / "star.json"
    path.write_text(io.dumps(io.proof_document(star)))
    assert io.read_proof(path).observables == star.observables


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"observables": ["XI"], "contexts": [[0]]},
        {"qubits": 0, "observables": ["X"], "contexts": [[0]]},
        {"qubits": 2, "observables": "XI", "contexts": [[0]]},
        {"qubits": 2, "observables": ["XI"], "contexts": [0]},
        {"qubits": 2, "observables": ["XI"], "contexts": [[1]]},
        {"qubits": 2, "observables": ["XI"], "contexts": [[True]]},
        {"qubits": 2, "observables": ["XQ"], "contexts": [[0]]},
        {"qubits": 2, "observables": ["XI", "XII"], "contexts": [[0, 1]]},
        {"qubits": 3, "observables": ["XI"], "contexts": [[0]]},
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(DocumentError):
        io.proof_from_document(doc)


def test_bad_json_and_missing_file(tmp_path):
    with pytest.raises(DocumentError):
        io.loads_proof("{not json")
    with pytest.raises(DocumentError):
        io.read_proof(tmp_path / "missing.json")


def test_system_document(star_system):
    doc = io.system_document(star_system)
    assert len(doc["projectors"]) == 52
    assert doc["projectors"][20] == {"id": 21, "context": 1, "signature": "1001", "rank": 2}
    assert len(doc["bases"]) == 30
    assert doc["symbol"] == STAR_SYSTEM_SYMBOL
    assert len(doc["hybrid_pairs"]) == 12
    json.dumps(doc)


def test_listing_document(star_system):
    pr = make_proof(star_system, STAR_EXAMPLE_PROOFS[3].split())
    (row,) = io.listing_document([pr])
    assert row["basis_count"] == 15


def _dot_counts(text: str):
    circles = text.count("shape=circle")
    boxes = text.count("shape=box")
    bold = text.count("penwidth=3")
    return circles, boxes, bold


def test_dot_for_star(star):
    text = io.to_dot(star)
    assert _dot_counts(text) == (12, 6, 1)
    assert text.count(" -- ") == sum(c.size for c in star.contexts)
    assert text == io.to_dot(star)


def test_dot_for_kite3():
    assert _dot_counts(io.to_dot(catalog.get("kite3").proof)) == (10, 6, 1)
