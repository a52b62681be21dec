from __future__ import annotations

import pytest

from ksparity import catalog
from ksparity.errors import UnknownName
from ksparity.proof import is_parity_proof, validate

from reference_data import STAR_SYMBOL


@pytest.mark.parametrize("name", catalog.names())
def test_every_entry_is_a_parity_proof(name):
    entry = catalog.get(name)
    assert entry.name == name
    assert validate(entry.proof).ok
    assert is_parity_proof(entry.proof).is_proof
    assert entry.provenance


def test_star4_contexts():
    proof = catalog.get("star4").proof
    assert len(proof.observables) == 12
    assert [[proof.observables[m].letters for m in c.members] for c in proof.contexts] == [
        list(ctx) for ctx in catalog._STAR_CONTEXTS
    ]


def test_peres_mermin_entry():
    proof = catalog.get("peres-mermin").proof
    assert proof.n_qubits == 2
    assert len(proof.observables) == 9
    assert [c.size for c in proof.contexts] == [3] * 6
    assert sum(1 for s in proof.signs if s == -1) == 1


def test_kite16c():
    entry = catalog.get("kite16c")
    assert entry.n_qubits == 16
    assert max(c.size for c in entry.proof.contexts) == 7
    assert entry.kite is not None


def test_list_contents():
    rows = {r.name: r for r in catalog.list()}
    assert rows["star4"].symbol == STAR_SYMBOL
    assert rows["star4"].n_qubits == 4
    assert "kite3" in rows
    assert "kiteN:12" in rows


@pytest.mark.parametrize("bad", ["star5", "kiteN:2", "kiteN:13", "kiteN:x", ""])
def test_unknown_names(bad):
    with pytest.raises(UnknownName):
        catalog.get(bad)


def test_entries_are_deterministic():
    a, b = catalog.get("kiteN:7"), catalog.get("kiteN:7")
    assert a.proof == b.proof
