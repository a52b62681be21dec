from __future__ import annotations

import numpy as np
import pytest

from ksparity import catalog
from ksparity.errors import DimensionTooLarge, SearchBoundExceeded
from ksparity.oracle import (
    basis_clique_oracle,
    check_contexts,
    coloring_search,
    materialize,
    projector_matrix,
    verify_system,
)
from ksparity.pauli import parse
from ksparity.projectors import BasisSystem, ProjectorSet, enumerate_bases, enumerate_projectors
from ksparity.proof import ObservablesProof

from reference_data import STAR_EXAMPLE_PROOFS

SMALL = [n for n in catalog.names() if catalog.get(n).n_qubits <= 4]


def test_materialize_basics():
    assert np.allclose(materialize(parse("Z")), np.diag([1, -1]))
    assert np.allclose(materialize(parse("XX")), np.fliplr(np.eye(4)))
    y = materialize(parse("Y"))
    assert np.allclose(y @ y, np.eye(2))
    assert np.allclose(materialize(parse("-Y")), -y)


def test_materialize_bound():
    with pytest.raises(DimensionTooLarge):
        materialize(parse("I" * 9))


def test_computational_basis_projector():
    proof = ObservablesProof.build(["ZI", "IZ", "ZZ"], [[0, 1, 2]])
    p = enumerate_projectors(proof).by_id(1)
    assert p.signature_string == "000"
    assert np.allclose(projector_matrix(p), np.diag([1, 0, 0, 0]))


def test_star_projector_traces(star_projectors):
    assert np.trace(projector_matrix(star_projectors.by_id(49))).real == pytest.approx(4)
    assert np.trace(projector_matrix(star_projectors.by_id(1))).real == pytest.approx(1)


def test_star_system_passes(star_system):
    report = verify_system(star_system)
    assert report.ok, report.lines()


@pytest.mark.parametrize("name", SMALL)
def test_catalog_systems_agree_with_matrices(name):
    proof = catalog.get(name).proof
    assert check_contexts(proof) == []
    projectors = enumerate_projectors(proof)
    system = enumerate_bases(projectors)
    report = verify_system(system)
    assert report.ok, report.lines()
    assert report.pairwise_checked
    assert basis_clique_oracle(projectors) == {b.projector_ids for b in system.bases}


def _replace_projector(system: BasisSystem, pid: int, bit: int) -> BasisSystem:
    items = list(system.projectors)
    p = items[pid - 1]
    sig = list(p.signature)
    sig[bit] = -sig[bit]
    items[pid - 1] = p.with_signature(sig)
    return BasisSystem(ProjectorSet(system.proof, items), system.bases, system.hybrid_pairs)


def test_flipped_signature_bit_is_reported(star_system):
    for pid, bit in [(1, 0), (1, 4), (30, 1), (50, 2)]:
        report = verify_system(_replace_projector(star_system, pid, bit))
        assert not report.ok


def test_incomplete_basis_is_reported(star_system):
    b = star_system.bases[0]
    short = b.__class__(b.label, b.kind, frozenset(sorted(b.projector_ids)[1:]), b.contexts)
    broken = BasisSystem(star_system.projectors, (short, *star_system.bases[1:]), star_system.hybrid_pairs)
    report = verify_system(broken)
    assert report.completeness_failures == [b.label]


def test_large_systems_skip_pairwise():
    proof = catalog.get("kite7c").proof
    system = enumerate_bases(enumerate_projectors(proof), method="split")
    report = verify_system(system)
    assert report.ok
    assert not report.pairwise_checked


def test_star_system_is_uncolorable(star_system):
    assert coloring_search(star_system) is None


@pytest.mark.parametrize("row", STAR_EXAMPLE_PROOFS)
def test_example_proofs_are_uncolorable(star_system, row):
    assert coloring_search(star_system, row.split()) is None


def test_single_basis_is_colorable(star_system):
    witness = coloring_search(star_system, ["7a"])
    assert witness is not None and len(witness) == 1


def test_pure_bases_alone_are_uncolorable(star_system):
    # Agreeing picks from all six contexts would value every observable.
    assert coloring_search(star_system, ["1", "2", "3", "4", "5", "6"]) is None


def test_two_pure_bases_are_colorable(star_system):
    witness = coloring_search(star_system, ["1", "2"])
    assert witness is not None
    for lab in ["1", "2"]:
        assert len(set(witness) & star_system.basis(lab).projector_ids) == 1
    a, b = witness
    assert not star_system.projectors.orthogonal(a, b)


def test_coloring_bound(star_system):
    with pytest.raises(SearchBoundExceeded):
        coloring_search(star_system, max_projectors=10)
