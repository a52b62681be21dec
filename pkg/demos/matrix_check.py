"""
Cross-checking with dense matrices
==================================

The symbolic code never builds a matrix. The oracle does nothing else, so
agreement between the two is a meaningful test.
"""

# %%
import numpy as np

from ksparity import catalog
from ksparity.oracle import basis_clique_oracle, coloring_search, projector_matrix, verify_system
from ksparity.projectors import enumerate_bases, enumerate_projectors

star = catalog.get("star4").proof
projectors = enumerate_projectors(star)
system = enumerate_bases(projectors)

p49 = projector_matrix(projectors.by_id(49))
print("trace of projector 49:", np.trace(p49).real)
print("idempotent:", np.allclose(p49 @ p49, p49))

# %%
report = verify_system(system)
print("all matrix checks pass:", report.ok)
print("clique oracle agrees:", basis_clique_oracle(projectors) == {b.projector_ids for b in system.bases})

# %%
# No 0/1 coloring with one 1 per basis exists
print("coloring of the full system:", coloring_search(system))
print("coloring of two pure bases:", coloring_search(system, ["1", "2"]))
