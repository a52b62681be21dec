"""
The 4-qubit Star, from observables to parity proofs
===================================================

Twelve observables in six commuting sets, each observable in two sets and
one set multiplying to -I. That alone rules out a noncontextual +-1
valuation. Below we turn the same structure into projectors and bases and
count the projector-based parity proofs it contains.
"""

# %%
# The observables proof
from ksparity import catalog
from ksparity.proof import assignment_search, is_parity_proof, proof_symbol

star = catalog.get("star4").proof
for ctx in star.contexts:
    members = " ".join(o.letters for o in star.members(ctx))
    print(f"{'+' if ctx.sign > 0 else '-'}I  {members}")
print("symbol:", proof_symbol(star).pretty())
print("parity proof:", bool(is_parity_proof(star)))
print("valuation:", assignment_search(star))

# %%
# Projectors: one per consistent eigenvalue signature of each context
from ksparity.projectors import enumerate_bases, enumerate_projectors

projectors = enumerate_projectors(star)
print(len(projectors), "projectors")
for ctx, ids in projectors.by_context.items():
    print(f"context {ctx}: {ids[0]}-{ids[-1]}, rank {projectors.by_id(ids[0]).rank}")

# %%
# Bases: pure ones per context, hybrids from pairs of contexts
system = enumerate_bases(projectors)
print(len(system.pure_bases), "pure,", len(system.hybrid_bases), "hybrid")
for hp in system.hybrid_pairs[:3]:
    print(hp.a, system.basis(hp.a).sorted_ids(), "| split on", hp.split)
print("system symbol:", system.symbol.pretty())

# %%
# Parity proofs are the odd vectors of a GF(2) nullspace
from ksparity.parity import classify, count_parity_proofs, enumerate_parity_proofs

print("parity proofs:", count_parity_proofs(system))
for row in classify(system):
    print(f"{row.count:>4}  {row.projector_count}-{row.basis_count}  {row.symbol}")

first = next(enumerate_parity_proofs(system))
print("first proof:", first)
