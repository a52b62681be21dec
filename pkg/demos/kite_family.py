"""
Kites for any number of qubits
==============================

A Kite is fixed by one negative commuting set (G, H, tail). The wingtips
swap the first letters of G and H, and the four body observables follow
from linear algebra over GF(2).
"""

# %%
from ksparity.kite import all_solutions, assemble, compressed_tail, nine_basis_proofs, standard_tail
from ksparity.proof import check_critical, proof_symbol

for n in range(3, 9):
    kite = assemble(standard_tail(n))
    report = check_critical(kite.proof)
    print(n, proof_symbol(kite.proof), "critical" if report else "not critical")

# %%
# The body is not unique: every solution works, the first is canonical
sols = all_solutions(standard_tail(3))
print(len(sols), "body solutions for 3 qubits")
for s in sols[:4]:
    print(" ".join(str(p) for p in (s.A, s.B, s.C, s.D)))

# %%
# Economical Kites have much shorter long contexts
for name in ("kite7", "kite11", "kite16"):
    proof = assemble(compressed_tail(name)).proof
    print(name, proof.n_qubits, "qubits, longest context", max(c.size for c in proof.contexts))

# %%
# Every Kite carries the same 16 proofs built from nine bases
nb = nine_basis_proofs(assemble(standard_tail(4)))
for pattern, proof in zip(nb.patterns, nb.proofs):
    print(" ".join(pattern), "->", proof)
