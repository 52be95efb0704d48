"""
The algebra A_n and its Koszul dual
===================================

A_n is the path algebra of the doubled A_n quiver modulo the commuting
relations.  Its Hilbert matrix and the Ext-algebra Hilbert matrix are
inverse to each other after t -> -t.
"""

from gwablocks import blockcalc as bc
from gwablocks import quiver
from gwablocks.objects import Simple

# dimension 1^2 + ... + n^2 from reduced paths
for n in range(1, 7):
    print(n, quiver.dim_An(n), len(quiver.phi_basis(n)))

# reduced paths from vertex 1 back to itself in A_3
print([str(p) for p in quiver.normal_forms(3, 1, 1)])

n = 3
ha, he = bc.hilbert_alg(n), bc.hilbert_ext(n)
for row in ha:
    print([e.format("t") for e in row])
print()
for row in he:
    print([e.format("t") for e in row])

# the numerical criterion
print("koszul:", bc.koszul_check(n), " det H(E,t) =", bc.poly_det(he).format("t"))

# Ext^1 between simples: only neighbours are linked, in both directions
print([[bc.ext_dim(n, Simple(i), Simple(j), 1) for j in range(1, n + 1)] for i in range(1, n + 1)])
