"""
Tableaux for block objects
==========================

Objects of a block draw as labelled sub-diagrams of the staircase YT_k.
Shifts that respect labels give maps; edge-sharing placements give
extensions.
"""

from gwablocks import blockcalc as bc
from gwablocks import styt
from gwablocks.objects import ProjQuot, Simple, parse

print(styt.render(styt.yt_of_psi((5, 3, 2))))
print()
print(styt.render(styt.skew((6, 4, 3, 2), (4, 3))))
print()

n = 4
for name in ("T3", "M3", "P2/P4", "F(P2/P4)"):
    x = parse(name, n)
    print(name)
    print(styt.render(styt.yt_of_object(n, x)))
    print()

# maps between projective quotients, with their distances
a, b = styt.yt_of_object(n, ProjQuot(1, 3)), styt.yt_of_object(n, ProjQuot(2, 4))
for m in styt.enumerate_maps(a, b):
    print(m.shift, m.kind(a, b), styt.manhattan_degree(m, a, b))

# simples glue only to their neighbours
for j in range(1, n + 1):
    print(1, j, styt.count_extensions(styt.yt_of_object(n, Simple(1)), styt.yt_of_object(n, Simple(j))))

# Ext^1(P1/P3, P2/P4) = 1 in the block, yet the two diagrams overlap in
# YT_3 and cannot be placed side by side
print("tableau extensions", styt.count_extensions(a, b), "vs", bc.ext_dim(n, ProjQuot(1, 3), ProjQuot(2, 4), 1))
