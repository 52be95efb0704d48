"""
Submodules of P_r/P_s and their sequences
=========================================

Over F_2 every submodule of a projective quotient is counted by brute
force, then read off as a strictly decreasing sequence of Verma levels.
"""

from gwablocks import linalg as la
from gwablocks import repcat, styt
from gwablocks.objects import ProjQuot
from gwablocks.submodules import enumerate_submodules, expected_count, transfer_psi

F2 = la.PrimeField(2)
n = 4
rep = repcat.build(n, ProjQuot(2, 5), F2)
print("dimension vector", rep.dims)

subs = enumerate_submodules(rep)
print(len(subs), "submodules, closed form", expected_count(2, 5))

# each nonzero one has a sequence and a tableau
for sub in subs:
    if not any(sub):
        continue
    psi = transfer_psi(rep, sub)
    print(psi, repcat.sub_dims(sub))
    print(styt.render(styt.yt_of_psi(psi)))
    print()
