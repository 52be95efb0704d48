"""
Finding blocks from Cartan data
===============================

A weight is one evaluation value of the generator h of H.  Walking the
theta-orbit and watching where the z-tilde polynomials vanish recovers the
block it belongs to.
"""

from fractions import Fraction

from gwablocks import cartan

# the sl2 presentation: theta(h) = h - 2, z0 = h
sl2 = cartan.PRESETS["sl2"]
print(sl2.describe())

# the first few z-tilde polynomials have a closed form n*h - n*(n-1)
for n in range(1, 5):
    print(n, cartan.ztilde_direct(sl2, n).format("h"))

# linkage c <-> -c-2 for integral dominant c
for c in range(6):
    b = cartan.discover_block(sl2, c)
    print(f"c = {c}: block {[str(v) for v in b.values]}")

# a presentation with a three-element block
quad = cartan.PRESETS["quadratic"]
b = cartan.discover_block(quad, 0)
print(quad.describe())
print("weights", [str(v) for v in b.values], "shifts", b.shifts, "certificate", b.certificate)
print("Verma singular degrees", cartan.verma_series(quad, 0, b.bound).degrees)

# a generic weight sits alone
print("h = 1/2 ->", cartan.discover_block(sl2, Fraction(1, 2)).size)
