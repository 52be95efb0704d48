from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from gwablocks import cartan
from gwablocks.cartan import CartanPresentation, PRESETS
from gwablocks.polynomial import Poly
from gwablocks.verify import random_presentation

h = Poly.var()


def test_sl2_ztilde_closed_form():
    # sum_{i<n} (h - 2i) = n h - n(n-1)
    t = cartan.ZtildeTable(PRESETS["sl2"], 12)
    for n in range(12):
        assert t.ztilde(n) == n * h - n * (n - 1)


def test_frozen_ztilde_values():
    assert cartan.ztilde_direct(PRESETS["quadratic"], 2) == 2 * h**2 - Fraction(4, 3) * h - Fraction(2, 3)
    assert cartan.ztilde_direct(PRESETS["quantum"], 2) == 3 * h - 2
    laurent_k = CartanPresentation.laurent(2, [-1, 1], [0, 1])
    t = cartan.ZtildeTable(laurent_k, 4)
    assert t.ztilde(2) == h**2 + h - 1
    assert t.zprime(2) == 2 * h**2


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_table_matches_defining_sum(seed):
    p = random_presentation(Random(seed), unit_z1=seed % 2 == 0)
    t = cartan.ZtildeTable(p, 6)
    for n in range(7):
        assert t.ztilde(n) == cartan.ztilde_direct(p, n)
        assert t.zprime(n) == cartan.zprime_direct(p, n)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(-3, 3))
def test_numeric_values_match_symbolic(seed, c):
    p = random_presentation(Random(seed), unit_z1=seed % 2 == 0)
    if p.kind == "laurent" and c == 0:
        c = 1
    t = cartan.ZtildeTable(p, 6)
    vals = cartan.ztilde_values(p, c, 6, 1)
    fast = cartan._ztilde_values_fast(p, c, 6, 1)
    neg = cartan.ztilde_values(p, c, 6, -1)
    for m in range(1, 7):
        assert vals[m - 1] == fast[m - 1] == cartan.ztilde_eval(p, c, m, t)
        assert neg[m - 1] == cartan.ztilde_eval(p, c, -m, t)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_shift_identity_unit_z1(seed):
    p = random_presentation(Random(seed))
    t = cartan.ZtildeTable(p, 12)
    assert all(cartan.shift_identity_unit(p, m, n, t) for m in range(7) for n in range(7))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_shift_identity_general_z1(seed):
    p = random_presentation(Random(seed), unit_z1=False)
    t = cartan.ZtildeTable(p, 10)
    assert all(cartan.shift_identity_general(p, m, n, t) for m in range(5) for n in range(5))


def test_shift_identity_needs_invariant_z1():
    p = CartanPresentation.laurent(2, [-1, 1], [0, 1])
    assert not cartan.shift_identity_unit(p, 1, 1)
    assert cartan.shift_identity_general(p, 1, 1)


@pytest.mark.parametrize("c", range(6))
def test_sl2_linkage(c):
    b = cartan.discover_block(PRESETS["sl2"], c)
    assert b.values == [-c - 2, c]
    assert b.complete and b.certificate == "polynomial-root-bound"


@pytest.mark.parametrize("c, values", [(-1, [-1]), (Fraction(1, 2), [Fraction(1, 2)]), (-3, [-3, 1])])
def test_sl2_other_weights(c, values):
    assert cartan.discover_block(PRESETS["sl2"], c).values == values


def test_quadratic_block():
    p = PRESETS["quadratic"]
    b = cartan.discover_block(p, 0)
    assert b.values == [3, 1, 0]
    assert b.shifts == [3, 1, 0]
    assert cartan.verma_series(p, 0).degrees == [1, 3]
    assert cartan.verma_series(p, 0).length == 3


def test_quantum_block():
    b = cartan.discover_block(PRESETS["quantum"], 1)
    assert b.values == [2, 1]
    assert b.complete
    assert cartan.discover_block(PRESETS["quantum"], 4).size == 1


def test_block_is_order_independent():
    # every weight of a block discovers the same block
    p = PRESETS["quadratic"]
    for c in (3, 1, 0):
        assert cartan.discover_block(p, c).values == [3, 1, 0]


def test_domain_errors():
    with pytest.raises(cartan.DomainError):
        cartan.discover_block(PRESETS["quantum"], 0)
    with pytest.raises(cartan.DomainError):
        CartanPresentation.polyshift(0, 1, [1])
    with pytest.raises(cartan.DomainError):
        CartanPresentation.polyshift(1, 1, [1], [0])
    with pytest.raises(cartan.DomainError):
        cartan.discover_block(CartanPresentation.polyshift(1, 0, [0, 1]), 1)


def test_z1_must_be_a_unit_on_the_block():
    p = CartanPresentation.polyshift(1, 1, [0, 1], [-1, 1])
    with pytest.raises(cartan.NotAUnitOnBlock):
        cartan.discover_block(p, 0)
    assert cartan.discover_block(p, 2).size == 1


def test_is_free():
    assert cartan.is_free(PRESETS["sl2"], 5)
    assert not cartan.is_free(CartanPresentation.polyshift(-1, 0, [1]), 0)
    assert cartan.is_free(CartanPresentation.polyshift(-1, 0, [1]), 1) is False


def test_parse_config():
    p, extra = cartan.parse_config("# sl2\nkind = polyshift\nr=1\ngamma=-2\nz0 = 0, 1\nweight = 3\n")
    assert p == PRESETS["sl2"]
    assert extra == {"weight": "3"}
    q, _ = cartan.parse_config("kind=laurent\nq=2\nz0=-1 1\n")
    assert q == PRESETS["quantum"]
    with pytest.raises(cartan.DomainError):
        cartan.parse_config("kind=polyshift\n")
    with pytest.raises(cartan.DomainError):
        cartan.parse_config("z0 1\n")


def test_describe():
    assert PRESETS["sl2"].describe() == "theta(h) = h - 2; z0 = h; z1 = 1"
