import pytest
from hypothesis import given, settings, strategies as st

from gwablocks import blockcalc as bc
from gwablocks import linalg as la
from gwablocks import repcat as rc
from gwablocks.objects import Dual, ProjQuot, Simple, Tilting, VermaQuot, all_objects, dim_vector
from gwablocks.quiver import nf_path

F2, F3 = la.PrimeField(2), la.PrimeField(3)


@pytest.mark.parametrize("n", range(1, 5))
def test_built_modules_satisfy_relations(n):
    for x in all_objects(n, duals=True):
        rep = rc.build(n, x)
        assert rep.check_relations(), x
        assert tuple(rep.dims) == dim_vector(n, x)


def test_projective_dimensions():
    # dim A e_j = sum_k (n + 1 - max(j, k))
    for n in range(1, 6):
        for j in range(1, n + 1):
            assert rc.projective_rep(n, j).total_dim() == sum(n + 1 - max(j, k) for k in range(1, n + 1))


@pytest.mark.parametrize("n", range(1, 5))
def test_vermas_are_uniserial(n):
    for r in range(1, n + 1):
        layers = rc.radical_layers(rc.build(n, VermaQuot(r)))
        assert layers == [tuple(int(v == i) for v in range(1, n + 1)) for i in range(r, 0, -1)]


def test_socle_of_projective_quotient():
    rep = rc.build(4, ProjQuot(2, 4))
    assert [len(s) for s in rc.socle(rep)] == [1, 0, 0, 0]
    assert [len(s) for s in rc.radical(rep)] == [2, 1, 1, 0]


@pytest.mark.parametrize("n, x, y, dims", [
    (2, Simple(2), Simple(2), [1, 0, 1, 0]),
    (2, Simple(1), Simple(1), [1, 0, 0, 0]),
    (3, VermaQuot(1), VermaQuot(2), [1, 1, 0, 0]),
    (3, ProjQuot(1, 3), ProjQuot(2, 4), [2, 1, 0, 0]),
    (4, ProjQuot(1, 3), ProjQuot(3, 5), [2, 2, 0, 0]),
    (3, Simple(3), Simple(3), [1, 0, 1, 0]),
])
def test_frozen_oracle_values(n, x, y, dims):
    assert rc.ext_dims(rc.build(n, x), rc.build(n, y), 3) == dims


def test_resolution_of_top_simple():
    res = rc.min_proj_resolution(rc.build(3, Simple(3)))
    assert res.complete and res.multiplicities() == [[3], [2], [3]]
    short = rc.min_proj_resolution(rc.build(3, Simple(3)), max_len=1)
    assert not short.complete
    with pytest.raises(ValueError):
        rc.ext_dims(rc.build(3, Simple(3)), rc.build(3, Simple(3)), 3, short)


@st.composite
def small_pairs(draw):
    n = draw(st.integers(1, 3))
    objs = all_objects(n, duals=True)
    return n, draw(st.sampled_from(objs)), draw(st.sampled_from(objs))


@settings(max_examples=40, deadline=None)
@given(small_pairs())
def test_oracle_independent_of_characteristic(p):
    # these modules are defined over Z with 0/1 structure constants
    n, x, y = p
    assert rc.ext_dims(rc.build(n, x), rc.build(n, y), 2) == rc.ext_dims(rc.build(n, x, F3), rc.build(n, y, F3), 2)


@settings(max_examples=40, deadline=None)
@given(small_pairs())
def test_oracle_matches_supported_formulas(p):
    n, x, y = p
    got = rc.ext_dims(rc.build(n, x), rc.build(n, y), 3)
    for l in range(4):
        v = bc.ext_dim(n, x, y, l)
        if v is not bc.UNSUPPORTED:
            assert v == got[l]


@settings(max_examples=40, deadline=None)
@given(small_pairs())
def test_hom_space_vs_resolution(p):
    n, x, y = p
    assert rc.hom_dim(rc.build(n, x), rc.build(n, y)) == rc.ext_dims(rc.build(n, x), rc.build(n, y), 0)[0]


@settings(max_examples=30, deadline=None)
@given(small_pairs())
def test_dualize(p):
    n, x, _ = p
    rep = rc.build(n, x)
    twice = rc.dualize(rc.dualize(rep))
    assert twice.dims == rep.dims and twice.maps == rep.maps
    assert rc.is_isomorphic(rc.dualize(rep), rc.build(n, Dual(x)))


def test_isomorphism_decisions():
    n = 3
    assert rc.is_isomorphic(rc.build(n, Tilting(2)), rc.dualize(rc.build(n, Tilting(2))))
    assert not rc.is_isomorphic(rc.build(n, VermaQuot(2)), rc.build(n, Dual(VermaQuot(2))))
    assert not rc.is_isomorphic(rc.build(n, Simple(1)), rc.build(n, Simple(2)))
    assert rc.is_isomorphic(rc.build(n, ProjQuot(2, 3), F2), rc.build(n, VermaQuot(2), F2))


def test_submodule_helpers():
    rep = rc.build(3, ProjQuot(1, 4))
    gen = rc.generated_submodule(rep, rc.element_from_path(rep, nf_path(1, 2, 2)))
    assert rc.is_submodule(rep, gen)
    sub, inc = rc.subrep(rep, gen)
    quo, proj = rc.quotient(rep, gen)
    assert [a + b for a, b in zip(sub.dims, quo.dims)] == list(rep.dims)
    assert sub.check_relations() and quo.check_relations()
    zero = tuple(() for _ in range(3))
    assert rc.sub_contains(gen, zero, rep.field)
    assert rc.sub_sum(gen, zero, rep.field) == gen
    assert rc.sub_intersect(gen, zero, rep) == zero
