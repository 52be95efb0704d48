import pytest
from hypothesis import given, settings, strategies as st

from gwablocks import linalg as la
from gwablocks import repcat as rc
from gwablocks import submodules as sm
from gwablocks.objects import ProjQuot
from gwablocks.quiver import nf_path
from gwablocks.styt import generated, yt_of_object

F2, F3 = la.PrimeField(2), la.PrimeField(3)


@given(st.integers(0, 4), st.sampled_from([2, 3]))
def test_subspace_count(d, q):
    assert len(sm.all_subspaces(d, la.PrimeField(q))) == sm.count_subspaces(d, q)


def test_frozen_subspace_counts():
    # subspaces of F_2^3: 1 + 7 + 7 + 1
    assert sm.count_subspaces(3, 2) == 16
    assert sm.count_subspaces(2, 3) == 6


def test_closed_form_counts():
    assert sm.expected_count(3, 6) == 26
    assert sm.expected_count(1, 2) == 2
    assert [sm.expected_count(1, s) for s in range(2, 6)] == [2, 4, 8, 16]


@pytest.mark.parametrize("field", [F2, F3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_bijection_small_blocks(n, field):
    for r in range(1, n + 1):
        for s in range(r + 1, n + 2):
            rep = rc.build(n, ProjQuot(r, s), field)
            subs = sm.enumerate_submodules(rep)
            assert len(subs) == sm.expected_count(r, s)
            psis = {sm.transfer_psi(rep, x) for x in subs}
            assert psis == set(sm.valid_sequences(r, s))
            for x in subs:
                assert sm.submodule_of_psi(rep, sm.transfer_psi(rep, x)) == x
                if any(x):
                    assert sm.is_indecomposable_by_socle(rep, x)


@pytest.mark.parametrize("n", [2, 3])
def test_closure_method_agrees(n):
    rep = rc.build(n, ProjQuot(1, n + 1), F2)
    assert sorted(sm.enumerate_submodules(rep)) == sorted(sm.enumerate_submodules(rep, method="closure"))


def test_large_example_under_ceiling():
    rep = rc.build(5, ProjQuot(3, 6), F2)
    assert sm.candidate_count(rep) == 40960
    assert len(sm.enumerate_submodules(rep)) == 26


def test_refusals():
    with pytest.raises(sm.ResourceRefusal):
        sm.enumerate_submodules(rc.build(2, ProjQuot(1, 3)))
    with pytest.raises(sm.ResourceRefusal):
        sm.enumerate_submodules(rc.build(4, ProjQuot(1, 5), F2), ceiling=1000)


def test_transfer_errors():
    rep = rc.build(3, ProjQuot(1, 4), F2)
    with pytest.raises(sm.TransferError):
        sm.submodule_of_psi(rep, (1, 2))
    with pytest.raises(sm.TransferError):
        sm.submodule_of_psi(rep, (4,))
    cyclic = rc.generated_submodule(rep, rc.element_from_path(rep, nf_path(1, 2, 1)))
    assert sm.transfer_psi(rep, cyclic) == (2, 1)
    with pytest.raises(sm.TransferError):
        sm.transfer_psi(rc.simple_rep(3, 1, F2), ((),) * 3)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_cells_of_path_elements(nr):
    n, r = nr
    k = n + 1
    rep = rc.build(n, ProjQuot(r, k), F2)
    diagram = yt_of_object(n, ProjQuot(r, k))
    for j in range(r, k):
        for s in range(1, j + 1):
            x = rc.element_from_path(rep, nf_path(r, j, s))
            jj, ss, row, col = sm.cell_of_element(rep, x)
            assert (jj, ss) == (j, s)
            assert diagram.cells[(row, col)] == s


def test_zero_has_no_cell():
    rep = rc.build(2, ProjQuot(1, 3), F2)
    with pytest.raises(ValueError):
        sm.cell_of_element(rep, rep.zero_element())


def test_canonical_copies_match_generated_cells():
    # the module generated by a path element has the cells reached from
    # its cell by moves left and down
    n = 4
    rep = rc.build(n, ProjQuot(1, n + 1), F2)
    diagram = yt_of_object(n, ProjQuot(1, n + 1))
    for j in range(1, n + 1):
        for s in range(1, j + 1):
            sub = sm.canonical_copy(rep, j, s)
            cell = sm.cell_of_element(rep, rc.element_from_path(rep, nf_path(1, j, s)))[2:]
            cells = generated(diagram, [cell])
            counts = [sum(diagram.cells[c] == i for c in cells) for i in range(1, n + 1)]
            assert list(rc.sub_dims(sub)) == counts
