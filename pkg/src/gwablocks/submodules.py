"""Submodule lattices of P_r/P_s over finite fields and the transfer map.

A submodule is a tuple of rref subspaces, one per vertex (see repcat).
"""

from itertools import combinations, product
from math import comb, prod

from . import linalg as la
from .objects import ProjQuot
from .quiver import Path, arrow_source, arrow_target, arrows, nf_path
from .repcat import (build, element_from_path, generated_submodule, in_subspace, is_submodule, quotient,
                     socle, span, sub_contains, sub_dims, sub_intersect, sub_sum, subrep)


class ResourceRefusal(RuntimeError):
    """The requested enumeration exceeds the configured ceiling."""


DEFAULT_CEILING = 10**7


def count_subspaces(d: int, q: int) -> int:
    """Number of subspaces of F_q^d (sum of Gaussian binomials)."""
    total = 0
    for k in range(d + 1):
        num = den = 1
        for i in range(k):
            num *= q ** (d - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


def all_subspaces(d: int, field):
    """Every subspace of F_p^d in rref form, enumerated by pivot sets."""
    p = field.char
    out = []
    for k in range(d + 1):
        for piv in combinations(range(d), k):
            free = [(row, c) for row, pc in enumerate(piv) for c in range(pc + 1, d) if c not in piv]
            for vals in product(range(p), repeat=len(free)):
                rows = [[0] * d for _ in range(k)]
                for row, pc in enumerate(piv):
                    rows[row][pc] = 1
                for (row, c), x in zip(free, vals):
                    rows[row][c] = x
                out.append(tuple(tuple(r) for r in rows))
    return out


def candidate_count(rep) -> int:
    return prod(count_subspaces(d, rep.field.char) for d in rep.dims)


def enumerate_submodules(rep, ceiling: int = DEFAULT_CEILING, method: str = "tuples"):
    """All submodules of a representation over a finite field.

    ``tuples`` runs over every tuple of per-vertex subspaces (guarded by
    ``ceiling``); ``closure`` grows submodules by adding cyclic ones.
    """
    f = rep.field
    if not f.char:
        raise ResourceRefusal("submodule enumeration needs a finite field")
    if method == "closure":
        return _enumerate_by_closure(rep, ceiling)
    count = candidate_count(rep)
    if count > ceiling:
        raise ResourceRefusal(f"{count} candidate subspace tuples exceed the ceiling {ceiling}")
    spaces = [all_subspaces(d, f) for d in rep.dims]
    out = []
    for combo in product(*spaces):
        if is_submodule(rep, combo):
            out.append(combo)
    return out


def _enumerate_by_closure(rep, ceiling):
    f = rep.field
    p = f.char
    vectors = {}
    for v in range(1, rep.n + 1):
        vectors[v] = [list(t) for t in product(range(p), repeat=rep.dim(v)) if any(t)]
    total = sum(len(x) for x in vectors.values())
    if total > ceiling:
        raise ResourceRefusal(f"{total} vectors exceed the ceiling {ceiling}")
    zero = tuple(() for _ in range(rep.n))
    seen = {zero}
    todo = [zero]
    while todo:
        sub = todo.pop()
        for v in range(1, rep.n + 1):
            for vec in vectors[v]:
                if in_subspace(vec, sub[v - 1], f):
                    continue
                gen = generated_submodule(rep, {v: vec})
                new = sub_sum(sub, gen, f)
                if new not in seen:
                    seen.add(new)
                    todo.append(new)
    return sorted(seen, key=lambda s: (sub_dims(s), s))


def expected_count(r: int, s: int) -> int:
    """Number of submodules of P_r/P_s."""
    return sum(comb(s - 1, l) for l in range(s - r + 1))


def submodule_count(n: int, r: int, s: int, field, ceiling: int = DEFAULT_CEILING, method: str = "tuples"):
    rep = build(n, ProjQuot(r, s), field)
    return len(enumerate_submodules(rep, ceiling, method))


class TransferError(ValueError):
    pass


def transfer_psi(rep, sub):
    """The decreasing sequence (m_1, ..., m_l) of a submodule of P_r/P_s.

    Intersecting with the chain P_j/P_s gives subquotients inside M_j;
    m_i is the Verma index of the subquotient in M_{s-i}.
    """
    if rep.chain is None:
        raise TransferError("the ambient module carries no projective chain")
    r, s = rep.ambient
    out = []
    prev = sub_intersect(sub, rep.chain[s], rep)
    done = False
    for j in range(s - 1, r - 1, -1):
        cur = sub_intersect(sub, rep.chain[j], rep)
        diff = [a - b for a, b in zip(sub_dims(cur), sub_dims(prev))]
        m = sum(diff)
        if diff != [1] * m + [0] * (rep.n - m):
            raise TransferError(f"layer {j} subquotient has dimension vector {diff}, not a Verma module")
        if m:
            if done:
                raise TransferError("nonzero layer above a zero layer")
            out.append(m)
        else:
            done = True
        prev = cur
    if any(a <= b for a, b in zip(out, out[1:])):
        raise TransferError(f"sequence {out} is not strictly decreasing")
    return tuple(out)


def submodule_of_psi(rep, psi):
    """The submodule of P_r/P_s with transfer sequence psi, built as the sum
    of the cyclic submodules generated by the paths r -> s-i -> m_i."""
    r, s = rep.ambient
    psi = tuple(psi)
    if len(psi) > s - r or any(a <= b for a, b in zip(psi, psi[1:])) or (psi and not 1 <= psi[-1] <= psi[0] <= s - 1):
        raise TransferError(f"{psi} is not a valid sequence for P{r}/P{s}")
    els = []
    for i, m in enumerate(psi, 1):
        j = s - i
        if m > j:
            raise TransferError(f"entry {m} exceeds the Verma index {j} of its layer")
        els.append(element_from_path(rep, nf_path(r, j, m)))
    return generated_submodule(rep, els) if els else tuple(() for _ in range(rep.n))


def valid_sequences(r: int, s: int):
    out = []
    for l in range(s - r + 1):
        for c in combinations(range(s - 1, 0, -1), l):
            out.append(tuple(c))
    return out


def is_indecomposable_by_socle(rep, sub) -> bool:
    """Nonzero and with a simple socle, which forces indecomposability."""
    if not any(sub):
        return False
    s, _ = subrep(rep, sub)
    return sum(len(x) for x in socle(s)) == 1


def cell_of_element(rep, x):
    """Locate a nonzero element x of P_r/P_k in YT(P_r/P_k).

    Returns (j, s, row, col): x lies in P_j/P_k but not P_{j+1}/P_k, its
    image in M_j generates M_s, and the cell sits j-r steps left of and j-s
    steps below the generating cell (coordinates with the top-left cell
    at (1, 1)).
    """
    r, k = rep.ambient
    f = rep.field
    if all(all(e == 0 for e in vec) for vec in x.values()):
        raise ValueError("the zero element has no cell")

    def inside(sub):
        return all(in_subspace(list(x[v]), sub[v - 1], f) for v in range(1, rep.n + 1))

    j = max(m for m in range(r, k) if inside(rep.chain[m]))
    below = rep.chain[j + 1]
    s = max(v for v in range(1, rep.n + 1) if not in_subspace(list(x[v]), below[v - 1], f))
    return j, s, 1 + (j - s), k - j


def canonical_copy(rep, j, s):
    """The submodule generated by the path r -> j -> s inside P_r/P_k."""
    r, _ = rep.ambient
    return generated_submodule(rep, element_from_path(rep, nf_path(r, j, s)))


def cyclic_submodule(rep, x):
    return generated_submodule(rep, x)


def embed_image(source, target, seed: int = 0, trials: int = 50):
    """Image of some injective map source -> target, or None."""
    import random
    from .repcat import combine, hom_space, image_sub, is_injective

    if source.total_dim() == 0:
        return tuple(() for _ in range(target.n))
    hs = hom_space(source, target)
    if not hs:
        return None
    f = source.field
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [f(rng.randint(-4, 4)) if not f.char else f(rng.randrange(f.char)) for _ in hs]
        m = combine(hs, coeffs, source, target)
        if is_injective(m, source):
            return image_sub(m, source, target)
    return None
