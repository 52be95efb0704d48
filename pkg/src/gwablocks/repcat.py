"""Explicit representations of A_n: the computational oracle.

A representation assigns a space of dimension ``dims[v-1]`` to each vertex
v and a matrix to each arrow (rows = target dimension).  Modules are built
from normal-form paths, so nothing here uses the closed formulas.
"""

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import linalg as la
from .objects import Dual, ObjectError, ProjQuot, Simple, Tilting, VermaQuot, normalize, validate
from .quiver import ZERO, Path, arrow_source, arrow_target, arrows, nf_path, nf_reduce, normal_forms_from


class SearchBudgetExhausted(RuntimeError):
    """The isomorphism search ran out of budget without a certificate."""


@lru_cache(maxsize=None)
def _nf_table(n: int, start: int):
    """Normal forms out of ``start`` grouped by end vertex."""
    by_end = {v: [] for v in range(1, n + 1)}
    for p in normal_forms_from(n, start):
        by_end[p.end].append(p)
    return by_end


class QuiverRep:
    def __init__(self, n, field, dims, maps, name=None):
        self.n = n
        self.field = field
        self.dims = tuple(dims)
        self.maps = maps
        self.name = name
        self.generator = None  # optional element {v: vector}
        self.chain = None  # optional {m: subspace tuple} for P_r/P_s

    def dim(self, v):
        return self.dims[v - 1]

    def total_dim(self):
        return sum(self.dims)

    def arrow(self, a):
        return self.maps[a]

    def apply(self, a, vec):
        return la.matvec(self.maps[a], vec, self.field)

    def act(self, word, vec):
        for a in word:
            vec = self.apply(a, vec)
        return vec

    def path_matrix(self, p: Path):
        m = la.identity(self.dim(p.start), self.field)
        v = p.start
        for a in p.arrows:
            m = la.matmul(self.maps[a], m, self.field, ncols=self.dim(p.start))
            v = arrow_target(a)
        return m

    def zero_element(self):
        f = self.field
        return {v: [f(0)] * self.dim(v) for v in range(1, self.n + 1)}

    def check_relations(self) -> bool:
        f = self.field
        for i in range(1, self.n):
            lhs = self.path_matrix(Path(i + 1, (("g", i), ("d", i))))
            if i <= self.n - 2:
                rhs = self.path_matrix(Path(i + 1, (("d", i + 1), ("g", i + 1))))
            else:
                rhs = la.zeros(self.dim(i + 1), self.dim(i + 1), f)
            if lhs != rhs:
                return False
        return True

    def __repr__(self):
        return f"QuiverRep({self.name or '?'}, dims={self.dims}, field={self.field!r})"


def _zero_maps(n, dims, field):
    out = {}
    for a in arrows(n):
        out[a] = la.zeros(dims[arrow_target(a) - 1], dims[arrow_source(a) - 1], field)
    return out


def simple_rep(n, i, field=la.QQ):
    dims = [0] * n
    dims[i - 1] = 1
    rep = QuiverRep(n, field, dims, _zero_maps(n, dims, field), f"L{i}")
    rep.generator = {v: [field(1)] if v == i else [] for v in range(1, n + 1)}
    return rep


def projective_rep(n, j, field=la.QQ):
    """A_n e_j with the basis of normal-form paths out of j."""
    table = _nf_table(n, j)
    dims = [len(table[v]) for v in range(1, n + 1)]
    index = {p: (v, k) for v in table for k, p in enumerate(table[v])}
    maps = _zero_maps(n, dims, field)
    for a in arrows(n):
        src = arrow_source(a)
        for k, p in enumerate(table[src]):
            q = nf_reduce(n, p.then(a))
            if q is not ZERO:
                _, row = index[q]
                maps[a][row][k] = field(1)
    rep = QuiverRep(n, field, dims, maps, f"P{j}")
    rep.labels = table
    rep.generator = path_element(rep, Path(j))
    return rep


def path_element(rep, p: Path):
    """The basis vector of a projective rep labelled by a normal-form path."""
    out = rep.zero_element()
    q = nf_reduce(rep.n, p)
    if q is ZERO:
        return out
    k = rep.labels[q.end].index(q)
    out[q.end][k] = rep.field(1)
    return out


# subspaces and submodules -------------------------------------------------

def span(vectors, field):
    red, _ = la.rref(vectors, field)
    return tuple(tuple(r) for r in red)


def _pivots(rows):
    return [next(i for i, x in enumerate(r) if x != 0) for r in rows]


def in_subspace(vec, rows, field):
    return la.in_span(vec, [list(r) for r in rows], _pivots(rows), field)


def generated_submodule(rep, elements):
    """Smallest subrep containing the given elements ({v: vector} or a list
    of such).  Returned as a tuple of rref subspaces, one per vertex."""
    if isinstance(elements, dict):
        elements = [elements]
    f = rep.field
    spaces = {v: [] for v in range(1, rep.n + 1)}
    todo = []

    def add(v, vec):
        rows = spaces[v]
        red = span(rows + [vec], f) if rows else span([vec], f)
        if len(red) > len(rows):
            spaces[v] = [list(r) for r in red]
            todo.append((v, vec))

    for el in elements:
        for v, vec in el.items():
            if any(x != 0 for x in vec):
                add(v, list(vec))
    while todo:
        v, vec = todo.pop()
        for a in arrows(rep.n):
            if arrow_source(a) == v:
                w = rep.apply(a, vec)
                if any(x != 0 for x in w):
                    add(arrow_target(a), w)
    return tuple(tuple(tuple(r) for r in spaces[v]) for v in range(1, rep.n + 1))


def is_submodule(rep, sub) -> bool:
    for a in arrows(rep.n):
        src, tgt = arrow_source(a), arrow_target(a)
        for b in sub[src - 1]:
            if not in_subspace(rep.apply(a, list(b)), sub[tgt - 1], rep.field):
                return False
    return True


def sub_dims(sub):
    return tuple(len(s) for s in sub)


def sub_contains(big, small, field) -> bool:
    return all(in_subspace(list(b), big[v], field) for v in range(len(big)) for b in small[v])


def sub_intersect(a, b, rep):
    return tuple(tuple(tuple(r) for r in la.intersect([list(x) for x in a[v]], [list(x) for x in b[v]],
                                                         rep.dims[v], rep.field))
                 for v in range(rep.n))


def sub_sum(a, b, field):
    return tuple(span([list(x) for x in a[v]] + [list(x) for x in b[v]], field) if (a[v] or b[v]) else ()
                 for v in range(len(a)))


def subrep(rep, sub):
    """The subrep as a QuiverRep in its own coordinates, plus the inclusion."""
    f = rep.field
    bases = [[list(r) for r in sub[v]] for v in range(rep.n)]
    dims = [len(b) for b in bases]
    maps = _zero_maps(rep.n, dims, f)
    for a in arrows(rep.n):
        src, tgt = arrow_source(a), arrow_target(a)
        for k, b in enumerate(bases[src - 1]):
            img = rep.apply(a, b)
            c = la.coordinates(img, bases[tgt - 1], f)
            if c is None:
                raise ValueError("not a submodule")
            for row, x in enumerate(c):
                maps[a][row][k] = x
    out = QuiverRep(rep.n, f, dims, maps, None)
    incl = {v: la.transpose(bases[v - 1], rep.dim(v)) for v in range(1, rep.n + 1)}
    return out, incl


def quotient(rep, sub):
    """(rep/sub, projection) using the non-pivot coordinates."""
    f = rep.field
    info = []
    for v in range(1, rep.n + 1):
        rows = [list(r) for r in sub[v - 1]]
        piv = _pivots(rows)
        keep = [c for c in range(rep.dim(v)) if c not in set(piv)]
        info.append((rows, piv, keep))
    dims = [len(k) for _, _, k in info]

    def proj(v, vec):
        rows, piv, keep = info[v - 1]
        red = la.reduce_vector(vec, rows, piv, f)
        return [red[c] for c in keep]

    maps = _zero_maps(rep.n, dims, f)
    for a in arrows(rep.n):
        src, tgt = arrow_source(a), arrow_target(a)
        for k, c in enumerate(info[src - 1][2]):
            e = [f(0)] * rep.dim(src)
            e[c] = f(1)
            img = proj(tgt, rep.apply(a, e))
            for row, x in enumerate(img):
                maps[a][row][k] = x
    out = QuiverRep(rep.n, f, dims, maps, None)
    pmap = {}
    for v in range(1, rep.n + 1):
        cols = []
        for c in range(rep.dim(v)):
            e = [f(0)] * rep.dim(v)
            e[c] = f(1)
            cols.append(proj(v, e))
        pmap[v] = la.transpose(cols, dims[v - 1])
    if rep.generator is not None:
        out.generator = {v: proj(v, rep.generator[v]) for v in range(1, rep.n + 1)}
    return out, pmap


def map_sub(pmap, sub, rep_target):
    """Image of a subspace tuple under a rep map."""
    f = rep_target.field
    out = []
    for v in range(1, rep_target.n + 1):
        vecs = [la.matvec(pmap[v], list(b), f) for b in sub[v - 1]]
        vecs = [x for x in vecs if any(y != 0 for y in x)]
        out.append(span(vecs, f) if vecs else ())
    return tuple(out)


# building named objects -----------------------------------------------------

def build(n: int, x, field=la.QQ) -> QuiverRep:
    """The representation attached to an object reference."""
    validate(n, x)
    x = normalize(x)
    if isinstance(x, Simple):
        return simple_rep(n, x.i, field)
    if isinstance(x, ProjQuot):
        return _build_projquot(n, x.j, x.k, field)
    if isinstance(x, VermaQuot):
        m = _build_projquot(n, x.r, x.r + 1, field)
        if x.s > 0:
            e = m.zero_element()
            e[x.s] = [field(1)]
            out, _ = quotient(m, generated_submodule(m, e))
        else:
            out = m
        out.name = x.label(n)
        return out
    if isinstance(x, Dual):
        out = dualize(build(n, x.inner, field))
        out.name = x.label(n)
        return out
    raise ObjectError(f"cannot build {x!r}")


def _build_projquot(n, j, k, field):
    p = projective_rep(n, j, field)
    chain_p = {m: generated_submodule(p, path_element(p, nf_path(j, m, m))) for m in range(j, n + 1)}
    chain_p[n + 1] = tuple(() for _ in range(n))
    if k <= n:
        out, pmap = quotient(p, chain_p[k])
    else:
        out = p
        pmap = {v: la.identity(p.dim(v), field) for v in range(1, n + 1)}
    out.chain = {m: map_sub(pmap, chain_p[m], out) for m in range(j, k + 1)}
    out.proj_from_P = pmap
    out.ambient = (j, k)
    out.labels_P = p.labels
    out.name = ProjQuot(j, k).label(n)
    return out


def element_from_path(rep, p: Path):
    """Image in a built P_j/P_k of the normal-form path p out of j."""
    f = rep.field
    q = nf_reduce(rep.n, p)
    out = rep.zero_element()
    if q is ZERO:
        return out
    k = rep.labels_P[q.end].index(q)
    e = [f(0)] * len(rep.labels_P[q.end])
    e[k] = f(1)
    out[q.end] = la.matvec(rep.proj_from_P[q.end], e, f)
    return out


def dualize(rep: QuiverRep) -> QuiverRep:
    """The dual representation: transpose every map and swap g_i with d_i."""
    maps = {}
    for i in range(1, rep.n):
        maps[("g", i)] = la.transpose(rep.maps[("d", i)], rep.dim(i))
        maps[("d", i)] = la.transpose(rep.maps[("g", i)], rep.dim(i + 1))
    out = QuiverRep(rep.n, rep.field, rep.dims, maps, f"F({rep.name})" if rep.name else None)
    return out


# morphisms --------------------------------------------------------------------

def hom_space(x: QuiverRep, y: QuiverRep):
    """A basis of Hom(X, Y); each map is {v: matrix dimY_v x dimX_v}."""
    f = x.field
    n = x.n
    offs = {}
    total = 0
    for v in range(1, n + 1):
        offs[v] = total
        total += y.dim(v) * x.dim(v)

    def var(v, r, c):
        return offs[v] + r * x.dim(v) + c

    rows = []
    for a in arrows(n):
        s, t = arrow_source(a), arrow_target(a)
        ya, xa = y.maps[a], x.maps[a]
        # (ya f_s - f_t xa)[r][c] = 0 for r < dimY_t, c < dimX_s
        for r in range(y.dim(t)):
            for c in range(x.dim(s)):
                row = [f(0)] * total
                for m in range(y.dim(s)):
                    if ya[r][m] != 0:
                        row[var(s, m, c)] = f.norm(row[var(s, m, c)] + ya[r][m])
                for m in range(x.dim(t)):
                    if xa[m][c] != 0:
                        row[var(t, r, m)] = f.norm(row[var(t, r, m)] - xa[m][c])
                if any(e != 0 for e in row):
                    rows.append(row)
    basis = la.nullspace(rows, total, f)
    out = []
    for vec in basis:
        fmap = {}
        for v in range(1, n + 1):
            fmap[v] = [[vec[var(v, r, c)] for c in range(x.dim(v))] for r in range(y.dim(v))]
        out.append(fmap)
    return out


def hom_dim(x, y) -> int:
    return len(hom_space(x, y))


def combine(maps, coeffs, x, y):
    f = x.field
    out = {}
    for v in range(1, x.n + 1):
        m = la.zeros(y.dim(v), x.dim(v), f)
        for c, g in zip(coeffs, maps):
            if c:
                for r in range(y.dim(v)):
                    for k in range(x.dim(v)):
                        m[r][k] = f.norm(m[r][k] + c * g[v][r][k])
        out[v] = m
    return out


def is_injective(fmap, x) -> bool:
    return all(la.rank(la.transpose(fmap[v], x.dim(v)), x.field) == x.dim(v) if x.dim(v) else True
               for v in range(1, x.n + 1))


def image_sub(fmap, x, y):
    f = x.field
    out = []
    for v in range(1, x.n + 1):
        cols = la.transpose(fmap[v], x.dim(v)) if fmap[v] else []
        cols = [c for c in cols if any(e != 0 for e in c)]
        out.append(span(cols, f) if cols else ())
    return tuple(out)


def _is_iso_map(fmap, x, y):
    f = x.field
    for v in range(1, x.n + 1):
        d = x.dim(v)
        if d != y.dim(v):
            return False
        if d and la.rank(fmap[v], f) != d:
            return False
    return True


# radical, socle, top ------------------------------------------------------------

def radical(rep):
    """rad X = sum of the images of all arrows."""
    f = rep.field
    out = []
    for v in range(1, rep.n + 1):
        vecs = []
        for a in arrows(rep.n):
            if arrow_target(a) == v and rep.dim(arrow_source(a)):
                vecs += [c for c in la.transpose(rep.maps[a], rep.dim(arrow_source(a)))]
        vecs = [c for c in vecs if any(e != 0 for e in c)]
        out.append(span(vecs, f) if vecs else ())
    return tuple(out)


def socle(rep):
    """Elements killed by every arrow."""
    f = rep.field
    out = []
    for v in range(1, rep.n + 1):
        rows = []
        for a in arrows(rep.n):
            if arrow_source(a) == v:
                rows += rep.maps[a]
        basis = la.nullspace(rows, rep.dim(v), f) if rep.dim(v) else []
        out.append(span(basis, f) if basis else ())
    return tuple(out)


def radical_layers(rep):
    """Dimension vectors of rad^i X / rad^(i+1) X."""
    layers = []
    cur = rep
    while cur.total_dim():
        rad = radical(cur)
        top = tuple(cur.dim(v) - len(rad[v - 1]) for v in range(1, cur.n + 1))
        layers.append(top)
        cur, _ = subrep(cur, rad)
    return layers


def socle_layers(rep):
    return radical_layers(dualize(rep))


# isomorphism ----------------------------------------------------------------------

def is_isomorphic(x: QuiverRep, y: QuiverRep, budget: int = 200, seed: int = 0) -> bool:
    """Decide X = Y.  Returns True with a witness found, False when an
    invariant separates them, and raises SearchBudgetExhausted otherwise."""
    if x.dims != y.dims:
        return False
    if x.total_dim() == 0:
        return True
    if radical_layers(x) != radical_layers(y) or socle_layers(x) != socle_layers(y):
        return False
    hxy = hom_space(x, y)
    hxx, hyx, hyy = hom_dim(x, x), hom_dim(y, x), hom_dim(y, y)
    if len(hxy) != hxx or hyx != hyy or hxx != hyy:
        return False
    if not hxy:
        return False
    f = x.field
    rng = random.Random(seed)
    h = len(hxy)
    if f.char and f.char ** h <= budget:
        from itertools import product
        for coeffs in product(range(f.char), repeat=h):
            if any(coeffs) and _is_iso_map(combine(hxy, [f(c) for c in coeffs], x, y), x, y):
                return True
        return False  # exhaustive search: certified negative
    for _ in range(budget):
        if f.char:
            coeffs = [f(rng.randrange(f.char)) for _ in range(h)]
        else:
            coeffs = [f(rng.randint(-5, 5)) for _ in range(h)]
        if _is_iso_map(combine(hxy, coeffs, x, y), x, y):
            return True
    raise SearchBudgetExhausted(f"no isomorphism found in {budget} trials")


# projective resolutions and Ext -------------------------------------------------------

class ProjectiveSum:
    """Direct sum of indecomposable projectives A_n e_v, one per generator."""

    def __init__(self, n, gens, field):
        self.n = n
        self.gens = list(gens)
        self.field = field
        self.index = {v: [] for v in range(1, n + 1)}  # v -> [(gen, path)]
        for g, v0 in enumerate(self.gens):
            table = _nf_table(n, v0)
            for v in range(1, n + 1):
                for p in table[v]:
                    self.index[v].append((g, p))
        self.pos = {v: {key: i for i, key in enumerate(self.index[v])} for v in self.index}
        dims = [len(self.index[v]) for v in range(1, n + 1)]
        maps = _zero_maps(n, dims, field)
        for a in arrows(n):
            s = arrow_source(a)
            for k, (g, p) in enumerate(self.index[s]):
                q = nf_reduce(n, p.then(a))
                if q is not ZERO:
                    maps[a][self.pos[q.end][(g, q)]][k] = field(1)
        self.rep = QuiverRep(n, field, dims, maps, "projective sum")

    def map_to(self, z: QuiverRep, images):
        """The rep map sending generator g to the vector images[g], which
        lies in Z at the vertex of g."""
        out = {}
        for v in range(1, self.n + 1):
            cols = [z.act(p.arrows, images[g]) for g, p in self.index[v]]
            out[v] = la.transpose(cols, z.dim(v)) if cols else la.zeros(z.dim(v), 0, self.field)
        return out


def _top_generators(rep):
    """[(vertex, vector)] lifting a basis of rep / rad rep."""
    rad = radical(rep)
    out = []
    for v in range(1, rep.n + 1):
        rows = [list(r) for r in rad[v - 1]]
        for e in la.complement_basis(rows, _pivots(rows), rep.dim(v), rep.field):
            out.append((v, e))
    return out


@dataclass
class Resolution:
    terms: list  # list of ProjectiveSum, P_0, P_1, ...
    images: list  # images[l][g]: image of generator g of P_l in P_{l-1} (or X)
    complete: bool = True

    def multiplicities(self):
        return [sorted(t.gens) for t in self.terms]


def min_proj_resolution(x: QuiverRep, max_len: int = 8) -> Resolution:
    """Minimal projective resolution: P_0 is a projective cover of X and
    each P_{l+1} is a projective cover of the kernel of P_l -> P_{l-1}.

    Stops after P_{max_len}; ``complete`` records whether the kernel there
    was already zero.
    """
    f = x.field
    terms, images = [], []
    target = x  # ambient module that the next term maps into
    cur, incl = x, None  # kernel (own coordinates) and its inclusion
    while cur.total_dim():
        if len(terms) > max_len:
            return Resolution(terms, images, complete=False)
        gens = _top_generators(cur)
        ps = ProjectiveSum(x.n, [v for v, _ in gens], f)
        imgs = [vec if incl is None else la.matvec(incl[v], vec, f) for v, vec in gens]
        terms.append(ps)
        images.append(imgs)
        pi = ps.map_to(target, imgs)
        ker = []
        for v in range(1, x.n + 1):
            basis = la.nullspace(pi[v], ps.rep.dim(v), f) if ps.rep.dim(v) else []
            ker.append(span(basis, f) if basis else ())
        cur, incl = subrep(ps.rep, tuple(ker))
        target = ps.rep
    return Resolution(terms, images)


def ext_dims(x: QuiverRep, y: QuiverRep, max_degree: int = 3, resolution: Resolution | None = None):
    """[dim Ext^l(X, Y) for l = 0..max_degree] via a minimal resolution of X."""
    f = x.field
    res = resolution or min_proj_resolution(x, max_len=max_degree + 1)
    terms = res.terms
    if not res.complete and len(terms) < max_degree + 2:
        raise ValueError("resolution too short for the requested degree")
    ymats = {}

    def ymat(p):
        if p not in ymats:
            ymats[p] = y.path_matrix(p)
        return ymats[p]

    def cdim(l):
        if l >= len(terms):
            return 0
        return sum(y.dim(v) for v in terms[l].gens)

    def delta(l):
        # C^l -> C^{l+1}
        if l + 1 >= len(terms):
            return None
        src, tgt = terms[l], terms[l + 1]
        coff = []
        acc = 0
        for v in src.gens:
            coff.append(acc)
            acc += y.dim(v)
        rows = []
        for g2, v2 in enumerate(tgt.gens):
            z = res.images[l + 1][g2]  # vector in src.rep at vertex v2
            block = [[f(0)] * acc for _ in range(y.dim(v2))]
            for coef, (h, p) in zip(z, src.index[v2]):
                if coef == 0:
                    continue
                m = ymat(p)
                for r in range(y.dim(v2)):
                    for c in range(y.dim(p.start)):
                        if m[r][c] != 0:
                            block[r][coff[h] + c] = f.norm(block[r][coff[h] + c] + coef * m[r][c])
            rows += block
        return rows

    ranks = {}

    def rank_delta(l):
        if l < 0:
            return 0
        if l not in ranks:
            d = delta(l)
            ranks[l] = la.rank(d, f) if d else 0
        return ranks[l]

    return [cdim(l) - rank_delta(l) - rank_delta(l - 1) for l in range(max_degree + 1)]


def ext_dim_oracle(n: int, x, y, l: int, field=la.QQ) -> int:
    return ext_dims(build(n, x, field), build(n, y, field), max_degree=l)[l]
