"""The quiver algebra A_n and the phi-basis of morphisms.

Vertices 1..n.  Arrows g_i: i+1 -> i and d_i: i -> i+1 (1 <= i < n).
A path is stored in applied order: ``Path(start, (a1, a2, ...))`` means
first a1, then a2.  Relations: the loop at i+1 through i equals the loop
at i+1 through i+2 (1 <= i <= n-2), and the loop at n through n-1 is zero.
"""

from dataclasses import dataclass
from itertools import product


class _Zero:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "ZERO"


ZERO = _Zero()


class QuiverError(ValueError):
    pass


def arrow_source(a):
    kind, i = a
    return i + 1 if kind == "g" else i


def arrow_target(a):
    kind, i = a
    return i if kind == "g" else i + 1


def arrows(n: int):
    return [("g", i) for i in range(1, n)] + [("d", i) for i in range(1, n)]


@dataclass(frozen=True)
class Path:
    start: int
    arrows: tuple = ()

    @property
    def end(self):
        return arrow_target(self.arrows[-1]) if self.arrows else self.start

    def then(self, a):
        return Path(self.start, self.arrows + (a,))

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e{self.start}"
        return "*".join(f"{k}{i}" for k, i in self.arrows)


def check_path(n: int, p: Path) -> None:
    if not 1 <= p.start <= n:
        raise QuiverError(f"vertex {p.start} outside 1..{n}")
    v = p.start
    for a in p.arrows:
        kind, i = a
        if kind not in ("g", "d") or not 1 <= i < n:
            raise QuiverError(f"no arrow {a} in A_{n}")
        if arrow_source(a) != v:
            raise QuiverError(f"arrow {kind}{i} does not start at vertex {v}")
        v = arrow_target(a)


def nf_reduce(n: int, p: Path, strategy: str = "leftmost"):
    """Normal form of a path, or ZERO.

    Every g_i followed by d_i (down to i and back up) is rewritten to
    d_{i+1} followed by g_{i+1}, or to zero when i = n-1.  Normal forms go
    up first and then down.
    """
    check_path(n, p)
    word = list(p.arrows)
    while True:
        spots = [k for k in range(len(word) - 1)
                 if word[k][0] == "g" and word[k + 1] == ("d", word[k][1])]
        if not spots:
            return Path(p.start, tuple(word))
        k = spots[0] if strategy == "leftmost" else spots[-1]
        i = word[k][1]
        if i == n - 1:
            return ZERO
        word[k:k + 2] = [("d", i + 1), ("g", i + 1)]


def is_normal(p: Path) -> bool:
    seen_down = False
    for kind, _ in p.arrows:
        if kind == "g":
            seen_down = True
        elif seen_down:
            return False
    return True


def nf_path(start: int, peak: int, end: int) -> Path:
    """The normal-form path start -> peak -> end."""
    if peak < max(start, end):
        raise QuiverError("peak below an endpoint")
    up = tuple(("d", i) for i in range(start, peak))
    down = tuple(("g", i) for i in range(peak - 1, end - 1, -1))
    return Path(start, up + down)


def peak_of(p: Path) -> int:
    v = top = p.start
    for a in p.arrows:
        v = arrow_target(a)
        top = max(top, v)
    return top


def normal_forms_from(n: int, start: int):
    """All nonzero normal-form paths out of ``start``, found by closing
    {e_start} under appending arrows and reducing."""
    seen = {Path(start)}
    todo = [Path(start)]
    while todo:
        p = todo.pop()
        for a in arrows(n):
            if arrow_source(a) != p.end:
                continue
            q = nf_reduce(n, p.then(a))
            if q is not ZERO and q not in seen:
                seen.add(q)
                todo.append(q)
    return sorted(seen, key=lambda q: (q.end, len(q), q.arrows))


def normal_forms(n: int, j: int, k: int):
    return [p for p in normal_forms_from(n, j) if p.end == k]


def dim_An(n: int) -> int:
    if n < 1:
        raise QuiverError("n must be at least 1")
    return sum(len(normal_forms_from(n, j)) for j in range(1, n + 1))


def relations(n: int):
    """(lhs, rhs) pairs of paths; rhs is ZERO for the monomial relation."""
    out = []
    for i in range(1, n - 1):
        out.append((Path(i + 1, (("g", i), ("d", i))), Path(i + 1, (("d", i + 1), ("g", i + 1)))))
    if n >= 2:
        out.append((Path(n, (("g", n - 1), ("d", n - 1))), ZERO))
    return out


# phi-basis ------------------------------------------------------------------

@dataclass(frozen=True)
class PhiIndex:
    """phi^(t)_{(r,s),(j,k)}: a morphism P_r/P_s -> P_j/P_k."""
    r: int
    s: int
    j: int
    k: int
    t: int

    def source(self):
        return (self.r, self.s)

    def target(self):
        return (self.j, self.k)

    def __str__(self):
        return f"phi^({self.t})_{{({self.r},{self.s}),({self.j},{self.k})}}"


def phi_valid(n: int, x: PhiIndex) -> bool:
    return (1 <= x.r < x.s <= n + 1 and 1 <= x.j < x.k <= n + 1
            and 1 <= x.t <= min(x.s - x.r, x.k - x.r, x.k - x.j))


def check_phi(n: int, x: PhiIndex) -> None:
    if not phi_valid(n, x):
        raise QuiverError(f"invalid phi index {x} for n = {n}")


def phi_basis(n: int, source=None, target=None):
    out = []
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 2)]
    for (r, s), (j, k) in product(pairs, pairs):
        if source is not None and (r, s) != tuple(source):
            continue
        if target is not None and (j, k) != tuple(target):
            continue
        for t in range(1, min(s - r, k - r, k - j) + 1):
            out.append(PhiIndex(r, s, j, k, t))
    return out


def phi_count_formula(n: int) -> int:
    return ((n + 1) ** 5 - (n + 1) ** 3) // 24


def phi_degree(x: PhiIndex) -> int:
    return 2 * (x.k - x.t) - x.r - x.j


def phi_identity(r: int, s: int) -> PhiIndex:
    return PhiIndex(r, s, r, s, s - r)


def phi_compose(outer: PhiIndex, inner: PhiIndex):
    """outer o inner, a phi index or ZERO."""
    if inner.target() != outer.source():
        raise QuiverError(f"cannot compose {outer} after {inner}")
    v = outer.t + inner.t + inner.j - inner.k
    if v <= 0:
        return ZERO
    return PhiIndex(inner.r, inner.s, outer.j, outer.k, v)


class PhiElement:
    """Finite linear combination of phi indices."""

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def basis(cls, x: PhiIndex):
        return cls({x: 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return PhiElement(out)

    def __rmul__(self, c):
        return PhiElement({k: c * v for k, v in self.terms.items()})

    def after(self, inner: "PhiElement") -> "PhiElement":
        out = {}
        for a, ca in self.terms.items():
            for b, cb in inner.terms.items():
                if b.target() != a.source():
                    continue
                c = phi_compose(a, b)
                if c is not ZERO:
                    out[c] = out.get(c, 0) + ca * cb
        return PhiElement(out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, PhiElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in sorted(self.terms.items(), key=lambda kv: str(kv[0])))


def f_plus_plus(j: int, k: int) -> PhiIndex:
    """The injection P_j/P_k -> P_{j+1}/P_{k+1} (degree 1)."""
    return PhiIndex(j, k, j + 1, k + 1, k - j)


def f_minus_dot(j: int, k: int) -> PhiIndex:
    """The injection P_j/P_k -> P_{j-1}/P_k (degree 1)."""
    return PhiIndex(j, k, j - 1, k, k - j)


def f_dot_minus(j: int, k: int) -> PhiIndex:
    """The surjection P_j/P_k -> P_j/P_{k-1} (degree 0)."""
    return PhiIndex(j, k, j, k - 1, k - j - 1)


def phi_as_word(x: PhiIndex):
    """phi^(t) written as the composite of generators f, innermost first."""
    r, s, j, k, t = x.r, x.s, x.j, x.k, x.t
    word = [f_dot_minus(r, m) for m in range(s, r + t, -1)]
    word += [f_plus_plus(r + m, r + t + m) for m in range(k - r - t)]
    word += [f_minus_dot(m, k) for m in range(k - t, j, -1)]
    return word


# the isomorphism with A_n ---------------------------------------------------

def phi_of_vertex(n: int, i: int) -> PhiIndex:
    return PhiIndex(i, n + 1, i, n + 1, n + 1 - i)


def phi_of_arrow(n: int, a) -> PhiIndex:
    kind, i = a
    if kind == "g":
        return PhiIndex(i + 1, n + 1, i, n + 1, n - i)
    return PhiIndex(i, n + 1, i + 1, n + 1, n - i)


def phi_of_path(n: int, p):
    """Image of a path; arrows compose covariantly (first arrow innermost)."""
    if p is ZERO:
        return ZERO
    check_path(n, p)
    cur = phi_of_vertex(n, p.start)
    for a in p.arrows:
        cur = phi_compose(phi_of_arrow(n, a), cur)
        if cur is ZERO:
            return ZERO
    return cur


@dataclass
class IsoReport:
    n: int
    relations_ok: bool
    injective_on_normal_forms: bool
    dims_equal: bool
    surjective: bool
    failures: list

    @property
    def ok(self):
        return self.relations_ok and self.injective_on_normal_forms and self.dims_equal and self.surjective


def iso_check_An_phi(n: int) -> IsoReport:
    failures = []
    rel_ok = True
    for lhs, rhs in relations(n):
        a, b = phi_of_path(n, lhs), phi_of_path(n, rhs)
        if a != b:
            rel_ok = False
            failures.append(("relation", str(lhs), str(rhs), a, b))
    images = {}
    inj = True
    for j in range(1, n + 1):
        for p in normal_forms_from(n, j):
            img = phi_of_path(n, p)
            if img is ZERO or not phi_valid(n, img) or img in images:
                inj = False
                failures.append(("normal form", str(p), img))
            else:
                images[img] = p
    target = [x for x in phi_basis(n) if x.s == n + 1 and x.k == n + 1]
    dims = dim_An(n) == len(target)
    surj = set(images) == set(target)
    return IsoReport(n, rel_ok, inj, dims, surj, failures)
