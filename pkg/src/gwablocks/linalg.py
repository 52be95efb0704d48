"""Exact linear algebra over Q and small prime fields.

Matrices are lists of rows.  Vectors are lists.  Elements of Q are
``Fraction``; elements of F_p are plain ints in ``range(p)``.
"""

from fractions import Fraction


class RationalField:
    name = "Q"
    char = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def norm(self, x):
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def elements(self):
        raise ValueError("Q is infinite")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"F{p}"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x):
        return x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_name(name: str):
    name = name.strip().upper()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise ValueError(f"unknown field {name!r}")


def zeros(rows, cols, field=QQ):
    z = field(0)
    return [[z] * cols for _ in range(rows)]


def identity(n, field=QQ):
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field(1)
    return m


def transpose(m, cols=None):
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b, field=QQ, ncols=None):
    """Product of a (p x q) and b (q x r).  Pass ncols=r when q == 0."""
    if b:
        ncols = len(b[0])
    elif ncols is None:
        raise ValueError("ncols is required when the inner dimension is 0")
    bt = transpose(b, ncols)
    z = field(0)
    return [[field.norm(sum((x * y for x, y in zip(row, col)), z)) for col in bt] for row in a]


def matvec(a, v, field=QQ):
    return [field.norm(sum((x * y for x, y in zip(row, v)), field(0))) for row in a]


def rref(rows, field=QQ):
    """Return (reduced rows, pivot columns).  Zero rows are dropped."""
    m = [[field(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.norm(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [field.norm(x - f * y) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, field=QQ):
    return len(rref(rows, field)[1])


def nullspace(a, ncols, field=QQ):
    """Basis of {x : a x = 0} as a list of vectors of length ncols."""
    red, piv = rref(a, field) if a else ([], [])
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [field(0)] * ncols
        v[f] = field(1)
        for row, p in zip(red, piv):
            v[p] = field.norm(-row[f])
        basis.append(v)
    return basis


def reduce_vector(v, red, piv, field=QQ):
    """Reduce v modulo the row space given in rref form."""
    v = list(v)
    for row, p in zip(red, piv):
        if v[p] != 0:
            f = v[p]
            v = [field.norm(x - f * y) for x, y in zip(v, row)]
    return v


def in_span(v, red, piv, field=QQ):
    return all(x == 0 for x in reduce_vector(v, red, piv, field))


def solve(a, b, ncols, field=QQ):
    """One solution x of a x = b, or None."""
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, piv = rref(aug, field)
    if ncols in piv:
        return None
    x = [field(0)] * ncols
    for row, p in zip(red, piv):
        x[p] = row[ncols]
    return x


def coordinates(v, basis, field=QQ):
    """Coordinates of v in the given (independent) basis, or None."""
    if not basis:
        return [] if all(x == 0 for x in v) else None
    return solve(transpose(basis), v, len(basis), field)


def complement_basis(red, piv, dim, field=QQ):
    """Standard vectors spanning a complement of an rref row space."""
    ps = set(piv)
    out = []
    for c in range(dim):
        if c not in ps:
            e = [field(0)] * dim
            e[c] = field(1)
            out.append(e)
    return out


def intersect(a, b, dim, field=QQ):
    """Intersection of two row spaces (lists of spanning vectors)."""
    if not a or not b:
        return []
    # x in span(a) ∩ span(b): solve sum s_i a_i - sum t_j b_j = 0
    cols = [list(v) for v in a] + [[field.norm(-x) for x in v] for v in b]
    sol = nullspace(transpose(cols), len(cols), field)
    out = []
    for s in sol:
        v = [field(0)] * dim
        for coef, vec in zip(s[: len(a)], a):
            if coef != 0:
                v = [field.norm(x + coef * y) for x, y in zip(v, vec)]
        out.append(v)
    red, _ = rref(out, field)
    return red
