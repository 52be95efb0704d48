"""Names for the objects of a block with n simples.

L_i simple, M_r/M_s Verma quotient (M_r when s = 0), P_j/P_k quotient of
projectives (P_{n+1} = 0), T_k = P_1/P_{k+1} tilting, and F(X) the dual.
"""

import re
from dataclasses import dataclass


class ObjectError(ValueError):
    pass


@dataclass(frozen=True)
class Simple:
    i: int

    def label(self, n=None):
        return f"L{self.i}"


@dataclass(frozen=True)
class VermaQuot:
    r: int
    s: int = 0

    def label(self, n=None):
        return f"M{self.r}" if self.s == 0 else f"M{self.r}/M{self.s}"


@dataclass(frozen=True)
class ProjQuot:
    j: int
    k: int

    def label(self, n=None):
        if n is not None and self.k == n + 1:
            return f"P{self.j}"
        return f"P{self.j}/P{self.k}"


@dataclass(frozen=True)
class Tilting:
    k: int

    def label(self, n=None):
        return f"T{self.k}"


@dataclass(frozen=True)
class Dual:
    inner: object

    def label(self, n=None):
        return f"F({self.inner.label(n)})"


def validate(n: int, x) -> None:
    if n < 1:
        raise ObjectError("n must be at least 1")
    if isinstance(x, Simple):
        if not 1 <= x.i <= n:
            raise ObjectError(f"L{x.i} needs 1 <= i <= {n}")
    elif isinstance(x, VermaQuot):
        if not 0 <= x.s < x.r <= n:
            raise ObjectError(f"M{x.r}/M{x.s} needs 0 <= s < r <= {n}")
    elif isinstance(x, ProjQuot):
        if not 1 <= x.j < x.k <= n + 1:
            raise ObjectError(f"P{x.j}/P{x.k} needs 1 <= j < k <= {n + 1}")
    elif isinstance(x, Tilting):
        if not 1 <= x.k <= n:
            raise ObjectError(f"T{x.k} needs 1 <= k <= {n}")
    elif isinstance(x, Dual):
        validate(n, x.inner)
    else:
        raise ObjectError(f"not an object reference: {x!r}")


def normalize(x):
    """Tilting -> ProjQuot, F(F(X)) -> X, F(L_i) -> L_i."""
    if isinstance(x, Tilting):
        return ProjQuot(1, x.k + 1)
    if isinstance(x, Dual):
        inner = normalize(x.inner)
        if isinstance(inner, Dual):
            return inner.inner
        if isinstance(inner, Simple):
            return inner
        return Dual(inner)
    return x


def dual(x):
    return normalize(Dual(x))


def mult(x, i: int) -> int:
    """Composition multiplicity [X : L_i]."""
    x = normalize(x)
    if isinstance(x, Dual):
        return mult(x.inner, i)
    if isinstance(x, Simple):
        return int(x.i == i)
    if isinstance(x, VermaQuot):
        return int(x.s < i <= x.r)
    if isinstance(x, ProjQuot):
        return max(x.k, i) - max(x.j, i)
    raise ObjectError(f"not an object reference: {x!r}")


def dim_vector(n: int, x) -> tuple:
    return tuple(mult(x, i) for i in range(1, n + 1))


def verma_flag(x):
    """{m: [X : M_m]} for objects with a Verma flag, else None."""
    x = normalize(x)
    if isinstance(x, ProjQuot):
        return {m: 1 for m in range(x.j, x.k)}
    if isinstance(x, VermaQuot) and x.s == 0:
        return {x.r: 1}
    if isinstance(x, Simple) and x.i == 1:
        return {1: 1}
    if isinstance(x, Dual) and isinstance(x.inner, ProjQuot) and x.inner.j == 1:
        # tilting modules are self-dual
        return verma_flag(x.inner)
    return None


def dual_verma_flag(x):
    """{m: [X : F(M_m)]} for objects with a dual Verma flag, else None."""
    x = normalize(x)
    if isinstance(x, Dual):
        return verma_flag(x.inner)
    if isinstance(x, Simple) and x.i == 1:
        return {1: 1}
    if isinstance(x, VermaQuot) and x.r == 1:
        return {1: 1}
    if isinstance(x, ProjQuot) and x.j == 1:
        return verma_flag(x)
    return None


_TOKEN = re.compile(r"^(L|M|P|T)(\d+)(?:/(M|P)(\d+))?$")


def parse(text: str, n: int | None = None):
    """Parse names like L2, M3, M3/M1, P2, P1/P3, T2, F(M2)."""
    s = text.strip().replace(" ", "")
    if s.upper().startswith("F(") and s.endswith(")"):
        return normalize(Dual(parse(s[2:-1], n)))
    m = _TOKEN.match(s.upper())
    if not m:
        raise ObjectError(f"cannot parse object name {text!r}")
    kind, a, kind2, b = m.group(1), int(m.group(2)), m.group(3), m.group(4)
    if kind == "L" and kind2 is None:
        out = Simple(a)
    elif kind == "T" and kind2 is None:
        out = Tilting(a)
    elif kind == "M" and kind2 in (None, "M"):
        out = VermaQuot(a, int(b) if b else 0)
    elif kind == "P" and kind2 in (None, "P"):
        if b is None:
            if n is None:
                raise ObjectError(f"{text!r} needs n to fix P_(n+1)")
            b = n + 1
        out = ProjQuot(a, int(b))
    else:
        raise ObjectError(f"cannot parse object name {text!r}")
    if n is not None:
        validate(n, out)
    return out


def all_objects(n: int, duals: bool = False):
    """Simples, Verma quotients and projective quotients of the block."""
    out = [Simple(i) for i in range(1, n + 1)]
    out += [VermaQuot(r, s) for r in range(1, n + 1) for s in range(r)]
    out += [ProjQuot(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 2)]
    if duals:
        out += [Dual(x) for x in out if not isinstance(x, Simple)]
    return out
