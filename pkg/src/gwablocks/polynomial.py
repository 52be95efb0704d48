"""Sparse univariate (Laurent) polynomials with exact coefficients."""

from fractions import Fraction


def _clean(coeffs):
    return {e: c for e, c in coeffs.items() if c != 0}


class Poly:
    """Polynomial stored as {exponent: coefficient}.  Negative exponents
    are allowed, which makes Laurent polynomials the same type."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = {i: c for i, c in enumerate(coeffs)}
        self.coeffs = _clean({int(e): c for e, c in coeffs.items()})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def var(cls):
        return cls({1: 1})

    @classmethod
    def from_list(cls, coeffs, low=0):
        """Coefficients in ascending order starting at exponent ``low``."""
        return cls({low + i: Fraction(c) for i, c in enumerate(coeffs)})

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return max(self.coeffs) if self.coeffs else None

    def low_degree(self):
        return min(self.coeffs) if self.coeffs else None

    def is_polynomial(self):
        return all(e >= 0 for e in self.coeffs)

    def is_constant(self):
        return all(e == 0 for e in self.coeffs)

    def coeff(self, e):
        return self.coeffs.get(e, 0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly.const(-other))

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        total = 0
        for e, c in self.coeffs.items():
            total += c * (x**e if e >= 0 else Fraction(1) / x ** (-e))
        return total

    def compose_affine(self, a, b):
        """Return p(a x + b).  Only for ordinary polynomials."""
        if not self.is_polynomial():
            raise ValueError("affine substitution needs nonnegative exponents")
        if not self.coeffs:
            return Poly()
        lin = Poly({0: b, 1: a})
        out = Poly()
        for e in range(self.degree(), -1, -1):
            out = out * lin + self.coeff(e)
        return out

    def scale_var(self, q):
        """Return p(q x); valid for Laurent polynomials, q != 0."""
        return Poly({e: c * Fraction(q) ** e for e, c in self.coeffs.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return self.format("x")

    def format(self, var="x"):
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            else:
                mono = f"{var}^{e}"
            if mono and c == 1:
                t = mono
            elif mono and c == -1:
                t = "-" + mono
            elif mono:
                t = f"{c}*{mono}"
            else:
                t = str(c)
            terms.append(t)
        return " + ".join(terms).replace("+ -", "- ")
