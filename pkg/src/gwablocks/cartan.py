"""Cartan data, z-sequences and block discovery.

A presentation fixes an automorphism theta of H together with z0, z1 in H.
Two families are supported:

* ``polyshift``: H = F[h], theta(h) = r*h + gamma
* ``laurent``:   H = F[K, K^-1], theta(K) = q*K

A weight lam is an algebra map H -> F, determined by its value ``c`` on the
generator.  The weight lam o theta^n has value ``shift_value(c, n)`` and,
for any f in H, lam(theta^n(f)) = f(shift_value(c, n)).
"""

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Poly


class DomainError(ValueError):
    """A weight or presentation lies outside the supported domain."""


class NotAUnitOnBlock(ValueError):
    """z1 vanishes at a weight of the block being discovered."""


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _as_poly(p, name, laurent):
    if isinstance(p, Poly):
        out = p
    elif isinstance(p, (int, Fraction)):
        out = Poly.const(Fraction(p))
    else:
        out = Poly.from_list([Fraction(c) for c in p])
    if not laurent and not out.is_polynomial():
        raise DomainError(f"{name} must be a polynomial in h")
    return out


@dataclass(frozen=True)
class CartanPresentation:
    kind: str
    z0: Poly
    z1: Poly
    r: Fraction = Fraction(1)
    gamma: Fraction = Fraction(0)
    q: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind not in ("polyshift", "laurent"):
            raise DomainError(f"unknown presentation kind {self.kind!r}")
        if self.kind == "polyshift" and self.r == 0:
            raise DomainError("theta(h) = r*h + gamma needs r != 0")
        if self.kind == "laurent" and self.q == 0:
            raise DomainError("theta(K) = q*K needs q != 0")
        if self.z1.is_zero():
            raise DomainError("z1 must be nonzero")

    @classmethod
    def polyshift(cls, r, gamma, z0, z1=1):
        return cls("polyshift", _as_poly(z0, "z0", False), _as_poly(z1, "z1", False),
                   r=_frac(r), gamma=_frac(gamma))

    @classmethod
    def laurent(cls, q, z0, z1=1):
        return cls("laurent", _as_poly(z0, "z0", True), _as_poly(z1, "z1", True), q=_frac(q))

    @property
    def var(self):
        return "h" if self.kind == "polyshift" else "K"

    def _affine_power(self, n):
        # theta^n(h) = a*h + b
        a, b = Fraction(1), Fraction(0)
        if n >= 0:
            for _ in range(n):
                a, b = self.r * a, self.r * b + self.gamma
        else:
            for _ in range(-n):
                a, b = a / self.r, (b - self.gamma) / self.r
        return a, b

    def theta_power(self, p: Poly, n: int) -> Poly:
        """theta^n applied to an element of H."""
        if self.kind == "polyshift":
            a, b = self._affine_power(n)
            return p.compose_affine(a, b)
        return p.scale_var(self.q**n)

    def shift_value(self, c, n: int):
        """Value on the generator of the weight lam o theta^n."""
        c = _frac(c)
        if self.kind == "polyshift":
            a, b = self._affine_power(n)
            return a * c + b
        return self.q**n * c

    def check_weight(self, c):
        c = _frac(c)
        if self.kind == "laurent" and c == 0:
            raise DomainError("a weight of F[K, K^-1] cannot send K to 0")
        return c

    def describe(self):
        if self.kind == "polyshift":
            th = f"theta(h) = {Poly({1: self.r, 0: self.gamma}).format('h')}"
        else:
            th = f"theta(K) = {Poly({1: self.q}).format('K')}"
        return f"{th}; z0 = {self.z0.format(self.var)}; z1 = {self.z1.format(self.var)}"


PRESETS = {
    "sl2": CartanPresentation.polyshift(1, -2, [0, 1], 1),
    "quantum": CartanPresentation.laurent(2, [-1, 1], 1),
    "quadratic": CartanPresentation.polyshift(1, 1, [0, Fraction(-5, 3), 1], 1),
}


def theta(p: CartanPresentation, f: Poly) -> Poly:
    return p.theta_power(f, 1)


def theta_inv(p: CartanPresentation, f: Poly) -> Poly:
    return p.theta_power(f, -1)


class ZtildeTable:
    """Lazily computed z'_n and z~_n for |n| <= bound.

    z'_n = prod_{i<n} theta^i(z1) and z~_n = sum_{i<n} theta^i(z0 z'_{n-1-i});
    the table uses the recursion z~_{n+1} = z0 z'_n + theta(z~_n), which is
    the defining sum with its i = 0 term split off.  z~_{-n} = theta^{-n}(z~_n).
    """

    def __init__(self, p: CartanPresentation, bound: int = 64):
        self.p = p
        self.bound = bound
        self._zp = [Poly.const(1)]
        self._zt = [Poly()]

    def _extend(self, n):
        if n > self.bound:
            raise DomainError(f"index {n} exceeds table bound {self.bound}")
        while len(self._zt) <= n:
            m = len(self._zt) - 1
            self._zt.append(self.p.z0 * self._zp[m] + theta(self.p, self._zt[m]))
            self._zp.append(self._zp[m] * self.p.theta_power(self.p.z1, m))

    def zprime(self, n: int) -> Poly:
        if n < 0:
            raise DomainError("z'_n is only defined for n >= 0")
        self._extend(n)
        return self._zp[n]

    def ztilde(self, n: int) -> Poly:
        if n >= 0:
            self._extend(n)
            return self._zt[n]
        self._extend(-n)
        return self.p.theta_power(self._zt[-n], n)


def zprime_direct(p: CartanPresentation, n: int) -> Poly:
    out = Poly.const(1)
    for i in range(n):
        out = out * p.theta_power(p.z1, i)
    return out


def ztilde_direct(p: CartanPresentation, n: int) -> Poly:
    """z~_n straight from the defining sum (n >= 0)."""
    out = Poly()
    for i in range(n):
        out = out + p.theta_power(p.z0 * zprime_direct(p, n - 1 - i), i)
    return out


def ztilde_eval(p: CartanPresentation, c, n: int, table: ZtildeTable | None = None):
    """lam(z~_n) for the weight with generator value c."""
    c = p.check_weight(c)
    if table is None:
        table = ZtildeTable(p, max(abs(n), 1))
    if n >= 0:
        return table.ztilde(n)(c)
    # lam(theta^{-m}(f)) = f evaluated at lam o theta^{-m}
    return table.ztilde(-n)(p.shift_value(c, n))


def ztilde_values(p: CartanPresentation, c, bound: int, direction: int = 1):
    """[lam(z~_{d*1}), ..., lam(z~_{d*bound})] for d = direction in {1, -1}.

    Numerical route: lam is multiplicative, so the i-th term of the defining
    sum evaluates to z0(c_i) * prod_{i <= j < m-1} z1(c_j), where c_i is the
    generator value of the starting weight composed with theta^i.
    """
    c = p.check_weight(c)
    out = []
    for m in range(1, bound + 1):
        start = p.shift_value(c, -m) if direction < 0 else c
        cs = [p.shift_value(start, i) for i in range(m)]
        a = [p.z0(x) for x in cs]
        b = [p.z1(x) for x in cs]
        total = Fraction(0)
        for i in range(m):
            prod = Fraction(1)
            for j in range(i, m - 1):
                prod *= b[j]
            total += a[i] * prod
        out.append(total)
    return out


def _ztilde_values_fast(p, c, bound, direction):
    # w_{m+1} = w_m * z1(c_{m-1}) + z0(c_m) along the chain starting at c
    out = []
    if direction > 0:
        w = Fraction(0)
        prev = None
        for m in range(bound):
            cm = p.shift_value(c, m)
            w = (w * p.z1(prev) if m else Fraction(0)) + p.z0(cm)
            prev = cm
            out.append(w)
        return out
    for m in range(1, bound + 1):
        start = p.shift_value(c, -m)
        w = Fraction(0)
        prev = None
        for i in range(m):
            ci = p.shift_value(start, i)
            w = (w * p.z1(prev) if i else Fraction(0)) + p.z0(ci)
            prev = ci
        out.append(w)
    return out


def shift_identity_unit(p: CartanPresentation, m: int, n: int, table: ZtildeTable | None = None) -> bool:
    """z~_{m+n} == z~_n theta^n(z'_m) + theta^n(z~_m), symbolically.

    This form holds when z1 is theta-invariant (e.g. a constant unit).
    """
    t = table or ZtildeTable(p, m + n)
    lhs = t.ztilde(m + n)
    rhs = t.ztilde(n) * p.theta_power(t.zprime(m), n) + p.theta_power(t.ztilde(m), n)
    return lhs == rhs


def shift_identity_general(p: CartanPresentation, m: int, n: int, table: ZtildeTable | None = None) -> bool:
    """z~_{m+n} == z~_n theta^{n-1}(z'_m) + theta^n(z~_m) for n >= 1 (any z1)."""
    if n == 0:
        return True
    t = table or ZtildeTable(p, m + n)
    lhs = t.ztilde(m + n)
    rhs = t.ztilde(n) * p.theta_power(t.zprime(m), n - 1) + p.theta_power(t.ztilde(m), n)
    return lhs == rhs


def is_free(p: CartanPresentation, c, bound: int = 64) -> bool:
    """True when lam o theta^n != lam for 0 < |n| <= bound."""
    c = p.check_weight(c)
    if p.kind == "polyshift" and p.r == 1:
        return p.gamma != 0
    if p.kind == "laurent" and abs(p.q) != 1:
        return True
    return all(p.shift_value(c, n) != c for n in range(1, bound + 1))


@dataclass
class Block:
    presentation: CartanPresentation
    weight: Fraction
    shifts: list  # n_i with lam_i = lam o theta^{n_i}, ascending in the order
    values: list  # generator values of lam_1 < ... < lam_k
    complete: bool
    certificate: str | None
    bound: int

    @property
    def size(self):
        return len(self.values)

    def index_of(self, c):
        return self.values.index(_frac(c)) + 1


@dataclass
class VermaSeries:
    weight: Fraction
    degrees: list  # singular degrees n_1 < n_2 < ...
    weights: list  # lam o theta^{n_i}
    complete: bool

    @property
    def length(self):
        return len(self.degrees) + 1


def _interpolate(values):
    """Polynomial through (1, values[0]), (2, values[1]), ..."""
    pts = list(range(1, len(values) + 1))
    poly = Poly()
    for i, xi in enumerate(pts):
        term = Poly.const(Fraction(values[i]))
        for j, xj in enumerate(pts):
            if i != j:
                term = term * Poly({0: Fraction(-xj, xi - xj), 1: Fraction(1, xi - xj)})
        poly = poly + term
    return poly


def _root_bound(poly):
    """Cauchy bound on the absolute value of the roots of a nonzero poly."""
    d = poly.degree()
    if d == 0:
        return 0
    lead = poly.coeff(d)
    return 1 + max(abs(Fraction(poly.coeff(e)) / lead) for e in range(d))


def _tail_certified(vals):
    k = max(3, len(vals) // 4)
    tail = vals[-k:]
    if len(vals) < 4 or any(v == 0 for v in tail):
        return False
    sgn = tail[0] > 0
    if any((v > 0) != sgn for v in tail):
        return False
    return all(abs(b) > abs(a) for a, b in zip(tail, tail[1:]))


def _direction_certificate(p, c, vals, direction):
    if p.kind == "polyshift" and p.r == 1 and p.z1 == Poly.const(1):
        # lam(z~_{+-m}) is then a polynomial in m of degree <= deg z0 + 1
        deg = (p.z0.degree() or 0) + 1
        if len(vals) >= deg + 2:
            poly = _interpolate(vals[: deg + 2])
            if not poly.is_zero() and all(poly(m) == v for m, v in enumerate(vals, 1)):
                if _root_bound(poly) < len(vals):
                    return "polynomial-root-bound"
    if _tail_certified(vals):
        return "monotone-tail"
    return None


def singular_degrees(p: CartanPresentation, c, bound: int = 64):
    """Return (positive degrees, negative degrees, complete, certificate)."""
    c = p.check_weight(c)
    pos_vals = _ztilde_values_fast(p, c, bound, 1)
    neg_vals = _ztilde_values_fast(p, c, bound, -1)
    pos = [m for m, v in enumerate(pos_vals, 1) if v == 0]
    neg = [m for m, v in enumerate(neg_vals, 1) if v == 0]
    cp = _direction_certificate(p, c, pos_vals, 1)
    cn = _direction_certificate(p, c, neg_vals, -1)
    complete = cp is not None and cn is not None
    cert = cp if cp == cn else (f"{cp}/{cn}" if complete else None)
    return pos, neg, complete, cert


def discover_block(p: CartanPresentation, c, bound: int = 64) -> Block:
    c = p.check_weight(c)
    if bound < 1:
        raise DomainError("bound must be positive")
    if not is_free(p, c, bound):
        raise DomainError("the theta-orbit of this weight is not free")
    pos, neg, complete, cert = singular_degrees(p, c, bound)
    shifts = sorted(set(pos) | {-m for m in neg} | {0}, reverse=True)
    lo, hi = min(shifts), max(shifts)
    for n in range(lo, hi + 1):
        v = p.shift_value(c, n)
        if p.z1(v) == 0:
            raise NotAUnitOnBlock(f"z1 vanishes at the orbit weight {v} (shift {n})")
    values = [p.shift_value(c, n) for n in shifts]
    return Block(p, c, shifts, values, complete, cert, bound)


def verma_series(p: CartanPresentation, c, bound: int = 64) -> VermaSeries:
    c = p.check_weight(c)
    pos, _, complete, _ = singular_degrees(p, c, bound)
    return VermaSeries(c, pos, [p.shift_value(c, m) for m in pos], complete)


def parse_config(text: str) -> tuple[CartanPresentation, dict]:
    """Parse key=value lines into a presentation plus the leftover keys.

    Keys: kind (polyshift|laurent), r, gamma, q, z0, z1 (ascending
    coefficient lists, space or comma separated), z0_low / z1_low (lowest
    exponent, Laurent only), weight, bound.
    """
    kv = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"malformed config line: {raw!r}")
        k, v = line.split("=", 1)
        kv[k.strip().lower()] = v.strip()
    kind = kv.pop("kind", "polyshift").lower()

    def coeffs(key):
        s = kv.pop(key, None)
        if s is None:
            return None
        return [Fraction(t) for t in s.replace(",", " ").split()]

    z0 = coeffs("z0")
    z1 = coeffs("z1") or [Fraction(1)]
    if z0 is None:
        raise DomainError("config needs z0")
    z0_low = int(kv.pop("z0_low", 0))
    z1_low = int(kv.pop("z1_low", 0))
    if kind == "polyshift":
        if z0_low or z1_low:
            raise DomainError("negative exponents need kind = laurent")
        pres = CartanPresentation.polyshift(Fraction(kv.pop("r", "1")), Fraction(kv.pop("gamma", "0")), z0, z1)
    elif kind == "laurent":
        pres = CartanPresentation.laurent(Fraction(kv.pop("q", "1")), Poly.from_list(z0, z0_low),
                                          Poly.from_list(z1, z1_low))
    else:
        raise DomainError(f"unknown kind {kind!r}")
    return pres, kv
