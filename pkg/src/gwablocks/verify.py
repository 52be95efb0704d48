"""Cross-verification suites shared by the CLI and the test-suite.

Each suite returns a list of ``Check`` records.  A check passes, fails
(with up to ``MAX_CEX`` counterexamples attached) or is skipped when a
resource ceiling refuses the work.
"""

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from . import blockcalc as bc
from . import cartan, quiver, repcat, styt
from . import linalg as la
from .objects import Dual, ProjQuot, Simple, Tilting, VermaQuot, all_objects, dual
from .polynomial import Poly
from .submodules import (ResourceRefusal, enumerate_submodules, expected_count, is_indecomposable_by_socle,
                         submodule_of_psi, transfer_psi, valid_sequences)

MAX_CEX = 10

GOLDEN = {
    "psi 5,3,2": ("5\n432\n321\n21\n1", lambda: styt.yt_of_psi((5, 3, 2))),
    "skew 6,4,3,2 / 4,3": ("6\n5432\n::21\n::1", lambda: styt.skew((6, 4, 3, 2), (4, 3))),
}


@dataclass
class Check:
    suite: str
    name: str
    status: str  # pass | fail | skip
    detail: str = ""
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return self.status != "fail"

    def as_dict(self, timings=False):
        out = {"suite": self.suite, "name": self.name, "status": self.status, "detail": self.detail,
               "counterexamples": self.counterexamples}
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


def _run(suite, name, fn, *args):
    t = time.perf_counter()
    try:
        cex, detail = fn(*args)
        status = "fail" if cex else "pass"
    except ResourceRefusal as e:
        cex, detail, status = [], f"skipped: {e}", "skip"
    return Check(suite, name, status, detail, [str(c) for c in cex[:MAX_CEX]], time.perf_counter() - t)


# formulas -------------------------------------------------------------------

def algebra_dimensions(n_max):
    cex = [("dim A", n, quiver.dim_An(n)) for n in range(1, n_max + 1)
           if quiver.dim_An(n) != sum(i * i for i in range(1, n + 1))]
    cex += [("phi count", n) for n in range(1, n_max + 1)
            if len(quiver.phi_basis(n)) != quiver.phi_count_formula(n)]
    return cex, f"n <= {n_max}"


def koszulity(n_max):
    cex = []
    for n in range(1, n_max + 1):
        if not bc.koszul_check(n):
            cex.append(("H(A,t) H(E,-t) != I", n))
        if bc.poly_det(bc.hilbert_ext(n)) != Poly.const(1):
            cex.append(("det H(E,t) != 1", n))
        if not bc.is_symmetric(bc.hilbert_ext(n)):
            cex.append(("H(E,t) not symmetric", n))
    return cex, f"n <= {n_max}"


def quiver_presentation(n_max):
    cex = []
    for n in range(1, n_max + 1):
        rep = quiver.iso_check_An_phi(n)
        if not rep.ok:
            cex.append((n, rep.failures[:3]))
    return cex, f"n <= {n_max}"


def phi_words(n_max):
    """Each phi is the composite of its generator word, and degrees add."""
    cex = []
    for n in range(1, n_max + 1):
        basis = quiver.phi_basis(n)
        for x in basis:
            word = quiver.phi_as_word(x)
            if word:
                cur = word[0]
                for g in word[1:]:
                    cur = quiver.phi_compose(g, cur)
                    if cur is quiver.ZERO:
                        break
                if cur != x:
                    cex.append(("word", str(x), cur))
            elif x != quiver.phi_identity(x.r, x.s):
                cex.append(("empty word", str(x)))
        by_source = {}
        for x in basis:
            by_source.setdefault(x.source(), []).append(x)
        for a in basis:
            for b in by_source.get(a.target(), []):
                c = quiver.phi_compose(b, a)
                if c is not quiver.ZERO and quiver.phi_degree(c) != quiver.phi_degree(a) + quiver.phi_degree(b):
                    cex.append(("degree", str(b), str(a)))
    return cex, f"n <= {n_max}"


def formula_consistency(n_max):
    """No two formula routes disagree, and the Euler relation holds."""
    cex = []
    supported = 0
    for n in range(1, n_max + 1):
        objs = all_objects(n, duals=True)
        for x in objs:
            for y in objs:
                for l in range(4):
                    try:
                        v = bc.ext_dim(n, x, y, l)
                    except bc.FormulaConflict as e:
                        cex.append(str(e))
                        continue
                    supported += v is not bc.UNSUPPORTED
        for i in range(1, n + 1):
            for y in objs:
                e = bc.ext_dim(n, VermaQuot(i), y, 1)
                a = bc.euler_ext1(n, i, y)
                if e is not bc.UNSUPPORTED and a is not bc.UNSUPPORTED and e != a:
                    cex.append(("Euler relation", n, i, y.label(n), e, a))
    return cex, f"n <= {n_max}, {supported} supported values"


def skl_and_reciprocity(n_max):
    cex = []
    for n in range(1, n_max + 1):
        ok, bad = bc.skl_check(n)
        if not ok:
            cex.append(("SKL", n, bad))
        ok, bad = bc.bgg_reciprocity_check(n)
        if not ok:
            cex.append(("reciprocity", n, bad))
    return cex, f"n <= {n_max}"


def random_presentation(rng: Random, unit_z1: bool = True):
    """A random presentation with small rational data; z1 is a nonzero
    constant when ``unit_z1`` holds."""
    def small():
        return Fraction(rng.randint(-5, 5), rng.randint(1, 3))

    z0 = [small() for _ in range(rng.randint(1, 3))]
    z1 = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))]
    if not unit_z1:
        z1 = z1 + [small() for _ in range(rng.randint(1, 2))]
        if all(c == 0 for c in z1[1:]):
            z1[-1] = Fraction(1)
    if rng.random() < 0.5:
        r = rng.choice([1, 1, 2, -1, Fraction(1, 2)])
        return cartan.CartanPresentation.polyshift(r, small(), z0, z1)
    return cartan.CartanPresentation.laurent(rng.choice([2, 3, -2, Fraction(1, 2)]),
                                             Poly.from_list(z0, low=-1), Poly.from_list(z1, low=0))


def shift_identity(count, bound, seed):
    rng = Random(seed)
    cex = []
    for _ in range(count):
        p = random_presentation(rng)
        table = cartan.ZtildeTable(p, 2 * bound)
        for m in range(bound + 1):
            for n in range(bound + 1):
                if not cartan.shift_identity_unit(p, m, n, table):
                    cex.append((p.describe(), m, n))
    return cex, f"{count} presentations with unit z1, m, n <= {bound}"


def sl2_linkage(c_max=5):
    cex = []
    for c in range(c_max + 1):
        b = cartan.discover_block(cartan.PRESETS["sl2"], c)
        if b.values != [Fraction(-c - 2), Fraction(c)]:
            cex.append((c, b.values))
    return cex, f"c = 0..{c_max}"


def formulas_suite(n_max=8, seed=0):
    s = "formulas"
    small = min(n_max, 5)
    return [
        _run(s, "algebra dimensions", algebra_dimensions, n_max),
        _run(s, "koszulity", koszulity, n_max),
        _run(s, "quiver presentation", quiver_presentation, min(n_max, 6)),
        _run(s, "phi words and degrees", phi_words, small),
        _run(s, "formula consistency", formula_consistency, small),
        _run(s, "SKL and reciprocity", skl_and_reciprocity, n_max),
        _run(s, "shift identity", shift_identity, 20, 8, seed),
        _run(s, "sl2 linkage", sl2_linkage),
    ]


# oracle ---------------------------------------------------------------------

def ext_oracle(n_max, field=la.QQ, max_degree=3):
    cex = []
    compared = 0
    for n in range(1, n_max + 1):
        objs = all_objects(n, duals=True)
        reps = {x: repcat.build(n, x, field) for x in objs}
        for x in objs:
            res = repcat.min_proj_resolution(reps[x], max_len=max_degree + 1)
            for y in objs:
                got = repcat.ext_dims(reps[x], reps[y], max_degree, res)
                for l in range(max_degree + 1):
                    v = bc.ext_dim(n, x, y, l)
                    if v is bc.UNSUPPORTED:
                        continue
                    compared += 1
                    if v != got[l]:
                        cex.append((n, x.label(n), y.label(n), l, v, got[l]))
    return cex, f"n <= {n_max} over {field.name}: {compared} values compared"


def submodule_bijection(n_max, field=la.PrimeField(2), ceiling=None):
    cex = []
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            for s in range(r + 1, n + 2):
                rep = repcat.build(n, ProjQuot(r, s), field)
                subs = enumerate_submodules(rep, ceiling or 10**7)
                if len(subs) != expected_count(r, s):
                    cex.append(("count", n, r, s, len(subs), expected_count(r, s)))
                nonzero = [x for x in subs if any(x)]
                if not all(is_indecomposable_by_socle(rep, x) for x in nonzero):
                    cex.append(("decomposable", n, r, s))
                psis = sorted(transfer_psi(rep, x) for x in nonzero)
                if psis != sorted(q for q in valid_sequences(r, s) if q):
                    cex.append(("transfer image", n, r, s))
                if any(submodule_of_psi(rep, transfer_psi(rep, x)) != x for x in subs):
                    cex.append(("round trip", n, r, s))
    return cex, f"n <= {n_max} over {field.name}"


def tilting_duality(n_max, seed=0):
    from .submodules import embed_image
    cex = []
    for n in range(1, n_max + 1):
        tn = repcat.build(n, Tilting(n))
        for k in range(1, n + 1):
            t = repcat.build(n, Tilting(k))
            if not repcat.is_isomorphic(repcat.dualize(t), t, seed=seed):
                cex.append(("T_k not self-dual", n, k))
            if k == 1:
                quo = tn
            else:
                quo, _ = repcat.quotient(tn, embed_image(repcat.build(n, Tilting(k - 1)), tn, seed=seed))
            if not repcat.is_isomorphic(repcat.dualize(repcat.build(n, ProjQuot(k, n + 1))), quo, seed=seed):
                cex.append(("F(P_k) vs T_n/T_(k-1)", n, k))
    return cex, f"n <= {n_max}"


def tilting_complement(n_max, seed=0):
    """Psi(F(T_k/N)) is the complement of Psi(N) in {1..k}."""
    from .submodules import embed_image
    cex = []
    for k in range(1, n_max + 1):
        tk = repcat.build(k, Tilting(k))
        for psi in valid_sequences(1, k + 1):
            quo, _ = repcat.quotient(tk, submodule_of_psi(tk, psi))
            img = embed_image(repcat.dualize(quo), tk, seed=seed)
            got = transfer_psi(tk, img) if img is not None else None
            if got != styt.complement_tilting(k, psi):
                cex.append((k, psi, got))
    return cex, f"k <= {n_max}"


def oracle_suite(n_max=4, field=la.QQ, seed=0, ceiling=None):
    s = "oracle"
    small = min(n_max, 4)
    return [
        _run(s, "ext oracle", ext_oracle, small, field),
        _run(s, "submodule bijection", submodule_bijection, small, la.PrimeField(2), ceiling),
        _run(s, "tilting duality", tilting_duality, small, seed),
        _run(s, "tilting complement", tilting_complement, small, seed),
    ]


# tableaux -------------------------------------------------------------------

def family_cases(n, x, y):
    """Pair families (1)-(5) on which tableau counts are claimed to agree
    with Hom and Ext^1 in the block."""
    def base(a, b):
        aa, bb = bc.aliases(a), bc.aliases(b)
        out = set()
        if any(isinstance(u, ProjQuot) for u in aa) and any(isinstance(v, (ProjQuot, VermaQuot)) for v in bb):
            out.add(1)
        if any(isinstance(u, Simple) for u in aa) and any(isinstance(v, Simple) for v in bb):
            out.add(2)
        if any(isinstance(u, ProjQuot) and u.k == n + 1 for u in aa):
            out.add(3)
        if (any(isinstance(u, VermaQuot) and u.s == 0 for u in aa)
                and any(isinstance(v, Dual) and isinstance(v.inner, VermaQuot) and v.inner.s == 0 for v in bb)):
            out.add(4)
        return out

    cases = base(x, y)
    if base(dual(y), dual(x)):
        cases.add(5)
    return cases


def tableau_conformance(n_max, degree):
    count = styt.count_maps if degree == 0 else styt.count_extensions
    cex = []
    compared = 0
    for n in range(1, n_max + 1):
        objs = all_objects(n, duals=True)
        yts = {x: styt.yt_of_object(n, x) for x in objs}
        for x in objs:
            for y in objs:
                if not family_cases(n, x, y):
                    continue
                v = bc.ext_dim(n, x, y, degree)
                if v is bc.UNSUPPORTED:
                    cex.append((n, x.label(n), y.label(n), "unsupported"))
                    continue
                compared += 1
                c = count(yts[x], yts[y])
                if c != v:
                    cex.append((n, x.label(n), y.label(n), f"formula {v}", f"tableaux {c}"))
    word = "Hom" if degree == 0 else "Ext^1"
    return cex, f"{word}, n <= {n_max}: {compared} pairs, {len(cex)} mismatches"


def tableau_duality(n_max):
    cex = []
    for n in range(1, n_max + 1):
        objs = all_objects(n, duals=True)
        yts = {x: styt.yt_of_object(n, x) for x in objs}
        for x in objs:
            for y in objs:
                if not family_cases(n, x, y):
                    continue
                a, b = yts[x], yts[y]
                ta, tb = styt.transpose(a), styt.transpose(b)
                if styt.count_maps(a, b) != styt.count_maps(tb, ta):
                    cex.append(("Hom", n, x.label(n), y.label(n)))
                if styt.count_extensions(a, b) != styt.count_extensions(tb, ta):
                    cex.append(("Ext^1", n, x.label(n), y.label(n)))
    return cex, f"n <= {n_max}"


def skew_multiplicities(k_max, field=la.PrimeField(2)):
    """Label counts of YT(N/N') against composition multiplicities of N/N'
    computed inside T_k."""
    cex = []
    compared = 0
    for k in range(1, k_max + 1):
        tk = repcat.build(k, Tilting(k), field)
        seqs = [q for q in valid_sequences(1, k + 1) if q and q[0] == k]
        subs = {q: submodule_of_psi(tk, q) for q in valid_sequences(1, k + 1)}
        for big in seqs:
            for small in subs:
                if len(small) > len(big) or any(a > b for a, b in zip(small, big)):
                    continue
                if not repcat.sub_contains(subs[big], subs[small], field):
                    continue
                compared += 1
                dims = [a - b for a, b in zip(repcat.sub_dims(subs[big]), repcat.sub_dims(subs[small]))]
                counts = styt.skew(big, small).label_counts()
                if any(counts.get(i, 0) != dims[i - 1] for i in range(1, k + 1)):
                    cex.append((big, small, counts, dims))
    return cex, f"entries <= {k_max}: {compared} skew pairs"


def manhattan(n_max):
    """Distances of tableau maps between projective quotients against phi
    degrees, as multisets."""
    cex = []
    for n in range(1, n_max + 1):
        pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 2)]
        for src in pairs:
            x1 = styt.yt_of_object(n, ProjQuot(*src))
            for tgt in pairs:
                x2 = styt.yt_of_object(n, ProjQuot(*tgt))
                got = Counter(styt.manhattan_degree(m, x1, x2) for m in styt.enumerate_maps(x1, x2))
                want = Counter(quiver.phi_degree(p) for p in quiver.phi_basis(n, src, tgt))
                if got != want:
                    cex.append((n, src, tgt, dict(got), dict(want)))
    return cex, f"n <= {n_max}"


def golden_renders():
    cex = []
    for name, (text, make) in GOLDEN.items():
        d = make()
        if styt.render(d) != text:
            cex.append((name, "render", styt.render(d)))
        back = styt.parse(text)
        if not back.same_cells(d.normalized()) or styt.render(back) != text:
            cex.append((name, "parse"))
    return cex, f"{len(GOLDEN)} figures"


def styt_suite(n_max=5):
    s = "styt"
    return [
        _run(s, "golden renders", golden_renders),
        _run(s, "tableau Hom conformance", tableau_conformance, n_max, 0),
        _run(s, "tableau Ext^1 conformance", tableau_conformance, n_max, 1),
        _run(s, "transpose duality", tableau_duality, n_max),
        _run(s, "skew multiplicities", skew_multiplicities, n_max),
        _run(s, "manhattan degrees", manhattan, n_max),
    ]


def run(scope="all", n_max=None, field=la.QQ, seed=0, ceiling=None):
    checks = []
    if scope in ("formulas", "all"):
        checks += formulas_suite(n_max or 8, seed)
    if scope in ("oracle", "all"):
        checks += oracle_suite(n_max or 4, field, seed, ceiling)
    if scope in ("styt", "all"):
        checks += styt_suite(min(n_max or 5, 5) if scope == "all" else (n_max or 5))
    return checks

