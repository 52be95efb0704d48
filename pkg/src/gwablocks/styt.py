"""Sub-triangular Young tableaux (STYT).

The staircase YT_k has a cell at (row, col) for row, col >= 1 with
row + col <= k + 1, labelled k + 2 - row - col.  A diagram is a finite set
of labelled cells; it is an STYT when it sits inside some YT_k (after a
translation) and satisfies conditions (a)-(d) checked by ``validate``.
"""

from dataclasses import dataclass

from .objects import Dual, ProjQuot, Simple, VermaQuot, normalize, validate as validate_object


class StytError(ValueError):
    pass


class Diagram:
    """Labelled cells {(row, col): label} plus an optional mask of removed
    positions (drawn as ':').  Equality compares cells and mask."""

    __slots__ = ("cells", "removed")

    def __init__(self, cells, removed=()):
        self.cells = dict(cells)
        self.removed = frozenset(removed) - set(self.cells)

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.cells == other.cells and self.removed == other.removed

    def __hash__(self):
        return hash((frozenset(self.cells.items()), self.removed))

    def __len__(self):
        return len(self.cells)

    def __contains__(self, pos):
        return pos in self.cells

    def __repr__(self):
        return f"Diagram({render(self)!r})"

    def same_cells(self, other):
        return self.cells == other.cells

    def translate(self, dr, dc):
        return Diagram({(r + dr, c + dc): v for (r, c), v in self.cells.items()},
                       {(r + dr, c + dc) for r, c in self.removed})

    def normalized(self):
        """Translate so the cells start at row 1 and column 1."""
        if not self.cells:
            return Diagram({}, ())
        r0 = min(r for r, _ in self.cells)
        c0 = min(c for _, c in self.cells)
        return self.translate(1 - r0, 1 - c0)

    def label_counts(self):
        out = {}
        for v in self.cells.values():
            out[v] = out.get(v, 0) + 1
        return out

    def max_label(self):
        return max(self.cells.values()) if self.cells else 0


def staircase(k: int) -> Diagram:
    return Diagram({(r, c): k + 2 - r - c for r in range(1, k + 1) for c in range(1, k + 2 - r)})


def yt_of_psi(psi, k: int | None = None) -> Diagram:
    """YT of the submodule with decreasing sequence psi, drawn in YT_k
    (k defaults to the largest entry).  Column j holds psi[j-1], ..., 1."""
    psi = tuple(psi)
    if any(a <= b for a, b in zip(psi, psi[1:])) or any(m < 1 for m in psi):
        raise StytError(f"{psi} is not a strictly decreasing sequence of positive integers")
    if not psi:
        return Diagram({})
    if k is None:
        k = psi[0]
    if psi[0] > k or len(psi) > k:
        raise StytError(f"{psi} does not fit in YT_{k}")
    cells = {}
    for j, m in enumerate(psi, 1):
        if m > k + 1 - j:
            raise StytError(f"column {j} of YT_{k} has no cell labelled {m}")
        for lab in range(m, 0, -1):
            cells[(k + 2 - j - lab, j)] = lab
    return Diagram(cells)


def skew(psi, psi_small) -> Diagram:
    """YT(N/N'): YT(N') sits in the leftmost columns of YT(N) with matching
    labels and is removed."""
    psi, psi_small = tuple(psi), tuple(psi_small)
    if len(psi_small) > len(psi) or any(a > b for a, b in zip(psi_small, psi)):
        raise StytError(f"{psi_small} does not embed into {psi}")
    big = yt_of_psi(psi)
    k = psi[0] if psi else 0
    small = yt_of_psi(psi_small, k) if psi_small else Diagram({})
    cells = {p: v for p, v in big.cells.items() if p not in small.cells}
    return Diagram(cells, set(small.cells))


def psi_of_yt(x: Diagram):
    """Column tops of a diagram drawn by yt_of_psi."""
    ok, why = validate(x)
    if not ok:
        raise StytError(f"not an STYT: {why}")
    cols = {}
    for (r, c), v in x.cells.items():
        cols.setdefault(c, []).append((r, v))
    out = []
    for c in sorted(cols):
        col = sorted(cols[c])
        if col[-1][1] != 1:
            raise StytError("a column does not reach the label 1")
        out.append(col[0][1])
    if any(a <= b for a, b in zip(out, out[1:])):
        raise StytError("column tops are not strictly decreasing")
    return tuple(out)


def transpose(x: Diagram) -> Diagram:
    return Diagram({(c, r): v for (r, c), v in x.cells.items()}, {(c, r) for r, c in x.removed})


def _anchor(x: Diagram):
    """(k, r0, c0) placing x inside YT_k with the k-cell at (r0, c0), or a
    reason string."""
    sums = {v + r + c for (r, c), v in x.cells.items()}
    if len(sums) != 1:
        return "labels"
    k = x.max_label()
    tops = [p for p, v in x.cells.items() if v == k]
    if len(tops) != 1:
        return "a"
    r0, c0 = tops[0]
    for (r, c), v in x.cells.items():
        if r < r0 or c < c0 or v < 1:
            return "a"
    return k, r0, c0


def _neighbours(p):
    r, c = p
    return ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))


def validate(x: Diagram):
    """(True, None) for an STYT, else (False, first failed condition)."""
    if not x.cells:
        return False, "empty"
    anc = _anchor(x)
    if isinstance(anc, str):
        return False, anc
    k, r0, c0 = anc
    # (b) connected
    start = next(iter(x.cells))
    seen = {start}
    todo = [start]
    while todo:
        p = todo.pop()
        for q in _neighbours(p):
            if q in x.cells and q not in seen:
                seen.add(q)
                todo.append(q)
    if len(seen) != len(x.cells):
        return False, "b"
    # (c) rows and columns are intervals
    rows, cols = {}, {}
    for r, c in x.cells:
        rows.setdefault(r, []).append(c)
        cols.setdefault(c, []).append(r)
    for line in list(rows.values()) + list(cols.values()):
        if max(line) - min(line) + 1 != len(line):
            return False, "c"
    # (d) no missing cell of YT_k with both the upper and left neighbour present
    for rr in range(1, k + 1):
        for cc in range(1, k + 2 - rr):
            p = (rr + r0 - 1, cc + c0 - 1)
            if p in x.cells or rr < 2 or cc < 2:
                continue
            if (p[0] - 1, p[1]) in x.cells and (p[0], p[1] - 1) in x.cells:
                return False, "d"
    return True, None


def is_styt(x: Diagram) -> bool:
    return validate(x)[0]


def g_min(x: Diagram):
    """Minimal generating cells: those with no cell directly right or above."""
    return sorted(p for p in x.cells if (p[0], p[1] + 1) not in x.cells and (p[0] - 1, p[1]) not in x.cells)


def generated(x: Diagram, gens):
    """Cells reached from gens by moves one step left or down inside x."""
    seen = {g for g in gens if g in x.cells}
    todo = list(seen)
    while todo:
        r, c = todo.pop()
        for q in ((r, c - 1), (r + 1, c)):
            if q in x.cells and q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


@dataclass(frozen=True)
class StytMap:
    shift: tuple  # (dr, dc)
    image: frozenset  # cells of the target hit by the map

    def kind(self, x1: Diagram, x2: Diagram):
        inj = len(self.image) == len(x1.cells)
        surj = len(self.image) == len(x2.cells)
        return {(True, True): "iso", (True, False): "injective", (False, True): "surjective"}.get((inj, surj), "other")


def _check_map(x1: Diagram, x2: Diagram, dr: int, dc: int):
    overlap = set()
    for (r, c), v in x1.cells.items():
        q = (r + dr, c + dc)
        if q in x2.cells:
            if x2.cells[q] != v:
                return None
            overlap.add(q)
    if not overlap:
        return None
    gens = [(r + dr, c + dc) for r, c in g_min(x1)]
    if generated(x2, gens) != overlap:
        return None
    return StytMap((dr, dc), frozenset(overlap))


def _window(x1: Diagram, x2: Diagram):
    r1 = [r for r, _ in x1.cells]
    c1 = [c for _, c in x1.cells]
    r2 = [r for r, _ in x2.cells]
    c2 = [c for _, c in x2.cells]
    return (range(min(r2) - max(r1), max(r2) - min(r1) + 1), range(min(c2) - max(c1), max(c2) - min(c1) + 1))


def enumerate_maps(x1: Diagram, x2: Diagram):
    """Translations of x1 that are maps of STYTs into x2."""
    if not x1.cells or not x2.cells:
        return []
    rs, cs = _window(x1, x2)
    out = []
    for dr in rs:
        for dc in cs:
            m = _check_map(x1, x2, dr, dc)
            if m is not None:
                out.append(m)
    return out


def compose_maps(m2: StytMap, m1: StytMap, x1: Diagram, x3: Diagram):
    """m2 o m1 as a translation x1 -> x3, or None when it is not a map."""
    dr = m1.shift[0] + m2.shift[0]
    dc = m1.shift[1] + m2.shift[1]
    return _check_map(x1, x3, dr, dc)


@dataclass(frozen=True)
class Placement:
    shift: tuple  # translation applied to x1
    union: Diagram


def enumerate_extensions(x1: Diagram, x2: Diagram):
    """Placements of x1 on top of or to the right of x2, sharing at least
    one edge, whose union is an STYT."""
    if not x1.cells or not x2.cells:
        return []
    rs, cs = _window(x1, x2)
    out = []
    for dr in range(rs.start - 1, rs.stop + 1):
        for dc in range(cs.start - 1, cs.stop + 1):
            moved = {(r + dr, c + dc): v for (r, c), v in x1.cells.items()}
            if any(p in x2.cells for p in moved):
                continue
            touching = False
            bad = False
            for (r, c) in moved:
                for q in _neighbours((r, c)):
                    if q in x2.cells:
                        touching = True
                        # x1 must sit directly above or directly right of x2
                        if q not in ((r + 1, c), (r, c - 1)):
                            bad = True
            if not touching or bad:
                continue
            union = Diagram({**x2.cells, **moved})
            if is_styt(union):
                out.append(Placement((dr, dc), union))
    return out


def count_maps(x1, x2) -> int:
    return len(enumerate_maps(x1, x2))


def count_extensions(x1, x2) -> int:
    return len(enumerate_extensions(x1, x2))


def generating_cell(x: Diagram):
    g = g_min(x)
    if len(g) != 1:
        raise StytError(f"diagram has {len(g)} generating cells, expected one")
    return g[0]


def manhattan_degree(m: StytMap, x1: Diagram, x2: Diagram) -> int:
    """Distance from the image of the generating cell of x1 to the
    generating cell of x2."""
    g1 = generating_cell(x1)
    g2 = generating_cell(x2)
    return abs(g1[0] + m.shift[0] - g2[0]) + abs(g1[1] + m.shift[1] - g2[1])


def yt_of_object(n: int, x) -> Diagram:
    validate_object(n, x)
    x = normalize(x)
    if isinstance(x, Simple):
        return Diagram({(1, 1): x.i})
    if isinstance(x, VermaQuot):
        return Diagram({(i, 1): x.r + 1 - i for i in range(1, x.r - x.s + 1)})
    if isinstance(x, ProjQuot):
        return yt_of_psi(range(x.k - 1, x.j - 1, -1))
    if isinstance(x, Dual):
        return transpose(yt_of_object(n, x.inner))
    raise StytError(f"no diagram for {x!r}")


def complement_tilting(k: int, psi):
    """Sequence of F(T_k/N) given that of N inside T_k."""
    psi = tuple(psi)
    if any(not 1 <= m <= k for m in psi):
        raise StytError(f"{psi} is not a submodule sequence of T_{k}")
    return tuple(sorted(set(range(1, k + 1)) - set(psi), reverse=True))


def render(x: Diagram) -> str:
    """Rows top to bottom; ':' marks a gap to the left of a cell in its row.
    Labels are space separated when any label has two digits."""
    if not x.cells:
        return ""
    r0 = min(r for r, _ in x.cells)
    c0 = min(c for _, c in x.cells)
    r1 = max(r for r, _ in x.cells)
    wide = any(v >= 10 for v in x.cells.values())
    lines = []
    for r in range(r0, r1 + 1):
        row_cols = [c for (rr, c) in x.cells if rr == r]
        if not row_cols:
            lines.append("")
            continue
        toks = [str(x.cells[(r, c)]) if (r, c) in x.cells else ":" for c in range(c0, max(row_cols) + 1)]
        lines.append((" " if wide else "").join(toks))
    return "\n".join(lines)


def parse(text: str) -> Diagram:
    """Inverse of render: cells get row/column positions from 1."""
    cells, removed = {}, set()
    for r, line in enumerate(text.split("\n"), 1):
        toks = line.split() if " " in line.strip() else list(line.strip())
        for c, tok in enumerate(toks, 1):
            if tok == ":":
                removed.add((r, c))
            elif tok.isdigit():
                cells[(r, c)] = int(tok)
            else:
                raise StytError(f"bad token {tok!r} in row {r}")
    return Diagram(cells, removed)
