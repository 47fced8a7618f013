"""Finite Coxeter groups as real reflection groups, their diagrams and rotation extensions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from itertools import permutations, product

from ..cyclofield import (
    ONE,
    ZERO,
    CycloMatrix,
    CyclotomicNumber,
    as_cyclo,
    cos_sin,
    dot,
    golden_ratio,
    kernel_basis,
    sqrt_int,
    vector,
)
from ..matgroup import MatrixGroup

HALF = Fraction(1, 2)


class UnknownType(ValueError):
    pass


# ---------------------------------------------------------------------------
# reflections and roots

def reflection(root) -> CycloMatrix:
    """Orthogonal reflection in the hyperplane perpendicular to root."""
    a = vector(root)
    n = len(a)
    c = as_cyclo(2) / dot(a, a)
    rows = []
    for i in range(n):
        rows.append([(ONE if i == j else ZERO) - c * a[i] * a[j] for j in range(n)])
    return CycloMatrix(rows)


def matrix_order(g: CycloMatrix, bound: int = 10_000) -> int:
    ident = CycloMatrix.identity(g.nrows)
    x = g
    for k in range(1, bound + 1):
        if x == ident:
            return k
        x = x @ g
    raise ValueError(f"matrix order exceeds {bound}")


def _unit(n: int, i: int, c=1) -> tuple:
    return tuple(as_cyclo(c) if j == i else ZERO for j in range(n))


def _vec(n: int, pairs) -> tuple:
    v = [ZERO] * n
    for i, c in pairs:
        v[i] = v[i] + as_cyclo(c)
    return tuple(v)


def e8_simple_roots() -> list[tuple]:
    """Bourbaki simple roots of E8 in R^8."""
    n = 8
    a1 = tuple(as_cyclo(HALF if i in (0, 7) else -HALF) for i in range(8))
    roots = [a1, _vec(n, [(0, 1), (1, 1)]), _vec(n, [(1, 1), (0, -1)])]
    for i in range(2, 7):
        roots.append(_vec(n, [(i, 1), (i - 1, -1)]))
    return roots


def h4_roots() -> list[tuple]:
    t = golden_ratio()
    ti = t - 1
    out = []
    for i in range(4):
        for s in (1, -1):
            out.append(_unit(4, i, s))
    for signs in product((HALF, -HALF), repeat=4):
        out.append(vector(signs))
    base = (ZERO, ONE, t, ti)
    for p in permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        if inv % 2:
            continue
        for signs in product((1, -1), repeat=3):
            vals = [base[0]] + [base[k + 1] * signs[k] for k in range(3)]
            out.append(tuple(vals[p[i]] * HALF for i in range(4)))
    return out


def h3_simple_roots() -> list[tuple]:
    t = golden_ratio()
    return [_unit(3, 1), tuple(x * (-HALF) for x in (ONE, t, t - 1)), _unit(3, 0)]


def _float(x: CyclotomicNumber) -> float:
    return x.to_complex().real


_GENERIC = (1.0, 0.318309886, 0.1415926535, 0.0577215664, 0.0271828182, 0.0141421356, 0.00693147, 0.0031415,
            0.00173205, 0.000707, 0.000333, 0.000161, 0.0000731, 0.0000377, 0.0000179, 0.0000089)


def positive_roots(roots, functional=None) -> list[tuple]:
    f = functional or _GENERIC
    out = []
    for r in roots:
        val = sum(_float(x) * f[i] for i, x in enumerate(r))
        if abs(val) < 1e-9:
            raise ValueError("functional is not generic for this root set")
        if val > 0:
            out.append(r)
    return out


def simple_system(roots, functional=None) -> list[tuple]:
    """Simple roots of a finite root system for a generic linear functional.

    A positive root is simple exactly when its reflection sends no other
    positive root to a negative one.
    """
    f = functional or _GENERIC
    pos = positive_roots(roots, f)
    fval = [sum(_float(x) * f[i] for i, x in enumerate(r)) for r in pos]
    fl = [[_float(x) for x in r] for r in pos]
    simple = []
    for a, fa, av in zip(pos, fval, fl):
        aa = sum(x * x for x in av)
        ok = True
        for b, fb, bv in zip(pos, fval, fl):
            if b is a:
                continue
            c = 2 * sum(x * y for x, y in zip(av, bv)) / aa
            if fb - c * fa < -1e-9:
                ok = False
                break
        if ok:
            simple.append(a)
    return simple


# ---------------------------------------------------------------------------
# Coxeter diagrams

@dataclass
class CoxeterDiagram:
    """Vertices 0..n-1; edges {i, j} -> m >= 3 (missing edge means m = 2)."""

    n: int
    edges: dict = field(default_factory=dict)

    @classmethod
    def from_matrix(cls, m) -> "CoxeterDiagram":
        n = len(m)
        for i in range(n):
            if m[i][i] != 1:
                raise ValueError("Coxeter matrix needs ones on the diagonal")
            for j in range(n):
                if m[i][j] != m[j][i] or (i != j and m[i][j] < 2):
                    raise ValueError("invalid Coxeter matrix")
        return cls(n, {frozenset((i, j)): m[i][j] for i in range(n) for j in range(i + 1, n) if m[i][j] > 2})

    def label(self, i: int, j: int) -> int:
        return 1 if i == j else self.edges.get(frozenset((i, j)), 2)

    def matrix(self) -> list[list[int]]:
        return [[self.label(i, j) for j in range(self.n)] for i in range(self.n)]

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.n) if j != i and self.label(i, j) > 2]

    def components(self) -> list[list[int]]:
        seen, comps = set(), []
        for s in range(self.n):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.neighbours(x):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def component_types(self) -> list[tuple[str, list[int]]]:
        """(type symbol, vertices in standard order) for each connected component."""
        return [_classify_component(self, c) for c in self.components()]

    def type_symbol(self) -> str:
        parts = sorted((t for t, _ in self.component_types()), key=_type_sort_key)
        return "x".join(parts) if parts else "trivial"

    def automorphism_free_key(self):
        return self.type_symbol()


def _type_sort_key(t: str):
    m = re.match(r"([A-Z]+)(\d*)", t)
    return (-_type_rank(t), t)


def _type_rank(t: str) -> int:
    m = re.fullmatch(r"I2\((\d+)\)", t)
    if m:
        return 2
    m = re.fullmatch(r"[A-Z]+(\d+)", t)
    return int(m.group(1)) if m else 0


def normalize_type(t: str) -> str:
    """Canonical spelling: I2(3)=A2, I2(4)=BC2, B<n>/C<n>=BC<n>, A1xA1 products sorted."""
    parts = t.split("x") if t not in ("trivial", "") else []
    out = []
    for p in parts:
        m = re.fullmatch(r"I2\((\d+)\)", p)
        if m:
            k = int(m.group(1))
            p = {2: "A1xA1", 3: "A2", 4: "BC2"}.get(k, p)
        m = re.fullmatch(r"[BC](\d+)", p)
        if m:
            p = "BC" + m.group(1)
        if p == "D3":
            p = "A3"
        if p == "D2":
            p = "A1xA1"
        out.extend(p.split("x"))
    out.sort(key=_type_sort_key)
    return "x".join(out) if out else "trivial"


def _classify_component(d: CoxeterDiagram, comp: list[int]) -> tuple[str, list[int]]:
    k = len(comp)
    if k == 1:
        return "A1", comp
    if k == 2:
        m = d.label(*comp)
        return normalize_type(f"I2({m})"), comp
    deg = {v: len(d.neighbours(v)) for v in comp}
    nedges = sum(deg.values()) // 2
    if nedges != k - 1:
        raise UnknownType("diagram contains a cycle")
    labels = [d.label(i, j) for i in comp for j in comp if i < j and d.label(i, j) > 2]
    if max(deg.values()) <= 2:
        ends = [v for v in comp if deg[v] == 1]
        path = _walk(d, ends[0])
        ls = [d.label(path[i], path[i + 1]) for i in range(k - 1)]
        if ls[-1] > 3 and ls[0] == 3:
            path.reverse()
            ls.reverse()
        if all(x == 3 for x in ls):
            return f"A{k}", path
        if ls[0] == 4 and all(x == 3 for x in ls[1:]):
            # Bourbaki numbering puts the double edge last
            return f"BC{k}", path[::-1]
        if k == 4 and ls == [3, 4, 3]:
            return "F4", path
        if ls[0] == 5 and all(x == 3 for x in ls[1:]) and k in (3, 4):
            return f"H{k}", path
        raise UnknownType(f"path diagram with labels {ls}")
    if any(x != 3 for x in labels):
        raise UnknownType("branched diagram with labels above 3")
    centres = [v for v in comp if deg[v] == 3]
    if len(centres) != 1 or max(deg.values()) > 3:
        raise UnknownType("diagram is not of finite type")
    c = centres[0]
    arms = []
    for nb in d.neighbours(c):
        arm, prev, cur = [nb], c, nb
        while True:
            nxt = [x for x in d.neighbours(cur) if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=len)
    lens = [len(a) for a in arms]
    if lens[0] == 1 and lens[1] == 1:
        # D_n: long arm from the far end towards the centre, then the two leaves
        order = arms[2][::-1] + [c, arms[0][0], arms[1][0]]
        return f"D{k}", order
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        # Bourbaki: 1 - 3 - 4 - 5 - ..., 2 attached to 4
        a2 = arms[0][0]
        left = arms[1][::-1]  # [1, 3]
        right = arms[2]
        order = [left[0], a2, left[1], c] + right
        return f"E{k}", order
    raise UnknownType(f"branched diagram with arms {lens}")


def _walk(d: CoxeterDiagram, start: int) -> list[int]:
    path, prev = [start], None
    cur = start
    while True:
        nxt = [x for x in d.neighbours(cur) if x != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def coxeter_matrix(gens: list[CycloMatrix]) -> list[list[int]]:
    n = len(gens)
    m = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = matrix_order(gens[i] @ gens[j])
    return m


def diagram_of(gens: list[CycloMatrix]) -> CoxeterDiagram:
    return CoxeterDiagram.from_matrix(coxeter_matrix(gens))


# ---------------------------------------------------------------------------
# irreducible types

_TYPE_RE = re.compile(r"(A|BC|B|C|D|E|F|H)(\d+)|I2\((\d+)\)")


@dataclass
class CoxeterRealization:
    symbol: str
    dim: int
    simple_roots: list
    seeds: list | None
    order: int


def realization(symbol: str) -> CoxeterRealization:
    m = _TYPE_RE.fullmatch(symbol)
    if not m:
        raise UnknownType(f"unknown Coxeter type {symbol!r}")
    if m.group(3):
        k = int(m.group(3))
        if k < 2:
            raise UnknownType("I2(m) needs m >= 2")
        c, s = cos_sin(1, 2 * k)
        # mirrors at angles 0 and pi/k; roots perpendicular to them
        return CoxeterRealization(f"I2({k})", 2, [(ZERO, ONE), (s, -c)], None, 2 * k)
    fam, n = m.group(1), int(m.group(2))
    if fam in ("B", "C"):
        fam = "BC"
    if fam == "A":
        if n < 1:
            raise UnknownType("A_n needs n >= 1")
        roots = [_vec(n + 1, [(i, 1), (i + 1, -1)]) for i in range(n)]
        return CoxeterRealization(f"A{n}", n + 1, roots, None, factorial(n + 1))
    if fam == "BC":
        if n < 1:
            raise UnknownType("BC_n needs n >= 1")
        roots = [_vec(n, [(i, 1), (i + 1, -1)]) for i in range(n - 1)] + [_unit(n, n - 1)]
        return CoxeterRealization(f"BC{n}", n, roots, None, 2**n * factorial(n))
    if fam == "D":
        if n < 2:
            raise UnknownType("D_n needs n >= 2")
        roots = [_vec(n, [(i, 1), (i + 1, -1)]) for i in range(n - 1)] + [_vec(n, [(n - 2, 1), (n - 1, 1)])]
        return CoxeterRealization(f"D{n}", n, roots, None, 2 ** (n - 1) * factorial(n))
    if fam == "E":
        if n not in (6, 7, 8):
            raise UnknownType("E_n needs n in 6, 7, 8")
        roots = e8_simple_roots()[:n]
        order = {6: 51840, 7: 2903040, 8: 696729600}[n]
        return CoxeterRealization(f"E{n}", 8, roots, [roots[0]], order)
    if fam == "F":
        if n != 4:
            raise UnknownType("F_n exists only for n = 4")
        roots = [_vec(4, [(1, 1), (2, -1)]), _vec(4, [(2, 1), (3, -1)]), _unit(4, 3),
                 vector([HALF, -HALF, -HALF, -HALF])]
        return CoxeterRealization("F4", 4, roots, None, 1152)
    if fam == "H":
        if n == 3:
            return CoxeterRealization("H3", 3, h3_simple_roots(), None, 120)
        if n == 4:
            simple = simple_system(h4_roots())
            gens = [reflection(r) for r in simple]
            _, order = diagram_of(gens).component_types()[0]
            simple = [simple[i] for i in order]
            return CoxeterRealization("H4", 4, simple, [simple[0]], 14400)
        raise UnknownType("H_n needs n in 3, 4")
    raise UnknownType(symbol)


def split_product(symbol: str) -> list[str]:
    parts = symbol.split("x")
    if not all(parts):
        raise UnknownType(f"malformed product {symbol!r}")
    return parts


def _block_embed(vectors, offset: int, total: int):
    return [tuple([ZERO] * offset + list(v) + [ZERO] * (total - offset - len(v))) for v in vectors]


def product_realization(symbol: str) -> CoxeterRealization:
    reals = [realization(p) for p in split_product(symbol)]
    if len(reals) == 1:
        return reals[0]
    total = sum(r.dim for r in reals)
    roots, seeds, off, order = [], [], 0, 1
    for r in reals:
        roots += _block_embed(r.simple_roots, off, total)
        own = r.seeds if r.seeds is not None else [_unit(r.dim, i) for i in range(r.dim)]
        seeds += _block_embed(own, off, total)
        off += r.dim
        order *= r.order
    return CoxeterRealization("x".join(r.symbol for r in reals), total, roots, seeds, order)


def coxeter_order(symbol: str) -> int:
    """Order of a Coxeter group from the classical closed formulas."""
    out = 1
    fixed = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400}
    for t in split_product(symbol):
        t = normalize_type(t)
        if t in fixed:
            out *= fixed[t]
        elif t.startswith("I2("):
            out *= 2 * int(t[3:-1])
        elif t.startswith("A"):
            out *= factorial(int(t[1:]) + 1)
        elif t.startswith("BC"):
            n = int(t[2:])
            out *= 2**n * factorial(n)
        elif t.startswith("D"):
            n = int(t[1:])
            out *= 2 ** (n - 1) * factorial(n)
        else:
            raise UnknownType(t)
    return out


def coxeter_order_of_matrix(m) -> int | None:
    """Order of the Coxeter group with matrix m, or None if it is infinite."""
    if not m:
        return 1
    try:
        return coxeter_order(CoxeterDiagram.from_matrix(m).type_symbol())
    except UnknownType:
        return None


def coxeter_group(symbol: str) -> MatrixGroup:
    r = product_realization(symbol)
    gens = [reflection(a) for a in r.simple_roots]
    return MatrixGroup(gens, name=f"W({symbol})", seeds=r.seeds, expected_order=r.order,
                       meta={"type": r.symbol, "simple_roots": r.simple_roots})


def reflection_group_from_roots(roots, name=None, seeds=None) -> MatrixGroup:
    return MatrixGroup([reflection(a) for a in roots], name=name, seeds=seeds)


# ---------------------------------------------------------------------------
# orientation-preserving subgroup and rotation extensions

def orientation_subgroup(W: MatrixGroup, name: str | None = None) -> MatrixGroup:
    gens = W.generators
    for g in gens:
        if g.det() != -1:
            raise ValueError("every generator must have determinant -1")
    s1 = gens[0]
    new = [s1 @ s for s in gens[1:]]
    if not new:
        new = [CycloMatrix.identity(W.dim)]
    meta = dict(W.meta)
    return MatrixGroup(new, name=name or _plus_name(W.name), seeds=W._seeds,
                       expected_order=(W.expected_order // 2 if W.expected_order else None), meta=meta)


def _plus_name(name):
    if name and name.startswith("W("):
        return "W+" + name[1:]
    return None


STAR_TYPES = {
    "A4": (3, 2, 1, 0),
    "A5": (4, 3, 2, 1, 0),
    "D4": (2, 1, 3, 0),
    "F4": (3, 2, 1, 0),
    "E6": (5, 1, 4, 3, 2, 0),
}


def diagram_extension(W: MatrixGroup, perm=None) -> CycloMatrix:
    """Orthogonal map sending simple root i to a positive multiple of simple root perm[i].

    It acts as the identity on the fixed space of W.
    """
    t = W.meta.get("type")
    roots = W.meta.get("simple_roots")
    if roots is None:
        raise ValueError("group carries no simple roots")
    if perm is None:
        if t not in STAR_TYPES:
            raise ValueError(f"no rotation diagram symmetry for type {t}")
        perm = STAR_TYPES[t]
    n = len(roots)
    gens = W.generators
    for i in range(n):
        for j in range(n):
            if matrix_order(gens[i] @ gens[j]) != matrix_order(gens[perm[i]] @ gens[perm[j]]):
                raise ValueError("permutation is not a diagram automorphism")
    images = []
    for i, a in enumerate(roots):
        b = roots[perm[i]]
        ratio = (dot(a, a) / dot(b, b)).to_fraction()
        images.append(tuple(x * _sqrt_fraction(ratio) for x in b))
    fixed = W.fixed_space
    basis = CycloMatrix.from_columns(list(roots) + list(fixed))
    target = CycloMatrix.from_columns(images + list(fixed))
    h = target @ basis.inverse()
    if not h.is_orthogonal():
        raise AssertionError("diagram extension is not orthogonal")
    return h


def _sqrt_fraction(q: Fraction) -> CyclotomicNumber:
    if q == 1:
        return ONE
    return sqrt_int(q.numerator * q.denominator) / q.denominator


def star_extension(W: MatrixGroup, perm=None, name: str | None = None) -> MatrixGroup:
    """W* = <W+, h> for the rotation h extending a diagram symmetry."""
    h = diagram_extension(W, perm)
    plus = orientation_subgroup(W)
    t = W.meta.get("type")
    return MatrixGroup(plus.generators + [h], name=name or f"W*({t})", seeds=W._seeds,
                       meta={"type": t, "extension": h})


def tilde_extension(W: MatrixGroup, perm=None, name: str | None = None) -> MatrixGroup:
    """W~ = <W, h>."""
    h = diagram_extension(W, perm)
    t = W.meta.get("type")
    return MatrixGroup(W.generators + [h], name=name or f"W~({t})", seeds=W._seeds,
                       meta={"type": t, "extension": h})
