"""Exceptional rotation groups: R5(A5), R6(PSL2(7)), the tensor group H, the group L and two E8 root systems."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from ..cyclofield import ONE, ZERO, CycloMatrix, as_cyclo, projector, sqrt_int, vector
from ..matgroup import MatrixGroup
from .coxeter import reflection, simple_system
from .monomial import H_CYCLES, monomial, signed_perm_matrix

HALF = Fraction(1, 2)
L_ORDER = 2580480


def projective_line_group() -> MatrixGroup:
    """A5 = PSL2(5) permuting the six points 0..4, infinity of the projective line over F5."""
    inf = 5

    def act(f):
        return signed_perm_matrix(6, {x: (f(x), 1) for x in range(6)})

    def translate(x):
        return inf if x == inf else (x + 1) % 5

    def invert(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, -1, 5)) % 5

    G = MatrixGroup([act(translate), act(invert)], name="R5(A5)", expected_order=60)
    # the involutions of A5 act as double transpositions, i.e. as rotations
    for e in G.elements():
        if e.order() == 2 and e.fixed_codim() != 2:
            raise AssertionError("an involution of the projective line group is not a rotation")
    return G


def r6_psl27() -> MatrixGroup:
    return MatrixGroup([monomial(c, 7) for c in H_CYCLES[7]], name="R6(PSL27)", expected_order=168)


def minus_identity_on_essential(G: MatrixGroup) -> CycloMatrix:
    """-1 on the essential subspace of G, +1 on its fixed space."""
    n = G.dim
    p = projector(G.fixed_space, n)
    return p.scale(2) - CycloMatrix.identity(n)


# ---------------------------------------------------------------------------
# the tensor cube of the dihedral group of order 8

DIHEDRAL_A = CycloMatrix([[1, 0], [0, -1]])
DIHEDRAL_B = CycloMatrix([[0, 1], [1, 0]])
I2 = CycloMatrix.identity(2)


def tensor3(a: CycloMatrix, b: CycloMatrix, c: CycloMatrix) -> CycloMatrix:
    return a.kron(b).kron(c)


def factor_generators() -> list[CycloMatrix]:
    """a and b placed in each of the three tensor factors, in the order a1 b1 a2 b2 a3 b3."""
    out = []
    for pos in range(3):
        for g in (DIHEDRAL_A, DIHEDRAL_B):
            f = [I2, I2, I2]
            f[pos] = g
            out.append(tensor3(*f))
    return out


def tensor_group() -> MatrixGroup:
    return MatrixGroup(factor_generators(), name="Htensor", expected_order=128)


def eps(i: int) -> tuple:
    """Basis vector epsilon_i (1-based) of R^2 x R^2 x R^2 ordered lexicographically."""
    return tuple(ONE if j == i - 1 else ZERO for j in range(8))


def plane_rotation(u, v) -> CycloMatrix:
    """The involutive rotation acting as -1 on span(u, v) and as the identity on its complement."""
    return CycloMatrix.identity(len(u)) - projector([vector(u), vector(v)], len(u)).scale(2)


def normalizing_reflection() -> CycloMatrix:
    """Reflection s with s(sqrt2 e1) = e1 + e2, normalizing the dihedral group of order 8."""
    r = sqrt_int(2) / 2
    return CycloMatrix([[r, r], [r, -r]])


def nu(k: int) -> CycloMatrix:
    s = normalizing_reflection()
    f = [I2, I2, I2]
    f[k - 1] = s
    return tensor3(*f)


def _add(*vs):
    return tuple(sum((v[i] for v in vs), ZERO) for i in range(len(vs[0])))


def l_planes() -> dict[str, tuple]:
    alpha1, alpha2 = _add(eps(1), eps(3)), _add(eps(2), eps(4))
    beta1, beta2 = _add(eps(1), eps(2)), _add(eps(5), eps(6))
    return {"r": (alpha1, alpha2), "r1": (eps(1), eps(5)), "r2": (beta1, beta2)}


class WittSpace:
    """H/{+-1} as F2^6 with the quadratic form Q(+-h) = 0 if h^2 = I and 1 if h^2 = -I.

    Vectors are 6-bit integers; bit k selects the k-th generator from `factor_generators`.
    """

    def __init__(self, generators: list[CycloMatrix] | None = None):
        self.generators = generators or factor_generators()
        n = len(self.generators)
        self.rank = n
        self.dim = self.generators[0].shape[0]
        ident = CycloMatrix.identity(self.dim)
        self.elements: list[CycloMatrix] = []
        for x in range(1 << n):
            m = ident
            for k in range(n):
                if x >> k & 1:
                    m = m @ self.generators[k]
            self.elements.append(m)
        self._lookup = {}
        for x, m in enumerate(self.elements):
            self._lookup[m] = x
            self._lookup[-m] = x
        if len(self._lookup) != 2 << n:
            raise ValueError("generators do not give an elementary abelian quotient by +-1")
        self.q = []
        for m in self.elements:
            sq = m @ m
            if sq == ident:
                self.q.append(0)
            elif sq == -ident:
                self.q.append(1)
            else:
                raise ValueError("element squares are not +-1")

    def coordinates(self, m: CycloMatrix) -> int:
        return self._lookup[m]

    def polar(self, x: int, y: int) -> int:
        return self.q[x ^ y] ^ self.q[x] ^ self.q[y]

    def is_nondegenerate(self) -> bool:
        return all(any(self.polar(x, y) for y in range(1 << self.rank)) for x in range(1, 1 << self.rank))

    def singular_subspaces(self, dim: int) -> list[tuple[int, ...]]:
        """All singular subspaces of the given dimension, each as the sorted tuple of its nonzero vectors."""
        if dim == 0:
            return [()]
        found = {()}
        layer = {frozenset()}
        singular = [x for x in range(1, 1 << self.rank) if self.q[x] == 0]
        for _ in range(dim):
            nxt = set()
            for S in layer:
                for v in singular:
                    if v in S:
                        continue
                    new = set(S) | {v} | {v ^ s for s in S}
                    if all(self.q[w] == 0 for w in new):
                        nxt.add(frozenset(new))
            layer = nxt
        return sorted(tuple(sorted(S)) for S in layer) if layer else []

    def singular_count(self, dim: int) -> int:
        return len(self.singular_subspaces(dim))

    def witt_index(self) -> int:
        d = 0
        while self.singular_subspaces(d + 1):
            d += 1
        return d

    def maximal_singular_list(self) -> list[tuple[int, ...]]:
        return self.singular_subspaces(self.witt_index())

    def weight_spaces(self, subspace: tuple[int, ...]) -> list[list[tuple]]:
        """Common eigenspaces of the preimage of a singular subspace, as lists of basis vectors."""
        basis = _f2_basis(subspace)
        mats = [self.elements[x] for x in basis]
        ident = CycloMatrix.identity(self.dim)
        out = []
        for signs in product((1, -1), repeat=len(mats)):
            rows = []
            for m, s in zip(mats, signs):
                rows.extend((m - ident.scale(s)).rows)
            ker = CycloMatrix(rows).kernel() if rows else [tuple(r) for r in ident.rows]
            if ker:
                out.append(ker)
        return out

    def weight_collection(self, size: int) -> list[list[tuple]]:
        """K_size: weight spaces of dimension `size` over all singular subspaces of the matching dimension."""
        i = {4: 1, 2: 2, 1: 3}[size]
        return [w for S in self.singular_subspaces(i) for w in self.weight_spaces(S)]

    def rotation_set_r2(self) -> list[CycloMatrix]:
        return [plane_rotation(*w) for w in self.weight_collection(2)]

    def act(self, g: CycloMatrix) -> list[int]:
        """Conjugation action of a normalizing element on the generators, as coordinate vectors."""
        ginv = g.inverse()
        return [self.coordinates(g @ m @ ginv) for m in self.generators]

    def image(self, action: list[int], x: int) -> int:
        y = 0
        for k in range(self.rank):
            if x >> k & 1:
                y ^= action[k]
        return y


def _f2_basis(vectors) -> list[int]:
    basis: list[int] = []
    span = {0}
    for v in vectors:
        if v not in span:
            basis.append(v)
            span |= {v ^ s for s in span}
    return basis


@lru_cache(maxsize=1)
def group_l() -> MatrixGroup:
    """L = <H, r, r1, r2>, order-checked.

    If the order falls short, rotations in planes spanned by two one-dimensional weight
    spaces of a maximal singular subspace are added one at a time until it is reached.
    """
    planes = l_planes()
    gens = factor_generators() + [plane_rotation(*planes[k]) for k in ("r", "r1", "r2")]
    G = MatrixGroup(gens, name="L")
    if G.order() != L_ORDER:
        for extra in _weight_pair_rotations():
            if G.contains(extra):
                continue
            gens.append(extra)
            G = MatrixGroup(gens, name="L")
            if G.order() >= L_ORDER:
                break
    if G.order() != L_ORDER:
        raise AssertionError(f"L has order {G.order()}, expected {L_ORDER}")
    return MatrixGroup(gens, name="L", expected_order=L_ORDER, meta={"augmented": len(gens) - 9})


def _weight_pair_rotations():
    W = WittSpace()
    for S in W.maximal_singular_list():
        lines = [w[0] for w in W.weight_spaces(S)]
        for u, v in combinations(lines, 2):
            yield plane_rotation(u, v)


# ---------------------------------------------------------------------------
# two E8 root systems

def root_system_r1() -> list[tuple]:
    out = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [ZERO] * 8
            v[i], v[j] = as_cyclo(si), as_cyclo(sj)
            out.append(tuple(v))
    for signs in product((1, -1), repeat=8):
        if sum(1 for s in signs if s > 0) % 2 == 0:
            out.append(tuple(as_cyclo(Fraction(s, 2)) for s in signs))
    return out


def root_system_r2() -> list[tuple]:
    out = []
    for i in range(8):
        for s in (1, -1):
            v = [ZERO] * 8
            v[i] = as_cyclo(s)
            out.append(tuple(v))
    odd = (1, 3, 5, 7)
    for i, j in combinations(odd, 2):
        idx = (i, i + 1, j, j + 1)
        for signs in product((1, -1), repeat=4):
            v = [ZERO] * 8
            for k, s in zip(idx, signs):
                v[k - 1] = as_cyclo(Fraction(s, 2))
            out.append(tuple(v))
    for idx in product((1, 2), (3, 4), (5, 6), (7, 8)):
        if sum(idx) % 2:
            continue
        for signs in product((1, -1), repeat=4):
            v = [ZERO] * 8
            for k, s in zip(idx, signs):
                v[k - 1] = as_cyclo(Fraction(s, 2))
            out.append(tuple(v))
    return out


def root_group(roots: list[tuple], name: str) -> MatrixGroup:
    simple = simple_system(roots)
    return MatrixGroup([reflection(a) for a in simple], name=name, seeds=[simple[0]], expected_order=696729600,
                       meta={"simple_roots": simple})


def w_r1() -> MatrixGroup:
    return root_group(root_system_r1(), "WR1")


def w_r2() -> MatrixGroup:
    return root_group(root_system_r2(), "WR2")


def root_set_key(roots) -> frozenset:
    return frozenset(tuple(x.to_fraction() if x.is_rational() else (x.conductor, x.num, x.den) for x in r)
                     for r in roots)


def is_closed_root_system(roots) -> bool:
    keys = root_set_key(roots)
    for a in roots:
        s = reflection(a)
        for b in roots:
            if root_set_key([s.apply(b)]).isdisjoint(keys):
                return False
    return True


def _norm2(v):
    return sum((x * x for x in v), ZERO)


def same_roots_up_to_scale(A, B) -> bool:
    """A = c B as sets for some c > 0 (c is fixed by comparing squared lengths)."""
    if len(A) != len(B):
        return False
    if not A:
        return True
    ratio = _norm2(A[0]) / _norm2(B[0])
    if not ratio.is_rational() or ratio.to_fraction() <= 0:
        return False
    c = sqrt_int(ratio.to_fraction().numerator) / sqrt_int(ratio.to_fraction().denominator)
    return root_set_key(A) == root_set_key([tuple(x * c for x in v) for v in B])


def swapping_element(L: MatrixGroup | None = None) -> tuple[str, CycloMatrix]:
    """An element of N outside L mapping R1 onto R2 (up to the scale of the displayed roots)."""
    L = L or group_l()
    R1, R2 = root_system_r1(), root_system_r2()
    for name, g in (("nu2", nu(2)), ("nu3", nu(3)), ("nu2nu3", nu(2) @ nu(3))):
        if not L.contains(g) and same_roots_up_to_scale([g.apply(v) for v in R1], R2):
            return name, g
    raise LookupError("no candidate element maps R1 onto R2")
