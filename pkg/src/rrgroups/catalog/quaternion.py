"""Finite subgroups of the unit quaternions and the SO(4) groups (L/LK; R/RK)_phi."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from ..cyclofield import ONE, ZERO, CycloMatrix, CyclotomicNumber, as_cyclo, cos_sin, galois, golden_ratio, sqrt_int
from ..matgroup import MatrixGroup

Quat = tuple  # (a, b, c, d) = a + b i + c j + d k

HALF = Fraction(1, 2)


def qmul(p: Quat, q: Quat) -> Quat:
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def qconj(q: Quat) -> Quat:
    return (q[0], -q[1], -q[2], -q[3])


def qneg(q: Quat) -> Quat:
    return tuple(-x for x in q)


def quat(*xs) -> Quat:
    return tuple(as_cyclo(x) for x in xs)


QONE = quat(1, 0, 0, 0)


def _key(q: Quat):
    return tuple(q)


def cyclic(n: int) -> list[Quat]:
    out = []
    for k in range(n):
        c, s = cos_sin(k, n)
        out.append((c, s, ZERO, ZERO))
    return out


def binary_dihedral(n: int) -> list[Quat]:
    """Order 4n: the cyclic group of order 2n and its coset by j."""
    c = cyclic(2 * n)
    j = quat(0, 0, 1, 0)
    return c + [qmul(x, j) for x in c]


def binary_tetrahedral() -> list[Quat]:
    out = []
    for i in range(4):
        for s in (1, -1):
            v = [0, 0, 0, 0]
            v[i] = s
            out.append(quat(*v))
    for signs in product((HALF, -HALF), repeat=4):
        out.append(quat(*signs))
    return out


def binary_octahedral() -> list[Quat]:
    r = sqrt_int(2) / 2
    out = binary_tetrahedral()
    for i in range(4):
        for j in range(i + 1, 4):
            for si, sj in product((1, -1), repeat=2):
                v = [ZERO] * 4
                v[i], v[j] = r * si, r * sj
                out.append(tuple(v))
    return out


def binary_icosahedral() -> list[Quat]:
    t = golden_ratio()
    base = (ZERO, as_cyclo(HALF), (t - 1) * HALF, t * HALF)
    out = binary_tetrahedral()
    for p in permutations(range(4)):
        if sum(1 for a in range(4) for b in range(a + 1, 4) if p[a] > p[b]) % 2:
            continue
        for signs in product((1, -1), repeat=3):
            vals = [base[0]] + [base[k + 1] * signs[k] for k in range(3)]
            out.append(tuple(vals[p[i]] for i in range(4)))
    return out


def quaternion_group(token: str) -> list[Quat]:
    m = re.fullmatch(r"(C|D)(\d+)|T|O|I|V", token)
    if not m:
        raise ValueError(f"unknown quaternion group {token!r}")
    if token == "T":
        return binary_tetrahedral()
    if token == "O":
        return binary_octahedral()
    if token == "I":
        return binary_icosahedral()
    if token == "V":
        return binary_dihedral(2)
    n = int(m.group(2))
    if n < 1:
        raise ValueError("group index must be positive")
    return cyclic(n) if m.group(1) == "C" else binary_dihedral(n)


def closure(gens: list[Quat]) -> list[Quat]:
    out = [QONE]
    seen = {_key(QONE)}
    for x in out:
        for g in gens:
            y = qmul(x, g)
            if _key(y) not in seen:
                seen.add(_key(y))
                out.append(y)
    return out


def small_generating_set(elems: list[Quat]) -> list[Quat]:
    gens: list[Quat] = []
    span = {_key(QONE)}
    for x in sorted(elems, key=_gen_rank):
        if _key(x) not in span:
            gens.append(x)
            span = {_key(y) for y in closure(gens)}
            if len(span) == len(elems):
                break
    return gens


def _gen_rank(q: Quat):
    # prefer elements of large order so that few generators suffice
    x, k = q, 1
    while x != QONE and k < 200:
        x = qmul(x, q)
        k += 1
    return (-k,)


def icosahedral_outer(q: Quat) -> Quat:
    """Outer automorphism of the binary icosahedral group: Galois twist then i -> -i, j <-> k."""
    a, b, c, d = (galois(x, 2) for x in q)
    return (a, -b, d, c)


@dataclass
class QuaternionGroupData:
    group: list[Quat]
    normal_subgroup: list[Quat]
    token: str = ""
    sub_token: str = ""

    def __post_init__(self):
        keys = {_key(x) for x in self.group}
        gens = small_generating_set(self.group)
        if len(keys) != len(self.group) or len(closure(gens)) != len(self.group):
            raise ValueError(f"{self.token} is not a group")
        for x in self.group:
            for g in gens:
                if _key(qmul(x, g)) not in keys:
                    raise ValueError(f"{self.token} is not closed under multiplication")
        sub = {_key(x) for x in self.normal_subgroup}
        if not sub <= keys:
            raise ValueError(f"{self.sub_token} is not contained in {self.token}")
        for g in gens:
            for k in small_generating_set(self.normal_subgroup):
                if _key(qmul(qmul(g, k), qconj(g))) not in sub:
                    raise ValueError(f"{self.sub_token} is not normal in {self.token}")
        self.gens = gens
        self.index = {_key(x): i for i, x in enumerate(self.group)}
        # coset labels
        self.coset = [-1] * len(self.group)
        self.reps: list[int] = []
        for i, g in enumerate(self.group):
            if self.coset[i] >= 0:
                continue
            lab = len(self.reps)
            self.reps.append(i)
            for k in self.normal_subgroup:
                self.coset[self.index[_key(qmul(g, k))]] = lab

    def label(self, q: Quat) -> int:
        return self.coset[self.index[_key(q)]]

    @property
    def quotient_order(self) -> int:
        return len(self.reps)

    def qmul_label(self, a: int, b: int) -> int:
        return self.label(qmul(self.group[self.reps[a]], self.group[self.reps[b]]))


def quotient_isomorphisms(L: QuaternionGroupData, R: QuaternionGroupData, limit: int = 64) -> list[tuple[int, ...]]:
    """All isomorphisms L/LK -> R/RK as label maps (up to `limit`), in a deterministic order."""
    n = L.quotient_order
    if n != R.quotient_order:
        return []
    if n == 1:
        return [(0,)]
    gl = _quotient_gens(L)
    order_l = [_label_order(L, a) for a in range(n)]
    order_r = [_label_order(R, a) for a in range(n)]
    cands = [[b for b in range(n) if order_r[b] == order_l[a]] for a in gl]
    found = []
    for images in product(*cands):
        phi = _extend(L, R, gl, images)
        if phi is not None:
            found.append(phi)
            if len(found) >= limit:
                break
    return found


def _label_order(D: QuaternionGroupData, a: int) -> int:
    x, k = a, 1
    ident = D.label(QONE)
    while x != ident:
        x = D.qmul_label(x, a)
        k += 1
    return k


def _quotient_gens(D: QuaternionGroupData) -> list[int]:
    gens, span = [], {D.label(QONE)}
    for a in sorted(range(D.quotient_order), key=lambda a: -_label_order(D, a)):
        if a in span:
            continue
        gens.append(a)
        span = {D.label(QONE)}
        frontier = list(span)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = D.qmul_label(x, g)
                if y not in span:
                    span.add(y)
                    frontier.append(y)
        if len(span) == D.quotient_order:
            break
    return gens


def _extend(L, R, gens, images):
    ident_l, ident_r = L.label(QONE), R.label(QONE)
    phi = {ident_l: ident_r}
    frontier = [ident_l]
    while frontier:
        x = frontier.pop()
        for g, im in zip(gens, images):
            y = L.qmul_label(x, g)
            val = R.qmul_label(phi[x], im)
            if y in phi:
                if phi[y] != val:
                    return None
            else:
                phi[y] = val
                frontier.append(y)
    # consistency along every Cayley-graph edge makes phi a homomorphism
    if len(set(phi.values())) != L.quotient_order:
        return None
    return tuple(phi[a] for a in range(L.quotient_order))


def screw_matrix(l: Quat, r: Quat) -> CycloMatrix:
    """Matrix of q -> l q r^-1 in the basis 1, i, j, k."""
    rinv = qconj(r)
    cols = []
    for e in ((ONE, ZERO, ZERO, ZERO), (ZERO, ONE, ZERO, ZERO), (ZERO, ZERO, ONE, ZERO), (ZERO, ZERO, ZERO, ONE)):
        cols.append(qmul(qmul(l, e), rinv))
    return CycloMatrix.from_columns(cols)


def is_screw_rotation(l: Quat, r: Quat) -> bool:
    """Rotation criterion: Re(l) = Re(r) and not +-1."""
    return l[0] == r[0] and l[0] not in (ONE, -ONE)


_SO4 = re.compile(r"SO4\(([A-Z]\d*)/([A-Z]\d*);([A-Z]\d*)/([A-Z]\d*)(?::([a-z]+\d*))?\)")


def parse_so4(name: str):
    m = _SO4.fullmatch(name)
    if not m:
        raise ValueError(f"cannot parse SO(4) name {name!r}")
    return m.groups()


def so4_group(l_tok: str, lk_tok: str, r_tok: str, rk_tok: str, phi_id: str | None = None) -> MatrixGroup:
    L = QuaternionGroupData(quaternion_group(l_tok), quaternion_group(lk_tok), l_tok, lk_tok)
    R = QuaternionGroupData(quaternion_group(r_tok), quaternion_group(rk_tok), r_tok, rk_tok)
    neg = qneg(QONE)
    for D in (L, R):
        if _key(neg) not in D.index:
            raise ValueError(f"-1 is missing from {D.token}")
    if L.quotient_order != R.quotient_order:
        raise ValueError("quotients have different orders")
    phi = _choose_phi(L, R, phi_id)
    gens = []
    for l in L.gens:
        target = phi[L.label(l)]
        r = R.group[R.reps[target]]
        gens.append(screw_matrix(l, r))
    for r in small_generating_set(R.normal_subgroup):
        gens.append(screw_matrix(QONE, r))
    for l in small_generating_set(L.normal_subgroup):
        gens.append(screw_matrix(l, QONE))
    order = len(L.group) * len(R.normal_subgroup) // 2
    name = f"SO4({l_tok}/{lk_tok};{r_tok}/{rk_tok}" + (f":{phi_id}" if phi_id else "") + ")"
    return MatrixGroup(gens or [CycloMatrix.identity(4)], name=name, expected_order=order,
                       meta={"phi": phi, "left": L, "right": R})


def _choose_phi(L, R, phi_id):
    n = L.quotient_order
    if phi_id is None:
        phi_id = "id" if (L.token == R.token and L.sub_token == R.sub_token) else "auto0"
    if phi_id == "id":
        if L.token != R.token or L.sub_token != R.sub_token:
            raise ValueError("identity quotient map needs equal data on both sides")
        return tuple(R.label(L.group[L.reps[a]]) for a in range(n))
    if phi_id == "galois":
        if L.token != "I" or R.token != "I":
            raise ValueError("the Galois quotient map is defined for the binary icosahedral group")
        phi = tuple(R.label(icosahedral_outer(L.group[L.reps[a]])) for a in range(n))
        gens = _quotient_gens(L)
        if _extend(L, R, gens, [phi[a] for a in gens]) != phi:
            raise ValueError("Galois twist does not induce an isomorphism of the quotients")
        return phi
    m = re.fullmatch(r"auto(\d+)", phi_id)
    if m:
        isos = quotient_isomorphisms(L, R)
        k = int(m.group(1))
        if k >= len(isos):
            raise ValueError(f"only {len(isos)} quotient isomorphisms available")
        return isos[k]
    raise ValueError(f"unknown quotient map id {phi_id!r}")
