"""Finite orthogonal matrix groups through faithful permutation actions on vector orbits."""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import perm as P
from .cyclofield import (
    ONE,
    ZERO,
    CycloMatrix,
    CyclotomicNumber,
    as_cyclo,
    kernel_basis,
    rref,
    vector,
    vector_key,
)

DEFAULT_ORBIT_CAP = 10**6


def max_elements() -> int:
    """Enumeration cap: RRG_MAX_ELEMENTS or 10**7."""
    return int(os.environ.get("RRG_MAX_ELEMENTS", 10**7))


class OrbitOverflow(RuntimeError):
    pass


class CapExceeded(RuntimeError):
    pass


class NotInGroup(ValueError):
    pass


def standard_basis(n: int) -> list[tuple]:
    return [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]


def _key(v, conductor: int):
    return vector_key(v, conductor)


def orbit_of(generators: Sequence[CycloMatrix], v, cap: int = DEFAULT_ORBIT_CAP) -> list[tuple]:
    v = vector(v)
    n = lcm(*(g.conductor for g in generators), *(x.conductor for x in v)) if generators else 1
    seen = {_key(v, n): 0}
    out = [v]
    for x in out:
        for g in generators:
            y = g.apply(x)
            k = _key(y, n)
            if k not in seen:
                seen[k] = len(out)
                out.append(y)
                if len(out) > cap:
                    raise OrbitOverflow(f"orbit exceeds cap {cap}")
    return out


# ---------------------------------------------------------------------------
# modular reduction used by the bulk element sweeps

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ModularImage:
    """Reduction Z[zeta_N] -> F_p sending zeta_N to a fixed primitive N-th root w."""

    p: int
    n: int
    w: int

    @classmethod
    def for_conductor(cls, n: int, below: int = 2**31 - 1) -> "ModularImage":
        # largest prime p < 2^31 with p = 1 mod n (p^2 fits into int64)
        q = below - ((below - 1) % n)
        while not _is_prime(q):
            q -= n
        for a in range(2, q):
            w = pow(a, (q - 1) // n, q)
            if all(pow(w, n // f, q) != 1 for f in _prime_factors(n)) if n > 1 else w == 1:
                return cls(q, n, w)
        raise AssertionError("no primitive root found")

    def reduce(self, a: CyclotomicNumber) -> int:
        nums = a.promote(self.n) if self.n % a.conductor == 0 else None
        if nums is None:
            raise ValueError("conductor mismatch in modular reduction")
        p = self.p
        val = 0
        wk = 1
        for c in nums:
            if c:
                val += c * wk
            wk = wk * self.w % p
        if a.den % p == 0:
            raise ZeroDivisionError("denominator divisible by the modulus")
        return val * pow(a.den, -1, p) % p


def batched_rank_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks over F_p of a stack of matrices of shape (B, r, c) with entries in [0, p)."""
    a = mats.astype(np.int64) % p
    b, r, c = a.shape
    rank = np.zeros(b, dtype=np.int64)
    rows = np.arange(r)
    ar = np.arange(b)
    for col in range(c):
        if r == 0:
            break
        colv = a[:, :, col]
        cand = (colv != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        idx = ar[has]
        pr, rr = piv[has], rank[has]
        # swap pivot row into position `rank`
        tmp = a[idx, pr, :].copy()
        a[idx, pr, :] = a[idx, rr, :]
        a[idx, rr, :] = tmp
        pivrow = a[idx, rr, :]
        inv = _modinv_vec(pivrow[:, col], p)
        pivrow = pivrow * inv[:, None] % p
        a[idx, rr, :] = pivrow
        sub = a[idx]
        factors = sub[:, :, col].copy()
        below = rows[None, :] > rr[:, None]
        factors = np.where(below, factors, 0)
        sub = (sub - (factors[:, :, None] * pivrow[:, None, :]) % p) % p
        a[idx] = sub
        rank[has] += 1
    return rank


def _modinv_vec(x: np.ndarray, p: int) -> np.ndarray:
    result = np.ones_like(x)
    base = x % p
    e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


# ---------------------------------------------------------------------------

class PointDomain:
    """Finite set of vectors permuted faithfully by a group (and all its subgroups)."""

    def __init__(self, points: Sequence[tuple], conductor: int, dim: int, fixed_basis: Sequence[tuple]):
        self.points = list(points)
        self.conductor = conductor
        self.dim = dim
        self.index = {_key(v, conductor): i for i, v in enumerate(self.points)}
        full_rank = len(rref([list(v) for v in self.points])[1]) if self.points else 0
        # pick independent points greedily, in point order
        chosen: list[int] = []
        acc: list[list] = []
        r = 0
        for i, v in enumerate(self.points):
            trial = acc + [list(v)]
            rk = len(rref(trial)[1])
            if rk > r:
                acc, r = trial, rk
                chosen.append(i)
                if r == full_rank:
                    break
        self.basis_idx = chosen
        self.fixed_basis = list(fixed_basis)
        cols = [self.points[i] for i in chosen]
        extra = []
        for f in self.fixed_basis:
            trial = [list(c) for c in cols + extra] + [list(f)]
            if len(rref(trial)[1]) > len(cols) + len(extra):
                extra.append(f)
        if len(cols) + len(extra) != dim:
            raise ValueError("points and fixed space do not span the ambient space")
        self.extra = extra
        self._binv = CycloMatrix.from_columns(cols + extra).inverse()
        self._modp: dict[int, np.ndarray] = {}
        self._wide: dict[int, dict] = {}

    def __len__(self):
        return len(self.points)

    def _index_at(self, n: int) -> dict:
        if n == self.conductor:
            return self.index
        if n not in self._wide:
            self._wide[n] = {_key(v, n): i for i, v in enumerate(self.points)}
        return self._wide[n]

    def lookup(self, v) -> int | None:
        n = lcm(self.conductor, *(x.conductor for x in v))
        return self._index_at(n).get(_key(v, n))

    def perm_of(self, g: CycloMatrix) -> P.Perm | None:
        """Permutation induced by g, or None if g does not preserve the point set."""
        out = []
        for v in self.points:
            i = self.lookup(g.apply(v))
            if i is None:
                return None
            out.append(i)
        if len(set(out)) != len(out):
            return None
        return tuple(out)

    def matrix_of(self, perm: P.Perm) -> CycloMatrix:
        cols = [self.points[perm[i]] for i in self.basis_idx] + list(self.extra)
        return CycloMatrix.from_columns(cols) @ self._binv

    def modp(self, red: ModularImage) -> np.ndarray:
        if red.p not in self._modp:
            arr = np.array([[red.reduce(x) for x in v] for v in self.points], dtype=np.int64)
            self._modp[red.p] = arr.reshape(len(self.points), self.dim)
        return self._modp[red.p]

    def fixed_codim_exact(self, perm: P.Perm) -> int:
        """rank(g - I) computed exactly from the images of the basis points."""
        rows = []
        for i in self.basis_idx:
            a, b = self.points[perm[i]], self.points[i]
            rows.append([x - y for x, y in zip(a, b)])
        return len(rref(rows)[1]) if rows else 0


@dataclass
class PermImage:
    points: list
    perm_generators: list
    base: list
    strong_generators: list
    transversal_sizes: list


class GroupElement:
    __slots__ = ("group", "perm", "word", "_matrix")

    def __init__(self, group: "MatrixGroup", perm: P.Perm, matrix: CycloMatrix | None = None, word=None):
        self.group, self.perm, self.word, self._matrix = group, perm, word, matrix

    @property
    def matrix(self) -> CycloMatrix:
        if self._matrix is None:
            self._matrix = self.group.domain.matrix_of(self.perm)
        return self._matrix

    def order(self) -> int:
        return P.perm_order(self.perm)

    def fixed_codim(self) -> int:
        return self.group.domain.fixed_codim_exact(self.perm)

    def __repr__(self):
        return f"GroupElement(order={self.order()})"


class MatrixGroup:
    """Finitely generated orthogonal matrix group with exact entries."""

    def __init__(
        self,
        generators: Iterable[CycloMatrix],
        name: str | None = None,
        seeds: Sequence | None = None,
        expected_order: int | None = None,
        domain: PointDomain | None = None,
        perms: Sequence[P.Perm] | None = None,
        dim: int | None = None,
        check: bool = True,
        meta: dict | None = None,
    ):
        gens = [g if isinstance(g, CycloMatrix) else CycloMatrix(g) for g in generators]
        if not gens and dim is None:
            raise ValueError("a group needs generators or an explicit dimension")
        self.dim = gens[0].nrows if gens else dim
        for g in gens:
            if g.shape != (self.dim, self.dim):
                raise ValueError("generator shape mismatch")
            if check and not g.is_orthogonal():
                raise ValueError("generators must be orthogonal")
        self.generators = gens
        self.name = name
        self.expected_order = expected_order
        self.meta = dict(meta or {})
        self.conductor = lcm(1, *(g.conductor for g in gens))
        self._seeds = [vector(s) for s in seeds] if seeds is not None else None
        self._domain = domain
        self._perms = list(perms) if perms is not None else None
        self._chain: P.StabilizerChain | None = None
        self._lock = threading.RLock()

    def __repr__(self):
        return f"MatrixGroup({self.name or '?'}, dim={self.dim}, gens={len(self.generators)})"

    # basic geometry ---------------------------------------------------------
    @cached_property
    def fixed_space(self) -> list[tuple]:
        rows = []
        for g in self.generators:
            rows.extend((g - CycloMatrix.identity(self.dim)).rows)
        return kernel_basis(rows, self.dim) if rows else standard_basis(self.dim)

    @property
    def essential_dim(self) -> int:
        return self.dim - len(self.fixed_space)

    def orbit(self, v, cap: int = DEFAULT_ORBIT_CAP) -> list[tuple]:
        if len(v) != self.dim:
            raise ValueError("vector dimension mismatch")
        return orbit_of(self.generators, v, cap)

    # permutation image ------------------------------------------------------
    @property
    def domain(self) -> PointDomain:
        if self._domain is None:
            with self._lock:
                if self._domain is None:
                    self._domain = self._build_domain()
        return self._domain

    def _build_domain(self) -> PointDomain:
        seeds = self._seeds if self._seeds is not None else standard_basis(self.dim)
        n = self.conductor
        for s in seeds:
            for x in s:
                n = lcm(n, x.conductor)
        points: list[tuple] = []
        seen: set = set()
        for s in seeds:
            if all(x.is_zero() for x in s) or _key(s, n) in seen:
                continue
            for v in orbit_of(self.generators, s):
                k = _key(v, n)
                if k not in seen:
                    seen.add(k)
                    points.append(v)
        try:
            return PointDomain(points, n, self.dim, self.fixed_space)
        except ValueError:
            if self._seeds is None:
                raise
            # supplied seeds were too thin: fall back to the standard basis as well
            self._seeds = self._seeds + standard_basis(self.dim)
            return self._build_domain()

    @property
    def perm_generators(self) -> list[P.Perm]:
        if self._perms is None:
            perms = []
            for g in self.generators:
                p = self.domain.perm_of(g)
                if p is None:
                    raise AssertionError("generator does not permute its own orbit points")
                perms.append(p)
            self._perms = perms
        return self._perms

    @property
    def chain(self) -> P.StabilizerChain:
        if self._chain is None:
            perms = self.perm_generators
            with self._lock:
                if self._chain is None:
                    self._chain = P.StabilizerChain(len(self.domain), perms)
        return self._chain

    def perm_image(self) -> PermImage:
        c = self.chain
        return PermImage(self.domain.points, self.perm_generators, list(c.base), c.strong_generators(),
                         c.transversal_sizes())

    # queries ----------------------------------------------------------------
    def order(self) -> int:
        return self.chain.order()

    def perm_of(self, g: CycloMatrix) -> P.Perm | None:
        if g.shape != (self.dim, self.dim):
            return None
        return self.domain.perm_of(g)

    def contains(self, g: CycloMatrix) -> bool:
        p = self.perm_of(g)
        if p is None:
            return False
        # g permutes the points; it also has to act trivially on the fixed complement
        if self.domain.matrix_of(p) != g:
            return False
        return self.chain.contains(p)

    def subgroup(self, matrices: Sequence[CycloMatrix] = (), perms: Sequence[P.Perm] | None = None,
                 name: str | None = None) -> "MatrixGroup":
        """Subgroup sharing this group's point domain; every element must lie in this group."""
        if perms is None:
            perms = []
            for g in matrices:
                p = self.perm_of(g)
                if p is None or not self.chain.contains(p):
                    raise NotInGroup("element outside the group")
                perms.append(p)
        else:
            perms = list(perms)
            matrices = [self.domain.matrix_of(p) for p in perms]
        return MatrixGroup(list(matrices), name=name, domain=self.domain, perms=perms, dim=self.dim,
                           check=False)

    def generated_order(self, S: Sequence[CycloMatrix]) -> int:
        if not S:
            return 1
        # greedy: only elements outside the current subgroup become generators
        sub = None
        for g in S:
            if sub is None or not sub.contains(g):
                chosen = ([] if sub is None else sub.generators) + [g]
                sub = self.subgroup(chosen)
                if sub.order() == self.order():
                    break
        return sub.order()

    def is_subgroup_of(self, other: "MatrixGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: "MatrixGroup") -> bool:
        return self.order() == other.order() and self.is_subgroup_of(other)

    def elements(self, cap: int | None = None) -> Iterator[GroupElement]:
        cap = max_elements() if cap is None else cap
        n = self.order()
        if n > cap:
            raise CapExceeded(f"order {n} exceeds enumeration cap {cap}")
        c = self.chain
        for i in range(n):
            yield GroupElement(self, c.element(i))

    def element_table(self, cap: int | None = None) -> "ElementTable":
        cap = max_elements() if cap is None else cap
        if self.order() > cap:
            raise CapExceeded(f"order {self.order()} exceeds enumeration cap {cap}")
        return ElementTable(self)

    def identity_element(self) -> GroupElement:
        return GroupElement(self, P.identity(len(self.domain)), CycloMatrix.identity(self.dim))

    def conjugacy_class_reps(self, cap: int | None = None) -> list[tuple[GroupElement, int]]:
        table = self.element_table(cap)
        reps, sizes = table.conjugacy_classes()
        return [(GroupElement(self, table.perm(int(r))), int(s)) for r, s in zip(reps, sizes)]

    def normal_closure(self, S: Sequence[CycloMatrix], name: str | None = None) -> "MatrixGroup":
        perms = []
        for g in S:
            p = self.perm_of(g)
            if p is None or not self.chain.contains(p):
                raise NotInGroup("element outside the group")
            if not P.is_identity(p):
                perms.append(p)
        return self.normal_closure_perms(perms, name)

    def normal_closure_perms(self, perms: Sequence[P.Perm], name: str | None = None) -> "MatrixGroup":
        gens = list(dict.fromkeys(perms))
        deg = len(self.domain)
        chain = P.StabilizerChain(deg, gens)
        conj = [(g, P.inverse(g)) for g in self.perm_generators]
        i = 0
        while i < len(gens):
            x = gens[i]
            i += 1
            for g, gi in conj:
                y = P.mul(P.mul(g, x), gi)
                if not chain.contains(y):
                    gens.append(y)
                    chain = P.StabilizerChain(deg, gens)
        sub = self.subgroup(perms=gens, name=name)
        sub._chain = chain if gens else P.StabilizerChain(deg, [])
        return sub

    def is_normal_subgroup(self, sub: "MatrixGroup") -> bool:
        if not sub.is_subgroup_of(self):
            return False
        for h in sub.generators:
            for g in self.generators:
                if not sub.contains(g @ h @ g.transpose()):
                    return False
        return True

    def pointwise_stabilizer(self, U: Sequence, cap: int = 10**5) -> "MatrixGroup":
        U = [vector(u) for u in U if not all(as_cyclo(x).is_zero() for x in u)]
        if not U:
            return self
        dom = self.domain
        n = dom.conductor
        for u in U:
            for x in u:
                n = lcm(n, x.conductor)
        extra: list[tuple] = []
        seen = {_key(v, n) for v in dom.points}
        base = []
        try:
            for u in U:
                k = _key(u, n)
                if k in seen:
                    idx = next(i for i, v in enumerate(dom.points + extra) if _key(v, n) == k)
                    base.append(idx)
                    continue
                orb = orbit_of(self.generators, u, cap)
                base.append(len(dom.points) + len(extra))
                for v in orb:
                    kv = _key(v, n)
                    if kv not in seen:
                        seen.add(kv)
                        extra.append(v)
        except OrbitOverflow:
            return self._stabilizer_by_filter(U)
        if not extra:
            pts = dom.points
            ext_perms = self.perm_generators
            ext_dom = dom
        else:
            pts = dom.points + extra
            ext_dom = PointDomain(pts, n, self.dim, self.fixed_space)
            ext_perms = [ext_dom.perm_of(g) for g in self.generators]
        chain = P.StabilizerChain(len(pts), ext_perms, base=base)
        lvl = len(base)
        gens = chain.level_gens[lvl] if lvl < len(chain.level_gens) else []
        mats = [ext_dom.matrix_of(g) for g in gens]
        return self.subgroup(mats, name=None)

    def _stabilizer_by_filter(self, U) -> "MatrixGroup":
        keep = []
        for e in self.elements():
            m = e.matrix
            if all(m.apply(u) == tuple(u) for u in U):
                keep.append(e.perm)
        return self.subgroup(perms=keep)

    # serialization ----------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "conductor": self.conductor,
            "generators": [g.to_json() for g in self.generators],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MatrixGroup":
        gens = [CycloMatrix.from_json(m) for m in obj["generators"]]
        dim = int(obj["dim"])
        if not gens:
            return cls([CycloMatrix.identity(dim)], name=obj.get("name"))
        return cls(gens, name=obj.get("name"))


def trivial_group(dim: int, name: str | None = None) -> MatrixGroup:
    return MatrixGroup([CycloMatrix.identity(dim)], name=name)


# ---------------------------------------------------------------------------

class ElementTable:
    """Vectorised view of all elements of a group, indexed in transversal order."""

    TAIL_BUDGET = 3_000_000

    def __init__(self, group: MatrixGroup):
        self.group = group
        c = group.chain
        self.chain = c
        self.deg = len(group.domain)
        self.order = c.order()
        self.sizes = c.transversal_sizes()
        self.trans = [np.array([c.trans[l][x] for x in c.orbits[l]], dtype=np.int32).reshape(len(c.orbits[l]), self.deg)
                      for l in range(len(c.base))]
        self.tinv = [np.array([c.tinv[l][x] for x in c.orbits[l]], dtype=np.int32).reshape(len(c.orbits[l]), self.deg)
                     for l in range(len(c.base))]
        self.pos = []
        for l in range(len(c.base)):
            arr = np.full(self.deg, -1, dtype=np.int64)
            arr[np.array(c.orbits[l], dtype=np.int64)] = np.arange(len(c.orbits[l]))
            self.pos.append(arr)
        self.base = np.array(c.base, dtype=np.int64)

    def perm(self, index: int) -> P.Perm:
        return self.chain.element(index)

    def _split(self, width: int) -> int:
        """Number of leading levels enumerated outside the vectorised tail."""
        t = 0
        tail = self.order
        while t < len(self.sizes) and tail * max(width, 1) > self.TAIL_BUDGET:
            tail //= self.sizes[t]
            t += 1
        return t

    def _tail(self, t: int, pts: np.ndarray) -> np.ndarray:
        a = pts[None, :].astype(np.int32)
        for l in range(len(self.sizes) - 1, t - 1, -1):
            a = self.trans[l][:, a].reshape(-1, pts.size)
        return a

    def chunks(self, pts: Sequence[int]) -> Iterator[tuple[int, np.ndarray]]:
        """Yield (start index, images of pts under elements start..) chunk by chunk."""
        pts = np.asarray(pts, dtype=np.int64)
        t = self._split(len(pts))
        tail = self._tail(t, pts)
        ntail = tail.shape[0]
        nprefix = self.order // ntail
        for pi in range(nprefix):
            digits = []
            rest = pi
            for l in range(t - 1, -1, -1):
                rest, d = divmod(rest, self.sizes[l])
                digits.append(d)
            digits.reverse()
            g = np.arange(self.deg, dtype=np.int32)
            for l in range(t - 1, -1, -1):
                g = self.trans[l][digits[l]][g]
            yield pi * ntail, g[tail]

    def index_of_base_images(self, imgs: np.ndarray) -> np.ndarray:
        """Element indices from images of the base points (shape (B, len(base)))."""
        imgs = imgs.astype(np.int64).copy()
        idx = np.zeros(imgs.shape[0], dtype=np.int64)
        for l in range(len(self.sizes)):
            pos = self.pos[l][imgs[:, l]]
            if (pos < 0).any():
                raise AssertionError("base image outside the group")
            idx = idx * self.sizes[l] + pos
            if l + 1 < len(self.sizes):
                imgs[:, l + 1:] = self.tinv[l][pos[:, None], imgs[:, l + 1:]]
        return idx

    def fixed_codims(self, red: ModularImage | None = None) -> Iterator[tuple[int, np.ndarray]]:
        """Lower bounds rank_p(g - I) for every element, chunked; exact wherever the bound is >= 3."""
        dom = self.group.domain
        red = red or ModularImage.for_conductor(dom.conductor)
        pts = dom.modp(red)
        bidx = np.array(dom.basis_idx, dtype=np.int64)
        pb = pts[bidx]  # (k, n)
        for start, imgs in self.chunks(bidx):
            q = pts[imgs]  # (B, k, n)
            yield start, batched_rank_mod_p((q - pb[None, :, :]) % red.p, red.p)

    def conjugacy_classes(self) -> tuple[np.ndarray, np.ndarray]:
        """Representatives (smallest index) and sizes of the conjugacy classes."""
        gens = self.group.perm_generators
        base = list(self.chain.base)
        need = list(base)
        col_of = {b: i for i, b in enumerate(base)}
        maps = []
        for g in gens:
            gi = P.inverse(g)
            cols = []
            for b in base:
                x = gi[b]
                if x not in col_of:
                    col_of[x] = len(need)
                    need.append(x)
                cols.append(col_of[x])
            maps.append((np.array(g, dtype=np.int64), cols))
        conj = [np.empty(self.order, dtype=np.int64) for _ in gens]
        for start, imgs in self.chunks(need):
            for (g, cols), out in zip(maps, conj):
                conj_imgs = g[imgs[:, cols]]
                out[start:start + imgs.shape[0]] = self.index_of_base_images(conj_imgs)
        lab = np.arange(self.order, dtype=np.int64)
        invs = []
        for c in conj:
            inv = np.empty_like(c)
            inv[c] = np.arange(self.order)
            invs.append(inv)
        while True:
            old = lab
            new = lab.copy()
            for c, ci in zip(conj, invs):
                np.minimum(new, new[c], out=new)
                np.minimum(new, new[ci], out=new)
            new = new[new]
            new = new[new]
            lab = new
            if np.array_equal(lab, old):
                break
        reps, sizes = np.unique(lab, return_counts=True)
        return reps, sizes


def element_kinds(group: MatrixGroup, cap: int | None = None):
    """Exact rank(g - I) for every element whose modular bound is <= 2.

    Returns (table, codims, exact): codims[i] is the modular lower bound for element i
    of the table, exact maps element index -> exact rank for the elements with bound <= 2.
    """
    table = group.element_table(cap)
    dom = group.domain
    codims = np.empty(table.order, dtype=np.int8)
    for start, ranks in table.fixed_codims():
        codims[start:start + ranks.size] = ranks
    exact = {}
    for i in np.nonzero(codims <= 2)[0]:
        p = table.perm(int(i))
        exact[int(i)] = dom.fixed_codim_exact(p)
    return table, codims, exact
