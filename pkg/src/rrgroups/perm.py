"""Permutations as tuples of ints and a deterministic Schreier-Sims stabilizer chain.

A permutation p maps point x to p[x]; the product mul(p, q) applies q first.
"""

from __future__ import annotations

import random
from math import lcm, prod
from typing import Iterable, Sequence

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(map(p.__getitem__, q))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def power(p: Perm, e: int) -> Perm:
    if e < 0:
        p, e = inverse(p), -e
    result, base = identity(len(p)), p
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def cycle_lengths(p: Perm) -> list[int]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            out.append(n)
    return out


def perm_order(p: Perm) -> int:
    return lcm(*cycle_lengths(p)) if p else 1


def point_orbit(gens: Sequence[Perm], point: int) -> list[int]:
    orbit, seen = [point], {point}
    for x in orbit:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                orbit.append(y)
    return orbit


class StabilizerChain:
    """Base and strong generating set with explicit transversals.

    Level i holds the generators fixing base[:i], the orbit of base[i]
    under them and coset representatives u with u[base[i]] = point.
    """

    def __init__(self, degree: int, gens: Iterable[Perm], base: Sequence[int] = (), rng_seed: int | None = None,
                 target_order: int | None = None):
        self.degree = degree
        self.ident = identity(degree)
        self.gens = [tuple(g) for g in gens if not is_identity(g)]
        self.base: list[int] = []
        self.level_gens: list[list[Perm]] = []
        self.orbits: list[list[int]] = []
        self.trans: list[dict[int, Perm]] = []
        self.tinv: list[dict[int, Perm]] = []
        for b in base:
            self._append_level(b)
        for g in self.gens:
            if all(g[b] == b for b in self.base):
                self._append_level(next(i for i, x in enumerate(g) if i != x))
        for g in self.gens:
            self._add_gen(g, 0, self._depth(g))
        if target_order is not None and self.gens:
            self._random_fill(target_order, rng_seed)
        self._complete()

    # structure helpers ----------------------------------------------------
    def _depth(self, g: Perm) -> int:
        """Number of leading base points fixed by g."""
        for i, b in enumerate(self.base):
            if g[b] != b:
                return i
        return len(self.base)

    def _append_level(self, b: int) -> None:
        self.base.append(b)
        self.level_gens.append([])
        self.orbits.append([b])
        self.trans.append({b: self.ident})
        self.tinv.append({b: self.ident})

    def _add_gen(self, g: Perm, lo: int, hi: int) -> None:
        """Register g as a strong generator on levels lo..hi (inclusive)."""
        if hi >= len(self.base):
            self._append_level(next(i for i, x in enumerate(g) if i != x))
        for lvl in range(lo, hi + 1):
            self.level_gens[lvl].append(g)
            self._extend_orbit(lvl)

    def _extend_orbit(self, lvl: int) -> None:
        gens, orbit, trans, tinv = self.level_gens[lvl], self.orbits[lvl], self.trans[lvl], self.tinv[lvl]
        # new generator: apply to every known point; new points: apply every generator
        queue = list(orbit)
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            ux = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    u = mul(s, ux)
                    trans[y] = u
                    tinv[y] = inverse(u)
                    orbit.append(y)
                    queue.append(y)

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Strip g through levels start.. ; returns residue and the level where it stopped."""
        for lvl in range(start, len(self.base)):
            x = g[self.base[lvl]]
            uinv = self.tinv[lvl].get(x)
            if uinv is None:
                return g, lvl
            g = tuple(map(uinv.__getitem__, g))
        return g, len(self.base)

    def _complete(self) -> None:
        checked: list[set] = [set() for _ in self.base]
        lvl = len(self.base) - 1
        while lvl >= 0:
            while len(checked) < len(self.base):
                checked.append(set())
            restart = None
            orbit, trans, tinv = self.orbits[lvl], self.trans[lvl], self.tinv[lvl]
            gens = self.level_gens[lvl]
            done = checked[lvl]
            for x in orbit:
                ux = trans[x]
                for gi, s in enumerate(gens):
                    if (x, gi) in done:
                        continue
                    done.add((x, gi))
                    sx = mul(s, ux)
                    h = tuple(map(tinv[s[x]].__getitem__, sx))
                    if h == self.ident:
                        continue
                    res, stop = self.sift(h, lvl + 1)
                    if res == self.ident:
                        continue
                    self._add_gen(res, lvl + 1, stop)
                    restart = stop
                    break
                if restart is not None:
                    break
            if restart is not None:
                lvl = min(restart, len(self.base) - 1)
            else:
                lvl -= 1

    def _random_fill(self, target: int, seed: int | None) -> None:
        """Accelerator: add sifted residues of random products until the order reaches target."""
        rnd = random.Random(seed)
        pool = list(self.gens) * 2 if len(self.gens) < 5 else list(self.gens)
        for _ in range(20):
            i, j = rnd.randrange(len(pool)), rnd.randrange(len(pool))
            pool[i] = mul(pool[i], pool[j])
        tries = 0
        while self.order() < target and tries < 2000:
            tries += 1
            i, j = rnd.randrange(len(pool)), rnd.randrange(len(pool))
            pool[i] = mul(pool[i], pool[j])
            res, stop = self.sift(pool[i])
            if res != self.ident:
                self._add_gen(res, min(1, stop), stop)

    # queries ------------------------------------------------------------------
    def order(self) -> int:
        return prod(len(o) for o in self.orbits)

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        res, _ = self.sift(tuple(g))
        return res == self.ident

    def strong_generators(self) -> list[Perm]:
        seen, out = set(), []
        for gens in self.level_gens:
            for g in gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    def transversal_sizes(self) -> list[int]:
        return [len(o) for o in self.orbits]

    def element(self, index: int) -> Perm:
        """Element number `index` in mixed-radix transversal order (level 0 most significant)."""
        digits = []
        for o in reversed(self.orbits):
            index, d = divmod(index, len(o))
            digits.append(d)
        digits.reverse()
        g = self.ident
        for lvl in range(len(self.base) - 1, -1, -1):
            u = self.trans[lvl][self.orbits[lvl][digits[lvl]]]
            g = mul(u, g)
        return g

    def index_of(self, g: Perm) -> int:
        """Inverse of element(); g must belong to the group."""
        idx = 0
        for lvl in range(len(self.base)):
            x = g[self.base[lvl]]
            pos = self.orbits[lvl].index(x)
            idx = idx * len(self.orbits[lvl]) + pos
            g = tuple(map(self.tinv[lvl][x].__getitem__, g))
        return idx

    def __iter__(self):
        return (self.element(i) for i in range(self.order()))

    def random_element(self, rnd: random.Random) -> Perm:
        return self.element(rnd.randrange(self.order()))
