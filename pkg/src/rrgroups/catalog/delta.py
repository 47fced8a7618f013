"""Diagonal groups {(g, phi(g))} inside W x W for reflection-preserving isomorphisms phi."""

from __future__ import annotations

import re
from math import gcd

from ..cyclofield import CycloMatrix
from ..matgroup import MatrixGroup
from .coxeter import matrix_order


def lift_galois_exponent(k: int, n: int) -> int:
    """Unit k' mod n with k' = k on the part of n coprime to k and k' = 1 on the rest."""
    m, t = n, 1
    for p in range(2, n + 1):
        if m % p == 0 and k % p == 0:
            while m % p == 0:
                m //= p
                t *= p
    if gcd(k, m) != 1:
        raise ValueError(f"galois{k} does not act on conductor {n}")
    if t == 1:
        return k % n
    if m == 1:
        return 1
    # CRT: k' = k mod m, k' = 1 mod t
    return (k * t * pow(t, -1, m) + m * pow(m, -1, t)) % n


def is_reflection(m: CycloMatrix) -> bool:
    n = m.shape[0]
    return m @ m == CycloMatrix.identity(n) and (m - CycloMatrix.identity(n)).rank() == 1


def twist_images(W: MatrixGroup, auto) -> tuple[list[CycloMatrix], str]:
    """Images of W's generators under `auto`: "id", "galois<k>" or a list of matrices."""
    if isinstance(auto, str):
        if auto == "id":
            return list(W.generators), "id"
        m = re.fullmatch(r"galois(\d+)", auto)
        if not m:
            raise ValueError(f"unknown automorphism {auto!r}")
        k = lift_galois_exponent(int(m.group(1)), W.conductor)
        return [g.galois(k) for g in W.generators], auto
    images = [x if isinstance(x, CycloMatrix) else CycloMatrix(x) for x in auto]
    if len(images) != len(W.generators):
        raise ValueError("need one image per generator")
    for x in images:
        if not is_reflection(x):
            raise ValueError("generator images must be reflections")
        if not W.contains(x):
            raise ValueError("generator images must lie in W")
    return images, "images"


def coxeter_relations_hold(gens: list[CycloMatrix], images: list[CycloMatrix]) -> bool:
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if matrix_order(gens[i] @ gens[j]) != matrix_order(images[i] @ images[j]):
                return False
    return True


def delta_group(W: MatrixGroup, auto="id") -> MatrixGroup:
    """Delta_phi(W x W), generated by the block pairs (s, phi(s)) over W's simple reflections."""
    images, label = twist_images(W, auto)
    if not all(is_reflection(g) for g in W.generators):
        raise ValueError("W must be given by reflections")
    if not all(is_reflection(x) for x in images):
        raise ValueError("twisted generators are not reflections")
    if not coxeter_relations_hold(W.generators, images):
        raise ValueError("generator images violate the Coxeter relations")
    gens = [g.block_diag(x) for g, x in zip(W.generators, images)]
    name = f"Delta({W.name},{auto if isinstance(auto, str) else 'images'})"
    G = MatrixGroup(gens, name=name, expected_order=W.order(),
                    meta={"component": W.name, "auto": label, "images": images})
    return G
