"""Plane systems: the (-1)-eigenplanes of the involutive rotations of a group."""

from __future__ import annotations

from dataclasses import dataclass

from .. import perm as P
from ..cyclofield import CycloMatrix, rref, vector_key
from ..matgroup import MatrixGroup
from .elements import Inventory, inventory


def canonical_plane(basis, conductor: int) -> tuple:
    rows, _ = rref(basis)
    return tuple(vector_key(r, conductor) for r in rows if any(not x.is_zero() for x in r))


@dataclass
class PlaneSystem:
    planes: list[list[tuple]]
    rotations: list[CycloMatrix]
    closed: bool

    def __len__(self):
        return len(self.planes)


def plane_system(G: MatrixGroup, inv: Inventory | None = None) -> PlaneSystem:
    """Planes of the order-2 rotations of G, with the closure r_s(P) = P checked.

    r_s maps the plane of r_t to the plane of r_s r_t r_s, so closure is checked on the
    faithful permutation images of the rotations.
    """
    inv = inv or inventory(G)
    n = G.dim
    ident = CycloMatrix.identity(n)
    rotations = [r for r in inv.rotations if r @ r == ident]
    planes = [(r + ident).kernel() for r in rotations]
    perms = [G.perm_of(r) for r in rotations]
    known = set(perms)
    closed = all(P.mul(P.mul(s, t), s) in known for s in perms for t in perms)
    return PlaneSystem(planes, rotations, closed)


def plane_keys(system: PlaneSystem, conductor: int) -> set:
    return {canonical_plane(p, conductor) for p in system.planes}
