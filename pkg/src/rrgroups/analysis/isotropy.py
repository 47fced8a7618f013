"""Isotropy check: is every element a product of the reflections and rotations fixing Fix(g)?"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cyclofield import CycloMatrix
from ..matgroup import MatrixGroup
from .elements import Inventory, inventory


@dataclass
class IsotropyResult:
    ok: bool
    classes: int
    failures: list[CycloMatrix] = field(default_factory=list)


def fixes_pointwise(r: CycloMatrix, U: list[tuple]) -> bool:
    return all(r.apply(u) == tuple(u) for u in U)


def isotropy_rotation_check(G: MatrixGroup, inv: Inventory | None = None) -> IsotropyResult:
    """For each conjugacy class representative g, test g in <r : Fix(g) inside Fix(r)>.

    Only elements fixing a nonzero vector lie in an isotropy group, so fixed-point-free
    classes are skipped.
    """
    inv = inv or inventory(G)
    generators = inv.reflections + inv.rotations
    n = G.dim
    reps = G.conjugacy_class_reps()
    failures = []
    for elem, _ in reps:
        g = elem.matrix
        if g.is_identity():
            continue
        U = (g - CycloMatrix.identity(n)).kernel()
        if not U:
            continue
        S = [r for r in generators if fixes_pointwise(r, U)]
        if not S or not G.subgroup(S).contains(g):
            failures.append(g)
    return IsotropyResult(not failures, len(reps), failures)
