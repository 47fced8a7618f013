"""Classification of single elements and reflection/rotation inventories."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .. import perm as P
from ..cyclofield import ONE, CycloMatrix
from ..matgroup import MatrixGroup, element_kinds

ORDER_BOUND = 10_000


@dataclass(frozen=True)
class ElementClass:
    fixed_dim: int
    codim: int
    det: int
    order: int
    kind: str  # identity, reflection, rotation or other


def _kind(codim: int) -> str:
    return {0: "identity", 1: "reflection", 2: "rotation"}.get(codim, "other")


def matrix_order(g: CycloMatrix, bound: int = ORDER_BOUND) -> int:
    x, k = g, 1
    while not x.is_identity():
        if k >= bound:
            raise ValueError(f"element order exceeds {bound}")
        x = x @ g
        k += 1
    return k


def classify_element(g: CycloMatrix) -> ElementClass:
    if not g.is_orthogonal():
        raise ValueError("element is not orthogonal")
    n = g.shape[0]
    codim = (g - CycloMatrix.identity(n)).rank()
    det = 1 if g.det() == ONE else -1
    return ElementClass(n - codim, codim, det, matrix_order(g), _kind(codim))


@dataclass
class Inventory:
    reflections: list[CycloMatrix] = field(default_factory=list)
    rotations: list[CycloMatrix] = field(default_factory=list)
    rotation_orders: Counter = field(default_factory=Counter)

    def counts(self) -> dict:
        return {
            "reflections": len(self.reflections),
            "rotations": len(self.rotations),
            "rotation_orders": {str(k): v for k, v in sorted(self.rotation_orders.items())},
        }


def inventory(G: MatrixGroup, cap: int | None = None) -> Inventory:
    """All reflections and rotations of G.

    Every element gets a modular lower bound on codim Fix(g); the few with bound <= 2
    are then settled exactly.
    """
    inv = Inventory()
    table, _, exact = element_kinds(G, cap)
    dom = G.domain
    for idx in sorted(exact):
        codim = exact[idx]
        if codim not in (1, 2):
            continue
        p = table.perm(idx)
        m = dom.matrix_of(p)
        if codim == 1:
            inv.reflections.append(m)
        else:
            inv.rotations.append(m)
            inv.rotation_orders[P.perm_order(p)] += 1
    return inv


def generated_by_rotations(G: MatrixGroup, inv: Inventory | None = None) -> bool:
    inv = inv or inventory(G)
    return G.generated_order(inv.rotations) == G.order()


def generated_by_reflections_and_rotations(G: MatrixGroup, inv: Inventory | None = None) -> bool:
    inv = inv or inventory(G)
    return G.generated_order(inv.reflections + inv.rotations) == G.order()
