"""Coxeter systems on quotients G/H generated by the images of reflections."""

from __future__ import annotations

from dataclasses import dataclass

from ..catalog.coxeter import CoxeterDiagram, coxeter_order_of_matrix
from ..cyclofield import CycloMatrix
from ..matgroup import MatrixGroup

QUOTIENT_CAP = 10**6


@dataclass
class QuotientCoxeter:
    generators: list[CycloMatrix]
    matrix: list[list[int]]
    order: int

    @property
    def diagram(self) -> CoxeterDiagram:
        return CoxeterDiagram.from_matrix(self.matrix)

    @property
    def type_symbol(self) -> str:
        return self.diagram.type_symbol() if self.matrix else "trivial"

    def is_coxeter_system(self) -> bool:
        """The Coxeter group of the matrix has exactly the order of the quotient."""
        return coxeter_order_of_matrix(self.matrix) == self.order


def _order_mod(N: MatrixGroup, g: CycloMatrix, bound: int = 10_000) -> int:
    x, k = g, 1
    while not N.contains(x):
        x = x @ g
        k += 1
        if k > bound:
            raise ValueError("coset order exceeds bound")
    return k


def quotient_coxeter(G: MatrixGroup, N: MatrixGroup, simple_reflections: list[CycloMatrix]) -> QuotientCoxeter:
    if not G.is_normal_subgroup(N):
        raise ValueError(f"{N.name or 'subgroup'} is not normal in {G.name or 'the group'}")
    index = G.order() // N.order()
    if index > QUOTIENT_CAP:
        raise ValueError(f"quotient of order {index} exceeds the cap")
    kept: list[CycloMatrix] = []
    for s in simple_reflections:
        if N.contains(s):
            continue
        if any(N.contains(s @ t.inverse()) for t in kept):
            continue
        kept.append(s)
    m = [[1] * len(kept) for _ in kept]
    for i in range(len(kept)):
        for j in range(i + 1, len(kept)):
            m[i][j] = m[j][i] = _order_mod(N, kept[i] @ kept[j])
    return QuotientCoxeter(kept, m, index)
