"""The quadratic space H/{+-1} of the tensor group and the L-action on its singular subspaces."""

from __future__ import annotations

from ..catalog.exceptional import WittSpace
from ..cyclofield import CycloMatrix
from ..matgroup import MatrixGroup


def witt_space(H: MatrixGroup) -> WittSpace:
    """Witt space of a group of order 128 with centre {+-I} whose elements square to +-I."""
    n = H.dim
    ident = CycloMatrix.identity(n)
    if H.order() != 128:
        raise ValueError(f"expected a group of order 128, got {H.order()}")
    if not H.contains(-ident):
        raise ValueError("-I is not in the group")
    basis: list[CycloMatrix] = []
    span = {ident, -ident}
    for g in H.generators + [e.matrix for e in H.elements()]:
        if g in span:
            continue
        basis.append(g)
        span |= {g @ s for s in span}
        if len(span) == 128:
            break
    return WittSpace(basis)


def maximal_orbits(W: WittSpace, gens: list[CycloMatrix]) -> list[list[tuple[int, ...]]]:
    """Orbits of the normalizing generators on the maximal singular subspaces."""
    maximal = W.maximal_singular_list()
    actions = [W.act(g) for g in gens]
    index = {S: i for i, S in enumerate(maximal)}
    seen, orbits = set(), []
    for S in maximal:
        if S in seen:
            continue
        orbit, todo = [S], [S]
        seen.add(S)
        while todo:
            X = todo.pop()
            for a in actions:
                Y = tuple(sorted(W.image(a, x) for x in X))
                if Y not in index:
                    raise ValueError("generator does not preserve the singular subspaces")
                if Y not in seen:
                    seen.add(Y)
                    orbit.append(Y)
                    todo.append(Y)
        orbits.append(orbit)
    return orbits


def containing_counts(W: WittSpace, orbits) -> list[tuple[int, ...]]:
    """For each 2-dim singular subspace, how many maximal ones from each orbit contain it."""
    out = []
    for S in W.singular_subspaces(2):
        s = set(S)
        out.append(tuple(sum(1 for M in orbit if s <= set(M)) for orbit in orbits))
    return out
