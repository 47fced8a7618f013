"""Commutants, spin spans and decompositions into invariant subspaces."""

from __future__ import annotations

from dataclasses import dataclass

from ..cyclofield import ONE, ZERO, CycloMatrix, kernel_basis, orthogonal_complement, projector, rank_of, span_basis
from ..matgroup import MatrixGroup


def restrict(gens: list[CycloMatrix], basis: list[tuple]) -> list[CycloMatrix]:
    """Matrices of the generators on an invariant subspace, in the given basis."""
    B = CycloMatrix.from_columns(basis)
    left = (B.T @ B).inverse() @ B.T
    return [left @ g @ B for g in gens]


def commutant_basis(gens: list[CycloMatrix]) -> list[CycloMatrix]:
    """Basis of {X : AX = XA for every generator A}."""
    n = gens[0].shape[0]
    basis = []
    for i in range(n):
        for j in range(n):
            rows = [[ZERO] * n for _ in range(n)]
            rows[i][j] = ONE
            basis.append(CycloMatrix(rows))
    for A in gens:
        if not basis:
            break
        cols = []
        for X in basis:
            C = A @ X - X @ A
            cols.append([x for r in C.rows for x in r])
        # coefficient vectors c with sum c_t C_t = 0
        constraint_rows = [list(r) for r in zip(*cols)]
        ker = kernel_basis(constraint_rows, len(basis))
        basis = [_combine(basis, c, n) for c in ker]
    return basis


def _combine(mats: list[CycloMatrix], coeffs, n: int) -> CycloMatrix:
    rows = [[ZERO] * n for _ in range(n)]
    for m, c in zip(mats, coeffs):
        if c.is_zero():
            continue
        for i in range(n):
            for j in range(n):
                if not m.rows[i][j].is_zero():
                    rows[i][j] = rows[i][j] + c * m.rows[i][j]
    return CycloMatrix(rows)


def commutant_dimension(G: MatrixGroup | list[CycloMatrix]) -> int:
    gens = G.generators if isinstance(G, MatrixGroup) else G
    return len(commutant_basis(gens))


def essential_commutant_dimension(G: MatrixGroup) -> int:
    """Commutant dimension of G acting on the orthogonal complement of its fixed space."""
    ess = orthogonal_complement(G.fixed_space, G.dim)
    if not ess:
        return 0
    return commutant_dimension(restrict(G.generators, ess))


def spin_span(gens: list[CycloMatrix], v) -> list[tuple]:
    """Smallest invariant subspace containing v (the span of its orbit)."""
    basis = span_basis([tuple(v)])
    if not basis:
        return []
    todo = list(basis)
    while todo:
        x = todo.pop()
        for g in gens:
            y = g.apply(x)
            if rank_of(basis + [y]) > len(basis):
                basis.append(y)
                todo.append(y)
    return span_basis(basis)


@dataclass
class Component:
    basis: list[tuple]
    trivial: bool
    commutant_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)


def irreducible_components(G: MatrixGroup) -> list[Component]:
    """Orthogonal decomposition: the fixed space, then repeatedly the smallest spin span found.

    Candidates are the projections of the standard basis vectors; each nontrivial
    component reports its commutant dimension (1 certifies absolute irreducibility).
    """
    n = G.dim
    gens = G.generators
    out = []
    fixed = G.fixed_space
    if fixed:
        out.append(Component(list(fixed), True, len(fixed) ** 2))
    rest = orthogonal_complement(fixed, n) if fixed else [tuple(r) for r in CycloMatrix.identity(n).rows]
    stack = [rest]
    while stack:
        W = stack.pop()
        if not W:
            continue
        best = W
        P = projector(W, n)
        for e in CycloMatrix.identity(n).rows:
            v = P.apply(e)
            if all(x.is_zero() for x in v):
                continue
            S = spin_span(gens, v)
            if len(S) < len(best):
                best = S
                if len(S) == 1:
                    break
        if len(best) == len(W):
            out.append(Component(W, False, commutant_dimension(restrict(gens, W))))
            continue
        stack.append(best)
        stack.append(_relative_complement(best, W, n))
    return out


def _relative_complement(S: list[tuple], W: list[tuple], n: int) -> list[tuple]:
    """Orthogonal complement of S inside W."""
    P = projector(orthogonal_complement(S, n), n)
    return span_basis([P.apply(w) for w in W])
