"""Systems of imprimitivity and the four kinds of rotations of a group permuting planes."""

from __future__ import annotations

from ..cyclofield import ONE, ZERO, CycloMatrix, dot, rank_of
from ..matgroup import MatrixGroup
from .elements import Inventory, inventory


def coordinate_blocks(n: int, size: int = 1) -> list[list[tuple]]:
    ident = CycloMatrix.identity(n).rows
    return [[tuple(ident[i + k]) for k in range(size)] for i in range(0, n, size)]


def _check_blocks(blocks: list[list[tuple]], n: int) -> None:
    if sum(len(b) for b in blocks) != n or rank_of([v for b in blocks for v in b]) != n:
        raise ValueError("blocks do not span the space")
    for i, a in enumerate(blocks):
        for b in blocks[i + 1:]:
            if any(not dot(u, v).is_zero() for u in a for v in b):
                raise ValueError("blocks are not pairwise orthogonal")


def block_permutation(g: CycloMatrix, blocks: list[list[tuple]]) -> list[int] | None:
    """Index j with g(B_i) = B_j for every block i, or None if g does not permute the blocks."""
    out = []
    for B in blocks:
        image = [g.apply(v) for v in B]
        for j, C in enumerate(blocks):
            if len(C) == len(B) and rank_of(C + image) == len(C):
                out.append(j)
                break
        else:
            return None
    return out


def verify_imprimitivity(G: MatrixGroup, blocks: list[list[tuple]]) -> bool:
    _check_blocks(blocks, G.dim)
    return all(block_permutation(g, blocks) is not None for g in G.generators)


def is_monomial(G: MatrixGroup) -> bool:
    return verify_imprimitivity(G, coordinate_blocks(G.dim))


def _block_map(g: CycloMatrix, src: list[tuple], dst: list[tuple]) -> CycloMatrix:
    """Matrix M with g(src) = dst M, i.e. g restricted to src in the two block bases."""
    D = CycloMatrix.from_columns(dst)
    left = (D.T @ D).inverse() @ D.T
    return left @ CycloMatrix.from_columns([g.apply(v) for v in src])


def rotation_type(g: CycloMatrix, blocks: list[list[tuple]]) -> int:
    """Type 1 to 4 of a rotation permuting two-dimensional blocks; ValueError if none fits."""
    perm = block_permutation(g, blocks)
    if perm is None:
        raise ValueError("rotation does not permute the blocks")
    ident = CycloMatrix.identity(2)
    moved = [i for i, j in enumerate(perm) if i != j]
    if not moved:
        active = []
        for i, B in enumerate(blocks):
            M = _block_map(g, B, B)
            if M != ident:
                active.append(M.det())
        if len(active) == 1 and active[0] == ONE:
            return 1
        if len(active) == 2 and all(d == -ONE for d in active):
            return 3
        raise ValueError("block-diagonal element is not a rotation of type 1 or 3")
    if len(moved) == 2 and perm[moved[0]] == moved[1]:
        i, j = moved
        for k, B in enumerate(blocks):
            if k not in moved and _block_map(g, B, B) != ident:
                raise ValueError("rotation moves a third block")
        d = _block_map(g, blocks[i], blocks[j]).det()
        return 2 if d == ONE else 4
    raise ValueError("rotation permutes more than two blocks")


def rotation_types_2dim(G: MatrixGroup, blocks: list[list[tuple]], inv: Inventory | None = None) -> dict[int, list]:
    if any(len(b) != 2 for b in blocks):
        raise ValueError("blocks must be planes")
    if not verify_imprimitivity(G, blocks):
        raise ValueError("blocks are not a system of imprimitivity")
    inv = inv or inventory(G)
    out: dict[int, list] = {1: [], 2: [], 3: [], 4: []}
    for r in inv.rotations:
        out[rotation_type(r, blocks)].append(r)
    return out
