"""Signed permutation groups: D(n), D+(n), the groups H_n and the monomial rotation groups built on them."""

from __future__ import annotations

import re
from math import factorial

from ..cyclofield import ONE, ZERO, CycloMatrix
from ..matgroup import MatrixGroup

_CYCLE = re.compile(r"\(([^()]*)\)")


def signed_perm_matrix(n: int, images: dict[int, tuple[int, int]]) -> CycloMatrix:
    """Matrix sending e_i to sign * e_j for images[i] = (j, sign); unspecified basis vectors are fixed."""
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        j, s = images.get(i, (i, 1))
        rows[j][i] = ONE if s > 0 else -ONE
    return CycloMatrix(rows)


def monomial(spec: str, n: int) -> CycloMatrix:
    """Parse cycle notation on points 1..n.

    "(1,2)(3,4)" is a permutation; "(1,~2)" maps e_1 to -e_2 and e_2 to -e_1.
    Longer cycles may not carry bars.
    """
    images: dict[int, tuple[int, int]] = {}
    for body in _CYCLE.findall(spec.replace(" ", "")):
        items = body.split(",")
        if len(items) < 2:
            raise ValueError(f"bad cycle {body!r}")
        pts, bars = [], []
        for it in items:
            bar = it.startswith("~")
            k = int(it.lstrip("~")) - 1
            if not 0 <= k < n:
                raise ValueError(f"point {k + 1} out of range 1..{n}")
            pts.append(k)
            bars.append(bar)
        if len(pts) == 2:
            sign = -1 if any(bars) else 1
            images[pts[0]] = (pts[1], sign)
            images[pts[1]] = (pts[0], sign)
        else:
            if any(bars):
                raise ValueError("bars are only allowed in transpositions")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = (b, 1)
    if _CYCLE.sub("", spec.replace(" ", "")):
        raise ValueError(f"unparsed text in {spec!r}")
    return signed_perm_matrix(n, images)


def sign_change(n: int, *coords: int) -> CycloMatrix:
    return CycloMatrix.diagonal([-ONE if i in coords else ONE for i in range(n)])


def diagonal_gens(n: int, even: bool) -> list[CycloMatrix]:
    if even:
        return [sign_change(n, i, i + 1) for i in range(n - 1)]
    return [sign_change(n, i) for i in range(n)]


def diagonal_group(n: int, even: bool = False) -> MatrixGroup:
    """D(n) (all sign changes) or D+(n) (even sign changes)."""
    gens = diagonal_gens(n, even) or [CycloMatrix.identity(n)]
    name = f"D+({n})" if even else f"D({n})"
    return MatrixGroup(gens, name=name, expected_order=2 ** (n - 1) if even else 2**n)


G_CYCLES = {
    1: "(1,2)(3,4)",
    2: "(1,5)(2,6)",
    3: "(1,3)(5,7)",
    4: "(1,2)(7,8)",
    5: "(1,~2)(3,~4)",
}

H_CYCLES = {
    5: ["(1,2)(3,4)", "(2,3)(4,5)"],
    6: ["(1,2)(3,4)", "(1,5)(2,3)", "(1,6)(2,4)"],
    7: [G_CYCLES[1], G_CYCLES[2], G_CYCLES[3]],
    8: [G_CYCLES[1], G_CYCLES[2], G_CYCLES[3], G_CYCLES[4]],
}
H_ORDERS = {5: 10, 6: 60, 7: 168, 8: 1344}


def h_group(n: int) -> MatrixGroup:
    if n not in H_CYCLES:
        raise ValueError("H_n is defined for n = 5..8")
    return MatrixGroup([monomial(c, n) for c in H_CYCLES[n]], name=f"H{n}", expected_order=H_ORDERS[n])


def m_group(n: int) -> MatrixGroup:
    """M_n = D+(n) semidirect H_n."""
    gens = diagonal_gens(n, True) + [monomial(c, n) for c in H_CYCLES[n]]
    return MatrixGroup(gens, name=f"M{n}", expected_order=2 ** (n - 1) * H_ORDERS[n])


def m_tilde_group(n: int) -> MatrixGroup:
    """M~_n = D(n) semidirect H_n."""
    gens = diagonal_gens(n, False) + [monomial(c, n) for c in H_CYCLES[n]]
    return MatrixGroup(gens, name=f"M~{n}", expected_order=2**n * H_ORDERS[n])


def alternating_gens(n: int) -> list[CycloMatrix]:
    return [monomial(f"({i + 1},{i + 2},{i + 3})", n) for i in range(n - 2)]


def m_tilde_d_group(n: int) -> MatrixGroup:
    """D(n) semidirect the alternating group A_n."""
    gens = diagonal_gens(n, False) + alternating_gens(n)
    return MatrixGroup(gens, name=f"M~D({n})", expected_order=2**n * max(factorial(n) // 2, 1))


def m7p() -> MatrixGroup:
    gens = [monomial(G_CYCLES[k], 7) for k in (1, 2, 3, 5)]
    return MatrixGroup(gens, name="M7p", expected_order=1344)


def m8p() -> MatrixGroup:
    gens = [monomial(G_CYCLES[k], 8) for k in (1, 2, 3, 4, 5)]
    return MatrixGroup(gens, name="M8p", expected_order=21504)
