"""Realified imprimitive unitary reflection groups G(m,p,n) and their rotation extensions.

C^n is identified with R^2n through the coordinates (x1, y1, x2, y2, ...).
"""

from __future__ import annotations

from math import factorial, gcd

from ..cyclofield import ONE, ZERO, CycloMatrix, cos_sin
from ..matgroup import MatrixGroup


def rotation2(k: int, m: int) -> CycloMatrix:
    """Rotation of R^2 by 2 pi k / m."""
    c, s = cos_sin(k, m)
    return CycloMatrix([[c, -s], [s, c]])


def reflection2(k: int, m: int) -> CycloMatrix:
    """Reflection of R^2 in the line at angle pi k / m."""
    c, s = cos_sin(k, m)
    return CycloMatrix([[c, s], [s, -c]])


def block_diag(blocks: list[CycloMatrix]) -> CycloMatrix:
    out = blocks[0]
    for b in blocks[1:]:
        out = out.block_diag(b)
    return out


def _diag_blocks(n: int, blocks: dict[int, CycloMatrix]) -> CycloMatrix:
    return block_diag([blocks.get(i, CycloMatrix.identity(2)) for i in range(n)])


def block_swap(n: int, i: int, j: int) -> CycloMatrix:
    rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    for b in range(n):
        for t in range(2):
            rows[2 * perm[b] + t][2 * b + t] = ONE
    return CycloMatrix(rows)


def conjugation(n: int, coords) -> CycloMatrix:
    """Complex conjugation of the listed complex coordinates."""
    return CycloMatrix.diagonal([-ONE if (i % 2 == 1 and i // 2 in coords) else ONE for i in range(2 * n)])


def _check(m: int, p: int, n: int) -> None:
    if m < 1 or p < 1 or n < 1 or m % p:
        raise ValueError(f"invalid parameters G({m},{p},{n}): need p | m and positive entries")


def g_mpn_generators(m: int, p: int, n: int) -> list[CycloMatrix]:
    _check(m, p, n)
    gens = []
    if p < m:
        gens.append(_diag_blocks(n, {0: rotation2(p, m)}))
    if n >= 2:
        if m > 1:
            gens.append(_diag_blocks(n, {0: rotation2(1, m), 1: rotation2(-1, m)}))
        gens += [block_swap(n, i, i + 1) for i in range(n - 1)]
    return gens or [CycloMatrix.identity(2 * n)]


def g_mpn(m: int, p: int, n: int) -> MatrixGroup:
    """G(m,p,n) acting on R^2n."""
    return MatrixGroup(g_mpn_generators(m, p, n), name=f"G({m},{p},{n})",
                       expected_order=m**n * factorial(n) // p)


def _check_star(km: int, k: int, n: int) -> None:
    if k not in (1, 2) or km % k or km < 3:
        raise ValueError(f"need k in (1, 2), k | km and km >= 3, got ({km},{k},{n})")


def g_star(km: int, k: int, n: int) -> MatrixGroup:
    """G*(km,k,n) = <G(km,k,n), r> with r conjugating the first two coordinates."""
    _check_star(km, k, n)
    if n < 2:
        raise ValueError("G* needs n >= 2")
    r = conjugation(n, (0, 1))
    m = km // k
    return MatrixGroup(g_mpn_generators(km, k, n) + [r], name=f"G*({km},{k},{n})",
                       expected_order=2 ** (n - k) * km**n * factorial(n))


def g_tilde(km: int, k: int, n: int) -> MatrixGroup:
    """G~(km,k,n) = <G(km,k,n), s> with s conjugating the first coordinate."""
    _check_star(km, k, n)
    s = conjugation(n, (0,))
    m = km // k
    return MatrixGroup(g_mpn_generators(km, k, n) + [s], name=f"G~({km},{k},{n})",
                       expected_order=2**n * k ** (n - 1) * m**n * factorial(n))


def dihedral_automorphism_ok(k: int, u: int, b: int) -> bool:
    """(u, b) sends rho -> rho^u, s -> s rho^b on the dihedral group of order 2k; involutive automorphism?"""
    if k == 1:
        return True
    return gcd(u, k) == 1 and (u * u - 1) % k == 0 and (b * (1 + u)) % k == 0


def paired_dihedral(km: int, k: int, u: int = 1, b: int = 0) -> MatrixGroup:
    """The reducible group D in O(2) x O(2) pairing W(I2(km)) / W+(I2(m)) cosets through (u, b)."""
    if km % k:
        raise ValueError("k must divide km")
    if not dihedral_automorphism_ok(k, u, b):
        raise ValueError(f"(u, b) = ({u}, {b}) is not an involutive automorphism of the dihedral group of order {2 * k}")
    m = km // k
    rho, s = rotation2(1, km), reflection2(0, km)
    h = rotation2(1, m)
    one = CycloMatrix.identity(2)
    gens = [h.block_diag(one), one.block_diag(h)]
    gens.append(rho.block_diag(rotation2(u, km)))
    gens.append(s.block_diag(s @ rotation2(b, km)))
    return MatrixGroup(gens, name=f"D({km},{k})_({u},{b})", expected_order=2 * k * m * m)


def g_star_phi(km: int, k: int, u: int = 1, b: int = 0) -> MatrixGroup:
    """G*(km,k,2)_phi: the paired group D extended by the block swap."""
    d = paired_dihedral(km, k, u, b)
    m = km // k
    return MatrixGroup(d.generators + [block_swap(2, 0, 1)], name=f"G*({km},{k},2)_({u},{b})",
                       expected_order=4 * k * m * m)
