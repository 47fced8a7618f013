"""Catalog names: parsing, dispatch to constructors and reference orders."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from ..cyclofield import CycloMatrix, as_cyclo
from ..matgroup import MatrixGroup
from . import coxeter, delta, exceptional, imprimitive, monomial, quaternion


class UnknownGroup(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: tuple = ()
    text: str = field(default="", compare=False)


_TYPE = r"(?:A\d+|BC\d+|B\d+|C\d+|D\d+|E[678]|F4|H[34]|I2\(\d+\))"
_PRODUCT = rf"{_TYPE}(?:x{_TYPE})*"

_PATTERNS: list[tuple[str, re.Pattern]] = [
    ("W", re.compile(rf"W\(({_PRODUCT})\)")),
    ("W+", re.compile(rf"W\+\(({_PRODUCT})\)")),
    ("W*", re.compile(rf"W\*\(({_TYPE})\)")),
    ("W~", re.compile(rf"W~\(({_TYPE})\)")),
    ("G*phi", re.compile(r"G\*\((\d+),(\d+),2\)_\((-?\d+),(-?\d+)\)")),
    ("G", re.compile(r"G\((\d+),(\d+),(\d+)\)")),
    ("G*", re.compile(r"G\*\((\d+),(\d+),(\d+)\)")),
    ("G~", re.compile(r"G~\((\d+),(\d+),(\d+)\)")),
    ("D", re.compile(r"D\((\d+)\)")),
    ("D+", re.compile(r"D\+\((\d+)\)")),
    ("H", re.compile(r"H([5-8])")),
    ("M", re.compile(r"M([5-8])")),
    ("M~", re.compile(r"M~([5-8])")),
    ("M~D", re.compile(r"M~D\((\d+)\)")),
    ("M7p", re.compile(r"M7p")),
    ("M8p", re.compile(r"M8p")),
    ("R5", re.compile(r"R5\(A5\)")),
    ("R6", re.compile(r"R6\(PSL27\)")),
    ("Htensor", re.compile(r"Htensor")),
    ("L", re.compile(r"L")),
    ("WR1", re.compile(r"WR1")),
    ("WR2", re.compile(r"WR2")),
]

_INT_FAMILIES = {"G*phi", "G", "G*", "G~", "D", "D+", "H", "M", "M~", "M~D"}


def parse_name(text: str) -> GroupSpec:
    text = text.strip()
    if text.startswith("SO4("):
        try:
            return GroupSpec("SO4", quaternion.parse_so4(text), text)
        except ValueError as exc:
            raise UnknownGroup(str(exc)) from exc
    if text.startswith("Delta(") and text.endswith(")"):
        inner = text[len("Delta("):-1]
        depth = 0
        for i, ch in enumerate(inner):
            depth += ch in "(["
            depth -= ch in ")]"
            if ch == "," and depth == 0:
                base, auto = inner[:i], inner[i + 1:]
                parse_name(base)
                return GroupSpec("Delta", (base, auto), text)
        raise UnknownGroup(f"Delta needs a group and an automorphism: {text!r}")
    for family, pat in _PATTERNS:
        m = pat.fullmatch(text)
        if m:
            params = m.groups()
            if family in _INT_FAMILIES:
                params = tuple(int(x) for x in params)
            return GroupSpec(family, params, text)
    raise UnknownGroup(f"cannot parse group name {text!r}")


def _type_symbol(t: str) -> str:
    return "x".join(coxeter.normalize_type(c) for c in coxeter.split_product(t))


def _parse_images(auto: str):
    if not auto.startswith("["):
        return auto
    data = json.loads(auto)
    return [CycloMatrix([[as_cyclo(Fraction(str(x))) for x in row] for row in mat]) for mat in data]


def build(spec: GroupSpec) -> MatrixGroup:
    f, p = spec.family, spec.params
    if f == "W":
        return coxeter.coxeter_group(_type_symbol(p[0]))
    if f == "W+":
        return coxeter.orientation_subgroup(coxeter.coxeter_group(_type_symbol(p[0])))
    if f in ("W*", "W~"):
        W = coxeter.coxeter_group(_type_symbol(p[0]))
        if W.meta.get("type") not in coxeter.STAR_TYPES:
            raise UnknownGroup(f"{spec.text}: no rotation diagram symmetry for this type")
        return coxeter.star_extension(W) if f == "W*" else coxeter.tilde_extension(W)
    if f == "G":
        return imprimitive.g_mpn(*p)
    if f == "G*":
        return imprimitive.g_star(*p)
    if f == "G~":
        return imprimitive.g_tilde(*p)
    if f == "G*phi":
        km, k, u, b = p
        return imprimitive.g_star_phi(km, k, u, b)
    if f in ("D", "D+"):
        return monomial.diagonal_group(p[0], even=(f == "D+"))
    if f == "H":
        return monomial.h_group(p[0])
    if f == "M":
        return monomial.m_group(p[0])
    if f == "M~":
        return monomial.m_tilde_group(p[0])
    if f == "M~D":
        return monomial.m_tilde_d_group(p[0])
    if f == "M7p":
        return monomial.m7p()
    if f == "M8p":
        return monomial.m8p()
    if f == "SO4":
        return quaternion.so4_group(*p)
    if f == "R5":
        return exceptional.projective_line_group()
    if f == "R6":
        return exceptional.r6_psl27()
    if f == "Htensor":
        return exceptional.tensor_group()
    if f == "L":
        return exceptional.group_l()
    if f == "WR1":
        return exceptional.w_r1()
    if f == "WR2":
        return exceptional.w_r2()
    if f == "Delta":
        base, auto = p
        return delta.delta_group(build(parse_name(base)), _parse_images(auto))
    raise UnknownGroup(spec.text)


# ---------------------------------------------------------------------------
# reference orders (verification metadata only)

TABLE_ORDERS = {
    "W+(H3)": 60,
    "SO4(T/T;O/O)": 576,
    "SO4(T/T;I/I)": 1440,
    "SO4(O/O;I/I)": 2880,
    "SO4(I/C1;I/C1:galois)": 60,
    "SO4(I/C2;I/C2:galois)": 120,
    "SO4(T/T;T/T)": 288,
    "SO4(O/T;O/T)": 576,
    "SO4(O/O;O/O)": 1152,
    "SO4(I/I;I/I)": 7200,
    "W+(A4)": 60,
    "W*(A4)": 120,
    "W*(D4)": 288,
    "W+(F4)": 576,
    "W*(F4)": 1152,
    "W+(H4)": 7200,
    "R5(A5)": 60,
    "W*(A5)": 720,
    "R6(PSL27)": 168,
    "W+(E6)": 25920,
    "W*(E6)": 51840,
    "W+(E7)": 1451520,
    "L": 2580480,
    "W+(E8)": 348364800,
    "M5": 160,
    "M6": 1920,
    "M7p": 1344,
    "M7": 10752,
    "M8p": 21504,
    "M8": 172032,
    "W~(A4)": 240,
    "W~(D4)": 576,
    "W~(F4)": 2304,
    "M~5": 320,
    "W~(A5)": 1440,
    "M~6": 3840,
    "W~(E6)": 103680,
    "M~7": 21504,
    "M~8": 344064,
    "Htensor": 128,
    "WR1": 696729600,
    "WR2": 696729600,
}

_SO4_SIZES = {"T": 24, "O": 48, "I": 120, "V": 8}


def _quat_order(tok: str) -> int:
    if tok in _SO4_SIZES:
        return _SO4_SIZES[tok]
    n = int(tok[1:])
    return n if tok[0] == "C" else 4 * n


def expected_order(spec: GroupSpec) -> int | None:
    if spec.text in TABLE_ORDERS:
        return TABLE_ORDERS[spec.text]
    f, p = spec.family, spec.params
    if f == "W":
        return coxeter.coxeter_order(p[0])
    if f == "W+":
        return coxeter.coxeter_order(p[0]) // 2
    if f == "G":
        m, q, n = p
        return m**n * factorial(n) // q
    if f == "G*":
        km, k, n = p
        return 2 ** (n - k) * km**n * factorial(n)
    if f == "G~":
        km, k, n = p
        return 2**n * k ** (n - 1) * (km // k) ** n * factorial(n)
    if f == "G*phi":
        km, k = p[:2]
        return 4 * k * (km // k) ** 2
    if f == "D":
        return 2 ** p[0]
    if f == "D+":
        return 2 ** (p[0] - 1)
    if f == "H":
        return monomial.H_ORDERS[p[0]]
    if f == "M~D":
        return 2 ** (p[0] - 1) * factorial(p[0])
    if f == "SO4":
        l_tok, _, _, rk_tok, _ = p
        return _quat_order(l_tok) * _quat_order(rk_tok) // 2
    if f == "Delta":
        return expected_order(parse_name(p[0]))
    return None


def lookup(name: str) -> MatrixGroup:
    """Build the named group and attach its reference order as metadata."""
    spec = parse_name(name)
    try:
        G = build(spec)
    except (UnknownGroup, coxeter.UnknownType):
        raise
    except ValueError as exc:
        # parameter violations such as p not dividing m
        raise UnknownGroup(f"{name}: {exc}") from exc
    G.name = spec.text
    G.meta["expected_order"] = expected_order(spec)
    return G


CATALOG_EXAMPLES = [
    "W(A4)", "W(BC3)", "W(D4)", "W(E6)", "W(E7)", "W(E8)", "W(F4)", "W(H3)", "W(H4)", "W(I2(5))",
    "W+(A4)", "W+(H3)", "W+(F4)", "W+(E6)", "W+(E7)", "W+(E8)",
    "W*(A4)", "W*(D4)", "W*(F4)", "W*(A5)", "W*(E6)",
    "W~(A4)", "W~(D4)", "W~(F4)", "W~(A5)", "W~(E6)",
    "G(4,2,3)", "G*(6,1,3)", "G*(4,2,3)", "G~(6,1,3)", "G*(6,2,2)_(1,0)",
    "D(4)", "D+(4)", "H5", "H6", "H7", "H8", "M5", "M6", "M7", "M8", "M~5", "M~6", "M~7", "M~8",
    "M~D(4)", "M7p", "M8p",
    "SO4(T/T;T/T)", "SO4(T/T;O/O)", "SO4(T/T;I/I)", "SO4(O/O;I/I)", "SO4(O/T;O/T)", "SO4(O/O;O/O)",
    "SO4(I/I;I/I)", "SO4(I/C1;I/C1:galois)", "SO4(I/C2;I/C2:galois)",
    "SO4(D3/D3;T/T)", "SO4(D2/D2;O/O)", "SO4(D2/C4;O/T)", "SO4(D4/D2;O/T)", "SO4(D3/C2;O/V)", "SO4(D2/D2;I/I)",
    "R5(A5)", "R6(PSL27)", "Htensor", "L", "WR1", "WR2",
    "Delta(W(H3),id)", "Delta(W(H3),galois2)", "Delta(W(I2(5)),galois2)",
]


def catalog_list() -> list[tuple[str, int | None]]:
    return [(name, expected_order(parse_name(name))) for name in CATALOG_EXAMPLES]
