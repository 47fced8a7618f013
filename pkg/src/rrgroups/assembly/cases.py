"""Concrete triples for every case of the irreducible classification, and a library of assembly data."""

from __future__ import annotations

from itertools import permutations, product

from ..analysis.elements import inventory
from ..catalog import coxeter, imprimitive, monomial
from ..catalog.delta import lift_galois_exponent
from ..cyclofield import CycloMatrix
from ..matgroup import MatrixGroup
from .data import ROTATION_ONLY, AssemblyData, Isomorphism, TripleDatum


def _power(g: CycloMatrix, k: int) -> CycloMatrix:
    out = g
    for _ in range(k - 1):
        out = out @ g
    return out


def _closure_triple(W: MatrixGroup, words, case: str, label: str) -> TripleDatum:
    """(W, normal closure of the words, W); a word (i, j, p) is (s_i s_j)^p."""
    s = W.generators
    H = W.normal_closure([_power(s[i] @ s[j], p) for i, j, p in words], name=label)
    return TripleDatum(W, H, W, case, labels={"G": W.name, "F": W.name, "H": label})


def _reflection_subgroup(G: MatrixGroup, name: str) -> MatrixGroup:
    return G.subgroup(inventory(G).reflections, name=name)


def case_triple(case: str, **params) -> TripleDatum:
    """One concrete triple for a case tag of the irreducible classification."""
    if case == "i":
        n = params.get("n", 5)
        G = monomial.m_tilde_group(n)
        M = monomial.m_group(n)
        return TripleDatum(G, G.subgroup(M.generators, name=M.name), _reflection_subgroup(G, f"D(M~{n})"), case,
                           labels={"G": f"M~{n}", "H": f"M{n}"})
    if case == "ii":
        km, l = params.get("km", 3), params.get("l", 2)
        G = imprimitive.g_tilde(km, 1, l)
        H = imprimitive.g_star(km, 1, l)
        return TripleDatum(G, G.subgroup(H.generators), _reflection_subgroup(G, "D"), case,
                           labels={"G": f"G~({km},1,{l})", "H": f"G*({km},1,{l})"})
    if case == "iii":
        m, l = params.get("m", 2), params.get("l", 2)
        G = imprimitive.g_tilde(2 * m, 1, l)
        H = imprimitive.g_star(2 * m, 2, l)
        return TripleDatum(G, G.subgroup(H.generators), _reflection_subgroup(G, "D"), case,
                           labels={"G": f"G~({2 * m},1,{l})", "H": f"G*({2 * m},2,{l})"})
    if case == "iv":
        W = coxeter.coxeter_group(params.get("type", "H3"))
        return TripleDatum(W, W.subgroup([]), W, case)
    if case == "v":
        W = coxeter.coxeter_group(params.get("type", "H3"))
        return TripleDatum(W, coxeter.orientation_subgroup(W), W, case)
    if case == "vi":
        return _closure_triple(coxeter.coxeter_group("A3"), [(0, 2, 1)], case, "W+(A1xA1xA1)")
    if case == "vii":
        n = params.get("n", 3)
        return _closure_triple(coxeter.coxeter_group(f"BC{n}"), [(n - 2, n - 1, 2)], case, f"D+({n})")
    if case == "viii":
        n = params.get("n", 3)
        return _closure_triple(coxeter.coxeter_group(f"BC{n}"), [(0, 1, 1)], case, f"W+(D{n})")
    if case == "ix":
        return _closure_triple(coxeter.coxeter_group("BC4"), [(0, 2, 1), (2, 3, 2)], case, "G*(4,2,2)")
    if case == "x":
        n = params.get("n", 5)
        return _closure_triple(coxeter.coxeter_group(f"D{n}"), [(n - 2, n - 1, 1)], case, f"D+({n})")
    if case == "xi":
        # D4 realization: vertex 1 is the branch point
        return _closure_triple(coxeter.coxeter_group("D4"), [(0, 2, 1), (0, 3, 1)], case, "G*(4,2,2)")
    if case == "xii":
        m, k = params.get("m", 2), params.get("k", 3)
        return _closure_triple(coxeter.coxeter_group(f"I2({k * m})"), [(0, 1, k)], case, f"W+(I2({m}))")
    if case == "xiii":
        return _closure_triple(coxeter.coxeter_group("F4"), [(1, 2, 2)], case, "G*(4,2,2)")
    if case == "xiv":
        return _closure_triple(coxeter.coxeter_group("F4"), [(0, 1, 1), (1, 2, 2)], case, "W+(D4)")
    if case == "xv":
        return _closure_triple(coxeter.coxeter_group("F4"), [(0, 1, 1), (2, 3, 1), (1, 2, 2)], case, "W*(D4)")
    if case == "xvi":
        t = params.get("type", "A4")
        W = coxeter.coxeter_group(t)
        G = coxeter.tilde_extension(W)
        star = coxeter.star_extension(W)
        return TripleDatum(G, G.subgroup(star.generators, name=star.name), G.subgroup(W.generators, name=W.name),
                           case, labels={"G": f"W~({t})", "H": f"W*({t})", "F": f"W({t})"})
    if case == "xvii":
        W = coxeter.coxeter_group("D4")
        G = coxeter.tilde_extension(W)
        s = W.generators
        h = G.meta["extension"]
        H = G.normal_closure([s[0] @ s[2], s[0] @ s[3], h], name="<G*(4,2,2), h>")
        return TripleDatum(G, H, G.subgroup(W.generators, name=W.name), case,
                           labels={"G": "W~(D4)", "F": "W(D4)"})
    if case == ROTATION_ONLY:
        R = params.get("group")
        if R is None:
            R = coxeter.orientation_subgroup(coxeter.coxeter_group(params.get("type", "BC2")))
        return TripleDatum(R, R, R.subgroup([]), case)
    raise ValueError(f"unknown case {case!r}")


# one instance per case, plus the extra parameters singled out for checking
CASE_INSTANCES: list[tuple[str, dict]] = [
    ("i", {}), ("ii", {}), ("iii", {}), ("iv", {}), ("v", {}), ("vi", {}),
    ("vii", {"n": 3}), ("vii", {"n": 4}), ("viii", {}), ("ix", {}), ("x", {}), ("xi", {}),
    ("xii", {"m": 2, "k": 3}), ("xii", {"m": 3, "k": 2}), ("xiii", {}), ("xiv", {}), ("xv", {}),
    ("xvi", {"type": "A4"}), ("xvi", {"type": "D4"}), ("xvii", {}),
]


# ---------------------------------------------------------------------------
# assembly data library


def _a1() -> TripleDatum:
    # W(A1) on a line, so that paired copies give exactly -I
    W = MatrixGroup([CycloMatrix([[-1]])], name="W(A1)")
    return TripleDatum(W, W.subgroup([]), W, "iv", labels={"G": "W(A1)", "F": "W(A1)"})


def galois_twist_images(W: MatrixGroup, k: int) -> list[CycloMatrix]:
    """Images of W's simple reflections under a Galois twist followed by a signed permutation.

    The signed permutation is chosen so that the twisted reflections land back in W.
    """
    n = W.dim
    twisted = [g.galois(lift_galois_exponent(k, W.conductor)) for g in W.generators]
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            P = CycloMatrix([[signs[r] if perm[r] == c else 0 for c in range(n)] for r in range(n)])
            images = [P @ x @ P.transpose() for x in twisted]
            if all(W.contains(x) for x in images):
                return images
    raise ValueError("no signed permutation carries the twisted group back into W")


def library() -> dict[str, AssemblyData]:
    """Assembly data covering lone reflections, second-kind pairings and twisted isomorphisms."""
    out: dict[str, AssemblyData] = {}

    out["pair-A1"] = AssemblyData([_a1(), _a1()], [[(0, 0), (1, 0)]])
    out["triple-A1"] = AssemblyData([_a1(), _a1(), _a1()], [[(0, 0), (1, 0), (2, 0)]])
    out["A1-times-rotations"] = AssemblyData([_a1(), case_triple(ROTATION_ONLY, type="BC2")], [[(0, 0)]])

    a2, a2b = case_triple("iv", type="A2"), case_triple("iv", type="A2")
    out["diagonal-A2"] = AssemblyData([a2, a2b], [[(0, 0), (1, 0)]],
                                      [Isomorphism(((0, 0), (1, 0)), list(a2b.G.generators))])

    h3, h3b = case_triple("iv", type="H3"), case_triple("iv", type="H3")
    out["twisted-H3"] = AssemblyData([h3, h3b], [[(0, 0), (1, 0)]],
                                     [Isomorphism(((0, 0), (1, 0)), galois_twist_images(h3b.G, 2))])

    out["lone-M~5"] = AssemblyData([case_triple("i")], [[(0, 0)]])
    out["lone-W~(A4)"] = AssemblyData([case_triple("xvi", type="A4")], [[(0, 0)]])

    out["W+(H3)-paired-A1"] = AssemblyData([case_triple("v"), _a1()], [[(0, 0), (1, 0)]])

    bc3, a2c = case_triple("vii", n=3), case_triple("iv", type="A2")
    # the A2 factor of the BC3 quotient is the component containing the first simple reflection
    comp = next(i for i, c in enumerate(bc3.components) if len(c.generators) == 2)
    lone = 1 - comp
    out["BC3-with-A2"] = AssemblyData(
        [bc3, a2c], [[(0, comp), (1, 0)], [(0, lone)]],
        [Isomorphism(((0, comp), (1, 0)), list(a2c.G.generators))])

    i6, a2d = case_triple("xii", m=2, k=3), case_triple("iv", type="A2")
    out["I2(6)-with-A2"] = AssemblyData([i6, a2d], [[(0, 0), (1, 0)]],
                                        [Isomorphism(((0, 0), (1, 0)), list(a2d.G.generators))])
    return out
