"""Assembling reducible reflection-rotation groups from triples, and taking them apart again."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..analysis.elements import generated_by_reflections_and_rotations, inventory
from ..analysis.linear import Component, irreducible_components
from ..cyclofield import CycloMatrix, projector
from ..matgroup import GroupElement, MatrixGroup
from .data import AssemblyData, AssemblyError, Isomorphism, TripleDatum, identify_case, validate


@dataclass(frozen=True)
class RotationKind:
    kind: str  # first, second or neither
    support: tuple[int, ...]


def _projectors(components, n: int) -> list[CycloMatrix]:
    out = []
    for c in components:
        if isinstance(c, CycloMatrix):
            out.append(c)
        else:
            basis = c.basis if isinstance(c, Component) else c
            out.append(projector(basis, n))
    return out


def kind_of(g: GroupElement | CycloMatrix, components) -> RotationKind:
    """First kind: a rotation in one component, identity elsewhere; second kind: reflections in two."""
    m = g.matrix if isinstance(g, GroupElement) else g
    n = m.shape[0]
    D = m - CycloMatrix.identity(n)
    codims = [(D @ P).rank() for P in _projectors(components, n)]
    support = tuple(i for i, c in enumerate(codims) if c)
    moved = sorted(codims[i] for i in support)
    if D.rank() == 2 and moved == [2]:
        return RotationKind("first", support)
    if D.rank() == 2 and moved == [1, 1]:
        return RotationKind("second", support)
    return RotationKind("neither", support)


# ---------------------------------------------------------------------------
# assemble


def _embedding(data: AssemblyData):
    if all(t.support is not None for t in data.triples):
        n = data.triples[0].G.dim
        return n, (lambda i, m: m)
    offsets, n = [], 0
    for t in data.triples:
        offsets.append(n)
        n += t.G.dim

    def embed(i: int, m: CycloMatrix) -> CycloMatrix:
        k = m.shape[0]
        out = CycloMatrix.identity(offsets[i]) if offsets[i] else None
        out = m if out is None else out.block_diag(m)
        rest = n - offsets[i] - k
        return out.block_diag(CycloMatrix.identity(rest)) if rest else out

    return n, embed


def assembly_generators(data: AssemblyData) -> list[CycloMatrix]:
    n, embed = _embedding(data)
    gens: list[CycloMatrix] = []
    for i, t in enumerate(data.triples):
        gens += [embed(i, h) for h in t.H.generators if not h.is_identity()]
    for cls in data.classes:
        members = [tuple(r) for r in cls]
        if len(members) == 1:
            # an unpaired trivial component contributes its reflection
            i, c = members[0]
            gens.append(embed(i, data.component(members[0]).generators[0]))
            continue
        if all(data.component(r).trivial for r in members):
            reps = [embed(i, data.component((i, c)).generators[0]) for i, c in members]
            gens += [a @ b for a, b in zip(reps, reps[1:])]
            continue
        a, b, iso = data.oriented_iso(*members)
        src = data.component(a).generators
        gens += [embed(a[0], s) @ embed(b[0], x) for s, x in zip(src, iso.images)]
    return list(dict.fromkeys(g for g in gens if not g.is_identity())) or [CycloMatrix.identity(n)]


def assemble(data: AssemblyData, check: bool = True, name: str = "assembled") -> MatrixGroup:
    """Generated by the H_i, the products s1 s2 over equivalent reflection cosets and the lone reflections."""
    if check:
        report = validate(data)
        if not report.ok:
            raise AssemblyError(report)
    return MatrixGroup(assembly_generators(data), name=name)


# ---------------------------------------------------------------------------
# decompose


def _project(g: CycloMatrix, P: CycloMatrix, ident: CycloMatrix) -> CycloMatrix:
    # g preserves V and its complement, so g P + (I - P) is g on V and the identity elsewhere
    return g @ P + (ident - P)


def _greedy_subgroup(G: MatrixGroup, mats, name=None) -> MatrixGroup:
    chosen: list[CycloMatrix] = []
    sub = G.subgroup([], name=name)
    for m in dict.fromkeys(mats):
        if m.is_identity() or sub.contains(m):
            continue
        chosen.append(m)
        sub = G.subgroup(chosen, name=name)
    return sub


def _canonical_key(t: TripleDatum) -> tuple:
    blob = json.dumps([g.to_json() for g in t.G.generators], sort_keys=True)
    return t.dim, t.G.order(), t.H.order(), t.F.order(), blob


class DecompositionError(ValueError):
    pass


def decompose(G: MatrixGroup) -> AssemblyData:
    """Triples, equivalence classes and isomorphisms of a reflection-rotation group.

    The triples act on the ambient space of G, each supported on one nontrivial
    irreducible component.
    """
    inv = inventory(G)
    if not generated_by_reflections_and_rotations(G, inv):
        raise DecompositionError("group is not generated by its reflections and rotations")
    n = G.dim
    ident = CycloMatrix.identity(n)
    comps = [c for c in irreducible_components(G) if not c.trivial]
    if not comps:
        return AssemblyData([], [], [])
    projs = _projectors(comps, n)

    first: dict[int, list[CycloMatrix]] = {i: [] for i in range(len(comps))}
    mirror: dict[int, list[CycloMatrix]] = {i: [] for i in range(len(comps))}
    second: list[tuple[CycloMatrix, tuple[int, int]]] = []
    for s in inv.reflections:
        k = kind_of(s, projs)
        mirror[k.support[0]].append(s)
    for r in inv.rotations:
        k = kind_of(r, projs)
        if k.kind == "first":
            first[k.support[0]].append(r)
        elif k.kind == "second":
            second.append((r, k.support))
            for i in k.support:
                mirror[i].append(_project(r, projs[i], ident))

    triples = []
    for i, c in enumerate(comps):
        P = projs[i]
        gi = [_project(g, P, ident) for g in G.generators]
        Gi = MatrixGroup([g for g in dict.fromkeys(gi) if not g.is_identity()] or [ident], name=f"G_{i}")
        Hi = _greedy_subgroup(Gi, first[i], name=f"H_{i}")
        Fi = _greedy_subgroup(Gi, [_project(s, P, ident) for s in mirror[i]], name=f"F_{i}")
        t = TripleDatum(Gi, Hi, Fi, "", support=list(c.basis))
        t.case = identify_case(t)
        triples.append(t)

    order = sorted(range(len(triples)), key=lambda i: _canonical_key(triples[i]))
    relabel = {old: new for new, old in enumerate(order)}
    triples = [triples[i] for i in order]
    projs = [projs[i] for i in order]
    second = [(r, tuple(sorted(relabel[i] for i in sup))) for r, sup in second]

    parent = {(i, c): (i, c) for i, t in enumerate(triples) for c in range(len(t.components))}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    related: list[tuple[tuple[int, int], CycloMatrix, tuple[int, int], CycloMatrix]] = []
    for r, (i, j) in second:
        si, sj = _project(r, projs[i], ident), _project(r, projs[j], ident)
        if G.contains(si):
            continue
        a = (i, triples[i].component_of(si))
        b = (j, triples[j].component_of(sj))
        if a[1] is None or b[1] is None:
            raise DecompositionError("a reflection coset lies in no quotient component")
        related.append((a, si, b, sj))
        parent[find(a)] = find(b)

    groups: dict = {}
    for ref in parent:
        groups.setdefault(find(ref), []).append(ref)
    classes = sorted(sorted(v) for v in groups.values())

    isos = []
    for cls in classes:
        trivial = [triples[i].components[c].trivial for i, c in cls]
        if all(trivial):
            continue
        if len(cls) != 2:
            raise DecompositionError(f"nontrivial class {cls} does not have two members")
        a, b = cls
        ta, tb = triples[a[0]], triples[b[0]]
        images = []
        for s in ta.components[a[1]].generators:
            img = next((sj for x, si, y, sj in related if x == a and y == b and ta.same_coset(si, s)), None)
            if img is None:
                img = next((si for x, si, y, sj in related if x == b and y == a and ta.same_coset(sj, s)), None)
            if img is None:
                raise DecompositionError(f"no related reflection for a generator of component {a}")
            images.append(img)
        isos.append(Isomorphism((a, b), images))
    return AssemblyData(triples, classes, isos)
