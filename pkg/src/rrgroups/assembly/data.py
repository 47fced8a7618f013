"""Triples (G_i, H_i, F_i), assembly data and their validation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from ..analysis.elements import inventory
from ..analysis.quotient import QuotientCoxeter, quotient_coxeter
from ..catalog.coxeter import (CoxeterDiagram, coxeter_matrix, coxeter_order_of_matrix, matrix_order,
                               normalize_type, simple_system)
from ..catalog.delta import is_reflection
from ..cyclofield import CycloMatrix, span_basis
from ..matgroup import MatrixGroup, NotInGroup

CASE_TAGS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv", "xv",
             "xvi", "xvii")
ROTATION_ONLY = "rotation-only"

ComponentRef = tuple[int, int]


class AssemblyError(ValueError):
    def __init__(self, report: "ValidationReport"):
        super().__init__("; ".join(f"{code}: {msg}" for code, msg in report.errors))
        self.report = report


def reflection_root(s: CycloMatrix) -> tuple:
    """A nonzero vector spanning the (-1)-eigenspace of a reflection."""
    n = s.shape[0]
    D = s - CycloMatrix.identity(n)
    for col in D.columns():
        if any(not x.is_zero() for x in col):
            return tuple(col)
    raise ValueError("identity has no root")


def simple_reflections(F: MatrixGroup) -> list[CycloMatrix]:
    """A Coxeter generating set of reflections for the reflection group F.

    The given generators are kept when they already form a Coxeter system; otherwise
    simple reflections are read off from the positive roots of all reflections in F.
    """
    gens = [g for g in F.generators if not g.is_identity()]
    if not gens:
        return []
    if all(is_reflection(g) for g in gens):
        if coxeter_order_of_matrix(coxeter_matrix(gens)) == F.order():
            return gens
    refl = inventory(F).reflections
    roots = []
    by_root = {}
    for s in refl:
        r = reflection_root(s)
        neg = tuple(-x for x in r)
        roots += [r, neg]
        by_root[r] = by_root[neg] = s
    simple = [by_root[r] for r in simple_system(roots)]
    if coxeter_order_of_matrix(coxeter_matrix(simple)) != F.order():
        raise ValueError("group is not a reflection group with a Coxeter generating set")
    return simple


@dataclass
class QuotientComponent:
    type_symbol: str
    generators: list[CycloMatrix]  # reflections of F whose cosets are the simple generators

    @property
    def trivial(self) -> bool:
        return len(self.generators) == 1


class TripleDatum:
    """G_i generated by the normal subgroups H_i (rotations) and F_i (reflections).

    `support` is the basis of V_i when the groups act on a shared ambient space and
    fix the orthogonal complement of V_i; it is None for a stand-alone block.
    """

    def __init__(self, G: MatrixGroup, H: MatrixGroup, F: MatrixGroup, case: str,
                 support: list[tuple] | None = None, labels: dict | None = None):
        self.G, self._H, self._F = G, H, F
        self.case = case
        self.support = support
        self.labels = dict(labels or {})

    def __repr__(self):
        return f"TripleDatum(case={self.case!r}, |G|={self.G.order()}, |H|={self.H.order()}, |F|={self.F.order()})"

    @cached_property
    def H(self) -> MatrixGroup:
        return self.G.subgroup([h for h in self._H.generators if not h.is_identity()], name=self._H.name)

    @cached_property
    def F(self) -> MatrixGroup:
        return self.G.subgroup([f for f in self._F.generators if not f.is_identity()], name=self._F.name)

    @property
    def dim(self) -> int:
        return len(self.support) if self.support is not None else self.G.essential_dim

    @cached_property
    def simple(self) -> list[CycloMatrix]:
        return simple_reflections(self.F)

    @cached_property
    def quotient(self) -> QuotientCoxeter:
        if not self.simple:
            return QuotientCoxeter([], [], self.G.order() // self.H.order())
        return quotient_coxeter(self.G, self.H, self.simple)

    @cached_property
    def components(self) -> list[QuotientComponent]:
        q = self.quotient
        if not q.generators:
            return []
        d = CoxeterDiagram.from_matrix(q.matrix)
        out = []
        for comp in d.components():
            sub = CoxeterDiagram.from_matrix([[q.matrix[a][b] for b in comp] for a in comp])
            out.append(QuotientComponent(sub.type_symbol(), [q.generators[a] for a in comp]))
        return out

    @cached_property
    def component_groups(self) -> list[MatrixGroup]:
        """<H_i, generators of one component>: the preimage of that quotient factor."""
        return [self.G.subgroup(self.H.generators + c.generators) for c in self.components]

    def component_of(self, s: CycloMatrix) -> int | None:
        for idx, K in enumerate(self.component_groups):
            if K.contains(s):
                return idx
        return None

    def same_coset(self, a: CycloMatrix, b: CycloMatrix) -> bool:
        return self.H.contains(a @ b.transpose())

    def signature(self) -> tuple:
        return (self.dim, self.G.order(), self.H.order(), self.F.order(), self.case,
                normalize_type(self.quotient.type_symbol))

    def to_json(self) -> dict:
        def spec(key, grp):
            label = self.labels.get(key)
            if isinstance(label, str) and not label.startswith("{"):
                obj = {"name": label}
            else:
                obj = {}
            obj["generators"] = [g.to_json() for g in grp.generators]
            obj["dim"] = grp.dim
            return obj

        out = {"G": spec("G", self.G), "H": spec("H", self._H), "F": spec("F", self._F), "case": self.case}
        if self.support is not None:
            out["support"] = [[x.to_json() for x in v] for v in self.support]
        return out


@dataclass
class Isomorphism:
    """Generator-image map between two equivalent quotient components.

    images[k] is a reflection of F_j whose coset is the image of the k-th generator
    of the source component.
    """

    pair: tuple[ComponentRef, ComponentRef]
    images: list[CycloMatrix]


@dataclass
class AssemblyData:
    triples: list[TripleDatum]
    classes: list[list[ComponentRef]]
    isos: list[Isomorphism] = field(default_factory=list)

    def component(self, ref: ComponentRef) -> QuotientComponent:
        return self.triples[ref[0]].components[ref[1]]

    def iso_for(self, a: ComponentRef, b: ComponentRef) -> Isomorphism | None:
        for iso in self.isos:
            if tuple(iso.pair) == (a, b):
                return iso
        return None

    def oriented_iso(self, a: ComponentRef, b: ComponentRef) -> tuple[ComponentRef, ComponentRef, Isomorphism] | None:
        iso = self.iso_for(a, b)
        if iso is not None:
            return a, b, iso
        iso = self.iso_for(b, a)
        if iso is not None:
            return b, a, iso
        return None

    def has_lone_class(self) -> bool:
        return any(len(c) == 1 and self.component(c[0]).trivial for c in self.classes)

    def signature(self) -> tuple:
        """Relabeling-invariant summary: triples and classes described by their contents."""
        sigs = [t.signature() for t in self.triples]

        def member(ref):
            return sigs[ref[0]], normalize_type(self.component(ref).type_symbol)

        classes = sorted(tuple(sorted(member(r) for r in c)) for c in self.classes)
        return tuple(sorted(sigs)), tuple(classes), len(self.isos)

    def to_json(self) -> dict:
        return {
            "triples": [t.to_json() for t in self.triples],
            "classes": [[list(r) for r in c] for c in self.classes],
            "isos": [{"pair": [list(r) for r in iso.pair], "images": [m.to_json() for m in iso.images]}
                     for iso in self.isos],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def _group_from_spec(obj, dim_hint: int | None = None) -> tuple[MatrixGroup, str | None]:
    from ..catalog.names import lookup

    if isinstance(obj, str):
        return lookup(obj), obj
    gens = [CycloMatrix.from_json(m) for m in obj.get("generators", [])]
    name = obj.get("name")
    if gens:
        return MatrixGroup(gens, name=name), name
    if name:
        return lookup(name), name
    dim = obj.get("dim", dim_hint)
    if dim is None:
        raise ValueError("group spec needs generators, a name or a dimension")
    return MatrixGroup([], name=name, dim=int(dim)), name


def data_from_json(obj: dict) -> AssemblyData:
    from ..cyclofield import CyclotomicNumber

    triples = []
    for t in obj["triples"]:
        G, gl = _group_from_spec(t["G"])
        H, hl = _group_from_spec(t["H"], G.dim)
        F, fl = _group_from_spec(t["F"], G.dim)
        support = None
        if "support" in t:
            support = [tuple(CyclotomicNumber.from_json(x) for x in v) for v in t["support"]]
        triples.append(TripleDatum(G, H, F, t.get("case", ""), support, {"G": gl, "H": hl, "F": fl}))
    classes = [[tuple(r) for r in c] for c in obj.get("classes", [])]
    isos = [Isomorphism((tuple(i["pair"][0]), tuple(i["pair"][1])),
                        [CycloMatrix.from_json(m) for m in i["images"]]) for i in obj.get("isos", [])]
    return AssemblyData(triples, classes, isos)


def data_from_text(text: str) -> AssemblyData:
    return data_from_json(json.loads(text))


# ---------------------------------------------------------------------------
# expected quotient diagrams per case


def _f_rank_type(t: TripleDatum) -> tuple[int, str]:
    simple = t.simple
    return len(simple), normalize_type(CoxeterDiagram.from_matrix(coxeter_matrix(simple)).type_symbol())


def expected_diagram(t: TripleDatum) -> str | None:
    """Quotient diagram the case tag prescribes for this triple, as a normalized type symbol."""
    rank, ftype = _f_rank_type(t) if t.simple else (0, "trivial")
    fixed = {
        "i": "A1", "ii": "A1", "v": "A1", "xvi": "A1",
        "iii": "A1xA1", "viii": "A1xA1", "xv": "A1xA1",
        "vi": "A2", "xi": "A2", "xvii": "A2",
        "ix": "A2xA1", "xiv": "A2xA1", "xiii": "A2xA2",
        ROTATION_ONLY: "trivial",
    }
    if t.case in fixed:
        return normalize_type(fixed[t.case])
    if t.case == "iv":
        return ftype
    if t.case == "vii":
        return normalize_type(f"A{rank - 1}xA1")
    if t.case == "x":
        return normalize_type(f"A{rank - 1}")
    if t.case == "xii":
        if rank != 2:
            return None
        km = matrix_order(t.simple[0] @ t.simple[1])
        m = t.H.order()
        if m == 0 or km % m:
            return None
        return normalize_type(f"I2({km // m})")
    return None


def identify_case(t: TripleDatum) -> str:
    """Case tag read off from the orders and the quotient diagram."""
    if not t.simple:
        return ROTATION_ONLY
    rank, ftype = _f_rank_type(t)
    q = normalize_type(t.quotient.type_symbol)
    parts = ftype.split("x")
    if len(parts) > 1:
        if all(p == "A1" for p in parts):
            return "i"
        return "ii" if q == "A1" else "iii"
    if t.G.order() != t.F.order():
        return "xvi" if q == "A1" else "xvii"
    if t.H.order() == 1:
        return "iv"
    if q == "A1":
        return "v"
    if rank == 2:
        return "xii"
    if ftype == "A3":
        return "vi"
    if ftype.startswith("BC"):
        if q == "A1xA1":
            return "viii"
        if rank == 4 and q == "A2xA1":
            return "ix"
        return "vii"
    if ftype.startswith("D"):
        return "xi" if rank == 4 and q == "A2" else "x"
    if ftype == "F4":
        return {"A2xA2": "xiii", "A2xA1": "xiv", "A1xA1": "xv"}.get(q, "unclassified")
    return "unclassified"


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    errors: list[tuple[str, str]] = field(default_factory=list)
    diagrams: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors

    def add(self, code: str, msg: str):
        self.errors.append((code, msg))

    def to_json(self) -> dict:
        return {"ok": self.ok, "errors": [{"code": c, "message": m} for c, m in self.errors],
                "diagrams": self.diagrams}


def _validate_triple(idx: int, t: TripleDatum, rep: ValidationReport) -> bool:
    tag = f"triple {idx}"
    if t.case not in CASE_TAGS and t.case != ROTATION_ONLY:
        rep.add("case-tag", f"{tag}: unknown case tag {t.case!r}")
        return False
    try:
        H, F = t.H, t.F
    except NotInGroup:
        rep.add("not-subgroup", f"{tag}: H or F is not contained in G")
        return False
    G = t.G
    if not all(h.det().is_rational() and h.det().to_fraction() == 1 for h in H.generators):
        rep.add("not-rotation-group", f"{tag}: H has a generator of determinant -1")
    if not all(is_reflection(f) for f in F.generators):
        rep.add("not-reflection-group", f"{tag}: F has a generator that is not a reflection")
        return False
    for name, N in (("H", H), ("F", F)):
        if not G.is_normal_subgroup(N):
            rep.add("not-normal", f"{tag}: {name} is not normal in G")
            return False
    if G.generated_order(H.generators + F.generators) != G.order():
        rep.add("not-generated", f"{tag}: G is not generated by H and F")
    stray = [s for s in inventory(G).reflections if not F.contains(s)]
    if stray:
        rep.add("reflection-closure", f"{tag}: {len(stray)} reflections of G lie outside F")
    if t.case == ROTATION_ONLY:
        if F.order() != 1 or H.order() != G.order():
            rep.add("case-diagram", f"{tag}: rotation-only triple needs F trivial and H = G")
        rep.diagrams[idx] = "trivial"
        return True
    try:
        q = t.quotient
    except ValueError as exc:
        rep.add("quotient", f"{tag}: {exc}")
        return False
    got = normalize_type(q.type_symbol)
    rep.diagrams[idx] = got
    if not q.is_coxeter_system():
        rep.add("quotient", f"{tag}: simple reflection cosets do not give a Coxeter system")
    want = expected_diagram(t)
    if want != got:
        rep.add("case-diagram", f"{tag}: case ({t.case}) prescribes {want}, quotient is {got}")
    return True


def _validate_iso(data: AssemblyData, a: ComponentRef, b: ComponentRef, iso: Isomorphism,
                  rep: ValidationReport):
    ta, tb = data.triples[a[0]], data.triples[b[0]]
    ca, cb = data.component(a), data.component(b)
    label = f"isomorphism {a}->{b}"
    if len(iso.images) != len(ca.generators):
        rep.add("iso-arity", f"{label}: expected {len(ca.generators)} images, got {len(iso.images)}")
        return
    if any(m.shape != tb.G.generators[0].shape for m in iso.images):
        rep.add("iso-shape", f"{label}: image matrices have the wrong size")
        return
    for m in iso.images:
        if not is_reflection(m) or not tb.F.contains(m):
            rep.add("iso-not-reflection", f"{label}: an image is not a reflection of F")
            return
        if tb.component_of(m) != b[1]:
            rep.add("iso-target", f"{label}: an image coset lies outside the target component")
            return
    gens = ca.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            src = _coset_order(ta, gens[i] @ gens[j])
            dst = _coset_order(tb, iso.images[i] @ iso.images[j])
            if src != dst:
                rep.add("iso-relations", f"{label}: Coxeter relation {i},{j} has order {src} but image {dst}")
                return
    K = tb.component_groups[b[1]]
    if tb.G.generated_order(tb.H.generators + iso.images) != K.order():
        rep.add("iso-not-onto", f"{label}: images do not generate the target component")


def _coset_order(t: TripleDatum, g: CycloMatrix, bound: int = 10_000) -> int:
    x, k = g, 1
    while not t.H.contains(x):
        x, k = x @ g, k + 1
        if k > bound:
            raise ValueError("coset order exceeds bound")
    return k


def validate_triple(t: TripleDatum) -> ValidationReport:
    """Checks on a single triple: normality, generation, reflection closure and its case diagram."""
    rep = ValidationReport()
    _validate_triple(0, t, rep)
    return rep


def validate(data: AssemblyData) -> ValidationReport:
    rep = ValidationReport()
    good = [_validate_triple(i, t, rep) for i, t in enumerate(data.triples)]
    if not all(good):
        return rep
    dims = {t.G.dim for t in data.triples}
    if any(t.support is not None for t in data.triples):
        if len(dims) != 1 or any(t.support is None for t in data.triples):
            rep.add("support", "ambient triples must all carry supports in one common space")
        else:
            basis = [v for t in data.triples for v in t.support]
            if len(span_basis(basis)) != len(basis):
                rep.add("support", "supports of different triples overlap")

    refs = [(i, c) for i, t in enumerate(data.triples) for c in range(len(t.components))]
    listed = [tuple(r) for cls in data.classes for r in cls]
    if sorted(listed) != sorted(refs):
        rep.add("partition", "classes do not partition the quotient components exactly once")
        return rep

    for cls in data.classes:
        owners = [r[0] for r in cls]
        if len(set(owners)) != len(owners):
            rep.add("class-same-factor", f"class {cls} has two members in one G_i/H_i")
        trivial = [data.component(r).trivial for r in cls]
        if not all(trivial):
            if len(cls) != 2:
                rep.add("nontrivial-class-size", f"class {cls} has nontrivial components but {len(cls)} members")
                continue
            a, b = cls
            ta, tb = data.component(a), data.component(b)
            if normalize_type(ta.type_symbol) != normalize_type(tb.type_symbol):
                rep.add("nontrivial-class-type", f"class {cls} pairs components of types "
                        f"{ta.type_symbol} and {tb.type_symbol}")
                continue
            found = data.oriented_iso(a, b)
            if found is None:
                rep.add("iso-missing", f"class {cls} has no isomorphism")
                continue
            _validate_iso(data, *found, rep)

    for i, t in enumerate(data.triples):
        lone = [cls for cls in data.classes if len(cls) == 1 and cls[0][0] == i and data.component(cls[0]).trivial]
        if len(lone) > 1:
            rep.add("unpaired-trivial", f"triple {i} has {len(lone)} unpaired trivial components")
    return rep
