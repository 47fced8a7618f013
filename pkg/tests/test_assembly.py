import pytest

from rrgroups.analysis.elements import generated_by_reflections_and_rotations, inventory
from rrgroups.analysis.linear import commutant_dimension
from rrgroups.assembly import (
    AssemblyData,
    AssemblyError,
    DecompositionError,
    Isomorphism,
    TripleDatum,
    assemble,
    data_from_text,
    decompose,
    identify_case,
    kind_of,
    validate,
    validate_triple,
)
from rrgroups.assembly.cases import CASE_INSTANCES, case_triple, galois_twist_images, library
from rrgroups.catalog import imprimitive
from rrgroups.catalog.coxeter import coxeter_group
from rrgroups.catalog.delta import delta_group
from rrgroups.cyclofield import CycloMatrix
from rrgroups.matgroup import MatrixGroup

LIB = library()
ROT = CycloMatrix([[0, -1], [1, 0]])


def errors(data):
    return {code for code, _ in validate(data).errors}


def a1_times_bc2_rotations():
    return MatrixGroup([CycloMatrix([[-1]]).block_diag(CycloMatrix.identity(2)),
                        CycloMatrix.identity(1).block_diag(ROT)], name="W(A1)xW+(BC2)")


# validation


def test_case_vii_triple_is_valid():
    rep = validate_triple(case_triple("vii", n=3))
    assert rep.ok
    assert rep.diagrams[0] == "A2xA1"


def test_three_trivial_components_in_one_class():
    data = LIB["triple-A1"]
    assert validate(data).ok
    assert [len(c) for c in data.classes] == [3]


def test_non_reflection_iso_is_rejected():
    d = LIB["diagonal-A2"]
    s = d.triples[1].G.generators
    bad = AssemblyData(d.triples, d.classes, [Isomorphism(((0, 0), (1, 0)), [s[0] @ s[1], s[1]])])
    assert "iso-not-reflection" in errors(bad)


def test_relation_breaking_iso_is_rejected():
    d = LIB["BC3-with-A2"]
    images = d.isos[0].images
    # both generators of the A2 quotient sent to one reflection: the product has order 1, not 3
    iso = Isomorphism(d.isos[0].pair, [images[0], images[0]])
    assert "iso-relations" in errors(AssemblyData(d.triples, d.classes, [iso]))


def test_missing_iso():
    d = LIB["diagonal-A2"]
    assert "iso-missing" in errors(AssemblyData(d.triples, d.classes, []))


def test_class_within_one_factor():
    d = LIB["BC3-with-A2"]
    bc3 = d.triples[0]
    refs = [[(0, 0), (0, 1)], [(1, 0)]]
    assert len(bc3.components) == 2
    assert "class-same-factor" in errors(AssemblyData(d.triples, refs, d.isos))


def test_classes_must_partition():
    d = LIB["pair-A1"]
    assert "partition" in errors(AssemblyData(d.triples, [[(0, 0)]]))


def test_two_unpaired_trivial_components_in_one_factor():
    t = case_triple("xii", m=3, k=2)
    assert [c.trivial for c in t.components] == [True, True]
    assert "unpaired-trivial" in errors(AssemblyData([t], [[(0, 0)], [(0, 1)]]))


def test_nontrivial_class_needs_two_members():
    a, b, c = (case_triple("iv", type="A2") for _ in range(3))
    data = AssemblyData([a, b, c], [[(0, 0), (1, 0), (2, 0)]])
    assert "nontrivial-class-size" in errors(data)


def test_nontrivial_class_needs_matching_types():
    data = AssemblyData([case_triple("iv", type="A2"), case_triple("iv", type="BC2")], [[(0, 0), (1, 0)]])
    assert "nontrivial-class-type" in errors(data)


def test_wrong_case_tag():
    t = case_triple("vii", n=3)
    t.case = "xiii"
    assert "case-diagram" in {c for c, _ in validate_triple(t).errors}
    t.case = "xviii"
    assert "case-tag" in {c for c, _ in validate_triple(t).errors}


def test_triple_with_non_normal_subgroup():
    W = coxeter_group("A2")
    t = TripleDatum(W, W.subgroup([W.generators[0] @ W.generators[0]]), W.subgroup(W.generators[:1]), "iv")
    assert "not-normal" in {c for c, _ in validate_triple(t).errors}


def test_reflection_closure_violation():
    W = coxeter_group("BC2")
    short = W.normal_closure(W.generators[:1])
    t = TripleDatum(W, W.subgroup([]), short, "iv")
    assert "reflection-closure" in {c for c, _ in validate_triple(t).errors}


def test_assemble_refuses_invalid_data():
    d = LIB["diagonal-A2"]
    with pytest.raises(AssemblyError):
        assemble(AssemblyData(d.triples, d.classes, []))


# the case library


@pytest.mark.parametrize("case,params", CASE_INSTANCES, ids=[f"{c}-{p}" for c, p in CASE_INSTANCES])
def test_case_instance_is_valid_and_identified(case, params):
    t = case_triple(case, **params)
    rep = validate_triple(t)
    assert rep.ok, rep.errors
    assert identify_case(t) == case


# assembling


def test_pair_of_a1_gives_minus_identity():
    G = assemble(LIB["pair-A1"])
    assert {x.matrix for x in G.elements()} == {CycloMatrix.identity(2), -CycloMatrix.identity(2)}


def test_diagonal_a2_has_order_six():
    G = assemble(LIB["diagonal-A2"])
    assert G.order() == 6
    assert G.same_group(delta_group(coxeter_group("A2")))


def test_twisted_h3_has_no_reflections():
    G = assemble(LIB["twisted-H3"])
    assert G.order() == 120
    assert inventory(G).reflections == []


@pytest.mark.parametrize("name", sorted(LIB))
def test_assembled_groups_are_reflection_rotation_groups(name):
    G = assemble(LIB[name])
    inv = inventory(G)
    assert generated_by_reflections_and_rotations(G, inv)
    assert (len(inv.reflections) > 0) == LIB[name].has_lone_class()


# decomposing


def test_decompose_diagonal_a2():
    G = delta_group(coxeter_group("A2"))
    data = decompose(G)
    assert [(t.G.order(), t.H.order(), t.F.order()) for t in data.triples] == [(6, 1, 6)] * 2
    assert data.classes == [[(0, 0), (1, 0)]]
    assert len(data.isos) == 1
    iso = data.isos[0]
    # in the diagonal group, s x lies in G exactly when x is the twin block of s
    for s, x in zip(data.component(iso.pair[0]).generators, iso.images):
        assert G.contains(s @ x)
        assert not G.contains(s)


def test_decompose_direct_product_with_rotations():
    data = decompose(a1_times_bc2_rotations())
    cases = sorted(t.case for t in data.triples)
    assert cases == ["iv", "rotation-only"]
    rot = next(t for t in data.triples if t.case == "rotation-only")
    assert rot.H.order() == 4 and rot.F.order() == 1
    # the rotation-only triple has a trivial quotient, so the single A1 is the only class
    assert data.classes == [[(0, 0)]] or data.classes == [[(1, 0)]]
    assert data.isos == []


def test_decompose_block_diagonal_part_of_g_star_phi():
    D = imprimitive.paired_dihedral(6, 2)
    data = decompose(D)
    assert [(t.case, t.G.order(), t.H.order(), t.F.order()) for t in data.triples] == [("xii", 12, 3, 12)] * 2
    assert all(len(c) == 2 and c[0][0] != c[1][0] for c in data.classes)
    assert validate(data).ok


def test_decompose_rejects_groups_without_generating_rotations():
    c = CycloMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    G = MatrixGroup([c.block_diag(c.transpose())])
    # a diagonal three-cycle pair has codim 4 and no rotations
    with pytest.raises(DecompositionError):
        decompose(G)


def test_kind_of_examples():
    I2 = CycloMatrix.identity(2)
    s = CycloMatrix([[1, 0], [0, -1]])
    comps = [[(1, 0, 0, 0), (0, 1, 0, 0)], [(0, 0, 1, 0), (0, 0, 0, 1)]]
    assert kind_of(ROT.block_diag(I2), comps).kind == "first"
    assert kind_of(ROT.block_diag(I2), comps).support == (0,)
    assert kind_of(s.block_diag(s), comps).kind == "second"
    assert kind_of(s.block_diag(ROT), comps).kind == "neither"


# round trips and structural properties


@pytest.mark.parametrize("name", sorted(LIB))
def test_round_trip(name):
    data = LIB[name]
    G = assemble(data)
    back = decompose(G)
    assert validate(back).ok
    assert back.signature() == data.signature()
    H = assemble(back)
    assert H.same_group(G) and G.same_group(H)


@pytest.mark.parametrize("name", sorted(LIB))
def test_decomposed_classes_pair_isomorphic_components(name):
    data = decompose(assemble(LIB[name]))
    seen = set()
    for cls in data.classes:
        assert not seen & set(cls)
        seen |= set(cls)
        if len(cls) == 1:
            # an unrelated coset is an isolated vertex
            assert data.component(cls[0]).trivial
        elif not data.component(cls[0]).trivial:
            assert len(cls) == 2 and cls[0][0] != cls[1][0]
            assert data.component(cls[0]).type_symbol == data.component(cls[1]).type_symbol
    assert seen == {(i, c) for i, t in enumerate(data.triples) for c in range(len(t.components))}


@pytest.mark.parametrize("name", sorted(LIB))
def test_reflections_come_from_lone_classes(name):
    G = assemble(LIB[name])
    data = decompose(G)
    projs = [t.support for t in data.triples]
    lone = {c[0] for c in data.classes if len(c) == 1}
    for s in inventory(G).reflections:
        k = kind_of(s, projs)
        assert len(k.support) == 1
        i = k.support[0]
        t = data.triples[i]
        assert t.F.contains(s)
        assert (i, t.component_of(s)) in lone


def test_assembly_json_round_trip():
    data = LIB["BC3-with-A2"]
    back = data_from_text(data.dumps())
    assert validate(back).ok
    assert back.signature() == data.signature()
    assert assemble(back).same_group(assemble(data))


def test_assembly_json_with_catalog_names():
    text = '{"triples": [{"G": "W(H3)", "H": "W+(H3)", "F": "W(H3)", "case": "v"}], "classes": [[[0, 0]]]}'
    data = data_from_text(text)
    assert validate(data).ok
    assert assemble(data).order() == 120


def test_galois_images_stay_in_the_group():
    W = coxeter_group("H3")
    images = galois_twist_images(W, 2)
    assert all(W.contains(x) for x in images)


def test_identity_and_galois_pairings_have_stated_commutants():
    # stated as 2 against 1 for the two diagonal H3 groups
    W = coxeter_group("H3")
    dims = commutant_dimension(delta_group(W, "id")), commutant_dimension(delta_group(W, "galois2"))
    assert dims == (2, 1)


def test_identity_and_galois_pairings_are_distinguished():
    W = coxeter_group("H3")
    G_id, G_sigma = delta_group(W, "id"), delta_group(W, "galois2")
    assert G_id.order() == G_sigma.order() == 120
    assert len(inventory(G_id).rotations) == len(inventory(G_sigma).rotations)
    assert commutant_dimension(G_id) != commutant_dimension(G_sigma)
    twisted = assemble(LIB["twisted-H3"])
    assert commutant_dimension(twisted) == commutant_dimension(G_sigma)
