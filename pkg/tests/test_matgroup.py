import json
from collections import Counter
from fractions import Fraction
from itertools import product

import pytest

from rrgroups.catalog.coxeter import coxeter_group, orientation_subgroup
from rrgroups.catalog.monomial import h_group, m_group
from rrgroups.catalog.names import lookup
from rrgroups.cyclofield import CycloMatrix, as_cyclo, vector
from rrgroups.matgroup import CapExceeded, MatrixGroup, trivial_group


def e(n, i, c=1):
    v = [0] * n
    v[i] = c
    return vector(v)


def closure(gens):
    """Brute-force element set, used as an independent oracle for small groups."""
    n = gens[0].shape[0]
    seen = {CycloMatrix.identity(n)}
    todo = list(seen)
    while todo:
        x = todo.pop()
        for g in gens:
            y = g @ x
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def test_bc3_orbit_of_e1():
    W = coxeter_group("BC3")
    orb = set(W.orbit(e(3, 0)))
    assert orb == {e(3, i, s) for i in range(3) for s in (1, -1)}


def test_trivial_group_orbit():
    G = trivial_group(3)
    v = vector([1, 2, 3])
    assert G.orbit(v) == [v]


def test_e8_root_orbit_matches_explicit_root_list():
    W = coxeter_group("E8")
    orb = W.orbit(vector([1, 1, 0, 0, 0, 0, 0, 0]))
    roots = set()
    for i in range(8):
        for j in range(i + 1, 8):
            for a, b in product((1, -1), repeat=2):
                v = [0] * 8
                v[i], v[j] = a, b
                roots.add(vector(v))
    half = Fraction(1, 2)
    for signs in product((1, -1), repeat=8):
        if signs.count(1) % 2 == 0:
            roots.add(vector([s * half for s in signs]))
    assert len(roots) == 240
    assert set(orb) == roots


def test_a2_points_and_image():
    W = coxeter_group("A2")
    assert len(W.domain) == 3
    assert W.order() == 6


def test_bc2_rotation_subgroup_image():
    Wp = orientation_subgroup(coxeter_group("BC2"))
    assert {tuple(p) for p in Wp.domain.points} == {e(2, i, s) for i in range(2) for s in (1, -1)}
    assert Wp.order() == len(closure(Wp.generators)) == 4


def test_orders():
    assert trivial_group(4).order() == 1
    assert lookup("L").order() == 2580480


def test_membership_examples():
    minus = -CycloMatrix.identity(3)
    assert coxeter_group("BC3").contains(minus)
    assert not coxeter_group("A2").contains(minus)


def test_m8_generators_lie_in_l():
    L = lookup("L")
    assert all(L.contains(g) for g in m_group(8).generators)


def test_generated_order_examples():
    W = coxeter_group("BC2")
    rotations = [g for g in closure(W.generators) if not g.is_identity() and g.det() == as_cyclo(1)]
    assert W.generated_order(rotations) == 4
    assert W.generated_order([CycloMatrix.identity(2)]) == 1


def test_elements_examples():
    assert len(list(coxeter_group("A1").elements())) == 2
    els = list(coxeter_group("I2(5)").elements())
    codims = Counter(x.fixed_codim() for x in els)
    assert len(els) == 10
    assert codims == {0: 1, 1: 5, 2: 4}
    assert len({x.matrix for x in h_group(7).elements()}) == 168


def test_elements_respects_cap():
    with pytest.raises(CapExceeded):
        list(coxeter_group("BC3").elements(cap=10))


def test_conjugacy_classes_of_s3():
    sizes = sorted(s for _, s in coxeter_group("A2").conjugacy_class_reps())
    assert sizes == [1, 2, 3]


def test_conjugacy_classes_of_psl27_sum_to_order():
    reps = lookup("R6(PSL27)").conjugacy_class_reps()
    assert sum(s for _, s in reps) == 168
    assert len(reps) == 6


def test_abelian_group_has_singleton_classes():
    G = lookup("D(4)")
    assert all(s == 1 for _, s in G.conjugacy_class_reps())


def test_normal_closure_examples():
    W = coxeter_group("A4")
    assert W.normal_closure(W.generators[:1]).order() == 120
    B = coxeter_group("BC3")
    pair = CycloMatrix.diagonal([-1, -1, 1])
    N = B.normal_closure([pair])
    assert N.order() == 4
    assert B.is_normal_subgroup(N)
    assert B.normal_closure([]).order() == 1


def test_pointwise_stabilizer_examples():
    W = coxeter_group("BC2")
    S = W.pointwise_stabilizer([e(2, 0)])
    assert S.order() == 2
    assert S.contains(CycloMatrix.diagonal([1, -1]))
    assert W.pointwise_stabilizer([]).order() == 8
    A = coxeter_group("A2")
    assert A.pointwise_stabilizer([vector([Fraction(1, 3), 2, -5])]).order() == 1


def test_essential_dimension_of_a_realization_with_fixed_line():
    assert coxeter_group("A3").essential_dim == 3
    assert coxeter_group("E6").essential_dim == 6


def test_group_json_round_trip():
    G = coxeter_group("H3")
    obj = json.loads(json.dumps(G.to_json()))
    H = MatrixGroup.from_json(obj)
    assert H.dim == 3
    assert H.order() == 120
    assert H.same_group(G)


def test_order_agrees_with_element_count():
    for name in ("W(BC3)", "W+(H3)", "H6", "SO4(T/T;T/T)"):
        G = lookup(name)
        assert len({x.matrix for x in G.elements()}) == G.order()


def test_empty_generator_list_needs_dimension():
    with pytest.raises(ValueError):
        MatrixGroup([])
    assert MatrixGroup([], dim=3).order() == 1
