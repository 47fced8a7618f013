"""Property tests for exact arithmetic and group invariants."""

import cmath
from collections import Counter
from fractions import Fraction
from functools import reduce
from math import gcd

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from rrgroups.analysis.elements import classify_element
from rrgroups.catalog.names import lookup
from rrgroups.cyclofield import ONE, ZERO, CycloMatrix, cos_sin, galois, vector, zeta

CONDUCTORS = [1, 3, 4, 5, 7, 8, 12, 15, 20]
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def cyclos(draw, n=None):
    n = draw(st.sampled_from(CONDUCTORS)) if n is None else n
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=n))
    den = draw(st.integers(1, 5))
    total = ZERO
    for k, c in enumerate(coeffs):
        total = total + zeta(n, k) * c
    return total * Fraction(1, den)


@st.composite
def same_field(draw, count):
    n = draw(st.sampled_from(CONDUCTORS))
    return n, [draw(cyclos(n)) for _ in range(count)]


def units(n):
    return [k for k in range(1, max(n, 2)) if gcd(k, n) == 1]


# field axioms


@SETTINGS
@given(same_field(3))
def test_ring_axioms(data):
    _, (a, b, c) = data
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@SETTINGS
@given(same_field(2))
def test_division_inverts_multiplication(data):
    _, (a, b) = data
    if b.is_zero():
        return
    assert (a / b) * b == a
    assert b * b.inverse() == ONE


@SETTINGS
@given(same_field(2))
def test_arithmetic_agrees_with_complex_evaluation(data):
    _, (a, b) = data
    assert cmath.isclose((a * b).to_complex(), a.to_complex() * b.to_complex(), abs_tol=1e-9)
    assert cmath.isclose((a + b).to_complex(), a.to_complex() + b.to_complex(), abs_tol=1e-9)


@SETTINGS
@given(st.integers(1, 60), st.integers(-100, 100))
def test_zeta_power_order(n, k):
    z = zeta(n, k)
    order = n // gcd(n, k)
    assert z ** order == ONE
    assert all(z ** j != ONE for j in range(1, order))


@SETTINGS
@given(st.integers(1, 30), st.integers(-40, 40), st.integers(-40, 40))
def test_angle_addition(m, j, k):
    cj, sj = cos_sin(j, m)
    ck, sk = cos_sin(k, m)
    c, s = cos_sin(j + k, m)
    assert c == cj * ck - sj * sk
    assert s == sj * ck + cj * sk
    assert c * c + s * s == ONE


# galois action


@SETTINGS
@given(same_field(2), st.data())
def test_galois_is_a_field_automorphism(data, draw):
    n, (a, b) = data
    k = draw.draw(st.sampled_from(units(n)))
    assert galois(a + b, k) == galois(a, k) + galois(b, k)
    assert galois(a * b, k) == galois(a, k) * galois(b, k)
    assert galois(galois(a, k), pow(k, -1, max(n, 2)) if n > 1 else 1) == a


@SETTINGS
@given(cyclos())
def test_complex_conjugation_is_galois_minus_one(a):
    expected = galois(a, -1) if a.conductor > 1 else a
    assert a.conjugate() == expected
    assert cmath.isclose(a.conjugate().to_complex(), a.to_complex().conjugate(), abs_tol=1e-9)


# matrices


@st.composite
def matrices(draw, size=None):
    n = draw(st.sampled_from([1, 4, 5, 8]))
    r = draw(st.integers(1, 3)) if size is None else size
    c = draw(st.integers(1, 3)) if size is None else size
    return CycloMatrix([[draw(cyclos(n)) for _ in range(c)] for _ in range(r)])


@SETTINGS
@given(matrices())
def test_rank_of_transpose(M):
    assert M.rank() == M.transpose().rank()
    r, c = M.shape
    assert len(M.kernel()) == c - M.rank()
    for v in M.kernel():
        assert all(x.is_zero() for x in M.apply(v))


@SETTINGS
@given(st.integers(1, 3).flatmap(lambda n: matrices(size=n)))
def test_inverse_round_trip(M):
    n = M.shape[0]
    if M.det().is_zero():
        assert M.rank() < n
        return
    assert M @ M.inverse() == CycloMatrix.identity(n)
    assert M.inverse() @ M == CycloMatrix.identity(n)
    assert (M @ M).det() == M.det() * M.det()


# groups

GROUPS = {name: lookup(name) for name in ["W(H3)", "W(BC3)", "W(A4)", "W(F4)", "M7p", "W*(D4)"]}


@st.composite
def words(draw, G):
    gens = G.generators
    idx = draw(st.lists(st.integers(0, len(gens) - 1), min_size=0, max_size=12))
    return reduce(lambda x, i: x @ gens[i], idx, CycloMatrix.identity(G.dim))


@st.composite
def group_and_elements(draw, count):
    name = draw(st.sampled_from(sorted(GROUPS)))
    G = GROUPS[name]
    return G, [draw(words(G)) for _ in range(count)]


@SETTINGS
@given(group_and_elements(2))
def test_products_of_members_are_members(data):
    G, (g, h) = data
    assert G.contains(g) and G.contains(h)
    assert G.contains(g @ h)
    assert G.contains(g.inverse())


@SETTINGS
@given(group_and_elements(2))
def test_lagrange(data):
    G, elems = data
    assert G.order() % G.subgroup(elems).order() == 0


@SETTINGS
@given(group_and_elements(1), st.lists(st.integers(-2, 2), min_size=8, max_size=8))
def test_orbit_length_divides_order(data, coords):
    G, (g,) = data
    v = vector(coords[: G.dim])
    orbit = G.orbit(g.apply(v))
    assert G.order() % len(orbit) == 0
    assert len(orbit) == len(G.orbit(v))


@SETTINGS
@given(group_and_elements(2))
def test_classification_is_conjugation_invariant(data):
    G, (g, h) = data
    a, b = classify_element(g), classify_element(h @ g @ h.inverse())
    assert a == b
    assert a.fixed_dim + a.codim == G.dim
    assert g.is_orthogonal()


def test_class_representatives_have_consistent_fixed_dims():
    G = GROUPS["W(H3)"]
    by_class = Counter()
    for rep, size in G.conjugacy_class_reps():
        by_class[classify_element(rep.matrix).fixed_dim] += size
    direct = Counter(classify_element(x.matrix).fixed_dim for x in G.elements())
    assert by_class == direct


@SETTINGS
@given(group_and_elements(1), st.sampled_from([1, 3, 7, 9, 11, 13, 17, 19]))
def test_galois_images_stay_orthogonal(data, k):
    G, (g,) = data
    n = g.conductor
    if gcd(k, n) != 1:
        return
    assert g.galois(k).is_orthogonal()
