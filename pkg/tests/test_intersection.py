import pytest

from lefcoin.duality import cup_pairing, duality, fundamental_class
from lefcoin.errors import DimensionMismatch, InvalidMap, NotClosed, ShapeMismatch
from lefcoin.homology import GradedMap, induced_on_homology
from lefcoin.intersection import (canonical_intersection_theta, image_disjoint, inclusion_umkehr,
                                  intersection_lefschetz, intersection_number, make_inclusion)
from lefcoin.lefschetz import ThetaMap, fundamental_homology_class


@pytest.fixture
def torus(entries):
    e = entries["t2-9"]
    return e, {q: make_inclusion(e.complex, facets, q) for q, facets in e.subcomplexes.items()}


def test_inclusion_shape(torus):
    e, inc = torus
    h0 = inc["h0"]
    assert h0.codim == 1
    assert h0.sub.f_vector == (3, 3)
    assert h0.vertex_injection == (0, 1, 2)
    assert inc["v0"].vertex_injection == (0, 3, 6)


def test_bad_subcomplexes(entries):
    s2 = entries["s2-oct"].complex
    with pytest.raises(InvalidMap):
        make_inclusion(s2, [(0, 1)])
    with pytest.raises(NotClosed):
        make_inclusion(s2, [(0, 2)])


def test_identity_inclusion_umkehr(entries):
    s2 = entries["s2-oct"]
    whole = make_inclusion(s2.complex, s2.subcomplexes["whole"], "whole")
    assert inclusion_umkehr(whole) == GradedMap.identity((1, 0, 1))


def test_umkehr_of_top_class(torus, entries):
    e, inc = torus
    top = inclusion_umkehr(inc["h0"]).block(2).apply(fundamental_homology_class(e.complex).coords)
    assert abs(top[0]) == 1
    s2 = entries["s2-oct"]
    vertex = make_inclusion(s2.complex, s2.subcomplexes["vertex0"], "v")
    pt = inclusion_umkehr(vertex).block(2).apply(fundamental_homology_class(s2.complex).coords)
    assert abs(pt[0]) == 1


def test_parallel_and_transverse(torus):
    e, inc = torus
    assert intersection_number(e.maps["circle-h1"], inc["h0"]) == 0
    assert abs(intersection_number(e.maps["circle-v0"], inc["h0"])) == 1
    assert abs(intersection_number(e.maps["circle-h0"], inc["v0"])) == 1


def test_intersection_number_is_pairing(torus):
    # ⟨PD(h0) ∪ PD(v0), [T]⟩ is the algebraic intersection of the two circles
    e, inc = torus
    K = e.complex
    f = e.maps["circle-v0"]
    a = induced_on_homology(f).block(1).apply(fundamental_homology_class(f.domain).coords)
    b = induced_on_homology(e.maps["circle-h0"]).block(1).apply(fundamental_homology_class(f.domain).coords)
    d = duality(K)
    pa, pb = d.D_inv[1].apply(a), d.D_inv[1].apply(b)
    value = sum(pb[i] * cup_pairing(K, 1)[i, j] * pa[j] for i in range(2) for j in range(2))
    assert abs(value) == abs(intersection_number(f, inc["h0"])) == 1


def test_seed_flip(torus):
    e, inc = torus
    f = e.maps["circle-v0"]
    base = intersection_number(f, inc["h0"])
    q_facets = inc["h0"].sub.simplices(1)
    m_facets = f.domain.simplices(1)
    for seed in range(len(q_facets)):
        s = fundamental_class(inc["h0"].sub).coefficients[seed]
        assert intersection_number(f, inc["h0"], sub_seed=seed) == s * base
    for seed in range(len(m_facets)):
        s = fundamental_class(f.domain).coefficients[seed]
        assert intersection_number(f, inc["h0"], domain_seed=seed) == s * base
    for seed in range(0, 18, 5):
        s = fundamental_class(e.complex).coefficients[seed]
        assert intersection_number(f, inc["h0"], ambient_seed=seed) == s * base


def test_point_examples(entries):
    s2 = entries["s2-oct"]
    point = s2.maps["point"]
    missed = make_inclusion(s2.complex, s2.subcomplexes["vertex1"], "vertex1")
    whole = make_inclusion(s2.complex, s2.subcomplexes["whole"], "whole")
    assert image_disjoint(point, missed)
    assert intersection_number(point, missed) == 0
    assert intersection_number(point, whole) == 1


def test_dimension_mismatch(torus):
    e, inc = torus
    with pytest.raises(DimensionMismatch):
        intersection_number(e.maps["identity"], inc["h0"])


def test_intersection_lefschetz(torus):
    e, inc = torus
    f_par, f_tr = e.maps["circle-h1"], e.maps["circle-v0"]
    theta = canonical_intersection_theta(inc["h0"], f_tr.domain)
    assert intersection_lefschetz(f_par, inc["h0"], theta) == 0
    assert abs(intersection_lefschetz(f_tr, inc["h0"], theta)) == 1
    assert intersection_lefschetz(f_tr, inc["h0"], ThetaMap(1, 0, {})) == 0
    with pytest.raises(ShapeMismatch):
        intersection_lefschetz(f_tr, inc["h0"], ThetaMap(2, 0, {}))


def test_disjoint_images_vanish(entries):
    checked = 0
    for e in entries.values():
        for q, facets in e.subcomplexes.items():
            sub = make_inclusion(e.complex, facets, q)
            for f in e.maps.values():
                if image_disjoint(f, sub):
                    checked += 1
                    comp = inclusion_umkehr(sub) @ induced_on_homology(f)
                    assert all(b.is_zero() for b in comp.blocks.values())
    assert checked >= 3


def test_wrong_ambient(entries, torus):
    e, inc = torus
    with pytest.raises(ShapeMismatch):
        intersection_number(entries["s2-oct"].maps["identity"], inc["h0"])
