from fractions import Fraction

import pytest
import sympy

from lefcoin.complexes import boundary_matrix, build_complex, identity_map
from lefcoin.duality import (cap_matrix, cocycle_reps, cup_pairing, cup_value, degree, duality,
                             fundamental_class, umkehr)
from lefcoin.errors import DimensionMismatch, NonOrientable, NotClosed, ParseError
from lefcoin.homology import GradedMap, homology, induced_on_homology
from lefcoin.linalg import RatMatrix

ORIENTABLE = ["pt", "s1", "s1-6", "s2-oct", "t2-9"]


def det(m):
    return sympy.Matrix(m.rows, m.cols, lambda a, b: sympy.Rational(m[a, b].numerator, m[a, b].denominator)).det()


@pytest.mark.parametrize("name", ORIENTABLE)
def test_fundamental_class_is_unit_cycle(entries, name):
    K = entries[name].complex
    fc = fundamental_class(K)
    assert set(map(abs, fc.coefficients)) == {1}
    assert fc.coefficients[0] == 1
    if K.dim:
        assert not any(boundary_matrix(K, K.dim).apply(fc.chain))
    assert homology(K)[K.dim].cycle_reps.apply(fc.homology_coords) == fc.chain


def test_rp2_and_open_complexes(entries):
    with pytest.raises(NonOrientable):
        fundamental_class(entries["rp2-6"].complex)
    with pytest.raises(NotClosed):
        fundamental_class(build_complex([(0, 1, 2)]))
    with pytest.raises(ParseError):
        fundamental_class(entries["s1"].complex, seed=9)


@pytest.mark.parametrize("name", ["s1", "s2-oct", "t2-9"])
def test_seed_changes_sign_only(entries, name):
    K = entries[name].complex
    base = fundamental_class(K).coefficients
    for seed in range(len(base)):
        other = fundamental_class(K, seed).coefficients
        assert other == tuple(base[seed] * c for c in base)


def test_disconnected_components_seeded_independently():
    two = build_complex([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    fc = fundamental_class(two)
    assert homology(two).betti == (2, 2)
    assert not any(boundary_matrix(two, 1).apply(fc.chain))


def brute_pairing(K, i, seed=0):
    """⟨φ ∪ ψ, [K]⟩ summed facet by facet through cup_value on full cochains."""
    n = K.dim
    chain = fundamental_class(K, seed).chain
    left, right = cocycle_reps(K, n - i), cocycle_reps(K, i)
    return RatMatrix(left.rows, right.rows,
                     [[cup_value(K, left.row(a), n - i, right.row(b), i, chain) for b in range(right.rows)]
                      for a in range(left.rows)])


@pytest.mark.parametrize("name", ORIENTABLE)
def test_pairing_matches_brute_force(entries, name):
    K = entries[name].complex
    for i in range(K.dim + 1):
        assert cup_pairing(K, i) == brute_pairing(K, i)


def test_torus_pairing(entries):
    P = cup_pairing(entries["t2-9"].complex, 1)
    assert P == -P.T
    assert abs(det(P)) == 1


@pytest.mark.parametrize("name", ORIENTABLE)
def test_graded_commutativity(entries, name):
    K = entries[name].complex
    n = K.dim
    for i in range(n + 1):
        assert cup_pairing(K, i) == cup_pairing(K, n - i).T.scale((-1) ** (i * (n - i)))


@pytest.mark.parametrize("name", ORIENTABLE)
def test_duality_is_pairing(entries, name):
    K = entries[name].complex
    d = duality(K)
    for i in range(K.dim + 1):
        assert d.D[i] == d.pairing[K.dim - i]
        assert d.D[i] @ d.D_inv[i] == RatMatrix.identity(d.D[i].rows)


def test_pairing_independent_of_cocycle_representative(entries):
    # adding a coboundary to a cocycle does not change its cup with [T]
    K = entries["t2-9"].complex
    chain = fundamental_class(K).chain
    phi = cocycle_reps(K, 1).row(0)
    psi = cocycle_reps(K, 1).row(1)
    delta = boundary_matrix(K, 1).T.apply([1] + [0] * (K.count(0) - 1))
    shifted = [a + b for a, b in zip(phi, delta)]
    assert cup_value(K, shifted, 1, psi, 1, chain) == cup_value(K, phi, 1, psi, 1, chain)


def test_cap_with_point_class(entries):
    K = entries["s2-oct"].complex
    # [K] ∩ 1 = [K]
    fc = fundamental_class(K)
    assert cap_matrix(K, fc.chain, 2, 0) == RatMatrix.from_columns([fc.homology_coords], 1)


def test_umkehr_examples(entries):
    s1, s2 = entries["s1"], entries["s2-oct"]
    refl = umkehr(s1.maps["reflection"])
    assert refl.block(0) == RatMatrix.from_rows([[-1]])
    assert refl.block(1) == RatMatrix.from_rows([[1]])
    anti = umkehr(s2.maps["antipodal"])
    assert anti.block(0) == RatMatrix.from_rows([[-1]])
    assert anti.block(2) == RatMatrix.from_rows([[1]])
    assert umkehr(identity_map(s2.complex)) == GradedMap.identity((1, 0, 1))
    double = umkehr(s1.maps["double"])
    assert double.block(0) == RatMatrix.from_rows([[2]])


def test_umkehr_is_contravariant(entries):
    e = entries["t2-9"]
    endos = list(e.endomaps().values())
    for f in endos:
        for g in endos:
            assert umkehr(g.compose(f)) == umkehr(f) @ umkehr(g)


def test_umkehr_projection_formula(entries):
    # g^! ∘ g_* is multiplication by deg g on the top class
    for e in entries.values():
        if e.name == "rp2-6":
            continue
        for f in e.endomaps().values():
            n = e.complex.dim
            comp = umkehr(f) @ induced_on_homology(f)
            assert comp.block(n) == RatMatrix.from_rows([[degree(f)]])


def test_degree(entries):
    assert degree(entries["s1"].maps["double"]) == 2
    assert degree(entries["s1"].maps["fold"]) == 0
    assert degree(entries["s2-oct"].maps["antipodal"]) == -1
    assert degree(entries["t2-9"].maps["negate"]) == 1
    assert degree(entries["t2-9"].maps["flip"]) == -1
    with pytest.raises(DimensionMismatch):
        degree(entries["t2-9"].maps["circle-h0"])
    assert isinstance(degree(entries["s1"].maps["identity"]), Fraction)
