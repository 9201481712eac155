from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefcoin.errors import NotChainMap, ShapeMismatch, Singular
from lefcoin.homology import GradedMap
from lefcoin.linalg import RatMatrix, block_diag, invert
from lefcoin.trace import (ChainEndo, DualPair, GradedEndo, GradedSpace, alternating_trace,
                           categorical_trace, chain_trace, standard_pair, symmetry, tensor_apply,
                           tensor_maps, transport)

from strategies import matrices

dims_st = st.lists(st.integers(0, 3), min_size=1, max_size=4)


@st.composite
def graded_endos(draw, dims=None):
    dims = draw(dims_st) if dims is None else dims
    blocks = [draw(matrices(rows=d, cols=d)) for d in dims]
    return GradedEndo(GradedSpace.from_dims(dims), block_diag(blocks))


@st.composite
def endo_pairs(draw):
    dims = draw(dims_st)
    return draw(graded_endos(dims)), draw(graded_endos(dims))


@st.composite
def invertible_change(draw, dims):
    blocks = []
    for d in dims:
        m = draw(matrices(rows=d, cols=d))
        try:
            invert(m)
        except Singular:
            m = m + RatMatrix.identity(d).scale(100)   # diagonally dominant, invertible
        blocks.append(m)
    return GradedEndo(GradedSpace.from_dims(dims), block_diag(blocks))


def test_graded_space():
    V = GradedSpace.from_dims([1, 2])
    assert V.labels == (0, 1, 1)
    assert V.tensor(V).labels == (0, 1, 1, 1, 2, 2, 1, 2, 2)
    assert V.dual() == V


def test_grading_enforced():
    V = GradedSpace.from_dims([1, 1])
    with pytest.raises(ShapeMismatch):
        GradedEndo(V, RatMatrix.from_rows([[0, 1], [0, 0]]))
    GradedEndo(V, RatMatrix.from_rows([[0, 0], [1, 0]]), shift=1)


def test_trace_of_identity_is_euler():
    V = GradedSpace.from_dims([1, 2, 1])
    assert categorical_trace(GradedEndo(V, RatMatrix.identity(4))) == 0
    assert categorical_trace(GradedMap.identity((1, 0, 1))) == 2


def test_symmetry_sign():
    x = RatMatrix.from_rows([[1, 2], [3, 4]])
    out = symmetry(x, [0, 1], [1, 1])
    assert out == RatMatrix.from_rows([[1, -3], [2, -4]])


def test_koszul_sign_in_tensor_apply():
    V = GradedSpace.from_dims([1, 1])
    ident = GradedEndo(V, RatMatrix.identity(2))
    up = GradedEndo(V, RatMatrix.from_rows([[0, 0], [1, 0]]), shift=1)
    x = RatMatrix.from_rows([[0, 0], [1, 0]])   # e_1 ⊗ e_0, |e_1| = 1
    assert tensor_apply(ident, up, x) == RatMatrix.from_rows([[0, 0], [0, -1]])


def test_shifted_trace_rejected():
    V = GradedSpace.from_dims([1, 1])
    with pytest.raises(ShapeMismatch):
        categorical_trace(GradedEndo(V, RatMatrix.from_rows([[0, 0], [1, 0]]), shift=1))


def test_bad_dual_pair():
    V = GradedSpace.from_dims([2])
    pair = DualPair(V, RatMatrix.identity(2).scale(2), RatMatrix.identity(2))
    assert not pair.triangle_identities_hold()


@settings(max_examples=60, deadline=None)
@given(graded_endos())
def test_trace_is_supertrace(phi):
    want = sum(((-1) ** d * phi.matrix[i, i] for i, d in enumerate(phi.space.labels)), Fraction(0))
    assert categorical_trace(phi) == alternating_trace(phi) == want


@settings(max_examples=60, deadline=None)
@given(endo_pairs())
def test_cyclicity(pair):
    phi, psi = pair
    assert categorical_trace(phi @ psi) == categorical_trace(psi @ phi)


@settings(max_examples=40, deadline=None)
@given(graded_endos(), graded_endos())
def test_multiplicative_on_tensors(phi, psi):
    assert categorical_trace(tensor_maps(phi, psi)) == categorical_trace(phi) * categorical_trace(psi)


@settings(max_examples=40, deadline=None)
@given(graded_endos(), graded_endos())
def test_tensor_maps_agrees_with_elementwise(phi, psi):
    big = tensor_maps(phi, psi)
    for a in range(phi.space.dim):
        for b in range(psi.space.dim):
            x = RatMatrix(phi.space.dim, psi.space.dim,
                          [[int((i, j) == (a, b)) for j in range(psi.space.dim)] for i in range(phi.space.dim)])
            flat = big.matrix.column(a * psi.space.dim + b)
            y = tensor_apply(phi, psi, x)
            assert tuple(y[i, j] for i in range(y.rows) for j in range(y.cols)) == flat


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_basis_change_invariance(data):
    dims = data.draw(dims_st)
    phi = data.draw(graded_endos(dims))
    change = data.draw(invertible_change(dims))
    pair = standard_pair(phi.space)
    moved = transport(pair, change)
    assert moved.triangle_identities_hold()
    assert categorical_trace(phi, moved) == categorical_trace(phi)
    conj = GradedEndo(phi.space, invert(change.matrix) @ phi.matrix @ change.matrix)
    assert categorical_trace(conj) == categorical_trace(phi)


def test_hopf_trace_on_corpus(entries):
    for e in entries.values():
        for f in e.endomaps().values():
            phi = ChainEndo.of_map(f)
            assert chain_trace(phi) == categorical_trace(phi.on_homology())


def test_non_chain_map_rejected(entries):
    K = entries["s1"].complex
    blocks = (RatMatrix.identity(3), RatMatrix.zeros(3, 3))
    with pytest.raises(NotChainMap):
        chain_trace(ChainEndo(K, blocks))
