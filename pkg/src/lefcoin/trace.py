"""Symmetric monoidal trace for finite graded vector spaces over Q.

A graded space is a list of basis degree labels.  Elements of a tensor
product V ⊗ W are stored as ``dim V x dim W`` coordinate matrices.  Tensor
products of maps follow the Koszul rule

    (φ ⊗ ψ)(x ⊗ y) = (-1)^{|ψ||x|} φ(x) ⊗ ψ(y)

and the symmetry V ⊗ W -> W ⊗ V carries (-1)^{|x||y|}.  Duals are taken
degreewise with no degree negation, so the sign that makes the trace
alternating comes entirely from the symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complexes import SimplicialComplex, SimplicialMap, boundary_matrix, chain_map
from .errors import NotChainMap, ShapeMismatch
from .homology import GradedMap, homology
from .linalg import RatMatrix, block_diag, invert, kron


@dataclass(frozen=True)
class GradedSpace:
    labels: tuple[int, ...]

    @classmethod
    def from_dims(cls, dims: Sequence[int]) -> "GradedSpace":
        return cls(tuple(d for d, n in enumerate(dims) for _ in range(n)))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def tensor(self, other: "GradedSpace") -> "GradedSpace":
        """Basis e_a ⊗ f_b at flat index ``a * other.dim + b``."""
        return GradedSpace(tuple(a + b for a in self.labels for b in other.labels))

    def dual(self) -> "GradedSpace":
        return self


@dataclass(frozen=True)
class GradedEndo:
    """Linear map of a graded space to itself, raising degree by ``shift``."""

    space: GradedSpace
    matrix: RatMatrix
    shift: int = 0

    def __post_init__(self):
        n = self.space.dim
        if self.matrix.shape != (n, n):
            raise ShapeMismatch(f"matrix {self.matrix.shape} on a space of dim {n}")
        lab = self.space.labels
        for i in range(n):
            for j in range(n):
                if self.matrix[i, j] and lab[i] != lab[j] + self.shift:
                    raise ShapeMismatch(f"entry ({i},{j}) breaks the grading")

    @classmethod
    def from_graded_map(cls, phi: GradedMap) -> "GradedEndo":
        if phi.source != phi.target:
            raise ShapeMismatch("not an endomorphism")
        if phi.shift != 0:
            raise ShapeMismatch("categorical trace needs a degree-preserving map")
        return cls(GradedSpace.from_dims(phi.source),
                   block_diag([phi.block(i) for i in range(len(phi.source))]))

    def __matmul__(self, other: "GradedEndo") -> "GradedEndo":
        if self.space != other.space:
            raise ShapeMismatch("maps live on different spaces")
        return GradedEndo(self.space, self.matrix @ other.matrix, self.shift + other.shift)


def _koszul_rows(x: RatMatrix, labels: Sequence[int], shift: int) -> RatMatrix:
    if shift % 2 == 0:
        return x
    return RatMatrix(x.rows, x.cols, [[-v if labels[i] % 2 else v for v in x.row(i)]
                                      for i in range(x.rows)])


def tensor_apply(phi: GradedEndo, psi: GradedEndo, x: RatMatrix) -> RatMatrix:
    """(φ ⊗ ψ) applied to an element of V ⊗ W stored as a matrix."""
    return phi.matrix @ _koszul_rows(x, phi.space.labels, psi.shift) @ psi.matrix.T


def tensor_maps(phi: GradedEndo, psi: GradedEndo) -> GradedEndo:
    """φ ⊗ ψ as an endomorphism of V ⊗ W (flat Kronecker basis)."""
    space = phi.space.tensor(psi.space)
    signs = RatMatrix(space.dim, space.dim, [
        [(-1) ** (psi.shift * phi.space.labels[j // psi.space.dim]) if i == j else 0
         for j in range(space.dim)] for i in range(space.dim)])
    return GradedEndo(space, kron(phi.matrix, psi.matrix) @ signs, phi.shift + psi.shift)


def symmetry(x: RatMatrix, left: Sequence[int], right: Sequence[int]) -> RatMatrix:
    """τ : V ⊗ W -> W ⊗ V on a coordinate matrix, with the Koszul sign."""
    return RatMatrix(x.cols, x.rows, [[x[a, b] if (left[a] * right[b]) % 2 == 0 else -x[a, b]
                                       for a in range(x.rows)] for b in range(x.cols)])


@dataclass(frozen=True)
class DualPair:
    """Dual pair (V, V*) in coordinates.

    ``coev[a, b]`` is the coefficient of e_a ⊗ e^b in η(1) ∈ V ⊗ V*;
    ``ev[b, a]`` is ε(e^b ⊗ e_a).
    """

    space: GradedSpace
    coev: RatMatrix
    ev: RatMatrix

    def zigzag_left(self) -> RatMatrix:
        """Matrix of V -> V ⊗ V* ⊗ V -> V, built element by element."""
        n = self.space.dim
        cols = []
        for c in range(n):
            # (η ⊗ id)(e_c) = Σ coev[a,b] e_a ⊗ e^b ⊗ e_c, then id ⊗ ε
            cols.append([sum((self.coev[a, b] * self.ev[b, c] for b in range(n)), Fraction(0))
                         for a in range(n)])
        return RatMatrix.from_columns(cols, n)

    def zigzag_right(self) -> RatMatrix:
        """Matrix of V* -> V* ⊗ V ⊗ V* -> V*."""
        n = self.space.dim
        cols = []
        for c in range(n):
            # (id ⊗ η)(e^c) = Σ coev[a,b] e^c ⊗ e_a ⊗ e^b, then ε ⊗ id
            cols.append([sum((self.ev[c, a] * self.coev[a, b] for a in range(n)), Fraction(0))
                         for b in range(n)])
        return RatMatrix.from_columns(cols, n)

    def triangle_identities_hold(self) -> bool:
        ident = RatMatrix.identity(self.space.dim)
        return self.zigzag_left() == ident and self.zigzag_right() == ident


def standard_pair(space: GradedSpace) -> DualPair:
    ident = RatMatrix.identity(space.dim)
    return DualPair(space, ident, ident)


def transport(pair: DualPair, change: GradedEndo) -> DualPair:
    """Same object, dual basis changed by an invertible degree-preserving map."""
    if change.space != pair.space or change.shift != 0:
        raise ShapeMismatch("change of basis must be a degree-preserving map of the same space")
    return DualPair(pair.space, pair.coev @ change.matrix, invert(change.matrix) @ pair.ev)


def categorical_trace(phi: GradedEndo | GradedMap, pair: DualPair | None = None) -> Fraction:
    """ε ∘ τ ∘ (φ ⊗ id) ∘ η evaluated in coordinates."""
    if isinstance(phi, GradedMap):
        phi = GradedEndo.from_graded_map(phi)
    if phi.shift != 0:
        raise ShapeMismatch("categorical trace needs a degree-preserving map")
    if pair is None:
        pair = standard_pair(phi.space)
    if pair.space != phi.space:
        raise ShapeMismatch("dual pair is for a different object")
    labels = phi.space.labels
    ident = GradedEndo(phi.space, RatMatrix.identity(phi.space.dim))
    x = tensor_apply(phi, ident, pair.coev)      # in V ⊗ V*
    y = symmetry(x, labels, labels)              # in V* ⊗ V
    return sum((pair.ev[b, a] * y[b, a] for b in range(y.rows) for a in range(y.cols)
                if y[b, a]), Fraction(0))


def alternating_trace(phi: GradedEndo) -> Fraction:
    """Σ (-1)^deg of the diagonal entries; the contract categorical_trace must meet."""
    return sum(((-1) ** d * phi.matrix[i, i] for i, d in enumerate(phi.space.labels)), Fraction(0))


@dataclass(frozen=True)
class ChainEndo:
    """Degreewise endomorphism of the simplicial chains of a complex."""

    complex: SimplicialComplex
    blocks: tuple[RatMatrix, ...]

    @classmethod
    def of_map(cls, f: SimplicialMap) -> "ChainEndo":
        if not f.is_endomap:
            raise ShapeMismatch("chain trace needs a self-map")
        return cls(f.domain, tuple(chain_map(f, i) for i in range(f.domain.dim + 1)))

    def check(self) -> None:
        K = self.complex
        for i in range(1, K.dim + 1):
            bd = boundary_matrix(K, i)
            if bd @ self.blocks[i] != self.blocks[i - 1] @ bd:
                raise NotChainMap(f"does not commute with the boundary in degree {i}")

    def on_homology(self) -> GradedMap:
        h = homology(self.complex)
        blocks = {i: h[i].retraction @ b @ h[i].cycle_reps for i, b in enumerate(self.blocks)}
        return GradedMap(h.betti, h.betti, 0, blocks)


def chain_trace(phi: ChainEndo) -> Fraction:
    """Σ (-1)^i tr(φ_i) on chains."""
    phi.check()
    return sum(((-1) ** i * b.trace() for i, b in enumerate(phi.blocks)), Fraction(0))
