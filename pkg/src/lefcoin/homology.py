"""Rational simplicial homology with explicit bases.

Cohomology is never computed separately: H^i is the dual of H_i with the
dual basis, and the rows of the retraction C_i -> H_i are cocycles
representing that dual basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .complexes import SimplicialComplex, SimplicialMap, boundary_matrix, chain_map
from .errors import InvariantViolation, ShapeMismatch
from .linalg import RatMatrix, independent_columns, invert, kernel_basis, ZERO


@dataclass(frozen=True)
class DegreeHomology:
    degree: int
    betti: int
    cycle_reps: RatMatrix   # C_i x betti
    retraction: RatMatrix   # betti x C_i


@dataclass(frozen=True)
class HomologyData:
    complex: SimplicialComplex
    degrees: tuple[DegreeHomology, ...]

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(d.betti for d in self.degrees)

    def __getitem__(self, i: int) -> DegreeHomology:
        return self.degrees[i]

    def dim(self, i: int) -> int:
        return self.degrees[i].betti if 0 <= i < len(self.degrees) else 0

    def retract(self, i: int, chain: Sequence) -> tuple[Fraction, ...]:
        return self.degrees[i].retraction.apply(chain)

    def augmentation(self) -> tuple[Fraction, ...]:
        """Row vector H_0 -> Q: total coefficient of each H_0 representative."""
        reps = self.degrees[0].cycle_reps
        return tuple(sum(reps.column(j), ZERO) for j in range(reps.cols))


def _degree_homology(K: SimplicialComplex, i: int) -> DegreeHomology:
    n_i = K.count(i)
    cycles = kernel_basis(boundary_matrix(K, i))
    if i < K.dim:
        bd = boundary_matrix(K, i + 1)
        bcols = [bd.column(j) for j in independent_columns(bd)]
    else:
        bcols = []
    # greedy echelon completion: boundaries first, then cycles in kernel order
    stacked = RatMatrix.from_columns(bcols + cycles, n_i)
    chosen = [j - len(bcols) for j in independent_columns(stacked) if j >= len(bcols)]
    reps = [cycles[j] for j in chosen]

    # extend boundaries + reps to a basis of C_i; the reps' coordinate rows
    # in that basis form a retraction that kills boundaries
    std = [tuple(Fraction(int(k == j)) for k in range(n_i)) for j in range(n_i)]
    full = RatMatrix.from_columns(bcols + reps + std, n_i)
    basis_idx = independent_columns(full)
    basis = full.select_columns(basis_idx)
    coords = invert(basis) if n_i else basis
    rep_rows = list(range(len(bcols), len(bcols) + len(reps)))
    retraction = coords.select_rows(rep_rows) if n_i else RatMatrix.zeros(0, 0)
    return DegreeHomology(
        degree=i,
        betti=len(reps),
        cycle_reps=RatMatrix.from_columns(reps, n_i),
        retraction=retraction,
    )


@lru_cache(maxsize=None)
def homology(K: SimplicialComplex) -> HomologyData:
    return HomologyData(K, tuple(_degree_homology(K, i) for i in range(K.dim + 1)))


def euler_characteristic(K: SimplicialComplex) -> Fraction:
    """Alternating simplex count, cross-checked against the alternating betti sum."""
    chi = Fraction(sum((-1) ** i * c for i, c in enumerate(K.f_vector)))
    from_betti = sum((-1) ** i * b for i, b in enumerate(homology(K).betti))
    if chi != from_betti:
        raise InvariantViolation(f"euler {chi} != betti sum {from_betti} for {K.name}")
    return chi


@dataclass(frozen=True)
class GradedMap:
    """Degreewise linear map with block i : H_i(source) -> H_{i+shift}(target).

    ``source`` and ``target`` are graded dimension vectors (index = degree).
    Missing blocks are zero.
    """

    source: tuple[int, ...]
    target: tuple[int, ...]
    shift: int = 0
    blocks: Mapping[int, RatMatrix] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        clean = {}
        for i, b in dict(self.blocks).items():
            want = (_dim(self.target, i + self.shift), _dim(self.source, i))
            if b.shape != want:
                raise ShapeMismatch(f"block {i} has shape {b.shape}, expected {want}")
            if want[0] and want[1]:
                clean[i] = b
        object.__setattr__(self, "blocks", clean)

    def block(self, i: int) -> RatMatrix:
        if i in self.blocks:
            return self.blocks[i]
        return RatMatrix.zeros(_dim(self.target, i + self.shift), _dim(self.source, i))

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """``self ∘ other``."""
        if other.target != self.source:
            raise ShapeMismatch(f"cannot compose: {other.target} vs {self.source}")
        blocks = {i: self.block(i + other.shift) @ other.block(i) for i in range(len(other.source))}
        return GradedMap(other.source, self.target, self.shift + other.shift, blocks)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if (self.source, self.target, self.shift) != (other.source, other.target, other.shift):
            raise ShapeMismatch("cannot add graded maps of different type")
        return GradedMap(self.source, self.target, self.shift,
                         {i: self.block(i) + other.block(i) for i in range(len(self.source))})

    def scale(self, c) -> "GradedMap":
        return GradedMap(self.source, self.target, self.shift,
                         {i: b.scale(c) for i, b in self.blocks.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return ((self.source, self.target, self.shift) == (other.source, other.target, other.shift)
                and all(self.block(i) == other.block(i) for i in range(len(self.source))))

    def alternating_trace(self) -> Fraction:
        """Sum of (-1)^i tr(block i); blocks that change degree contribute 0."""
        if self.shift != 0:
            return Fraction(0)
        total = Fraction(0)
        for i, b in self.blocks.items():
            if b.rows == b.cols:
                total += (-1) ** i * b.trace()
        return total

    @classmethod
    def identity(cls, dims: Sequence[int]) -> "GradedMap":
        return cls(dims, dims, 0, {i: RatMatrix.identity(d) for i, d in enumerate(dims)})


def _dim(dims: Sequence[int], i: int) -> int:
    return dims[i] if 0 <= i < len(dims) else 0


def induced_block(f: SimplicialMap, i: int) -> RatMatrix:
    hm, hn = homology(f.domain), homology(f.codomain)
    if i > f.codomain.dim:
        return RatMatrix.zeros(0, hm.dim(i))
    return hn[i].retraction @ chain_map(f, i) @ hm[i].cycle_reps


def induced_on_homology(f: SimplicialMap) -> GradedMap:
    hm, hn = homology(f.domain), homology(f.codomain)
    blocks = {i: induced_block(f, i) for i in range(f.domain.dim + 1) if i <= f.codomain.dim}
    return GradedMap(hm.betti, hn.betti, 0, blocks)

