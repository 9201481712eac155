"""Finite ordered simplicial complexes and simplicial maps.

Simplices are ascending vertex tuples.  Within each dimension they are kept
in lexicographic order, and that order is the chain basis used by every
matrix in the package.  The integer order on vertices is also the order
used for front/back faces in cup and cap products.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import DegreeOutOfRange, EmptyInput, InvalidMap, ParseError
from .linalg import RatMatrix

Simplex = tuple[int, ...]


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (entries assumed distinct)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    name: str
    vertex_count: int
    simplices_by_dim: tuple[tuple[Simplex, ...], ...]
    facets: tuple[Simplex, ...]
    pure: bool
    closed: bool

    @property
    def dim(self) -> int:
        return len(self.simplices_by_dim) - 1

    def simplices(self, i: int) -> tuple[Simplex, ...]:
        if 0 <= i <= self.dim:
            return self.simplices_by_dim[i]
        return ()

    def count(self, i: int) -> int:
        return len(self.simplices(i))

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.simplices_by_dim)

    @cached_property
    def _index(self) -> tuple[dict[Simplex, int], ...]:
        return tuple({s: k for k, s in enumerate(level)} for level in self.simplices_by_dim)

    def index_of(self, simplex: Simplex) -> int:
        return self._index[len(simplex) - 1][simplex]

    def contains(self, simplex: Simplex) -> bool:
        d = len(simplex) - 1
        return 0 <= d <= self.dim and simplex in self._index[d]

    def all_simplices(self) -> list[Simplex]:
        return [s for level in self.simplices_by_dim for s in level]

    @property
    def is_closed_pseudomanifold(self) -> bool:
        return self.pure and self.closed

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.name, self.vertex_count, self.simplices_by_dim) == (
            other.name, other.vertex_count, other.simplices_by_dim)

    def __hash__(self) -> int:
        return hash((self.name, self.simplices_by_dim))

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.name!r}, f={self.f_vector})"


def build_complex(facets: Sequence[Sequence[int]], name: str = "K") -> SimplicialComplex:
    """Close ``facets`` under faces and record the pseudomanifold flags.

    Facets given here may be in any vertex order and may include simplices
    that are faces of others; the maximal ones are recorded as ``facets``.
    """
    facets = [tuple(f) for f in facets]
    if not facets or any(len(f) == 0 for f in facets):
        raise EmptyInput("a complex needs at least one nonempty facet")
    normalized = []
    for f in facets:
        if any((not isinstance(v, int)) or isinstance(v, bool) or v < 0 for v in f):
            raise ParseError(f"vertex indices must be nonnegative integers: {f!r}")
        s = tuple(sorted(set(f)))
        if len(s) != len(f):
            raise ParseError(f"facet with repeated vertex: {f!r}")
        normalized.append(s)

    levels: dict[int, set[Simplex]] = {}
    for f in normalized:
        for k in range(1, len(f) + 1):
            levels.setdefault(k - 1, set()).update(combinations(f, k))
    top = max(levels)
    by_dim = tuple(tuple(sorted(levels.get(d, ()))) for d in range(top + 1))

    vertices = sorted(v for (v,) in by_dim[0])
    vertex_count = vertices[-1] + 1
    if vertices != list(range(vertex_count)):
        missing = sorted(set(range(vertex_count)) - set(vertices))
        raise ParseError(f"vertices must be 0..n-1 with each used; missing {missing}")

    # maximal simplices: not a proper face of another
    maximal = set(normalized)
    for f in normalized:
        for k in range(1, len(f)):
            maximal.difference_update(combinations(f, k))
    maximal_sorted = tuple(sorted(maximal, key=lambda s: (len(s), s)))

    pure = all(len(f) == top + 1 for f in maximal_sorted)
    closed = False
    if pure:
        if top == 0:
            closed = True
        else:
            face_count: dict[Simplex, int] = {}
            for f in maximal_sorted:
                for face in combinations(f, top):
                    face_count[face] = face_count.get(face, 0) + 1
            closed = all(c == 2 for c in face_count.values())

    return SimplicialComplex(name=name, vertex_count=vertex_count, simplices_by_dim=by_dim,
                             facets=maximal_sorted, pure=pure, closed=closed)


def boundary_matrix(K: SimplicialComplex, i: int) -> RatMatrix:
    """Matrix of the boundary C_i -> C_{i-1}; ``i = 0`` maps to the zero group."""
    if not 0 <= i <= K.dim:
        raise DegreeOutOfRange(f"degree {i} outside 0..{K.dim} for {K.name}")
    cols = K.simplices(i)
    if i == 0:
        return RatMatrix.zeros(0, len(cols))
    out = [[0] * len(cols) for _ in range(K.count(i - 1))]
    for j, s in enumerate(cols):
        for k in range(len(s)):
            face = s[:k] + s[k + 1:]
            out[K.index_of(face)][j] = -1 if k % 2 else 1
    return RatMatrix(K.count(i - 1), len(cols), out)


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    domain: SimplicialComplex
    codomain: SimplicialComplex
    vertex_map: tuple[int, ...]
    name: str = field(default="f")

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", tuple(self.vertex_map))
        if len(self.vertex_map) != self.domain.vertex_count:
            raise InvalidMap(f"vertex map has {len(self.vertex_map)} entries, "
                             f"domain {self.domain.name} has {self.domain.vertex_count} vertices")
        for v in self.vertex_map:
            if not (isinstance(v, int) and 0 <= v < self.codomain.vertex_count):
                raise InvalidMap(f"vertex image {v!r} not a vertex of {self.codomain.name}")
        for s in self.domain.facets:
            img = self.image(s)
            if not self.codomain.contains(img):
                raise InvalidMap(f"simplex {s} maps to {img}, not a simplex of {self.codomain.name}")

    def image(self, simplex: Simplex) -> Simplex:
        return tuple(sorted({self.vertex_map[v] for v in simplex}))

    def __call__(self, simplex: Simplex) -> tuple[int, Simplex | None]:
        """Chain-level image of one simplex as ``(sign, target)``; ``(0, None)`` if degenerate."""
        img = [self.vertex_map[v] for v in simplex]
        if len(set(img)) < len(img):
            return 0, None
        return permutation_sign(img), tuple(sorted(img))

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """``self ∘ first``."""
        if first.codomain is not self.domain and first.codomain != self.domain:
            raise InvalidMap("maps are not composable")
        return SimplicialMap(first.domain, self.codomain,
                             tuple(self.vertex_map[v] for v in first.vertex_map),
                             name=f"{self.name}∘{first.name}")

    @property
    def is_endomap(self) -> bool:
        return self.domain == self.codomain


def identity_map(K: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(K, K, tuple(range(K.vertex_count)), name="identity")


def chain_map(f: SimplicialMap, i: int) -> RatMatrix:
    """Matrix of f_# : C_i(domain) -> C_i(codomain)."""
    if not 0 <= i <= f.domain.dim:
        raise DegreeOutOfRange(f"degree {i} outside 0..{f.domain.dim}")
    src = f.domain.simplices(i)
    out = [[0] * len(src) for _ in range(f.codomain.count(i))]
    for j, s in enumerate(src):
        sign, t = f(s)
        if sign:
            if not f.codomain.contains(t):
                raise InvalidMap(f"simplex {s} maps to {t}, not a simplex of {f.codomain.name}")
            out[f.codomain.index_of(t)][j] = sign
    return RatMatrix(f.codomain.count(i), len(src), out)
