"""Fundamental classes, cup/cap products and Poincaré duality matrices.

Conventions (global vertex order, front faces first):

* cup:  (φ ∪ ψ)(v_0..v_n) = φ(v_0..v_p) · ψ(v_p..v_n),  p = |φ|
* cap:  (v_0..v_p) ∩ φ   = φ(v_{p-d}..v_p) · (v_0..v_{p-d}),  d = |φ|

With these, ⟨ψ ∪ φ, z⟩ = ⟨ψ, z ∩ φ⟩ holds on the nose, so the duality
matrix D_i : H^{n-i} -> H_i coincides with the cup pairing of H^i against
H^{n-i}.  Both routes are computed independently and compared in tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .complexes import SimplicialComplex, SimplicialMap, boundary_matrix
from .errors import DimensionMismatch, DualityDegenerate, NonOrientable, NotClosed, ParseError, Singular
from .homology import GradedMap, homology, induced_block
from .linalg import RatMatrix, invert


@dataclass(frozen=True)
class FundamentalClass:
    complex: SimplicialComplex
    coefficients: tuple[int, ...]        # ±1 per top simplex, chain-basis order
    homology_coords: tuple[Fraction, ...]

    @property
    def chain(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self.coefficients)


def _propagate(K: SimplicialComplex, seed: int) -> list[int]:
    n = K.dim
    tops = K.simplices(n)
    if not K.pure or not K.closed:
        raise NotClosed(f"{K.name} is not a closed pseudomanifold")
    if not 0 <= seed < len(tops):
        raise ParseError(f"seed facet {seed} out of range for {K.name}")
    faces: dict[tuple, list[tuple[int, int]]] = {}
    for j, s in enumerate(tops):
        for k in range(len(s) if n > 0 else 0):
            faces.setdefault(s[:k] + s[k + 1:], []).append((j, k))
    for face, inc in faces.items():
        if len(inc) != 2:
            raise NotClosed(f"face {face} of {K.name} lies in {len(inc)} facets")
    neighbours: list[list[tuple[int, int, int]]] = [[] for _ in tops]
    for (j, k), (j2, k2) in faces.values():
        neighbours[j].append((k, j2, k2))
        neighbours[j2].append((k2, j, k))

    signs = [0] * len(tops)
    order = [seed] + [j for j in range(len(tops)) if j != seed]
    for start in order:
        if signs[start]:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            j = queue.popleft()
            for k, j2, k2 in neighbours[j]:
                # induced orientations on the shared face must cancel
                want = -signs[j] * (-1) ** (k + k2)
                if signs[j2] == 0:
                    signs[j2] = want
                    queue.append(j2)
                elif signs[j2] != want:
                    raise NonOrientable(f"{K.name}: orientation conflict across face "
                                        f"{tops[j][:k] + tops[j][k + 1:]}")
    return signs


def fundamental_class(K: SimplicialComplex, seed: int = 0) -> FundamentalClass:
    """Coherently oriented sum of top simplices, facet ``seed`` getting +1."""
    return _fundamental_class(K, seed)


@lru_cache(maxsize=None)
def _fundamental_class(K: SimplicialComplex, seed: int) -> FundamentalClass:
    signs = _propagate(K, seed)
    n = K.dim
    chain = tuple(Fraction(s) for s in signs)
    if n > 0 and any(boundary_matrix(K, n).apply(chain)):
        raise NonOrientable(f"{K.name}: propagated signs do not form a cycle")
    coords = homology(K).retract(n, chain)
    return FundamentalClass(K, tuple(signs), coords)


def cocycle_reps(K: SimplicialComplex, d: int) -> RatMatrix:
    """Rows are cocycles representing the dual basis of H^d."""
    return homology(K)[d].retraction


def cup_value(K: SimplicialComplex, phi: Sequence, p: int, psi: Sequence, q: int,
              chain: Sequence) -> Fraction:
    """⟨φ ∪ ψ, chain⟩ for a p-cochain φ, a q-cochain ψ and a (p+q)-chain."""
    total = Fraction(0)
    for j, s in enumerate(K.simplices(p + q)):
        c = chain[j]
        if c:
            total += c * phi[K.index_of(s[:p + 1])] * psi[K.index_of(s[p:])]
    return total


def cup_pairing(K: SimplicialComplex, i: int, seed: int = 0) -> RatMatrix:
    """Matrix ⟨φ_a ∪ ψ_b, [K]⟩ with φ_a ∈ H^{n-i}, ψ_b ∈ H^i (dual bases)."""
    n = K.dim
    fc = fundamental_class(K, seed)
    left, right = cocycle_reps(K, n - i), cocycle_reps(K, i)
    out = [[Fraction(0)] * right.rows for _ in range(left.rows)]
    for j, s in enumerate(K.simplices(n)):
        c = fc.coefficients[j]
        u = left.column(K.index_of(s[:n - i + 1]))
        v = right.column(K.index_of(s[n - i:]))
        for a, ua in enumerate(u):
            if ua:
                for b, vb in enumerate(v):
                    if vb:
                        out[a][b] += c * ua * vb
    return RatMatrix(left.rows, right.rows, out)


def cap_matrix(K: SimplicialComplex, chain: Sequence, p: int, d: int) -> RatMatrix:
    """Homology coordinates of ``chain ∩ φ_l`` for each dual basis cocycle φ_l of H^d.

    ``chain`` must be a p-cycle; the result is betti_{p-d} x betti_d.
    """
    h = homology(K)
    if d > p:
        return RatMatrix.zeros(0, h.dim(d))
    phis = cocycle_reps(K, d)
    r_out = h[p - d].retraction
    out = [[Fraction(0)] * phis.rows for _ in range(r_out.rows)]
    for j, s in enumerate(K.simplices(p)):
        c = chain[j]
        if not c:
            continue
        front = r_out.column(K.index_of(s[:p - d + 1]))
        back = phis.column(K.index_of(s[p - d:]))
        for a, fa in enumerate(front):
            if fa:
                for l, bl in enumerate(back):
                    if bl:
                        out[a][l] += c * fa * bl
    return RatMatrix(r_out.rows, phis.rows, out)


@dataclass(frozen=True)
class DualityData:
    complex: SimplicialComplex
    pairing: tuple[RatMatrix, ...]   # pairing[i]: H^{n-i} x H^i
    D: tuple[RatMatrix, ...]         # D[i]: H^{n-i} -> H_i
    D_inv: tuple[RatMatrix, ...]


@lru_cache(maxsize=None)
def duality(K: SimplicialComplex, seed: int = 0) -> DualityData:
    n = K.dim
    fc = fundamental_class(K, seed)
    pairing, D, D_inv = [], [], []
    for i in range(n + 1):
        pairing.append(cup_pairing(K, i, seed))
        d_i = cap_matrix(K, fc.chain, n, n - i)
        try:
            inv = invert(d_i)
        except Singular as exc:
            raise DualityDegenerate(f"{K.name}: duality map in degree {i} is singular") from exc
        D.append(d_i)
        D_inv.append(inv)
    return DualityData(K, tuple(pairing), tuple(D), tuple(D_inv))


def duality_map(K: SimplicialComplex, i: int, seed: int = 0) -> tuple[RatMatrix, RatMatrix]:
    data = duality(K, seed)
    return data.D[i], data.D_inv[i]


def umkehr(g: SimplicialMap, domain_seed: int = 0, codomain_seed: int = 0) -> GradedMap:
    """Wrong-way map D_M ∘ g^* ∘ D_N^{-1} : H_*(N) -> H_{*+m-n}(M).

    The seeds pick the orientation facets of M and N (see fundamental_class).
    """
    M, N = g.domain, g.codomain
    m, n = M.dim, N.dim
    dm, dn = duality(M, domain_seed), duality(N, codomain_seed)
    blocks = {}
    for i in range(n + 1):
        t = i + m - n
        if 0 <= t <= m and n - i <= m:
            blocks[i] = dm.D[t] @ induced_block(g, n - i).T @ dn.D_inv[i]
    return GradedMap(homology(N).betti, homology(M).betti, m - n, blocks)


def cap_with_class_blocks(K: SimplicialComplex, alpha: Sequence, a: int) -> dict[int, RatMatrix]:
    """Blocks H^j -> H_{a-j} of φ ↦ α ∩ φ, for j = 0..a."""
    reps = homology(K)[a].cycle_reps
    chain = reps.apply(alpha)
    return {j: cap_matrix(K, chain, a, j) for j in range(a + 1)}


def degree(f: SimplicialMap) -> Fraction:
    """Degree of a map between oriented complexes of the same dimension."""
    m, n = f.domain.dim, f.codomain.dim
    hm, hn = homology(f.domain), homology(f.codomain)
    if m != n or hm.dim(m) != 1 or hn.dim(n) != 1:
        raise DimensionMismatch(f"degree needs one-dimensional top homology on both ends "
                                f"({f.domain.name}: {hm.betti}, {f.codomain.name}: {hn.betti})")
    cm = fundamental_class(f.domain).homology_coords[0]
    cn = fundamental_class(f.codomain).homology_coords[0]
    return induced_block(f, m)[0, 0] * cm / cn
