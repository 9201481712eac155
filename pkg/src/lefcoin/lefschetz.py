"""Lefschetz-type invariants of pairs of simplicial maps.

Homology is rational simplicial homology throughout.  Stable objects are
only seen through their homology: a Thom space of the diagonal normal
bundle of N is modelled by H_*(N) shifted up by n = dim N (so "Thom degree"
j means H_{j-n}(N)), and spectrum factors collapse to an integer shift.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .complexes import SimplicialComplex, SimplicialMap
from .duality import cap_matrix, cap_with_class_blocks, duality, fundamental_class, umkehr
from .errors import DimensionMismatch, ParseError, ShapeMismatch, Singular
from .homology import GradedMap, homology, induced_block, induced_on_homology
from .linalg import RatMatrix, invert, solve


@dataclass(frozen=True)
class HomologyClass:
    complex: SimplicialComplex
    degree: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        want = homology(self.complex).dim(self.degree)
        if len(self.coords) != want:
            raise ShapeMismatch(f"class in H_{self.degree}({self.complex.name}) needs "
                                f"{want} coordinates, got {len(self.coords)}")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def augmentation(self) -> Fraction:
        if self.degree != 0:
            return Fraction(0)
        aug = homology(self.complex).augmentation()
        return sum((a * c for a, c in zip(aug, self.coords)), Fraction(0))


@dataclass(frozen=True)
class DualClass:
    """Linear functional on Thom degree ``degree``, i.e. on H_{degree-n}(N).

    Coordinates are in the basis dual to the chosen homology basis.
    """

    complex: SimplicialComplex
    degree: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        want = homology(self.complex).dim(self.degree - self.complex.dim)
        if len(self.coords) != want:
            raise ShapeMismatch(f"functional on H_{self.degree - self.complex.dim}"
                                f"({self.complex.name}) needs {want} coordinates")

    def __call__(self, x: HomologyClass) -> Fraction:
        return sum((a * b for a, b in zip(self.coords, x.coords)), Fraction(0))


def fundamental_homology_class(K: SimplicialComplex) -> HomologyClass:
    return HomologyClass(K, K.dim, fundamental_class(K).homology_coords)


def point_class(K: SimplicialComplex) -> HomologyClass:
    """Class of vertex 0."""
    h = homology(K)
    return HomologyClass(K, 0, h.retract(0, [int(v == 0) for v in range(K.count(0))]))


def thom_class(N: SimplicialComplex) -> DualClass:
    """Augmentation on H_0(N), seen as a functional on Thom degree n."""
    return DualClass(N, N.dim, homology(N).augmentation())


def zero_class(K: SimplicialComplex, degree: int) -> HomologyClass:
    return HomologyClass(K, degree, (0,) * homology(K).dim(degree))


# -- classical and coincidence numbers -----------------------------------


def lefschetz_number(phi: GradedMap) -> Fraction:
    return phi.alternating_trace()


def lefschetz_fixed(f: SimplicialMap) -> Fraction:
    if not f.is_endomap:
        raise DimensionMismatch("fixed point Lefschetz number needs a self-map")
    return lefschetz_number(induced_on_homology(f))


def _check_pair(f: SimplicialMap, g: SimplicialMap) -> None:
    if f.domain != g.domain or f.codomain != g.codomain:
        raise DimensionMismatch("f and g must share domain and codomain")


def coincidence_lefschetz(f: SimplicialMap, g: SimplicialMap) -> Fraction:
    """Σ (-1)^i tr(H_i(M) -f_*-> H_i(N) -D^-1-> H^{n-i}(N) -g^*-> H^{n-i}(M) -D-> H_i(M))."""
    _check_pair(f, g)
    if f.domain.dim != f.codomain.dim:
        raise DimensionMismatch(f"dim {f.domain.name} = {f.domain.dim} but "
                                f"dim {f.codomain.name} = {f.codomain.dim}")
    return lefschetz_number(umkehr(g) @ induced_on_homology(f))


# -- coincidence pushforward ---------------------------------------------

SignRule = Callable[[int, int], int]

SIGN_RULES: dict[str, SignRule] = {
    "pq": lambda p, q: (-1) ** (p * q),
    "p": lambda p, q: (-1) ** p,
    "q": lambda p, q: (-1) ** q,
    "one": lambda p, q: 1,
}

# Chosen by calibrate_sign_rules on s1 and s2-oct, see scripts/calibrate_signs.py.
CONTRACTION_SIGN = "q"


def kunneth_image(f: SimplicialMap, g: SimplicialMap, x: HomologyClass) -> dict[tuple[int, int], RatMatrix]:
    """(f × g)_* x in Künneth coordinates ⊕ H_p(N) ⊗ H_q(N).

    Computed with the Alexander–Whitney diagonal on a representative cycle;
    entry [j, k] of the (p, q) block is the coefficient of a_j ⊗ a_k.
    """
    _check_pair(f, g)
    M, N = f.domain, f.codomain
    hm, hn = homology(M), homology(N)
    i = x.degree
    z = hm[i].cycle_reps.apply(x.coords)
    acc: dict[tuple[int, int], list[list[Fraction]]] = {}
    for p in range(i + 1):
        q = i - p
        if p <= N.dim and q <= N.dim:
            acc[(p, q)] = [[Fraction(0)] * hn.dim(q) for _ in range(hn.dim(p))]
    for s, c in zip(M.simplices(i), z):
        if not c:
            continue
        for (p, q), block in acc.items():
            sf, tf = f(s[:p + 1])
            sg, tg = g(s[p:])
            if not sf or not sg:
                continue
            u = hn[p].retraction.column(N.index_of(tf))
            v = hn[q].retraction.column(N.index_of(tg))
            w = c * sf * sg
            for j, uj in enumerate(u):
                if uj:
                    row = block[j]
                    for k, vk in enumerate(v):
                        if vk:
                            row[k] += w * uj * vk
    return {pq: RatMatrix(len(b), hn.dim(pq[1]), b) for pq, b in acc.items()}


def contract_diagonal(N: SimplicialComplex, kunneth: Mapping[tuple[int, int], RatMatrix],
                      sign: str = CONTRACTION_SIGN) -> tuple[Fraction, ...]:
    """Collapse onto the diagonal: a ⊗ b ↦ s(p,q) Σ_k ⟨ψ_k, b⟩ (a ∩ φ_k).

    ψ_k is the dual basis of H^q and φ_k ∈ H^{n-q} its cup-pairing dual,
    ⟨φ_k ∪ ψ_l, [N]⟩ = δ_kl; together they form the diagonal class.
    """
    n = N.dim
    hn = homology(N)
    rule = SIGN_RULES[sign]
    degrees = {p + q for p, q in kunneth}
    if len(degrees) > 1:
        raise ShapeMismatch("Künneth blocks of mixed total degree")
    total = degrees.pop() if degrees else 0
    out = [Fraction(0)] * hn.dim(total - n)
    if total < n:
        return tuple(out)
    pairing = duality(N).pairing
    for (p, q), block in kunneth.items():
        if p + q < n or block.is_zero():
            continue
        dual_phi = invert(pairing[q])   # rows: φ_k in the H^{n-q} basis
        reps = hn[p].cycle_reps
        s = rule(p, q)
        for j in range(block.rows):
            coeffs = block.row(j)
            if not any(coeffs):
                continue
            # cap matrix: H_p class a_j against every basis cocycle of H^{n-q}
            cap = cap_matrix(N, reps.column(j), p, n - q)
            weights = [sum((coeffs[k] * dual_phi[k, l] for k in range(len(coeffs))), Fraction(0))
                       for l in range(dual_phi.cols)]
            contrib = cap.apply(weights)
            for t, v in enumerate(contrib):
                out[t] += s * v
    return tuple(out)


def coincidence_pushforward(f: SimplicialMap, g: SimplicialMap, x: HomologyClass,
                            sign: str = CONTRACTION_SIGN) -> HomologyClass:
    """Image of x under M -> N × N -> Thom space of the diagonal, in H_{i-n}(N)."""
    _check_pair(f, g)
    if x.complex != f.domain:
        raise ShapeMismatch("class does not live on the domain")
    N = f.codomain
    duality(f.domain)  # orientability of M is part of the contract
    i = x.degree
    if i < N.dim:
        return HomologyClass(N, i - N.dim, ())
    coords = contract_diagonal(N, kunneth_image(f, g, x), sign)
    return HomologyClass(N, i - N.dim, coords)


def pushforward_matrix(f: SimplicialMap, g: SimplicialMap, i: int,
                       sign: str = CONTRACTION_SIGN) -> RatMatrix:
    """Matrix of the pushforward H_i(M) -> H_{i-n}(N)."""
    M, N = f.domain, f.codomain
    b = homology(M).dim(i)
    cols = []
    for j in range(b):
        e = tuple(int(k == j) for k in range(b))
        cols.append(coincidence_pushforward(f, g, HomologyClass(M, i, e), sign).coords)
    return RatMatrix.from_columns(cols, homology(N).dim(i - N.dim))


# -- θ-relative numbers ---------------------------------------------------


@dataclass(frozen=True)
class ThetaMap:
    """Homology shadow of a stable map from the Thom space to M.

    ``blocks[j]`` maps Thom degree j (= H_{j-target_n} of the base) to
    H_{j+shift}(M).
    """

    target_n: int
    shift: int = 0
    blocks: Mapping[int, RatMatrix] = field(default_factory=dict)
    model: str = "thom-diagonal"

    def validate(self, base: SimplicialComplex, M: SimplicialComplex) -> None:
        hb, hm = homology(base), homology(M)
        for j, b in self.blocks.items():
            want = (hm.dim(j + self.shift), hb.dim(j - self.target_n))
            if b.shape != want:
                raise ShapeMismatch(f"θ block at Thom degree {j} has shape {b.shape}, "
                                    f"expected {want}")

    def block(self, j: int) -> RatMatrix | None:
        return self.blocks.get(j)


def zero_theta(N: SimplicialComplex, M: SimplicialComplex) -> ThetaMap:
    return ThetaMap(N.dim, 0, {})


def canonical_theta(N: SimplicialComplex, M: SimplicialComplex, target_n: int | None = None) -> ThetaMap:
    """Thom isomorphism followed by collapse: point class of the base ↦ [M].

    The only block sits at Thom degree m = dim M and equals [M] ⊗ augmentation.
    """
    n = N.dim if target_n is None else target_n
    m = M.dim
    if m != n:
        raise DimensionMismatch(f"canonical θ needs dim M = {n}, got {m}")
    fm = fundamental_class(M).homology_coords
    aug = homology(N).augmentation()
    block = RatMatrix(len(fm), len(aug), [[c * a for a in aug] for c in fm])
    return ThetaMap(n, 0, {m: block})


def theta_trace(theta: ThetaMap, composite: Callable[[int], RatMatrix], M: SimplicialComplex) -> Fraction:
    """Σ (-1)^i tr(θ_i ∘ composite_i); shifted blocks contribute nothing."""
    if theta.shift != 0:
        return Fraction(0)
    total = Fraction(0)
    for i in range(M.dim + 1):
        blk = theta.block(i)
        if blk is None or blk.rows == 0 or blk.cols == 0:
            continue
        total += (-1) ** i * (blk @ composite(i)).trace()
    return total


def theta_lefschetz(f: SimplicialMap, g: SimplicialMap, theta: ThetaMap,
                    sign: str = CONTRACTION_SIGN) -> Fraction:
    _check_pair(f, g)
    M, N = f.domain, f.codomain
    if theta.target_n != N.dim:
        raise ShapeMismatch(f"θ is modelled over dimension {theta.target_n}, N has {N.dim}")
    theta.validate(N, M)
    return theta_trace(theta, lambda i: pushforward_matrix(f, g, i, sign), M)


def alpha_beta_lefschetz(f: SimplicialMap, g: SimplicialMap, alpha: HomologyClass,
                         beta: DualClass, sign: str = CONTRACTION_SIGN) -> Fraction:
    """Alternating trace of x ↦ ⟨β, pushforward(x)⟩ α, i.e. (-1)^a ⟨β, pushforward(α)⟩.

    Zero when deg α ≠ deg β.  With α = [M] and β the Thom class this is L(f, g)
    in every dimension.
    """
    _check_pair(f, g)
    if alpha.complex != f.domain or beta.complex != f.codomain:
        raise ShapeMismatch("α must live on M and β on N")
    if alpha.degree != beta.degree:
        return Fraction(0)
    return (-1) ** alpha.degree * beta(coincidence_pushforward(f, g, alpha, sign))


def g_alpha(g: SimplicialMap, alpha: HomologyClass, variant: str = "umkehr") -> GradedMap:
    """Wrong-way map N -> M twisted by α ∈ H_a(M).

    ``umkehr``:   x ↦ α ∩ g^*(D_N^{-1} x), shift a - n.
    ``rank_one``: x ↦ ⟨g^*(D_N^{-1} x), α⟩ α, shift 2a - n.
    """
    M, N = g.domain, g.codomain
    if alpha.complex != M:
        raise ShapeMismatch("α must live on the domain of g")
    a, n = alpha.degree, N.dim
    dn = duality(N)
    hm, hn = homology(M), homology(N)
    blocks = {}
    if variant == "umkehr":
        caps = cap_with_class_blocks(M, alpha.coords, a)
        for i in range(n + 1):
            j = n - i
            if j <= a and j <= M.dim:
                blocks[i] = caps[j] @ induced_block(g, j).T @ dn.D_inv[i]
        return GradedMap(hn.betti, hm.betti, a - n, blocks)
    if variant == "rank_one":
        i = n - a
        if 0 <= i <= n and a <= M.dim:
            col = RatMatrix.from_columns([alpha.coords], len(alpha.coords))
            row = col.T @ induced_block(g, a).T @ dn.D_inv[i]
            blocks[i] = col @ row
        return GradedMap(hn.betti, hm.betti, 2 * a - n, blocks)
    raise ParseError(f"unknown g_alpha variant {variant!r}")


# -- sign calibration -----------------------------------------------------


def calibrate_sign_rules(pairs: Iterable[tuple[SimplicialMap, SimplicialMap]]) -> list[str]:
    """Sign rules under which canonical-θ numbers equal coincidence numbers on all ``pairs``."""
    pairs = list(pairs)
    survivors = []
    for name in SIGN_RULES:
        ok = True
        for f, g in pairs:
            theta = canonical_theta(f.codomain, f.domain)
            if theta_lefschetz(f, g, theta, name) != coincidence_lefschetz(f, g):
                ok = False
                break
        if ok:
            survivors.append(name)
    return survivors


# -- geometric coincidence detection -------------------------------------


def _simplex_has_coincidence(f: SimplicialMap, g: SimplicialMap, s: Sequence[int]) -> bool:
    # barycentric λ ≥ 0, Σλ = 1, Σ λ_j (e_{f v_j} - e_{g v_j}) = 0; test every
    # basic solution (independent support) for nonnegativity
    N = f.codomain
    rows = N.vertex_count + 1
    columns = []
    for v in s:
        col = [0] * rows
        col[f.vertex_map[v]] += 1
        col[g.vertex_map[v]] -= 1
        col[-1] = 1
        columns.append(col)
    rhs = RatMatrix.from_columns([[0] * (rows - 1) + [1]], rows)
    for size in range(1, len(s) + 1):
        for support in combinations(range(len(s)), size):
            a = RatMatrix.from_columns([columns[k] for k in support], rows)
            try:
                lam = solve(a, rhs)
            except Singular:
                continue
            if all(lam[k, 0] >= 0 for k in range(size)):
                return True
    return False


def coincidence_simplices(f: SimplicialMap, g: SimplicialMap) -> list[tuple[int, ...]]:
    """Maximal simplices of M containing a point x with f(x) = g(x)."""
    _check_pair(f, g)
    return [s for s in f.domain.facets if _simplex_has_coincidence(f, g, s)]


def has_coincidence(f: SimplicialMap, g: SimplicialMap) -> bool:
    _check_pair(f, g)
    return any(_simplex_has_coincidence(f, g, s) for s in f.domain.facets)
