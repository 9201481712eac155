"""Intersection invariants of a map against a subcomplex.

The Thom model is the same as for coincidences: Thom degree j of the
normal bundle of Q in P stands for H_{j-codim}(Q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complexes import SimplicialComplex, SimplicialMap, build_complex
from .duality import fundamental_class, umkehr
from .errors import DimensionMismatch, InvalidMap, ShapeMismatch
from .homology import GradedMap, homology, induced_on_homology
from .lefschetz import ThetaMap, canonical_theta, theta_trace


@dataclass(frozen=True)
class SubmanifoldInclusion:
    ambient: SimplicialComplex
    sub: SimplicialComplex
    vertex_injection: tuple[int, ...]   # sub vertex -> ambient vertex
    inclusion: SimplicialMap

    @property
    def codim(self) -> int:
        return self.ambient.dim - self.sub.dim


def make_inclusion(ambient: SimplicialComplex, sub_facets: Sequence[Sequence[int]],
                   name: str | None = None) -> SubmanifoldInclusion:
    """Subcomplex given by facets in ambient vertex labels, relabelled 0..k-1 in order."""
    facets = [tuple(sorted(f)) for f in sub_facets]
    for f in facets:
        if not ambient.contains(f):
            raise InvalidMap(f"{f} is not a simplex of {ambient.name}")
    used = sorted({v for f in facets for v in f})
    relabel = {v: k for k, v in enumerate(used)}
    sub = build_complex([tuple(relabel[v] for v in f) for f in facets],
                        name=name or f"{ambient.name}-sub")
    inc = SimplicialMap(sub, ambient, tuple(used), name="inclusion")
    fundamental_class(sub)   # Q must be a closed orientable pseudomanifold
    return SubmanifoldInclusion(ambient, sub, tuple(used), inc)


def inclusion_umkehr(inc: SubmanifoldInclusion, ambient_seed: int = 0, sub_seed: int = 0) -> GradedMap:
    """i^! = D_Q ∘ i^* ∘ D_P^{-1}, shift -codim."""
    return umkehr(inc.inclusion, domain_seed=sub_seed, codomain_seed=ambient_seed)


def _check_target(f: SimplicialMap, inc: SubmanifoldInclusion) -> None:
    if f.codomain != inc.ambient:
        raise ShapeMismatch(f"map lands in {f.codomain.name}, subcomplex lives in {inc.ambient.name}")


def canonical_intersection_theta(inc: SubmanifoldInclusion, M: SimplicialComplex) -> ThetaMap:
    """Point class of Q ↦ [M], at Thom degree m = codim."""
    return canonical_theta(inc.sub, M, target_n=inc.codim)


def intersection_lefschetz(f: SimplicialMap, inc: SubmanifoldInclusion, theta: ThetaMap) -> Fraction:
    """Σ (-1)^i tr(θ_i ∘ i^! ∘ f_*) over degrees where θ returns to H_i(M)."""
    _check_target(f, inc)
    if theta.target_n != inc.codim:
        raise ShapeMismatch(f"θ is modelled over codimension {theta.target_n}, inclusion has {inc.codim}")
    theta.validate(inc.sub, f.domain)
    composite = inclusion_umkehr(inc) @ induced_on_homology(f)
    return theta_trace(theta, composite.block, f.domain)


def intersection_number(f: SimplicialMap, inc: SubmanifoldInclusion,
                        domain_seed: int = 0, sub_seed: int = 0, ambient_seed: int = 0) -> Fraction:
    """Augmentation of i^!(f_*[M]); zero when dim M < codim."""
    _check_target(f, inc)
    M = f.domain
    m, c = M.dim, inc.codim
    if m > c:
        raise DimensionMismatch(f"intersection number needs dim M = codim ({m} vs {c})")
    if m < c:
        return Fraction(0)
    fm = fundamental_class(M, domain_seed).homology_coords
    image = induced_on_homology(f).block(m).apply(fm)
    shriek = inclusion_umkehr(inc, ambient_seed=ambient_seed, sub_seed=sub_seed).block(m)
    point = shriek.apply(image)
    aug = homology(inc.sub).augmentation()
    return sum((a * x for a, x in zip(aug, point)), Fraction(0))


def image_disjoint(f: SimplicialMap, inc: SubmanifoldInclusion) -> bool:
    """No vertex of f's image lies in Q (so the image subcomplex misses Q)."""
    _check_target(f, inc)
    return not set(f.vertex_map) & set(inc.vertex_injection)
