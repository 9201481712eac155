"""The acceptance suite, runnable from the CLI (``lefcoin selftest``).

Every check compares a computed invariant with an oracle that does not go
through the code path being checked: simplex counts, local degrees counted
on facets, chain-level traces, exact coincidence detection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .complexes import SimplicialComplex, SimplicialMap, boundary_matrix
from .corpus import corpus
from .duality import duality, fundamental_class
from .errors import NonOrientable
from .homology import homology, induced_on_homology
from .intersection import image_disjoint, inclusion_umkehr, intersection_number, make_inclusion
from .lefschetz import (CONTRACTION_SIGN, calibrate_sign_rules, canonical_theta, coincidence_lefschetz,
                        fundamental_homology_class, g_alpha, has_coincidence, lefschetz_fixed,
                        lefschetz_number, theta_lefschetz)
from .linalg import RatMatrix, block_diag, invert
from .trace import (ChainEndo, GradedEndo, GradedSpace, alternating_trace, categorical_trace,
                    chain_trace, standard_pair, tensor_maps, transport)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title}: {self.detail}"


# -- oracles --------------------------------------------------------------


def euler_from_counts(K: SimplicialComplex) -> int:
    return sum((-1) ** i * len(level) for i, level in enumerate(K.simplices_by_dim))


def local_degree(f: SimplicialMap) -> int:
    """Signed count of oriented facets of M landing on one facet of N."""
    M, N = f.domain, f.codomain
    n = N.dim
    om = fundamental_class(M).coefficients
    on = fundamental_class(N).coefficients
    target = N.simplices(n)[0]
    total = 0
    for j, s in enumerate(M.simplices(n)):
        sign, t = f(s)
        if sign and t == target:
            total += sign * om[j]
    return total * on[0]


def orientable_entries():
    out = []
    for name, e in corpus().items():
        try:
            fundamental_class(e.complex)
        except NonOrientable:
            continue
        out.append(e)
    return out


def same_dim_pairs():
    """All ordered (f, g) pairs with common domain/codomain of equal dimension."""
    pairs = []
    for e in orientable_entries():
        maps = [f for f in e.maps.values() if f.domain.dim == e.complex.dim]
        for f, g in product(maps, repeat=2):
            if f.domain == g.domain:
                pairs.append((f, g))
    return pairs


# -- criteria -------------------------------------------------------------


def crit_homology() -> tuple[bool, str]:
    want = {"s1": ((1, 1), 0), "s2-oct": ((1, 0, 1), 2), "t2-9": ((1, 2, 1), 0), "rp2-6": ((1, 0, 0), 1)}
    bad = []
    for name, (betti, chi) in want.items():
        K = corpus()[name].complex
        got = homology(K).betti
        alt = sum((-1) ** i * b for i, b in enumerate(got))
        if got != betti or euler_from_counts(K) != chi or alt != chi:
            bad.append(f"{name}: betti {got}, euler {euler_from_counts(K)}")
    return not bad, "; ".join(bad) or "betti and euler match for s1, s2-oct, t2-9, rp2-6"


def crit_orientation() -> tuple[bool, str]:
    bad = []
    for name in ("s1", "s2-oct", "t2-9"):
        K = corpus()[name].complex
        fc = fundamental_class(K)
        if any(boundary_matrix(K, K.dim).apply(fc.chain)) or any(abs(c) != 1 for c in fc.coefficients):
            bad.append(f"{name}: fundamental class is not a ±1 cycle")
        d = duality(K)
        for i, m in enumerate(d.D):
            if m @ d.D_inv[i] != RatMatrix.identity(m.rows):
                bad.append(f"{name}: D_{i} not invertible")
    try:
        fundamental_class(corpus()["rp2-6"].complex)
        bad.append("rp2-6 did not raise NonOrientable")
    except NonOrientable:
        pass
    return not bad, "; ".join(bad) or "[M] is a cycle on s1, s2-oct, t2-9; D_i invertible; rp2-6 NonOrientable"


def crit_vanishing() -> tuple[bool, str]:
    c = corpus()
    cases = [
        ("s1", "rotation", "identity", 0),
        ("s2-oct", "antipodal", "identity", 0),
        ("t2-9", "shift", "identity", 0),
        ("s2-oct", "identity", "identity", 2),
        ("s2-oct", "constant", "identity", 1),
    ]
    bad, shown = [], []
    for name, fn, gn, want in cases:
        f, g = c[name].maps[fn], c[name].maps[gn]
        L = coincidence_lefschetz(f, g)
        shown.append(f"{name}({fn},{gn})={L}")
        if L != want:
            bad.append(f"{name}({fn},{gn}) = {L}, expected {want}")
        if want == 0 and has_coincidence(f, g):
            bad.append(f"{name}({fn},{gn}) is not coincidence-free")
    return not bad, "; ".join(bad) or ", ".join(shown)


def crit_fixed_point() -> tuple[bool, str]:
    count, bad = 0, []
    for e in orientable_entries():
        ident = e.maps["identity"]
        for name, f in e.endomaps().items():
            count += 1
            if coincidence_lefschetz(f, ident) != lefschetz_fixed(f):
                bad.append(f"{e.name}/{name}")
    ok = not bad and count >= 6
    return ok, "; ".join(bad) or f"L(f,id) = L(f) on {count} endomaps"


def crit_sphere_formula() -> tuple[bool, str]:
    count, bad = 0, []
    for name in ("s1", "s1-6", "s2-oct"):
        e = corpus()[name]
        n = e.complex.dim
        maps = list(e.endomaps().values())
        for f, g in product(maps, repeat=2):
            want = local_degree(g) + (-1) ** n * local_degree(f)
            count += 1
            if coincidence_lefschetz(f, g) != want:
                bad.append(f"{name}({f.name},{g.name})")
    return not bad, "; ".join(bad) or f"deg g + (-1)^n deg f on {count} ordered pairs"


def _random_graded_endo(rng: random.Random, dims) -> GradedEndo:
    blocks = [RatMatrix(d, d, [[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)]) for d in dims]
    return GradedEndo(GradedSpace.from_dims(dims), block_diag(blocks))


def _random_invertible(rng: random.Random, dims) -> GradedEndo:
    blocks = []
    for d in dims:
        while True:
            m = RatMatrix(d, d, [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)])
            try:
                invert(m)
                break
            except Exception:
                continue
        blocks.append(m)
    return GradedEndo(GradedSpace.from_dims(dims), block_diag(blocks))


def crit_trace_laws(trials: int = 100, seed: int = 20240611) -> tuple[bool, str]:
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        ndeg = rng.randint(1, 4)
        dims = [rng.randint(0, 4) for _ in range(ndeg)]
        phi = _random_graded_endo(rng, dims)
        psi = _random_graded_endo(rng, dims)
        pair = standard_pair(phi.space)
        change = _random_invertible(rng, dims)
        moved = transport(pair, change)
        conj = GradedEndo(phi.space, invert(change.matrix) @ phi.matrix @ change.matrix)
        tr = categorical_trace(phi, pair)
        small = [rng.randint(0, 2) for _ in range(rng.randint(1, 3))]
        chi_ = _random_graded_endo(rng, small)
        checks = {
            "triangle": pair.triangle_identities_hold() and moved.triangle_identities_hold(),
            "contract": tr == alternating_trace(phi),
            "basis": categorical_trace(phi, moved) == tr and categorical_trace(conj, pair) == tr,
            "cyclic": categorical_trace(phi @ psi) == categorical_trace(psi @ phi),
            "tensor": categorical_trace(tensor_maps(phi, chi_)) == tr * categorical_trace(chi_),
        }
        failures += [f"trial {t} {k}" for k, v in checks.items() if not v]
    return not failures, "; ".join(failures[:5]) or f"{trials} random graded endomorphisms"


def crit_hopf() -> tuple[bool, str]:
    count, bad = 0, []
    for e in corpus().values():
        for name, f in e.endomaps().items():
            phi = ChainEndo.of_map(f)
            count += 1
            if chain_trace(phi) != categorical_trace(phi.on_homology()):
                bad.append(f"{e.name}/{name}")
    return not bad, "; ".join(bad) or f"chain trace = homology trace on {count} chain endomaps"


def crit_concomp() -> tuple[bool, str]:
    calib = [(f, g) for f, g in same_dim_pairs() if f.domain.name in ("s1", "s2-oct")
             and f.codomain == f.domain]
    survivors = calibrate_sign_rules(calib)
    if survivors != [CONTRACTION_SIGN]:
        return False, f"calibration on s1, s2-oct left {survivors}, frozen rule is {CONTRACTION_SIGN!r}"
    bad, count, t2 = [], 0, 0
    for f, g in same_dim_pairs():
        count += 1
        t2 += f.domain.name == "t2-9"
        th = canonical_theta(f.codomain, f.domain)
        if theta_lefschetz(f, g, th) != coincidence_lefschetz(f, g):
            bad.append(f"{f.codomain.name}({f.name},{g.name})")
    return not bad, "; ".join(bad) or (f"rule {CONTRACTION_SIGN!r} unique on spheres; bridge holds on "
                                       f"{count} pairs ({t2} on t2-9)")


def crit_twisted_umkehr() -> tuple[bool, str]:
    bad, free = [], 0
    for f, g in same_dim_pairs():
        ga = g_alpha(g, fundamental_homology_class(f.domain), "umkehr")
        value = lefschetz_number(ga @ induced_on_homology(f))
        if value != coincidence_lefschetz(f, g):
            bad.append(f"{f.codomain.name}({f.name},{g.name}) mismatch")
        if not has_coincidence(f, g):
            free += 1
            if value != 0:
                bad.append(f"{f.codomain.name}({f.name},{g.name}) free but {value}")
    return not bad, "; ".join(bad) or f"L((g^α)_* f_*) = L(f,g) on all pairs; 0 on {free} free pairs"


def crit_intersections() -> tuple[bool, str]:
    t2 = corpus()["t2-9"]
    inc = {q: make_inclusion(t2.complex, t2.subcomplexes[q], q) for q in t2.subcomplexes}
    bad = []
    parallel = intersection_number(t2.maps["circle-h1"], inc["h0"])
    transverse = intersection_number(t2.maps["circle-v0"], inc["h0"])
    if parallel != 0:
        bad.append(f"parallel circles gave {parallel}")
    if abs(transverse) != 1:
        bad.append(f"transverse circles gave {transverse}")
    checked = 0
    for e in orientable_entries():
        for qname, facets in e.subcomplexes.items():
            sub = make_inclusion(e.complex, facets, qname)
            for fname, f in e.maps.items():
                if image_disjoint(f, sub):
                    checked += 1
                    comp = inclusion_umkehr(sub) @ induced_on_homology(f)
                    if any(not b.is_zero() for b in comp.blocks.values()):
                        bad.append(f"{e.name}: i^! f_* nonzero for {fname} vs {qname}")
    return not bad, "; ".join(bad) or (f"parallel {parallel}, transverse {transverse}, "
                                       f"{checked} disjoint pairs vanish")


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "homology corpus", crit_homology),
    (2, "orientation and duality", crit_orientation),
    (3, "coincidence vanishing", crit_vanishing),
    (4, "fixed-point specialization", crit_fixed_point),
    (5, "sphere formula", crit_sphere_formula),
    (6, "monoidal trace laws", crit_trace_laws),
    (7, "Hopf trace", crit_hopf),
    (8, "index = Lefschetz bridge", crit_concomp),
    (9, "twisted umkehr vanishing", crit_twisted_umkehr),
    (10, "intersections", crit_intersections),
]


def run_criterion(number: int) -> CriterionResult:
    for n, title, fn in CRITERIA:
        if n == number:
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failed criterion, not a crashed suite
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            return CriterionResult(n, title, ok, detail)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]
