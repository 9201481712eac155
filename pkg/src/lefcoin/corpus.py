"""Built-in triangulations, maps and subcomplexes.

A corpus entry's ``maps`` are maps *into* that entry's complex; most are
self-maps, a few come from a smaller complex (circles into the torus, the
hexagon onto the triangle, a point into the sphere).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .complexes import SimplicialComplex, SimplicialMap, build_complex
from .errors import ParseError


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    complex: SimplicialComplex
    maps: dict[str, SimplicialMap] = field(default_factory=dict)
    subcomplexes: dict[str, tuple[tuple[int, ...], ...]] = field(default_factory=dict)
    expected: dict = field(default_factory=dict)

    def endomaps(self) -> dict[str, SimplicialMap]:
        return {k: f for k, f in self.maps.items() if f.domain == self.complex}


def _torus_vertex(r: int, c: int) -> int:
    return 3 * (r % 3) + (c % 3)


def torus_facets() -> list[tuple[int, ...]]:
    facets = []
    for r in range(3):
        for c in range(3):
            v = _torus_vertex
            facets.append((v(r, c), v(r, c + 1), v(r + 1, c + 1)))
            facets.append((v(r, c), v(r + 1, c), v(r + 1, c + 1)))
    return facets


def _torus_map(rule) -> tuple[int, ...]:
    return tuple(_torus_vertex(*rule(r, c)) for r in range(3) for c in range(3))


OCTAHEDRON = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]

RP2_6 = [(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
         (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5)]


@lru_cache(maxsize=None)
def corpus() -> dict[str, CorpusEntry]:
    pt = build_complex([(0,)], name="pt")
    s1 = build_complex([(0, 1), (1, 2), (0, 2)], name="s1")
    s1_6 = build_complex([(i, (i + 1) % 6) for i in range(6)], name="s1-6")
    s2 = build_complex(OCTAHEDRON, name="s2-oct")
    t2 = build_complex(torus_facets(), name="t2-9")
    rp2 = build_complex(RP2_6, name="rp2-6")

    def m(dom, cod, vm, name):
        return SimplicialMap(dom, cod, tuple(vm), name=name)

    entries = [
        CorpusEntry("pt", pt, {"identity": m(pt, pt, [0], "identity")},
                    expected={"betti": (1,), "euler": 1, "orientable": True}),
        CorpusEntry("s1", s1, {
            "identity": m(s1, s1, [0, 1, 2], "identity"),
            "rotation": m(s1, s1, [1, 2, 0], "rotation"),
            "reflection": m(s1, s1, [0, 2, 1], "reflection"),
            "constant": m(s1, s1, [0, 0, 0], "constant"),
            "double": m(s1_6, s1, [i % 3 for i in range(6)], "double"),
            "fold": m(s1_6, s1, [0, 1, 2, 1, 0, 1], "fold"),
        }, expected={"betti": (1, 1), "euler": 0, "orientable": True}),
        CorpusEntry("s1-6", s1_6, {
            "identity": m(s1_6, s1_6, range(6), "identity"),
            "rotation": m(s1_6, s1_6, [(i + 1) % 6 for i in range(6)], "rotation"),
            "antipodal": m(s1_6, s1_6, [(i + 3) % 6 for i in range(6)], "antipodal"),
            "reflection": m(s1_6, s1_6, [(-i) % 6 for i in range(6)], "reflection"),
        }, expected={"betti": (1, 1), "euler": 0, "orientable": True}),
        CorpusEntry("s2-oct", s2, {
            "identity": m(s2, s2, range(6), "identity"),
            "antipodal": m(s2, s2, [1, 0, 3, 2, 5, 4], "antipodal"),
            "rotation": m(s2, s2, [2, 3, 1, 0, 4, 5], "rotation"),
            "reflection": m(s2, s2, [0, 1, 2, 3, 5, 4], "reflection"),
            "constant": m(s2, s2, [0] * 6, "constant"),
            "point": m(pt, s2, [0], "point"),
        }, subcomplexes={
            "vertex0": ((0,),),
            "vertex1": ((1,),),
            "whole": tuple(OCTAHEDRON),
        }, expected={"betti": (1, 0, 1), "euler": 2, "orientable": True}),
        CorpusEntry("t2-9", t2, {
            "identity": m(t2, t2, range(9), "identity"),
            "shift": m(t2, t2, _torus_map(lambda r, c: (r, c + 1)), "shift"),
            "vshift": m(t2, t2, _torus_map(lambda r, c: (r + 1, c)), "vshift"),
            "flip": m(t2, t2, _torus_map(lambda r, c: (c, r)), "flip"),
            "negate": m(t2, t2, _torus_map(lambda r, c: (-r, -c)), "negate"),
            "constant": m(t2, t2, [0] * 9, "constant"),
            "circle-h0": m(s1, t2, [_torus_vertex(0, c) for c in range(3)], "circle-h0"),
            "circle-h1": m(s1, t2, [_torus_vertex(1, c) for c in range(3)], "circle-h1"),
            "circle-v0": m(s1, t2, [_torus_vertex(r, 0) for r in range(3)], "circle-v0"),
        }, subcomplexes={
            "h0": tuple((_torus_vertex(0, c), _torus_vertex(0, c + 1)) for c in range(3)),
            "h1": tuple((_torus_vertex(1, c), _torus_vertex(1, c + 1)) for c in range(3)),
            "v0": tuple((_torus_vertex(r, 0), _torus_vertex(r + 1, 0)) for r in range(3)),
        }, expected={"betti": (1, 2, 1), "euler": 0, "orientable": True}),
        CorpusEntry("rp2-6", rp2, {
            "identity": m(rp2, rp2, range(6), "identity"),
        }, expected={"betti": (1, 0, 0), "euler": 1, "orientable": False}),
    ]
    return {e.name: e for e in entries}


def get_entry(name: str) -> CorpusEntry:
    try:
        return corpus()[name]
    except KeyError:
        raise ParseError(f"unknown corpus entry {name!r}; known: {sorted(corpus())}") from None


def find_complex(name: str) -> SimplicialComplex | None:
    entry = corpus().get(name)
    return entry.complex if entry else None
