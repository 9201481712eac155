"""Tabulate invariants over the built-in corpus.

Prints betti numbers and orientability per complex, then classical and
coincidence Lefschetz numbers for every ordered pair of same-dimension maps,
with the exact coincidence detector alongside.

    python scripts/corpus_report.py --complexes s2-oct t2-9
"""

import argparse
from dataclasses import dataclass, field
from itertools import product

from lefcoin.corpus import corpus
from lefcoin.duality import fundamental_class
from lefcoin.errors import NonOrientable
from lefcoin.homology import euler_characteristic, homology
from lefcoin.lefschetz import coincidence_lefschetz, has_coincidence, lefschetz_fixed
from lefcoin.linalg import format_rational


@dataclass
class ReportConfig:
    complexes: list[str] = field(default_factory=lambda: list(corpus()))
    pairs: bool = True


def orientable(K) -> bool:
    try:
        fundamental_class(K)
        return True
    except NonOrientable:
        return False


def main(cfg: ReportConfig):
    print(f"{'complex':8s} {'f-vector':14s} {'betti':10s} {'chi':>4s} orientable")
    for name in cfg.complexes:
        K = corpus()[name].complex
        print(f"{name:8s} {str(K.f_vector):14s} {str(homology(K).betti):10s} "
              f"{format_rational(euler_characteristic(K)):>4s} {orientable(K)}")
    print()
    for name in cfg.complexes:
        e = corpus()[name]
        for fname, f in e.endomaps().items():
            print(f"{name:8s} L({fname}) = {format_rational(lefschetz_fixed(f))}")
    if not cfg.pairs:
        return
    print()
    for name in cfg.complexes:
        e = corpus()[name]
        if not orientable(e.complex):
            continue
        maps = {k: f for k, f in e.maps.items() if f.domain.dim == e.complex.dim}
        for (a, f), (b, g) in product(maps.items(), repeat=2):
            if f.domain != g.domain:
                continue
            L = coincidence_lefschetz(f, g)
            print(f"{name:8s} L({a}, {b}) = {format_rational(L):>3s}   coincidences: {has_coincidence(f, g)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--complexes", nargs="+")
    ap.add_argument("--no-pairs", action="store_true")
    args = ap.parse_args()
    cfg = ReportConfig(pairs=not args.no_pairs)
    if args.complexes:
        cfg.complexes = args.complexes
    main(cfg)
