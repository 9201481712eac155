"""Sign-rule calibration for the diagonal contraction.

For each candidate rule s(p, q), compare canonical-θ numbers with coincidence
numbers over every ordered corpus pair and print a survival table.  The
calibration set decides the rule; the remaining complexes are a holdout.

    python scripts/calibrate_signs.py
    python scripts/calibrate_signs.py --calibrate s1 s2-oct t2-9
"""

import argparse
from dataclasses import dataclass, field
from itertools import product

from lefcoin.corpus import corpus
from lefcoin.lefschetz import (CONTRACTION_SIGN, SIGN_RULES, calibrate_sign_rules, canonical_theta,
                               coincidence_lefschetz, theta_lefschetz)


@dataclass
class CalibrationConfig:
    calibrate: list[str] = field(default_factory=lambda: ["s1", "s2-oct"])
    holdout: list[str] = field(default_factory=lambda: ["s1-6", "t2-9"])


def pairs(name):
    e = corpus()[name]
    maps = [f for f in e.maps.values() if f.domain.dim == e.complex.dim]
    return [(f, g) for f, g in product(maps, repeat=2) if f.domain == g.domain]


def mismatches(rule, names):
    bad = []
    for name in names:
        for f, g in pairs(name):
            th = canonical_theta(f.codomain, f.domain)
            if theta_lefschetz(f, g, th, rule) != coincidence_lefschetz(f, g):
                bad.append(f"{name}({f.name},{g.name})")
    return bad


def main(cfg: CalibrationConfig):
    print(f"{'rule':6s} {'calibration':>12s} {'holdout':>10s}")
    for rule in SIGN_RULES:
        cal = mismatches(rule, cfg.calibrate)
        hold = mismatches(rule, cfg.holdout)
        print(f"{rule:6s} {len(cal):12d} {len(hold):10d}")
    per_complex = {name: calibrate_sign_rules(pairs(name)) for name in cfg.calibrate}
    for name, rules in per_complex.items():
        print(f"survivors on {name}: {rules}")
    joint = calibrate_sign_rules([p for name in cfg.calibrate for p in pairs(name)])
    print(f"joint survivors: {joint}; frozen rule: {CONTRACTION_SIGN!r}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--calibrate", nargs="+")
    ap.add_argument("--holdout", nargs="+")
    args = ap.parse_args()
    cfg = CalibrationConfig()
    if args.calibrate:
        cfg.calibrate = args.calibrate
    if args.holdout:
        cfg.holdout = args.holdout
    main(cfg)
