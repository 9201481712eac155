"""Command line interface.

Exit codes: 0 ok, 2 validation/parse error, 3 orientability required but
missing, 4 dimension mismatch, 5 self-check failed.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import formats
from .complexes import SimplicialComplex, SimplicialMap, identity_map
from .corpus import CorpusEntry, corpus, get_entry
from .duality import degree, fundamental_class
from .errors import LefcoinError, ParseError
from .homology import euler_characteristic, homology, induced_on_homology
from .intersection import (canonical_intersection_theta, image_disjoint, inclusion_umkehr,
                           intersection_lefschetz, intersection_number, make_inclusion)
from .lefschetz import (ThetaMap, alpha_beta_lefschetz, canonical_theta, coincidence_lefschetz,
                        fundamental_homology_class, has_coincidence, lefschetz_fixed, theta_lefschetz,
                        thom_class)
from .linalg import format_rational
from .selftest import run_all

COMMANDS = {
    "homology": "betti numbers and euler characteristic",
    "euler": "euler characteristic",
    "orient": "fundamental class by orientation propagation",
    "degree": "degree of --map-f",
    "lefschetz": "fixed point Lefschetz number of --map-f",
    "coincidence": "coincidence Lefschetz number of --map-f, --map-g",
    "theta": "Lefschetz number relative to --theta",
    "alphabeta": "Lefschetz number relative to --alpha and --beta",
    "intersect": "intersection invariants of --map-f against --sub",
    "selftest": "run the acceptance suite",
    "corpus": "describe built-in complexes, maps and subcomplexes",
}


class Context:
    """Resolves complexes, maps and subcomplexes from corpus names or files."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.entry: CorpusEntry | None = get_entry(args.corpus) if args.corpus else None
        self.complexes: dict[str, SimplicialComplex] = {e.name: e.complex for e in corpus().values()}
        self.complex: SimplicialComplex | None = None
        if args.complex:
            self.complex = formats.load_complex(args.complex)
            self.complexes[self.complex.name] = self.complex
        elif self.entry:
            self.complex = self.entry.complex
        if args.domain:
            dom = formats.load_complex(args.domain)
            self.complexes[dom.name] = dom

    def need_complex(self) -> SimplicialComplex:
        if self.complex is None:
            raise ParseError("give --corpus NAME or --complex PATH")
        return self.complex

    def map(self, flag: str) -> SimplicialMap:
        value = getattr(self.args, flag.replace("-", "_"))
        if value is None:
            raise ParseError(f"--{flag} is required")
        if self.entry and value in self.entry.maps and not os.path.exists(value):
            return self.entry.maps[value]
        if not os.path.exists(value):
            known = sorted(self.entry.maps) if self.entry else []
            raise ParseError(f"--{flag} {value!r}: no such corpus map {known} or file")
        return formats.load_map(value, self.complexes, name=os.path.basename(value))

    def identity_or(self, flag: str, like: SimplicialMap) -> SimplicialMap:
        if getattr(self.args, flag.replace("-", "_")) is None:
            if not like.is_endomap:
                raise ParseError(f"--{flag} is required when --map-f is not a self-map")
            return identity_map(like.domain)
        return self.map(flag)

    def inclusion(self):
        value = self.args.sub
        if value is None:
            raise ParseError("--sub is required")
        if self.entry and value in self.entry.subcomplexes and not os.path.exists(value):
            return make_inclusion(self.entry.complex, self.entry.subcomplexes[value], value)
        ambient, facets = formats.subcomplex_from_json(formats.read_json(value))
        if ambient not in self.complexes:
            raise ParseError(f"subcomplex refers to unknown complex {ambient!r}")
        return make_inclusion(self.complexes[ambient], facets, os.path.basename(value))


def _fmt(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    if isinstance(x, dict):
        return {k: _fmt(v) for k, v in x.items()}
    return x


def cmd_homology(ctx: Context) -> dict:
    K = ctx.need_complex()
    return {"betti": list(homology(K).betti), "euler": euler_characteristic(K)}


def cmd_euler(ctx: Context) -> dict:
    return {"euler": euler_characteristic(ctx.need_complex())}


def cmd_orient(ctx: Context) -> dict:
    K = ctx.need_complex()
    fc = fundamental_class(K)
    return {"orientable": True, "coefficients": list(fc.coefficients),
            "homology_coords": list(fc.homology_coords)}


def cmd_degree(ctx: Context) -> dict:
    return {"degree": degree(ctx.map("map-f"))}


def cmd_lefschetz(ctx: Context) -> dict:
    return {"L": lefschetz_fixed(ctx.map("map-f"))}


def cmd_coincidence(ctx: Context) -> dict:
    f = ctx.map("map-f")
    g = ctx.identity_or("map-g", f)
    L = coincidence_lefschetz(f, g)
    return {"L": L, "coincidence_free_consistent": L == 0 or has_coincidence(f, g)}


def _theta(ctx: Context, default):
    if ctx.args.theta in (None, "canonical"):
        return default()
    if ctx.args.theta == "zero":
        return ThetaMap(default().target_n, 0, {})
    return formats.load_theta(ctx.args.theta)


def cmd_theta(ctx: Context) -> dict:
    f = ctx.map("map-f")
    g = ctx.identity_or("map-g", f)
    theta = _theta(ctx, lambda: canonical_theta(f.codomain, f.domain))
    return {"L_theta": theta_lefschetz(f, g, theta)}


def cmd_alphabeta(ctx: Context) -> dict:
    f = ctx.map("map-f")
    g = ctx.identity_or("map-g", f)
    if ctx.args.alpha in (None, "fundamental"):
        alpha = fundamental_homology_class(f.domain)
    else:
        alpha = formats.homology_class_from_json(formats.read_json(ctx.args.alpha), ctx.complexes)
    if ctx.args.beta in (None, "thom"):
        beta = thom_class(f.codomain)
    else:
        beta = formats.dual_class_from_json(formats.read_json(ctx.args.beta), ctx.complexes)
    return {"L_alpha_beta": alpha_beta_lefschetz(f, g, alpha, beta)}


def cmd_intersect(ctx: Context) -> dict:
    f = ctx.map("map-f")
    inc = ctx.inclusion()
    out: dict[str, Any] = {
        "codim": inc.codim,
        "image_disjoint": image_disjoint(f, inc),
        "intersection_number": intersection_number(f, inc),
    }
    if ctx.args.theta is not None or f.domain.dim == inc.codim:
        theta = _theta(ctx, lambda: canonical_intersection_theta(inc, f.domain))
        out["L_theta"] = intersection_lefschetz(f, inc, theta)
    composite = inclusion_umkehr(inc) @ induced_on_homology(f)
    out["shriek_composite_zero"] = all(b.is_zero() for b in composite.blocks.values())
    return out


def cmd_corpus(ctx: Context) -> dict:
    entries = [ctx.entry] if ctx.entry else list(corpus().values())
    report = {}
    for e in entries:
        report[e.name] = {
            "facets": len(e.complex.facets),
            "f_vector": list(e.complex.f_vector),
            "betti": list(homology(e.complex).betti),
            "euler": euler_characteristic(e.complex),
            "orientable": e.expected.get("orientable"),
            "maps": sorted(e.maps),
            "subcomplexes": sorted(e.subcomplexes),
        }
    return {"entries": report}


def cmd_selftest(ctx: Context) -> dict:
    results = run_all()
    if ctx.args.format == "table":
        for r in results:
            print(r.line())
    out = {"passed": all(r.passed for r in results),
           "criteria": [{"id": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
                        for r in results]}
    return out


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lefcoin",
                                     description="Exact Lefschetz coincidence and intersection invariants.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--complex", "-c", help="complex JSON file (the target complex)")
    common.add_argument("--domain", help="extra complex JSON file for map domains")
    common.add_argument("--corpus", help="built-in corpus entry name")
    common.add_argument("--map-f", help="corpus map name or map JSON file")
    common.add_argument("--map-g", help="corpus map name or map JSON file (default: identity)")
    common.add_argument("--sub", help="corpus subcomplex name or subcomplex JSON file")
    common.add_argument("--theta", help="theta JSON file, 'canonical' (default) or 'zero'")
    common.add_argument("--alpha", help="class JSON file or 'fundamental' (default)")
    common.add_argument("--beta", help="dual class JSON file or 'thom' (default)")
    common.add_argument("--format", choices=["json", "table"], default="json")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=COMMANDS[name])
    return parser


def render(result: dict, fmt: str) -> str:
    result = _fmt(result)
    if fmt == "json":
        return formats.dumps(result)
    lines = []
    for k in sorted(result):
        v = result[k]
        lines.append(f"{k:28s} {formats.dumps(v) if isinstance(v, (dict, list)) else v}")
    return "\n".join(lines)


def execute(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ctx = Context(args)
        result = HANDLERS[args.command](ctx)
    except LefcoinError as exc:
        print(formats.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return exc.exit_code
    if not (args.command == "selftest" and args.format == "table"):
        print(render(result, args.format))
    if args.command == "selftest" and not result["passed"]:
        return 5
    return 0


def main() -> None:
    sys.exit(execute())


if __name__ == "__main__":
    main()
