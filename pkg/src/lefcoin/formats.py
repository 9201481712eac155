"""JSON file formats. Rationals are always strings ``"p/q"`` or ``"p"``."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .complexes import SimplicialComplex, SimplicialMap, build_complex
from .errors import ParseError
from .lefschetz import DualClass, HomologyClass, ThetaMap
from .linalg import RatMatrix, format_rational, parse_rational


def read_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True)


def _require(data: Any, key: str, kind, where: str):
    if not isinstance(data, dict) or key not in data:
        raise ParseError(f"{where}: missing key {key!r}")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ParseError(f"{where}: {key!r} has the wrong type")
    return value


def _int_list(value, where: str) -> list[int]:
    if not isinstance(value, list) or any(not isinstance(v, int) or isinstance(v, bool) for v in value):
        raise ParseError(f"{where}: expected a list of integers")
    return value


# -- complexes and maps ---------------------------------------------------


def complex_from_json(data: Mapping) -> SimplicialComplex:
    name = _require(data, "name", str, "complex")
    facets = _require(data, "facets", list, "complex")
    return build_complex([_int_list(f, "complex facets") for f in facets], name=name)


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"name": K.name, "facets": [list(f) for f in K.facets]}


def load_complex(path: str | Path) -> SimplicialComplex:
    return complex_from_json(read_json(path))


def map_from_json(data: Mapping, complexes: Mapping[str, SimplicialComplex], name: str = "f") -> SimplicialMap:
    dom = _require(data, "domain", str, "map")
    cod = _require(data, "codomain", str, "map")
    vm = _int_list(_require(data, "vertex_map", list, "map"), "map vertex_map")
    for label in (dom, cod):
        if label not in complexes:
            raise ParseError(f"map refers to unknown complex {label!r}")
    return SimplicialMap(complexes[dom], complexes[cod], tuple(vm), name=name)


def map_to_json(f: SimplicialMap) -> dict:
    return {"domain": f.domain.name, "codomain": f.codomain.name, "vertex_map": list(f.vertex_map)}


def load_map(path: str | Path, complexes: Mapping[str, SimplicialComplex], name: str = "f") -> SimplicialMap:
    return map_from_json(read_json(path), complexes, name)


def subcomplex_from_json(data: Mapping) -> tuple[str, list[list[int]]]:
    ambient = _require(data, "ambient", str, "subcomplex")
    facets = _require(data, "sub_facets", list, "subcomplex")
    return ambient, [_int_list(f, "sub_facets") for f in facets]


def subcomplex_to_json(ambient: str, facets) -> dict:
    return {"ambient": ambient, "sub_facets": [list(f) for f in facets]}


# -- θ and classes --------------------------------------------------------


def _matrix(value, where: str) -> RatMatrix:
    if not isinstance(value, list) or any(not isinstance(r, list) for r in value):
        raise ParseError(f"{where}: matrix must be a list of rows")
    widths = {len(r) for r in value}
    if len(widths) > 1:
        raise ParseError(f"{where}: ragged matrix")
    cols = widths.pop() if widths else 0
    return RatMatrix(len(value), cols, [[parse_rational(x) for x in r] for r in value])


def theta_from_json(data: Mapping) -> ThetaMap:
    model = _require(data, "model", str, "theta")
    if model != "thom-diagonal":
        raise ParseError(f"theta: unsupported model {model!r}")
    n = _require(data, "n", int, "theta")
    shift = _require(data, "shift", int, "theta")
    blocks = {}
    for b in _require(data, "blocks", list, "theta"):
        deg = _require(b, "degree", int, "theta block")
        if deg in blocks:
            raise ParseError(f"theta: duplicate block for degree {deg}")
        blocks[deg] = _matrix(_require(b, "matrix", list, "theta block"), f"theta block {deg}")
    return ThetaMap(n, shift, blocks, model)


def theta_to_json(theta: ThetaMap) -> dict:
    return {
        "model": theta.model,
        "n": theta.target_n,
        "shift": theta.shift,
        "blocks": [{"degree": j, "matrix": b.to_strings()} for j, b in sorted(theta.blocks.items())],
    }


def load_theta(path: str | Path) -> ThetaMap:
    return theta_from_json(read_json(path))


def class_fields(data: Mapping) -> tuple[str, int, list]:
    name = _require(data, "complex", str, "class")
    degree = _require(data, "degree", int, "class")
    coords = [parse_rational(c) for c in _require(data, "coords", list, "class")]
    return name, degree, coords


def homology_class_from_json(data: Mapping, complexes: Mapping[str, SimplicialComplex]) -> HomologyClass:
    name, degree, coords = class_fields(data)
    if name not in complexes:
        raise ParseError(f"class refers to unknown complex {name!r}")
    return HomologyClass(complexes[name], degree, tuple(coords))


def dual_class_from_json(data: Mapping, complexes: Mapping[str, SimplicialComplex]) -> DualClass:
    name, degree, coords = class_fields(data)
    if name not in complexes:
        raise ParseError(f"class refers to unknown complex {name!r}")
    return DualClass(complexes[name], degree, tuple(coords))


def class_to_json(x: HomologyClass | DualClass) -> dict:
    return {"complex": x.complex.name, "degree": x.degree,
            "coords": [format_rational(c) for c in x.coords]}
