"""JSON serialization for graphs, frameworks, stresses and certificates.

Rationals travel as strings ("p/q" in lowest terms, or a plain decimal
integer; bare JSON integers are accepted as shorthand) so nothing ever
round-trips through floating point. Parsers report the position of the
offending element.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .certify import Certificate
from .exactmat import Matrix
from .framework import Framework, StressMatrix
from .graphs import Graph

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class ParseError(Exception):
    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError("expected a rational, got a boolean", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError("floating-point numbers are not accepted; use a string", where)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise ParseError(f"malformed rational {value!r}", where)
        return Fraction(value)
    raise ParseError(f"expected a rational, got {type(value).__name__}", where)


def rational_str(q: Fraction) -> str:
    return str(q)


def _expect_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"expected a list, got {type(value).__name__}", where)
    return value


def _expect_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {type(value).__name__}", where)
    return value


def _parse_edges(value, n: int, where: str) -> list[tuple[int, int]]:
    edges = []
    seen = set()
    for k, item in enumerate(_expect_list(value, where)):
        spot = f"{where}[{k}]"
        pair = _expect_list(item, spot)
        if len(pair) != 2:
            raise ParseError(f"edge must have two endpoints, got {len(pair)}", spot)
        u = _expect_int(pair[0], spot)
        v = _expect_int(pair[1], spot)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"endpoint out of range 1..{n}", spot)
        if u == v:
            raise ParseError(f"loop at vertex {u}", spot)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {list(key)}", spot)
        seen.add(key)
        edges.append(key)
    return edges


def graph_to_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_obj(obj, where: str = "graph") -> Graph:
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where)
    if "n" not in obj:
        raise ParseError("missing key 'n'", where)
    n = _expect_int(obj["n"], f"{where}.n")
    if n < 1:
        raise ParseError("vertex count must be positive", f"{where}.n")
    edges = _parse_edges(obj.get("edges", []), n, f"{where}.edges")
    return Graph(n, edges)


def framework_to_obj(fw: Framework) -> dict:
    return {
        "dim": fw.dim,
        "points": [[rational_str(x) for x in p] for p in fw.points],
        "edges": [list(e) for e in fw.graph.edges],
    }


def framework_from_obj(obj, where: str = "framework") -> Framework:
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where)
    for key in ("dim", "points", "edges"):
        if key not in obj:
            raise ParseError(f"missing key '{key}'", where)
    dim = _expect_int(obj["dim"], f"{where}.dim")
    if dim < 1:
        raise ParseError("dimension must be positive", f"{where}.dim")
    raw_points = _expect_list(obj["points"], f"{where}.points")
    if not raw_points:
        raise ParseError("at least one point required", f"{where}.points")
    points = []
    for i, rp in enumerate(raw_points):
        spot = f"{where}.points[{i}]"
        coords = _expect_list(rp, spot)
        if len(coords) != dim:
            raise ParseError(f"point has {len(coords)} coordinates, expected {dim}", spot)
        points.append([parse_rational(c, f"{spot}[{k}]") for k, c in enumerate(coords)])
    edges = _parse_edges(obj["edges"], len(points), f"{where}.edges")
    try:
        return Framework(Graph(len(points), edges), dim, points)
    except Exception as exc:
        raise ParseError(str(exc), where) from exc


def matrix_to_lists(m: Matrix) -> list[list[str]]:
    return [[rational_str(x) for x in row] for row in m.data]


def matrix_from_obj(obj, where: str = "matrix") -> Matrix:
    rows = _expect_list(obj, where)
    if not rows:
        raise ParseError("matrix must have at least one row", where)
    parsed = []
    width = None
    for i, row in enumerate(rows):
        spot = f"{where}[{i}]"
        entries = _expect_list(row, spot)
        if width is None:
            width = len(entries)
        elif len(entries) != width:
            raise ParseError(f"row has {len(entries)} entries, expected {width}", spot)
        parsed.append([parse_rational(x, f"{spot}[{k}]") for k, x in enumerate(entries)])
    if width == 0:
        raise ParseError("matrix rows must be nonempty", where)
    return Matrix(parsed)


def stress_to_obj(s: StressMatrix) -> dict:
    return {"n": s.n, "matrix": matrix_to_lists(s.matrix)}


def stress_matrix_from_obj(obj, where: str = "stress") -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where)
    for key in ("n", "matrix"):
        if key not in obj:
            raise ParseError(f"missing key '{key}'", where)
    n = _expect_int(obj["n"], f"{where}.n")
    m = matrix_from_obj(obj["matrix"], f"{where}.matrix")
    if (m.rows, m.cols) != (n, n):
        raise ParseError(f"matrix is {m.rows}x{m.cols}, expected {n}x{n}", f"{where}.matrix")
    return m


def certificate_to_obj(cert: Certificate) -> dict:
    return {
        "verdict": cert.verdict.value,
        "connectivity": cert.connectivity,
        "peo": list(cert.peo.order) if cert.peo is not None else None,
        "stress": stress_to_obj(cert.stress) if cert.stress is not None else None,
        "counterexample": (framework_to_obj(cert.counterexample)
                           if cert.counterexample is not None else None),
        "reason": cert.reason.value if cert.reason is not None else None,
    }


def read_json(path: str | Path):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}",
                         f"{path}:{exc.lineno}:{exc.colno}") from exc


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=2) + "\n")


def load_framework(path: str | Path) -> Framework:
    return framework_from_obj(read_json(path), where=str(path))


def load_stress(path: str | Path) -> Matrix:
    return stress_matrix_from_obj(read_json(path), where=str(path))
