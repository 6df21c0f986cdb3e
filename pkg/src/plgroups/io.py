"""Self-describing JSON documents for maps, groups, automorphisms and reports.

Scalars are stored as exact strings (``"p/q"``) or as ``{"a", "b", "d"}``
objects, never as floats.  Emission is canonical (sorted keys, fixed
indentation), so parsing and re-emitting a canonical document reproduces
it byte for byte.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .group import FGGroup, ModuleSpec
from .plmap import AffineGerm, Compact, HalfLine, Interval, Line, PLMap, canonicalize
from .scalar import as_scalar, scalar_from_json, scalar_to_json
from .slopegroup import CyclicQuadratic, MultGroupSpec, RationalGens

__all__ = [
    "FORMAT_VERSION",
    "DocumentError",
    "emit",
    "parse",
    "load",
    "interval_to_json",
    "interval_from_json",
    "parse_interval",
    "map_to_json",
    "map_from_json",
    "group_to_json",
    "group_from_json",
    "map_document",
    "group_document",
    "automorphism_document",
    "report_document",
]

FORMAT_VERSION = 1
KINDS = ("map", "group", "automorphism", "report")


class DocumentError(ValueError):
    pass


def emit(kind: str, payload) -> str:
    if kind not in KINDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    doc = {"format_version": FORMAT_VERSION, "kind": kind, "payload": payload}
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse(text: str) -> tuple[str, object]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not a JSON document: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"format_version", "kind", "payload"}:
        raise DocumentError("document needs exactly format_version, kind and payload")
    if doc["format_version"] != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {doc['format_version']!r}")
    if doc["kind"] not in KINDS:
        raise DocumentError(f"unknown document kind {doc['kind']!r}")
    return doc["kind"], doc["payload"]


def load(path) -> tuple[str, object]:
    return parse(Path(path).read_text(encoding="utf-8"))


# -- intervals ----------------------------------------------------------------------

def interval_to_json(interval: Interval):
    if isinstance(interval, Compact):
        return {"compact": [scalar_to_json(interval.a), scalar_to_json(interval.b)]}
    if isinstance(interval, HalfLine):
        return "half_line"
    return "line"


def interval_from_json(obj) -> Interval:
    if obj == "line":
        return Line()
    if obj == "half_line":
        return HalfLine()
    if isinstance(obj, dict) and set(obj) == {"compact"} and len(obj["compact"]) == 2:
        a, b = (scalar_from_json(v) for v in obj["compact"])
        return Compact(b, a)
    raise DocumentError(f"bad interval {obj!r}")


def parse_interval(text: str) -> Interval:
    """``line``, ``half`` / ``half_line``, ``b`` for ``[0, b]`` or ``[a,b]``."""
    t = text.strip().lower()
    if t == "line":
        return Line()
    if t in ("half", "half_line", "halfline"):
        return HalfLine()
    if t.startswith("[") and t.endswith("]"):
        a, b = t[1:-1].split(",")
        return Compact(as_scalar(Fraction(b.strip())), as_scalar(Fraction(a.strip())))
    return Compact(as_scalar(Fraction(t)))


# -- maps -----------------------------------------------------------------------------

def _germ_to_json(g: AffineGerm):
    return {"slope": scalar_to_json(g.slope), "intercept": scalar_to_json(g.intercept)}


def _germ_from_json(obj) -> AffineGerm:
    try:
        return AffineGerm(scalar_from_json(obj["slope"]), scalar_from_json(obj["intercept"]))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"bad germ {obj!r}") from exc


def map_to_json(f: PLMap, interval: Interval = Line()):
    return {
        "interval": interval_to_json(interval),
        "orientation": "+" if f.orientation > 0 else "-",
        "left_germ": _germ_to_json(f.left),
        "points": [[scalar_to_json(x), scalar_to_json(y)] for x, y in f.points],
        "right_germ": _germ_to_json(f.right),
    }


def map_from_json(obj) -> tuple[PLMap, Interval]:
    try:
        pts = [(scalar_from_json(x), scalar_from_json(y)) for x, y in obj["points"]]
        f = canonicalize(pts, _germ_from_json(obj["left_germ"]), _germ_from_json(obj["right_germ"]))
        interval = interval_from_json(obj.get("interval", "line"))
        orientation = obj.get("orientation", "+")
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"bad map payload: {exc}") from exc
    if orientation not in ("+", "-"):
        raise DocumentError(f"bad orientation {orientation!r}")
    if (orientation == "+") != (f.orientation > 0):
        raise DocumentError("declared orientation does not match the data")
    return f, interval


def map_document(f: PLMap, interval: Interval = Line()) -> str:
    return emit("map", map_to_json(f, interval))


# -- groups ---------------------------------------------------------------------------

def _slope_group_to_json(P: MultGroupSpec):
    if isinstance(P, RationalGens):
        return {"rational": [scalar_to_json(g) for g in P.generators]}
    return {"cyclic": scalar_to_json(P.generator)}


def _slope_group_from_json(obj) -> MultGroupSpec:
    if isinstance(obj, dict) and "rational" in obj:
        return RationalGens(tuple(scalar_from_json(g) for g in obj["rational"]))
    if isinstance(obj, dict) and "cyclic" in obj:
        return CyclicQuadratic(scalar_from_json(obj["cyclic"]))
    raise DocumentError(f"bad slope group {obj!r}")


def _module_to_json(A: ModuleSpec):
    out = {"kind": A.kind}
    if A.n is not None:
        out["n"] = A.n
    if A.d is not None:
        out["d"] = A.d
    if A.step is not None:
        out["step"] = scalar_to_json(A.step)
    return out


def _module_from_json(obj) -> ModuleSpec:
    try:
        step = obj.get("step")
        return ModuleSpec(obj["kind"], obj.get("n"), obj.get("d"), None if step is None else scalar_from_json(step))
    except (KeyError, TypeError, AttributeError) as exc:
        raise DocumentError(f"bad module {obj!r}") from exc


def group_to_json(G: FGGroup):
    return {
        "interval": interval_to_json(G.interval),
        "slope_group": _slope_group_to_json(G.slope_group),
        "module": _module_to_json(G.module),
        "generators": [{"name": n, "map": map_to_json(g, G.interval)} for n, g in G.generators],
    }


def group_from_json(obj) -> FGGroup:
    try:
        interval = interval_from_json(obj["interval"])
        gens = tuple((item["name"], map_from_json(item["map"])[0]) for item in obj["generators"])
        return FGGroup(interval, _slope_group_from_json(obj["slope_group"]), _module_from_json(obj["module"]), gens)
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"bad group payload: {exc}") from exc


def group_document(G: FGGroup) -> str:
    return emit("group", group_to_json(G))


def automorphism_document(conjugator: PLMap, G: FGGroup, label: str = "conjugation") -> str:
    return emit("automorphism", {
        "label": label,
        "conjugator": map_to_json(conjugator, G.interval),
        "group": group_to_json(G),
    })


def report_document(command: str, prop: str, status: str, lines: list, data=None) -> str:
    return emit("report", {
        "command": command,
        "property": prop,
        "status": status,
        "lines": list(lines),
        "data": data if data is not None else {},
    })
