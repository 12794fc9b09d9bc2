"""Instance files, result records (JSON/text) and SVG figures."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from numbers import Real
from typing import Iterable, Optional, Sequence

from .degenerate import PointAnnulus
from .geometry import (EDGES, Annulus, AxisRect, Point, Support, Violation, annulus_widths,
                       edge_support_holds, is_empty_annulus, strictly_inside)
from .sweep import Solution


class InstanceParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


@dataclass
class Instance:
    points: list[Point]
    line_numbers: list[int]  # 1-based source line of each point

    def describe(self, v: Violation) -> str:
        return (f"lines {self.line_numbers[v.first]} and {self.line_numbers[v.second]} "
                f"share {v.axis}={fmt_number(v.value)}")


def _parse_number(token: str) -> Real:
    try:
        return int(token)
    except ValueError:
        return float(token)


def parse_instance(text: str) -> Instance:
    points, lines = [], []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise InstanceParseError(line_no, f"expected 'x y', got {raw.strip()!r}")
        try:
            x, y = (_parse_number(t) for t in tokens)
        except ValueError:
            raise InstanceParseError(line_no, f"not a number in {raw.strip()!r}") from None
        if x != x or y != y or abs(x) == float("inf") or abs(y) == float("inf"):
            raise InstanceParseError(line_no, "coordinates must be finite")
        points.append(Point(len(points), x, y))
        lines.append(line_no)
    return Instance(points, lines)


def read_instance(path: str) -> Instance:
    with open(path) as fh:
        return parse_instance(fh.read())


def format_instance(points: Iterable[Point], header: Optional[str] = None) -> str:
    out = [f"# {header}"] if header else []
    out.extend(f"{fmt_number(p.x)} {fmt_number(p.y)}" for p in points)
    return "\n".join(out) + "\n"


def perturb(points: Sequence[Point]) -> list[Point]:
    """Break coordinate ties by shifting the k-th tied point by k * eps.

    ``eps`` is a quarter of the smallest nonzero gap on that axis divided by
    n, so tied groups never cross a neighbouring distinct value. Shifted
    coordinates become Fractions to stay exact.
    """
    n = len(points)
    coords = {p.id: [p.x, p.y] for p in points}
    for axis in (0, 1):
        values = sorted({coords[p.id][axis] for p in points})
        gaps = [v - u for u, v in zip(values, values[1:])]
        eps = Fraction(min(gaps) if gaps else 1) / (4 * n)
        ordered = sorted(points, key=lambda p: (coords[p.id][axis], p.id))
        for _, group in groupby(ordered, key=lambda p: coords[p.id][axis]):
            for k, p in enumerate(group):
                if k:
                    coords[p.id][axis] = Fraction(coords[p.id][axis]) + k * eps
    return [Point(p.id, *coords[p.id]) for p in points]


def fmt_number(v) -> str:
    if isinstance(v, Fraction):
        v = v.numerator if v.denominator == 1 else float(v)
    return str(v)


def _json_number(v):
    if v is None or isinstance(v, (int, float)) and not isinstance(v, bool):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return float(v)


def _rect_json(r: AxisRect) -> dict:
    return {k: _json_number(getattr(r, k)) for k in ("xmin", "ymin", "xmax", "ymax")}


def _support_json(s: Support) -> dict:
    return dict(zip(EDGES, s))


def result_record(solution: Optional[Solution], algorithm: str,
                  elapsed_ms: Optional[float] = None) -> dict:
    """Fixed-layout result dict; every field is present, unused ones are null."""
    rec = {"algorithm": algorithm, "width": None, "outer": None, "inner": None,
           "center": None, "strip": None, "support": None, "elapsed_ms": elapsed_ms}
    if solution is None:
        return rec
    ann = solution.annulus
    rec["width"] = _json_number(solution.width)
    rec["outer"] = _rect_json(ann.outer)
    if isinstance(ann, PointAnnulus):
        c = ann.center
        rec["center"] = {"id": c.id, "x": _json_number(c.x), "y": _json_number(c.y)}
    else:
        rec["inner"] = _rect_json(ann.inner)
        rec["support"] = {"outer": _support_json(ann.outer_support),
                          "inner": _support_json(ann.inner_support)}
    if solution.origin.strip is not None:
        a, b = solution.origin.strip
        rec["strip"] = {"a": a, "b": b}
    return rec


def record_json(rec: dict) -> str:
    return json.dumps(rec, sort_keys=False)


def record_text(rec: dict) -> str:
    """Human-readable rendering; omits timing so output is reproducible."""
    if rec["width"] is None:
        return f"algorithm: {rec['algorithm']}\nno annulus exists\n"

    def box(r):
        return (f"[{fmt_number(r['xmin'])}, {fmt_number(r['xmax'])}] x "
                f"[{fmt_number(r['ymin'])}, {fmt_number(r['ymax'])}]")

    lines = [f"algorithm: {rec['algorithm']}", f"width: {fmt_number(rec['width'])}",
             f"outer: {box(rec['outer'])}"]
    if rec["inner"] is not None:
        lines.append(f"inner: {box(rec['inner'])}")
    if rec["center"] is not None:
        c = rec["center"]
        lines.append(f"center: point {c['id']} at ({fmt_number(c['x'])}, {fmt_number(c['y'])})")
    if rec["support"] is not None:
        for which in ("outer", "inner"):
            s = rec["support"][which]
            lines.append(f"{which} support: " + " ".join(f"{e}={s[e]}" for e in EDGES))
    if rec["strip"] is not None:
        lines.append(f"strip: a={rec['strip']['a']} b={rec['strip']['b']}")
    return "\n".join(lines) + "\n"


def check_record(rec: dict, points: Sequence[Point]) -> bool:
    """Re-validate a record against its instance: emptiness, widths, support."""
    if rec["width"] is None:
        return True
    o = rec["outer"]
    outer = AxisRect(o["xmin"], o["xmax"], o["ymin"], o["ymax"])
    if rec["center"] is not None:
        c = rec["center"]
        if any(strictly_inside(p, outer) for p in points if p.id != c["id"]):
            return False
        return min(c["x"] - o["xmin"], o["xmax"] - c["x"],
                   c["y"] - o["ymin"], o["ymax"] - c["y"]) == rec["width"]
    i = rec["inner"]
    inner = AxisRect(i["xmin"], i["xmax"], i["ymin"], i["ymax"])
    sup = rec["support"]
    ann = Annulus.build(outer, inner, Support(**sup["inner"]), Support(**sup["outer"]))
    return (ann.width == rec["width"]
            and ann.widths == annulus_widths(outer, inner)
            and is_empty_annulus(ann, points)
            and edge_support_holds(ann, points))


def svg_document(points: Sequence[Point], solution: Optional[Solution],
                 size: float = 480.0) -> ET.ElementTree:
    """Points as circles, the outer/inner rectangles, and the centre for point-inner results."""
    xs = [float(p.x) for p in points]
    ys = [float(p.y) for p in points]
    if solution is not None:
        o = solution.annulus.outer
        xs += [float(o.xmin), float(o.xmax)]
        ys += [float(o.ymin), float(o.ymax)]
    xmin, xmax = min(xs, default=0.0), max(xs, default=1.0)
    ymin, ymax = min(ys, default=0.0), max(ys, default=1.0)
    span = max(xmax - xmin, ymax - ymin, 1e-9)
    margin = 0.05 * span
    scale = size / (span + 2 * margin)

    def sx(x):
        return round((float(x) - xmin + margin) * scale, 3)

    def sy(y):
        return round((ymax - float(y) + margin) * scale, 3)

    width = round((xmax - xmin + 2 * margin) * scale, 3)
    height = round((ymax - ymin + 2 * margin) * scale, 3)
    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", version="1.1",
                     width=str(width), height=str(height), viewBox=f"0 0 {width} {height}")

    def rect(r: AxisRect, cls: str, stroke: str):
        ET.SubElement(svg, "rect", {
            "class": cls, "x": str(sx(r.xmin)), "y": str(sy(r.ymax)),
            "width": str(round((float(r.xmax) - float(r.xmin)) * scale, 3)),
            "height": str(round((float(r.ymax) - float(r.ymin)) * scale, 3)),
            "fill": "none", "stroke": stroke,
        })

    if solution is not None:
        ann = solution.annulus
        rect(ann.outer, "outer", "#1f77b4")
        if isinstance(ann, PointAnnulus):
            cx, cy, d = sx(ann.center.x), sy(ann.center.y), 6
            ET.SubElement(svg, "path", {
                "class": "center", "stroke": "#d62728",
                "d": f"M{cx - d} {cy - d} L{cx + d} {cy + d} M{cx - d} {cy + d} L{cx + d} {cy - d}",
            })
        else:
            rect(ann.inner, "inner", "#ff7f0e")
    for p in points:
        ET.SubElement(svg, "circle", {"class": "point", "data-id": str(p.id),
                                      "cx": str(sx(p.x)), "cy": str(sy(p.y)), "r": "3"})
    return ET.ElementTree(svg)


def write_svg(path: str, points: Sequence[Point], solution: Optional[Solution]) -> None:
    svg_document(points, solution).write(path, encoding="utf-8", xml_declaration=True)
