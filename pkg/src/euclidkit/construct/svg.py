"""SVG rendering of a finished workspace.

The viewBox is fitted to the bounding box of all bounded objects plus a 5%
margin; points are drawn as 2 px circles with their names as labels; element
order follows workspace insertion order, so output is deterministic.
"""

from __future__ import annotations

import math

from ..plane import Arc, Circle, Line, Point
from ..scalar import TWO_PI

_CANVAS = 640.0
_POINT_RADIUS = 2.0


def _fmt(value: float) -> str:
    text = f"{value:.4f}"
    return "0.0000" if text == "-0.0000" else text


class _Mapper:
    def __init__(self, min_x: float, min_y: float, max_x: float, max_y: float):
        width = max(max_x - min_x, 1e-9)
        height = max(max_y - min_y, 1e-9)
        margin_x, margin_y = 0.05 * width, 0.05 * height
        self.min_x, self.max_x = min_x - margin_x, max_x + margin_x
        self.min_y, self.max_y = min_y - margin_y, max_y + margin_y
        self.scale = _CANVAS / max(self.max_x - self.min_x, self.max_y - self.min_y)
        self.width = (self.max_x - self.min_x) * self.scale
        self.height = (self.max_y - self.min_y) * self.scale

    def to_svg(self, p: Point) -> tuple[float, float]:
        return ((p.x - self.min_x) * self.scale,
                (self.max_y - p.y) * self.scale)


def _bounds(objects) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []
    for obj in objects:
        if isinstance(obj, Point):
            xs.append(obj.x)
            ys.append(obj.y)
        elif isinstance(obj, Circle):
            xs.extend((obj.center.x - obj.radius, obj.center.x + obj.radius))
            ys.extend((obj.center.y - obj.radius, obj.center.y + obj.radius))
        elif isinstance(obj, Arc):
            circle = obj.circle
            xs.extend((circle.center.x - circle.radius, circle.center.x + circle.radius))
            ys.extend((circle.center.y - circle.radius, circle.center.y + circle.radius))
    if not xs:
        return -1.0, -1.0, 1.0, 1.0
    return min(xs), min(ys), max(xs), max(ys)


def _clip_line(line: Line, mapper: _Mapper) -> tuple[Point, Point] | None:
    """Segment of an infinite line inside the padded world box."""
    corners_t: list[float] = []
    dx, dy = line.direction()
    base = Point(-line.c * line.a, -line.c * line.b)
    for axis, lo, hi in (("x", mapper.min_x, mapper.max_x),
                         ("y", mapper.min_y, mapper.max_y)):
        origin = base.x if axis == "x" else base.y
        step = dx if axis == "x" else dy
        if abs(step) < 1e-12:
            continue
        corners_t.extend(((lo - origin) / step, (hi - origin) / step))
    if not corners_t:
        return None
    ts = []
    for t in corners_t:
        p = Point(base.x + t * dx, base.y + t * dy)
        if (mapper.min_x - 1e-9 <= p.x <= mapper.max_x + 1e-9
                and mapper.min_y - 1e-9 <= p.y <= mapper.max_y + 1e-9):
            ts.append(t)
    if len(ts) < 2:
        return None
    t0, t1 = min(ts), max(ts)
    return (Point(base.x + t0 * dx, base.y + t0 * dy),
            Point(base.x + t1 * dx, base.y + t1 * dy))


def _arc_path(arc: Arc, mapper: _Mapper) -> str:
    start = arc.point_at(0.0)
    end = arc.point_at(1.0)
    sx, sy = mapper.to_svg(start)
    ex, ey = mapper.to_svg(end)
    r = arc.circle.radius * mapper.scale
    large = 1 if arc.sweep.radians > math.pi else 0
    # World counterclockwise becomes clockwise after the y-flip.
    return (f'M {_fmt(sx)} {_fmt(sy)} '
            f'A {_fmt(r)} {_fmt(r)} 0 {large} 0 {_fmt(ex)} {_fmt(ey)}')


def render_svg(workspace) -> str:
    mapper = _Mapper(*_bounds(workspace.objects.values()))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(mapper.width)}" '
        f'height="{_fmt(mapper.height)}" '
        f'viewBox="0 0 {_fmt(mapper.width)} {_fmt(mapper.height)}">',
        '<g fill="none" stroke="black" stroke-width="1">',
    ]
    labels: list[str] = []
    for name, obj in workspace.objects.items():
        if isinstance(obj, Point):
            x, y = mapper.to_svg(obj)
            parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_POINT_RADIUS}" '
                         f'fill="black" data-name="{name}"/>')
            labels.append(f'<text x="{_fmt(x + 4)}" y="{_fmt(y - 4)}" '
                          f'font-size="10" fill="black" stroke="none">{name}</text>')
        elif isinstance(obj, Line):
            clipped = _clip_line(obj, mapper)
            if clipped is None:
                continue
            (x1, y1), (x2, y2) = mapper.to_svg(clipped[0]), mapper.to_svg(clipped[1])
            parts.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                         f'y2="{_fmt(y2)}" data-name="{name}"/>')
        elif isinstance(obj, Circle):
            x, y = mapper.to_svg(obj.center)
            parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
                         f'r="{_fmt(obj.radius * mapper.scale)}" data-name="{name}"/>')
        elif isinstance(obj, Arc):
            if obj.sweep.radians >= TWO_PI - 1e-12:
                x, y = mapper.to_svg(obj.circle.center)
                parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
                             f'r="{_fmt(obj.circle.radius * mapper.scale)}" '
                             f'data-name="{name}"/>')
            else:
                parts.append(f'<path d="{_arc_path(obj, mapper)}" data-name="{name}"/>')
    parts.extend(labels)
    parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"
