"""The construction virtual machine: a named-object workspace plus the
primitive ruler-and-compass instruction set.

Primitives are: free points (given data and arbitrary auxiliary choices),
the line through two named points, the circle about a center through a point
or with a compass-transferred radius, and intersections.  Macros expand to
these primitives, so a finished workspace's trace is an auditable proof that
the figure is a legal ruler-and-compass construction.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from ..errors import (
    AssertionFailedError,
    ConstructionError,
    UnresolvedNameError,
)
from ..plane import (
    Arc,
    Circle,
    GeometricObject,
    Line,
    LineRelation,
    Point,
    angle_at,
    distance,
    distance_point_line,
    intersect_circle_circle,
    intersect_line_circle,
    intersect_line_line,
)
from ..scalar import DEFAULT_TOLERANCE, Tolerance


@dataclass(frozen=True)
class Selector:
    """Which intersection point(s) to bind: both, first, second, or the one
    nearest a given anchor (the machine substitute for resolving a two-point
    ambiguity by looking at the figure)."""

    kind: str = "both"
    anchor_name: str | None = None
    anchor_point: Point | None = None

    def __post_init__(self):
        if self.kind not in ("both", "first", "second", "nearest"):
            raise ConstructionError(f"unknown intersection selector {self.kind!r}")
        if self.kind == "nearest" and self.anchor_name is None and self.anchor_point is None:
            raise ConstructionError("nearest selector requires an anchor")


@dataclass(frozen=True)
class FreePoint:
    name: str
    x: float
    y: float
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class LineThrough:
    name: str
    p: str
    q: str
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class CircleCenterThrough:
    name: str
    center: str
    through: str
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class CircleCenterRadiusOf:
    """Compass transfer: circle about `center` with radius |pq|."""

    name: str
    center: str
    p: str
    q: str
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Intersect:
    names: tuple[str, ...]
    obj1: str
    obj2: str
    selector: Selector = Selector()
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class MacroCall:
    names: tuple[str, ...]
    macro: str
    args: tuple[Any, ...]
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class AssertInstr:
    kind: str  # dist_eq | dist_val | angle_val | on | parallel | perp
    args: tuple[str, ...]
    expected: float | None = None
    tolerance: float | None = None
    description: str = ""
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class EmitInstr:
    format: str
    path: str
    line: int | None = field(default=None, compare=False)


Instruction = (FreePoint | LineThrough | CircleCenterThrough | CircleCenterRadiusOf
               | Intersect | MacroCall | AssertInstr | EmitInstr)


@dataclass
class Program:
    instructions: list[Instruction]


@dataclass(frozen=True)
class AssertResult:
    description: str
    passed: bool
    measured: float
    expected: float
    tolerance: float
    line: int | None = None


@dataclass(frozen=True)
class TraceEntry:
    depth: int
    instruction: Instruction


class Workspace:
    """Insertion-ordered name -> object store plus the executed trace."""

    def __init__(self, tolerance: Tolerance = DEFAULT_TOLERANCE, capture_emits: bool = False):
        self.objects: dict[str, GeometricObject] = {}
        self.trace: list[TraceEntry] = []
        self.tolerance = tolerance
        self.capture_emits = capture_emits
        self.emitted: list[tuple[str, str]] = []
        self.assert_results: list[AssertResult] = []
        self.macro_notes: dict[str, str] = {}
        self.macro_residuals: list[float] = []
        self._gensym_counter = 0

    def gensym(self, hint: str = "t") -> str:
        self._gensym_counter += 1
        return f"_{hint}{self._gensym_counter}"

    def get(self, name: str) -> GeometricObject:
        try:
            return self.objects[name]
        except KeyError:
            raise UnresolvedNameError(f"no object named {name!r} in the workspace") from None

    def point(self, name: str) -> Point:
        obj = self.get(name)
        if not isinstance(obj, Point):
            raise ConstructionError(f"{name!r} is a {type(obj).__name__}, expected a point")
        return obj

    def bind(self, name: str, obj: GeometricObject) -> None:
        if name in self.objects:
            raise ConstructionError(f"name {name!r} is already bound")
        self.objects[name] = obj

    def rename(self, old: str, new: str) -> None:
        """Rebind an object under a new name, keeping its insertion position."""
        if old == new:
            return
        if new in self.objects:
            raise ConstructionError(f"name {new!r} is already bound")
        self.get(old)
        self.objects = {(new if key == old else key): value
                        for key, value in self.objects.items()}
        if old in self.macro_notes:
            self.macro_notes[new] = self.macro_notes.pop(old)


class VM:
    """Executes instructions against a workspace, recording the trace."""

    def __init__(self, workspace: Workspace | None = None,
                 tolerance: Tolerance = DEFAULT_TOLERANCE, capture_emits: bool = False):
        self.ws = workspace or Workspace(tolerance=tolerance, capture_emits=capture_emits)
        self._depth = 0

    # -- primitive helpers (used by macros; every call is traced) ----------

    def _record(self, instr: Instruction) -> None:
        self.ws.trace.append(TraceEntry(self._depth, instr))

    def free_point(self, x: float, y: float, name: str | None = None) -> str:
        name = name or self.ws.gensym("P")
        self.execute(FreePoint(name, float(x), float(y)))
        return name

    def line(self, p: str, q: str, name: str | None = None) -> str:
        name = name or self.ws.gensym("l")
        self.execute(LineThrough(name, p, q))
        return name

    def circle_through(self, center: str, through: str, name: str | None = None) -> str:
        name = name or self.ws.gensym("c")
        self.execute(CircleCenterThrough(name, center, through))
        return name

    def circle_radius_of(self, center: str, p: str, q: str, name: str | None = None) -> str:
        name = name or self.ws.gensym("c")
        self.execute(CircleCenterRadiusOf(name, center, p, q))
        return name

    def intersect(self, obj1: str, obj2: str, selector: Selector = Selector(),
                  names: tuple[str, ...] | None = None) -> tuple[str, ...]:
        if names is None:
            count = 2 if selector.kind == "both" else 1
            names = tuple(self.ws.gensym("X") for _ in range(count))
        self.execute(Intersect(names, obj1, obj2, selector))
        return names

    def intersect_nearest(self, obj1: str, obj2: str, anchor: Point,
                          name: str | None = None) -> str:
        sel = Selector("nearest", anchor_point=anchor)
        return self.intersect(obj1, obj2, sel, names=(name or self.ws.gensym("X"),))[0]

    def call_macro(self, macro: str, args: Iterable[Any],
                   names: tuple[str, ...] = ()) -> list[str]:
        """Invoke a macro from inside another macro (or from the API layer)."""
        instr = MacroCall(tuple(names), macro, tuple(args))
        self._record(instr)
        return self._run_macro(instr)

    def check(self, description: str, residual: float, limit: float) -> None:
        """Macro postcondition hook: record the residual, fail if over limit."""
        from ..errors import MacroPostconditionError

        self.ws.macro_residuals.append(abs(residual))
        if abs(residual) > limit:
            raise MacroPostconditionError(
                f"{description}: residual {residual:.3e} exceeds {limit:.1e}")

    # -- execution ---------------------------------------------------------

    def execute(self, instr: Instruction) -> None:
        handler: Callable[[Any], None] | None = {
            FreePoint: self._exec_free_point,
            LineThrough: self._exec_line_through,
            CircleCenterThrough: self._exec_circle_through,
            CircleCenterRadiusOf: self._exec_circle_radius_of,
            Intersect: self._exec_intersect,
            MacroCall: self._exec_macro,
            AssertInstr: self._exec_assert,
            EmitInstr: self._exec_emit,
        }.get(type(instr))
        if handler is None:
            raise ConstructionError(f"unknown instruction {instr!r}")
        self._record(instr)
        handler(instr)

    def run(self, program: Program) -> Workspace:
        for instr in program.instructions:
            self.execute(instr)
        return self.ws

    def _exec_free_point(self, instr: FreePoint) -> None:
        self.ws.bind(instr.name, Point(instr.x, instr.y))

    def _exec_line_through(self, instr: LineThrough) -> None:
        from ..plane import line_through

        self.ws.bind(instr.name,
                     line_through(self.ws.point(instr.p), self.ws.point(instr.q),
                                  self.ws.tolerance))

    def _exec_circle_through(self, instr: CircleCenterThrough) -> None:
        center = self.ws.point(instr.center)
        through = self.ws.point(instr.through)
        self.ws.bind(instr.name, Circle(center, distance(center, through)))

    def _exec_circle_radius_of(self, instr: CircleCenterRadiusOf) -> None:
        center = self.ws.point(instr.center)
        radius = distance(self.ws.point(instr.p), self.ws.point(instr.q))
        self.ws.bind(instr.name, Circle(center, radius))

    def _intersection_points(self, a: GeometricObject, b: GeometricObject) -> list[Point]:
        tol = self.ws.tolerance
        if isinstance(a, Line) and isinstance(b, Line):
            result = intersect_line_line(a, b, tol)
            if isinstance(result, LineRelation):
                raise ConstructionError(f"lines do not meet in a point: {result.value}")
            return [result]
        if isinstance(a, Line) and isinstance(b, Circle):
            return intersect_line_circle(a, b, tol)
        if isinstance(a, Circle) and isinstance(b, Line):
            return intersect_line_circle(b, a, tol)
        if isinstance(a, Circle) and isinstance(b, Circle):
            _, points = intersect_circle_circle(a, b, tol)
            return points
        raise ConstructionError(
            f"cannot intersect {type(a).__name__} with {type(b).__name__}")

    def _exec_intersect(self, instr: Intersect) -> None:
        points = self._intersection_points(self.ws.get(instr.obj1), self.ws.get(instr.obj2))
        sel = instr.selector
        if sel.kind == "both":
            chosen = points
        elif sel.kind in ("first", "second"):
            index = 0 if sel.kind == "first" else 1
            if index >= len(points):
                raise ConstructionError(
                    f"intersection of {instr.obj1!r} and {instr.obj2!r} has "
                    f"{len(points)} point(s); selector {sel.kind!r} not available")
            chosen = [points[index]]
        else:
            anchor = sel.anchor_point if sel.anchor_point is not None \
                else self.ws.point(sel.anchor_name)  # type: ignore[arg-type]
            if not points:
                raise ConstructionError(
                    f"objects {instr.obj1!r} and {instr.obj2!r} do not intersect")
            chosen = [min(points, key=lambda p: distance(p, anchor))]
        if len(chosen) != len(instr.names):
            raise ConstructionError(
                f"intersection of {instr.obj1!r} and {instr.obj2!r} yields "
                f"{len(chosen)} point(s), cannot bind {len(instr.names)} name(s)")
        for name, point in zip(instr.names, chosen):
            self.ws.bind(name, point)

    def _exec_macro(self, instr: MacroCall) -> None:
        self._run_macro(instr)

    def _run_macro(self, instr: MacroCall) -> list[str]:
        from .macros import MACROS

        macro = MACROS.get(instr.macro)
        if macro is None:
            raise ConstructionError(
                f"unknown macro {instr.macro!r}; available: {', '.join(sorted(MACROS))}")
        for arg in instr.args:
            if isinstance(arg, str):
                self.ws.get(arg)  # fail early on unresolved references
        self._depth += 1
        try:
            produced = macro.expand(self, instr.args)
        finally:
            self._depth -= 1
        if instr.names:
            if len(produced) != len(instr.names):
                raise ConstructionError(
                    f"macro {instr.macro!r} produced {len(produced)} object(s), "
                    f"cannot bind {len(instr.names)} name(s)")
            for old, new in zip(produced, instr.names):
                self.ws.rename(old, new)
            produced = list(instr.names)
        return produced

    def _measure_assert(self, instr: AssertInstr) -> tuple[float, float]:
        ws = self.ws
        if instr.kind == "dist_eq":
            a, b, c, d = (ws.point(n) for n in instr.args)
            return distance(a, b), distance(c, d)
        if instr.kind == "dist_val":
            a, b = (ws.point(n) for n in instr.args)
            return distance(a, b), float(instr.expected)  # type: ignore[arg-type]
        if instr.kind == "angle_val":
            a, o, b = (ws.point(n) for n in instr.args)
            return angle_at(a, o, b).degrees, float(instr.expected)  # type: ignore[arg-type]
        if instr.kind == "on":
            p = ws.point(instr.args[0])
            obj = ws.get(instr.args[1])
            if isinstance(obj, Line):
                return distance_point_line(p, obj), 0.0
            if isinstance(obj, Circle):
                return abs(distance(p, obj.center) - obj.radius), 0.0
            if isinstance(obj, Arc):
                return abs(distance(p, obj.circle.center) - obj.circle.radius), 0.0
            raise ConstructionError(f"on(): cannot test incidence with {type(obj).__name__}")
        if instr.kind in ("parallel", "perp"):
            l1, l2 = ws.get(instr.args[0]), ws.get(instr.args[1])
            if not (isinstance(l1, Line) and isinstance(l2, Line)):
                raise ConstructionError(f"{instr.kind}() expects two lines")
            cross = l1.a * l2.b - l1.b * l2.a
            dot = l1.a * l2.a + l1.b * l2.b
            return (abs(cross), 0.0) if instr.kind == "parallel" else (abs(dot), 0.0)
        raise ConstructionError(f"unknown assert kind {instr.kind!r}")

    def _exec_assert(self, instr: AssertInstr) -> None:
        measured, expected = self._measure_assert(instr)
        tolerance = instr.tolerance if instr.tolerance is not None \
            else self.ws.tolerance.abs_eps
        passed = abs(measured - expected) <= tolerance
        self.ws.assert_results.append(AssertResult(
            description=instr.description or instr.kind, passed=passed,
            measured=measured, expected=expected, tolerance=tolerance, line=instr.line))
        if not passed:
            raise AssertionFailedError(instr.description or instr.kind,
                                       measured, expected, tolerance, line=instr.line)

    def _exec_emit(self, instr: EmitInstr) -> None:
        if instr.format != "svg":
            raise ConstructionError(f"unknown emit format {instr.format!r}")
        from .svg import render_svg

        content = render_svg(self.ws)
        self.ws.emitted.append((instr.path, content))
        if not self.ws.capture_emits:
            write_atomic(instr.path, content)


def write_atomic(path: str, content: str) -> None:
    """Write via a temp file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run_program(program: Program, tolerance: Tolerance = DEFAULT_TOLERANCE,
                capture_emits: bool = False) -> Workspace:
    """Execute a parsed program on a fresh workspace."""
    vm = VM(tolerance=tolerance, capture_emits=capture_emits)
    return vm.run(program)
