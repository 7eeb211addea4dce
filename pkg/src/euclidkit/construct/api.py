"""Convenience entry points over the construction VM."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..plane import Circle, GeometricObject, Line, Point, distance
from ..scalar import DEFAULT_TOLERANCE, Tolerance
from .parser import parse_program
from .vm import VM, Selector, Workspace


def run_script(text: str, tolerance: Tolerance = DEFAULT_TOLERANCE,
               capture_emits: bool = False) -> Workspace:
    """Parse and execute a construction script on a fresh workspace."""
    program = parse_program(text)
    vm = VM(tolerance=tolerance, capture_emits=capture_emits)
    return vm.run(program)


@dataclass
class MacroRun:
    workspace: Workspace
    names: list[str]
    objects: list[GeometricObject]


def run_macro(macro: str, *args: Any, tolerance: Tolerance = DEFAULT_TOLERANCE) -> MacroRun:
    """Execute one macro on a fresh workspace.

    Point and Circle arguments are entered as given data (points as free
    points, circles with their centers); numbers pass through unchanged.
    """
    vm = VM(tolerance=tolerance)
    prepared: list[Any] = []
    for arg in args:
        if isinstance(arg, Point):
            prepared.append(vm.free_point(arg.x, arg.y))
        elif isinstance(arg, Circle):
            center = vm.free_point(arg.center.x, arg.center.y)
            rim = vm.free_point(arg.center.x + arg.radius, arg.center.y)
            prepared.append(vm.circle_through(center, rim))
        elif isinstance(arg, Line):
            name = vm.ws.gensym("l")
            vm.ws.bind(name, arg)
            prepared.append(name)
        else:
            prepared.append(arg)
    names = vm.call_macro(macro, tuple(prepared))
    return MacroRun(vm.ws, names, [vm.ws.get(n) for n in names])


def golden_gnomon_sides(tolerance: Tolerance = DEFAULT_TOLERANCE) -> tuple[float, float]:
    """Base and leg of the 36°-base isosceles triangle, built by compass.

    The golden section of a unit segment gives the leg; base : leg is the
    golden ratio, the all-ones continued fraction.
    """
    vm = VM(tolerance=tolerance)
    a = vm.free_point(0.0, 0.0)
    b = vm.free_point(1.0, 0.0)
    g = vm.call_macro("golden_section", (a, b))[0]
    around_a = vm.circle_through(a, g)
    around_b = vm.circle_radius_of(b, a, g)
    apex = vm.intersect(around_a, around_b, Selector("second"))[0]
    base = distance(vm.ws.point(a), vm.ws.point(b))
    leg = distance(vm.ws.point(a), vm.ws.point(apex))
    return base, leg


def inscribed_polygon_side(n: int, radius: float = 1.0,
                           tolerance: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Side length of the inscribed regular n-gon, measured off the VM trace."""
    run = run_macro("inscribe_regular", n, Circle(Point(0.0, 0.0), radius),
                    tolerance=tolerance)
    first, second = run.objects[0], run.objects[1]
    assert isinstance(first, Point) and isinstance(second, Point)
    return distance(first, second)
