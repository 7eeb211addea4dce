"""Construction VM, macro library, script parser, and SVG emission."""

from .api import MacroRun, golden_gnomon_sides, inscribed_polygon_side, run_macro, run_script
from .macros import MACROS, MacroDef, is_constructible_ngon
from .parser import parse_program
from .svg import render_svg
from .vm import (
    AssertInstr,
    AssertResult,
    CircleCenterRadiusOf,
    CircleCenterThrough,
    EmitInstr,
    FreePoint,
    Instruction,
    Intersect,
    LineThrough,
    MacroCall,
    Program,
    Selector,
    VM,
    Workspace,
    run_program,
    write_atomic,
)

__all__ = [
    "AssertInstr", "AssertResult", "CircleCenterRadiusOf", "CircleCenterThrough",
    "EmitInstr", "FreePoint", "Instruction", "Intersect", "LineThrough", "MACROS",
    "MacroCall", "MacroDef", "MacroRun", "Program", "Selector", "VM", "Workspace",
    "golden_gnomon_sides", "inscribed_polygon_side", "is_constructible_ngon",
    "parse_program", "render_svg", "run_macro", "run_program", "run_script",
    "write_atomic",
]
