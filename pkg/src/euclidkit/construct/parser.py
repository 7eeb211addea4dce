"""Line-oriented parser for construction scripts.

One instruction per line, `#` starts a comment.  The statement forms:

    point NAME = (x, y)
    line NAME = line(P, Q)
    circle NAME = circle(P, Q)              # center P, through Q
    circle NAME = circle(P, r_of(Q, R))     # compass transfer of |QR|
    points N1, N2 = intersect(O1, O2)
    point N = intersect(O1, O2, nearest=P)  # or: first / second
    macro OUT1, OUT2, ... = macroname(ARG, ...)
    assert dist(A,B) == dist(C,D) tol 1e-9
    assert dist(A,B) == 2.5
    assert angle(A,O,B) == 60               # degrees
    assert on(P, obj) / parallel(l1,l2) / perp(l1,l2)
    emit svg "diagram.svg"
"""

from __future__ import annotations

import re

from ..errors import ScriptError
from .vm import (
    AssertInstr,
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
)

_TOKEN = re.compile(r"""
    (?P<string>"[^"]*")
  | (?P<number>[-+]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>==|[(),=])
  | (?P<ws>\s+)
  | (?P<bad>.)
""", re.VERBOSE)


class _Tokens:
    def __init__(self, text: str, line_no: int):
        self.line_no = line_no
        self.items: list[tuple[str, str, int]] = []
        for match in _TOKEN.finditer(text):
            kind = match.lastgroup
            if kind == "ws":
                continue
            if kind == "bad":
                raise ScriptError(f"unexpected character {match.group()!r}",
                                  line_no, match.start() + 1)
            self.items.append((kind, match.group(), match.start() + 1))
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self, expect_kind: str | None = None, expect_value: str | None = None
             ) -> tuple[str, str, int]:
        item = self.peek()
        if item is None:
            raise ScriptError(
                f"unexpected end of line (expected {expect_value or expect_kind})",
                self.line_no, self._end_column())
        kind, value, column = item
        if expect_kind and kind != expect_kind:
            raise ScriptError(f"expected {expect_kind}, found {value!r}", self.line_no, column)
        if expect_value and value != expect_value:
            raise ScriptError(f"expected {expect_value!r}, found {value!r}",
                              self.line_no, column)
        self.pos += 1
        return item

    def accept(self, value: str) -> bool:
        item = self.peek()
        if item and item[1] == value:
            self.pos += 1
            return True
        return False

    def done(self) -> None:
        item = self.peek()
        if item is not None:
            raise ScriptError(f"trailing input {item[1]!r}", self.line_no, item[2])

    def _end_column(self) -> int:
        return self.items[-1][2] + len(self.items[-1][1]) if self.items else 1


def _name(tokens: _Tokens) -> str:
    kind, value, column = tokens.next()
    if kind != "name":
        raise ScriptError(f"expected a name, found {value!r}", tokens.line_no, column)
    if value.startswith("_"):
        raise ScriptError("names starting with '_' are reserved", tokens.line_no, column)
    return value


def _number(tokens: _Tokens) -> float:
    kind, value, column = tokens.next()
    if kind != "number":
        raise ScriptError(f"expected a number, found {value!r}", tokens.line_no, column)
    return float(value)


def _name_list(tokens: _Tokens) -> list[str]:
    names = [_name(tokens)]
    while tokens.accept(","):
        names.append(_name(tokens))
    return names


def _parse_point(tokens: _Tokens, line_no: int) -> Instruction:
    name = _name(tokens)
    tokens.next(expect_value="=")
    kind, value, column = tokens.next()
    if value == "(":
        x = _number(tokens)
        tokens.next(expect_value=",")
        y = _number(tokens)
        tokens.next(expect_value=")")
        return FreePoint(name, x, y, line=line_no)
    if value == "intersect":
        tokens.next(expect_value="(")
        obj1 = _name(tokens)
        tokens.next(expect_value=",")
        obj2 = _name(tokens)
        selector = Selector("first")
        if tokens.accept(","):
            skind, svalue, scolumn = tokens.next()
            if svalue == "nearest":
                tokens.next(expect_value="=")
                selector = Selector("nearest", anchor_name=_name(tokens))
            elif svalue in ("first", "second"):
                selector = Selector(svalue)
            else:
                raise ScriptError(f"unknown selector {svalue!r}", line_no, scolumn)
        tokens.next(expect_value=")")
        return Intersect((name,), obj1, obj2, selector, line=line_no)
    raise ScriptError(f"expected '(' or 'intersect', found {value!r}", line_no, column)


def _parse_points(tokens: _Tokens, line_no: int) -> Instruction:
    names = _name_list(tokens)
    if len(names) != 2:
        raise ScriptError("'points' binds exactly two names", line_no, 1)
    tokens.next(expect_value="=")
    tokens.next(expect_value="intersect")
    tokens.next(expect_value="(")
    obj1 = _name(tokens)
    tokens.next(expect_value=",")
    obj2 = _name(tokens)
    tokens.next(expect_value=")")
    return Intersect(tuple(names), obj1, obj2, Selector("both"), line=line_no)


def _parse_line_stmt(tokens: _Tokens, line_no: int) -> Instruction:
    name = _name(tokens)
    tokens.next(expect_value="=")
    tokens.next(expect_value="line")
    tokens.next(expect_value="(")
    p = _name(tokens)
    tokens.next(expect_value=",")
    q = _name(tokens)
    tokens.next(expect_value=")")
    return LineThrough(name, p, q, line=line_no)


def _parse_circle(tokens: _Tokens, line_no: int) -> Instruction:
    name = _name(tokens)
    tokens.next(expect_value="=")
    tokens.next(expect_value="circle")
    tokens.next(expect_value="(")
    center = _name(tokens)
    tokens.next(expect_value=",")
    item = tokens.peek()
    if item and item[1] == "r_of":
        tokens.next()
        tokens.next(expect_value="(")
        p = _name(tokens)
        tokens.next(expect_value=",")
        q = _name(tokens)
        tokens.next(expect_value=")")
        tokens.next(expect_value=")")
        return CircleCenterRadiusOf(name, center, p, q, line=line_no)
    through = _name(tokens)
    tokens.next(expect_value=")")
    return CircleCenterThrough(name, center, through, line=line_no)


def _parse_macro(tokens: _Tokens, line_no: int) -> Instruction:
    names = _name_list(tokens)
    tokens.next(expect_value="=")
    macro = _name(tokens)
    tokens.next(expect_value="(")
    args: list = []
    if not tokens.accept(")"):
        while True:
            kind, value, column = tokens.next()
            if kind == "name":
                args.append(value)
            elif kind == "number":
                args.append(float(value))
            else:
                raise ScriptError(f"macro arguments are names or numbers, found {value!r}",
                                  line_no, column)
            if tokens.accept(")"):
                break
            tokens.next(expect_value=",")
    return MacroCall(tuple(names), macro, tuple(args), line=line_no)


def _parse_assert(tokens: _Tokens, line_no: int) -> Instruction:
    kind, keyword, column = tokens.next()
    if kind != "name":
        raise ScriptError(f"expected a predicate, found {keyword!r}", line_no, column)
    description_parts = [keyword]

    def arg_names(count: int) -> list[str]:
        tokens.next(expect_value="(")
        names = [_name(tokens)]
        while tokens.accept(","):
            names.append(_name(tokens))
        tokens.next(expect_value=")")
        if len(names) != count:
            raise ScriptError(f"{keyword} takes {count} names", line_no, column)
        description_parts.append("(" + ", ".join(names) + ")")
        return names

    if keyword == "dist":
        left = arg_names(2)
        tokens.next(expect_value="==")
        item = tokens.peek()
        if item and item[1] == "dist":
            tokens.next()
            description_parts.append("== dist")
            right = arg_names(2)
            kind_name, args, expected = "dist_eq", tuple(left + right), None
        else:
            expected = _number(tokens)
            description_parts.append(f"== {expected}")
            kind_name, args = "dist_val", tuple(left)
    elif keyword == "angle":
        names = arg_names(3)
        tokens.next(expect_value="==")
        expected = _number(tokens)
        description_parts.append(f"== {expected}")
        kind_name, args = "angle_val", tuple(names)
    elif keyword == "on":
        names = arg_names(2)
        kind_name, args, expected = "on", tuple(names), None
    elif keyword in ("parallel", "perp"):
        names = arg_names(2)
        kind_name, args, expected = keyword, tuple(names), None
    else:
        raise ScriptError(f"unknown predicate {keyword!r}", line_no, column)

    tolerance = None
    if tokens.peek() and tokens.peek()[1] == "tol":
        tokens.next()
        tolerance = _number(tokens)
    return AssertInstr(kind_name, args, expected, tolerance,
                       description=" ".join(description_parts), line=line_no)


def _parse_emit(tokens: _Tokens, line_no: int) -> Instruction:
    tokens.next(expect_value="svg")
    kind, value, column = tokens.next()
    if kind != "string":
        raise ScriptError(f"emit expects a quoted path, found {value!r}", line_no, column)
    return EmitInstr("svg", value[1:-1], line=line_no)


_STATEMENTS = {
    "point": _parse_point,
    "points": _parse_points,
    "line": _parse_line_stmt,
    "circle": _parse_circle,
    "macro": _parse_macro,
    "assert": _parse_assert,
    "emit": _parse_emit,
}


def parse_program(text: str) -> Program:
    instructions: list[Instruction] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = _Tokens(body, line_no)
        kind, keyword, column = tokens.next()
        parser = _STATEMENTS.get(keyword)
        if kind != "name" or parser is None:
            raise ScriptError(
                f"unknown statement {keyword!r} (expected one of "
                f"{', '.join(sorted(_STATEMENTS))})", line_no, column)
        instructions.append(parser(tokens, line_no))
        tokens.done()
    return Program(instructions)
