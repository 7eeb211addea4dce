"""Command-line client for the geometry service.

The CLI is a thin HTTP client: by default it mounts the FastAPI app
in-process (no server needed); pass ``--server URL`` to talk to a running
instance instead.  Exit codes: 0 success, 1 a theorem/assert failed at
tolerance, 2 malformed input or infeasible construction.

Examples:
    euclidkit construct script.txt
    euclidkit pi-table --rounds 5
    euclidkit cf --value sqrt2 --steps 4
    euclidkit solve-triangle 3 4 5 --format json
    euclidkit mensurate solid cone radius=5 height=12
    euclidkit lantern --radius 1 --height 1 --m n --n 8 --sweep 64
    euclidkit verify angle-sum --seed 7
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import Any

import httpx

from .construct.vm import write_atomic
from .verify import SUITES

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _call(args: argparse.Namespace, method: str, path: str,
          payload: dict | None = None) -> httpx.Response:
    if args.server:
        with httpx.Client(base_url=args.server, timeout=300.0) as client:
            return client.request(method, path, json=payload)

    async def _run() -> httpx.Response:
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://euclidkit.internal") as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(_run())


def _request(args: argparse.Namespace, method: str, path: str,
             payload: dict | None = None) -> dict:
    response = _call(args, method, path, payload)
    if response.status_code != 200:
        detail = response.json().get("detail", response.text)
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return response.json()


def _deliver(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _csv(header: list[str], rows: list[list[Any]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(repr(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        with open(args.script, encoding="utf-8") as handle:
            script = handle.read()
    except OSError as exc:
        print(f"error: cannot read {args.script}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload: dict[str, Any] = {"script": script}
    if args.tolerance is not None:
        payload["tolerance"] = args.tolerance
    result = _request(args, "POST", "/construct/run", payload)
    for item in result["asserts"]:
        status = "ok" if item["passed"] else "FAILED"
        line = f" (line {item['line']})" if item["line"] else ""
        print(f"assert {status}: {item['description']}{line}: "
              f"measured {item['measured']!r}, expected {item['expected']!r} "
              f"tol {item['tolerance']:g}")
    for path, content in result["artifacts"].items():
        target = args.svg if args.svg and len(result["artifacts"]) == 1 else path
        write_atomic(target, content)
        print(f"wrote {target}")
    error = result.get("error")
    if error:
        where = f" at line {error['line']}" if error.get("line") else ""
        print(f"{error['kind']}{where}: {error['message']}", file=sys.stderr)
    if result["exit_code"] == 0 and args.svg and not result["artifacts"]:
        # No emit in the script: render the final workspace via a one-line re-run.
        rerun = _request(args, "POST", "/construct/run",
                         {**payload, "script": script + f'\nemit svg "{args.svg}"\n'})
        if rerun["exit_code"] == 0:
            for _, content in rerun["artifacts"].items():
                write_atomic(args.svg, content)
                print(f"wrote {args.svg}")
    return result["exit_code"]


def cmd_verify(args: argparse.Namespace) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    payload = {"seed": args.seed}
    if args.samples is not None:
        payload["samples"] = args.samples
    worst = EXIT_OK
    for name in names:
        report = _request(args, "POST", f"/verify/{name}", payload)
        status = "PASS" if report["passed"] else "FAIL"
        detail = f" ({report['detail']})" if report.get("detail") else ""
        print(f"{status} {report['name']}: samples={report['samples']} "
              f"max_residual={report['max_residual']:.3e} "
              f"tol={report['tolerance']:.1e}{detail}")
        if not report["passed"]:
            worst = EXIT_FAILED
    return worst


def cmd_pi_table(args: argparse.Namespace) -> int:
    payload = {"rounds": args.rounds, "stabilized": args.stabilized,
               "start_n": args.start_n, "max_rounds": args.max_rounds}
    result = _request(args, "POST", "/pi/table", payload)
    rows = [[r["n"], r["side"], r["perimeter"], r["pi_estimate"],
             r["error_vs_reference"]] for r in result["rows"]]
    if args.format == "json":
        _deliver(json.dumps(result, indent=2) + "\n", args.out)
    else:
        _deliver(_csv(["n", "a_n", "p_n", "pi_est", "error_vs_reference"], rows), args.out)
    return EXIT_OK


def cmd_cf(args: argparse.Namespace) -> int:
    payload: dict[str, Any] = {"steps": args.steps}
    if args.ratio:
        payload["a"], payload["b"] = args.ratio
    elif args.value:
        payload["value"] = args.value
    else:
        print("error: provide --value or --ratio A B", file=sys.stderr)
        return EXIT_USAGE
    result = _request(args, "POST", "/cf/expand", payload)
    if args.format == "json":
        _deliver(json.dumps(result, indent=2) + "\n", args.out)
        return EXIT_OK
    rows = [[r["k"], r["quotient"], r["p"], r["q"], r["value"], r["error"]]
            for r in result["rows"]]
    _deliver(_csv(["k", "quotient", "p", "q", "value", "error"], rows), args.out)
    return EXIT_OK


def cmd_solve_triangle(args: argparse.Namespace) -> int:
    result = _request(args, "POST", "/triangle/solve",
                      {"a": args.a, "b": args.b, "c": args.c})
    if args.format == "json":
        _deliver(json.dumps(result, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = [
        f"sides: a={result['a']} b={result['b']} c={result['c']}",
        f"area: {result['area']!r}",
        f"semiperimeter: {result['semiperimeter']!r}",
        f"projections on a: c'={result['projection_c_on_a']!r} "
        f"b'={result['projection_b_on_a']!r}",
        f"heights (h_a, h_b, h_c): {tuple(result['heights'])!r}",
        f"medians (m_a, m_b, m_c): {tuple(result['medians'])!r}",
        f"angles (at A, B, C): {' '.join(result['angle_classes'])}",
        f"circumradius: {result['circumradius']!r}",
        f"inradius: {result['inradius']!r}",
    ]
    for vertex, split in zip("ABC", result["bisector_splits"]):
        lines.append(f"bisector from {vertex} splits the opposite side: "
                     f"{split['toward_first']!r} / {split['toward_second']!r}")
    _deliver("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _parse_params(pairs: list[str]) -> dict[str, float]:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise SystemExit(f"error: expected key=value, got {pair!r}")
        key, _, value = pair.partition("=")
        try:
            params[key] = float(value)
        except ValueError:
            raise SystemExit(f"error: parameter {key!r} is not a number: {value!r}") from None
    return params


def cmd_mensurate(args: argparse.Namespace) -> int:
    params = _parse_params(args.params)
    if args.family == "plane":
        result = _request(args, "POST", "/mensurate/plane",
                          {"shape": args.kind, "params": params})
    else:
        result = _request(args, "POST", "/mensurate/solid",
                          {"kind": args.kind, "params": params})
    _deliver(json.dumps(result, indent=2) + "\n", args.out)
    return EXIT_OK


def _lantern_m(pattern: str, n: int) -> int:
    if pattern == "n":
        return n
    if pattern in ("n^3", "n3"):
        return n ** 3
    try:
        return int(pattern)
    except ValueError:
        raise SystemExit(f"error: --m must be an integer, 'n', or 'n^3', got {pattern!r}") \
            from None


def cmd_lantern(args: argparse.Namespace) -> int:
    ns = range(args.n, args.sweep + 1) if args.sweep else [args.n]
    rows = []
    for n in ns:
        payload = {"radius": args.radius, "height": args.height,
                   "m": _lantern_m(args.m, n), "n": n}
        result = _request(args, "POST", "/lantern", payload)
        rows.append([result["n"], result["m"], result["area"]])
    _deliver(_csv(["n", "m", "S"], rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="euclidkit",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--server", default=os.environ.get("EUCLIDKIT_SERVER"),
                        help="base URL of a running euclidkit service "
                             "(default: run the app in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="run a construction script")
    p.add_argument("script", help="path to the script file")
    p.add_argument("--svg", help="write the final diagram to this path")
    p.add_argument("--tolerance", type=float,
                   default=float(os.environ["EUCLIDKIT_TOLERANCE"])
                   if os.environ.get("EUCLIDKIT_TOLERANCE") else None,
                   help="assert/tangency tolerance override")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a randomized theorem suite")
    p.add_argument("suite", help="suite name or 'all'",
                   choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pi-table", help="inscribed-polygon doubling table")
    p.add_argument("--rounds", type=int, default=4)
    p.add_argument("--stabilized", action="store_true",
                   help="use the cancellation-free form of the recurrence")
    p.add_argument("--start-n", type=int, default=6)
    p.add_argument("--max-rounds", type=int, default=24)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="write output atomically to this path")
    p.set_defaults(func=cmd_pi_table)

    p = sub.add_parser("cf", help="continued fraction of a value or length ratio")
    p.add_argument("--value", help="number or one of: sqrt2, pi, golden, phi, e")
    p.add_argument("--ratio", nargs=2, type=float, metavar=("A", "B"),
                   help="expand the ratio of two lengths")
    p.add_argument("--steps", type=int, default=16)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("solve-triangle", help="all metric data of a side triple")
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("c", type=float)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve_triangle)

    p = sub.add_parser("mensurate", help="areas and volumes by closed formula")
    p.add_argument("family", choices=["plane", "solid"])
    p.add_argument("kind", help="shape keyword (e.g. trapezoid, cone, sphere)")
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mensurate)

    p = sub.add_parser("lantern", help="Schwarz lantern surface area")
    p.add_argument("--radius", "--R", dest="radius", type=float, default=1.0)
    p.add_argument("--height", "--H", dest="height", type=float, default=1.0)
    p.add_argument("--m", default="n",
                   help="axial slabs: an integer, 'n', or 'n^3' (default n)")
    p.add_argument("--n", type=int, required=True, help="angular divisions")
    p.add_argument("--sweep", type=int, default=None, metavar="N_MAX",
                   help="emit rows for every n up to N_MAX")
    p.add_argument("--out")
    p.set_defaults(func=cmd_lantern)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        return exc.code if exc.code is not None else EXIT_OK
    except httpx.HTTPError as exc:
        print(f"error: cannot reach the service: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
