"""Command-line interface: a thin client over the HTTP service.

Commands read graph6 records from a file (or standard input with "-"), send
them to the service -- in-process by default, remote with --url -- and print
one JSON object per line on standard output.  Diagnostics go to standard
error.  Exit codes: 0 success, 1 invariant failure, 2 input failure,
3 two-place discovery, 4 size cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .client import ServiceClient
from .graphs import read_graph6_lines

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INPUT = 2
EXIT_DISCOVERY = 3
EXIT_SIZE = 4

_ERROR_EXITS = {"parse": EXIT_INPUT, "domain": EXIT_INPUT, "size_cap": EXIT_SIZE,
                "internal_inconsistency": EXIT_INVARIANT}


def main(argv: list[str] | None = None) -> int:
    import httpx

    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except httpx.HTTPError as exc:
        print(f"error: service request failed: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapmatch",
        description="Matching / Laplacian matching polynomials, exact roots, and "
        "edge-addition variation scans over graph6 input.",
    )
    parser.add_argument("--url", default=None, help="base URL of a running service; "
                        "default runs the service in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="polynomial coefficients for each input graph")
    _add_input(poly)
    poly.add_argument("--kind", choices=["matching", "laplacian"], default="laplacian")
    poly.set_defaults(handler=_cmd_poly)

    roots = sub.add_parser("roots", help="certified real roots of the Laplacian matching polynomial")
    _add_input(roots)
    roots.add_argument("--width", default="1e-12", help="certified interval width (default 1e-12)")
    roots.set_defaults(handler=_cmd_roots)

    verify = sub.add_parser("verify", help="run an invariant suite over a corpus")
    _add_input(verify)
    verify.add_argument("--suite", choices=["identities", "roots", "census", "partitions", "all"],
                        default="all")
    verify.add_argument("--jobs", type=int, default=_default_jobs())
    verify.set_defaults(handler=_cmd_verify)

    scan = sub.add_parser("scan", help="variation report for every non-edge of every graph")
    _add_input(scan)
    scan.add_argument("--jobs", type=int, default=_default_jobs())
    scan.set_defaults(handler=_cmd_scan)

    census = sub.add_parser("census", help="census coefficient and spanning counts")
    _add_input(census)
    census.add_argument("--i", type=int, required=True, help="edge count of the census class")
    census.set_defaults(handler=_cmd_census)

    ratio = sub.add_parser("ratio", help="spanning-tree / unicyclic ratio check")
    _add_input(ratio)
    ratio.set_defaults(handler=_cmd_ratio)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=_cmd_serve)

    for name, command in sub.choices.items():
        if name != "serve":
            command.add_argument("--max-size", type=int, default=None,
                                 help="reject or skip graphs with n+m above this")
    return parser


def _add_input(command: argparse.ArgumentParser) -> None:
    command.add_argument("input", nargs="?", default="-",
                         help="graph6 file, one record per line ('-' = stdin)")


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _read_lines(path: str) -> list[tuple[int, str]]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as handle:
            text = handle.read()
    return list(read_graph6_lines(text))


def _emit(obj: dict) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _per_line_command(args, path: str, payload_for_line) -> int:
    """Run one request per input record; aggregate the worst exit code."""
    client = ServiceClient(args.url)
    worst = EXIT_OK
    for lineno, line in _read_lines(args.input):
        status, body = client.post(path, payload_for_line(line))
        if status == 200:
            _emit(body)
            continue
        code = _ERROR_EXITS.get(body.get("error", ""), EXIT_INPUT)
        print(f"line {lineno}: {body.get('error')}: {body.get('detail')}", file=sys.stderr)
        worst = _worse(worst, code)
    return worst


_SEVERITY = [EXIT_INVARIANT, EXIT_SIZE, EXIT_INPUT, EXIT_DISCOVERY]


def _worse(a: int, b: int) -> int:
    for code in _SEVERITY:
        if a == code or b == code:
            return code
    return a or b


def _cmd_poly(args) -> int:
    return _per_line_command(
        args, "/poly",
        lambda line: {"graph6": line, "kind": args.kind, "max_size": args.max_size},
    )


def _cmd_roots(args) -> int:
    return _per_line_command(
        args, "/roots",
        lambda line: {"graph6": line, "width": args.width, "max_size": args.max_size},
    )


def _cmd_census(args) -> int:
    return _per_line_command(
        args, "/census",
        lambda line: {"graph6": line, "i": args.i, "max_size": args.max_size},
    )


def _cmd_ratio(args) -> int:
    return _per_line_command(
        args, "/ratio",
        lambda line: {"graph6": line, "max_size": args.max_size},
    )


def _cmd_verify(args) -> int:
    client = ServiceClient(args.url)
    lines = _read_lines(args.input)
    status, body = client.post("/verify", {
        "graphs": [line for _, line in lines],
        "suite": args.suite,
        "jobs": args.jobs,
        "max_size": args.max_size,
    })
    if status != 200:
        print(f"{body.get('error')}: {body.get('detail')}", file=sys.stderr)
        return _ERROR_EXITS.get(body.get("error", ""), EXIT_INPUT)
    index = {k + 1: lineno for k, (lineno, _) in enumerate(lines)}
    for record in body["records"]:
        record["line"] = index.get(record["line"], record["line"])
        _emit(record)
    _emit({"summary": body["summary"]})
    summary = body["summary"]
    if summary["parse_errors"]:
        return EXIT_INPUT
    if summary["failed"]:
        return EXIT_INVARIANT
    return EXIT_OK


def _cmd_scan(args) -> int:
    client = ServiceClient(args.url)
    lines = _read_lines(args.input)
    status, body = client.post("/scan", {
        "graphs": [line for _, line in lines],
        "jobs": args.jobs,
        "max_size": args.max_size,
    })
    if status != 200:
        print(f"{body.get('error')}: {body.get('detail')}", file=sys.stderr)
        return _ERROR_EXITS.get(body.get("error", ""), EXIT_INPUT)
    index = {k + 1: lineno for k, (lineno, _) in enumerate(lines)}
    for report in body["reports"]:
        _emit(report)
    for notice in body["notices"]:
        print(f"line {index.get(notice['line'], notice['line'])}: {notice['message']}",
              file=sys.stderr)
    _emit({"summary": body["summary"]})
    summary = body["summary"]
    if summary["one_place"]:
        return EXIT_INVARIANT
    if summary["two_place"]:
        print("two-place integral variation hit: potential discovery, see summary",
              file=sys.stderr)
        return EXIT_DISCOVERY
    if summary["parse_errors"]:
        return EXIT_INPUT
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("lapmatch.service:app", host=args.host, port=args.port)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
