"""Command-line surface: tables, single queries, graph exports, selfcheck.

Exit codes: 0 success, 1 failed selfcheck, 2 bad arguments, 3 unmet Dorey
precondition.  All output is deterministic byte-for-byte for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from rmx import ar_quiver as ar
from rmx import denominators as dn
from rmx import quantum_cartan as qc
from rmx import root_system as rs
from rmx import schur_weyl as sw
from rmx import selfcheck


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _build(family: str, rank: int) -> rs.CartanData:
    try:
        return rs.build_cartan(family, rank)
    except rs.InvalidTypeError as exc:
        raise CliError(str(exc)) from exc


def _parse_vertex(text: str) -> tuple[int, int]:
    try:
        i, p = text.split(",")
        return int(i), int(p)
    except ValueError as exc:
        raise CliError(f"expected 'i,p', got {text!r}") from exc


def _parse_quiver(cd: rs.CartanData, text: str | None) -> ar.DynkinQuiver:
    if text is None:
        return ar.monotone_quiver(cd)
    arrows = []
    for part in text.split(","):
        if ">" not in part:
            raise CliError(f"bad arrow {part!r}, expected 'u>v'")
        u, v = part.split(">")
        arrows.append((int(u), int(v)))
    try:
        return ar.orient(cd, arrows)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _height(Q: ar.DynkinQuiver, xi1: int | None) -> tuple[int, ...]:
    try:
        return ar.default_height(Q, xi1)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _emit_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _emit_table(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(x) for x in row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "markdown-table":
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "|".join(" --- " for _ in header) + "|")
        lines += ["| " + " | ".join(str(x) for x in row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return _emit_json([dict(zip(header, row)) for row in rows])
    raise CliError(f"format {fmt!r} not valid here")


# ---------------------------------------------------------------------------
# subcommands


def cmd_ctilde(args) -> str:
    cd = _build(args.type, args.rank)
    order = args.order if args.order is not None else 2 * cd.h
    if order < 1:
        raise CliError("--order must be >= 1")
    t = qc.ctilde_table(cd, order)
    header = ["i", "j"] + [f"l{l}" for l in range(1, order + 1)]
    rows = [
        [i, j] + list(t.series(i, j))
        for i in cd.vertices
        for j in cd.vertices
    ]
    return _emit_table(header, rows, args.format)


def cmd_denominator(args) -> str:
    cd = _build(args.type, args.rank)
    if not (1 <= args.i <= cd.rank and 1 <= args.j <= cd.rank):
        raise CliError(f"vertex indices must lie in 1..{cd.rank}")
    d = (
        dn.denominator_kashiwara(cd, args.i, args.j)
        if args.convention == "minus_q"
        else dn.denominator(cd, args.i, args.j)
    )
    header = ["exponent", "multiplicity", "convention"]
    rows = [[e, m, d.convention] for e, m in d.factors]
    return _emit_table(header, rows, args.format)


def _query_vertices(args):
    cd = _build(args.type, args.rank)
    x = _parse_vertex(args.x)
    y = _parse_vertex(args.y)
    try:
        ar.check_delta_vertex(cd, x)
        ar.check_delta_vertex(cd, y)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    return cd, x, y


def cmd_pole_order(args) -> str:
    cd, x, y = _query_vertices(args)
    value = dn.pole_order(cd, x, y)
    if args.format == "json":
        return _emit_json({"pole_order": value, "x": list(x), "y": list(y)})
    return f"{value}\n"


def cmd_irreducible(args) -> str:
    cd, x, y = _query_vertices(args)
    value = dn.is_tensor_irreducible(cd, x, y)
    if args.format == "json":
        return _emit_json({"irreducible": value, "x": list(x), "y": list(y)})
    return ("true" if value else "false") + "\n"


def cmd_dorey(args) -> str:
    cd, x, y = _query_vertices(args)
    Q = _parse_quiver(cd, args.quiver)
    xi = _height(Q, args.xi1)
    try:
        mono = dn.dorey_middle_term(cd, Q, xi, x, y)
    except ValueError as exc:
        raise CliError(str(exc), code=3) from exc
    except dn.DoreyPlacementError as exc:
        raise CliError(str(exc), code=3) from exc
    if args.format == "json":
        return _emit_json({"middle_term": dict(
            (f"{i},{p}", e) for (i, p), e in mono.exps)})
    return mono.render() + "\n"


def _graph_payload(vertices, arrows, vertex_attrs=None):
    return {
        "vertices": [vertex_attrs[v] if vertex_attrs else _vkey(v) for v in vertices],
        "arrows": [
            {"from": _vkey(u), "to": _vkey(v), "mult": m} for u, v, m in arrows
        ],
    }


def _vkey(v):
    if isinstance(v, tuple):
        return f"{v[0]},{v[1]}"
    return v


def _emit_dot(name: str, vertices, arrows, vertex_attrs=None) -> str:
    lines = [f"digraph {name} {{"]
    for v in vertices:
        attrs = ""
        if vertex_attrs:
            extra = vertex_attrs[v]
            attrs = " [" + ", ".join(
                f'{k}="{val}"' for k, val in extra.items() if k not in ("i", "p", "j")
            ) + "]"
            if attrs == " []":
                attrs = ""
        lines.append(f'  "{_vkey(v)}"{attrs};')
    for u, v, m in arrows:
        lines.append(f'  "{_vkey(u)}" -> "{_vkey(v)}" [mult={m}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args) -> str:
    cd = _build(args.type, args.rank)
    if args.what == "ar-quiver":
        if args.p_lo is None or args.p_hi is None:
            raise CliError("--p-lo and --p-hi are required")
        Q = _parse_quiver(cd, args.quiver)
        xi = _height(Q, args.xi1)
        vertices = ar.delta_vertices(cd, args.p_lo, args.p_hi)
        vset = set(vertices)
        arrows = []
        for i, p in vertices:
            for j in cd.neighbors(i):
                if (j, p + 1) in vset:
                    arrows.append(((i, p), (j, p + 1), 1))
        arrows.sort()
        attrs = {}
        for v in vertices:
            obj = ar.happel_object(Q, xi, v)
            attrs[v] = {
                "i": v[0],
                "p": v[1],
                "root": ",".join(str(c) for c in obj.root),
                "shift": obj.shift,
            }
        if args.format == "dot":
            return _emit_dot("ar_quiver", vertices, arrows, attrs)
        return _emit_json(_graph_payload(vertices, arrows, attrs))
    if args.what == "gamma":
        if args.p_lo is None or args.p_hi is None:
            raise CliError("--p-lo and --p-hi are required")
        win = sw.gamma_window(cd, args.p_lo, args.p_hi)
        arrows = sorted(win.arrows)
        if args.format == "dot":
            return _emit_dot("gamma", win.vertices, arrows)
        return _emit_json(_graph_payload(win.vertices, arrows))
    if args.what == "gamma-j":
        if args.N is None or args.j_lo is None or args.j_hi is None:
            raise CliError("--N, --j-lo and --j-hi are required")
        if args.j_lo > args.j_hi:
            raise CliError("--j-lo must be <= --j-hi")
        Q = _parse_quiver(cd, args.quiver)
        xi = _height(Q, args.xi1 if args.xi1 is not None else -2)
        try:
            fam = sw.type_a_family(cd, Q, xi, args.N, args.j_lo, args.j_hi)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        win = sw.gamma_J(cd, fam)
        arrows = sorted(win.arrows)
        if args.format == "dot":
            return _emit_dot("gamma_J", win.vertices, arrows)
        return _emit_json(_graph_payload(win.vertices, arrows))
    raise CliError(f"unknown export {args.what!r}")


def cmd_selfcheck(args) -> tuple[str, int]:
    report = selfcheck.run(args.scope)
    if args.format == "json":
        out = selfcheck.render_report(report) + "\n"
    else:
        lines = [f"scope: {report['scope']}"]
        for c in report["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            lines.append(f"{mark} {c['name']} ({c['seconds']}s): {c['detail']}")
        lines.append("all passed" if report["passed"] else "FAILURES present")
        out = "\n".join(lines) + "\n"
    return out, 0 if report["passed"] else 1


# ---------------------------------------------------------------------------
# parser


def _add_type_rank_flags(p):
    p.add_argument("--type", required=True, choices=("A", "D", "E"))
    p.add_argument("--rank", required=True, type=int)


def _add_type_rank_positional(p):
    p.add_argument("type", choices=("A", "D", "E"))
    p.add_argument("rank", type=int)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rmx",
        description="Exact R-matrix denominators for quantum loop algebras of type ADE.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("ctilde", help="inverse quantum Cartan matrix table")
    _add_type_rank_flags(sp)
    sp.add_argument("--order", type=int, default=None, help="truncation (default 2h)")
    sp.add_argument("--format", default="csv",
                    choices=("csv", "json", "markdown-table"))
    sp.set_defaults(fn=cmd_ctilde)

    sp = sub.add_parser("denominator", help="denominator factor list")
    _add_type_rank_flags(sp)
    sp.add_argument("--i", required=True, type=int)
    sp.add_argument("--j", required=True, type=int)
    sp.add_argument("--convention", default="q", choices=("q", "minus_q"))
    sp.add_argument("--format", default="csv",
                    choices=("csv", "json", "markdown-table"))
    sp.set_defaults(fn=cmd_denominator)

    for name, fn in (("pole-order", cmd_pole_order), ("irreducible", cmd_irreducible)):
        sp = sub.add_parser(name, help=f"{name} query")
        _add_type_rank_positional(sp)
        sp.add_argument("--x", required=True, help="vertex 'i,p'")
        sp.add_argument("--y", required=True, help="vertex 'j,r'")
        sp.add_argument("--format", default="text", choices=("text", "json"))
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("dorey", help="middle-term monomial at a simple pole")
    _add_type_rank_positional(sp)
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--quiver", default=None, help="orientation, e.g. '2>1'")
    sp.add_argument("--xi1", type=int, default=None, help="height at vertex 1")
    sp.add_argument("--format", default="text", choices=("text", "json"))
    sp.set_defaults(fn=cmd_dorey)

    sp = sub.add_parser("export", help="graph exports")
    sp.add_argument("what", choices=("ar-quiver", "gamma", "gamma-j"))
    _add_type_rank_flags(sp)
    sp.add_argument("--p-lo", type=int, default=None)
    sp.add_argument("--p-hi", type=int, default=None)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--j-lo", type=int, default=None)
    sp.add_argument("--j-hi", type=int, default=None)
    sp.add_argument("--quiver", default=None)
    sp.add_argument("--xi1", type=int, default=None)
    sp.add_argument("--format", default="json", choices=("json", "dot"))
    sp.set_defaults(fn=cmd_export)

    sp = sub.add_parser("selfcheck", help="run the acceptance suite")
    sp.add_argument("--scope", default="fast", choices=("fast", "full"))
    sp.add_argument("--format", default="json", choices=("json", "text"))
    sp.set_defaults(fn=cmd_selfcheck)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    if isinstance(result, tuple):
        out, code = result
    else:
        out, code = result, 0
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
