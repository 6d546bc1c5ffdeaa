"""Command-line front end.

Subcommand per operation; reads DSL blocks from file arguments or stdin
('-'), writes human-readable text or machine-readable JSON (--json).

Exit status: 0 success/admissible, 1 well-formed input failing a check,
2 malformed or invalid input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import dsl
from .errors import CurveGlueError
from .glued import SpaceSpec, extend_to_plane, restrict_to_branches
from .operators import (
    BranchOp,
    check_admissible,
    commutator,
    compose,
    default_probe_degree,
    generate_conditions,
    make_pair,
    probe_admissible,
)
from .poly import Poly, poly2_str, set_degree_cap
from .spectra import nullity_identity_check, separating_witness
from .symbols import pair_symbol, poisson_bracket

_SPACE = re.compile(r"^K(\d+)$")


def _space_arg(value: str) -> SpaceSpec:
    match = _SPACE.match(value)
    if not match:
        raise argparse.ArgumentTypeError(f"space must look like K0, K1, ..., got {value!r}")
    return SpaceSpec(int(match.group(1)))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _poly_coeffs(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def _op_coeffs(op: BranchOp) -> list[list[str]]:
    return [_poly_coeffs(c) for c in op.coeffs]


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _violations_json(report) -> list[dict]:
    return [
        {"constraint": v.constraint, "lhs": str(v.lhs), "rhs": str(v.rhs)}
        for v in report.violations
    ]


def _load_two(paths: list[str], parse_one, parse_many):
    if len(paths) == 1:
        items = parse_many(_read(paths[0]))
        if len(items) != 2:
            raise CurveGlueError(f"expected two blocks in {paths[0]}, found {len(items)}")
        return items
    if len(paths) == 2:
        return [parse_one(_read(paths[0])), parse_one(_read(paths[1]))]
    raise CurveGlueError("expected one or two input files")


def _cmd_check(args) -> int:
    pair = dsl.parse_paired(_read(args.file))
    order = args.order if args.order is not None else pair.declared_order
    report = check_admissible(pair.d1, pair.d2, args.space, order)
    payload = {
        "verb": "check",
        "space": str(args.space),
        "order": order,
        "verdict": "admissible" if report.ok else "inadmissible",
        "violations": _violations_json(report),
    }
    lines = [f"space {args.space}, order {order}: "
             + ("admissible" if report.ok else "NOT admissible")]
    for v in report.violations:
        lines.append(f"  violated: {v.constraint}   (lhs = {v.lhs}, rhs = {v.rhs})")
    if args.probe_depth is not None:
        depth = args.probe_depth or default_probe_degree(args.space, order)
        probed = probe_admissible(pair.d1, pair.d2, args.space, depth)
        payload["probe"] = {"depth": depth, "verdict": "admissible" if probed else "inadmissible"}
        lines.append(f"probe (depth {depth}): " + ("admissible" if probed else "NOT admissible"))
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def _combine(args, verb: str) -> int:
    parsed = _load_two(args.files, dsl.parse_paired, dsl.parse_many_paired)
    pairs = [make_pair(p.d1, p.d2, args.space, p.declared_order) for p in parsed]
    if verb == "compose":
        d1 = compose(pairs[0].d1, pairs[1].d1)
        d2 = compose(pairs[0].d2, pairs[1].d2)
        order = pairs[0].order + pairs[1].order
    else:
        d1 = commutator(pairs[0].d1, pairs[1].d1)
        d2 = commutator(pairs[0].d2, pairs[1].d2)
        order = max(pairs[0].order + pairs[1].order - 1, 0)
    result = make_pair(d1, d2, args.space, order)
    text = dsl.render_paired(result)
    payload = {
        "verb": verb,
        "space": str(args.space),
        "verdict": "admissible",
        "violations": [],
        "result": {
            "order": order,
            "branch_x": _op_coeffs(d1),
            "branch_y": _op_coeffs(d2),
            "dsl": text,
        },
    }
    _emit(args, payload, [text])
    return 0


def _cmd_symbol(args) -> int:
    parsed = dsl.parse_paired(_read(args.file))
    order = args.degree if args.degree is not None else parsed.declared_order
    pair = make_pair(parsed.d1, parsed.d2, args.space, order)
    sym = pair_symbol(pair)
    text = dsl.render_symbol(sym)
    payload = {
        "verb": "symbol",
        "space": str(args.space),
        "verdict": "pass",
        "violations": [],
        "result": {
            "degree": sym.degree,
            "a": _poly_coeffs(sym.a),
            "b": _poly_coeffs(sym.b),
            "dsl": text,
        },
    }
    _emit(args, payload, [text])
    return 0


def _parse_symbols_text(text: str):
    lines = [line for line in text.splitlines() if line.split("#", 1)[0].strip()]
    return [dsl.parse_symbol(line) for line in lines]


def _cmd_bracket(args) -> int:
    symbols = _load_two(args.files, dsl.parse_symbol, _parse_symbols_text)
    result = poisson_bracket(symbols[0], symbols[1])
    text = dsl.render_symbol(result)
    payload = {
        "verb": "bracket",
        "space": str(result.space),
        "verdict": "pass",
        "violations": [],
        "result": {
            "degree": result.degree,
            "a": _poly_coeffs(result.a),
            "b": _poly_coeffs(result.b),
            "dsl": text,
        },
    }
    _emit(args, payload, [text])
    return 0


def _cmd_conditions(args) -> int:
    conditions = generate_conditions(args.space, args.order)
    rendered = list(conditions.rendered)
    payload = {
        "verb": "conditions",
        "space": str(args.space),
        "order": args.order,
        "verdict": "pass",
        "violations": [],
        "result": {"constraints": rendered},
    }
    _emit(args, payload, rendered)
    return 0


def _embed_poly(args) -> Poly | None:
    return dsl.parse_poly(args.embed) if args.embed else None


def _cmd_extend(args) -> int:
    glued = dsl.parse_glued(_read(args.file))
    surface = extend_to_plane(glued, _embed_poly(args))
    text = poly2_str(surface)
    payload = {
        "verb": "extend",
        "space": str(glued.space),
        "verdict": "pass",
        "violations": [],
        "result": {
            "slices": [_poly_coeffs(s) for s in surface.slices],
            "dsl": text,
        },
    }
    _emit(args, payload, [text])
    return 0


def _cmd_restrict(args) -> int:
    source = _read(args.file)
    expr = " ".join(
        line.split("#", 1)[0].strip() for line in source.splitlines()
    ).strip()
    surface = dsl.parse_poly2(expr)
    glued = restrict_to_branches(surface, _embed_poly(args), args.space)
    text = dsl.render_glued(glued)
    payload = {
        "verb": "restrict",
        "space": str(args.space),
        "verdict": "pass",
        "violations": [],
        "result": {
            "f": _poly_coeffs(glued.f),
            "g": _poly_coeffs(glued.g),
            "dsl": text,
        },
    }
    _emit(args, payload, [text])
    return 0


def _cmd_witness(args) -> int:
    lines = [line for line in _read(args.file).splitlines() if line.split("#", 1)[0].strip()]
    if len(lines) != 2:
        raise CurveGlueError(f"expected two character lines, found {len(lines)}")
    c1, c2 = (dsl.parse_char(line, i + 1) for i, line in enumerate(lines))
    bound = args.max_degree if args.max_degree is not None else args.space.m + 3
    witness = separating_witness(c1, c2, args.space, bound)
    if witness is None:
        payload_result = {"witness": None}
        lines_out = ["none (both characters denote the same point)"]
    else:
        from .spectra import char_eval

        text = dsl.render_glued(witness)
        payload_result = {
            "witness": text,
            "values": [str(char_eval(c1, witness)), str(char_eval(c2, witness))],
        }
        lines_out = [text]
    payload = {
        "verb": "witness",
        "space": str(args.space),
        "verdict": "pass",
        "violations": [],
        "result": payload_result,
    }
    _emit(args, payload, lines_out)
    return 0


def _cmd_nullity(args) -> int:
    checks = nullity_identity_check(args.space)
    all_ok = all(c.passed for c in checks)
    payload = {
        "verb": "nullity",
        "space": str(args.space),
        "verdict": "pass" if all_ok else "fail",
        "violations": [],
        "result": {
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
            ]
        },
    }
    lines = [
        f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}" for c in checks
    ]
    _emit(args, payload, lines)
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curveglue",
        description="Exact calculus on two curves glued with contact of order m",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit structured JSON")
        p.add_argument(
            "--max-degree",
            type=int,
            default=None,
            metavar="CAP",
            help="polynomial degree cap (witness: also the search bound)",
        )
        return p

    p = add("check", _cmd_check, help="check admissibility of a paired operator")
    p.add_argument("file", help="paired-operator file or '-' for stdin")
    p.add_argument("--space", type=_space_arg, required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument(
        "--probe-depth",
        type=int,
        nargs="?",
        const=0,
        default=None,
        metavar="D",
        help="also run the brute-force probe (0 or no value = default depth)",
    )

    for verb in ("compose", "commutator"):
        p = add(verb, lambda a, v=verb: _combine(a, v), help=f"{verb} of two admissible pairs")
        p.add_argument("files", nargs="+", help="one file with two pairs, or two files")
        p.add_argument("--space", type=_space_arg, required=True)

    p = add("symbol", _cmd_symbol, help="symbol of an admissible pair")
    p.add_argument("file")
    p.add_argument("--space", type=_space_arg, required=True)
    p.add_argument("--degree", type=int, default=None)

    p = add("bracket", _cmd_bracket, help="Poisson bracket of two symbols")
    p.add_argument("files", nargs="+", help="one file with two symbols, or two files")

    p = add("conditions", _cmd_conditions, help="print the admissibility conditions")
    p.add_argument("--space", type=_space_arg, required=True)
    p.add_argument("--order", type=int, required=True)

    p = add("extend", _cmd_extend, help="extend a glued pair to the plane")
    p.add_argument("file")
    p.add_argument("--embed", default=None, metavar="POLY", help="embedding profile h (default x^(m+1))")

    p = add("restrict", _cmd_restrict, help="restrict a plane polynomial to the branches")
    p.add_argument("file")
    p.add_argument("--space", type=_space_arg, required=True)
    p.add_argument("--embed", default=None, metavar="POLY")

    p = add("witness", _cmd_witness, help="separating witness for two characters")
    p.add_argument("file", help="file with two 'char' lines")
    p.add_argument("--space", type=_space_arg, required=True)

    p = add("nullity", _cmd_nullity, help="verify the symbol-character nullity identities")
    p.add_argument("--space", type=_space_arg, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_degree is not None and args.verb != "witness":
        set_degree_cap(args.max_degree)
    try:
        return args.func(args)
    except CurveGlueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
