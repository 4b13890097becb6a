"""Command-line surface: JSON in, JSON out, exit codes for harnesses.

Exit codes: 0 success, 1 verification or round-trip mismatch, 2 bad
arguments or malformed input, 3 enumeration budget exceeded.  Reports go
to stdout (or --out); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .gf import FiniteField, parse_field_spec
from .linalg import Matrix, matrix_from_rows
from .semilinear import BudgetExceeded, DEFAULT_BUDGET, SemilinearMap
from .flags import make_flag, adapt_to_flag
from .linalg import standard_basis
from .bijection import (
    map_to_tuple,
    roundtrip_check,
    tuple_profile,
    tuple_to_map,
)
from .counting import closed_form_count, formula_table, profiles, staged_count, verify_counts

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_ARGS = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs, normalized from argparse."""

    command: str
    field_spec: str | None = None
    g: int | None = None
    tau: int = 0
    r: int | None = None
    s: int | None = None
    budget: int = DEFAULT_BUDGET
    threads: int = 1
    seed: int = 0
    pretty: bool = False
    out: str | None = None
    input_path: str | None = None


# ---------------------------------------------------------------------------
# text block format: header "rows cols fieldspec", one row of codes per line;
# a map block puts a "tau <i>" line above the matrix block


def format_matrix_block(A: Matrix) -> str:
    lines = [f"{A.rows} {A.cols} {A.ctx.spec}"]
    lines += [" ".join(str(x) for x in A.row(i)) for i in range(A.rows)]
    return "\n".join(lines)


def format_map_block(F: SemilinearMap) -> str:
    return f"tau {F.tau}\n" + format_matrix_block(F.mat)


def split_blocks(text: str) -> list[list[str]]:
    blocks: list[list[str]] = []
    current: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            if current:
                blocks.append(current)
                current = []
        else:
            current.append(line)
    if current:
        blocks.append(current)
    return blocks


def parse_matrix_block(lines: list[str]) -> tuple[FiniteField, Matrix]:
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"matrix header must be 'rows cols fieldspec', got {lines[0]!r}")
    try:
        nrows, ncols = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"non-integer dimensions in header {lines[0]!r}")
    ctx = parse_field_spec(header[2])
    if len(lines) - 1 != nrows:
        raise ValueError(f"expected {nrows} rows after header, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        try:
            row = tuple(int(x) for x in line.split())
        except ValueError:
            raise ValueError(f"non-integer entry in row {line!r}")
        if len(row) != ncols:
            raise ValueError(f"row {line!r} has {len(row)} entries, expected {ncols}")
        rows.append(row)
    return ctx, matrix_from_rows(ctx, rows, ncols)


def parse_map_block(lines: list[str]) -> SemilinearMap:
    head = lines[0].split()
    if len(head) != 2 or head[0] != "tau":
        raise ValueError(f"map block must start with 'tau <i>', got {lines[0]!r}")
    try:
        tau = int(head[1])
    except ValueError:
        raise ValueError(f"non-integer tau in {lines[0]!r}")
    _, A = parse_matrix_block(lines[1:])
    return SemilinearMap(A, tau)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


# ---------------------------------------------------------------------------
# subcommands: each returns (payload, exit_code, pretty_renderer)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def cmd_field_info(cfg: RunConfig):
    ctx = parse_field_spec(cfg.field_spec)
    terms = []
    for k, c in enumerate(ctx.modulus):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            coeff = "" if c == 1 else str(c)
            terms.append(coeff + ("x" if k == 1 else f"x^{k}"))
    payload = {
        "spec": ctx.spec,
        "p": ctx.p,
        "d": ctx.d,
        "q": ctx.q,
        "modulus": list(ctx.modulus),
        "modulus_str": "+".join(terms),
        "frobenius_exponents": list(range(ctx.d)),
    }
    return payload, EXIT_OK, None


def cmd_count(cfg: RunConfig):
    ctx = parse_field_spec(cfg.field_spec)
    _require(cfg.g is not None and cfg.g >= 0, "--g is required and must be >= 0")
    g, q = cfg.g, ctx.q
    if (cfg.r is None) != (cfg.s is None):
        raise ValueError("--r and --s must be given together")
    if cfg.r is not None:
        via_formula = closed_form_count(g, cfg.r, cfg.s, q)
        via_stages = staged_count(g, cfg.r, cfg.s, q)
        payload = {
            "field": ctx.spec,
            "q": q,
            "g": g,
            "r": cfg.r,
            "s": cfg.s,
            "theorem": str(via_formula),
            "staged": str(via_stages),
            "match": via_formula == via_stages,
        }
        return payload, EXIT_OK if payload["match"] else EXIT_MISMATCH, None
    table = formula_table(g, q)
    cells = [
        {
            "r": r,
            "s": s,
            "theorem": str(table.entries[(r, s)]),
            "staged": str(staged_count(g, r, s, q)),
            "match": True,
        }
        for (r, s) in profiles(g)
    ]
    payload = {
        "field": ctx.spec,
        "q": q,
        "g": g,
        "cells": cells,
        "total": str(table.total),
    }
    return payload, EXIT_OK, _render_count_table


def cmd_verify(cfg: RunConfig):
    ctx = parse_field_spec(cfg.field_spec)
    _require(cfg.g is not None and cfg.g >= 0, "--g is required and must be >= 0")
    report, ok = verify_counts(
        ctx, cfg.g, cfg.tau, budget=cfg.budget, threads=cfg.threads)
    return report, EXIT_OK if ok else EXIT_MISMATCH, _render_verify_table


def cmd_adapt(cfg: RunConfig):
    blocks = split_blocks(_read_text(cfg.input_path))
    _require(len(blocks) >= 2,
             "adapt needs a basis block followed by at least one flag-member block")
    ctx, basis_mat = parse_matrix_block(blocks[0])
    g = basis_mat.cols
    _require(basis_mat.rows == g, "basis block must be square: one row per basis vector")
    members = []
    for block in blocks[1:]:
        mctx, member = parse_matrix_block(block)
        _require(mctx == ctx, "all blocks must use the same field")
        _require(member.cols == g, "flag member vectors must have length g")
        members.append(member.row_list())
    flag = make_flag(ctx, g, members)
    adapted = adapt_to_flag(ctx, basis_mat.row_list(), flag)
    payload = {
        "field": ctx.spec,
        "g": g,
        "dims": list(flag.dims),
        "basis": [list(v) for v in adapted.vectors],
        "pivot_sets": [list(js) for js in adapted.pivot_sets],
    }
    return payload, EXIT_OK, None


def cmd_mu(cfg: RunConfig):
    blocks = split_blocks(_read_text(cfg.input_path))
    _require(len(blocks) == 1, "mu expects exactly one map block")
    F = parse_map_block(blocks[0])
    xs = map_to_tuple(F)
    r, s = tuple_profile(F.ctx, xs)
    payload = {
        "field": F.ctx.spec,
        "g": F.g,
        "tau": F.tau,
        "profile": {"r": r, "s": s},
        "tuple": [list(v) for v in xs],
        "block": format_matrix_block(matrix_from_rows(F.ctx, list(xs), F.g)),
    }
    return payload, EXIT_OK, None


def cmd_nu(cfg: RunConfig):
    blocks = split_blocks(_read_text(cfg.input_path))
    _require(len(blocks) == 1, "nu expects exactly one tuple block (vectors as rows)")
    ctx, X = parse_matrix_block(blocks[0])
    _require(X.rows == X.cols, "tuple block must be square: g vectors of length g")
    xs = X.row_list()
    F = tuple_to_map(ctx, xs, cfg.tau)
    r, s = tuple_profile(ctx, xs)
    payload = {
        "field": ctx.spec,
        "g": X.rows,
        "tau": F.tau,
        "profile": {"r": r, "s": s},
        "matrix": [list(F.mat.row(i)) for i in range(F.g)],
        "block": format_map_block(F),
    }
    return payload, EXIT_OK, None


def cmd_roundtrip(cfg: RunConfig):
    ctx = parse_field_spec(cfg.field_spec)
    _require(cfg.g is not None and cfg.g >= 1, "--g is required and must be >= 1")
    report, ok = roundtrip_check(
        ctx, cfg.g, cfg.tau,
        budget=cfg.budget, threads=cfg.threads, seed=cfg.seed)
    return report, EXIT_OK if ok else EXIT_MISMATCH, None


# ---------------------------------------------------------------------------
# rendering


def _render_cells(cells, columns) -> list[str]:
    widths = {c: max(len(c), max((len(str(row[c])) for row in cells), default=0))
              for c in columns}
    header = "  ".join(c.ljust(widths[c]) for c in columns)
    lines = [header, "-" * len(header)]
    for row in cells:
        lines.append("  ".join(str(row[c]).ljust(widths[c]) for c in columns))
    return lines


def _render_count_table(payload: dict) -> str:
    lines = [f"field {payload['field']}  q={payload['q']}  g={payload['g']}"]
    lines += _render_cells(payload["cells"], ["r", "s", "theorem", "staged", "match"])
    lines.append(f"total {payload['total']}")
    return "\n".join(lines)


def _render_verify_table(payload: dict) -> str:
    lines = [f"field {payload['field']}  g={payload['g']}  tau={payload['tau']}"]
    cells = [dict(c, enumerated=c["enumerated"] if c["enumerated"] is not None else "-")
             for c in payload["cells"]]
    lines += _render_cells(cells, ["r", "s", "theorem", "staged", "enumerated", "match"])
    totals = payload["totals"]
    lines.append(f"totals: theorem={totals['theorem']} enumerated={totals['enumerated']} "
                 f"expected={totals['expected']}")
    flags = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in payload["corollaries"].items())
    lines.append(f"corollaries: {flags}")
    return "\n".join(lines)


def _emit(payload: dict, cfg: RunConfig, renderer) -> None:
    if cfg.pretty:
        text = renderer(payload) if renderer is not None else json.dumps(payload, indent=2)
    else:
        text = json.dumps(payload)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semicount",
        description="Exact counts and normal forms for twisted-linear endomorphisms "
                    "over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, field=False, g=False, tau=False, enum=False, io=False):
        if field:
            p.add_argument("--field", required=True,
                           help="field spec, 'p^d' or 'p^d/c0,c1,...,cd' (little-endian modulus)")
        if g:
            p.add_argument("--g", type=int, required=True, help="dimension of the space")
        if tau:
            p.add_argument("--tau", type=int, default=0,
                           help="Frobenius exponent of the twist (default 0)")
        if enum:
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                           help="largest enumeration size allowed")
            p.add_argument("--threads", type=int, default=1,
                           help="worker processes for enumeration")
            p.add_argument("--seed", type=int, default=0,
                           help="seed for sampled checks (default 0)")
        if io:
            p.add_argument("input", nargs="?", default="-",
                           help="input file of text blocks, '-' for stdin")
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        p.add_argument("--out", help="write the report to this path instead of stdout")

    p = sub.add_parser("count", help="profile counts from the two formula routes")
    common(p, field=True, g=True)
    p.add_argument("--r", type=int, help="rank, for a single cell (with --s)")
    p.add_argument("--s", type=int, help="stable rank, for a single cell (with --r)")

    p = sub.add_parser("verify", help="formulas vs. exhaustive enumeration")
    common(p, field=True, g=True, tau=True, enum=True)

    p = sub.add_parser("adapt", help="adapt an ordered basis to a flag")
    common(p, io=True)

    p = sub.add_parser("mu", help="encode a map block as its vector tuple")
    common(p, io=True)

    p = sub.add_parser("nu", help="decode a tuple block into a map")
    common(p, tau=True, io=True)

    p = sub.add_parser("roundtrip", help="exhaustive or sampled decode-encode check")
    common(p, field=True, g=True, tau=True, enum=True)

    p = sub.add_parser("field-info", help="describe a field spec")
    common(p, field=True)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        field_spec=getattr(args, "field", None),
        g=getattr(args, "g", None),
        tau=getattr(args, "tau", 0),
        r=getattr(args, "r", None),
        s=getattr(args, "s", None),
        budget=getattr(args, "budget", DEFAULT_BUDGET),
        threads=getattr(args, "threads", 1),
        seed=getattr(args, "seed", 0),
        pretty=args.pretty,
        out=args.out,
        input_path=getattr(args, "input", None),
    )


_HANDLERS = {
    "count": cmd_count,
    "verify": cmd_verify,
    "adapt": cmd_adapt,
    "mu": cmd_mu,
    "nu": cmd_nu,
    "roundtrip": cmd_roundtrip,
    "field-info": cmd_field_info,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    try:
        payload, code, renderer = _HANDLERS[cfg.command](cfg)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    _emit(payload, cfg, renderer)
    return code


if __name__ == "__main__":
    sys.exit(main())
