"""Command-line front end: count tables, verification ledger, and exports.

Exit codes: 0 success, 1 verification or IO failure, 2 usage error,
3 infeasible request.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from .canon import canonical_form_bits
from .enumeration import (
    SCHEMA_VERSION,
    _distinct_key_ranks,
    _three_i_minus_s,
    brute_force_counts,
    construct_Kn_class,
    dst_witness,
    e8_context,
    omega_table,
    omega_table_json,
    reps_records,
    s_table,
    s_table_json,
    verify_cao,
    verify_fiber_n6,
)
from .exact_linalg import max_eig_le, rank
from .root_lattices import gram_to_graph
from .seidel_core import Graph, canonical_key, seidel_of_graph

__all__ = [
    "RunConfig",
    "cmd_omega_table",
    "cmd_s_table",
    "cmd_verify",
    "cmd_reps",
    "main",
    "cli",
    "TABLE2_S",
    "TABLE2_SE",
    "TABLE3_OMEGA",
]

# Reference values transcribed from the published classification tables.
# These are ground truth for --check-paper and are never computed here.
TABLE2_S = (1, 1, 1, 2, 3, 5, 9, 16, 25, 40, 58, 75, 96, 108)
TABLE2_SE = (0, 0, 0, 0, 1, 1, 4, 9, 23, 38, 56, 73, 94, 106)
TABLE3_OMEGA = (
    1, 1, 1, 2, 3, 5, 9, 16, 23, 37, 54, 70, 90, 101, 103,
    101, 90, 70, 54, 37, 23, 16, 10, 5, 3, 2, 1, 1, 1, 0,
)


@dataclass
class RunConfig:
    """Resolved invocation options for one subcommand run."""

    command: str
    n: int | None = None
    n_max: int | None = None
    output_path: str | None = None
    fmt: str = "text-table"
    threads: int = 1
    verbosity: int = 0
    check_paper: bool = False
    no_meta: bool = False
    only: str | None = None
    samples: int = 500
    seed: int = 0


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _path_error(path: str | None) -> str | None:
    """Validate the output target before any long computation starts."""
    if path is None:
        return None
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(parent):
        return f"output directory does not exist: {parent}"
    if os.path.isdir(path):
        return f"output path is a directory: {path}"
    if os.path.exists(path):
        if not os.access(path, os.W_OK):
            return f"output path is not writable: {path}"
    elif not os.access(parent, os.W_OK):
        return f"output directory is not writable: {parent}"
    return None


def _emit(text: str, cfg: RunConfig) -> int:
    if cfg.output_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"failed to write {cfg.output_path}: {exc}", file=sys.stderr)
        return 1
    return 0


def _text_table(rows: list[tuple[str, list]], cfg: RunConfig) -> str:
    """Aligned table with n running along the columns."""
    labels = [label for label, _ in rows]
    label_w = max(len(s) for s in labels)
    ncols = len(rows[0][1])
    widths = [
        max(len(str(values[c])) for _, values in rows) for c in range(ncols)
    ]
    lines = [] if cfg.no_meta else [f"# generated-at: {_timestamp()}"]
    for label, values in rows:
        cells = " ".join(str(v).rjust(w) for v, w in zip(values, widths))
        lines.append(f"{label.ljust(label_w)} | {cells}")
    return "\n".join(lines) + "\n"


def _json_payload(payload: dict, cfg: RunConfig) -> str:
    if not cfg.no_meta:
        payload = {**payload, "meta": {"generated_at": _timestamp()}}
    return json.dumps(payload, indent=2) + "\n"


def _jsonl_payload(kind: str, records: list[dict], cfg: RunConfig, **header) -> str:
    head = {"schema_version": SCHEMA_VERSION, "kind": kind, **header}
    if not cfg.no_meta:
        head["generated_at"] = _timestamp()
    lines = [json.dumps(head)] + [json.dumps(r) for r in records]
    return "\n".join(lines) + "\n"


# -- omega-table ----------------------------------------------------------


def cmd_omega_table(cfg: RunConfig) -> int:
    err = _path_error(cfg.output_path)
    if err:
        print(err, file=sys.stderr)
        return 1
    table = omega_table()
    if cfg.check_paper:
        got = tuple(table.omega_at(n) for n in range(len(TABLE3_OMEGA)))
        if got != TABLE3_OMEGA:
            bad = [n for n, (a, b) in enumerate(zip(got, TABLE3_OMEGA)) if a != b]
            print(f"omega mismatch against the reference table at n = {bad}", file=sys.stderr)
            return 1
        print("check-paper: omega(0..29) matches the reference table", file=sys.stderr)
    if cfg.fmt == "json":
        text = _json_payload(omega_table_json(table), cfg)
    elif cfg.fmt == "jsonl":
        records = [
            {"n": n, "omega": table.omega[n], "orbit_count": table.raw_orbit_counts[n]}
            for n in range(29)
        ]
        text = _jsonl_payload("omega-table", records, cfg, count=len(records))
    else:
        text = _text_table(
            [
                ("n", list(range(29))),
                ("omega", list(table.omega)),
                ("c", list(table.raw_orbit_counts)),
            ],
            cfg,
        )
    return _emit(text, cfg)


# -- s-table --------------------------------------------------------------


def _cor_sn_residual_errors(table) -> list[str]:
    """The arithmetic identities relating s, s_e and omega for n >= 8."""
    errors = []
    omega = omega_table().omega
    top = len(table.s) - 1
    for n in range(8, top + 1):
        if table.s[n] != table.s_e[n] + 2:
            errors.append(f"s({n}) != s_e({n}) + 2")
        expected = n - 6 if n <= 12 else n // 2 + 1
        if table.s[n] - omega[n] != expected:
            errors.append(f"s({n}) - omega({n}) != {expected}")
    return errors


def cmd_s_table(cfg: RunConfig) -> int:
    n_max = 13 if cfg.n_max is None else cfg.n_max
    if not 0 <= n_max <= 28:
        print("--n-max must be in 0..28", file=sys.stderr)
        return 2
    err = _path_error(cfg.output_path)
    if err:
        print(err, file=sys.stderr)
        return 1
    table = s_table(n_max)
    if cfg.check_paper:
        upto = min(n_max, 13)
        if (
            table.s[: upto + 1] != TABLE2_S[: upto + 1]
            or table.s_e[: upto + 1] != TABLE2_SE[: upto + 1]
        ):
            print("s/s_e mismatch against the reference table", file=sys.stderr)
            return 1
        print(f"check-paper: s, s_e match the reference table for n = 0..{upto}", file=sys.stderr)
    residuals = _cor_sn_residual_errors(table) if n_max >= 8 else []
    if residuals:
        print("residual identities failed: " + "; ".join(residuals), file=sys.stderr)
        return 1
    if cfg.fmt == "json":
        text = _json_payload(s_table_json(table), cfg)
    elif cfg.fmt == "jsonl":
        records = [
            {
                "n": n,
                "s": table.s[n],
                "s_e": table.s_e[n],
                "provenance": table.provenance[n],
            }
            for n in range(n_max + 1)
        ]
        text = _jsonl_payload("s-table", records, cfg, count=len(records))
    else:
        text = _text_table(
            [
                ("n", list(range(n_max + 1))),
                ("s", list(table.s)),
                ("s_e", list(table.s_e)),
            ],
            cfg,
        )
        if n_max >= 8:
            text += (
                f"residuals for n = 8..{n_max}: s - s_e = 2 and "
                "s - omega = n - 6 (n <= 12), floor(n/2) + 1 (n >= 13): OK\n"
            )
    return _emit(text, cfg)


# -- verify ---------------------------------------------------------------


def _check_thm_cao(cfg: RunConfig) -> tuple[bool, str]:
    report = verify_cao(8, cfg.samples, cfg.seed)
    detail = (
        f"{report['samples']} random graphs on <= 8 vertices, "
        f"{report['bounded_cases']} with lambda_max <= 3; "
        f"{len(report['failures'])} failures"
    )
    return report["ok"], detail


def _check_lem_a(cfg: RunConfig) -> tuple[bool, str]:
    ctx = e8_context()
    problems = []
    n_r_count = sum(len(c.members()) for c in ctx.classes)
    if len(ctx.classes) != 28:
        problems.append(f"{len(ctx.classes)} pair-classes != 28")
    if n_r_count != 56:
        problems.append(f"{n_r_count} roots with (u, r) = 1 != 56")
    try:
        gram_to_graph([c.u for c in ctx.classes])
    except ValueError as exc:
        problems.append(f"representative Gram matrix invalid: {exc}")
    report = verify_fiber_n6()
    if report["complement_min_norms"] != [2, 8]:
        problems.append(f"complement min norms {report['complement_min_norms']}")
    ok = not problems
    detail = (
        "28 pair-classes from 56 roots; representative inner products in {0, 1}; "
        "A_7-complement min norms {2, 8}"
        if ok
        else "; ".join(problems)
    )
    return ok, detail


def _check_lem_sa(cfg: RunConfig) -> tuple[bool, str]:
    bad = [
        n
        for n in range(11)
        if construct_Kn_class(n) != canonical_key(Graph.complete(n))
    ]
    ok = not bad
    detail = (
        "A_{n+1} witness reproduces [S(K_n)] for n = 0..10"
        if ok
        else f"K_n mismatch at n = {bad}"
    )
    return ok, detail


def _check_lem_sd(cfg: RunConfig) -> tuple[bool, str]:
    problems = []
    pairs = 0
    for m in range(4, 13):
        for n in range(m - 1, 2 * (m - 2) + 1):
            pairs += 1
            w = dst_witness(n, m)
            target = Graph.complete_minus_matching(m - 2, n - m + 2)
            if canonical_form_bits(w.graph.adj) != canonical_form_bits(target.adj):
                problems.append(f"({n}, {m}): graph is not D_{m - 2},{n - m + 2}")
                continue
            rk = rank(_three_i_minus_s(w.graph))
            if rk != m - 1:
                problems.append(f"({n}, {m}): rank {rk} != {m - 1}")
            if not max_eig_le(seidel_of_graph(w.graph), 3):
                problems.append(f"({n}, {m}): lambda_max > 3")
            if (rk < n) != (n >= m):
                problems.append(f"({n}, {m}): eigenvalue-3 boundary wrong")
    ok = not problems
    detail = (
        f"{pairs} feasible (n, m) with m <= 12: graph D_(m-2),(n-m+2), "
        "rank m - 1, eigenvalue 3 exactly when n >= m"
        if ok
        else "; ".join(problems)
    )
    return ok, detail


def _check_thm_sym(cfg: RunConfig) -> tuple[bool, str]:
    problems = []
    c = omega_table().raw_orbit_counts
    for n in range(7):
        distinct = len(_distinct_key_ranks(n))
        expected = c[n] - (1 if n == 6 else 0)
        if distinct != expected:
            problems.append(f"n = {n}: {distinct} distinct keys != {expected}")
    report = verify_fiber_n6()
    if not report["ok"]:
        problems.extend(report["failures"])
    ok = not problems
    detail = (
        "phi injective for n <= 6 away from the doubled fiber; "
        "the n = 6 fiber is exactly {two orbits} over [S(K_6)]"
        if ok
        else "; ".join(problems)
    )
    return ok, detail


def _check_cor_sym(cfg: RunConfig) -> tuple[bool, str]:
    table = omega_table()
    c, om = table.raw_orbit_counts, table.omega
    problems = []
    if any(c[n] != c[28 - n] for n in range(29)):
        problems.append("c(n) != c(28 - n)")
    if any(om[n] != om[28 - n] for n in range(29) if n not in (6, 22)):
        problems.append("omega(n) != omega(28 - n) off {6, 22}")
    if om[6] + 1 != om[22]:
        problems.append(f"omega(6) + 1 = {om[6] + 1} != omega(22) = {om[22]}")
    ok = not problems
    detail = (
        "c(n) = c(28 - n); omega symmetric except omega(6) + 1 = omega(22)"
        if ok
        else "; ".join(problems)
    )
    return ok, detail


def _check_cor_sn(cfg: RunConfig) -> tuple[bool, str]:
    errors = _cor_sn_residual_errors(s_table(28))
    ok = not errors
    detail = (
        "s = s_e + 2 and the s - omega residuals hold for n = 8..28"
        if ok
        else "; ".join(errors)
    )
    return ok, detail


def _check_oracle(cfg: RunConfig) -> tuple[bool, str]:
    n_max = 5 if cfg.n_max is None else cfg.n_max
    if not 0 <= n_max <= 7:
        return False, "oracle depth must be in 0..7"
    table = s_table(n_max)
    om = omega_table().omega
    problems = []
    for n in range(n_max + 1):
        got = brute_force_counts(n)
        want = (table.s[n], table.s_e[n], om[n])
        if got != want:
            problems.append(f"n = {n}: brute force {got} != pipeline {want}")
    ok = not problems
    detail = (
        f"brute force agrees with the pipeline for n = 0..{n_max}"
        if ok
        else "; ".join(problems)
    )
    return ok, detail


_CHECKS = (
    ("thm:Cao", _check_thm_cao),
    ("lem:A", _check_lem_a),
    ("lem:S(A)", _check_lem_sa),
    ("lem:S(D)", _check_lem_sd),
    ("thm:sym", _check_thm_sym),
    ("cor:sym", _check_cor_sym),
    ("cor:Sn", _check_cor_sn),
    ("oracle", _check_oracle),
)

CHECK_NAMES = tuple(name for name, _ in _CHECKS)


def cmd_verify(cfg: RunConfig) -> int:
    selected = [(n, f) for n, f in _CHECKS if cfg.only in (None, n)]
    all_ok = True
    width = max(len(n) for n, _ in selected)
    for name, fn in selected:
        ok, detail = fn(cfg)
        all_ok = all_ok and ok
        print(f"[{'PASS' if ok else 'FAIL'}] {name.ljust(width)}  {detail}")
    return 0 if all_ok else 1


# -- reps -----------------------------------------------------------------


def cmd_reps(cfg: RunConfig) -> int:
    n = cfg.n
    if n is None or not 0 <= n <= 28:
        print("--n must be in 0..28", file=sys.stderr)
        return 2
    if not (n <= 8 or n >= 20):
        print(
            f"transversal at n = {n} is infeasible (supported: 0..8 and 20..28); "
            f"orbits of {n}-subsets correspond one-to-one to orbits of "
            f"{28 - n}-subsets under complementation within 0..27",
            file=sys.stderr,
        )
        return 3
    err = _path_error(cfg.output_path)
    if err:
        print(err, file=sys.stderr)
        return 1
    records = reps_records(n)
    if cfg.fmt == "json":
        text = _json_payload(
            {"schema_version": SCHEMA_VERSION, "n": n, "records": records}, cfg
        )
    elif cfg.fmt == "text-table":
        rows = [
            ("index", list(range(len(records)))),
            ("rank", [r["rank"] for r in records]),
            ("lattice", [r["lattice_family"] for r in records]),
        ]
        text = _text_table(rows, cfg)
    else:
        text = _jsonl_payload("reps", records, cfg, n=n, count=len(records))
    return _emit(text, cfg)


# -- entry points ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker cap, >= 1 (default: SEIDEL_FORGE_THREADS or 1); results "
        "are deterministic and identical for every thread count",
    )
    common.add_argument(
        "--no-meta",
        action="store_true",
        help="omit the generated-at timestamp from the output",
    )
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="seidel-forge",
        description="Switching classes of graphs whose Seidel matrix has "
        "largest eigenvalue at most 3: count tables, verification, exports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "omega-table",
        parents=[common],
        help="omega(0..28) and the raw subset-orbit counts c(0..28)",
    )
    p.add_argument("--check-paper", action="store_true", help="compare with the reference table; exit 1 on mismatch")
    p.add_argument("--format", dest="fmt", choices=["json", "jsonl", "text-table"], default="text-table")
    p.add_argument("-o", "--output", dest="output_path")

    p = sub.add_parser(
        "s-table",
        parents=[common],
        help="s(n) and s_e(n) for n = 0..n_max",
    )
    p.add_argument("--n-max", dest="n_max", type=int, default=None, help="top row index (default 13)")
    p.add_argument("--check-paper", action="store_true", help="compare with the reference table; exit 1 on mismatch")
    p.add_argument("--format", dest="fmt", choices=["json", "jsonl", "text-table"], default="text-table")
    p.add_argument("-o", "--output", dest="output_path")

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="run the named consistency checks and print a pass/fail ledger",
    )
    p.add_argument("--all", action="store_true", help="run every check (default)")
    p.add_argument("--only", choices=CHECK_NAMES, default=None, help="run a single named check")
    p.add_argument("--n-max", dest="n_max", type=int, default=None, help="brute-force depth for the oracle check (default 5, max 7)")
    p.add_argument("--samples", type=int, default=500, help="random graphs for the thm:Cao check")
    p.add_argument("--seed", type=int, default=0, help="random seed for the thm:Cao check")

    p = sub.add_parser(
        "reps",
        parents=[common],
        help="orbit representatives at size n with keys, ranks, lattice types",
    )
    p.add_argument("--n", type=int, required=True, help="subset size, in 0..8 or 20..28")
    p.add_argument("--format", dest="fmt", choices=["json", "jsonl", "text-table"], default="jsonl")
    p.add_argument("-o", "--output", dest="output_path")

    return parser


_DISPATCH = {
    "omega-table": cmd_omega_table,
    "s-table": cmd_s_table,
    "verify": cmd_verify,
    "reps": cmd_reps,
}


def main(argv=None) -> int:
    try:
        ns = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    threads = ns.threads
    if threads is None:
        raw = os.environ.get("SEIDEL_FORGE_THREADS", "1")
        try:
            threads = int(raw)
        except ValueError:
            print(f"invalid SEIDEL_FORGE_THREADS value: {raw!r}", file=sys.stderr)
            return 2
    if threads < 1:
        print("--threads must be >= 1", file=sys.stderr)
        return 2
    cfg = RunConfig(
        command=ns.command,
        n=getattr(ns, "n", None),
        n_max=getattr(ns, "n_max", None),
        output_path=getattr(ns, "output_path", None),
        fmt=getattr(ns, "fmt", "text-table"),
        threads=threads,
        verbosity=ns.verbose,
        check_paper=getattr(ns, "check_paper", False),
        no_meta=ns.no_meta,
        only=getattr(ns, "only", None),
        samples=getattr(ns, "samples", 500),
        seed=getattr(ns, "seed", 0),
    )
    try:
        return _DISPATCH[ns.command](cfg)
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


def cli() -> None:
    raise SystemExit(main())
