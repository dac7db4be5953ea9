"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 a size cap
refused the request.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .diagrams import diagram_count, enumerate_diagrams
from .gram import DEFAULT_CAP, GramMatrix, ResourceCapError, catalan_blocks, check_cap, gram_matrix
from .polyring import Polynomial, Scalar, VarSet, parse, varset
from .symdet import DEFAULT_DET_CAP, ENGINES, det, det_gram, embed_reduce, substitute_entries
from .verify import REGISTRY, delta_diag, run_claims, summary_table

COMMANDS = ("enum", "gram", "det", "blocks", "delta", "reduce", "verify", "subst")
FORMATS = ("text", "json", "csv")


class UsageError(ValueError):
    """Arguments parse but do not make sense together."""


@dataclass
class JobConfig:
    command: str
    n: int | None = None
    k: int = 2
    engine: str = "auto"
    substitutions: dict[str, Scalar] = field(default_factory=dict)
    jobs: int = 1
    output: str | None = None
    format: str = "text"
    cap: int | None = None
    from_file: str | None = None
    claims: list[str] = field(default_factory=list)
    symmetry: bool = True


def parse_substitutions(vs: VarSet, text: str | None) -> dict[str, Scalar]:
    """``"x1=0,z2=d-1"`` -> bindings; values are integers or polynomial text."""
    out: dict[str, Scalar] = {}
    if not text:
        return out
    for item in text.split(","):
        name, sep, value = item.partition("=")
        name, value = name.strip(), value.strip()
        if not sep or not name or not value:
            raise UsageError(f"bad substitution {item!r}; expected name=value")
        if name not in vs.index:
            raise UsageError(f"unknown variable {name!r}")
        try:
            out[name] = int(value)
        except ValueError:
            try:
                out[name] = parse(vs, value)
            except ValueError as exc:
                raise UsageError(f"bad value for {name}: {exc}") from exc
    return out


def _matrix_csv(rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _need_n(cfg: JobConfig) -> int:
    if cfg.n is None:
        raise UsageError(f"{cfg.command} needs --n")
    if cfg.n < 1:
        raise UsageError("--n must be at least 1")
    return cfg.n


def _load_gram(cfg: JobConfig) -> GramMatrix:
    if cfg.from_file:
        with open(cfg.from_file, encoding="utf-8") as fh:
            try:
                return GramMatrix.from_json(json.load(fh))
            except (KeyError, ValueError, TypeError) as exc:
                raise UsageError(f"cannot read Gram matrix from {cfg.from_file}: {exc}") from exc
    n = _need_n(cfg)
    return gram_matrix(n, cfg.k, cap=DEFAULT_CAP if cfg.cap is None else cfg.cap, jobs=cfg.jobs)


def _cmd_enum(cfg: JobConfig) -> tuple[str, int]:
    n = _need_n(cfg)
    check_cap(diagram_count(n, cfg.k), DEFAULT_CAP if cfg.cap is None else cfg.cap, "diagram list")
    ds = enumerate_diagrams(n, cfg.k)
    if cfg.format == "json":
        return _dump([b.to_json() for b in ds]), 0
    if cfg.format == "csv":
        rows = [["index", "matching", "holes"]]
        for i, b in enumerate(ds):
            j = b.to_json()
            rows.append([str(i), " ".join(map(str, j["matching"])), " ".join(map(str, j["holes"]))])
        return _matrix_csv(rows), 0
    lines = [f"{i}\t{list(b.matching)}\t{b.to_json()['holes']}" for i, b in enumerate(ds)]
    lines.append(f"# {len(ds)} diagrams")
    return "\n".join(lines) + "\n", 0


def _render_matrix(cfg: JobConfig, gm: GramMatrix, rows: list[list[str]]) -> str:
    if cfg.format == "json":
        data = gm.to_json()
        data["entries"] = rows
        if cfg.substitutions:
            data["substitutions"] = {k: _scalar_text(v) for k, v in sorted(cfg.substitutions.items())}
        return _dump(data)
    if cfg.format == "csv":
        if not cfg.substitutions:
            return gm.to_csv()
        return _matrix_csv(rows)
    return "\n".join("  ".join(row) for row in rows) + "\n"


def _scalar_text(v: Scalar) -> str:
    return v.to_string() if isinstance(v, Polynomial) else str(v)


def _cmd_gram(cfg: JobConfig) -> tuple[str, int]:
    gm = _load_gram(cfg)
    return _render_matrix(cfg, gm, gm.entry_strings()), 0


def _cmd_subst(cfg: JobConfig) -> tuple[str, int]:
    if not cfg.substitutions:
        raise UsageError("subst needs --subst")
    gm = _load_gram(cfg)
    rows = [[p.to_string() for p in row] for row in substitute_entries(gm, cfg.substitutions)]
    return _render_matrix(cfg, gm, rows), 0


def _cmd_det(cfg: JobConfig) -> tuple[str, int]:
    gm = _load_gram(cfg)
    check_cap(gm.dim, DEFAULT_DET_CAP if cfg.cap is None else cfg.cap, "determinant")
    res = det_gram(gm, cfg.engine, cfg.substitutions or None, cfg.symmetry)
    if cfg.format == "json":
        data = res.to_json()
        data.pop("elapsed_seconds", None)
        return _dump(data), 0
    return res.poly.to_string() + "\n", 0


def _cmd_blocks(cfg: JobConfig) -> tuple[str, int]:
    n = _need_n(cfg)
    vs = varset(cfg.k)
    out = []
    for state, ds, m in catalan_blocks(n, cfg.k):
        check_cap(len(ds), DEFAULT_DET_CAP if cfg.cap is None else cfg.cap, "block")
        p = det([[Polynomial.monomial(vs, e) for e in row] for row in m], cfg.engine, vs)
        if cfg.substitutions:
            p = p.substitute(cfg.substitutions)
        out.append({"catalan": list(state.matching), "dim": len(ds), "determinant": p.to_string()})
    if cfg.format == "json":
        return _dump(out), 0
    if cfg.format == "csv":
        return _matrix_csv([["catalan", "dim", "determinant"]] + [[" ".join(map(str, b["catalan"])), str(b["dim"]), b["determinant"]] for b in out]), 0
    return "".join(f"{b['catalan']} dim={b['dim']}\n  {b['determinant']}\n" for b in out), 0


def _cmd_delta(cfg: JobConfig) -> tuple[str, int]:
    n = _need_n(cfg)
    if cfg.k != 2:
        raise UsageError("delta is defined for k = 2")
    alpha, beta = delta_diag(n)
    if cfg.format == "json":
        return _dump({"n": n, "alpha": alpha, "beta": beta}), 0
    if cfg.format == "csv":
        return _matrix_csv([["n", "alpha", "beta"], [str(n), str(alpha), str(beta)]]), 0
    return f"delta({n}) = d^{alpha} z1^{beta}\n", 0


def _cmd_reduce(cfg: JobConfig) -> tuple[str, int]:
    n = _need_n(cfg)
    if cfg.k != 2:
        raise UsageError("reduce is defined for k = 2")
    red = embed_reduce(n)
    rows, power = red.cleared_matrix()
    data = {
        "n": n,
        "reduced_dim": len(red.reduced),
        "unit_power": red.m,
        "sign": red.sign,
        "row_clearing_powers": red.row_clearing_powers(),
        "clearing_power": power,
        "scalars": red.scalars,
        "reduced": [[e.to_string() for e in row] for row in red.reduced],
    }
    if cfg.format == "json":
        return _dump(data), 0
    if cfg.format == "csv":
        return _matrix_csv(data["reduced"]), 0
    head = [f"{k}: {data[k]}" for k in ("n", "reduced_dim", "unit_power", "sign", "row_clearing_powers", "clearing_power", "scalars")]
    body = ["  ".join(row) for row in data["reduced"]]
    return "\n".join(head + body) + "\n", 0


def _cmd_verify(cfg: JobConfig) -> tuple[str, int]:
    ids = cfg.claims or None
    if ids:
        unknown = [c for c in ids if c not in REGISTRY]
        if unknown:
            raise UsageError(f"unknown claim(s) {unknown}; known: {', '.join(sorted(REGISTRY))}")
    reports = run_claims(ids, cfg.n, jobs=cfg.jobs)
    status = 1 if any(r.verdict == "fail" for r in reports) else 0
    if cfg.format == "json":
        return _dump([r.to_json() for r in reports]), status
    if cfg.format == "csv":
        rows = [["claim", "verdict", "scope", "witness"]]
        rows += [[r.claim, r.verdict, json.dumps(r.scope, sort_keys=True), json.dumps(r.witness, sort_keys=True, default=str)] for r in reports]
        return _matrix_csv(rows), status
    text = summary_table(reports) + "\n"
    for r in reports:
        if r.verdict == "fail" or cfg.claims:
            text += f"{r.claim}: {json.dumps(r.witness, sort_keys=True, default=str)}\n"
    return text, status


HANDLERS = {
    "enum": _cmd_enum,
    "gram": _cmd_gram,
    "det": _cmd_det,
    "blocks": _cmd_blocks,
    "delta": _cmd_delta,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
    "subst": _cmd_subst,
}


def execute(cfg: JobConfig) -> tuple[str, int]:
    """Run one command and return ``(output text, exit status)``."""
    text, status = HANDLERS[cfg.command](cfg)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return "", status
    return text, status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gramholes", description="Gram determinants of diagrams in a disk with holes.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--subst", help="comma separated name=value, values are integers or polynomials")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $GRAMHOLES_JOBS or 1)")
    p.add_argument("--output", "-o")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--cap", type=int, help="dimension cap override")
    p.add_argument("--from-file", help="Gram matrix JSON as written by 'gram --format json'")
    p.add_argument("--claim", action="append", default=[], help="claim id for verify (repeatable)")
    p.add_argument("--no-symmetry", action="store_true", help="skip the rotation block split")
    return p


def config_from_args(argv: Sequence[str] | None = None) -> JobConfig:
    args = build_parser().parse_args(argv)
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    jobs = args.jobs
    if jobs is None:
        env = os.environ.get("GRAMHOLES_JOBS", "1")
        try:
            jobs = int(env)
        except ValueError as exc:
            raise UsageError(f"GRAMHOLES_JOBS is not an integer: {env!r}") from exc
    if jobs < 1:
        raise UsageError("worker count must be at least 1")
    if args.cap is not None and args.cap < 1:
        raise UsageError("--cap must be positive")
    return JobConfig(
        command=args.command,
        n=args.n,
        k=args.k,
        engine=args.engine,
        substitutions=parse_substitutions(varset(args.k), args.subst),
        jobs=jobs,
        output=args.output,
        format=args.format,
        cap=args.cap,
        from_file=args.from_file,
        claims=list(args.claim),
        symmetry=not args.no_symmetry,
    )


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = config_from_args(argv)
        text, status = execute(cfg)
    except SystemExit as exc:  # argparse
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"gramholes: error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"gramholes: refused: {exc} (raise --cap to override)", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"gramholes: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
