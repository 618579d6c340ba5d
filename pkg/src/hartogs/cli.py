"""Command-line driver: ``hartogs <subcommand> [options]``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for usage,
configuration or domain errors.  Output is CSV unless ``--format json`` is
given or ``--out`` ends in ``.json``; rows are ordered by ``check_id`` and
``runtime_ms`` is omitted (CSV) or null (JSON) unless ``--timing`` is set, so
repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import specfun, suites
from .errors import DomainError
from .kernel import PROJECTION_SPEC
from .quadrature import QuadratureSpec
from .report import VerificationReport, to_csv, to_json
from .schur import BoundsRow, bounds_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Settings read from ``--config`` (flat ``key = value`` lines) and flags.

    Keys: ``radial_nodes``, ``angular_nodes``, ``panels`` (projection
    quadrature), ``rel_tol`` (hypergeometric series), ``K`` (number of
    coefficients in the decomposition check), ``depth`` (boundary path
    depth when no flag is given), ``format``, ``out``, ``timing`` and
    ``tol.<check_id>`` tolerance overrides.
    """

    spec: QuadratureSpec = PROJECTION_SPEC
    rel_tol: float = specfun.DEFAULT_CONTROL.rel_tol
    K: int = 51
    depth: int | None = None
    tolerances: dict[str, float] = field(default_factory=dict)
    format: str | None = None
    out: str | None = None
    timing: bool = False

    def validate(self) -> None:
        if not 0 < self.rel_tol < 1:
            raise UsageError("rel_tol must lie in (0, 1)")
        if not 1 <= self.K <= 4096:
            raise UsageError("K must lie in [1, 4096]")
        if self.depth is not None and not 1 <= self.depth <= 30:
            raise UsageError("depth must lie in [1, 30]")
        if self.format not in (None, "csv", "json"):
            raise UsageError("format must be csv or json")
        if min(self.spec.radial_nodes, self.spec.angular_nodes, self.spec.panels) < 1:
            raise UsageError("quadrature sizes must be positive")
        for k, v in self.tolerances.items():
            if not v >= 0:
                raise UsageError(f"tolerance for {k} must be nonnegative")


_INT_KEYS = ("radial_nodes", "angular_nodes", "panels", "K", "depth")


def read_config(path: str | Path) -> RunConfig:
    cfg = RunConfig()
    spec_fields: dict[str, int] = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key in ("radial_nodes", "angular_nodes", "panels"):
                spec_fields[key] = int(value)
            elif key in _INT_KEYS:
                setattr(cfg, key, int(value))
            elif key == "rel_tol":
                cfg.rel_tol = float(value)
            elif key.startswith("tol."):
                cfg.tolerances[key[4:]] = float(value)
            elif key in ("format", "out"):
                setattr(cfg, key, value)
            elif key == "timing":
                cfg.timing = value.lower() in ("1", "true", "yes", "on")
            else:
                raise UsageError(f"{path}:{n}: unknown key {key!r}")
        except ValueError as exc:
            raise UsageError(f"{path}:{n}: bad value for {key}: {value!r}") from exc
    if spec_fields:
        cfg.spec = dataclasses.replace(cfg.spec, **spec_fields)
    return cfg


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="flat key = value settings file; flags override it")
    common.add_argument("--format", choices=("csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS, help="include runtime_ms")

    ap = argparse.ArgumentParser(
        prog="hartogs",
        description="Numerical checks for L^p bounds of the Bergman projection on the Hartogs triangle.",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("identities", parents=[common], help="gamma and 2F1 identity corpus")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("lemma", parents=[common], help="per-lemma suites")
    s.add_argument("--id", dest="lemma_id", required=True, choices=suites.LEMMA_IDS)
    for name in ("a", "r2", "c", "t", "p"):
        s.add_argument(f"--{name}", type=float)
    s.add_argument("--depth", type=int)

    s = sub.add_parser("bounds", parents=[common], help="lower/upper bound table")
    s.add_argument("--p", type=float)
    s.add_argument("--pmin", type=float)
    s.add_argument("--pmax", type=float)
    s.add_argument("--steps", type=int)

    s = sub.add_parser("lower-estimate", parents=[common], help="norm ratio of P f_xi along the boundary path")
    s.add_argument("--p", type=float, default=3.0)
    s.add_argument("--depth", type=int)

    s = sub.add_parser("remainder", parents=[common], help="remainder-term ratios")
    s.add_argument("--p", type=float, default=3.0)
    s.add_argument("--depth", type=int)
    s.add_argument("--no-trend", action="store_true", help="only the terms at --depth")

    s = sub.add_parser("project", parents=[common], help="reproducing property of the numeric projection")
    s.add_argument("--j", type=int)
    s.add_argument("--k", type=int)

    s = sub.add_parser("report", parents=[common], help="run a suite and write every report")
    s.add_argument("--all", action="store_true", help="include the boundary-path and 4-D checks")
    return ap


def _bounds_grid(ns: argparse.Namespace) -> list[float]:
    if ns.p is not None:
        if any(v is not None for v in (ns.pmin, ns.pmax, ns.steps)):
            raise UsageError("use either --p or --pmin/--pmax/--steps")
        return [ns.p]
    if ns.pmin is None or ns.pmax is None:
        raise UsageError("bounds needs --p or --pmin and --pmax")
    steps = 10 if ns.steps is None else ns.steps
    if steps < 1 or ns.pmax < ns.pmin:
        raise UsageError("need steps >= 1 and pmax >= pmin")
    if steps == 1:
        return [ns.pmin]
    h = (ns.pmax - ns.pmin) / (steps - 1)
    return [ns.pmin + i * h for i in range(steps)]


def _num(x: float) -> str:
    x = float(x)
    if math.isinf(x):
        return "inf"
    return str(int(x)) if x.is_integer() else repr(x)


def bounds_csv(rows: Sequence[BoundsRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check_id", "p", "q", "lower", "upper", "note"])
    for r in rows:
        w.writerow([f"bounds.p{r.p:g}", _num(r.p), _num(r.q), _num(r.lower), _num(r.upper), r.note])
    return buf.getvalue()


def bounds_json(rows: Sequence[BoundsRow]) -> str:
    out = []
    for r in rows:
        unbounded = math.isinf(r.upper)
        out.append({
            "check_id": f"bounds.p{r.p:g}",
            "p": r.p,
            "q": r.q,
            "lower": r.lower,
            "upper": None if unbounded else r.upper,
            "unbounded": unbounded,
            "note": r.note,
        })
    return json.dumps(out, indent=2, sort_keys=True) + "\n"


def _apply_overrides(reports: list[VerificationReport], tolerances: dict[str, float]) -> list[VerificationReport]:
    """Re-judge reports with a reference value against overridden tolerances."""
    out = []
    for r in reports:
        if r.check_id in tolerances and r.reference is not None:
            r = dataclasses.replace(r, tolerance=tolerances[r.check_id], passed=None)
        out.append(r)
    return out


def _emit(text: str, cfg: RunConfig, summary: Sequence[str] = ()) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
        for line in summary:
            print(line)
    else:
        sys.stdout.write(text)


def _run_checks(ns: argparse.Namespace, cfg: RunConfig) -> list[VerificationReport]:
    depth = getattr(ns, "depth", None) or cfg.depth
    cmd = ns.command
    if cmd == "identities":
        return suites.identities(seed=ns.seed)
    if cmd == "lemma":
        return suites.lemma(ns.lemma_id, a=ns.a, r2=ns.r2, c=ns.c, t=ns.t, p=ns.p, depth=depth, K=cfg.K)
    if cmd == "lower-estimate":
        return suites.lower_estimate(ns.p, depth)
    if cmd == "remainder":
        return suites.remainder(ns.p, depth, trend=not ns.no_trend)
    if cmd == "project":
        return suites.projection(ns.j, ns.k, cfg.spec)
    if cmd == "report":
        if ns.all:
            return suites.full(cfg.spec, depth, cfg.K)
        return suites.quick(cfg.spec, cfg.K)
    raise UsageError(f"unknown command {cmd}")


def _resolve_config(ns: argparse.Namespace) -> RunConfig:
    cfg = read_config(ns.config) if getattr(ns, "config", None) else RunConfig()
    for key in ("format", "out", "timing"):
        if hasattr(ns, key):
            setattr(cfg, key, getattr(ns, key))
    if cfg.format is None:
        cfg.format = "json" if cfg.out and cfg.out.lower().endswith(".json") else "csv"
    cfg.validate()
    return cfg


def run(argv: Sequence[str] | None = None) -> int:
    try:
        ns = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        cfg = _resolve_config(ns)
        old_control = specfun.DEFAULT_CONTROL
        specfun.DEFAULT_CONTROL = dataclasses.replace(old_control, rel_tol=cfg.rel_tol)
        try:
            if ns.command == "bounds":
                rows = bounds_table(_bounds_grid(ns))
                text = bounds_json(rows) if cfg.format == "json" else bounds_csv(rows)
                _emit(text, cfg)
                return EXIT_OK
            reports = _apply_overrides(_run_checks(ns, cfg), cfg.tolerances)
        finally:
            specfun.DEFAULT_CONTROL = old_control
    except (UsageError, DomainError, ValueError) as exc:
        print(f"hartogs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = to_json(reports, cfg.timing) if cfg.format == "json" else to_csv(reports, cfg.timing)
    _emit(text, cfg, [r.line() for r in sorted(reports, key=lambda r: r.check_id)])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
