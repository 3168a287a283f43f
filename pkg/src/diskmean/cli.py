"""Command-line front end.

Usage sketch (see README for more):

    diskmean check --class M ex31:n=1
    diskmean check --class M phi:1,0,2
    diskmean mean ex31:n=1 ex31:n=2 --class M
    diskmean table1 --to 14 --format csv
    diskmean table1 --extend 16
    diskmean starlike ex34:n=1
    diskmean radius phi:1,0,2 --class M
    diskmean boundary ex32:order=4096 --svg -o curve.svg

Function sources: ``identity``, ``koebe``, ``ex31:n=K``, ``ex32``,
``ex33:n=K,b=X,beta=Y``, ``ex34:n=K`` (families take an optional
``order=N`` key), or ``phi:c0,c1,...`` giving the coefficients of the
z/f series from the constant term up; the constant must be 1.  Complex
literals are written ``a+bi``.

Exit codes: 0 success/member, 1 parse or evaluation error, 2 numeric
membership failure, 3 vanishing harmonic-mean denominator.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace

from .classes import (
    DEFAULT_GRID,
    DEFAULT_RADII,
    check_membership,
    class_radius,
    starlike_scan,
)
from .errors import DenominatorVanishes, DiskMeanError
from .families import FamilySpec, FamilyVariant, build, extend_table1, table1
from .functionals import (
    FunctionalKind,
    NormalizedFunction,
    identity_function,
    koebe_function,
)
from .means import harmonic_mean, verify_closure
from .series import DEFAULT_ORDER, ComplexSeries
from .families import boundary_image


class SourceError(DiskMeanError):
    """A function-source string does not parse."""


@dataclass(frozen=True)
class RunConfig:
    """Run-wide defaults; flags and DISKMEAN_* env vars override."""

    order: int = DEFAULT_ORDER
    radii: tuple[float, ...] = DEFAULT_RADII
    grid: int = DEFAULT_GRID
    tol: float = 1e-5
    output_format: str = "json"
    seed: int = 0

    def validate(self) -> None:
        if self.order < 8:
            raise ValueError("order must be >= 8")
        if not self.radii or any(not 0.0 < r < 1.0 for r in self.radii):
            raise ValueError("radii must lie in (0, 1)")
        if self.grid < 16:
            raise ValueError("grid must be >= 16")
        if self.tol <= 0:
            raise ValueError("tol must be > 0")

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "radii": list(self.radii),
            "grid": self.grid,
            "tol": self.tol,
            "output_format": self.output_format,
            "seed": self.seed,
        }


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------

def _parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace("i", "j"))
    except ValueError as exc:
        raise SourceError(f"bad complex literal {text!r}") from exc


def _parse_kv(body: str, allowed: set[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    if not body:
        return out
    for item in body.split(","):
        if "=" not in item:
            raise SourceError(f"expected key=value, got {item!r}")
        key, val = item.split("=", 1)
        key = key.strip()
        if key not in allowed:
            raise SourceError(f"unknown key {key!r} (allowed: {sorted(allowed)})")
        out[key] = val.strip()
    return out


def parse_source(text: str, config: RunConfig,
                 order_explicit: bool = False) -> NormalizedFunction:
    """Resolve a function-source string to a NormalizedFunction.

    Families use their own default truncation unless the source carries an
    ``order=`` key or the user set --order / DISKMEAN_ORDER explicitly.
    """
    text = text.strip()
    head, _, body = text.partition(":")
    head = head.lower()

    if head == "identity":
        return identity_function()
    if head == "koebe":
        return koebe_function(config.order)
    if head == "phi":
        if not body:
            raise SourceError("phi: needs a coefficient list")
        coeffs = [_parse_complex(tok) for tok in body.split(",")]
        if abs(coeffs[0] - 1.0) > 1e-12:
            raise SourceError("phi coefficients must start with the constant 1")
        return NormalizedFunction(ComplexSeries(coeffs), text)

    variants = {v.value: v for v in FamilyVariant}
    if head in variants:
        allowed = {"n", "order"} if head != "ex33" else {"n", "b", "beta", "order"}
        kv = _parse_kv(body, allowed)
        try:
            n = int(kv.get("n", "1"))
            b = float(kv.get("b", "0"))
            beta = float(kv.get("beta", "0"))
            order = int(kv["order"]) if "order" in kv else (
                config.order if order_explicit else None)
        except ValueError as exc:
            raise SourceError(f"bad family parameter in {text!r}") from exc
        return build(FamilySpec(variants[head], n=n, b=b, beta=beta, order=order))

    raise SourceError(f"unrecognized function source {text!r}")


def _parse_kind(name: str) -> FunctionalKind:
    try:
        return FunctionalKind[name.upper()]
    except KeyError as exc:
        raise SourceError(f"unknown class {name!r} (one of U, P, M, N)") from exc


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------

def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def table_csv(rows) -> str:
    lines = ["n,theta,A_theta"]
    for n, theta, value in rows:
        lines.append(f"{n},{theta:.12g},{value!r}")
    return "\n".join(lines) + "\n"


def boundary_csv(r: float, points) -> str:
    grid = len(points) - 1
    lines = ["theta,re,im"]
    for j, w in enumerate(points):
        theta = 2.0 * 3.141592653589793 * j / grid
        lines.append(f"{theta:.12g},{float(w.real)!r},{float(w.imag)!r}")
    return "\n".join(lines) + "\n"


def boundary_svg(points) -> str:
    """Minimal SVG document: one path tracing the curve, 5% margin."""
    xs = [w.real for w in points]
    ys = [w.imag for w in points]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1e-9)
    view = (x0 - pad, y0 - pad, (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    steps = " ".join(f"L {x:.6g} {y:.6g}" for x, y in zip(xs[1:], ys[1:]))
    d = f"M {xs[0]:.6g} {ys[0]:.6g} {steps}"
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{view[0]:.6g} {view[1]:.6g} {view[2]:.6g} {view[3]:.6g}">\n'
        f'  <path d="{d}" fill="none" stroke="black" '
        'stroke-width="0.5%" vector-effect="non-scaling-stroke"/>\n'
        "</svg>\n"
    )


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check(args, config: RunConfig) -> int:
    fn = parse_source(args.source, config, _opt(args, "order") is not None)
    kind = _parse_kind(args.klass)
    report = check_membership(kind, fn, config.radii, config.grid)
    _emit(_json_dump(report.to_dict()), args.output)
    return 0 if report.is_member else 2


def cmd_mean(args, config: RunConfig) -> int:
    f = parse_source(args.f_source, config, _opt(args, "order") is not None)
    g = parse_source(args.g_source, config, _opt(args, "order") is not None)
    kind = _parse_kind(args.klass)
    try:
        result = harmonic_mean(f, g)
        residual = verify_closure(kind, f, g, samples=500, seed=config.seed)
    except DenominatorVanishes as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    membership = check_membership(kind, result.mean, config.radii, config.grid)
    payload = result.to_dict()
    payload["averaging_residual"] = residual
    payload["membership"] = membership.to_dict()
    _emit(_json_dump(payload), args.output)
    return 0 if membership.is_member else 2


def cmd_table1(args, config: RunConfig) -> int:
    rows = table1(args.n_from, args.n_to)
    if args.extend and args.extend > args.n_to:
        rows += extend_table1(args.n_to + 1, args.extend)
    if args.format == "json":
        payload = [{"n": n, "theta": t, "A_theta": v} for n, t, v in rows]
        _emit(_json_dump(payload), args.output)
    else:
        _emit(table_csv(rows), args.output)
    return 0


def cmd_starlike(args, config: RunConfig) -> int:
    fn = parse_source(args.source, config, _opt(args, "order") is not None)
    report = starlike_scan(fn, config.radii if args.all_radii else (max(config.radii),),
                           grid=_opt(args, "grid") or 8192)
    _emit(_json_dump(report.to_dict()), args.output)
    return 0


def cmd_radius(args, config: RunConfig) -> int:
    fn = parse_source(args.source, config, _opt(args, "order") is not None)
    kind = _parse_kind(args.klass)
    value = class_radius(kind, fn, tol=config.tol, grid=config.grid)
    _emit(_json_dump({"kind": kind.value, "class_radius": value}), args.output)
    return 0


def cmd_boundary(args, config: RunConfig) -> int:
    fn = parse_source(args.source, config, _opt(args, "order") is not None)
    points = boundary_image(fn, args.radius, _opt(args, "grid") or 2048)
    if args.svg or args.format == "svg":
        _emit(boundary_svg(points), args.output)
    else:
        _emit(boundary_csv(args.radius, points), args.output)
    return 0


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for numeric membership failures, so argument
    # errors must exit 1 instead of argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    # SUPPRESS keeps options given before the subcommand from being
    # clobbered by the subparser's defaults
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--order", type=int,
                        help="series truncation order (default 128)")
    common.add_argument("--grid", type=int,
                        help="boundary grid size (default 4096)")
    common.add_argument("--radii", type=str,
                        help="comma-separated scan radii (default 0.9,0.99,0.999)")
    common.add_argument("--tol", type=float,
                        help="radius-search tolerance (default 1e-5)")
    common.add_argument("--seed", type=int,
                        help="seed for randomized checks (default 0)")
    common.add_argument("--show-config", action="store_true",
                        help="print the effective configuration and exit")

    p = _Parser(prog="diskmean", description=__doc__, parents=[common],
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def add_output(sp):
        sp.add_argument("-o", "--output", default=None,
                        help="write to this file instead of stdout")

    sp = add_parser("check", help="class membership of one function")
    sp.add_argument("--class", dest="klass", required=True, help="U, P, M or N")
    sp.add_argument("source")
    add_output(sp)
    sp.set_defaults(func=cmd_check)

    sp = add_parser("mean", help="harmonic mean, averaging residual, membership")
    sp.add_argument("f_source")
    sp.add_argument("g_source")
    sp.add_argument("--class", dest="klass", required=True, help="U, P, M or N")
    add_output(sp)
    sp.set_defaults(func=cmd_mean)

    sp = add_parser("table1", help="reference A(theta_n) table for ex34")
    sp.add_argument("--from", dest="n_from", type=int, default=1)
    sp.add_argument("--to", dest="n_to", type=int, default=14)
    sp.add_argument("--extend", type=int, default=None,
                    help="append golden-section rows up to this n")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    add_output(sp)
    sp.set_defaults(func=cmd_table1)

    sp = add_parser("starlike", help="min Re(zf'/f) scan")
    sp.add_argument("source")
    sp.add_argument("--all-radii", action="store_true",
                    help="scan the whole radius ladder, not just the largest")
    add_output(sp)
    sp.set_defaults(func=cmd_starlike)

    sp = add_parser("radius", help="largest radius of class membership")
    sp.add_argument("source")
    sp.add_argument("--class", dest="klass", required=True, help="U, P, M or N")
    add_output(sp)
    sp.set_defaults(func=cmd_radius)

    sp = add_parser("boundary", help="image of a circle under f")
    sp.add_argument("source")
    sp.add_argument("-r", "--radius", type=float, default=0.999)
    sp.add_argument("--svg", action="store_true", help="emit SVG instead of CSV")
    sp.add_argument("--format", choices=("csv", "svg"), default="csv")
    add_output(sp)
    sp.set_defaults(func=cmd_boundary)

    return p


def _config_from(args) -> RunConfig:
    cfg = RunConfig()
    env_order = os.environ.get("DISKMEAN_ORDER")
    env_grid = os.environ.get("DISKMEAN_GRID")
    env_radii = os.environ.get("DISKMEAN_RADII")
    if env_order:
        cfg = replace(cfg, order=int(env_order))
    if env_grid:
        cfg = replace(cfg, grid=int(env_grid))
    if env_radii:
        cfg = replace(cfg, radii=tuple(float(x) for x in env_radii.split(",")))
    if _opt(args, "order") is not None:
        cfg = replace(cfg, order=args.order)
    if _opt(args, "grid") is not None:
        cfg = replace(cfg, grid=args.grid)
    if _opt(args, "radii") is not None:
        cfg = replace(cfg, radii=tuple(float(x) for x in args.radii.split(",")))
    if _opt(args, "tol") is not None:
        cfg = replace(cfg, tol=args.tol)
    if _opt(args, "seed") is not None:
        cfg = replace(cfg, seed=args.seed)
    cfg.validate()
    return cfg


def _opt(args, name):
    return getattr(args, name, None)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if getattr(args, "show_config", False):
        sys.stdout.write(_json_dump(config.to_dict()))
        return 0
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args, config)
    except (DiskMeanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
