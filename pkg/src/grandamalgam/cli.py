"""Command-line front end: validated run configurations and report emission.

Every run is described by a :class:`RunConfig` (subcommand, input function,
parameter map, output directory, seed), whether it was assembled from flags
or parsed from a line-oriented ``key = value`` config file.  Validation
happens before any computation; outputs are CSV/JSON files written with
fixed 17-significant-digit formatting, so identical configurations produce
byte-identical artifacts.  Exit codes: 0 success, 1 any FAIL verdict,
2 configuration error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .amalgam import (
    AmalgamSpec,
    ClassicalSpace,
    ControlFunction,
    GrandSpace,
    WindowSpec,
    amalgam_norm,
    control_function,
    write_control_csv,
)
from .gridfn import BoxDomain, GridFunction, build, read_grid_csv, weight_from
from .maximal import RadiusSet, maximal_fast, maximal_naive, maximal_tail_profile, write_maximal_csv
from .norms import EpsGrid, GrandParams, NormReport, Variant, grand_norm, weighted_lp_norm, write_norm_csv
from .reporting import CheckResult, write_check_csv, write_check_json, write_csv, write_json
from . import verify as verify_mod

__all__ = [
    "ConfigError",
    "RunConfig",
    "parse_config",
    "emit_config",
    "emit_plotdata",
    "run",
    "main",
]

SUBCOMMANDS = ("norm", "grand", "amalgam", "maximal", "verify")

_KNOWN_PARAMS = {
    "norm": {"p", "w", "box", "cells"},
    "grand": {"p", "theta", "variant", "a", "eps_mode", "eps_count", "eps_min", "box", "cells"},
    "amalgam": {
        "p",
        "q",
        "theta",
        "a",
        "b",
        "local",
        "global",
        "window_side",
        "window_stride",
        "box",
        "cells",
    },
    "maximal": {"radii", "probe", "include_center", "impl", "box", "cells"},
    "verify": {"checks", "cells"},
}

_DEFAULT_PARAMS = {
    "norm": {"p": "2", "w": "const:1", "box": "0,1", "cells": "64"},
    "grand": {
        "p": "2",
        "theta": "1",
        "variant": "over_p",
        "a": "const:1",
        "eps_mode": "geometric",
        "eps_count": "33",
        "eps_min": "",
        "box": "0,1",
        "cells": "64",
    },
    "amalgam": {
        "p": "2",
        "q": "2",
        "theta": "1",
        "a": "const:1",
        "b": "const:1",
        "local": "grand",
        "global": "grand",
        "window_side": "4",
        "window_stride": "4",
        "box": "0,1",
        "cells": "64",
    },
    "maximal": {
        "radii": "full",
        "probe": "",
        "include_center": "true",
        "impl": "fast",
        "box": "-8,8",
        "cells": "1024",
    },
    "verify": {"checks": "all", "cells": "256"},
}


class ConfigError(Exception):
    """Invalid configuration; the message names the offending key or line."""


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input: str = ""
    parameters: dict = field(default_factory=dict)
    output_dir: str = "out"
    seed: int = 0


# ----------------------------------------------------------------------------
# Config file format:  key = value, one per line, '#' comments;
# computation parameters under 'param.<name>'.
# ----------------------------------------------------------------------------


def parse_config(text: str) -> RunConfig:
    top: dict[str, str] = {}
    params: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key.startswith("param."):
            name = key[len("param.") :]
            if name in params:
                raise ConfigError(f"line {lineno}: duplicate key param.{name}")
            params[name] = value
        elif key in ("subcommand", "input", "output_dir", "seed"):
            if key in top:
                raise ConfigError(f"line {lineno}: duplicate key {key}")
            top[key] = value
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    missing = [k for k in ("subcommand",) if k not in top]
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}")
    try:
        seed = int(top.get("seed", "0"))
    except ValueError:
        raise ConfigError(f"seed: expected an integer, got {top.get('seed')!r}")
    config = RunConfig(
        subcommand=top["subcommand"],
        input=top.get("input", ""),
        parameters=params,
        output_dir=top.get("output_dir", "out"),
        seed=seed,
    )
    return validate_config(config)


def emit_config(config: RunConfig) -> str:
    lines = [
        f"subcommand = {config.subcommand}",
        f"input = {config.input}",
        f"output_dir = {config.output_dir}",
        f"seed = {config.seed}",
    ]
    for key in sorted(config.parameters):
        lines.append(f"param.{key} = {config.parameters[key]}")
    return "\n".join(lines) + "\n"


def _parse_floats(text: str, key: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ConfigError(f"param.{key}: expected comma-separated numbers, got {text!r}")


def _parse_box(params: dict) -> tuple[tuple[float, ...], tuple[float, ...]]:
    vals = _parse_floats(params["box"], "box")
    if len(vals) == 2:
        lo, up = (vals[0],), (vals[1],)
    elif len(vals) == 4:
        lo, up = (vals[0], vals[2]), (vals[1], vals[3])
    else:
        raise ConfigError("param.box: expected 'lo,up' or 'lo0,up0,lo1,up1'")
    for a, b in zip(lo, up):
        if not b > a:
            raise ConfigError(f"param.box: need lower < upper, got [{a}, {b}]")
    return lo, up


def _parse_cells(params: dict, ndim: int) -> tuple[int, ...]:
    vals = params["cells"].split(",")
    try:
        cells = tuple(int(v) for v in vals)
    except ValueError:
        raise ConfigError(f"param.cells: expected integers, got {params['cells']!r}")
    if len(cells) == 1:
        cells = cells * ndim
    if len(cells) != ndim:
        raise ConfigError("param.cells: one count, or one per axis")
    if any(c < 2 for c in cells):
        raise ConfigError("param.cells: need at least 2 cells per axis")
    return cells


def validate_config(config: RunConfig) -> RunConfig:
    """Fill defaults and check every invariant before any computation."""
    if config.subcommand not in SUBCOMMANDS:
        raise ConfigError(
            f"subcommand: expected one of {', '.join(SUBCOMMANDS)}, got {config.subcommand!r}"
        )
    known = _KNOWN_PARAMS[config.subcommand]
    for key in config.parameters:
        if key not in known:
            raise ConfigError(f"param.{key}: unknown key for subcommand {config.subcommand}")
    params = dict(_DEFAULT_PARAMS[config.subcommand])
    params.update(config.parameters)
    config = replace(config, parameters=params)

    if config.subcommand != "verify":
        if not config.input:
            raise ConfigError("input: required (a built-in sampler spec or a grid CSV path)")
        lo, up = _parse_box(params)
        _parse_cells(params, len(lo))

    def need_positive(key: str, strict_gt: float | None = None):
        try:
            v = float(params[key])
        except ValueError:
            raise ConfigError(f"param.{key}: expected a number, got {params[key]!r}")
        if strict_gt is not None and not v > strict_gt:
            raise ConfigError(f"param.{key}: invariant {key} > {strict_gt} violated by {v}")
        return v

    sub = config.subcommand
    if sub == "norm":
        need_positive("p", strict_gt=0.0)
        if float(params["p"]) < 1.0:
            raise ConfigError("param.p: invariant p >= 1 violated")
    elif sub == "grand":
        need_positive("p", strict_gt=1.0)
        need_positive("theta", strict_gt=0.0)
        if params["variant"] not in ("over_p", "full"):
            raise ConfigError("param.variant: expected 'over_p' or 'full'")
        if params["eps_mode"] not in ("geometric", "linear"):
            raise ConfigError("param.eps_mode: expected 'geometric' or 'linear'")
        if int(params["eps_count"]) < 2:
            raise ConfigError("param.eps_count: need at least 2")
    elif sub == "amalgam":
        for key, kind in (("p", params["local"]), ("q", params["global"])):
            if kind == "grand":
                need_positive(key, strict_gt=1.0)
            else:
                if need_positive(key, strict_gt=0.0) < 1.0:
                    raise ConfigError(f"param.{key}: invariant {key} >= 1 violated")
        for kind_key in ("local", "global"):
            if params[kind_key] not in ("classical", "grand"):
                raise ConfigError(f"param.{kind_key}: expected 'classical' or 'grand'")
        need_positive("theta", strict_gt=0.0)
        if int(params["window_side"]) < 1 or int(params["window_stride"]) < 1:
            raise ConfigError("param.window_side/window_stride: need at least one cell")
    elif sub == "maximal":
        if params["impl"] not in ("fast", "naive"):
            raise ConfigError("param.impl: expected 'fast' or 'naive'")
        if params["radii"] not in ("full", "dyadic"):
            for tok in params["radii"].split(","):
                try:
                    if int(tok) < 1:
                        raise ValueError
                except ValueError:
                    raise ConfigError("param.radii: 'full', 'dyadic', or positive integers")
        if params["include_center"] not in ("true", "false"):
            raise ConfigError("param.include_center: expected 'true' or 'false'")
        if params["probe"]:
            lo, up = _parse_box(params)
            for x in _parse_floats(params["probe"], "probe"):
                if not lo[0] <= x <= up[0]:
                    raise ConfigError(f"param.probe: point {x} outside the box")
    elif sub == "verify":
        if int(params["cells"]) < 16:
            raise ConfigError("param.cells: verify needs at least 16 cells")
        if params["checks"] != "all":
            unknown = [
                n.strip()
                for n in params["checks"].split(",")
                if n.strip() not in verify_mod.CHECK_NAMES
            ]
            if unknown:
                raise ConfigError(f"param.checks: unknown check(s) {', '.join(unknown)}")
    return config


# ----------------------------------------------------------------------------
# Built-in samplers, addressable by name so runs are reproducible from config
# ----------------------------------------------------------------------------


def make_sampler(spec: str, ndim: int):
    """const:c | indicator:lo,hi[,lo1,hi1] | gaussian:c..,sigma | ramp:a,b | bump:c..,w"""
    if ":" in spec:
        name, argtext = spec.split(":", 1)
        args = _parse_floats(argtext, "sampler")
    else:
        name, args = spec, []
    if name == "const":
        c = args[0] if args else 1.0
        return lambda *xs: c + 0.0 * np.asarray(xs[0], dtype=float)
    if name == "indicator":
        if len(args) != 2 * ndim:
            raise ConfigError(f"indicator sampler needs {2 * ndim} bounds")
        lo, hi = args[0::2], args[1::2]

        def ind(*xs):
            m = np.ones_like(np.asarray(xs[0], dtype=float), dtype=bool)
            for d in range(ndim):
                x = np.asarray(xs[d], dtype=float)
                m &= (x >= lo[d]) & (x <= hi[d])
            return m.astype(float)

        return ind
    if name == "gaussian":
        if len(args) != ndim + 1:
            raise ConfigError(f"gaussian sampler needs {ndim} center(s) and a sigma")
        c, s = args[:ndim], args[-1]
        if s <= 0:
            raise ConfigError("gaussian sampler: sigma must be positive")
        return lambda *xs: np.exp(
            -sum((np.asarray(xs[d], dtype=float) - c[d]) ** 2 for d in range(ndim)) / (2 * s * s)
        )
    if name == "ramp":
        if ndim != 1 or len(args) != 2 or args[1] <= args[0]:
            raise ConfigError("ramp sampler: 1-D only, needs a < b")
        a, bnd = args

        def ramp(x):
            x = np.asarray(x, dtype=float)
            return np.where((x >= a) & (x <= bnd), (x - a) / (bnd - a), 0.0)

        return ramp
    if name == "bump":
        if len(args) != ndim + 1:
            raise ConfigError(f"bump sampler needs {ndim} center(s) and a width")
        c, w = args[:ndim], args[-1]
        if w <= 0:
            raise ConfigError("bump sampler: width must be positive")

        def bump(*xs):
            u2 = sum(((np.asarray(xs[d], dtype=float) - c[d]) / w) ** 2 for d in range(ndim))
            inside = u2 < 1.0
            denom = np.where(inside, 1.0 - u2, 1.0)
            return np.where(inside, np.exp(1.0 - 1.0 / denom), 0.0)

        return bump
    raise ConfigError(f"unknown sampler {spec!r}")


def _load_input(config: RunConfig, domain: BoxDomain) -> GridFunction:
    text = config.input
    if Path(text).suffix == ".csv" and Path(text).exists():
        return read_grid_csv(text)
    return build(domain, make_sampler(text, domain.ndim))


def _domain_from(params: dict) -> BoxDomain:
    lo, up = _parse_box(params)
    cells = _parse_cells(params, len(lo))
    return BoxDomain(lo, up, cells)


def _weight_from_spec(spec: str, domain: BoxDomain):
    return weight_from(domain, make_sampler(spec, domain.ndim))


# ----------------------------------------------------------------------------
# Subcommand execution
# ----------------------------------------------------------------------------


def emit_plotdata(obj, outdir, stem: str) -> Path:
    """Write the plot-ready CSV for a report object; returns the file path.

    Norm reports give (eps, inner_norm, weighted_term) rows, control
    functions (x, control_value), growth-style check results (T, log_T,
    norm), and other check results their per-case table.  An empty curve
    produces a header-only file.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / f"{stem}.csv"
    if isinstance(obj, NormReport):
        write_norm_csv(obj, path)
    elif isinstance(obj, ControlFunction):
        write_control_csv(obj, path)
    elif isinstance(obj, CheckResult):
        if obj.details and "T" in obj.details[0]:
            rows = [(row["T"], row["log_T"], row["norm"]) for row in obj.details]
            write_csv(path, ["T", "log_T", "norm"], rows)
        else:
            write_check_csv(obj, path)
    else:
        raise TypeError(f"no plot data emitter for {type(obj).__name__}")
    return path


def _run_norm(config: RunConfig, outdir: Path) -> int:
    params = config.parameters
    domain = _domain_from(params)
    f = _load_input(config, domain)
    w = _weight_from_spec(params["w"], f.domain)
    value = weighted_lp_norm(f, float(params["p"]), w)
    write_json(outdir / "norm_summary.json", {"value": value, "p": float(params["p"])})
    return 0


def _grand_params_from(params: dict, domain: BoxDomain) -> GrandParams:
    p = float(params["p"])
    grid_factory = EpsGrid.geometric if params["eps_mode"] == "geometric" else EpsGrid.linear
    min_eps = float(params["eps_min"]) if params.get("eps_min") else None
    grid = grid_factory(p, count=int(params["eps_count"]), min_eps=min_eps)
    return GrandParams(
        p=p,
        grandizer=_weight_from_spec(params["a"], domain),
        theta=float(params["theta"]),
        variant=Variant.EXPONENT_OVER_P if params["variant"] == "over_p" else Variant.EXPONENT_FULL,
        eps_grid=grid,
    )


def _run_grand(config: RunConfig, outdir: Path) -> int:
    params = config.parameters
    domain = _domain_from(params)
    f = _load_input(config, domain)
    report = grand_norm(f, _grand_params_from(params, f.domain))
    emit_plotdata(report, outdir, "grand_curve")
    write_json(outdir / "grand_summary.json", report.summary())
    return 0


def _run_amalgam(config: RunConfig, outdir: Path) -> int:
    params = config.parameters
    domain = _domain_from(params)
    f = _load_input(config, domain)
    window = WindowSpec(int(params["window_side"]), int(params["window_stride"]))

    def space(kind: str, exponent_key: str, weight_key: str):
        if kind == "grand":
            gp = dict(params)
            gp["p"] = params[exponent_key]
            gp["a"] = params[weight_key]
            gp.setdefault("eps_mode", "geometric")
            gp.setdefault("eps_count", "33")
            gp.setdefault("eps_min", "")
            gp.setdefault("variant", "over_p")
            return GrandSpace(_grand_params_from(gp, f.domain))
        return ClassicalSpace(
            float(params[exponent_key]), _weight_from_spec(params[weight_key], f.domain)
        )

    spec = AmalgamSpec(
        local_space=space(params["local"], "p", "a"),
        global_space=space(params["global"], "q", "b"),
        window=window,
    )
    cf = control_function(f, spec.local_space, spec.window)
    emit_plotdata(cf, outdir, "control")
    report = amalgam_norm(f, spec)
    emit_plotdata(report, outdir, "outer_curve")
    summary = report.summary()
    summary.update({"local": params["local"], "global": params["global"], "q": float(params["q"])})
    write_json(outdir / "amalgam_summary.json", summary)
    return 0


def _run_maximal(config: RunConfig, outdir: Path) -> int:
    params = config.parameters
    domain = _domain_from(params)
    f = _load_input(config, domain)
    include_center = params["include_center"] == "true"
    if params["radii"] == "full":
        rs = RadiusSet.full(f.domain, include_center)
    elif params["radii"] == "dyadic":
        rs = RadiusSet.dyadic(f.domain, include_center)
    else:
        rs = RadiusSet(tuple(int(t) for t in params["radii"].split(",")), include_center)
    result = maximal_fast(f, rs) if params["impl"] == "fast" else maximal_naive(f, rs)
    write_maximal_csv(result, outdir / "maximal.csv")
    summary = {
        "radii": params["radii"],
        "include_center": include_center,
        "impl": params["impl"],
        "max_value": float(np.max(np.real(result.mf.values))),
    }
    if params["probe"]:
        probes = maximal_tail_profile(f, rs, _parse_floats(params["probe"], "probe"))
        write_csv(outdir / "probes.csv", ["x", "mf"], probes)
        summary["probes"] = [{"x": x, "mf": v} for x, v in probes]
    write_json(outdir / "maximal_summary.json", summary)
    return 0


def _run_verify(config: RunConfig, outdir: Path) -> int:
    params = config.parameters
    wanted = params["checks"]
    names = None if wanted == "all" else [n.strip() for n in wanted.split(",")]
    results = verify_mod.run_all_checks(seed=config.seed, cells=int(params["cells"]), names=names)
    failed = False
    summary_rows = []
    for result in results:
        write_check_json(result, outdir / f"{result.name}.json")
        write_check_csv(result, outdir / f"{result.name}.csv")
        if result.name == "maximal_unbounded":
            emit_plotdata(result, outdir, "growth_curve")
        summary_rows.append(
            {
                "name": result.name,
                "verdict": result.verdict.value,
                "estimated_constant": result.estimated_constant,
            }
        )
        failed = failed or result.failed
    write_json(
        outdir / "summary.json",
        {"seed": config.seed, "cells": int(params["cells"]), "checks": summary_rows},
    )
    return 1 if failed else 0


def run(config: RunConfig) -> int:
    """Execute a validated configuration; returns the process exit code."""
    config = validate_config(config)
    outdir = Path(config.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    runner = {
        "norm": _run_norm,
        "grand": _run_grand,
        "amalgam": _run_amalgam,
        "maximal": _run_maximal,
        "verify": _run_verify,
    }[config.subcommand]
    return runner(config, outdir)


# ----------------------------------------------------------------------------
# argparse front end
# ----------------------------------------------------------------------------


def _add_common(sp, box_default: str, cells_default: str):
    sp.add_argument("--box", default=box_default, help="lo,up (1-D) or lo0,up0,lo1,up1 (2-D)")
    sp.add_argument("--cells", default=cells_default, help="cells per axis")
    sp.add_argument("--out", default="out", help="output directory")
    sp.add_argument("--seed", type=int, default=0)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="grandamalgam",
        description="Grand Wiener amalgam norms, maximal operators, and proposition checks",
    )
    sub = ap.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("norm", help="weighted L^p norm")
    sp.add_argument("--f", required=True, help="sampler spec (e.g. const:1) or grid CSV path")
    sp.add_argument("--w", default="const:1")
    sp.add_argument("--p", default="2")
    _add_common(sp, "0,1", "64")

    sp = sub.add_parser("grand", help="grand norm with the epsilon-sup curve")
    sp.add_argument("--f", required=True)
    sp.add_argument("--a", default="const:1", help="grandizer sampler")
    sp.add_argument("--p", default="2")
    sp.add_argument("--theta", default="1")
    sp.add_argument("--variant", default="over_p", choices=("over_p", "full"))
    sp.add_argument("--eps-mode", default="geometric", choices=("geometric", "linear"))
    sp.add_argument("--eps-count", default="33")
    sp.add_argument("--eps-min", default="")
    _add_common(sp, "0,1", "64")

    sp = sub.add_parser("amalgam", help="two-stage amalgam norm")
    sp.add_argument("--f", required=True)
    sp.add_argument("--local", default="grand", choices=("classical", "grand"))
    sp.add_argument("--global", dest="global_kind", default="grand", choices=("classical", "grand"))
    sp.add_argument("--p", default="2")
    sp.add_argument("--q", default="2")
    sp.add_argument("--a", default="const:1")
    sp.add_argument("--b", default="const:1")
    sp.add_argument("--theta", default="1")
    sp.add_argument("--window-side", default="4")
    sp.add_argument("--window-stride", default="4")
    _add_common(sp, "0,1", "64")

    sp = sub.add_parser("maximal", help="centered Hardy-Littlewood maximal function")
    sp.add_argument("--f", required=True)
    sp.add_argument("--radii", default="full", help="'full', 'dyadic', or a comma list of cells")
    sp.add_argument("--probe", default="", help="comma list of probe points")
    sp.add_argument("--no-center", action="store_true", help="drop the radius-0 term |f(x)|")
    sp.add_argument("--impl", default="fast", choices=("fast", "naive"))
    _add_common(sp, "-8,8", "1024")

    sp = sub.add_parser("verify", help="run proposition checks")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--check", action="append", default=[], help="check name (repeatable)")
    sp.add_argument("--cells", default="256")
    sp.add_argument("--out", default="out")
    sp.add_argument("--seed", type=int, default=7)

    sp = sub.add_parser("run", help="execute a config file")
    sp.add_argument("--config", required=True, help="path to a key = value config file")
    return ap


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    sub = args.subcommand
    if sub == "run":
        path = Path(args.config)
        if not path.exists():
            raise ConfigError(f"config file not found: {path}")
        return parse_config(path.read_text())
    if sub == "verify":
        checks = "all" if (args.all or not args.check) else ",".join(args.check)
        return RunConfig(
            "verify",
            "",
            {"checks": checks, "cells": args.cells},
            output_dir=args.out,
            seed=args.seed,
        )
    common = {"box": args.box, "cells": args.cells}
    if sub == "norm":
        params = {"p": args.p, "w": args.w, **common}
    elif sub == "grand":
        params = {
            "p": args.p,
            "theta": args.theta,
            "variant": args.variant,
            "a": args.a,
            "eps_mode": args.eps_mode,
            "eps_count": args.eps_count,
            "eps_min": args.eps_min,
            **common,
        }
    elif sub == "amalgam":
        params = {
            "p": args.p,
            "q": args.q,
            "theta": args.theta,
            "a": args.a,
            "b": args.b,
            "local": args.local,
            "global": args.global_kind,
            "window_side": args.window_side,
            "window_stride": args.window_stride,
            **common,
        }
    else:  # maximal
        params = {
            "radii": args.radii,
            "probe": args.probe,
            "include_center": "false" if args.no_center else "true",
            "impl": args.impl,
            **common,
        }
    return RunConfig(sub, args.f, params, output_dir=args.out, seed=args.seed)


_COORD_FLAGS = ("--box", "--probe")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Let coordinate flags take values like '-8,8' without argparse tripping."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _COORD_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_join_negative_values(list(argv)))
    try:
        config = _config_from_args(args)
        return run(config)
    except (ConfigError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
