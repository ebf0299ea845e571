# xhermite/cli.py
"""Command-line front end.

    python -m xhermite family    --m1 2 --m2 3
    python -m xhermite potential --m1 2 --m2 3 [--format csv]
    python -m xhermite polys     --m 2 --max-degree 10 --format csv
    python -m xhermite spectrum  --m1 2 --m2 5 --levels 6
    python -m xhermite ladder    --m1 2 --m2 3 --operator c
    python -m xhermite verify    [--m1 4 --m2 7 | --grid 2:3,4:5] [--no-numeric]
    python -m xhermite export    --grid 2:3,2:5 --output out/

Exit status: 0 all checks pass, 1 a verification check failed, 2 usage error.
Logs go to stderr; stdout carries JSON, CSV or plain text only.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Literal, Optional, Sequence, Tuple

import pandas as pd
from pydantic import BaseModel, ValidationError, model_validator

from xhermite import __version__, config
from xhermite.agents import export_agent, verification_agent
from xhermite.core.families import FamilyParams, FirstOrderFamily, format_v2, potential_v2
from xhermite.core.numerics import FdGrid, QuadratureSpec, sample_potential
from xhermite.core.operators import LADDERS, zero_modes
from xhermite.errors import InvalidParametersError, VerificationFailure, XHermiteError

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

Subcommand = Literal["family", "potential", "polys", "spectrum", "ladder", "verify", "export"]


class CommandConfig(BaseModel):
    subcommand: Subcommand
    m1: Optional[int] = None
    m2: Optional[int] = None
    m: Optional[int] = None
    grid: Optional[str] = None
    max_nu: int = config.MAX_NU
    max_degree: int = config.MAX_DEGREE
    levels: int = 5
    operator: str = "c"
    format: Literal["json", "csv", "pretty"] = "json"
    output: Optional[str] = None
    numeric: bool = True
    strict: bool = False
    workers: int = config.WORKERS
    quad_half_width: float = config.QUAD_HALF_WIDTH
    quad_nodes: int = config.QUAD_NODES
    quad_scheme: Literal["gauss_legendre", "adaptive"] = "gauss_legendre"
    fd_half_width: float = config.FD_HALF_WIDTH
    fd_points: int = config.FD_POINTS

    @model_validator(mode="after")
    def _check_target(self):
        pair = self.m1 is not None or self.m2 is not None
        if pair and (self.m1 is None or self.m2 is None):
            raise ValueError("--m1 and --m2 must be given together")
        if pair and self.m is not None:
            raise ValueError("use either --m (single-index X_m) or --m1/--m2, not both")
        if self.m is not None and self.subcommand in ("ladder", "export"):
            raise ValueError(f"'{self.subcommand}' needs a double-index family (--m1/--m2)")
        if not pair and self.m is None and self.subcommand not in ("verify", "export"):
            raise ValueError(f"'{self.subcommand}' needs --m1/--m2 or --m")
        if self.operator not in LADDERS:
            raise ValueError(f"unknown operator {self.operator!r}; expected one of {', '.join(LADDERS)}")
        if self.levels < 1 or self.max_nu < 0 or self.max_degree < 0 or self.workers < 1:
            raise ValueError("levels and workers must be >= 1; max-nu and max-degree must be >= 0")
        return self

    @property
    def first_order(self) -> bool:
        return self.m is not None

    @property
    def params(self) -> FamilyParams:
        return FamilyParams(self.m1, self.m2)

    def pairs(self) -> List[Tuple[int, int]]:
        if self.m1 is not None:
            return [(self.m1, self.m2)]
        return config.parse_grid(self.grid or config.DEFAULT_GRID)

    def quad(self) -> QuadratureSpec:
        return QuadratureSpec(self.quad_half_width, self.quad_nodes, self.quad_scheme)

    def fd_grid(self) -> FdGrid:
        return FdGrid(self.fd_half_width, self.fd_points)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xhermite", description="X_{m1,m2} Hermite EOP toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level for stderr (default from XHERMITE_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m1", type=int, help="even first seed index (>= 2)")
    common.add_argument("--m2", type=int, help="odd second seed index (> m1)")
    common.add_argument("--m", type=int, help="single-index X_m mode (m even, >= 2)")
    common.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    common.add_argument("--output", "-o", help="file (or directory for export) instead of stdout")
    common.add_argument("--max-nu", type=int, default=config.MAX_NU)
    common.add_argument("--max-degree", type=int, default=config.MAX_DEGREE)
    common.add_argument("--levels", type=int, default=5)
    common.add_argument("--quad-half-width", type=float, default=config.QUAD_HALF_WIDTH)
    common.add_argument("--quad-nodes", type=int, default=config.QUAD_NODES)
    common.add_argument("--quad-scheme", choices=["gauss_legendre", "adaptive"], default="gauss_legendre")
    common.add_argument("--fd-half-width", type=float, default=config.FD_HALF_WIDTH)
    common.add_argument("--fd-points", type=int, default=config.FD_POINTS)

    sub.add_parser("family", parents=[common], help="g, ḡ, V2, degree set and spectrum as JSON")
    sub.add_parser("potential", parents=[common], help="exact V2 (or V- with --m) and sampled values")
    sub.add_parser("polys", parents=[common], help="EOP coefficient table")
    sub.add_parser("spectrum", parents=[common], help="exact levels next to finite-difference eigenvalues")
    p_ladder = sub.add_parser("ladder", parents=[common], help="ladder action table")
    p_ladder.add_argument("--operator", choices=list(LADDERS), default="c")
    for name, help_text in (("verify", "run the exact and numeric check suite"),
                            ("export", "write JSON/CSV bundles for a parameter grid")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--grid", help=f"comma list of m1:m2 pairs (default {config.DEFAULT_GRID})")
        p.add_argument("--no-numeric", dest="numeric", action="store_false")
        p.add_argument("--workers", type=int, default=config.WORKERS)
        if name == "verify":
            p.add_argument("--strict", action="store_true", help="raise instead of returning the failure exit code")
    return parser


def _emit_text(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _emit_json(data, output: Optional[str]) -> None:
    _emit_text(json.dumps(data, indent=2, ensure_ascii=False), output)


def _emit_frame(df: pd.DataFrame, cfg: CommandConfig) -> None:
    if cfg.format == "csv":
        if cfg.output:
            Path(cfg.output).parent.mkdir(parents=True, exist_ok=True)
            df.to_csv(cfg.output, index=False)
        else:
            df.to_csv(sys.stdout, index=False)
    elif cfg.format == "pretty":
        _emit_text(df.to_string(index=False), cfg.output)
    else:
        _emit_json(json.loads(df.to_json(orient="records")), cfg.output)


def _family(cfg: CommandConfig) -> int:
    if cfg.first_order:
        data = FirstOrderFamily(cfg.m).to_json(cfg.max_degree, cfg.levels)
    else:
        data = export_agent.family_json(cfg.params, cfg.max_degree, cfg.levels)
    _emit_json(data, cfg.output)
    return EXIT_OK


def _potential(cfg: CommandConfig) -> int:
    if cfg.first_order:
        pot = FirstOrderFamily(cfg.m).potential
        exact = str(pot)
    else:
        pot = potential_v2(cfg.params)
        exact = format_v2(cfg.params)
    if cfg.format == "csv":
        _emit_frame(sample_potential(pot, cfg.fd_half_width), cfg)
    elif cfg.format == "pretty":
        _emit_text(exact, cfg.output)
    else:
        _emit_json({"exact": exact, "rational": pot.full_rational().to_json()}, cfg.output)
    return EXIT_OK


def _polys(cfg: CommandConfig) -> int:
    if cfg.first_order:
        df = export_agent.first_order_eop_table(cfg.m, cfg.max_degree)
    else:
        df = export_agent.eop_table(cfg.params, cfg.max_degree)
    _emit_frame(df, cfg)
    return EXIT_OK


def _spectrum(cfg: CommandConfig) -> int:
    if cfg.first_order:
        df = export_agent.first_order_spectrum_table(cfg.m, cfg.levels, cfg.fd_grid())
    else:
        df = export_agent.spectrum_table(cfg.params, cfg.levels, cfg.fd_grid())
    _emit_frame(df, cfg)
    return EXIT_OK


def _ladder(cfg: CommandConfig) -> int:
    df = export_agent.ladder_frame(cfg.params, cfg.operator, cfg.max_nu)
    if cfg.format == "json":
        zm = zero_modes(cfg.params, cfg.operator)
        _emit_json({"actions": json.loads(df.to_json(orient="records")), "zero_modes": zm.to_json()}, cfg.output)
    else:
        _emit_frame(df, cfg)
    return EXIT_OK


def _verify(cfg: CommandConfig) -> int:
    kwargs = dict(max_nu=cfg.max_nu, max_degree=cfg.max_degree, numeric=cfg.numeric, quad=cfg.quad(), grid=cfg.fd_grid())
    if cfg.first_order:
        report = verification_agent.verify_first_order(cfg.m, **kwargs)
    else:
        report = verification_agent.verify_grid(cfg.pairs(), workers=cfg.workers, **kwargs)
    _emit_json(report.to_json(), cfg.output)
    logger.info("verification summary: %s", report.summary())
    if cfg.strict:
        verification_agent.require_pass(report)
    return EXIT_OK if report.passed else EXIT_FAILED


def _export(cfg: CommandConfig) -> int:
    out_dir = cfg.output or config.OUTPUT_DIR
    written = export_agent.write_bundle(cfg.pairs(), out_dir, cfg.max_degree, cfg.max_nu, cfg.numeric)
    _emit_json({"out_dir": str(out_dir), "files": [str(p) for p in written]}, None)
    return EXIT_OK


COMMANDS = {
    "family": _family,
    "potential": _potential,
    "polys": _polys,
    "spectrum": _spectrum,
    "ladder": _ladder,
    "verify": _verify,
    "export": _export,
}


def run(cfg: CommandConfig) -> int:
    return COMMANDS[cfg.subcommand](cfg)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    values = {k: v for k, v in vars(args).items() if k != "log_level"}
    try:
        cfg = CommandConfig(**values)
        return run(cfg)
    except ValidationError as e:
        msgs = "; ".join(err["msg"] for err in e.errors())
        print(f"xhermite: error: {msgs}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidParametersError as e:
        print(f"xhermite: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as e:
        print(f"xhermite: verification failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    except XHermiteError as e:
        logger.exception("command %s failed", args.subcommand)
        print(f"xhermite: error: {e}", file=sys.stderr)
        return EXIT_FAILED
