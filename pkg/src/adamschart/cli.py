"""Command-line driver.

    adamschart resolve --preset sphere-A1 --smax 8 --tmax 21 -o ko.chart
    adamschart cover -c 1 ko.chart -o bo.chart
    adamschart hurewicz -c 1 -p 2 bo.chart --ascii -

Exit status: 0 on success, 2 for bad input or a failed precondition,
1 for anything unexpected.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import chart as chartmod
from .fpmodule import FPModule, parse_module, preset_module
from .hurewicz import CriterionError, annotate_delta, apply_criterion, is_prime, make_report
from .resolve import ext_table, minimal_resolution
from .steenrod import Algebra

log = logging.getLogger("adamschart")

PRESET_ALIASES = {
    "sphere-A": "sphere/A",
    "sphere-A1": "sphere/A(1)",
    "ko-A1": "ko-as-A(1)-trivial",
    "ko-A": "ko-as-A-module",
    "free-A": "free/A",
    "free-A1": "free/A(1)",
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    preset: Optional[str] = None
    module_path: Optional[str] = None
    algebra: str = "A"
    s_max: int = 0
    t_max: int = 0
    c: int = 1
    p: int = 2
    chart_path: Optional[str] = None
    output: Optional[str] = None
    dump: Optional[str] = None
    report: Optional[str] = None
    ascii_out: Optional[str] = None
    svg_out: Optional[str] = None
    delta: bool = True

    def validate(self) -> None:
        if self.s_max < 0 or self.t_max < 0:
            raise UsageError("--smax and --tmax must be nonnegative")
        if self.c < 1:
            raise UsageError("-c must be at least 1")
        if not is_prime(self.p):
            raise UsageError(f"-p {self.p} is not prime")


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load_module(cfg: RunConfig) -> FPModule:
    if cfg.preset and cfg.module_path:
        raise UsageError("give either --preset or --module, not both")
    if cfg.preset:
        return preset_module(PRESET_ALIASES.get(cfg.preset, cfg.preset))
    if cfg.module_path:
        return parse_module(_read(cfg.module_path), Algebra.parse(cfg.algebra), name=cfg.module_path)
    raise UsageError("resolve needs --preset or --module")


def _load_chart(cfg: RunConfig) -> chartmod.Chart:
    if not cfg.chart_path:
        raise UsageError("missing chart file")
    try:
        return chartmod.parse(_read(cfg.chart_path))
    except chartmod.ChartError as e:
        raise UsageError(f"{cfg.chart_path}: {e}") from None


def _renders(cfg: RunConfig, ch: chartmod.Chart) -> None:
    if cfg.ascii_out:
        _write(cfg.ascii_out, chartmod.render_ascii(ch))
    if cfg.svg_out:
        _write(cfg.svg_out, chartmod.render_svg(ch))


def cmd_resolve(cfg: RunConfig) -> None:
    m = _load_module(cfg)
    res = minimal_resolution(m, cfg.s_max, cfg.t_max)
    ch = chartmod.chart_from_ext(ext_table(res), source=m.name)
    dump = cfg.dump
    if dump is None and cfg.output and cfg.output != "-":
        dump = str(Path(cfg.output).with_suffix(".res"))
    if dump:
        _write(dump, res.dump())
    _write(cfg.output, chartmod.serialize(ch))
    _renders(cfg, ch)


def cmd_cover(cfg: RunConfig) -> None:
    ko = _load_chart(cfg)
    _write(cfg.output, chartmod.serialize(chartmod.connective_cover_chart(ko, cfg.c)))


def cmd_hurewicz(cfg: RunConfig) -> None:
    ch = _load_chart(cfg)
    annotated = annotate_delta(apply_criterion(ch, cfg.c, cfg.p), zero_connected=cfg.delta)
    if cfg.output:
        _write(cfg.output, chartmod.serialize(annotated))
    _write(cfg.report, make_report(annotated, cfg.c, cfg.p, chart_id=cfg.chart_path or "").to_text())
    _renders(cfg, annotated)


COMMANDS = {"resolve": cmd_resolve, "cover": cmd_cover, "hurewicz": cmd_hurewicz}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adamschart", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def renders(p):
        p.add_argument("--ascii", dest="ascii_out", metavar="PATH", help="ASCII chart ('-' for stdout)")
        p.add_argument("--svg", dest="svg_out", metavar="PATH", help="SVG chart ('-' for stdout)")

    r = sub.add_parser("resolve", help="minimal resolution and Ext chart of a module")
    r.add_argument("--preset", help="one of " + ", ".join(PRESET_ALIASES))
    r.add_argument("--module", dest="module_path", metavar="FILE", help="module description file")
    r.add_argument("--algebra", default="A", help="algebra for --module files without an 'algebra' line")
    r.add_argument("--smax", dest="s_max", type=int, required=True)
    r.add_argument("--tmax", dest="t_max", type=int, required=True)
    r.add_argument("-o", dest="output", metavar="PATH", help="chart file (default stdout)")
    r.add_argument("--dump", metavar="PATH", help="resolution dump (default: chart path with .res)")
    renders(r)

    cv = sub.add_parser("cover", help="chart of the connective cover ko<c>")
    cv.add_argument("-c", type=int, required=True)
    cv.add_argument("chart_path", metavar="CHART")
    cv.add_argument("-o", dest="output", metavar="PATH")

    h = sub.add_parser("hurewicz", help="apply the vanishing criterion and report survivors")
    h.add_argument("-c", type=int, required=True)
    h.add_argument("-p", type=int, default=2)
    h.add_argument("chart_path", metavar="CHART")
    h.add_argument("-o", dest="output", metavar="PATH", help="annotated chart file")
    h.add_argument("--report", metavar="PATH", help="report file (default stdout)")
    h.add_argument("--no-delta", dest="delta", action="store_false",
                   help="do not record factorization through the suspension map")
    renders(h)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    cfg = RunConfig(**fields)
    try:
        cfg.validate()
        COMMANDS[cfg.command](cfg)
    except (UsageError, chartmod.ChartError, CriterionError, ValueError) as e:
        print(f"adamschart {cfg.command}: error: {e}", file=sys.stderr)
        return 2
    except Exception:
        log.exception("internal failure")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
