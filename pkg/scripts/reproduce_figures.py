"""Print the ko and bo charts as ASCII and write SVG copies.

    python scripts/reproduce_figures.py --out figures/
"""

import argparse
from pathlib import Path

from adamschart.chart import chart_from_ext, connective_cover_chart, render_ascii, render_svg
from adamschart.fpmodule import preset_module
from adamschart.hurewicz import annotate_delta, apply_criterion
from adamschart.resolve import ext_dims


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--smax", type=int, default=9)
    ap.add_argument("--tmax", type=int, default=22)
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    ko = chart_from_ext(ext_dims(preset_module("sphere/A(1)"), args.smax, args.tmax), source="ko")
    bo = annotate_delta(apply_criterion(connective_cover_chart(ko, 1), 1, 2), True)
    print("Ext over A(1) of F_2 (the ko chart)")
    print(render_ascii(ko))
    print("bo = ko<1>, survivors marked o")
    print(render_ascii(bo))
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "ko.svg").write_text(render_svg(ko))
        (args.out / "bo.svg").write_text(render_svg(bo))


if __name__ == "__main__":
    main()
