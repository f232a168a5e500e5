"""Ext over the full Steenrod algebra for the sphere, as an ASCII chart with timing."""

import argparse
import time

from adamschart.chart import chart_from_ext, render_ascii
from adamschart.fpmodule import preset_module
from adamschart.resolve import ext_dims


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--smax", type=int, default=6)
    ap.add_argument("--tmax", type=int, default=20)
    args = ap.parse_args()
    start = time.perf_counter()
    table = ext_dims(preset_module("sphere/A"), args.smax, args.tmax)
    print(f"resolved in {time.perf_counter() - start:.2f}s")
    print(render_ascii(chart_from_ext(table)))


if __name__ == "__main__":
    main()
