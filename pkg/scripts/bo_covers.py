"""Candidate Hurewicz degrees for every allowed cover ko<c>, c <= --cmax."""

import argparse
import time

from adamschart.chart import ALLOWED_COVER_RESIDUES
from adamschart.hurewicz import bo_cover_workflow, default_box


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cmax", type=int, default=24)
    args = ap.parse_args()
    print(f"{'c':>3}  {'box (s,t)':>10}  {'seconds':>7}  degrees")
    for c in range(1, args.cmax + 1):
        if c % 8 not in ALLOWED_COVER_RESIDUES:
            continue
        start = time.perf_counter()
        r = bo_cover_workflow(c)
        dt = time.perf_counter() - start
        box = "%d,%d" % default_box(c)
        print(f"{c:>3}  {box:>10}  {dt:7.2f}  {','.join(map(str, r.nonzero_degrees))}")


if __name__ == "__main__":
    main()
