"""Vanishing of the space-level Hurewicz map, read off an Adams chart.

For a (c-1)-connected spectrum, a class of Adams filtration s in stem n
with n < c * p**s has zero Hurewicz image.  What is left is annotated with
the extended-power summand D_{p^s} its image can land in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .chart import (
    ALLOWED_COVER_RESIDUES,
    Chart,
    ChartError,
    Dot,
    HurewiczAnnotation,
    Status,
    chart_from_ext,
    connective_cover_chart,
    with_annotations,
)
from .fpmodule import preset_module
from .resolve import ext_dims


class CriterionError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def apply_criterion(ch: Chart, c: int, p: int = 2) -> Chart:
    """Mark each dot KILLED when n < c * p**s, else SURVIVOR with target summand p**s."""
    if c < 1:
        raise CriterionError("connectivity c must be at least 1")
    if not is_prime(p):
        raise CriterionError(f"p={p} is not prime")
    low = sorted(n for _, n in ch.dots if n < c)
    if low:
        raise CriterionError(
            f"chart has a dot in stem {low[0]}, so it is not {c - 1}-connected (c={c})"
        )
    anns = {}
    for s, n in ch.dots:
        if n < c * p**s:
            anns[(s, n)] = HurewiczAnnotation(Status.KILLED)
        else:
            anns[(s, n)] = HurewiczAnnotation(Status.SURVIVOR, p**s, False, n)
    return with_annotations(ch, anns)


def annotate_delta(ch: Chart, zero_connected: bool) -> Chart:
    """Flag survivors whose image factors through the suspension map Delta.

    Only meaningful for 0-connected spectra; otherwise the flags are cleared
    and the target is the weaker range of summands starting at p**s.
    """
    anns = {}
    for key, ann in ch.annotations.items():
        if ann.status is Status.SURVIVOR:
            ann = HurewiczAnnotation(Status.SURVIVOR, ann.target_k, zero_connected, ann.target_degree)
        anns[key] = ann
    return with_annotations(ch, anns)


def stage_annotation(dot: Dot, p: int = 2, d: int = 2) -> int:
    """First Goodwillie stage k = d**s where the dot's Hurewicz image can appear."""
    if d < 2:
        raise CriterionError("d must be at least 2")
    if dot.annotation is None or dot.annotation.status is not Status.SURVIVOR:
        raise CriterionError(f"dot at s={dot.s} n={dot.n} is not a survivor")
    return d**dot.s


@dataclass(frozen=True)
class HurewiczReport:
    chart_id: str
    c: int
    p: int
    survivors: tuple[Dot, ...]

    @property
    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({d.n for d in self.survivors}))

    def to_text(self) -> str:
        lines = [f"report c={self.c} p={self.p}"]
        for d in self.survivors:
            a = d.annotation
            lines.append(f"survivor s={d.s} n={d.n} k={a.target_k} delta={int(a.delta_factored)}")
        lines.append("nonzero-degrees: " + ",".join(str(n) for n in self.nonzero_degrees))
        return "\n".join(lines) + "\n"


def make_report(ch: Chart, c: int, p: int, chart_id: str = "") -> HurewiczReport:
    survivors = tuple(
        Dot(s, n, 0, ch.annotations[(s, n)])
        for s, n in ch.positions()
        if ch.annotations.get((s, n)) is not None and ch.annotations[(s, n)].status is Status.SURVIVOR
    )
    return HurewiczReport(chart_id or ch.source, c, p, survivors)


def default_box(c: int) -> tuple[int, int]:
    """A resolution box that contains column c of the ko chart with room above it."""
    s_max = c // 2 + 8
    return s_max, s_max + c + 12


def bo_cover_workflow(
    c: int, s_max: Optional[int] = None, t_max: Optional[int] = None, p: int = 2
) -> HurewiczReport:
    """Candidate Hurewicz degrees for ko<c> -> BO<c>, from the A(1) resolution."""
    if c < 1 or c % 8 not in ALLOWED_COVER_RESIDUES:
        raise ChartError(f"c={c} not allowed: c must be positive with c = 0, 1, 2 or 4 mod 8")
    ds, dt = default_box(c)
    s_max = ds if s_max is None else s_max
    t_max = dt if t_max is None else t_max
    ko = chart_from_ext(ext_dims(preset_module("sphere/A(1)"), s_max, t_max), source="ko")
    cover = connective_cover_chart(ko, c)
    annotated = annotate_delta(apply_criterion(cover, c, p), zero_connected=True)
    return make_report(annotated, c, p, chart_id=f"ko<{c}>")


def bo_cover_chart(c: int, s_max: Optional[int] = None, t_max: Optional[int] = None, p: int = 2) -> Chart:
    ds, dt = default_box(c)
    ko = chart_from_ext(
        ext_dims(preset_module("sphere/A(1)"), ds if s_max is None else s_max, dt if t_max is None else t_max),
        source="ko",
    )
    return annotate_delta(apply_criterion(connective_cover_chart(ko, c), c, p), zero_connected=True)
