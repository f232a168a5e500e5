"""Adams charts: dots at (s, n) with n = t - s, plus the connective-cover shift.

The chart file format is line oriented::

    chart v1 p=2 c=0
    window smax=8 tmax=21
    dot s=0 n=0 mult=1
    dot s=1 n=1 mult=1 ann=KILLED

The ``window`` line is optional and records the (s, t) box the chart was
computed in, expressed in the chart's own filtration.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Optional
from xml.sax.saxutils import escape

from .resolve import ExtTable

ALLOWED_COVER_RESIDUES = (0, 1, 2, 4)


class ChartError(ValueError):
    pass


class Status(enum.Enum):
    KILLED = "KILLED"
    SURVIVOR = "SURVIVOR"


@dataclass(frozen=True)
class HurewiczAnnotation:
    status: Status
    target_k: Optional[int] = None
    delta_factored: bool = False
    target_degree: Optional[int] = None

    def __post_init__(self):
        if self.status is Status.KILLED and (self.target_k is not None or self.delta_factored):
            raise ValueError("killed classes carry no target")
        if self.status is Status.SURVIVOR and self.target_k is None:
            raise ValueError("survivors need a target summand")


@dataclass(frozen=True)
class Dot:
    s: int
    n: int
    index: int = 0
    annotation: Optional[HurewiczAnnotation] = None


@dataclass(frozen=True)
class Chart:
    dots: dict = field(default_factory=dict)  # (s, n) -> multiplicity
    p: int = 2
    c: int = 0
    # (s_max, t_max) box in this chart's coordinates; None when unknown
    window: Optional[tuple[int, int]] = None
    annotations: dict = field(default_factory=dict)  # (s, n) -> HurewiczAnnotation
    source: str = field(default="", compare=False)

    def __post_init__(self):
        for (s, n), m in self.dots.items():
            if m <= 0:
                raise ChartError(f"nonpositive multiplicity at s={s} n={n}")
            if s < 0:
                raise ChartError(f"negative filtration at s={s} n={n}")
        for key in self.annotations:
            if key not in self.dots:
                raise ChartError(f"annotation without a dot at s={key[0]} n={key[1]}")

    def mult(self, s: int, n: int) -> int:
        return self.dots.get((s, n), 0)

    def positions(self) -> list[tuple[int, int]]:
        return sorted(self.dots)

    def dot_list(self) -> list[Dot]:
        out = []
        for s, n in self.positions():
            ann = self.annotations.get((s, n))
            out.extend(Dot(s, n, i, ann) for i in range(self.dots[(s, n)]))
        return out

    def total(self) -> int:
        return sum(self.dots.values())

    def in_window(self, s: int, n: int) -> bool:
        if self.window is None:
            return True
        s_max, t_max = self.window
        return 0 <= s <= s_max and n + s <= t_max

    def restrict(self, s_max: int, n_max: int) -> dict:
        return {k: v for k, v in self.dots.items() if k[0] <= s_max and k[1] <= n_max}

    def column(self, n: int) -> dict:
        return {s: m for (s, nn), m in self.dots.items() if nn == n}


def chart_from_ext(e: ExtTable, source: str = "", c: int = 0) -> Chart:
    dots = {(s, t - s): m for (s, t), m in e.dims.items() if m}
    return Chart(dots, 2, c, (e.s_max, e.safe_t), {}, source)


def connective_cover_chart(ko_chart: Chart, c: int) -> Chart:
    """Chart of ko<c>: drop stems below c, then lower filtration so (0, c) is the bottom."""
    if c < 1 or c % 8 not in ALLOWED_COVER_RESIDUES:
        raise ChartError(f"c={c} not allowed: c must be positive with c = 0, 1, 2 or 4 mod 8")
    if ko_chart.c not in (0, c):
        raise ChartError(f"expected the ko chart (c=0), got a chart with c={ko_chart.c}")
    col = ko_chart.column(c)
    if not col:
        raise ChartError(f"column n={c} is empty; resolve further")
    sigma = min(col)
    dots = {(s - sigma, n): m for (s, n), m in ko_chart.dots.items() if n >= c}
    if any(s < 0 for s, _ in dots):
        raise ChartError("cover would produce negative filtration")
    window = None
    if ko_chart.window is not None:
        window = (ko_chart.window[0] - sigma, ko_chart.window[1] - sigma)
    return Chart(dots, ko_chart.p, c, window, {}, ko_chart.source)


def cover_shift(ko_chart: Chart, c: int) -> int:
    col = ko_chart.column(c)
    if not col:
        raise ChartError(f"column n={c} is empty")
    return min(col)


# -- text format ------------------------------------------------------------


def serialize(ch: Chart) -> str:
    lines = [f"chart v1 p={ch.p} c={ch.c}"]
    if ch.window is not None:
        lines.append(f"window smax={ch.window[0]} tmax={ch.window[1]}")
    for s, n in ch.positions():
        line = f"dot s={s} n={n} mult={ch.dots[(s, n)]}"
        ann = ch.annotations.get((s, n))
        if ann is not None:
            if ann.status is Status.SURVIVOR:
                line += f" ann=SURVIVOR k={ann.target_k}"
                if ann.delta_factored:
                    line += " delta=1"
            else:
                line += " ann=KILLED"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _fields(text: str, lineno: int, allowed: tuple[str, ...]) -> dict:
    out = {}
    for tok in text.split():
        key, eq, val = tok.partition("=")
        if not eq:
            raise ChartError(f"line {lineno}: expected key=value, got {tok!r}")
        if key not in allowed:
            raise ChartError(f"line {lineno}: unknown key {key!r}")
        if key in out:
            raise ChartError(f"line {lineno}: repeated key {key!r}")
        out[key] = val
    return out


def _int(fields: dict, key: str, lineno: int) -> int:
    if key not in fields:
        raise ChartError(f"line {lineno}: missing {key!r}")
    try:
        return int(fields[key])
    except ValueError:
        raise ChartError(f"line {lineno}: {key}={fields[key]!r} is not an integer") from None


def parse(text: str) -> Chart:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("chart "):
        raise ChartError("line 1: expected header 'chart v1 p=<p> c=<c>'")
    head = lines[0].split(None, 2)
    if len(head) < 2 or head[1] != "v1":
        raise ChartError("line 1: unsupported chart version")
    hf = _fields(head[2] if len(head) > 2 else "", 1, ("p", "c"))
    p, c = _int(hf, "p", 1), _int(hf, "c", 1)
    window = None
    dots: dict = {}
    anns: dict = {}
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        kind, _, rest = line.partition(" ")
        if kind == "window":
            if window is not None or dots:
                raise ChartError(f"line {lineno}: window must directly follow the header")
            f = _fields(rest, lineno, ("smax", "tmax"))
            window = (_int(f, "smax", lineno), _int(f, "tmax", lineno))
        elif kind == "dot":
            f = _fields(rest, lineno, ("s", "n", "mult", "ann", "k", "delta"))
            s, n, m = _int(f, "s", lineno), _int(f, "n", lineno), _int(f, "mult", lineno)
            if (s, n) in dots:
                raise ChartError(f"line {lineno}: duplicate dot at s={s} n={n}")
            if m <= 0 or s < 0:
                raise ChartError(f"line {lineno}: bad dot s={s} mult={m}")
            dots[(s, n)] = m
            ann = f.get("ann")
            if ann == "KILLED":
                if "k" in f or "delta" in f:
                    raise ChartError(f"line {lineno}: killed dot with target fields")
                anns[(s, n)] = HurewiczAnnotation(Status.KILLED)
            elif ann == "SURVIVOR":
                anns[(s, n)] = HurewiczAnnotation(
                    Status.SURVIVOR, _int(f, "k", lineno), f.get("delta") == "1", n
                )
            elif ann is not None:
                raise ChartError(f"line {lineno}: unknown annotation {ann!r}")
            elif "k" in f or "delta" in f:
                raise ChartError(f"line {lineno}: target fields without ann=SURVIVOR")
        else:
            raise ChartError(f"line {lineno}: unknown key {kind!r}")
    return Chart(dots, p, c, window, anns)


# -- rendering --------------------------------------------------------------


def _cell(ch: Chart, s: int, n: int) -> str:
    m = ch.mult(s, n)
    if not m:
        return "."
    ann = ch.annotations.get((s, n))
    if ann is not None and ann.status is Status.SURVIVOR:
        return "o"
    return str(m) if m <= 9 else "*"


def render_ascii(ch: Chart) -> str:
    """Rows s descending, columns n ascending from 0."""
    out = [f"# chart p={ch.p} c={ch.c}"]
    if not ch.dots:
        return out[0] + "\n"
    s_top = max(s for s, _ in ch.dots)
    n_top = max(n for _, n in ch.dots)
    w = len(str(n_top))
    sw = len(str(s_top))
    for s in range(s_top, -1, -1):
        cells = " ".join(_cell(ch, s, n).rjust(w) for n in range(n_top + 1))
        out.append(f"{str(s).rjust(sw)} | {cells}")
    out.append(" " * sw + " +" + "-" * ((w + 1) * (n_top + 1)))
    out.append(" " * (sw + 3) + " ".join(str(n).rjust(w) for n in range(n_top + 1)))
    out.append(" " * (sw + 3) + "t-s")
    return "\n".join(out) + "\n"


def render_svg(ch: Chart, cell: float = 24.0, radius: float = 4.0) -> str:
    """SVG drawing: filled circles for dots, hollow ones for survivors."""
    n_top = max((n for _, n in ch.dots), default=0)
    s_top = max((s for s, _ in ch.dots), default=0)
    margin = 2 * cell
    width = margin + (n_top + 1) * cell + cell / 2
    height = margin + (s_top + 1) * cell + cell / 2
    x0, y0 = margin, height - margin

    def fx(v: float) -> str:
        return f"{v:.1f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fx(width)}" height="{fx(height)}" '
        f'viewBox="0 0 {fx(width)} {fx(height)}">',
        f'<line class="axis" x1="{fx(x0)}" y1="{fx(y0)}" x2="{fx(width)}" y2="{fx(y0)}" stroke="black"/>',
        f'<line class="axis" x1="{fx(x0)}" y1="{fx(y0)}" x2="{fx(x0)}" y2="0.0" stroke="black"/>',
    ]
    for n in range(n_top + 1):
        x = x0 + (n + 0.5) * cell
        parts.append(f'<text x="{fx(x)}" y="{fx(y0 + cell * 0.7)}" font-size="10" text-anchor="middle">{n}</text>')
    for s in range(s_top + 1):
        y = y0 - (s + 0.5) * cell
        parts.append(f'<text x="{fx(x0 - cell * 0.4)}" y="{fx(y + 3)}" font-size="10" text-anchor="end">{s}</text>')
    parts.append(
        f'<text x="{fx(x0 + (n_top + 1) * cell / 2)}" y="{fx(height - cell * 0.3)}" '
        f'font-size="12" text-anchor="middle">{escape("t-s")}</text>'
    )
    parts.append(f'<text x="{fx(cell * 0.5)}" y="{fx(y0 - (s_top + 1) * cell / 2)}" font-size="12">s</text>')
    for s, n in ch.positions():
        m = ch.dots[(s, n)]
        ann = ch.annotations.get((s, n))
        hollow = ann is not None and ann.status is Status.SURVIVOR
        cx = x0 + (n + 0.5) * cell
        cy = y0 - (s + 0.5) * cell
        step = 2.5 * radius
        for i in range(m):
            x = cx + (i - (m - 1) / 2) * step
            fill = 'fill="white" stroke="black"' if hollow else 'fill="black"'
            parts.append(f'<circle cx="{fx(x)}" cy="{fx(cy)}" r="{fx(radius)}" {fill}/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def with_annotations(ch: Chart, annotations: dict) -> Chart:
    return replace(ch, annotations=dict(annotations))
