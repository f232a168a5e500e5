"""Minimal free resolutions and Ext dimensions.

Stages are built one internal degree at a time.  In degree t, stage s
first collects the image of its existing generators (all of degree < t);
every kernel vector of the previous differential that falls outside that
image becomes a new degree-t generator.  Since each stage is carried all
the way to ``t_max`` before the next one starts, every kernel is complete
and Ext^{s,t} is exact throughout the box s <= s_max, t <= t_max.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import steenrod
from .f2core import BitMatrix, Echelon, kernel_basis, rank
from .fpmodule import FPModule, FreeMap, FreeModule, act


@dataclass(frozen=True)
class Resolution:
    """``stages[s]`` is d_s : F_s -> F_{s-1}; d_0 lands in the presentation's free module."""

    module: FPModule
    s_max: int
    t_max: int
    stages: tuple[FreeMap, ...]
    # dim ker(d_{s_max}) in each degree; the first piece of the next stage
    top_kernel: tuple[int, ...] = ()
    guard: int = 0

    @property
    def algebra(self) -> steenrod.Algebra:
        return self.module.algebra

    def free(self, s: int) -> FreeModule:
        return self.stages[s].source

    def generator_degrees(self, s: int) -> tuple[int, ...]:
        return self.stages[s].source.degrees

    @property
    def safe_t(self) -> int:
        return self.t_max - self.guard

    def euler_window(self) -> int:
        """Largest t with F_{s_max+1} provably zero in degrees <= t.

        Generators of a minimal resolution of a module whose generators sit
        in degrees >= b have degree >= b + s, so the truncated alternating
        sum is exact for t <= b + s_max.
        """
        if not self.module.generators:
            return self.safe_t
        bottom = min(d for _, d in self.module.generators)
        return min(self.safe_t, bottom + self.s_max)

    def euler_sum(self, t: int) -> int:
        return sum((-1) ** s * self.free(s).dim(t) for s in range(len(self.stages)))

    def d_matrix(self, s: int, t: int) -> BitMatrix:
        return self.stages[s].matrix(t)

    def dump(self) -> str:
        """Text listing: a ``gen`` line then a ``diff`` line per generator, ascending (s, t, idx)."""
        lines = []
        for s, d in enumerate(self.stages):
            src, tgt = d.source, d.target
            for i, deg in enumerate(src.degrees):
                lines.append(f"gen s={s} t={deg} idx={i}")
                lines.append(f"diff s={s} idx={i} -> {tgt.format_element(d.images[i])}")
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class ExtTable:
    dims: dict = field(default_factory=dict)  # (s, t) -> int, nonzero entries only
    s_max: int = 0
    t_max: int = 0
    safe_t: int = 0

    def get(self, s: int, t: int) -> int:
        return self.dims.get((s, t), 0)

    def trusted(self, s: int, t: int) -> bool:
        return 0 <= s <= self.s_max and t <= self.safe_t

    def total(self) -> int:
        return sum(self.dims.values())


def _stage_module(algebra, degrees, s):
    return FreeModule(algebra, tuple(degrees), tuple(f"g{s}_{i}" for i in range(len(degrees))))


def minimal_resolution(m: FPModule, s_max: int, t_max: int, guard: int = 0) -> Resolution:
    if s_max < 0 or t_max < 0:
        raise ValueError("s_max and t_max must be nonnegative")
    alg = m.algebra
    stages: list[FreeMap] = []
    target = m.free
    # columns of the previous differential, per degree, in target coordinates
    prev_cols: Optional[list[list[int]]] = None

    for s in range(s_max + 1):
        degrees: list[int] = []
        images: list[dict] = []
        cols_by_t: list[list[int]] = []
        for t in range(t_max + 1):
            if s == 0:
                span = m.relation_span(t)
                ech = Echelon()
                for row in span.rows():
                    ech.add(row)
                wanted = [1 << k for k in range(target.dim(t))]
            else:
                ech = Echelon()
                wanted = _kernel(prev_cols[t], stages[-1].target, m, s - 1, t)
            cols = []
            for j, d in enumerate(degrees):
                for b in steenrod.basis_in_degree(alg, t - d).elements:
                    v = target.coordinates(act(b, images[j]), t)
                    cols.append(v)
                    ech.add(v)
            for v in wanted:
                if ech.add(v):
                    degrees.append(t)
                    images.append(target.element(v, t))
                    cols.append(v)
            cols_by_t.append(cols)
        source = _stage_module(alg, degrees, s)
        stages.append(FreeMap(source, target, tuple(images)))
        target = source
        prev_cols = cols_by_t

    top_kernel = tuple(
        len(_kernel(prev_cols[t], stages[-1].target, m, s_max, t)) for t in range(t_max + 1)
    )
    return Resolution(m, s_max, t_max, tuple(stages), top_kernel, guard)


def _kernel(cols: list[int], target: FreeModule, m: FPModule, s: int, t: int) -> list[int]:
    """Kernel of d_s in degree t, where d_0 is read modulo the relations."""
    if s == 0:
        span = m.relation_span(t)
        cols = [span.reduce(c) for c in cols]
    mat = BitMatrix.from_columns(cols, target.dim(t))
    return [v.bits for v in kernel_basis(mat)]


def ext_table(res: Resolution) -> ExtTable:
    dims: dict = {}
    for s, d in enumerate(res.stages):
        for deg in d.source.degrees:
            dims[(s, deg)] = dims.get((s, deg), 0) + 1
    return ExtTable(dims, res.s_max, res.t_max, res.safe_t)


def ext_dims(m: FPModule, s_max: int, t_max: int, guard: int = 0) -> ExtTable:
    return ext_table(minimal_resolution(m, s_max, t_max, guard))


def check_d_squared(res: Resolution) -> list[tuple[int, int]]:
    """(s, t) pairs where d_{s-1} d_s fails to vanish; d_0 d_1 is taken modulo relations."""
    bad = []
    for s in range(1, len(res.stages)):
        for t in range(res.t_max + 1):
            comp = res.d_matrix(s - 1, t) @ res.d_matrix(s, t)
            if s == 1:
                span = res.module.relation_span(t)
                cols = [span.reduce(comp.column_bits(j)) for j in range(comp.cols)]
                ok = not any(cols)
            else:
                ok = not any(comp.data)
            if not ok:
                bad.append((s, t))
    return bad


def check_minimal(res: Resolution) -> bool:
    """No differential of stage s >= 1 has a unit (degree-zero) coefficient."""
    for d in res.stages[1:]:
        for img in d.images:
            if any(a.degree == 0 and not a.is_zero() for a in img.values()):
                return False
    return True


def check_exact(res: Resolution) -> list[tuple[int, int]]:
    """(s, t) pairs where im d_{s+1} != ker d_s, for s < s_max; s = -1 checks surjectivity."""
    bad = []
    m = res.module
    for t in range(res.safe_t + 1):
        # surjectivity onto the module
        d0 = res.d_matrix(0, t)
        span = m.relation_span(t)
        ech = Echelon()
        for row in span.rows():
            ech.add(row)
        for j in range(d0.cols):
            ech.add(d0.column_bits(j))
        if len(ech) != m.free.dim(t):
            bad.append((-1, t))
        for s in range(len(res.stages) - 1):
            ds = res.d_matrix(s, t)
            if s == 0:
                cols = [span.reduce(ds.column_bits(j)) for j in range(ds.cols)]
                ds = BitMatrix.from_columns(cols, ds.rows)
            ker = ds.cols - rank(ds)
            im = rank(res.d_matrix(s + 1, t))
            if ker != im:
                bad.append((s, t))
    return bad
