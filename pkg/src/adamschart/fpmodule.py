"""Free and finitely presented graded modules over A or A(n).

An element of a free module is a dict ``{generator index: AlgebraElement}``
with only nonzero coefficients, homogeneous of one total degree.  Degreewise
coordinates list, for each generator j in order, the algebra basis in
degree ``t - deg(g_j)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import steenrod
from .f2core import BitMatrix, Echelon
from .steenrod import A, A1, Algebra, AlgebraElement

FreeElement = dict  # {int: AlgebraElement}


def element_degree(x: FreeElement, degrees: Sequence[int]) -> Optional[int]:
    ds = {degrees[j] + a.degree for j, a in x.items()}
    if len(ds) > 1:
        raise ValueError("inhomogeneous element")
    return ds.pop() if ds else None


def add_elements(x: FreeElement, y: FreeElement) -> FreeElement:
    out = dict(x)
    for j, a in y.items():
        if j in out:
            s = out[j] + a
            if s.is_zero():
                del out[j]
            else:
                out[j] = s
        elif not a.is_zero():
            out[j] = a
    return out


def act(a: AlgebraElement, x: FreeElement) -> FreeElement:
    """Left action a * x."""
    out = {}
    for j, c in x.items():
        p = steenrod.multiply(a, c)
        if not p.is_zero():
            out[j] = p
    return out


@dataclass(frozen=True)
class FreeModule:
    algebra: Algebra
    degrees: tuple[int, ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if any(d < 0 for d in self.degrees):
            raise ValueError("generator degrees must be nonnegative")
        if self.names is not None and len(self.names) != len(self.degrees):
            raise ValueError("one name per generator")

    def name(self, j: int) -> str:
        return self.names[j] if self.names is not None else f"g{j}"

    def blocks(self, t: int) -> list[tuple[int, int, steenrod.AlgebraBasis]]:
        """(generator, offset, algebra basis) for each generator contributing in degree t."""
        out = []
        off = 0
        for j, d in enumerate(self.degrees):
            if d > t:
                continue
            b = steenrod.basis_in_degree(self.algebra, t - d)
            if len(b):
                out.append((j, off, b))
                off += len(b)
        return out

    def dim(self, t: int) -> int:
        return sum(len(steenrod.basis_in_degree(self.algebra, t - d)) for d in self.degrees if d <= t)

    def coordinates(self, x: FreeElement, t: int) -> int:
        out = 0
        for j, off, basis in self.blocks(t):
            c = x.get(j)
            if c is not None and not c.is_zero():
                if c.degree != t - self.degrees[j]:
                    raise ValueError("element not in degree t")
                out |= basis.coordinates(c) << off
        for j, c in x.items():
            if not c.is_zero() and self.degrees[j] + c.degree != t:
                raise ValueError("element not in degree t")
        return out

    def element(self, coords: int, t: int) -> FreeElement:
        out = {}
        for j, off, basis in self.blocks(t):
            part = (coords >> off) & ((1 << len(basis)) - 1)
            if part:
                out[j] = basis.element(part)
        return out

    def basis_elements(self, t: int) -> list[tuple[int, AlgebraElement]]:
        """Basis of degree t as (generator, algebra basis element), in coordinate order."""
        return [(j, b) for j, _, basis in self.blocks(t) for b in basis.elements]

    def format_element(self, x: FreeElement) -> str:
        if not x:
            return "0"
        parts = []
        for j in sorted(x):
            for m in x[j].sorted_terms():
                parts.append(f"{steenrod.format_monomial(m)}*{self.name(j)}")
        return "+".join(parts)


@dataclass(frozen=True)
class FreeMap:
    """Graded map between free modules, stored by the images of source generators."""

    source: FreeModule
    target: FreeModule
    images: tuple[FreeElement, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source.degrees):
            raise ValueError("one image per source generator")
        for j, x in enumerate(self.images):
            for i, a in x.items():
                if a.degree != self.source.degrees[j] - self.target.degrees[i]:
                    raise ValueError(f"entry ({i},{j}) has the wrong degree")

    def entry(self, i: int, j: int) -> AlgebraElement:
        a = self.images[j].get(i)
        if a is None:
            return AlgebraElement.zero(self.source.algebra, self.source.degrees[j] - self.target.degrees[i])
        return a

    def apply(self, x: FreeElement) -> FreeElement:
        out: FreeElement = {}
        for j, a in x.items():
            out = add_elements(out, act(a, self.images[j]))
        return out

    def matrix(self, t: int) -> BitMatrix:
        cols = [
            self.target.coordinates(act(b, self.images[j]), t)
            for j, b in self.source.basis_elements(t)
        ]
        return BitMatrix.from_columns(cols, self.target.dim(t))

    def compose(self, inner: "FreeMap") -> "FreeMap":
        """self after inner."""
        if inner.target != self.source:
            raise ValueError("maps do not compose")
        return FreeMap(inner.source, self.target, tuple(self.apply(x) for x in inner.images))


_TERM = re.compile(r"\s*(?:(Sq\([^)]*\)|1)\s*\*\s*)?([A-Za-z_][\w']*)\s*")


@dataclass(frozen=True)
class FPModule:
    algebra: Algebra
    generators: tuple[tuple[str, int], ...]
    relations: tuple[FreeElement, ...] = ()
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        names = [g for g, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator name")
        for r in self.relations:
            if not r:
                raise ValueError("zero relation")
            element_degree(r, self.free.degrees)
            for a in r.values():
                if not steenrod.in_algebra(a, self.algebra):
                    raise ValueError(f"coefficient {a} is not in {self.algebra}")

    @property
    def free(self) -> FreeModule:
        return FreeModule(self.algebra, tuple(d for _, d in self.generators), tuple(g for g, _ in self.generators))

    def relation_degrees(self) -> list[int]:
        return [element_degree(r, self.free.degrees) for r in self.relations]

    def relation_span(self, t: int) -> Echelon:
        """Degree-t part of the submodule generated by the relations."""
        key = ("rel", t)
        if key not in self._cache:
            free = self.free
            ech = Echelon()
            for r, e in zip(self.relations, self.relation_degrees()):
                if e > t:
                    continue
                for b in steenrod.basis_in_degree(self.algebra, t - e).elements:
                    ech.add(free.coordinates(act(b, r), t))
            self._cache[key] = ech
        return self._cache[key]

    def dim(self, t: int) -> int:
        return self.free.dim(t) - len(self.relation_span(t))

    def to_text(self) -> str:
        lines = [f"algebra {self.algebra}"]
        lines += [f"gen {g} {d}" for g, d in self.generators]
        lines += [f"rel {self.free.format_element(r)}" for r in self.relations]
        return "\n".join(lines) + "\n"


def module_dim(m: FPModule, d: int) -> int:
    return m.dim(d)


def parse_module(text: str, algebra: Algebra = A, name: str = "") -> FPModule:
    """Parse ``gen <name> <degree>`` / ``rel <sum of term*gen>`` lines.

    An ``algebra A(1)`` line overrides the default algebra; ``#`` starts a
    comment.  Errors name the offending line.
    """
    gens: list[tuple[str, int]] = []
    rel_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "algebra":
            try:
                algebra = Algebra.parse(rest)
            except ValueError as e:
                raise ValueError(f"line {lineno}: {e}") from None
        elif key == "gen":
            parts = rest.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: expected 'gen <name> <degree>'")
            gens.append((parts[0], int(parts[1])))
        elif key == "rel":
            rel_lines.append((lineno, rest))
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    index = {g: j for j, (g, _) in enumerate(gens)}
    rels = []
    for lineno, body in rel_lines:
        r: FreeElement = {}
        for piece in body.split("+"):
            m = _TERM.fullmatch(piece)
            if not m:
                raise ValueError(f"line {lineno}: bad term {piece.strip()!r}")
            mono, g = m.group(1) or "1", m.group(2)
            if g not in index:
                raise ValueError(f"line {lineno}: unknown generator {g!r}")
            a = steenrod.adem_reduce(steenrod.parse_monomial(mono), algebra)
            if not a.is_zero():
                r = add_elements(r, {index[g]: a})
        if r:
            rels.append(r)
    try:
        return FPModule(algebra, tuple(gens), tuple(rels), name=name)
    except ValueError as e:
        raise ValueError(f"invalid module: {e}") from None


PRESETS = ("sphere/A", "sphere/A(1)", "ko-as-A(1)-trivial", "ko-as-A-module", "free/A", "free/A(1)")

# Sq^{2^i} for 2^i <= 2^SPHERE_LOG2_LIMIT; the A-presentation of F_2 is exact below 2^(limit+1)
SPHERE_LOG2_LIMIT = 15


def trivial_module(algebra: Algebra, name: str = "") -> FPModule:
    """F_2 concentrated in degree 0: one generator killed by every Sq^{2^i}.

    Over A(n) the relations are finite.  Over A they are truncated at
    Sq^{2^15}, which is far beyond any degree a resolution here reaches.
    """
    top = algebra.n if algebra.n is not None else SPHERE_LOG2_LIMIT
    rels = tuple({0: AlgebraElement.sq(2**i, algebra=algebra)} for i in range(top + 1))
    return FPModule(algebra, (("i", 0),), rels, name=name)


def preset_module(name: str) -> FPModule:
    """Named modules: the sphere over A or A(1), and H^*(ko) in two guises.

    ``ko-as-A(1)-trivial`` is the trivial A(1)-module F_2; by change of rings
    its Ext over A(1) is Ext over A of A//A(1) = H^*(ko).  ``free/...`` is
    the algebra itself, a free module on one degree-0 generator.
    """
    if name == "sphere/A":
        return trivial_module(A, name)
    if name in ("sphere/A(1)", "ko-as-A(1)-trivial"):
        return trivial_module(A1, name)
    if name == "ko-as-A-module":
        rels = ({0: AlgebraElement.sq(1)}, {0: AlgebraElement.sq(2)})
        return FPModule(A, (("i", 0),), rels, name=name)
    if name in ("free/A", "free/A(1)"):
        return FPModule(A if name == "free/A" else A1, (("i", 0),), (), name=name)
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
