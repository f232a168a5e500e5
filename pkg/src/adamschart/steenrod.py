"""The mod 2 Steenrod algebra in the admissible basis, and its subalgebras A(n).

A monomial ``Sq^{i1} ... Sq^{ik}`` is a tuple ``(i1, ..., ik)`` of positive
ints; ``()`` is the unit.  An element is a frozenset of admissible
monomials of a single degree (coefficients are mod 2, so a set suffices and
addition is symmetric difference).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .f2core import BitMatrix, Echelon

Monomial = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Algebra:
    """Algebra tag: ``n=None`` is the full algebra A, otherwise A(n)."""

    n: Optional[int] = None

    def __post_init__(self):
        if self.n is not None and self.n < 0:
            raise ValueError("A(n) needs n >= 0")

    @property
    def is_full(self) -> bool:
        return self.n is None

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        if self.n is None:
            raise ValueError("A is not finitely generated")
        return tuple(2**i for i in range(self.n + 1))

    @property
    def top_degree(self) -> Optional[int]:
        """Degree of the top class of A(n); None for A."""
        if self.n is None:
            return None
        # dual is F2[xi_1..xi_{n+1}]/(xi_i^{2^{n+2-i}}), |xi_i| = 2^i - 1
        return sum((2 ** (self.n + 2 - i) - 1) * (2**i - 1) for i in range(1, self.n + 2))

    def __str__(self) -> str:
        return "A" if self.n is None else f"A({self.n})"

    @classmethod
    def parse(cls, text: str) -> "Algebra":
        text = text.strip()
        if text == "A":
            return cls(None)
        m = re.fullmatch(r"A\((\d+)\)", text)
        if not m:
            raise ValueError(f"unknown algebra {text!r}")
        return cls(int(m.group(1)))


A = Algebra(None)
A1 = Algebra(1)


def binom2(n: int, k: int) -> int:
    """binom(n, k) mod 2 via Lucas: odd iff the bits of k are a subset of n's."""
    if n < 0 or k < 0 or k > n:
        return 0
    return 1 if (k & n) == k else 0


def is_admissible(word: Iterable[int]) -> bool:
    w = tuple(word)
    return all(w[j] >= 2 * w[j + 1] for j in range(len(w) - 1)) and all(i > 0 for i in w)


@lru_cache(maxsize=None)
def _reduce(word: Monomial) -> frozenset:
    for j in range(len(word) - 1):
        a, b = word[j], word[j + 1]
        if a < 2 * b:
            out: set = set()
            head, tail = word[:j], word[j + 2 :]
            for c in range(a // 2 + 1):
                if binom2(b - c - 1, a - 2 * c):
                    mid = (a + b - c, c) if c else (a + b - c,)
                    out ^= _reduce(head + mid + tail)
            return frozenset(out)
    return frozenset({word})


def _reduce_word(word: Monomial) -> frozenset:
    # lru_cache tolerates concurrent fills; racing writers store equal values
    return _reduce(tuple(i for i in word if i != 0))


@dataclass(frozen=True)
class AlgebraElement:
    algebra: Algebra
    degree: int
    terms: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for m in self.terms:
            if sum(m) != self.degree:
                raise ValueError(f"monomial {m} not of degree {self.degree}")
            if not is_admissible(m):
                raise ValueError(f"monomial {m} is not admissible")

    @classmethod
    def zero(cls, algebra: Algebra, degree: int) -> "AlgebraElement":
        return cls(algebra, degree, frozenset())

    @classmethod
    def unit(cls, algebra: Algebra = A) -> "AlgebraElement":
        return cls(algebra, 0, frozenset({()}))

    @classmethod
    def sq(cls, *exponents: int, algebra: Algebra = A) -> "AlgebraElement":
        """The product Sq^{e1} ... Sq^{ek}, reduced to admissibles."""
        return adem_reduce(exponents, algebra)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.algebra != self.algebra:
            raise ValueError(f"algebra mismatch: {self.algebra} vs {other.algebra}")
        if not other.terms:
            return self
        if not self.terms:
            return other
        if other.degree != self.degree:
            raise ValueError("adding elements of different degrees")
        return AlgebraElement(self.algebra, self.degree, self.terms ^ other.terms)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(format_monomial(m) for m in self.sorted_terms())


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "Sq(" + ",".join(str(i) for i in m) + ")"


_MONO = re.compile(r"\s*(?:Sq\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)|(1))\s*")


def parse_monomial(text: str) -> Monomial:
    m = _MONO.fullmatch(text)
    if not m:
        raise ValueError(f"bad monomial {text!r}")
    if m.group(2):
        return ()
    return tuple(int(x) for x in m.group(1).split(","))


def parse_element(text: str, algebra: Algebra = A) -> AlgebraElement:
    """Parse ``Sq(3,1)+Sq(4)``; words need not be admissible, they get reduced."""
    text = text.strip()
    if text == "0":
        raise ValueError("the zero element has no degree; write it as an empty sum elsewhere")
    out: Optional[AlgebraElement] = None
    for part in _split_plus(text):
        x = adem_reduce(parse_monomial(part), algebra)
        out = x if out is None else out + x
    assert out is not None
    return out


def _split_plus(text: str) -> list[str]:
    # '+' never appears inside Sq(...), so a plain split is safe
    parts = [p for p in text.split("+")]
    if any(not p.strip() for p in parts):
        raise ValueError(f"empty summand in {text!r}")
    return parts


def adem_reduce(word: Iterable[int], algebra: Algebra = A) -> AlgebraElement:
    """Rewrite Sq^{a1}...Sq^{ak} as a sum of admissible monomials."""
    w = tuple(word)
    if any(i < 0 for i in w):
        raise ValueError("exponents must be nonnegative")
    return AlgebraElement(algebra, sum(w), _reduce_word(w))


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.algebra != y.algebra:
        raise ValueError(f"algebra mismatch: {x.algebra} vs {y.algebra}")
    out: set = set()
    for a in x.terms:
        for b in y.terms:
            out ^= _reduce_word(a + b)
    return AlgebraElement(x.algebra, x.degree + y.degree, frozenset(out))


@lru_cache(maxsize=None)
def admissible_monomials(d: int) -> tuple[Monomial, ...]:
    """All admissible sequences of degree d, sorted lexicographically."""
    out: list[Monomial] = []

    def extend(prefix: Monomial, remaining: int, cap: int):
        # next entry i must satisfy prev >= 2i, i.e. i <= cap
        if remaining == 0:
            out.append(prefix)
            return
        for i in range(1, min(cap, remaining) + 1):
            extend(prefix + (i,), remaining - i, i // 2)

    extend((), d, d)
    return tuple(sorted(out))


@dataclass(frozen=True)
class AlgebraBasis:
    """Ordered basis of one degree of A or A(n).

    For A every element is a single admissible monomial.  A(n) is not
    spanned by admissible monomials (in degree 5 of A(1) the only class is
    Sq(4,1)+Sq(5)), so its basis is the reduced echelon basis of the
    subspace in admissible coordinates; ``pivots[k]`` is the leading
    monomial of ``elements[k]`` and occurs in no other basis element.
    """

    algebra: Algebra
    degree: int
    elements: tuple[AlgebraElement, ...]
    pivots: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return self.pivots

    def coordinates(self, x: AlgebraElement) -> int:
        """Bitset of coordinates of x; raises if x is not in the span."""
        if x.is_zero():
            return 0
        if x.degree != self.degree:
            raise ValueError("degree mismatch")
        out = 0
        residual = set(x.terms)
        for k, p in enumerate(self.pivots):
            if p in residual:
                out |= 1 << k
                residual ^= self.elements[k].terms
        if residual:
            raise ValueError(f"{x} is not in {self.algebra} in degree {self.degree}")
        return out

    def element(self, coords: int) -> AlgebraElement:
        out: set = set()
        k = 0
        while coords:
            if coords & 1:
                out ^= self.elements[k].terms
            coords >>= 1
            k += 1
        return AlgebraElement(self.algebra, self.degree, frozenset(out))

    def contains(self, x: AlgebraElement) -> bool:
        try:
            self.coordinates(x)
        except ValueError:
            return False
        return True


@lru_cache(maxsize=None)
def basis_in_degree(algebra: Algebra, d: int) -> AlgebraBasis:
    if d < 0:
        return AlgebraBasis(algebra, d, (), ())
    if algebra.is_full:
        monos = admissible_monomials(d)
        elems = tuple(AlgebraElement(algebra, d, frozenset({m})) for m in monos)
        return AlgebraBasis(algebra, d, elems, monos)
    if d == 0:
        return AlgebraBasis(algebra, 0, (AlgebraElement.unit(algebra),), ((),))
    # closure: A(n)_d is spanned by Sq^{2^i} times A(n)_{d-2^i}
    full = admissible_monomials(d)
    index = {m: k for k, m in enumerate(full)}
    span = Echelon()
    for g in algebra.generator_degrees:
        if g > d:
            break
        for x in basis_in_degree(algebra, d - g).elements:
            prod = multiply(AlgebraElement(algebra, g, frozenset({(g,)})), x)
            vec = 0
            for m in prod.terms:
                vec |= 1 << index[m]
            span.add(vec)
    elems = []
    pivots = []
    for row in span.rows():
        terms = frozenset(full[k] for k in range(len(full)) if (row >> k) & 1)
        elems.append(AlgebraElement(algebra, d, terms))
        pivots.append(full[(row & -row).bit_length() - 1])
    return AlgebraBasis(algebra, d, tuple(elems), tuple(pivots))


def dimension(algebra: Algebra, d: int) -> int:
    return len(basis_in_degree(algebra, d))


def in_algebra(x: AlgebraElement, algebra: Algebra) -> bool:
    if algebra.is_full or x.is_zero():
        return True
    return basis_in_degree(algebra, x.degree).contains(
        AlgebraElement(algebra, x.degree, x.terms)
    )


def left_mult_matrix(algebra: Algebra, g: AlgebraElement, d: int) -> BitMatrix:
    """Matrix of x -> g*x from degree d to degree d + deg g, in basis coordinates."""
    src = basis_in_degree(algebra, d)
    dst = basis_in_degree(algebra, d + g.degree)
    g = AlgebraElement(algebra, g.degree, g.terms)
    cols = [dst.coordinates(multiply(g, x)) for x in src.elements]
    return BitMatrix.from_columns(cols, len(dst))
