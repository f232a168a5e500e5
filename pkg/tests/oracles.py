"""Independent oracles.  Nothing here imports the engine under test.

* ``cobar_ext`` computes Ext_A(F_2, F_2) from the cobar complex of the dual
  Steenrod algebra A_* = F_2[xi_1, xi_2, ...] with the Milnor coproduct.
  It shares no code with the admissible-basis / Adem machinery.
* ``milnor_dim`` counts Milnor basis elements of A in a degree.
* ``a_mod_a1_dim`` counts the basis of A//A(1), dual to F_2[xi_1^4, xi_2^2, xi_3, ...].
* brute-force GF(2) helpers enumerate all vectors.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def xi_degree(i: int) -> int:
    return 2**i - 1


@lru_cache(maxsize=None)
def dual_monomials(d: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors (r_1, r_2, ...) with sum r_i (2^i - 1) = d, trailing zeros stripped."""
    if d == 0:
        return ((),)
    top = 1
    while xi_degree(top + 1) <= d:
        top += 1
    out = []

    def rec(i: int, remaining: int, acc: tuple[int, ...]):
        if i == 0:
            if remaining == 0:
                r = list(reversed(acc))
                while r and r[-1] == 0:
                    r.pop()
                out.append(tuple(r))
            return
        w = xi_degree(i)
        for e in range(remaining // w + 1):
            rec(i - 1, remaining - e * w, acc + (e,))

    rec(top, d, ())
    return tuple(sorted(out))


def milnor_dim(d: int) -> int:
    return len(dual_monomials(d))


def a_mod_a1_dim(d: int) -> int:
    """Monomials xi_1^{4a} xi_2^{2b} xi_3^{c} ... of degree d."""
    return sum(1 for r in dual_monomials(d) if (len(r) < 1 or r[0] % 4 == 0) and (len(r) < 2 or r[1] % 2 == 0))


def _mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    r = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while r and r[-1] == 0:
        r.pop()
    return tuple(r)


def _xi_power(i: int, e: int) -> tuple[int, ...]:
    """Exponent vector of xi_i^e (xi_0 = 1)."""
    if i == 0 or e == 0:
        return ()
    r = [0] * i
    r[i - 1] = e
    return tuple(r)


@lru_cache(maxsize=None)
def coproduct(r: tuple[int, ...]) -> frozenset:
    """Delta(xi^R) as a set of (left, right) exponent pairs, mod 2.

    Delta(xi_k) = sum_{i=0..k} xi_{k-i}^{2^i} (x) xi_i, extended multiplicatively;
    a power xi_k^{r} splits over the binary digits of r by Frobenius.
    """
    terms = {((), ())}
    for k, rk in enumerate(r, start=1):
        e = 0
        while rk:
            if rk & 1:
                factor = [(_xi_power(k - i, 2 ** (i + e)), _xi_power(i, 2**e)) for i in range(k + 1)]
                new: set = set()
                for (l1, r1) in terms:
                    for (l2, r2) in factor:
                        new ^= {(_mono_mul(l1, l2), _mono_mul(r1, r2))}
                terms = new
            rk >>= 1
            e += 1
    return frozenset(terms)


def reduced_coproduct(r: tuple[int, ...]) -> frozenset:
    return coproduct(r) - {(r, ()), ((), r)}


def _mono_deg(r: tuple[int, ...]) -> int:
    return sum(e * xi_degree(i) for i, e in enumerate(r, start=1))


@lru_cache(maxsize=None)
def cobar_basis(s: int, t: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Tensors [a_1|...|a_s] of nonunit monomials with total degree t."""
    if s == 0:
        return ((),) if t == 0 else ()
    out = []
    for comp in _compositions(t, s):
        for combo in itertools.product(*(dual_monomials(d) for d in comp)):
            out.append(combo)
    return tuple(out)


def _compositions(t: int, s: int):
    if s == 1:
        if t >= 1:
            yield (t,)
        return
    for first in range(1, t - s + 2):
        for rest in _compositions(t - first, s - 1):
            yield (first,) + rest


def _rank(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for v in rows:
        while v:
            h = v.bit_length() - 1
            if h in basis:
                v ^= basis[h]
            else:
                basis[h] = v
                break
    return len(basis)


@lru_cache(maxsize=None)
def cobar_rank(s: int, t: int) -> int:
    """Rank of d: C^s_t -> C^{s+1}_t."""
    src = cobar_basis(s, t)
    dst = cobar_basis(s + 1, t)
    if not src or not dst:
        return 0
    index = {x: k for k, x in enumerate(dst)}
    rows = []
    for x in src:
        v = 0
        for i, a in enumerate(x):
            for left, right in reduced_coproduct(a):
                v ^= 1 << index[x[:i] + (left, right) + x[i + 1 :]]
        rows.append(v)
    return _rank(rows)


def cobar_ext(s: int, t: int) -> int:
    """dim Ext_A^{s,t}(F_2, F_2)."""
    dim = len(cobar_basis(s, t))
    return dim - cobar_rank(s, t) - (cobar_rank(s - 1, t) if s > 0 else 0)


def brute_kernel(rows: list[list[int]], ncols: int) -> list[tuple[int, ...]]:
    out = []
    for v in itertools.product((0, 1), repeat=ncols):
        if all(sum(r[j] * v[j] for j in range(ncols)) % 2 == 0 for r in rows):
            out.append(v)
    return out


def brute_solutions(rows: list[list[int]], b: list[int], ncols: int) -> list[tuple[int, ...]]:
    out = []
    for v in itertools.product((0, 1), repeat=ncols):
        if all(sum(r[j] * v[j] for j in range(ncols)) % 2 == b[i] for i, r in enumerate(rows)):
            out.append(v)
    return out


def brute_rank(rows: list[list[int]], ncols: int) -> int:
    # |kernel| = 2^(ncols - rank)
    return ncols - (len(brute_kernel(rows, ncols)).bit_length() - 1)
