"""Garsia-Remmel q-rook numbers of Ferrers boards, q-Stirling and q-hit numbers."""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb
from typing import Sequence

from .qalg import (
    ONE,
    ZERO,
    LaurentPoly,
    RationalFn,
    q_binomial,
    q_factorial,
    q_number,
)
from .shapes import Box, Partition

__all__ = [
    "RookPlacement",
    "placements",
    "inv_statistic",
    "rk_bruteforce",
    "rk_recursion",
    "rk_rectangle",
    "rk_last",
    "q_stirling2",
    "q_stirling1",
    "q_hit",
    "rk_from_hits",
    "BRUTEFORCE_MAX_CELLS",
]

BRUTEFORCE_MAX_CELLS = 30

RookPlacement = frozenset  # frozenset[Box]


def _q(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


def placements(lam: Sequence[int], k: int) -> list[frozenset[Box]]:
    """All placements of k non-attacking rooks on the board of lam."""
    lam = Partition(lam)
    if k < 0:
        return []
    if k == 0:
        return [frozenset()]
    out = []
    for rows in combinations(range(1, len(lam) + 1), k):
        cap = max(lam[r - 1] for r in rows)
        for cols in permutations(range(1, cap + 1), k):
            if all(c <= lam[r - 1] for r, c in zip(rows, cols)):
                out.append(frozenset(Box(r, c) for r, c in zip(rows, cols)))
    return out


def is_valid_placement(C: frozenset[Box], lam: Sequence[int]) -> bool:
    lam = Partition(lam)
    rows = [b.row for b in C]
    cols = [b.col for b in C]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return False
    return all(1 <= b.row <= len(lam) and 1 <= b.col <= lam[b.row - 1] for b in C)


def inv_statistic(C: frozenset[Box], lam: Sequence[int]) -> int:
    """Cells left after each rook cancels itself, the cells above it and to its left."""
    lam = Partition(lam)
    if not is_valid_placement(C, lam):
        raise ValueError(f"{sorted(C)} is not a rook placement on {lam}")
    cancelled: set[Box] = set()
    for b in C:
        cancelled.update(Box(r, b.col) for r in range(1, b.row + 1))
        cancelled.update(Box(b.row, c) for c in range(1, b.col + 1))
    return lam.size - len(cancelled)


def rk_bruteforce(lam: Sequence[int], k: int) -> LaurentPoly:
    lam = Partition(lam)
    if lam.size > BRUTEFORCE_MAX_CELLS:
        raise ValueError(f"board {lam} has more than {BRUTEFORCE_MAX_CELLS} cells")
    c: dict[int, int] = {}
    for C in placements(lam, k):
        e = inv_statistic(C, lam)
        c[e] = c.get(e, 0) + 1
    return LaurentPoly(c)


def rk_recursion(lam: Sequence[int], k: int) -> LaurentPoly:
    """Row-removal recursion with R_0 = q^|lam|."""
    memo: dict[tuple[tuple[int, ...], int], LaurentPoly] = {}

    def R(parts: tuple[int, ...], j: int) -> LaurentPoly:
        if j < 0:
            return ZERO
        if j == 0:
            return _q(sum(parts))
        if not parts or j > parts[0] or j > len(parts):
            return ZERO
        key = (parts, j)
        if key not in memo:
            top, rest = parts[0], parts[1:]
            memo[key] = _q(top - j) * R(rest, j) + q_number(top - j + 1) * R(rest, j - 1)
        return memo[key]

    return R(tuple(Partition(lam)), k)


def rk_rectangle(a: int, b: int, i: int) -> LaurentPoly:
    """R_i of the board with a rows of length b."""
    if not 0 <= i <= min(a, b):
        raise ValueError(f"need 0 <= i <= min(a, b), got i={i}, a={a}, b={b}")
    falling = q_factorial(a).divmod_exact(q_factorial(a - i))
    return _q((a - i) * (b - i)) * falling * q_binomial(b, i)


def rk_last(lam: Sequence[int]) -> LaurentPoly:
    """R_l(lam) for l = length of lam, as a product of q-numbers."""
    lam = Partition(lam)
    l = len(lam)
    result = ONE
    for i in range(1, l + 1):
        arg = lam[l - i] - i + 1
        if arg < 0:
            raise ValueError(f"product formula does not apply to {lam}: factor [{arg}]_q")
        result = result * q_number(arg)
    return result


def q_stirling2(n: int, k: int) -> LaurentPoly:
    """S_q(n, k) = q^(k-1) S_q(n-1, k-1) + [k]_q S_q(n-1, k)."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    row = [ONE]  # S_q(0, 0..0)
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            v = ZERO
            if 1 <= j <= m and j - 1 < len(row):
                v = v + _q(j - 1) * row[j - 1]
            if j < len(row):
                v = v + q_number(j) * row[j]
            new.append(v)
        row = new
    return row[k]


def q_stirling1(n: int, k: int) -> LaurentPoly:
    """s_q(n, k): coefficient of z^(n-k) in prod_{i<n} (1 + [i]_q z)."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    poly = [ONE]  # coefficients in z
    for i in range(n):
        qi = q_number(i)
        nxt = poly + [ZERO]
        for d in range(len(poly)):
            nxt[d + 1] = nxt[d + 1] + qi * poly[d]
        poly = nxt
    return poly[n - k]


def _check_hit_shape(lam: Partition, m: int, n: int) -> None:
    if n > m:
        raise ValueError(f"q-hit numbers need n <= m, got m={m}, n={n}")
    if not lam.fits_in(m, n):
        raise ValueError(f"{lam} does not fit in ({m}^{n})")


def q_hit(lam: Sequence[int], m: int, n: int, k: int) -> RationalFn:
    """H_k^{m,n}(lam; q), the q-hit number of lam inside the m x n rectangle.

    The defining sum is divided by [m-n]_q!; the result is checked to be a
    Laurent polynomial.
    """
    lam = Partition(lam)
    _check_hit_shape(lam, m, n)
    if k < 0 or k > n:
        return RationalFn(0)
    total = ZERO
    for i in range(k, n + 1):
        term = rk_recursion(lam, i) * q_factorial(m - i) * q_binomial(i, k)
        term = term * _q(m * i - comb(i, 2))
        total = total + (term if (i + k) % 2 == 0 else -term)
    total = total * _q(comb(k, 2) - lam.size)
    result = RationalFn(total) / RationalFn(q_factorial(m - n))
    if not result.is_laurent():
        raise ArithmeticError(f"q_hit({lam}, {m}, {n}, {k}) = {result} is not a Laurent polynomial")
    return result


def rk_from_hits(lam: Sequence[int], m: int, n: int, k: int,
                 hits: Sequence[RationalFn] | None = None) -> RationalFn:
    """Recover R_k(lam) from the q-hit numbers H_k..H_n (inverse relation)."""
    lam = Partition(lam)
    _check_hit_shape(lam, m, n)
    if hits is None:
        hits = [q_hit(lam, m, n, j) for j in range(n + 1)]
    s = RationalFn(0)
    for j in range(k, n + 1):
        s = s + hits[j] * RationalFn(q_binomial(j, k).subs_inverse())
    scale = RationalFn(_q(lam.size - m * k) * q_factorial(m - n)) / RationalFn(q_factorial(m - k))
    return scale * s
