"""Count matrices over a prime field by rank, with support above a Dyck path."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .rook import rk_recursion
from .shapes import Box, DyckPath

__all__ = [
    "ENUMERATION_LIMIT",
    "SupportMask",
    "is_prime",
    "rank_mod_p",
    "count_by_rank",
    "count_by_formula",
]

ENUMERATION_LIMIT = 2 ** 24


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class SupportMask:
    """The cells of lambda(pi), as (row, column) positions in the n x n grid."""

    path: DyckPath

    @property
    def cells(self) -> tuple[Box, ...]:
        return tuple(self.path.partition.boxes())

    @property
    def size(self) -> int:
        return self.path.partition.size


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _check(pi: DyckPath, p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    size = pi.partition.size
    if p ** size > ENUMERATION_LIMIT:
        raise ValueError(f"{p}^{size} assignments exceed the enumeration limit {ENUMERATION_LIMIT}")


def count_by_rank(pi: DyckPath, p: int) -> list[int]:
    """Entry k counts the matrices of rank k, for k = 0 .. min(lambda_1, l(lambda))."""
    _check(pi, p)
    lam = pi.partition
    top = min(lam[0], len(lam)) if lam else 0
    counts = [0] * (top + 1)
    if not lam:
        counts[0] = 1
        return counts
    cells = list(lam.boxes())
    for values in product(range(p), repeat=len(cells)):
        mat = [[0] * lam[0] for _ in lam]
        for b, v in zip(cells, values):
            mat[b.row - 1][b.col - 1] = v
        counts[rank_mod_p(mat, p)] += 1
    return counts


def count_by_formula(pi: DyckPath, p: int, k: int) -> int:
    """(p-1)^k p^{|lambda| - k} R_k(lambda; 1/p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    lam = pi.partition
    r = rk_recursion(lam, k)
    if r.is_zero():
        return 0
    value = Fraction(p - 1) ** k * Fraction(p) ** (lam.size - k) * Fraction(r(Fraction(1, p)))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral count {value} for {pi}, p={p}, k={k}")
    return int(value)
