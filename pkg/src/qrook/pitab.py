"""Standard Young tableaux restricted by a Dyck path order, and their weights.

A pi-tableau is a standard Young tableau in which every entry is
``<_pi``-greater than the entry directly above it.  Summing the weight
``wt(T; q)`` over pi-tableaux whose first row has length n - k gives the
q-rook number R_k of the partition above the path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .qalg import ONE, ZERO, LaurentPoly, q_number
from .shapes import Box, DyckPath, Partition, partition_to_path, partitions

__all__ = [
    "PiTableau",
    "enumerate_pi_syt",
    "gamma",
    "gamma_at",
    "arm_less_pi",
    "weight",
    "rk_tableaux",
    "c_coefficient",
    "rk_abelian",
    "stirling2_tableaux",
]


@dataclass(frozen=True)
class PiTableau:
    path: DyckPath
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = Partition(len(r) for r in self.rows)
        n = self.path.n
        values = sorted(v for r in self.rows for v in r)
        if values != list(range(1, n + 1)):
            raise ValueError(f"{self.rows} is not a filling of [1..{n}]")
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                if c and row[c - 1] >= v:
                    raise ValueError(f"row {r + 1} of {self.rows} does not increase")
                if r:
                    above = self.rows[r - 1][c]
                    if not self.path.less(above, v):
                        raise ValueError(f"{above} above {v} violates the path order")
        object.__setattr__(self, "_shape", shape)

    @classmethod
    def _unchecked(cls, path: DyckPath, rows, shape: Partition) -> "PiTableau":
        T = object.__new__(cls)
        object.__setattr__(T, "path", path)
        object.__setattr__(T, "rows", rows)
        object.__setattr__(T, "_shape", shape)
        return T

    @property
    def shape(self) -> Partition:
        return self._shape

    def __getitem__(self, b: Box) -> int:
        return self.rows[b.row - 1][b.col - 1]

    @cached_property
    def positions(self) -> dict[int, Box]:
        return {v: Box(r, c) for r, row in enumerate(self.rows, 1) for c, v in enumerate(row, 1)}

    def boxes(self) -> Iterator[Box]:
        return self.shape.boxes()

    def reading_word(self) -> str:
        """Rows top to bottom separated by ``/``, e.g. ``123/45/6``."""
        sep = "," if self.path.n > 9 else ""
        return "/".join(sep.join(map(str, r)) for r in self.rows)

    def __str__(self) -> str:
        return self.reading_word()


def enumerate_pi_syt(pi: DyckPath, mu) -> list[PiTableau]:
    """All pi-tableaux of shape mu, built by placing 1, 2, ..., n into corners."""
    mu = Partition(mu)
    n = pi.n
    if mu.size != n:
        raise ValueError(f"shape {mu} has size {mu.size}, path has semilength {n}")
    rows: list[list[int]] = [[] for _ in mu]
    out: list[PiTableau] = []

    def place(v: int) -> None:
        if v > n:
            out.append(PiTableau._unchecked(pi, tuple(tuple(r) for r in rows), mu))
            return
        for r in range(len(mu)):
            c = len(rows[r])
            if c >= mu[r]:
                continue
            if r and len(rows[r - 1]) <= c:
                continue
            if r and not pi.less(rows[r - 1][c], v):
                continue
            rows[r].append(v)
            place(v + 1)
            rows[r].pop()

    place(1)
    return out


def gamma_at(T: PiTableau, b: Box) -> int:
    """Boxes c in strictly higher rows with (T(c), T(b)) in the area."""
    area = T.path.area
    tb = T[b]
    return sum(1 for c in T.boxes() if c.row < b.row and (T[c], tb) in area)


def gamma(T: PiTableau) -> int:
    area = T.path.area
    total = 0
    for b in T.boxes():
        for c in T.boxes():
            if b.row > c.row and (T[c], T[b]) in area:
                total += 1
    return total


def arm_less_pi(T: PiTableau, b: Box, j: int) -> int:
    """Boxes to the right of b in its row whose entry is <_pi j."""
    row = T.rows[b.row - 1]
    return sum(1 for v in row[b.col:] if T.path.less(v, j))


def _arm_product(T: PiTableau) -> LaurentPoly:
    result = ONE
    for b in T.boxes():
        if b.row > 1:
            result = result * q_number(arm_less_pi(T, b.up(), T[b]) + 1)
    return result


def weight(T: PiTableau) -> LaurentPoly:
    """wt(T; q); individual weights may carry negative powers of q."""
    e = T.shape.n_prime() - T.path.area_size + gamma(T)
    return _arm_product(T).shift(e)


def _reduced_weight(T: PiTableau) -> LaurentPoly:
    return _arm_product(T).shift(gamma(T))


def rk_tableaux(pi: DyckPath, k: int) -> LaurentPoly:
    """R_k(lambda(pi)) as a sum of tableau weights over shapes with first row n - k."""
    n = pi.n
    if k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE if k == 0 else ZERO
    total = ZERO
    for mu in partitions(n):
        if mu[0] != n - k:
            continue
        for T in enumerate_pi_syt(pi, mu):
            total = total + weight(T)
    if not (total.is_polynomial() and (total.is_zero() or total.is_nonnegative())):
        raise ArithmeticError(f"tableau sum {total} for {pi}, k={k} is not a positive polynomial")
    return total


def c_coefficient(pi: DyckPath, mu) -> LaurentPoly:
    """Sum over pi-tableaux of shape mu of q^gamma(T) times the arm product."""
    mu = Partition(mu)
    total = ZERO
    for T in enumerate_pi_syt(pi, mu):
        total = total + _reduced_weight(T)
    if not (total.is_polynomial() and (total.is_zero() or total.is_nonnegative())):
        raise ArithmeticError(f"c coefficient {total} for {pi}, {mu} is not in Z>=0[q]")
    return total


def rk_abelian(lam, N: int, k: int) -> LaurentPoly:
    """R_k(lam) from the single two-row shape (N-k, k), valid when N >= lam_1 + lam'_1."""
    lam = Partition(lam)
    if lam and N < lam[0] + len(lam):
        raise ValueError(f"N={N} is smaller than lam_1 + lam'_1 for {lam}")
    if k < 0 or k > N - k:
        return ZERO
    pi = partition_to_path(lam, N)
    c = c_coefficient(pi, Partition((N - k, k)))
    return c.shift(lam.size - (N - k) * k)


def stirling2_tableaux(n: int, k: int) -> LaurentPoly:
    """S_q(n, k) summed over ordinary standard tableaux with first row k."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    chain = DyckPath("NE" * n)  # <_pi is the usual order on [n]
    total = ZERO
    for mu in partitions(n):
        if mu[0] != k:
            continue
        for T in enumerate_pi_syt(chain, mu):
            total = total + _arm_product(T).shift(mu.n_prime())
    return total
