"""Partitions, Dyck paths and the conversions between them.

Young diagrams are in English convention: row 1 on top, boxes indexed
``(row, col)`` from 1.  A Dyck path of semilength n is a word in ``N``/``E``;
its area is the set of pairs ``(i, j)``, ``i < j``, of grid cells lying
below the path and strictly above the diagonal, where ``(i, j)`` is the cell
whose north-east corner is the lattice point ``(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "Partition",
    "Box",
    "DyckPath",
    "PiPoset",
    "partitions",
    "partitions_in_box",
    "dyck_paths",
    "conjugate",
    "n_prime",
    "path_to_partition",
    "partition_to_path",
    "hessenberg",
    "hessenberg_to_path",
    "reverse_path",
    "concat",
    "greene_shape",
    "greene_shape_antichains",
    "complement",
    "dominance_leq",
    "GREENE_MAX_N",
]

GREENE_MAX_N = 12


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  Being a tuple, a partition can key a dict.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts {parts} are not weakly decreasing")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,3,3"``; ``"-"`` (or the empty string) is the empty partition."""
        text = text.strip()
        if text in ("", "-"):
            return cls()
        parts = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise ValueError(f"bad partition part {tok!r}")
            parts.append(int(tok))
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def n_prime(self) -> int:
        """n(lambda') = sum of C(lambda_i, 2)."""
        return sum(p * (p - 1) // 2 for p in self)

    def boxes(self) -> Iterator["Box"]:
        for r, p in enumerate(self, start=1):
            for c in range(1, p + 1):
                yield Box(r, c)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def fits_in(self, m: int, n: int) -> bool:
        """True if the diagram fits inside the rectangle (m^n)."""
        return len(self) <= n and (not self or self[0] <= m)

    def add_box(self, row: int) -> "Partition | None":
        """lambda + e_row, or None if that is not a partition."""
        parts = list(self) + [0]
        if row > len(self) + 1:
            return None
        if row > 1 and parts[row - 2] <= parts[row - 1]:
            return None
        parts[row - 1] += 1
        return Partition(parts)

    def remove_box(self, row: int) -> "Partition | None":
        """lambda - e_row, or None if that is not a partition."""
        if row > len(self):
            return None
        parts = list(self) + [0]
        if parts[row - 1] <= parts[row]:
            return None
        parts[row - 1] -= 1
        return Partition(parts)


class Box(NamedTuple):
    row: int
    col: int

    @property
    def coleg(self) -> int:
        return self.row - 1

    @property
    def coarm(self) -> int:
        return self.col - 1

    def up(self) -> "Box":
        if self.row == 1:
            raise ValueError(f"{self} is in the first row")
        return Box(self.row - 1, self.col)

    def arm(self, lam: Partition) -> int:
        return lam[self.row - 1] - self.col

    def leg(self, lam: Partition) -> int:
        return lam.conjugate()[self.col - 1] - self.row


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order ((n) first)."""
    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return tuple(Partition(p) for p in gen(n, n))


def partitions_in_box(m: int, n: int) -> list[Partition]:
    """All partitions fitting inside (m^n), the empty one included."""
    out = []

    def gen(prefix: list[int], cap: int) -> None:
        out.append(Partition(prefix))
        if len(prefix) == n:
            return
        for p in range(1, cap + 1):
            gen(prefix + [p], p)

    gen([], m)
    return out


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path as an N/E word; validated on construction."""

    steps: str

    def __post_init__(self):
        s = self.steps.strip().upper()
        object.__setattr__(self, "steps", s)
        height = 0
        for i, ch in enumerate(s):
            if ch == "N":
                height += 1
            elif ch == "E":
                height -= 1
            else:
                raise ValueError(f"bad step {ch!r} at position {i} in {s!r}")
            if height < 0:
                raise ValueError(f"{s!r} goes below the diagonal at step {i}")
        if height:
            raise ValueError(f"{s!r} has unequal numbers of N and E steps")

    @classmethod
    def parse(cls, text: str) -> "DyckPath":
        """Parse an N/E word; exponent shorthand like ``N3E3N2ENE2`` is accepted."""
        text = text.strip().upper()
        out = []
        i = 0
        while i < len(text):
            ch = text[i]
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            count = int(text[i + 1:j]) if j > i + 1 else 1
            out.append(ch * count)
            i = j
        return cls("".join(out))

    def __str__(self) -> str:
        return self.steps

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """heights[x-1] = y-coordinate of the E step running from column x-1 to x."""
        y = 0
        out = []
        for ch in self.steps:
            if ch == "N":
                y += 1
            else:
                out.append(y)
        return tuple(out)

    @cached_property
    def area(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i, h in enumerate(self.heights, start=1)
            for j in range(i + 1, h + 1)
        )

    @property
    def area_size(self) -> int:
        return len(self.area)

    @cached_property
    def partition(self) -> Partition:
        return path_to_partition(self)

    def less(self, i: int, j: int) -> bool:
        """i <_pi j."""
        return i < j and (i, j) not in self.area

    @cached_property
    def poset(self) -> "PiPoset":
        return PiPoset(self)

    def touch_composition(self) -> tuple[int, ...]:
        """Gaps between successive returns of the path to the diagonal."""
        out = []
        last = 0
        height = 0
        for idx, ch in enumerate(self.steps, start=1):
            height += 1 if ch == "N" else -1
            if height == 0:
                out.append((idx - last) // 2)
                last = idx
        return tuple(out)

    def remove_last_ne(self) -> "DyckPath":
        """Drop the last occurrence of ``NE`` (the top row of the grid)."""
        k = self.steps.rfind("NE")
        return DyckPath(self.steps[:k] + self.steps[k + 2:])


class PiPoset:
    """The partial order on [n] induced by a Dyck path."""

    def __init__(self, path: DyckPath):
        self.path = path
        self.n = path.n

    def less_than(self, i: int, j: int) -> bool:
        return self.path.less(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return i != j and (self.path.less(i, j) or self.path.less(j, i))

    def relations(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(1, self.n + 1), 2) if self.path.less(i, j)]


@lru_cache(maxsize=None)
def dyck_paths(n: int) -> tuple[DyckPath, ...]:
    """All Dyck paths of semilength n."""
    out = []

    def gen(prefix: str, ups: int, downs: int) -> None:
        if ups == downs == n:
            out.append(DyckPath(prefix))
            return
        if ups < n:
            gen(prefix + "N", ups + 1, downs)
        if downs < ups:
            gen(prefix + "E", ups, downs + 1)

    gen("", 0, 0)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    return Partition(lam).conjugate()


def n_prime(lam: Sequence[int]) -> int:
    return Partition(lam).n_prime()


def path_to_partition(pi: DyckPath) -> Partition:
    """Cells above the path, counted row by row from the top."""
    n = pi.n
    h = pi.heights
    return Partition(sum(1 for x in range(n) if h[x] < n + 1 - i) for i in range(1, n + 1))


def partition_to_path(lam: Sequence[int], n: int) -> DyckPath:
    """The unique Dyck path of semilength n whose cells above form lam."""
    lam = Partition(lam)
    for i, p in enumerate(lam, start=1):
        if p > n - i:
            raise ValueError(f"{lam} does not fit under the staircase of size {n}")
    conj = lam.conjugate()
    steps = []
    y = 0
    for x in range(1, n + 1):
        h = n - conj.part(x)
        steps.append("N" * (h - y))
        steps.append("E")
        y = h
    return DyckPath("".join(steps))


def hessenberg(pi: DyckPath) -> tuple[int, ...]:
    n = pi.n
    return tuple(n - p for p in pi.partition.padded(n))


def hessenberg_to_path(m: Sequence[int]) -> DyckPath:
    """Inverse of ``hessenberg``: m must be weakly increasing with i <= m(i) <= n."""
    m = tuple(m)
    n = len(m)
    for i, v in enumerate(m, start=1):
        if not i <= v <= n or (i > 1 and v < m[i - 2]):
            raise ValueError(f"{m} is not a Hessenberg function")
    return partition_to_path(Partition(n - v for v in m), n)


def reverse_path(pi: DyckPath) -> DyckPath:
    swap = {"N": "E", "E": "N"}
    return DyckPath("".join(swap[c] for c in reversed(pi.steps)))


def concat(pi: DyckPath, eta: DyckPath) -> DyckPath:
    return DyckPath(pi.steps + eta.steps)


def _max_union_sizes(n: int, comparable: list[int], chains: bool) -> list[int]:
    """For k = 1..n, the largest union of k chains (or antichains).

    A set is a union of k chains iff its largest antichain has size <= k
    (Dilworth), and a union of k antichains iff its longest chain has size
    <= k (Mirsky), so both reduce to a subset DP.
    """
    full = 1 << n
    # good[S]: S is an antichain (chains=True) or a chain (chains=False)
    good = bytearray(full)
    good[0] = 1
    for s in range(1, full):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        if not good[rest]:
            continue
        if chains:
            ok = (comparable[low] & rest) == 0  # rest must avoid low's comparables
        else:
            ok = (rest & ~comparable[low]) == 0
        good[s] = 1 if ok else 0
    # best[S]: largest good subset of S, i.e. the width (resp. height) of S
    best = [0] * full
    for s in range(1, full):
        if good[s]:
            best[s] = bin(s).count("1")
        else:
            b = 0
            t = s
            while t:
                low = t & -t
                v = best[s ^ low]
                if v > b:
                    b = v
                t ^= low
            best[s] = b
    sizes = [0] * (n + 1)
    for s in range(full):
        c = bin(s).count("1")
        k = best[s]
        if c > sizes[k]:
            sizes[k] = c
    for k in range(1, n + 1):
        sizes[k] = max(sizes[k], sizes[k - 1])
    return sizes[1:]


def greene_shape(pi: DyckPath) -> Partition:
    """Greene shape of (<_pi): conjugate partial sums are maximal unions of chains."""
    n = pi.n
    if n > GREENE_MAX_N:
        raise ValueError(f"greene_shape is limited to semilength {GREENE_MAX_N}, got {n}")
    if n == 0:
        return Partition()
    comparable = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (pi.less(i + 1, j + 1) or pi.less(j + 1, i + 1)):
                comparable[i] |= 1 << j
    # antichain subsets -> width of each subset -> max union of k chains
    sums = _max_union_sizes(n, comparable, chains=True)
    conj = [sums[0]] + [sums[k] - sums[k - 1] for k in range(1, n)]
    return Partition(conj).conjugate()


def greene_shape_antichains(pi: DyckPath) -> Partition:
    """Greene shape read directly from maximal unions of antichains."""
    n = pi.n
    if n > GREENE_MAX_N:
        raise ValueError(f"greene_shape is limited to semilength {GREENE_MAX_N}, got {n}")
    if n == 0:
        return Partition()
    comparable = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (pi.less(i + 1, j + 1) or pi.less(j + 1, i + 1)):
                comparable[i] |= 1 << j
    sums = _max_union_sizes(n, comparable, chains=False)
    return Partition([sums[0]] + [sums[k] - sums[k - 1] for k in range(1, n)])


def complement(lam: Sequence[int], m: int, n: int) -> Partition:
    """Complement of lam inside the rectangle with n rows of length m."""
    lam = Partition(lam)
    if not lam.fits_in(m, n):
        raise ValueError(f"{lam} does not fit in ({m}^{n})")
    padded = lam.padded(n)
    return Partition(m - p for p in reversed(padded))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """a <= b in dominance order."""
    if sum(a) != sum(b):
        raise ValueError(f"{tuple(a)} and {tuple(b)} have different sizes")
    sa = sb = 0
    for k in range(max(len(a), len(b))):
        sa += a[k] if k < len(a) else 0
        sb += b[k] if k < len(b) else 0
        if sa > sb:
            return False
    return True
