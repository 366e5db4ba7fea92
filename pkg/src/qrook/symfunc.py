"""Homogeneous symmetric functions with coefficients in Q(q).

Every basis is stored through its transition matrix to the monomial basis.
The classical bases (e, h, p, s) come from exact counting; the t = 0
modified Macdonald functions come from cocharge Kostka-Foulkes
polynomials, and the q-Whittaker bases are derived from them.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .qalg import RF_ONE, RF_ZERO, LaurentPoly, RationalFn
from .shapes import Partition, partitions

__all__ = [
    "BASES",
    "MAX_DEGREE",
    "SymFunc",
    "basis_element",
    "to_basis",
    "expand_in",
    "omega",
    "product",
    "plethysm_over_qminus1",
    "semistandard_tableaux",
    "kostka",
    "charge",
    "kostka_foulkes",
    "htilde_t0",
    "w_basis_element",
    "wtilde_basis_element",
]

BASES = ("m", "e", "h", "p", "s", "W", "Wtilde", "Htilde0")
MAX_DEGREE = 8

Coeff = RationalFn


def _rf(x) -> RationalFn:
    return x if isinstance(x, RationalFn) else RationalFn(x)


class SymFunc:
    """A symmetric function of fixed degree written in one of ``BASES``."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping[Iterable[int], object] = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.degree = degree
        self.basis = basis
        c: dict[Partition, RationalFn] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for lam, v in items:
            lam = Partition(lam)
            if lam.size != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")
            v = _rf(v)
            s = c.get(lam, RF_ZERO) + v
            if s.is_zero():
                c.pop(lam, None)
            else:
                c[lam] = s
        self.coeffs = c

    @classmethod
    def _raw(cls, degree: int, basis: str, coeffs: dict[Partition, RationalFn]) -> "SymFunc":
        f = object.__new__(cls)
        f.degree, f.basis = degree, basis
        f.coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}
        return f

    @classmethod
    def zero(cls, degree: int, basis: str = "m") -> "SymFunc":
        return cls._raw(degree, basis, {})

    def __getitem__(self, lam) -> RationalFn:
        return self.coeffs.get(Partition(lam), RF_ZERO)

    def items(self) -> Iterator[tuple[Partition, RationalFn]]:
        return iter(sorted(self.coeffs.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self.coeffs

    def to(self, target: str) -> "SymFunc":
        return to_basis(self, target)

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc._raw(self.degree, self.basis, {k: _rf(fn(v)) for k, v in self.coeffs.items()})

    def subs_inverse(self) -> "SymFunc":
        """Substitute q -> 1/q in every coefficient."""
        return self.map_coeffs(lambda v: v.subs_inverse())

    def at(self, x) -> "SymFunc":
        """Specialize q to a number in every coefficient."""
        return self.map_coeffs(lambda v: RationalFn(v(x)))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("adding symmetric functions of different degrees")
        other = to_basis(other, self.basis)
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, RF_ZERO) + v
        return SymFunc._raw(self.degree, self.basis, c)

    def __neg__(self) -> "SymFunc":
        return self.map_coeffs(lambda v: -v)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return product(self, other)
        s = _rf(other)
        return self.map_coeffs(lambda v: v * s)

    def __rmul__(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return NotImplemented
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return self.coeffs == to_basis(other, self.basis).coeffs

    __hash__ = None  # mutable-looking container semantics; compare by value only

    def __repr__(self) -> str:
        body = " + ".join(f"({v})*{self.basis}[{lam}]" for lam, v in self.items()) or "0"
        return f"SymFunc(deg={self.degree}, {body})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "coeffs": {str(lam): str(v) for lam, v in self.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        return cls(
            int(data["degree"]),
            data["basis"],
            {Partition.parse(k): RationalFn.parse(v) for k, v in data["coeffs"].items()},
        )


def basis_element(basis: str, lam: Iterable[int]) -> SymFunc:
    lam = Partition(lam)
    return SymFunc._raw(lam.size, basis, {lam: RF_ONE})


# ---- classical transition matrices ---------------------------------------


def _count_fillings(rows: tuple[int, ...], cols: tuple[int, ...], kind: str) -> int:
    """Coefficient of x^cols in the product over rows of e_r / h_r / p_r.

    Equivalently, the number of matrices with the given row sums and column
    sums whose rows are 0/1 vectors (e), arbitrary (h), or single entries (p).
    """

    @lru_cache(maxsize=None)
    def go(i: int, rem: tuple[int, ...]) -> int:
        if i == len(rows):
            return 1 if not any(rem) else 0
        r = rows[i]
        total = 0
        if kind == "p":
            for j, c in enumerate(rem):
                if c >= r:
                    nxt = list(rem)
                    nxt[j] -= r
                    total += go(i + 1, tuple(sorted(nxt, reverse=True)))
            return total
        for vec in _row_vectors(rem, r, kind == "e"):
            nxt = tuple(sorted((c - x for c, x in zip(rem, vec)), reverse=True))
            total += go(i + 1, nxt)
        return total

    return go(0, tuple(cols))


def _row_vectors(caps: tuple[int, ...], total: int, binary: bool) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    hi = min(caps[0], total, 1 if binary else total)
    for x in range(hi + 1):
        for rest in _row_vectors(caps[1:], total - x, binary):
            yield (x,) + rest


def semistandard_tableaux(shape: Iterable[int], content: Iterable[int]) -> list[tuple[tuple[int, ...], ...]]:
    """SSYT of the given shape and content, built letter by letter as horizontal strips."""
    shape = Partition(shape)
    content = tuple(content)
    if shape.size != sum(content):
        return []
    out = []
    rows: list[list[int]] = [[] for _ in shape]

    def strips(letter_idx: int) -> None:
        if letter_idx == len(content):
            if all(len(r) == p for r, p in zip(rows, shape)):
                out.append(tuple(tuple(r) for r in rows))
            return
        letter = letter_idx + 1
        cur = [len(r) for r in rows]

        def fill(r: int, left: int) -> None:
            if r == len(shape):
                if left == 0:
                    strips(letter_idx + 1)
                return
            # horizontal strip: row r may grow up to the old length of row r-1
            cap = shape[r] if r == 0 else min(shape[r], cur[r - 1])
            room = cap - cur[r]
            for x in range(min(room, left), -1, -1):
                rows[r].extend([letter] * x)
                fill(r + 1, left - x)
                del rows[r][len(rows[r]) - x:]

        fill(0, content[letter_idx])

    strips(0)
    return out


def kostka(shape: Iterable[int], content: Iterable[int]) -> int:
    return len(semistandard_tableaux(shape, content))


def charge(word: Iterable[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    w = list(word)
    total = 0
    alive = [True] * len(w)
    while any(alive):
        present = {w[i] for i in range(len(w)) if alive[i]}
        top = 0
        while top + 1 in present:
            top += 1
        if top == 0:
            raise ValueError(f"word {word} does not have partition content")
        # read leftwards cyclically, starting from the right end
        pos = len(w)
        index = 0
        for letter in range(1, top + 1):
            found = None
            for p in range(pos - 1, -1, -1):
                if alive[p] and w[p] == letter:
                    found = p
                    break
            if found is None:
                if letter > 1:
                    index += 1  # wrapped around: letter sits right of its predecessor
                for p in range(len(w) - 1, pos - 1, -1):
                    if alive[p] and w[p] == letter:
                        found = p
                        break
            total += index
            alive[found] = False
            pos = found
    return total


def _reading_word(T: tuple[tuple[int, ...], ...]) -> list[int]:
    return [v for row in reversed(T) for v in row]


@lru_cache(maxsize=None)
def kostka_foulkes(shape: Partition, content: Partition) -> LaurentPoly:
    """K_{shape, content}(q) = sum over SSYT of q^charge."""
    c: dict[int, int] = {}
    for T in semistandard_tableaux(shape, content):
        e = charge(_reading_word(T))
        c[e] = c.get(e, 0) + 1
    return LaurentPoly(c)


@lru_cache(maxsize=None)
def _to_m(basis: str, n: int) -> dict[Partition, dict[Partition, RationalFn]]:
    """Rows: basis element -> its monomial coefficients."""
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
    parts = partitions(n)
    table: dict[Partition, dict[Partition, RationalFn]] = {}
    if basis == "m":
        return {lam: {lam: RF_ONE} for lam in parts}
    if basis in ("e", "h", "p"):
        for lam in parts:
            row = {}
            for mu in parts:
                v = _count_fillings(tuple(lam), tuple(mu), basis)
                if v:
                    row[mu] = RationalFn(v)
            table[lam] = row
        return table
    if basis == "s":
        for lam in parts:
            row = {}
            for mu in parts:
                v = kostka(lam, mu)
                if v:
                    row[mu] = RationalFn(v)
            table[lam] = row
        return table
    if basis == "Htilde0":
        return {mu: to_basis(htilde_t0(mu), "m").coeffs for mu in parts}
    if basis == "W":
        return {mu: to_basis(w_basis_element(mu), "m").coeffs for mu in parts}
    if basis == "Wtilde":
        return {mu: to_basis(wtilde_basis_element(mu), "m").coeffs for mu in parts}
    raise ValueError(f"unknown basis {basis!r}")


def _invert(matrix: dict[Partition, dict[Partition, RationalFn]], order: tuple[Partition, ...]):
    """Gauss-Jordan inverse of a square matrix over Q(q), given as sparse rows."""
    size = len(order)
    idx = {lam: i for i, lam in enumerate(order)}
    a = [[RF_ZERO] * size for _ in range(size)]
    for lam, row in matrix.items():
        for mu, v in row.items():
            a[idx[lam]][idx[mu]] = v
    inv = [[RF_ONE if i == j else RF_ZERO for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next((r for r in range(col, size) if not a[r][col].is_zero()), None)
        if piv is None:
            raise ArithmeticError("singular transition matrix")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        if p != RF_ONE:
            a[col] = [v / p if not v.is_zero() else v for v in a[col]]
            inv[col] = [v / p if not v.is_zero() else v for v in inv[col]]
        for r in range(size):
            if r == col or a[r][col].is_zero():
                continue
            f = a[r][col]
            a[r] = [x - f * y if not y.is_zero() else x for x, y in zip(a[r], a[col])]
            inv[r] = [x - f * y if not y.is_zero() else x for x, y in zip(inv[r], inv[col])]
    return {
        order[i]: {order[j]: inv[i][j] for j in range(size) if not inv[i][j].is_zero()}
        for i in range(size)
    }


@lru_cache(maxsize=None)
def _from_m(basis: str, n: int) -> dict[Partition, dict[Partition, RationalFn]]:
    """Rows: m_mu -> its coefficients in the target basis.

    If B is the basis-to-m matrix (rows = basis elements), then m = B^{-1} b.
    """
    if basis == "m":
        return _to_m("m", n)
    return _invert(_to_m(basis, n), partitions(n))


def _apply(vec: Mapping[Partition, RationalFn], matrix) -> dict[Partition, RationalFn]:
    out: dict[Partition, RationalFn] = {}
    for lam, v in vec.items():
        for mu, w in matrix[lam].items():
            out[mu] = out.get(mu, RF_ZERO) + v * w
    return {k: v for k, v in out.items() if not v.is_zero()}


def to_basis(f: SymFunc, target: str) -> SymFunc:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    if f.degree == 0:
        return SymFunc._raw(0, target, dict(f.coeffs))
    vec = f.coeffs if f.basis == "m" else _apply(f.coeffs, _to_m(f.basis, f.degree))
    if target != "m":
        vec = _apply(vec, _from_m(target, f.degree))
    return SymFunc._raw(f.degree, target, vec)


def expand_in(f: SymFunc, target: str) -> dict[Partition, RationalFn]:
    return dict(to_basis(f, target).coeffs)


def _union(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a + b, reverse=True))


def product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product, computed in the multiplicative e basis and returned in f's basis."""
    fe, ge = to_basis(f, "e"), to_basis(g, "e")
    c: dict[Partition, RationalFn] = {}
    for a, u in fe.coeffs.items():
        for b, v in ge.coeffs.items():
            k = _union(a, b)
            c[k] = c.get(k, RF_ZERO) + u * v
    return to_basis(SymFunc._raw(f.degree + g.degree, "e", c), f.basis)


def omega(f: SymFunc) -> SymFunc:
    """The involution with omega(p_r) = (-1)^(r-1) p_r."""
    fp = to_basis(f, "p")
    n = f.degree
    out = {lam: (v if (n - len(lam)) % 2 == 0 else -v) for lam, v in fp.coeffs.items()}
    return to_basis(SymFunc._raw(n, "p", out), f.basis)


def plethysm_over_qminus1(f: SymFunc) -> SymFunc:
    """f[X/(q-1)], via p_r -> p_r / (q^r - 1)."""
    fp = to_basis(f, "p")
    out = {}
    for lam, v in fp.coeffs.items():
        den = RF_ONE
        for r in lam:
            den = den * RationalFn(LaurentPoly({r: 1, 0: -1}))
        out[lam] = v / den
    return to_basis(SymFunc._raw(f.degree, "p", out), f.basis)


# ---- Macdonald t = 0 and q-Whittaker -------------------------------------


@lru_cache(maxsize=None)
def htilde_t0(mu: Partition) -> SymFunc:
    """Modified Macdonald function at t = 0, in the Schur basis.

    The coefficient of s_lam is the cocharge Kostka-Foulkes polynomial
    q^{n(mu')} K_{lam, mu'}(1/q).
    """
    mu = Partition(mu)
    n = mu.size
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
    content = mu.conjugate()
    top = mu.n_prime()  # n(mu') = max charge for content mu'
    c = {}
    for lam in partitions(n):
        k = kostka_foulkes(lam, content)
        if k:
            c[lam] = RationalFn(k.subs_inverse().shift(top))
    return SymFunc._raw(n, "s", c)


@lru_cache(maxsize=None)
def w_basis_element(lam: Partition) -> SymFunc:
    """q-Whittaker function q^{n(lam')} omega(Htilde_lam(1/q, 0)), in the m basis."""
    lam = Partition(lam)
    h = htilde_t0(lam).subs_inverse()
    w = omega(to_basis(h, "m")) * RationalFn(LaurentPoly.monomial(lam.n_prime()))
    return w


@lru_cache(maxsize=None)
def wtilde_basis_element(lam: Partition) -> SymFunc:
    """q^{n(lam')} W_lam(1/q), in the m basis."""
    lam = Partition(lam)
    return w_basis_element(lam).subs_inverse() * RationalFn(LaurentPoly.monomial(lam.n_prime()))
