"""Unicellular LLT functions, chromatic quasisymmetric functions and their expansions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .qalg import ONE, RF_ONE, ZERO, LaurentPoly, RationalFn, q_factorial, q_number
from .rook import q_hit
from .shapes import DyckPath, Partition, dyck_paths, partition_to_path, partitions
from .symfunc import (
    SymFunc,
    basis_element,
    htilde_t0,
    to_basis,
)

__all__ = [
    "MAX_N",
    "inv",
    "monomial_coefficient",
    "chi",
    "chi_tilde",
    "chromatic",
    "LLTExpansion",
    "expand_c",
    "expand_ctilde",
    "expand_wtilde",
    "expand_b",
    "enrook_lhs",
    "g_functional",
    "modular_triples",
    "IdentityReport",
    "guay_paquet_report",
    "guay_paquet_decomposition",
]

MAX_N = 8


def inv(pi: DyckPath, word: Sequence[int]) -> int:
    """Area cells (i, j) with w_i > w_j."""
    return sum(1 for i, j in pi.area if word[i - 1] > word[j - 1])


def _area_predecessors(pi: DyckPath) -> tuple[tuple[int, ...], ...]:
    # for position j (0-based), the positions i < j with (i+1, j+1) in the area
    return tuple(
        tuple(i - 1 for i in range(1, j) if (i, j) in pi.area) for j in range(1, pi.n + 1)
    )


def monomial_coefficient(pi: DyckPath, content: Sequence[int], proper: bool = False) -> LaurentPoly:
    """Coefficient of x^content, summing q^inv over words with that content.

    With ``proper`` only words giving distinct letters to every area cell count.
    """
    n = pi.n
    content = list(content)
    if sum(content) != n or any(c < 0 for c in content):
        raise ValueError(f"{content} is not a composition of {n}")
    preds = _area_predecessors(pi)
    word = [0] * n
    tally: dict[int, int] = {}

    def go(j: int, score: int) -> None:
        if j == n:
            tally[score] = tally.get(score, 0) + 1
            return
        for letter, left in enumerate(content):
            if not left:
                continue
            bump = 0
            clash = False
            for i in preds[j]:
                if word[i] > letter:
                    bump += 1
                elif proper and word[i] == letter:
                    clash = True
                    break
            if clash:
                continue
            word[j] = letter
            content[letter] -= 1
            go(j + 1, score + bump)
            content[letter] += 1

    go(0, 0)
    return LaurentPoly(tally)


def _word_function(pi: DyckPath, proper: bool) -> SymFunc:
    n = pi.n
    if n > MAX_N:
        raise ValueError(f"semilength {n} exceeds the supported maximum {MAX_N}")
    coeffs = {}
    for mu in partitions(n):
        c = monomial_coefficient(pi, mu, proper)
        if not c.is_zero():
            coeffs[mu] = RationalFn(c)
    return SymFunc._raw(n, "m", coeffs)


@lru_cache(maxsize=None)
def chi(pi: DyckPath) -> SymFunc:
    """The unicellular LLT function of pi, in the m basis."""
    return _word_function(pi, proper=False)


@lru_cache(maxsize=None)
def chromatic(pi: DyckPath) -> SymFunc:
    """The chromatic quasisymmetric function of the indifference graph of pi."""
    return _word_function(pi, proper=True)


def chi_tilde(pi: DyckPath) -> SymFunc:
    """q^{#Area} chi_pi(1/q)."""
    a = pi.area_size
    out = {}
    for mu, v in chi(pi).coeffs.items():
        lp = v.to_laurent()
        if lp.degree > a:
            raise ArithmeticError(f"chi({pi}) has q-degree {lp.degree} above #Area = {a}")
        out[mu] = RationalFn(lp.subs_inverse().shift(a))
    return SymFunc._raw(pi.n, "m", out)


@dataclass(frozen=True)
class LLTExpansion:
    """chi_pi = sum over mu of scalar(mu) * coeffs[mu] * basis_mu."""

    path: DyckPath
    basis: str  # "W", "Wtilde" or "e"
    coeffs: Mapping[Partition, LaurentPoly] = field(default_factory=dict)

    def __getitem__(self, mu) -> LaurentPoly:
        return self.coeffs.get(Partition(mu), ZERO)

    def items(self) -> Iterator[tuple[Partition, LaurentPoly]]:
        return iter(sorted(self.coeffs.items(), reverse=True))

    def scalar(self, mu: Partition) -> RationalFn:
        n = self.path.n
        if self.basis == "W":
            return RationalFn(LaurentPoly({0: 1, 1: -1})) ** (n - mu[0])
        if self.basis == "e":
            return RationalFn(LaurentPoly({1: 1, 0: -1})) ** (n - len(mu))
        return RF_ONE

    def reconstruct(self) -> SymFunc:
        n = self.path.n
        total = SymFunc.zero(n, "m")
        for mu, c in self.coeffs.items():
            term = basis_element(self.basis, mu) * (self.scalar(mu) * RationalFn(c))
            total = total + term
        return total

    def to_json(self) -> dict:
        return {
            "path": str(self.path),
            "basis": self.basis,
            "coeffs": {str(mu): str(c) for mu, c in self.items()},
        }


def _divide_out(pi: DyckPath, basis: str, raw: Mapping[Partition, RationalFn],
                scalar, check_positive: bool = True) -> dict[Partition, LaurentPoly]:
    out = {}
    for mu, v in raw.items():
        c = v / scalar(mu)
        if not c.is_laurent():
            raise ArithmeticError(f"{basis}-coefficient of {mu} for {pi} is not divisible: {c}")
        lp = c.to_laurent()
        if check_positive and not (lp.is_polynomial() and lp.is_nonnegative()):
            raise ArithmeticError(f"{basis}-coefficient of {mu} for {pi} is not in Z>=0[q]: {lp}")
        out[mu] = lp
    return out


@lru_cache(maxsize=None)
def expand_c(pi: DyckPath) -> LLTExpansion:
    """c_{pi,mu}: chi_pi = sum (1-q)^{n - mu_1} c_{pi,mu} W_mu."""
    n = pi.n
    raw = to_basis(chi(pi), "W").coeffs
    one_minus_q = RationalFn(LaurentPoly({0: 1, 1: -1}))
    return LLTExpansion(pi, "W", _divide_out(pi, "W", raw, lambda mu: one_minus_q ** (n - mu[0])))


def expand_ctilde(pi: DyckPath, check: bool = True) -> dict[Partition, LaurentPoly]:
    """c~_{pi,mu} = q^{#Area - n(mu')} c_{pi,mu}(1/q).

    With ``check`` the expansion of chi_pi over Htilde_mu(q, 0) with prefactor
    (1 - 1/q)^{n - mu_1} is rebuilt and compared.
    """
    n = pi.n
    a = pi.area_size
    out = {mu: c.subs_inverse().shift(a - mu.n_prime()) for mu, c in expand_c(pi).coeffs.items()}
    if check:
        factor = RationalFn(LaurentPoly({0: 1, -1: -1}))
        total = SymFunc.zero(n, "s")
        for mu, c in out.items():
            total = total + htilde_t0(mu) * (factor ** (n - mu[0]) * RationalFn(c))
        if total != chi(pi):
            raise ArithmeticError(f"Htilde reconstruction fails for {pi}")
    return out


def expand_wtilde(pi: DyckPath) -> dict[Partition, RationalFn]:
    """Coefficients of chi~_pi in the Wtilde basis."""
    return dict(to_basis(chi_tilde(pi), "Wtilde").coeffs)


@lru_cache(maxsize=None)
def expand_b(pi: DyckPath) -> LLTExpansion:
    """b_{pi,mu}: chi_pi = sum (q-1)^{n - l(mu)} b_{pi,mu} e_mu."""
    n = pi.n
    raw = to_basis(chi(pi), "e").coeffs
    q_minus_1 = RationalFn(LaurentPoly({1: 1, 0: -1}))
    return LLTExpansion(pi, "e", _divide_out(pi, "e", raw, lambda mu: q_minus_1 ** (n - len(mu))))


def enrook_lhs(pi: DyckPath) -> LaurentPoly:
    n = pi.n
    total = ZERO
    for mu, b in expand_b(pi).coeffs.items():
        total = total + b.shift(n - len(mu))
    return total


def g_functional(pi: DyckPath) -> LaurentPoly:
    """G(pi) = prod_j [n - lambda_j - j + 1]_q."""
    n = pi.n
    lam = pi.partition.padded(n)
    result = ONE
    for j in range(1, n + 1):
        arg = n - lam[j - 1] - j + 1
        if arg < 0:
            raise ValueError(f"negative q-number argument {arg} for {pi}")
        result = result * q_number(arg)
    return result


def _path_or_none(parts: list[int], n: int) -> DyckPath | None:
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or (parts and parts[-1] < 0):
        return None
    try:
        return partition_to_path(Partition(p for p in parts if p), n)
    except ValueError:
        return None


def modular_triples(n: int) -> Iterator[tuple[DyckPath, DyckPath, DyckPath]]:
    """Triples (pi0, pi1, pi2) in D_n whose partitions differ by the two modular moves.

    Move (1): lambda0 = lambda1 + e_s, lambda2 = lambda1 - e_s.
    Move (2): lambda1_r - lambda1_{r+1} = 1, lambda2 = lambda1 - e_r, lambda0 = lambda1 + e_{r+1}.
    """
    for p1 in dyck_paths(n):
        lam = list(p1.partition.padded(n))
        for s in range(n):
            up, down = lam.copy(), lam.copy()
            up[s] += 1
            down[s] -= 1
            p0, p2 = _path_or_none(up, n), _path_or_none(down, n)
            if p0 is not None and p2 is not None:
                yield p0, p1, p2
        for r in range(n - 1):
            if lam[r] - lam[r + 1] != 1:
                continue
            down, up = lam.copy(), lam.copy()
            down[r] -= 1
            up[r + 1] += 1
            p0, p2 = _path_or_none(up, n), _path_or_none(down, n)
            if p0 is not None and p2 is not None:
                yield p0, p1, p2


@dataclass(frozen=True)
class IdentityReport:
    name: str
    inputs: str
    left: object
    right: object

    @property
    def equal(self) -> bool:
        return self.left == self.right

    def to_json(self) -> dict:
        def render(x):
            return x.to_json() if hasattr(x, "to_json") else str(x)

        return {"identity": self.name, "input": self.inputs, "equal": self.equal,
                "left": render(self.left), "right": render(self.right)}


def guay_paquet_report(lam, m: int, n: int) -> IdentityReport:
    """Compare chi_{pi(lam)} with the q-hit combination of the rectangle paths pi(m^j)."""
    lam = Partition(lam)
    if n > m:
        raise ValueError(f"need n <= m, got m={m}, n={n}")
    if not lam.fits_in(m, n):
        raise ValueError(f"{lam} does not fit in ({m}^{n})")
    N = m + n
    left = chi(partition_to_path(lam, N))
    right = SymFunc.zero(N, "m")
    for j in range(n + 1):
        h = q_hit(lam, m, n, j)
        if h.is_zero():
            continue
        right = right + chi(partition_to_path(Partition((m,) * j), N)) * h
    scale = RationalFn(q_factorial(m - n)) / RationalFn(q_factorial(m))
    right = right * scale
    return IdentityReport("guay-paquet", f"lam={lam}, m={m}, n={n}", left, right)


def guay_paquet_decomposition(lam, m: int, n: int) -> bool:
    return guay_paquet_report(lam, m, n).equal
