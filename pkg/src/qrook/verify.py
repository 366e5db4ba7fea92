"""Exhaustive identity sweeps over small Dyck paths, used by ``qrook verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import fqcount, llt, pitab, rook, symfunc
from .qalg import RF_ZERO, LaurentPoly, RationalFn, q_binomial, q_factorial
from .shapes import (
    DyckPath,
    Partition,
    complement,
    concat,
    dyck_paths,
    partition_to_path,
    partitions,
    partitions_in_box,
    reverse_path,
)

__all__ = ["Case", "VerifyReport", "SUITES", "run_suite", "run"]

FQ_MAX_N = 4
PLETHYSM_MAX_N = 4


@dataclass
class Case:
    identity: str
    inputs: str
    passed: bool
    left: str
    right: str

    def to_json(self) -> dict:
        return {"identity": self.identity, "input": self.inputs, "pass": self.passed,
                "left": self.left, "right": self.right}


@dataclass
class VerifyReport:
    suite: str
    n: int
    cases: list[Case] = field(default_factory=list)

    def check(self, identity: str, inputs: str, left, right) -> None:
        self.cases.append(Case(identity, inputs, left == right, _render(left), _render(right)))

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return bool(self.cases) and self.failed == 0

    def to_json(self) -> dict:
        return {"suite": self.suite, "n": self.n, "passed": self.passed, "failed": self.failed,
                "cases": [c.to_json() for c in self.cases]}


def _render(x) -> str:
    if isinstance(x, symfunc.SymFunc):
        return repr(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(map(str, x)) + "]"
    return str(x)


def _paths(n: int) -> Iterator:
    for k in range(1, n + 1):
        yield from dyck_paths(k)


def _rook_suite(r: VerifyReport) -> None:
    for pi in _paths(r.n):
        lam = pi.partition
        for k in range(pi.n + 1):
            rec = rook.rk_recursion(lam, k)
            tag = f"path={pi}, k={k}"
            r.check("tableaux = recursion", tag, str(pitab.rk_tableaux(pi, k)), str(rec))
            r.check("bruteforce = recursion", tag, str(rook.rk_bruteforce(lam, k)), str(rec))
            r.check("conjugation", tag, rook.rk_recursion(lam.conjugate(), k), rec)
            c_sum = LaurentPoly()
            for mu in partitions(pi.n):
                if mu[0] == pi.n - k:
                    c_sum = c_sum + pitab.c_coefficient(pi, mu).shift(mu.n_prime() - pi.area_size)
            r.check("c-coefficient corollary", tag, c_sum, rec)
    for n in range(1, r.n + 3):
        for k in range(1, n + 1):
            r.check("q-Stirling 2 = staircase rook", f"n={n}, k={k}",
                    rook.q_stirling2(n, k), rook.rk_recursion(tuple(range(n - 1, 0, -1)), n - k))


def _llt_suite(r: VerifyReport) -> None:
    one = RationalFn(1)
    for pi in _paths(r.n):
        n = pi.n
        tag = f"path={pi}"
        chi = llt.chi(pi)
        exp = llt.expand_c(pi)
        for mu in partitions(n):
            r.check("W-expansion = tableaux", f"{tag}, mu={mu}", exp[mu], pitab.c_coefficient(pi, mu))
        r.check("W-expansion reconstructs chi", tag, exp.reconstruct(), chi)
        try:
            llt.expand_ctilde(pi)
            ok = True
        except ArithmeticError:
            ok = False
        r.check("Htilde expansion reconstructs chi", tag, ok, True)
        r.check("omega twist", tag, symfunc.omega(chi), llt.chi_tilde(pi))
        r.check("reversal", tag, llt.chi(reverse_path(pi)), chi)
        r.check("q=1 specialization", tag, chi.at(1),
                symfunc.basis_element("h", (1,) * n))
        alpha = Partition(sorted(pi.touch_composition(), reverse=True))
        r.check("q=0 specialization", tag, chi.at(0), symfunc.basis_element("h", alpha))
        total = sum(llt.expand_wtilde(pi).values(), RF_ZERO)
        r.check("Wtilde coefficients sum to 1", tag, total, one)
        if n <= PLETHYSM_MAX_N:
            lhs = symfunc.plethysm_over_qminus1(llt.chromatic(pi)) * (RationalFn(LaurentPoly({1: 1, 0: -1})) ** n)
            r.check("plethysm relation", tag, lhs, chi)
    for a in _paths(r.n):
        for b in dyck_paths(r.n - a.n) if a.n < r.n else ():
            if b.n == 0:
                continue
            r.check("multiplicativity", f"{a}.{b}", llt.chi(concat(a, b)), llt.chi(a) * llt.chi(b))


def _abelian_suite(r: VerifyReport) -> None:
    for total in range(2, r.n + 1):
        for rows in range(1, total // 2 + 1):
            m = total - rows
            for lam in partitions_in_box(m, rows):
                tag = f"lam={lam}, m={m}, n={rows}"
                for k in range(rows + 1):
                    rec = rook.rk_recursion(lam, k)
                    r.check("single-shape reduction", f"{tag}, k={k}", pitab.rk_abelian(lam, total, k), rec)
                    r.check("hit inversion", f"{tag}, k={k}", rook.rk_from_hits(lam, m, rows, k), RationalFn(rec))
                rep = llt.guay_paquet_report(lam, m, rows)
                r.check("rectangle decomposition", tag, rep.left, rep.right)
            for j in range(rows + 1):
                pi = partition_to_path((m,) * j, total)
                for k in range(j + 1):
                    expected = (q_factorial(j).divmod_exact(q_factorial(j - k)) * q_binomial(m, k)).shift((rows - j) * k)
                    r.check("rectangle c-coefficients", f"m={m}, n={rows}, j={j}, k={k}",
                            pitab.c_coefficient(pi, (total - k, k)), expected)


def _enrook_suite(r: VerifyReport) -> None:
    for pi in _paths(r.n):
        n = pi.n
        tag = f"path={pi}"
        g = llt.g_functional(pi)
        r.check("enrook sum = G", tag, llt.enrook_lhs(pi), g)
        r.check("G = last-row rook number of complement", tag, g,
                rook.rk_last(complement(pi.partition, n, n)))
    for n in range(1, r.n + 1):
        top = llt.expand_b(DyckPath("N" * n + "E" * n))
        s = {}
        for mu, b in top.coeffs.items():
            s[len(mu)] = s.get(len(mu), LaurentPoly()) + b
        for k in range(1, n + 1):
            r.check("b sums give q-Stirling 1", f"n={n}, k={k}", s.get(k, LaurentPoly()), rook.q_stirling1(n, k))
        for p0, p1, p2 in llt.modular_triples(n):
            g0, g1, g2 = (llt.g_functional(p) for p in (p0, p1, p2))
            r.check("modular law", f"{p0} {p1} {p2}", g1 + g1.shift(1), g0.shift(1) + g2)


def _fq_suite(r: VerifyReport) -> None:
    for pi in _paths(min(r.n, FQ_MAX_N)):
        for p in (2, 3):
            counts = fqcount.count_by_rank(pi, p)
            formula = [fqcount.count_by_formula(pi, p, k) for k in range(len(counts))]
            tag = f"path={pi}, p={p}"
            r.check("rank counts = rook formula", tag, counts, formula)
            r.check("total count", tag, sum(counts), p ** pi.partition.size)


SUITES: dict[str, Callable[[VerifyReport], None]] = {
    "rook": _rook_suite,
    "llt": _llt_suite,
    "abelian": _abelian_suite,
    "enrook": _enrook_suite,
    "fq": _fq_suite,
}


def run_suite(name: str, n: int) -> VerifyReport:
    report = VerifyReport(name, n)
    SUITES[name](report)
    return report


def run(suite: str, n: int) -> list[VerifyReport]:
    names = sorted(SUITES) if suite == "all" else [suite]
    return [run_suite(name, n) for name in names]
