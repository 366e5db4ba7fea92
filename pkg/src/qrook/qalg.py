"""Exact arithmetic in a single variable q.

``LaurentPoly`` is a sparse integer Laurent polynomial, ``RationalFn`` a
reduced ratio of integer polynomials.  Both are immutable.  The q-analogues
(q-numbers, factorials, Pochhammer symbols, Gaussian binomials) live at the
bottom of the module.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "Q",
    "ONE",
    "ZERO",
    "q_number",
    "q_factorial",
    "q_pochhammer",
    "q_binomial",
    "q_multinomial",
    "reverse",
]


class LaurentPoly:
    """Integer Laurent polynomial in q, stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so the zero polynomial is the empty
    mapping and equality is plain dict equality.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if not isinstance(v, int):
                raise TypeError(f"coefficient {v!r} is not an integer")
            e = int(e)
            c[e] = c.get(e, 0) + v
        self._c = {e: v for e, v in c.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "LaurentPoly":
        # c must already be zero-free
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, e: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({e: coeff} if coeff else {})

    @classmethod
    def const(cls, v: int) -> "LaurentPoly":
        return cls.monomial(0, v)

    # ---- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in decreasing exponent order."""
        return sorted(self._c.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    @property
    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return min(self._c)

    def is_polynomial(self) -> bool:
        """True if no negative exponent occurs."""
        return not self._c or min(self._c) >= 0

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def content(self) -> int:
        g = 0
        for v in self._c.values():
            g = math.gcd(g, v)
        return g

    def leading_coefficient(self) -> int:
        return self._c[self.degree]

    # ---- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.is_monomial() and abs(self.leading_coefficient()) == 1:
                (e, v), = self._c.items()
                return LaurentPoly.monomial(e * k, v ** (-k))
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by q^d."""
        return LaurentPoly._raw({e + d: v for e, v in self._c.items()})

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient in Z[q, 1/q]; raises ArithmeticError on a remainder."""
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        a_shift, b_shift = self.valuation, o.valuation
        num = _dense(self.shift(-a_shift))
        den = _dense(o.shift(-b_shift))
        quo = _dense_divide(num, den)
        if quo is None:
            raise ArithmeticError(f"({self}) is not divisible by ({o})")
        return _from_dense(quo).shift(a_shift - b_shift)

    def __floordiv__(self, other):
        return self.divmod_exact(other)

    def __truediv__(self, other):
        return RationalFn(self) / RationalFn(other)

    def __rtruediv__(self, other):
        return RationalFn(other) / RationalFn(self)

    # ---- substitution -----------------------------------------------------

    def __call__(self, x):
        """Evaluate at a number (int, Fraction, ...)."""
        total = 0
        for e, v in self._c.items():
            if e >= 0:
                total += v * x**e
            else:
                total += v * Fraction(1, 1) / (Fraction(x) ** (-e))
        return total

    def subs_inverse(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    # ---- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, RationalFn):
                return RationalFn(self) == other
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # ---- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for i, (e, v) in enumerate(self.terms()):
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if i == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict[str, int]:
        return {str(e): v for e, v in self.terms()}

    @classmethod
    def from_json(cls, data: Mapping[str, int] | str) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(k): int(v) for k, v in data.items()})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the rendering produced by ``str``, e.g. ``"q^3 + 2*q + 1"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        pos = 0
        c: dict[int, int] = {}
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            sign, coef, mono, exp = m.group("sign", "coef", "mono", "exp")
            if coef is None and mono is None:
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            v = int(coef) if coef is not None else 1
            if sign == "-":
                v = -v
            if mono is None:
                e = 0
            else:
                e = int(exp) if exp is not None else 1
            c[e] = c.get(e, 0) + v
            pos = m.end()
        return cls(c)


_TERM_RE = re.compile(
    r"(?P<sign>[+-])(?:(?P<coef>\d+)(?:\*(?=q))?)?(?P<mono>q(?:\^(?P<exp>-?\d+))?)?"
)


def _dense(p: LaurentPoly) -> list[int]:
    # p must be a polynomial; index = exponent
    if p.is_zero():
        return []
    out = [0] * (p.degree + 1)
    for e, v in p._c.items():
        out[e] = v
    return out


def _from_dense(a: list) -> LaurentPoly:
    return LaurentPoly._raw({i: int(v) for i, v in enumerate(a) if v})


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_divide(num: list[int], den: list[int]) -> list[int] | None:
    """Exact long division over Z; None if a remainder is left."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dn:
        return None if any(num) else []
    quo = [0] * (len(num) - dn)
    for i in range(len(num) - 1 - dn, -1, -1):
        top = num[i + dn]
        if top == 0:
            continue
        if top % lead:
            return None
        t = top // lead
        quo[i] = t
        for j, d in enumerate(den):
            num[i + j] -= t * d
    if any(num):
        return None
    return quo


def _qq_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _trim(a)
    quo = [Fraction(0)] * (len(a) - db)
    inv = 1 / Fraction(b[-1])
    for i in range(len(a) - 1 - db, -1, -1):
        t = a[i + db] * inv
        if t:
            quo[i] = t
            for j, d in enumerate(b):
                a[i + j] -= t * d
    return quo, _trim(a[:db])


def _primitive(a: list) -> list[int]:
    """Scale a nonzero rational polynomial to a primitive integer one, positive lead."""
    den = 1
    for v in a:
        den = den * Fraction(v).denominator // math.gcd(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in a]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    if ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive gcd of two polynomials over Z[q] (content ignored), positive lead."""
    if a.is_zero():
        return _from_dense(_primitive(_dense(b))) if b else ZERO
    if b.is_zero():
        return _from_dense(_primitive(_dense(a)))
    x: list = [Fraction(v) for v in _dense(a)]
    y: list = [Fraction(v) for v in _dense(b)]
    while y:
        _, r = _qq_divmod(x, y)
        x, y = y, r
    return _from_dense(_primitive(x))


Q = LaurentPoly._raw({1: 1})
ONE = LaurentPoly._raw({0: 1})
ZERO = LaurentPoly._raw({})


Scalar = Union[int, Fraction, LaurentPoly, "RationalFn"]


class RationalFn:
    """A ratio ``num/den`` of integer polynomials in q, kept reduced.

    Normal form: num and den are coprime in Z[q] (no common polynomial factor
    and no common integer content) and den has a positive leading
    coefficient.  Two equal rational functions therefore have identical
    (num, den).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Scalar = 0, den: Scalar = 1):
        n, d = _as_pair(num)
        n2, d2 = _as_pair(den)
        if n2.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _normalize(n * d2, d * n2)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFn":
        r = object.__new__(cls)
        r.num, r.den = num, den
        r._hash = None
        return r

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_monomial() and self.den.leading_coefficient() == 1

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ArithmeticError(f"{self} is not a Laurent polynomial")
        return self.num.shift(-self.den.degree)

    def __add__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den == ONE:
                return RationalFn._raw(self.num + o.num, ONE)
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        if self.den == ONE and o.den == ONE:
            return RationalFn._raw(self.num * o.num, ONE)
        if self.is_zero() or o.is_zero():
            return RF_ZERO
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if o.num == ONE and o.den == ONE:
            return self
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFn(self.den, self.num) ** (-k)
        return RationalFn._raw(self.num**k, self.den**k)

    def subs_inverse(self) -> "RationalFn":
        """Substitute q -> 1/q."""
        return RationalFn(self.num.subs_inverse(), self.den.subs_inverse())

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={x}")
        return Fraction(self.num(x)) / Fraction(d)

    def __eq__(self, other):
        o = _coerce_rf(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            # agree with LaurentPoly.__hash__ for equal values
            self._hash = hash(self.to_laurent()) if self.is_laurent() else hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        n = str(self.num)
        if len(self.num._c) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "RationalFn":
        """Parse ``"num"`` or ``"(num)/(den)"`` as rendered by ``str``."""
        text = text.strip()
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                return cls(LaurentPoly.parse(text[:i].strip().strip("()")),
                           LaurentPoly.parse(text[i + 1:].strip().strip("()")))
        return cls(LaurentPoly.parse(text.strip("()")))


def _as_pair(x: Scalar) -> tuple[LaurentPoly, LaurentPoly]:
    if isinstance(x, RationalFn):
        return x.num, x.den
    if isinstance(x, LaurentPoly):
        if x.is_zero() or x.valuation >= 0:
            return x, ONE
        return x.shift(-x.valuation), LaurentPoly.monomial(-x.valuation)
    if isinstance(x, Fraction):
        return LaurentPoly.const(x.numerator), LaurentPoly.const(x.denominator)
    if isinstance(x, int):
        return LaurentPoly.const(x), ONE
    raise TypeError(f"cannot build a rational function from {x!r}")


def _coerce_rf(x) -> "RationalFn | None":
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly)):
        return RationalFn(x)
    return None


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO, ONE
    # both are polynomials here; strip common powers of q first
    s = min(num.valuation, den.valuation)
    if s:
        num, den = num.shift(-s), den.shift(-s)
    c = math.gcd(num.content(), den.content())
    if den.is_monomial():
        g = ONE
    else:
        g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num.divmod_exact(g), den.divmod_exact(g)
        c = math.gcd(num.content(), den.content())
    if c != 1:
        num = LaurentPoly._raw({e: v // c for e, v in num._c.items()})
        den = LaurentPoly._raw({e: v // c for e, v in den._c.items()})
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


RF_ZERO = RationalFn._raw(ZERO, ONE)
RF_ONE = RationalFn._raw(ONE, ONE)


# ---- q-analogues ----------------------------------------------------------


def q_number(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError(f"q_number is undefined for negative n={n}")
    return LaurentPoly._raw({i: 1 for i in range(n)})


def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"q_factorial is undefined for negative n={n}")
    result = ONE
    for i in range(2, n + 1):
        result = result * q_number(i)
    return result


def q_pochhammer(a: LaurentPoly | int, j: int) -> LaurentPoly:
    """(a; q)_j = (1 - a)(1 - q a)...(1 - q^(j-1) a)."""
    if j < 0:
        raise ValueError("q_pochhammer needs j >= 0")
    a = LaurentPoly._coerce(a)
    result = ONE
    for i in range(j):
        result = result * (ONE - a.shift(i))
    return result


def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial as (q;q)_n / ((q;q)_k (q;q)_{n-k}); zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return ZERO
    num = q_pochhammer(Q, n)
    den = q_pochhammer(Q, k) * q_pochhammer(Q, n - k)
    try:
        return num.divmod_exact(den)
    except ArithmeticError as exc:  # pragma: no cover - would be an arithmetic bug
        raise RuntimeError(f"q_binomial({n},{k}) left a remainder") from exc


def q_multinomial(n: int, mu: Iterable[int]) -> LaurentPoly:
    parts = [p for p in mu if p]
    if sum(parts) != n:
        raise ValueError(f"parts {tuple(parts)} do not sum to {n}")
    den = ONE
    for p in parts:
        den = den * q_factorial(p)
    return q_factorial(n).divmod_exact(den)


def reverse(p: LaurentPoly, d: int) -> LaurentPoly:
    """q^d * p(1/q)."""
    return p.subs_inverse().shift(d)
