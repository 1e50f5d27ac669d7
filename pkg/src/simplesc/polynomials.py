"""Exact univariate polynomials over the integers and rational functions.

``IntPoly`` stores coefficients low degree first, trailing zeros trimmed, so
the zero polynomial is the empty tuple.  ``RatFunc`` keeps numerator and
denominator in a unique normal form: coprime over Q, integer coefficients
with joint content 1, positive leading coefficient in the denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _trim(coeffs: Sequence) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


# -- arithmetic on coefficient tuples over Q (internal) ---------------------

def _qmul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _qadd(a: Sequence, b: Sequence) -> tuple:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _qdivmod(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in _trim(a)]
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        f = r[-1] / lead
        q[k] = f
        for j, y in enumerate(b):
            r[k + j] -= f * y
        r = list(_trim(r))
    return _trim(q), _trim(r)


def _primitive(a: Sequence) -> tuple[int, ...]:
    """Integer multiple of ``a`` with coprime coefficients."""
    fr = [Fraction(x) for x in a]
    m = 1
    for c in fr:
        m = _lcm(m, c.denominator)
    ints = [int(c * m) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return tuple(c // g for c in ints) if g else ()


def _qgcd(a: Sequence, b: Sequence) -> tuple:
    """Monic gcd over Q; remainders are kept primitive to stop coefficient growth."""
    a, b = _primitive(_trim(a)), _primitive(_trim(b))
    while b:
        a, b = b, _primitive(_qdivmod(a, b)[1])
    if not a:
        return ()
    lead = Fraction(a[-1])
    return tuple(Fraction(x) / lead for x in a)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class IntPoly:
    """Polynomial with integer coefficients in one named variable."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "t"):
        cs = _trim(coeffs)
        for c in cs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
            elif not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
        self.coeffs: tuple[int, ...] = tuple(int(c) for c in cs)
        self.var = var

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, var: str = "t") -> "IntPoly":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff], var)

    @classmethod
    def constant(cls, c: int, var: str = "t") -> "IntPoly":
        return cls([c], var)

    @classmethod
    def x(cls, var: str = "t") -> "IntPoly":
        return cls([0, 1], var)

    # -- queries --------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def at_zero(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def valuation(self) -> int:
        """Order of vanishing at 0; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("valuation of zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return IntPoly(_qadd(self.coeffs, o.coeffs), self.var)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return IntPoly(_qmul(self.coeffs, o.coeffs), self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient when ``other`` divides ``self`` in Z[t]; raises otherwise."""
        q, r = _qdivmod(self.coeffs, other.coeffs)
        if r:
            raise ArithmeticError("division leaves a remainder")
        return IntPoly(q, self.var)

    def divides(self, other: "IntPoly") -> bool:
        q, r = _qdivmod(other.coeffs, self.coeffs)
        return not r and all(Fraction(c).denominator == 1 for c in q)

    def compose_power(self, k: int) -> "IntPoly":
        """P(t) -> P(t^k)."""
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0:
            return IntPoly([self(1)], self.var)
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out, self.var)

    def reversed_poly(self, degree: int | None = None) -> "IntPoly":
        """t^d P(1/t) for d = ``degree`` (default: the degree of P)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree smaller than polynomial degree")
        cs = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return IntPoly(reversed(cs), self.var)

    def rename(self, var: str) -> "IntPoly":
        return IntPoly(self.coeffs, var)

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def _normalize(num: Sequence, den: Sequence) -> tuple[tuple[int, ...], tuple[int, ...]]:
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (1,)
    g = _qgcd(num, den)
    if len(g) > 1:
        num = _qdivmod(num, g)[0]
        den = _qdivmod(den, g)[0]
    fr_n = [Fraction(c) for c in num]
    fr_d = [Fraction(c) for c in den]
    m = 1
    for c in fr_n + fr_d:
        m = _lcm(m, c.denominator)
    ni = [int(c * m) for c in fr_n]
    di = [int(c * m) for c in fr_d]
    g = 0
    for c in ni + di:
        g = gcd(g, c)
    ni = [c // g for c in ni]
    di = [c // g for c in di]
    if di[-1] < 0:
        ni = [-c for c in ni]
        di = [-c for c in di]
    return tuple(ni), tuple(di)


class RatFunc:
    """Reduced quotient of two integer polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly | int | Sequence[int], den: IntPoly | int | Sequence[int] = 1,
                 var: str | None = None):
        v = var
        if v is None:
            v = num.var if isinstance(num, IntPoly) else den.var if isinstance(den, IntPoly) else "q"
        nc = num.coeffs if isinstance(num, IntPoly) else (num,) if isinstance(num, int) else tuple(num)
        dc = den.coeffs if isinstance(den, IntPoly) else (den,) if isinstance(den, int) else tuple(den)
        n, d = _normalize(nc, dc)
        self.num = IntPoly(n, v)
        self.den = IntPoly(d, v)

    @classmethod
    def _from_q(cls, num: Sequence, den: Sequence, var: str) -> "RatFunc":
        n, d = _normalize(num, den)
        obj = cls.__new__(cls)
        obj.num = IntPoly(n, var)
        obj.den = IntPoly(d, var)
        return obj

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and abs(self.den.coeffs[0]) == 1

    def __add__(self, other):
        o = _as_ratfunc(other, self.var)
        if o is NotImplemented:
            return o
        n = _qadd(_qmul(self.num.coeffs, o.den.coeffs), _qmul(o.num.coeffs, self.den.coeffs))
        d = _qmul(self.den.coeffs, o.den.coeffs)
        return RatFunc._from_q(n, d, self.var)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._from_q([-c for c in self.num.coeffs], self.den.coeffs, self.var)

    def __sub__(self, other):
        o = _as_ratfunc(other, self.var)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _as_ratfunc(other, self.var)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _as_ratfunc(other, self.var)
        if o is NotImplemented:
            return o
        return RatFunc._from_q(_qmul(self.num.coeffs, o.num.coeffs),
                               _qmul(self.den.coeffs, o.den.coeffs), self.var)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc._from_q(self.den.coeffs, self.num.coeffs, self.var)

    def __truediv__(self, other):
        o = _as_ratfunc(other, self.var)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_ratfunc(other, self.var)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        return RatFunc._from_q((base.num ** k).coeffs, (base.den ** k).coeffs, self.var)

    def __call__(self, x):
        d = self.den(Fraction(x))
        if d == 0:
            raise ZeroDivisionError("pole")
        return Fraction(self.num(Fraction(x))) / d

    def __eq__(self, other) -> bool:
        o = _as_ratfunc(other, self.var)
        if o is NotImplemented:
            return NotImplemented
        return self.num.coeffs == o.num.coeffs and self.den.coeffs == o.den.coeffs

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RatFunc({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        if self.den == IntPoly([1]):
            return str(self.num)
        n = str(self.num)
        d = str(self.den)
        if sum(1 for c in self.num.coeffs if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den.coeffs if c) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def to_json(self) -> dict:
        return {"num": list(self.num.coeffs), "den": list(self.den.coeffs), "str": str(self)}


def _as_ratfunc(x, var: str):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, IntPoly):
        return RatFunc(x, 1, var)
    if isinstance(x, int):
        return RatFunc._from_q((x,), (1,), var)
    if isinstance(x, Fraction):
        return RatFunc._from_q((x,), (1,), var)
    return NotImplemented


@lru_cache(maxsize=None)
def cyclotomic(n: int, var: str = "t") -> IntPoly:
    """The n-th cyclotomic polynomial, by dividing t^n - 1 by the lower ones."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPoly.monomial(n, 1, var) - 1
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d, var))
    return p


def multiplicity(factor: IntPoly, p: IntPoly) -> int:
    """Largest k with factor^k dividing p in Z[t] (factor non-constant)."""
    if factor.degree < 1:
        raise ValueError("factor must be non-constant")
    if p.is_zero():
        raise ValueError("multiplicity in the zero polynomial")
    k = 0
    while factor.divides(p):
        p = p.exact_div(factor)
        k += 1
    return k
