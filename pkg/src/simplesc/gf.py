"""Exact arithmetic in GF(p^n).

An element is a coefficient vector (c_0, ..., c_{n-1}) over F_p of a
polynomial reduced modulo the field's modulus.  Internally an element is the
integer sum c_i p^i; ordering by this integer is the lexicographic order on
coefficient vectors read from the top coefficient down, which is the order
used whenever a "smallest" choice is made (modulus, primitive element, roots).

Nontrivial additive characters are never materialized as complex numbers: the
character y -> chi_0(c*y) is represented by the scalar c, relative to the
reference chi_0(y) = zeta_p^{Tr(y)} with Tr the absolute trace to F_p.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, DegreeZero, EmbeddingNotFound, FieldMismatch, NotASubfield, NotPrime

ENUMERATION_BOUND = 2 ** 20
TABLE_BOUND = 2 ** 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as coefficient lists, low degree first ---------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _ptrim([x % p for x in a])
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        f = a[-1] * inv % p
        k = len(a) - 1 - dm
        for j, y in enumerate(m):
            a[k + j] = (a[k + j] - f * y) % p
        _ptrim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim([c % p for c in out])


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, m: Sequence[int], p: int) -> list[int]:
    out = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return out


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    xp = [0, 1]
    for _ in range(n // 2):
        xp = _ppowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(list(f), _ptrim(diff), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    for k in range(p ** n):
        f = [(k // p ** i) % p for i in range(n)] + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {n} over F_{p}")


class Field:
    """GF(p^n) with the lexicographically smallest monic irreducible modulus."""

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.modulus = modulus
        self.q = p ** n

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self) -> int:
        return hash((self.p, self.n))

    def __repr__(self) -> str:
        return f"make_field({self.p}, {self.n})"

    def __str__(self) -> str:
        return f"GF({self.p}^{self.n})/{self.modulus_str()}"

    def modulus_str(self) -> str:
        terms = []
        for i in range(self.n, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            mono = "1" if i == 0 else "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(terms)

    def descriptor(self) -> dict:
        return {"p": self.p, "n": self.n, "q": self.q, "modulus": list(self.modulus)}

    # -- conversion -------------------------------------------------------------

    def coeffs_of(self, v: int) -> tuple[int, ...]:
        p = self.p
        return tuple((v // p ** i) % p for i in range(self.n))

    def int_of(self, coeffs: Sequence[int]) -> int:
        p = self.p
        if len(coeffs) > self.n:
            coeffs = _pmod(coeffs, self.modulus, p)
        return sum((c % p) * p ** i for i, c in enumerate(coeffs))

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch(f"{value} is not in {self}")
            return value
        if isinstance(value, int):
            # integers map through Z -> F_p
            return FieldElem(self, value % self.p)
        return FieldElem(self, self.int_of(value))

    def from_int(self, v: int) -> "FieldElem":
        if not 0 <= v < self.q:
            raise ValueError(f"{v} out of range for {self}")
        return FieldElem(self, v)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def gen(self) -> "FieldElem":
        """The class of x (the zero element when n = 1, since the modulus is x)."""
        return FieldElem(self, self.int_of([0, 1]))

    def _check_enumerable(self) -> None:
        if self.q > ENUMERATION_BOUND:
            raise BudgetExceeded(self.q, ENUMERATION_BOUND, "field elements")

    def elements(self) -> Iterator["FieldElem"]:
        self._check_enumerable()
        return (FieldElem(self, v) for v in range(self.q))

    def units(self) -> Iterator["FieldElem"]:
        self._check_enumerable()
        return (FieldElem(self, v) for v in range(1, self.q))

    # -- integer-level arithmetic -------------------------------------------------

    def add_int(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % self.p
        p, out, w = self.p, 0, 1
        for _ in range(self.n):
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg_int(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.n == 1:
            return (-a) % self.p
        p, out, w = self.p, 0, 1
        for _ in range(self.n):
            out += ((-(a % p)) % p) * w
            a //= p
            w *= p
        return out

    def _mul_poly(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        prod = _pmul(list(self.coeffs_of(a)), list(self.coeffs_of(b)), self.p)
        return self.int_of(_pmod(prod, self.modulus, self.p))

    @cached_property
    def primitive_element(self) -> "FieldElem":
        """Smallest element of multiplicative order q - 1."""
        qs = _prime_factors(self.q - 1)
        for v in range(1, self.q):
            if all(self._pow_poly(v, (self.q - 1) // r) != 1 for r in qs):
                return FieldElem(self, v)
        raise AssertionError("no primitive element")

    def _pow_poly(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul_poly(out, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return out

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]] | None:
        if self.q > TABLE_BOUND:
            return None
        g = self.primitive_element.value
        exp = [1] * (self.q - 1)
        log = [0] * self.q
        x = 1
        for k in range(self.q - 1):
            exp[k] = x
            log[x] = k
            x = self._mul_poly(x, g)
        return exp, log

    def mul_int(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        t = self._tables
        if t is None:
            return self._mul_poly(a, b)
        exp, log = t
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv_int(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        t = self._tables
        if t is None:
            return self._pow_poly(a, self.q - 2)
        exp, log = t
        return exp[(-log[a]) % (self.q - 1)]

    def pow_int(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv_int(a), -e
        if not a:
            return 1 if e == 0 else 0
        t = self._tables
        if t is None:
            return self._pow_poly(a, e)
        exp, log = t
        return exp[(log[a] * e) % (self.q - 1)]

    def log_int(self, a: int) -> int:
        """Discrete logarithm to the primitive element (tables only)."""
        t = self._tables
        if t is None:
            raise BudgetExceeded(self.q, TABLE_BOUND, "log table size")
        return t[1][a]

    # -- numpy tables for enumeration ---------------------------------------------

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self.q > 4096:
            raise BudgetExceeded(self.q, 4096, "multiplication table size")
        exp, log = self._tables
        q = self.q
        lg = np.array(log, dtype=np.int64)
        ex = np.array(exp, dtype=np.int64)
        tab = ex[(lg[:, None] + lg[None, :]) % (q - 1)]
        tab[0, :] = 0
        tab[:, 0] = 0
        return tab

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg_int(v) for v in range(self.q)], dtype=np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        return np.array([0] + [self.inv_int(v) for v in range(1, self.q)], dtype=np.int64)


class FieldElem:
    """Immutable element of a ``Field``."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.value)

    def _other(self, o) -> int:
        if isinstance(o, FieldElem):
            if o.field != self.field:
                raise FieldMismatch(f"{o.field} vs {self.field}")
            return o.value
        if isinstance(o, int):
            return o % self.field.p
        raise TypeError(f"cannot combine {o!r} with a field element")

    def __add__(self, o):
        return FieldElem(self.field, self.field.add_int(self.value, self._other(o)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, self.field.neg_int(self.value))

    def __sub__(self, o):
        return FieldElem(self.field, self.field.add_int(self.value, self.field.neg_int(self._other(o))))

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        return FieldElem(self.field, self.field.mul_int(self.value, self._other(o)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv_int(self.value))

    def __truediv__(self, o):
        return FieldElem(self.field, self.field.mul_int(self.value, self.field.inv_int(self._other(o))))

    def __rtruediv__(self, o):
        return FieldElem(self.field, self._other(o)) / self

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow_int(self.value, e))

    def frobenius(self, k: int = 1) -> "FieldElem":
        return self ** (self.field.p ** k)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, o) -> bool:
        if isinstance(o, int):
            return self.value == o % self.field.p and self.value < self.field.p
        if not isinstance(o, FieldElem):
            return NotImplemented
        return self.field == o.field and self.value == o.value

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.n, self.value))

    def __lt__(self, o: "FieldElem") -> bool:
        return self.value < o.value

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElem({self.field.p}^{self.field.n}, {self.coeffs})"

    def __str__(self) -> str:
        return str(self.coeffs)


@lru_cache(maxsize=None)
def make_field(p: int, n: int = 1) -> Field:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(n, int) or n < 1:
        raise DegreeZero(f"degree must be at least 1, got {n}")
    return Field(p, n, smallest_irreducible(p, n))


def field_of_order(q: int) -> Field:
    for p in range(2, q + 1):
        if q % p == 0:
            n, r = 0, q
            while r % p == 0:
                r //= p
                n += 1
            if r != 1 or not is_prime(p):
                break
            return make_field(p, n)
    raise NotPrime(f"{q} is not a prime power")


# -- subfields ----------------------------------------------------------------

def _check_subfield(base: Field, top: Field) -> int:
    if base.p != top.p or top.n % base.n:
        raise NotASubfield(f"{base} is not a subfield of {top}")
    return top.n // base.n


@lru_cache(maxsize=None)
def _embedding_root(base: Field, top: Field) -> int:
    """Image in ``top`` of the class of x in ``base``."""
    m = _check_subfield(base, top)
    if base.n == 1:
        return 0
    if m == 1:
        return base.gen.value
    a, c = base.n, top.n
    mids = [b for b in range(a + 1, c) if b % a == 0 and c % b == 0]
    if mids:
        mid = make_field(base.p, mids[0])
        return embed(embed(base.gen, mid), top).value
    Q, qb = top.q, base.q
    g = top.primitive_element.value
    step = (Q - 1) // (qb - 1)
    cand = [0] + [top.pow_int(g, step * k) for k in range(qb - 1)]
    roots = []
    for r in cand:
        acc = 0
        for coef in reversed(base.modulus):
            acc = top.add_int(top.mul_int(acc, r), coef % top.p)
        if acc == 0:
            roots.append(r)
    if not roots:
        raise EmbeddingNotFound(f"no root of {base.modulus_str()} in {top}")
    return min(roots)


@lru_cache(maxsize=None)
def _embedding_table(base: Field, top: Field) -> tuple[int, ...] | None:
    if base.q > TABLE_BOUND:
        return None
    return tuple(_embed_int(base, top, v) for v in range(base.q))


def _embed_int(base: Field, top: Field, v: int) -> int:
    if base.n == 1:
        return v
    r = _embedding_root(base, top)
    acc = 0
    for c in reversed(base.coeffs_of(v)):
        acc = top.add_int(top.mul_int(acc, r), c)
    return acc


def embed(x: FieldElem, top: Field) -> FieldElem:
    """Ring embedding of x's field into ``top``, fixed once per pair."""
    base = x.field
    _check_subfield(base, top)
    if base == top:
        return x
    tab = _embedding_table(base, top)
    if tab is not None:
        return FieldElem(top, tab[x.value])
    return FieldElem(top, _embed_int(base, top, x.value))


@lru_cache(maxsize=None)
def _preimage(base: Field, top: Field) -> dict[int, int]:
    tab = _embedding_table(base, top)
    if tab is None:
        raise BudgetExceeded(base.q, TABLE_BOUND, "subfield size")
    return {t: b for b, t in enumerate(tab)}


def restrict(y: FieldElem, base: Field) -> FieldElem:
    """Inverse of ``embed``; raises NotASubfield if y is not in the image."""
    top = y.field
    _check_subfield(base, top)
    if base == top:
        return y
    pre = _preimage(base, top)
    if y.value not in pre:
        raise NotASubfield(f"{y} does not lie in the image of {base}")
    return FieldElem(base, pre[y.value])


def trace_to_subfield(x: FieldElem, base: Field) -> FieldElem:
    """Tr(x) = sum_{i<m} x^{q^i}, q = |base|, expressed in ``base``."""
    top = x.field
    m = _check_subfield(base, top)
    acc = top.zero
    y = x
    for _ in range(m):
        acc = acc + y
        y = y ** base.q
    return restrict(acc, base)


def absolute_trace(x: FieldElem) -> int:
    """Trace down to the prime field, as an integer mod p."""
    return trace_to_subfield(x, make_field(x.field.p, 1)).value


def character_exponent(c: FieldElem, y: FieldElem) -> int:
    """k with (c chi_0)(y) = zeta_p^k, for the reference chi_0 = zeta_p^Tr."""
    return absolute_trace(c * y)
