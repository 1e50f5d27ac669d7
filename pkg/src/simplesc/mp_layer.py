"""The dual Moy-Prasad quotient at the barycenter of the fundamental alcove.

A covector is sum_i a_i f_i with i = 0..l, where f_i is dual to the root
vector attached to beta_i (beta_0 = -highest root, beta_i = alpha_i).  The
torus element prod_i omega_i^vee(t_i) acts by

    a_0 -> (prod_i t_i^{c_i}) a_0,    a_i -> t_i^{-1} a_i   (i >= 1),

and an element of Omega acts by the signed permutation
a_j f_j -> eps_j a_j f_{sigma(j)}.  The genuine Weyl representative differs
from this signed permutation by a torus element, which does not change any
orbit of the group generated by both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .chevalley import ChevalleyTable, omega_action_signs
from .errors import FieldMismatch, RankMismatch
from .gf import Field, FieldElem
from .root_data import RootDatum


@dataclass(frozen=True)
class Covector:
    field: Field
    coeffs: tuple[FieldElem, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise RankMismatch("a covector needs at least two coordinates")
        for a in self.coeffs:
            if a.field != self.field:
                raise FieldMismatch(f"coefficient {a} not in {self.field}")

    @classmethod
    def of(cls, field: Field, values: Iterable) -> "Covector":
        return cls(field, tuple(field(v) for v in values))

    @classmethod
    def from_ints(cls, field: Field, values: Iterable[int]) -> "Covector":
        return cls(field, tuple(field.from_int(v) for v in values))

    def __len__(self) -> int:
        return len(self.coeffs)

    def scale(self, c: FieldElem) -> "Covector":
        return Covector(self.field, tuple(c * a for a in self.coeffs))

    def ints(self) -> tuple[int, ...]:
        return tuple(a.value for a in self.coeffs)

    def to_json(self) -> dict:
        return {"field": self.field.descriptor(), "coeffs": [list(a.coeffs) for a in self.coeffs]}

    def __str__(self) -> str:
        return " + ".join(f"{a}*f{i}" for i, a in enumerate(self.coeffs))


@dataclass(frozen=True)
class TorusElem:
    coords: tuple[FieldElem, ...]

    def __post_init__(self):
        if any(t.is_zero() for t in self.coords):
            raise ValueError("torus coordinates must be nonzero")

    def __mul__(self, other: "TorusElem") -> "TorusElem":
        return TorusElem(tuple(a * b for a, b in zip(self.coords, other.coords)))

    @classmethod
    def identity(cls, field: Field, rank: int) -> "TorusElem":
        return cls((field.one,) * rank)


def _check(rd: RootDatum, lam: Covector) -> None:
    if len(lam) != rd.rank + 1:
        raise RankMismatch(f"{rd.name} needs {rd.rank + 1} coordinates, got {len(lam)}")


def delta(rd: RootDatum, lam: Covector) -> FieldElem:
    """prod_i a_i^{c_i}; homogeneous of degree h."""
    _check(rd, lam)
    out = lam.field.one
    for a, c in zip(lam.coeffs, rd.marks):
        out = out * a ** c
    return out


def is_stable(rd: RootDatum, lam: Covector) -> bool:
    return not delta(rd, lam).is_zero()


def torus_act(rd: RootDatum, t: TorusElem, lam: Covector) -> Covector:
    _check(rd, lam)
    if len(t.coords) != rd.rank:
        raise RankMismatch(f"{rd.name} torus has rank {rd.rank}, got {len(t.coords)}")
    F = lam.field
    for x in t.coords:
        if x.field != F:
            raise FieldMismatch("torus element and covector over different fields")
    f0 = F.one
    for ti, c in zip(t.coords, rd.marks[1:]):
        f0 = f0 * ti ** c
    out = [f0 * lam.coeffs[0]]
    out += [a / ti for a, ti in zip(lam.coeffs[1:], t.coords)]
    return Covector(F, tuple(out))


def omega_act(rd: RootDatum, table: ChevalleyTable, sigma: Sequence[int], lam: Covector) -> Covector:
    _check(rd, lam)
    if table.rd != rd:
        raise RankMismatch("Chevalley table belongs to a different root datum")
    eps = omega_action_signs(table, sigma)
    out: list = [None] * len(lam)
    for j, a in enumerate(lam.coeffs):
        out[sigma[j]] = a if eps[j] == 1 else -a
    return Covector(lam.field, tuple(out))


def all_covectors(rd: RootDatum, F: Field) -> Iterator[Covector]:
    from itertools import product
    for vals in product(range(F.q), repeat=rd.rank + 1):
        yield Covector.from_ints(F, vals)


def stable_covectors(rd: RootDatum, F: Field) -> Iterator[Covector]:
    from itertools import product
    for vals in product(range(1, F.q), repeat=rd.rank + 1):
        yield Covector.from_ints(F, vals)


def torus_elements(rd: RootDatum, F: Field) -> Iterator[TorusElem]:
    from itertools import product
    for vals in product(range(1, F.q), repeat=rd.rank):
        yield TorusElem(tuple(F.from_int(v) for v in vals))
