"""Classification of simple supercuspidals at the barycenter.

A representation is determined by a stable covector lambda, a nontrivial
additive character chi of F_q and a character psi of Omega.  Characters are
kept formal: the scalar c stands for y -> chi_0(c y) with the reference
chi_0(y) = zeta_p^{Tr(y)}.  Since (lambda, c chi) and (c lambda, chi) give the
same representation, the pair (lambda, c) lives in the class of
Delta(c lambda) = c^h Delta(lambda), and the labels are (Delta-class, psi).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .errors import FieldMismatch, RankMismatch
from .gf import Field, FieldElem, embed, make_field
from .lparam import Derived, _qpow, adjoint_l_ratio, principal_parameter
from .mp_layer import Covector, delta, is_stable
from .polynomials import RatFunc
from .root_data import RootDatum, omega_group


@dataclass(frozen=True)
class InputPair:
    """(lambda, c chi_0); ``trace_marker`` m records a composition with Tr_m."""

    lam: Covector
    char_scalar: FieldElem
    trace_marker: int = 1

    def __post_init__(self):
        if self.char_scalar.field != self.lam.field:
            raise FieldMismatch("character scalar and covector over different fields")
        if self.char_scalar.is_zero():
            raise ValueError("the character must be nontrivial")

    @property
    def field(self) -> Field:
        return self.lam.field

    def to_json(self) -> dict:
        return {"lambda": self.lam.to_json(), "char_scalar": list(self.char_scalar.coeffs),
                "trace_marker": self.trace_marker}


@dataclass(frozen=True, order=True)
class SSCLabel:
    delta_class: FieldElem
    psi: int

    def to_json(self) -> dict:
        return {"delta_class": list(self.delta_class.coeffs), "psi": self.psi}


def _validate(rd: RootDatum, pair: InputPair) -> None:
    if len(pair.lam) != rd.rank + 1:
        raise RankMismatch(f"{rd.name} needs {rd.rank + 1} coordinates")
    if not is_stable(rd, pair.lam):
        raise ValueError(f"{pair.lam} is not stable")


def pair_class(rd: RootDatum, pair: InputPair) -> FieldElem:
    """Delta of the representative lambda_d with (lambda, c chi_0) ~ (lambda_d, chi_0)."""
    _validate(rd, pair)
    return delta(rd, pair.lam) * pair.char_scalar ** rd.coxeter_number


def equivalent(rd: RootDatum, p1: InputPair, p2: InputPair) -> bool:
    if p1.field != p2.field:
        raise FieldMismatch(f"{p1.field} vs {p2.field}")
    _validate(rd, p1)
    _validate(rd, p2)
    c = p2.char_scalar / p1.char_scalar
    return delta(rd, p1.lam) / delta(rd, p2.lam) == c ** rd.coxeter_number


def representative(rd: RootDatum, F: Field, c: FieldElem) -> InputPair:
    """lambda_c = c f_0 + sum_{i>=1} f_i with the reference character."""
    return InputPair(Covector(F, (c,) + (F.one,) * rd.rank), F.one)


def class_representatives(rd: RootDatum, F: Field) -> list[InputPair]:
    return [representative(rd, F, c) for c in F.units()]


def stable_pairs(rd: RootDatum, F: Field) -> Iterator[InputPair]:
    units = list(F.units())
    for coeffs in product(units, repeat=rd.rank + 1):
        lam = Covector(F, coeffs)
        for c in units:
            yield InputPair(lam, c)


def enumerate_representations(rd: RootDatum, F: Field) -> list[SSCLabel]:
    """One label per (class, character of Omega), ordered by class then psi."""
    n = len(omega_group(rd))
    out = []
    for rep in class_representatives(rd, F):
        d = pair_class(rd, rep)
        out += [SSCLabel(d, psi) for psi in range(n)]
    return sorted(out)


def formal_degree_derivation(rd: RootDatum) -> Derived:
    lratio = adjoint_l_ratio(principal_parameter(rd))
    val = _qpow(rd.rank) / lratio
    steps = (
        "deg pi = 1 / (|Omega| mu(J_x))",
        "L(phi_pr,1)/L(phi_pr,0) = |Omega| q^l mu(J_x)",
        "=> deg pi = q^l / (L(phi_pr,1)/L(phi_pr,0))",
        f"L(phi_pr,1)/L(phi_pr,0) = {lratio}",
        f"deg pi = {val}",
    )
    return Derived(val, steps)


def formal_degree_ep(rd: RootDatum, q: int | None = None) -> RatFunc | Fraction:
    """Formal degree in Euler-Poincare units; a rational function of q unless q is given."""
    val = formal_degree_derivation(rd).value
    return val if q is None else val(q)


@dataclass(frozen=True)
class BaseChange:
    pair: InputPair
    label_map: dict

    def to_json(self) -> dict:
        return {
            "pair": self.pair.to_json(),
            "labels": [[a.to_json(), b.to_json()] for a, b in sorted(self.label_map.items())],
        }


def base_change(rd: RootDatum, pair: InputPair, m: int) -> BaseChange:
    """Transport (lambda, c chi_0) to F_{q^m}.

    Trace is transitive, so (c chi_0) o Tr_m is the reference character of the
    big field scaled by the embedded c.  The psi label is unchanged.
    """
    _validate(rd, pair)
    if m < 1:
        raise ValueError("extension degree must be positive")
    F = pair.field
    top = make_field(F.p, F.n * m)
    lam = Covector(top, tuple(embed(a, top) for a in pair.lam.coeffs))
    new = InputPair(lam, embed(pair.char_scalar, top), pair.trace_marker * m)
    d_old, d_new = pair_class(rd, pair), pair_class(rd, new)
    labels = {SSCLabel(d_old, psi): SSCLabel(d_new, psi) for psi in range(len(omega_group(rd)))}
    return BaseChange(new, labels)
