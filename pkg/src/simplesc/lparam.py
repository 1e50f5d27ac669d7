"""Numerical invariants of Langlands parameters, as exact rational functions.

Only the data that enters L-functions and conductors is modeled: the spaces
U_n, the polynomials P_n(t) = det(1 - t Frob | U_n), the conductor alpha, the
Swan conductor and the ratio C = |A_phi / Z^vee| / dim rho.  Root numbers stay
a symbolic sign.

Every statement about the parameters of simple supercuspidals is conditional
on the two working hypotheses listed in ``ASSUMPTIONS``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import HalfPowerResidue, Inconsistent
from .polynomials import IntPoly, RatFunc
from .root_data import RootDatum, omega_group

ASSUMPTIONS = {
    "A1": ("formal degree conjecture: over every unramified extension of degree m, "
           "the formal degree of a discrete series representation with parameter "
           "(phi, rho) equals dim rho / |A_phi| times |gamma(phi)/gamma(phi_pr)|, "
           "with the same Haar measure on both sides"),
    "A2": ("unramified base change: the parameter attached to the base-changed "
           "simple supercuspidal over the degree-m extension is the restriction "
           "of the original parameter, with the same rho"),
}
CONDITIONAL_ON = ["A1", "A2"]

Q = IntPoly.x("q")


def _qpow(k: int) -> RatFunc:
    return RatFunc(IntPoly.monomial(k, var="q")) if k >= 0 else RatFunc(1, IntPoly.monomial(-k, var="q"))


@dataclass(frozen=True)
class Derived:
    """A value together with the chain of identities that produced it."""

    value: RatFunc
    steps: tuple[str, ...]

    def to_json(self) -> dict:
        return {"value": self.value.to_json(), "derivation": list(self.steps)}


@dataclass(frozen=True)
class ParamNumerology:
    dim_g: int
    rank: int
    u_dims: dict
    pn: dict
    alpha: int
    swan_b: int
    artin_a: int
    inertia_fixed_dim: int
    center_order: int
    component_ratio: Fraction
    root_number: str = "±1"

    def invariant_violations(self) -> list[str]:
        bad = []
        if self.artin_a != (self.dim_g - self.inertia_fixed_dim) + self.swan_b:
            bad.append("a = dim(g/g^I) + b")
        if self.alpha != self.artin_a + sum(n * d for n, d in self.u_dims.items() if n >= 1):
            bad.append("alpha = a + sum n dim U_n")
        return bad

    def to_json(self) -> dict:
        return {
            "dim_g": self.dim_g,
            "rank": self.rank,
            "u_dims": {str(n): d for n, d in sorted(self.u_dims.items())},
            "pn": {str(n): str(p) for n, p in sorted(self.pn.items())},
            "alpha": self.alpha,
            "swan_b": self.swan_b,
            "artin_a": self.artin_a,
            "inertia_fixed_dim": self.inertia_fixed_dim,
            "center_order": self.center_order,
            "component_ratio": str(self.component_ratio),
            "root_number": self.root_number,
        }


# -- the principal parameter ----------------------------------------------------

def principal_parameter(rd: RootDatum) -> ParamNumerology:
    """Trivial on the Weil group, regular unipotent on SL_2.

    Under the principal SL_2 the dual Lie algebra splits as the sum of
    Sym^{2m} over the exponents m, so U_{2m} has dimension equal to the
    multiplicity of m and Frobenius acts trivially on it.
    """
    u: dict[int, int] = {}
    for m in rd.exponents:
        u[2 * m] = u.get(2 * m, 0) + 1
    one_minus_t = IntPoly([1, -1])
    pn = {n: one_minus_t ** d for n, d in u.items()}
    alpha = sum(n * d for n, d in u.items())
    return ParamNumerology(
        dim_g=rd.dim_g, rank=rd.rank, u_dims=u, pn=pn, alpha=alpha, swan_b=0,
        artin_a=0, inertia_fixed_dim=rd.dim_g, center_order=rd.det_cartan,
        component_ratio=Fraction(1),
    )


def _halve(p: IntPoly) -> IntPoly:
    if any(c for c in p.coeffs[1::2]):
        raise HalfPowerResidue(f"odd power of q^(1/2) in {p}")
    return IntPoly(p.coeffs[::2], "q")


def adjoint_l_ratio(p: ParamNumerology) -> RatFunc:
    """L(phi, 1) / L(phi, 0) as a rational function of q.

    With u = q^(1/2), P(u^-k) = u^(-k deg P) * rev(P)(u^k), so the ratio is
    u^(2 sum deg P_n) * prod rev(P_n)(u^n) / prod rev(P_n)(u^(n+2)).
    """
    num = IntPoly([1], "u")
    den = IntPoly([1], "u")
    shift = 0
    for n, P in sorted(p.pn.items()):
        P = P.rename("u")
        rev = P.reversed_poly()
        num = num * rev.compose_power(n)
        den = den * rev.compose_power(n + 2)
        shift += 2 * P.degree
    num = num * IntPoly.monomial(shift, var="u")
    if den.is_zero():
        raise ZeroDivisionError("L(phi, 0) has a pole")
    return RatFunc(_halve(num), _halve(den))


def kostant_product(rd: RootDatum) -> RatFunc:
    """q^l prod (q^m - 1)/(q^(m+1) - 1) over the exponents, written out directly."""
    out = _qpow(rd.rank)
    for m in rd.exponents:
        out = out * RatFunc(IntPoly.monomial(m, var="q") - 1, IntPoly.monomial(m + 1, var="q") - 1)
    return out


def mu_jx(rd: RootDatum) -> Derived:
    """Volume of J_x, eliminated between the two principal-parameter identities."""
    omega = len(omega_group(rd))
    k = kostant_product(rd)
    val = k / (_qpow(rd.rank) * omega)
    steps = (
        "L(phi_pr,1)/L(phi_pr,0) = q^l prod_i (q^m_i - 1)/(q^(m_i+1) - 1)",
        "L(phi_pr,1)/L(phi_pr,0) = |Omega| q^l mu(J_x)",
        f"mu(J_x) = prod_i (q^m_i - 1)/(q^(m_i+1) - 1) / |Omega|, |Omega| = {omega}",
        f"mu(J_x) = {val}",
    )
    return Derived(val, steps)


@dataclass(frozen=True)
class GammaValue:
    """gamma(phi_pr) = sign * |Omega| * q^(half_exponent/2) * mu(J_x)."""

    sign: str
    omega_order: int
    half_exponent: int
    mu: RatFunc

    @property
    def magnitude(self) -> RatFunc | None:
        """None when q^(half_exponent/2) is a genuine half power."""
        if self.half_exponent % 2:
            return None
        return self.mu * self.omega_order * _qpow(self.half_exponent // 2)

    def magnitude_str(self) -> str:
        m = self.magnitude
        if m is not None:
            return str(m)
        return f"q^({self.half_exponent}/2) * {self.omega_order} * ({self.mu})"

    def to_json(self) -> dict:
        m = self.magnitude
        return {
            "sign": self.sign,
            "omega_order": self.omega_order,
            "q_power": f"{self.half_exponent}/2",
            "mu": self.mu.to_json(),
            "magnitude": m.to_json() if m is not None else None,
            "magnitude_str": self.magnitude_str(),
        }


def gamma_principal(rd: RootDatum) -> GammaValue:
    return GammaValue("±", len(omega_group(rd)), rd.dim_g + rd.rank, mu_jx(rd).value)


# -- the formal-degree derivation -------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    """Trial parameter data; None marks an unknown.

    ``pn`` lists only the P_n that are not identically 1.
    """

    pn: dict | None = None
    alpha: int | None = None
    component_ratio: Fraction | None = None
    label: str = ""

    @classmethod
    def unknowns(cls) -> "Candidate":
        return cls(label="unknowns")


@dataclass(frozen=True)
class Verdict:
    alpha_forced: int
    pn_all_constant: bool
    C_forced: Fraction
    consistent: bool
    sl2_trivial: bool
    rho_trivial: bool
    reason: str = ""
    steps: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "alpha_forced": self.alpha_forced,
            "pn_all_constant": self.pn_all_constant,
            "C_forced": str(self.C_forced),
            "consistent": self.consistent,
            "sl2_trivial": self.sl2_trivial,
            "rho_trivial": self.rho_trivial,
            "reason": self.reason,
            "derivation": list(self.steps),
        }


def _half_substitute(P: IntPoly, n: int) -> IntPoly | None:
    """P(t^(n/2)), or None if n is odd and P is not a polynomial in t^2."""
    if n % 2 == 0:
        return P.compose_power(n // 2)
    if any(c for c in P.coeffs[1::2]):
        return None
    return IntPoly(P.coeffs[::2], P.var).compose_power(n)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x <= 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a != x.numerator or b * b != x.denominator:
        return None
    return Fraction(a, b)


_GENERIC_STEPS = (
    "f(t) = prod_n P_n(t^(n/2)), g(t) = prod_n P_n(t^(1+n/2))",
    "formal degree of pi over k_m and of its parameter agree for m = 1 mod 4d (A1, A2)",
    "=> f(t)^2 = C^2 t^(alpha - dim g - l) g(t)^2 as rational functions",
    "f(0) = g(0) = 1 => alpha = dim g + l",
    "deg g - deg f = sum_n deg P_n = 0 => every P_n is constant, and P_n(0) = 1 => P_n = 1",
    "=> C^2 = 1, C > 0 => C = 1 => A_phi = Z^vee and rho is trivial",
    "P_2 = 1 => U_2 = 0 => the SL_2 factor acts trivially",
)


def derive_from_fdc(rd: RootDatum, cand: Candidate) -> Verdict:
    forced_alpha = rd.dim_g + rd.rank
    base = dict(alpha_forced=forced_alpha, pn_all_constant=True, C_forced=Fraction(1),
                sl2_trivial=True, rho_trivial=True)

    if cand.pn is None:
        reason = ""
        if cand.alpha is not None and cand.alpha != forced_alpha:
            reason = f"alpha = {cand.alpha} contradicts the forced value {forced_alpha}"
        elif cand.component_ratio is not None and cand.component_ratio != 1:
            reason = f"C = {cand.component_ratio} contradicts the forced value 1"
        return Verdict(consistent=not reason, reason=reason,
                       steps=_GENERIC_STEPS + (f"alpha = {rd.dim_g} + {rd.rank} = {forced_alpha}",), **base)

    def fail(reason: str, steps: list[str]) -> Verdict:
        return Verdict(consistent=False, reason=reason, steps=tuple(steps), **base)

    steps = [_GENERIC_STEPS[0]]
    pn = {n: P.rename("t") for n, P in sorted(cand.pn.items())}
    for n, P in pn.items():
        if P.at_zero != 1:
            return fail(f"P_{n}(0) = {P.at_zero}, but a characteristic polynomial has value 1 at 0", steps)
    f = IntPoly([1])
    g = IntPoly([1])
    for n, P in pn.items():
        a, b = _half_substitute(P, n), _half_substitute(P, n + 2)
        if a is None or b is None:
            return fail(f"P_{n} violates the parity guarantee for odd n", steps)
        f, g = f * a, g * b
    steps.append(f"f(t) = {f}, g(t) = {g}")
    if f.is_zero() or g.is_zero():
        return fail("f or g vanishes identically, so the L-ratio is degenerate", steps)

    k = 2 * (f.valuation() - g.valuation())
    # f^2 = C^2 t^k g^2 means f^2 / t^k and g^2 are proportional polynomials
    f2, g2 = f * f, g * g
    f2 = IntPoly(f2.coeffs[k:]) if k >= 0 else IntPoly((0,) * -k + f2.coeffs)
    if f2.degree != g2.degree:
        return fail(f"deg f^2/t^{k} = {f2.degree} but deg g^2 = {g2.degree}", steps)
    r = Fraction(f2.leading, g2.leading)
    if f2 * r.denominator != g2 * r.numerator:
        return fail(f"f^2 / (t^{k} g^2) is not constant", steps)
    C = _rational_sqrt(r)
    if C is None:
        return fail(f"C^2 = {r} has no positive rational root", steps)
    alpha = forced_alpha + k
    steps.append(f"identity holds with alpha = {alpha}, C = {C}")
    if cand.alpha is not None and cand.alpha != alpha:
        return fail(f"alpha = {cand.alpha}, but the identity needs alpha = {alpha}", steps)
    if cand.component_ratio is not None and cand.component_ratio != C:
        return fail(f"C = {cand.component_ratio}, but the identity needs C = {C}", steps)
    nonconst = [n for n, P in pn.items() if not P.is_constant()]
    if alpha != forced_alpha or nonconst or C != 1:
        raise Inconsistent(f"identity satisfied with alpha={alpha}, C={C}, non-constant P_n for n in {nonconst}")
    return Verdict(consistent=True, steps=tuple(steps), **base)


def perturbed_candidates(rd: RootDatum) -> list[Candidate]:
    """Twenty candidates that each break one conclusion of the derivation."""
    a0 = rd.dim_g + rd.rank
    t = IntPoly.x()
    one = IntPoly([1])
    pn_mut = [
        ("P_2 = 1 - t", {2: one - t}),
        ("P_2 = 1 + t", {2: one + t}),
        ("P_2 = (1 - t)^2", {2: (one - t) ** 2}),
        ("P_2 = 1 + 2t", {2: one + t * 2}),
        ("P_1 = 1 - t^2", {1: one - t ** 2}),
        ("P_1 = 1 + t^2", {1: one + t ** 2}),
        ("P_3 = 1 - t^2", {3: one - t ** 2}),
        ("P_5 = 1 - t^2", {5: one - t ** 2}),
        ("P_4 = 1 - t", {4: one - t}),
        ("P_6 = 1 - t + t^2", {6: one - t + t ** 2}),
        ("P_0 = 1 - t", {0: one - t}),
        ("P_0 = 1 + t", {0: one + t}),
        ("P_2 = P_4 = 1 - t", {2: one - t, 4: one - t}),
        ("principal P_n", dict(principal_parameter(rd).pn)),
    ]
    out = [Candidate(pn, a0, None, label) for label, pn in pn_mut]
    for d in (1, -1, 2, -2, rd.rank):
        out.append(Candidate({}, a0 + d, None, f"alpha = dim g + l + ({d})"))
    out.append(Candidate({1: one - t ** 2}, a0 + 1, None, "P_1 = 1 - t^2, alpha + 1"))
    return out


# -- simple supercuspidal parameters ----------------------------------------------

def ssc_parameter(rd: RootDatum) -> ParamNumerology:
    """Numerology forced on the parameter of any simple supercuspidal."""
    v = derive_from_fdc(rd, Candidate.unknowns())
    # all U_n vanish, in particular (g^vee)^I = U_0 = 0, so alpha = a = dim g + b
    swan = v.alpha_forced - rd.dim_g
    return ParamNumerology(
        dim_g=rd.dim_g, rank=rd.rank, u_dims={}, pn={}, alpha=v.alpha_forced, swan_b=swan,
        artin_a=v.alpha_forced, inertia_fixed_dim=0, center_order=rd.det_cartan,
        component_ratio=v.C_forced,
    )


def ssc_parameter_invariants(rd: RootDatum) -> dict:
    p = ssc_parameter(rd)
    if p.invariant_violations():
        raise Inconsistent(f"conductor decomposition fails: {p.invariant_violations()}")
    if p.alpha != p.dim_g + p.swan_b:
        raise Inconsistent("alpha != dim g + swan")
    if p.alpha - principal_parameter(rd).alpha != 2 * rd.rank:
        raise Inconsistent("alpha(ssc) - alpha(principal) != 2l")
    lratio = adjoint_l_ratio(p)
    return {
        "type": rd.name,
        "alpha": p.alpha,
        "swan": p.swan_b,
        "L_trivial": lratio == RatFunc(1, 1, "q"),
        "packet_size": 1,
        "inertia_fixed_dim": p.inertia_fixed_dim,
        "center_order": p.center_order,
        "derivations": {
            "alpha": "formal degree identity forces alpha = dim g + l",
            "swan": "a = dim(g/g^I) + b with g^I = 0 and alpha = a, so b = alpha - dim g = l",
            "L_trivial": "every P_n is 1",
            "packet_size": "C = 1 forces A_phi = Z^vee and rho trivial, so the packet is a singleton",
            "inertia_fixed_dim": "P_0 = 1 means U_0 = (g^vee)^I = 0",
        },
        "conditional_on": list(CONDITIONAL_ON),
    }
