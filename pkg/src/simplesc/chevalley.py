"""Chevalley structure constants and signs of Weyl representatives.

Signs of the structure constants are fixed by declaring N = +(p+1) on every
extraspecial pair, positive roots ordered by (height, coordinates), together
with N_{-a,-b} = -N_{a,b}.  All remaining constants follow from the
three-term and four-term relations.

The representative of a simple reflection is
``n_i = u_{a_i}(1) u_{-a_i}(-1) u_{a_i}(1)``; its adjoint action is evaluated
as a product of three terminating exponential series of ``ad`` on the integral
Chevalley lattice, so everything here is computed over Z.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import WordInvalid
from .root_data import Perm, Root, RootDatum, Word, neg, omega_group

# A Lie algebra vector: ("e", root) or ("h", i) -> integer coefficient.
Key = tuple
Vector = dict


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def string_p(roots, a: Root, b: Root) -> int:
    """Largest p with b - p*a in ``roots``."""
    p, x = 0, _sub(b, a)
    while x in roots:
        p += 1
        x = _sub(x, a)
    return p


class _Builder:
    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.pos_index = {r: k for k, r in enumerate(rd.positive_roots)}
        self.roots = set(rd.all_roots)
        self.memo: dict[tuple[Root, Root], int] = {}
        self.extraspecial: dict[Root, tuple[Root, Root]] = {}
        for z in rd.positive_roots:
            for a in rd.positive_roots:
                if self.pos_index[a] >= self.pos_index[z]:
                    break
                b = _sub(z, a)
                if b in self.pos_index:
                    self.extraspecial[z] = (a, b)
                    break

    def string_p(self, a: Root, b: Root) -> int:
        return string_p(self.roots, a, b)

    def n(self, a: Root, b: Root) -> int:
        s = _add(a, b)
        if s not in self.roots:
            raise KeyError(f"{a} + {b} is not a root")
        pa, pb = a in self.pos_index, b in self.pos_index
        if pa and pb:
            return self._n_pos(a, b)
        if not pa and not pb:
            return -self._n_pos(neg(a), neg(b))
        if not pa:
            return -self.n(b, a)
        norm = self.rd.norm
        if s in self.pos_index:
            val = Fraction(-norm(s), norm(a)) * self._n_pos(neg(b), s)
        else:
            val = Fraction(norm(s), norm(b)) * self._n_pos(neg(s), a)
        if val.denominator != 1:
            raise AssertionError(f"non-integral structure constant for {a}, {b}")
        return int(val)

    def _n_pos(self, x: Root, y: Root) -> int:
        key = (x, y)
        if key in self.memo:
            return self.memo[key]
        if self.pos_index[x] > self.pos_index[y]:
            val = -self._n_pos(y, x)
        else:
            z = _add(x, y)
            a, b = self.extraspecial[z]
            nab = self.string_p(a, b) + 1
            if x == a:
                val = nab
            else:
                norm = self.rd.norm
                acc = Fraction(0)
                ya = _sub(y, a)
                if ya in self.roots:
                    acc += Fraction(self.n(y, neg(a)) * self.n(x, neg(b)), norm(ya))
                xa = _sub(x, a)
                if xa in self.roots:
                    acc += Fraction(self.n(neg(a), x) * self.n(y, neg(b)), norm(xa))
                v = acc * norm(z) / nab
                if v.denominator != 1:
                    raise AssertionError(f"non-integral structure constant for {x}, {y}")
                val = int(v)
        self.memo[key] = val
        return val


@dataclass(frozen=True)
class ChevalleyTable:
    """Structure constants and simple-reflection signs of one root datum.

    ``reflection_signs[(i, b)] = eta`` means Ad(n_i) E_b = eta * E_{s_i b}.
    """

    rd: RootDatum
    n_constants: dict
    reflection_signs: dict

    def N(self, a: Root, b: Root) -> int:
        return self.n_constants.get((tuple(a), tuple(b)), 0)

    # -- the adjoint action -----------------------------------------------------

    def coroot(self, a: Root) -> dict[int, int]:
        """H_a in the basis of simple coroots h_1..h_l."""
        rd = self.rd
        na = rd.norm(a)
        out = {}
        for i, x in enumerate(a):
            if x:
                c = Fraction(x * rd.root_lengths[i], na)
                if c.denominator != 1:
                    raise AssertionError("non-integral coroot")
                out[i + 1] = int(c)
        return out

    def bracket_e(self, a: Root, v: Vector) -> Vector:
        """[E_a, v]."""
        rd = self.rd
        out: dict = {}
        for key, c in v.items():
            if not c:
                continue
            if key[0] == "h":
                # [E_a, h_i] = -<a, alpha_i^vee> E_a
                k = rd.pairing(a, key[1])
                if k:
                    out[("e", a)] = out.get(("e", a), 0) - c * k
                continue
            b = key[1]
            s = _add(a, b)
            if not any(s):
                for i, m in self.coroot(a).items():
                    out[("h", i)] = out.get(("h", i), 0) + c * m
            else:
                nab = self.N(a, b)
                if nab:
                    out[("e", s)] = out.get(("e", s), 0) + c * nab
        return {k: x for k, x in out.items() if x}

    def exp_ad(self, a: Root, t: int, v: Vector) -> Vector:
        """exp(t ad E_a) v, a finite sum with exact integer division."""
        total: dict = dict(v)
        term = dict(v)
        k = 0
        while term:
            k += 1
            term = self.bracket_e(a, term)
            for key, c in term.items():
                val = Fraction(c * t ** k, factorial(k))
                total[key] = total.get(key, 0) + val
        out = {}
        for key, c in total.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise AssertionError("non-integral exponential")
            if c:
                out[key] = int(c)
        return out

    def ad_n(self, i: int, v: Vector) -> Vector:
        """Ad(n_i) v with n_i = u_{a_i}(1) u_{-a_i}(-1) u_{a_i}(1)."""
        a = self.rd.simple_roots[i - 1]
        v = self.exp_ad(a, 1, v)
        v = self.exp_ad(neg(a), -1, v)
        return self.exp_ad(a, 1, v)

    # -- signs --------------------------------------------------------------------

    def word_sign(self, word: Word, b: Root) -> tuple[int, Root]:
        """(eps, w(b)) with Ad(n_{j_1}...n_{j_k}) E_b = eps E_{w(b)}."""
        eps = 1
        for i in reversed(word):
            eps *= self.reflection_signs[(i, b)]
            b = self.rd.reflect(i, b)
        return eps, b


def _reflection_signs(table: ChevalleyTable) -> dict:
    rd = table.rd
    signs = {}
    for i in range(1, rd.rank + 1):
        for b in rd.all_roots:
            img = table.ad_n(i, {("e", b): 1})
            target = ("e", rd.reflect(i, b))
            if len(img) != 1 or target not in img or abs(img[target]) != 1:
                raise AssertionError(f"Ad(n_{i}) E_{b} = {img} is not a signed root vector")
            signs[(i, b)] = img[target]
    return signs


@lru_cache(maxsize=None)
def structure_constants(rd: RootDatum) -> ChevalleyTable:
    builder = _Builder(rd)
    roots = rd.all_roots
    rootset = set(roots)
    consts = {}
    for a in roots:
        for b in roots:
            if _add(a, b) in rootset:
                consts[(a, b)] = builder.n(a, b)
    table = ChevalleyTable(rd, consts, {})
    object.__setattr__(table, "reflection_signs", _reflection_signs(table))
    return table


def _lookup_word(rd: RootDatum, sigma: Sequence[int]) -> Word:
    om = omega_group(rd)
    sigma = tuple(sigma)
    if sigma not in om.elements:
        raise WordInvalid(f"{sigma} is not an element of Omega({rd.name})")
    word = om.weyl_words[om.elements.index(sigma)]
    if rd.node_permutation(word) != sigma:
        raise WordInvalid(f"stored word {word} does not realize {sigma}")
    return word


def omega_signs(table: ChevalleyTable, sigma: Sequence[int]) -> tuple[int, ...]:
    """(eps_{w, beta_j})_{j=0..l} for the Weyl element w realizing sigma."""
    rd = table.rd
    word = _lookup_word(rd, sigma)
    out = []
    for j, b in enumerate(rd.affine_nodes):
        eps, img = table.word_sign(word, b)
        if img != rd.affine_nodes[sigma[j]]:
            raise WordInvalid(f"word {word} sends beta_{j} to {img}")
        out.append(eps)
    return tuple(out)


def omega_action_signs(table: ChevalleyTable, sigma: Sequence[int]) -> tuple[int, ...]:
    """(eps_{w^{-1}, w(beta_j)})_j, the signs with which m_w moves the dual basis."""
    rd = table.rd
    word = _lookup_word(rd, sigma)
    inv = tuple(reversed(word))
    out = []
    for j in range(rd.rank + 1):
        b = rd.affine_nodes[sigma[j]]
        eps, img = table.word_sign(inv, b)
        if img != rd.affine_nodes[j]:
            raise WordInvalid(f"inverse word {inv} sends beta_{sigma[j]} to {img}")
        out.append(eps)
    return tuple(out)


def verify_sign_product(table: ChevalleyTable, sigma: Sequence[int]) -> bool:
    prod = 1
    for e, c in zip(omega_signs(table, sigma), table.rd.marks):
        prod *= e ** c
    return prod == 1


def n_table_csv(table: ChevalleyTable) -> str:
    """CSV dump (alpha, beta, N) with roots numbered as in ``rd.all_roots``."""
    idx = table.rd.root_index
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["alpha", "beta", "N"])
    for (a, b), n in sorted(table.n_constants.items(), key=lambda kv: (idx[kv[0][0]], idx[kv[0][1]])):
        w.writerow([idx[a], idx[b], n])
    return buf.getvalue()
