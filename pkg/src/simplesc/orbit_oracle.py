"""Brute-force orbits on the stable locus.

Every stable covector has all coordinates nonzero, so the stable locus is
(F^x)^{l+1}.  Vectors are indexed by their coordinate ints in mixed radix
q-1; each generator of the acting group is applied to the whole locus at once
through the field's multiplication tables, and orbits are the connected
components of the resulting graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .chevalley import ChevalleyTable, omega_action_signs
from .errors import BudgetExceeded, FieldMismatch
from .gf import Field
from .mp_layer import Covector
from .root_data import RootDatum, omega_group

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Partition:
    """Orbit labels of the stable vectors of one (root datum, field)."""

    rd: RootDatum
    field: Field
    labels: np.ndarray
    count: int

    def index(self, lam: Covector) -> int:
        if lam.field != self.field:
            raise FieldMismatch("covector over a different field")
        return _encode(lam.ints(), self.field.q)

    def label(self, lam: Covector) -> int:
        return int(self.labels[self.index(lam)])

    def sizes(self) -> list[int]:
        return sorted(np.bincount(self.labels, minlength=self.count).tolist())

    def same_partition(self, other: "Partition") -> bool:
        return same_partition(self.labels, other.labels)


def same_partition(a: np.ndarray, b: np.ndarray) -> bool:
    """Two labelings of the same set define the same partition."""
    pairs = np.unique(np.stack([a, b], axis=1), axis=0)
    return len(pairs) == len(np.unique(a)) == len(np.unique(b))


def _encode(ints: Sequence[int], q: int) -> int:
    idx = 0
    for k, v in enumerate(ints):
        if v == 0:
            raise ValueError("covector is not stable")
        idx += (v - 1) * (q - 1) ** k
    return idx


def stable_locus(rd: RootDatum, F: Field) -> np.ndarray:
    """Array of shape (N, l+1) with the coordinate ints of every stable vector."""
    n = rd.rank + 1
    # reversed so that column k is the k-th mixed-radix digit, row r has index r
    grids = np.indices((F.q - 1,) * n).reshape(n, -1).T[:, ::-1]
    return np.ascontiguousarray(grids) + 1


def _index_array(coords: np.ndarray, q: int) -> np.ndarray:
    radix = (q - 1) ** np.arange(coords.shape[1], dtype=np.int64)
    return (coords - 1) @ radix


def _check_budget(rd: RootDatum, F: Field, ngens: int, budget: int) -> int:
    n = (F.q - 1) ** (rd.rank + 1)
    needed = n * ngens
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    return n


def torus_generators(rd: RootDatum, F: Field) -> list[np.ndarray]:
    """Coordinate multipliers of omega_i^vee(g) for a primitive g, i = 1..l."""
    g = F.primitive_element
    out = []
    for i in range(1, rd.rank + 1):
        mult = [F.one] * (rd.rank + 1)
        mult[0] = g ** rd.marks[i]
        mult[i] = g.inverse()
        out.append(np.array([m.value for m in mult], dtype=np.int64))
    return out


def omega_generators(rd: RootDatum, table: ChevalleyTable) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    om = omega_group(rd)
    return [(om.elements[k], omega_action_signs(table, om.elements[k])) for k in range(1, len(om))]


def _components(n: int, images: list[np.ndarray]) -> tuple[int, np.ndarray]:
    if not images:
        return n, np.arange(n)
    src = np.concatenate([np.arange(n)] * len(images))
    dst = np.concatenate(images)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    count, labels = connected_components(graph, directed=True, connection="weak")
    return count, _canonical(labels)


def _canonical(labels: np.ndarray) -> np.ndarray:
    """Relabel so that parts are numbered by their smallest member."""
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    remap = np.empty_like(order)
    remap[order] = np.arange(len(order))
    return remap[labels]


def _torus_images(coords: np.ndarray, F: Field, gens: list[np.ndarray]) -> list[np.ndarray]:
    mul = F.mul_table
    out = []
    for m in gens:
        img = mul[coords, m[None, :]]
        out.append(_index_array(img, F.q))
    return out


def _omega_images(coords: np.ndarray, F: Field, gens) -> list[np.ndarray]:
    neg = F.neg_table
    out = []
    for sigma, eps in gens:
        img = np.empty_like(coords)
        for j, s in enumerate(sigma):
            col = coords[:, j]
            img[:, s] = col if eps[j] == 1 else neg[col]
        out.append(_index_array(img, F.q))
    return out


def torus_orbits(rd: RootDatum, F: Field, budget: int = DEFAULT_BUDGET) -> Partition:
    gens = torus_generators(rd, F)
    n = _check_budget(rd, F, len(gens), budget)
    coords = stable_locus(rd, F)
    count, labels = _components(n, _torus_images(coords, F, gens))
    return Partition(rd, F, labels, count)


def hx_orbits(rd: RootDatum, table: ChevalleyTable, F: Field, budget: int = DEFAULT_BUDGET) -> Partition:
    tgens = torus_generators(rd, F)
    ogens = omega_generators(rd, table)
    n = _check_budget(rd, F, len(tgens) + len(ogens), budget)
    coords = stable_locus(rd, F)
    images = _torus_images(coords, F, tgens) + _omega_images(coords, F, ogens)
    count, labels = _components(n, images)
    return Partition(rd, F, labels, count)


def delta_values(rd: RootDatum, F: Field) -> np.ndarray:
    """Delta of every stable vector, as field ints, by repeated table products."""
    mul = F.mul_table
    coords = stable_locus(rd, F)
    out = np.ones(len(coords), dtype=np.int64)
    for j, c in enumerate(rd.marks):
        for _ in range(c):
            out = mul[out, coords[:, j]]
    return out


def check_delta_classification(rd: RootDatum, table: ChevalleyTable, F: Field,
                               budget: int = DEFAULT_BUDGET) -> dict:
    hx = hx_orbits(rd, table, F, budget)
    tor = torus_orbits(rd, F, budget)
    fibers = delta_values(rd, F)
    fiber_count = len(np.unique(fibers))
    match = same_partition(hx.labels, fibers) and hx.count == F.q - 1
    return {
        "type": rd.name,
        "q": F.q,
        "field": str(F),
        "stable_vectors": int(len(fibers)),
        "orbit_count": hx.count,
        "torus_orbit_count": tor.count,
        "fiber_count": fiber_count,
        "torus_equals_hx": tor.same_partition(hx),
        "match": bool(match),
    }


def orbit_criterion(part: Partition, lam1: Covector, c1, lam2: Covector, c2) -> bool:
    """Is there g in H_x with g.lam1 = c lam2, where c = c2 / c1?"""
    c = c2 / c1
    return part.label(lam1) == part.label(lam2.scale(c))


DEFAULT_TYPES = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4))
DEFAULT_QS = (2, 3, 4, 5, 7, 8, 9)
E_TYPES = (("E", 6), ("E", 7), ("E", 8))
MATRIX_BOUND = 10**6


def default_matrix(q_max: int | None = None, bound: int = MATRIX_BOUND) -> list[tuple[str, int, int]]:
    out = []
    for fam, r in DEFAULT_TYPES:
        for q in DEFAULT_QS:
            if (q_max is None or q <= q_max) and (q - 1) ** (r + 1) <= bound:
                out.append((fam, r, q))
    for fam, r in E_TYPES:
        for q in (2, 3):
            if (q_max is None or q <= q_max) and (q - 1) ** (r + 1) <= bound:
                out.append((fam, r, q))
    return out
