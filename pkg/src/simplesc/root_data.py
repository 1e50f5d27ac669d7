"""Root systems of split simple adjoint groups and the alcove stabilizer.

Node numbering is Bourbaki; the affine node carries index 0.  Roots are
integer vectors in the basis of simple roots.  The Cartan matrix follows
``a[i][j] = <alpha_i^vee, alpha_j>``, so the Dynkin labels of a root
``b`` are ``sum_k a[j][k] b[k]``.

A Weyl group element is handled as a word ``(j_1, ..., j_k)`` meaning
``s_{j_1} s_{j_2} ... s_{j_k}``; simple reflections are numbered 1..l.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidType, WordInvalid
from .polynomials import IntPoly, cyclotomic, multiplicity

Root = tuple[int, ...]
Word = tuple[int, ...]
Perm = tuple[int, ...]

FAMILIES = "ABCDEFG"


def _diagram(family: str, rank: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Squared lengths of simple roots and the edges of the Dynkin diagram."""
    n = rank
    chain = [(i, i + 1) for i in range(1, n)]
    if family == "A" and n >= 1:
        return [2] * n, chain
    if family == "B" and n >= 2:
        return [4] * (n - 1) + [2], chain
    if family == "C" and n >= 2:
        return [2] * (n - 1) + [4], chain
    if family == "D" and n >= 4:
        return [2] * n, [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if family == "E" and n in (6, 7, 8):
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        return [2] * n, [e for e in edges if max(e) <= n]
    if family == "F" and n == 4:
        return [4, 4, 2, 2], chain
    if family == "G" and n == 2:
        return [2, 6], chain
    raise InvalidType(f"unsupported type {family}{rank}")


def _det(m: Sequence[Sequence[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return int(det)


def _charpoly(m: Sequence[Sequence[int]]) -> IntPoly:
    """det(tI - M) by the Faddeev-LeVerrier recursion, exact over Q."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs[n - k] = c
        mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return IntPoly([int(c) for c in coeffs])


@dataclass(frozen=True)
class RootDatum:
    """Combinatorial data of a reduced irreducible root system."""

    family: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    root_lengths: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    marks: tuple[int, ...]
    coxeter_number: int
    exponents: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(neg(r) for r in self.positive_roots)

    @cached_property
    def root_index(self) -> dict[Root, int]:
        return {r: k for k, r in enumerate(self.all_roots)}

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def dim_g(self) -> int:
        return len(self.all_roots) + self.rank

    @cached_property
    def det_cartan(self) -> int:
        return _det(self.cartan_matrix)

    # -- geometry -------------------------------------------------------------

    def inner(self, a: Root, b: Root) -> int:
        """Invariant form scaled so the shortest roots have squared length 2."""
        acc = 0
        for i, x in enumerate(a):
            if x:
                row = self.cartan_matrix[i]
                li = self.root_lengths[i]
                for j, y in enumerate(b):
                    if y:
                        acc += x * y * row[j] * li
        return acc // 2

    def norm(self, a: Root) -> int:
        return self.inner(a, a)

    def pairing(self, b: Root, i: int) -> int:
        """<b, alpha_i^vee> for a simple index i in 1..l."""
        row = self.cartan_matrix[i - 1]
        return sum(row[k] * b[k] for k in range(self.rank))

    def reflect(self, i: int, b: Root) -> Root:
        k = self.pairing(b, i)
        if not k:
            return b
        out = list(b)
        out[i - 1] -= k
        return tuple(out)

    def apply_word(self, word: Word, b: Root) -> Root:
        for i in reversed(word):
            b = self.reflect(i, b)
        return b

    def weight_coords(self, b: Root) -> tuple[int, ...]:
        """Dynkin labels of a root, i.e. its coordinates in the weight basis."""
        return tuple(self.pairing(b, i) for i in range(1, self.rank + 1))

    def height(self, b: Root) -> int:
        return sum(b)

    def is_positive(self, b: Root) -> bool:
        return any(b) and all(x >= 0 for x in b)

    @cached_property
    def affine_nodes(self) -> tuple[Root, ...]:
        """(beta_0, ..., beta_l) = (-highest root, alpha_1, ..., alpha_l)."""
        return (neg(self.highest_root),) + self.simple_roots

    # -- Weyl group words -------------------------------------------------------

    def reflect_weight(self, i: int, lam: Sequence[int]) -> tuple[int, ...]:
        """Simple reflection on a weight given by its Dynkin labels."""
        li = lam[i - 1]
        if not li:
            return tuple(lam)
        return tuple(lam[j] - li * self.cartan_matrix[j][i - 1] for j in range(self.rank))

    def act_weight(self, word: Word, lam: Sequence[int]) -> tuple[int, ...]:
        lam = tuple(lam)
        for i in reversed(word):
            lam = self.reflect_weight(i, lam)
        return lam

    def longest_word(self, nodes: Iterable[int] | None = None) -> Word:
        """Reduced word for the longest element of the parabolic on ``nodes``."""
        J = sorted(set(range(1, self.rank + 1) if nodes is None else nodes))
        lam = tuple(int(j in J) for j in range(1, self.rank + 1))
        applied: list[int] = []
        while True:
            i = next((j for j in J if lam[j - 1] > 0), None)
            if i is None:
                break
            lam = self.reflect_weight(i, lam)
            applied.append(i)
        # lam = s_{i_k}...s_{i_1} rho_J; the longest element is an involution
        return tuple(applied)

    def reduce_word(self, word: Word) -> Word:
        """Reduced word of the same Weyl element (tracks the image of rho)."""
        v = self.act_weight(word, (1,) * self.rank)
        out: list[int] = []
        while True:
            j = next((k for k in range(1, self.rank + 1) if v[k - 1] < 0), None)
            if j is None:
                break
            v = self.reflect_weight(j, v)
            out.append(j)
        return tuple(out)

    def word_length(self, word: Word) -> int:
        return len(self.reduce_word(word))

    def node_permutation(self, word: Word) -> Perm | None:
        """Induced permutation of {0..l} if the word preserves the affine nodes."""
        nodes = self.affine_nodes
        index = {b: j for j, b in enumerate(nodes)}
        perm = []
        for b in nodes:
            img = self.apply_word(word, b)
            if img not in index:
                return None
            perm.append(index[img])
        return tuple(perm)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "simple_roots": [list(r) for r in self.simple_roots],
            "simple_roots_weight_basis": [list(self.weight_coords(r)) for r in self.simple_roots],
            "positive_roots": [list(r) for r in self.positive_roots],
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "highest_root": list(self.highest_root),
            "marks": list(self.marks),
            "coxeter_number": self.coxeter_number,
            "exponents": list(self.exponents),
            "dim_g": self.dim_g,
            "det_cartan": self.det_cartan,
        }


def neg(b: Root) -> Root:
    return tuple(-x for x in b)


def _close_roots(cartan: Sequence[Sequence[int]], rank: int) -> list[Root]:
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(rank):
                k = sum(cartan[i][j] * b[j] for j in range(rank))
                if k:
                    r = list(b)
                    r[i] -= k
                    r = tuple(r)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
        frontier = nxt
    return [r for r in seen if all(x >= 0 for x in r)]


def _exponents_from_coxeter(cartan: Sequence[Sequence[int]], h: int) -> tuple[int, ...]:
    """Exponents read off the cyclotomic factorization of a Coxeter element."""
    n = len(cartan)
    # matrix of s_i in the simple-root basis: columns are images of alpha_j
    def refl(i: int) -> list[list[int]]:
        m = [[int(r == c) for c in range(n)] for r in range(n)]
        for j in range(n):
            m[i][j] -= cartan[i][j]
        return m

    def mul(x, y):
        return [[sum(x[r][t] * y[t][c] for t in range(n)) for c in range(n)] for r in range(n)]

    cox = [[int(r == c) for c in range(n)] for r in range(n)]
    for i in range(n):
        cox = mul(cox, refl(i))
    chi = _charpoly(cox)
    exps: list[int] = []
    for k in range(1, h + 1):
        if h % k:
            continue
        e = multiplicity(cyclotomic(k), chi)
        exps += [m for m in range(1, h) if gcd(m, h) == h // k] * e
    return tuple(sorted(exps))


@lru_cache(maxsize=None)
def build_root_datum(family: str, rank: int) -> RootDatum:
    family = str(family).upper()
    if family not in FAMILIES or not isinstance(rank, int) or rank < 1:
        raise InvalidType(f"unsupported type {family}{rank}")
    lengths, edges = _diagram(family, rank)
    sym = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        sym[i][i] = lengths[i]
    for i, j in edges:
        sym[i - 1][j - 1] = sym[j - 1][i - 1] = -max(lengths[i - 1], lengths[j - 1]) // 2
    cartan = tuple(tuple(2 * sym[i][j] // lengths[i] for j in range(rank)) for i in range(rank))
    pos = sorted(_close_roots(cartan, rank), key=lambda r: (sum(r), r))
    top = pos[-1]
    if len(pos) > 1 and sum(pos[-2]) == sum(top):
        raise AssertionError("highest root is not unique")
    marks = (1,) + top
    h = sum(marks)
    exps = _exponents_from_coxeter(cartan, h)
    return RootDatum(family, rank, cartan, tuple(lengths), tuple(pos), marks, h, exps)


def exponents_via_heights(rd: RootDatum) -> tuple[int, ...]:
    """Exponents as the transposed partition of positive-root heights."""
    counts: dict[int, int] = {}
    for r in rd.positive_roots:
        counts[sum(r)] = counts.get(sum(r), 0) + 1
    top = max(counts)
    out: list[int] = []
    for k in range(1, top + 1):
        out += [k] * (counts.get(k, 0) - counts.get(k + 1, 0))
    return tuple(sorted(out))


# -- the alcove stabilizer ----------------------------------------------------

@dataclass(frozen=True)
class OmegaGroup:
    """Rotation group of the affine diagram realized inside the Weyl group.

    ``character_table[r][k]`` is the exponent e with psi_r(elements[k]) =
    exp(2 pi i e), stored as a Fraction in [0, 1).
    """

    elements: tuple[Perm, ...]
    weyl_words: tuple[Word, ...]
    group_table: tuple[tuple[int, ...], ...]
    character_table: tuple[tuple[Fraction, ...], ...]
    generators: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def order_of(self, k: int) -> int:
        n, x = 1, k
        while x != self.identity:
            x = self.group_table[x][k]
            n += 1
        return n

    def inverse(self, k: int) -> int:
        return next(j for j in range(len(self)) if self.group_table[k][j] == self.identity)

    def index_of(self, perm: Perm) -> int:
        return self.elements.index(tuple(perm))

    def to_json(self) -> dict:
        return {
            "order": len(self),
            "elements": [list(p) for p in self.elements],
            "weyl_words": [list(w) for w in self.weyl_words],
            "group_table": [list(r) for r in self.group_table],
            "generators": list(self.generators),
            "character_table": [[f"{e.numerator}/{e.denominator}" for e in row]
                                for row in self.character_table],
        }


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(j) = p(q(j))."""
    return tuple(p[j] for j in q)


def _characters(elements: Sequence[Perm], table: Sequence[Sequence[int]]):
    """Cyclic decomposition by greedy max-order choice, then the dual group."""
    n = len(elements)

    def order(k):
        m, x = 1, k
        while x != 0:
            x = table[x][k]
            m += 1
        return m

    def power(k, e):
        x = 0
        for _ in range(e):
            x = table[x][k]
        return x

    span = {0}
    gens: list[int] = []
    while len(span) < n:
        best = None
        for k in sorted(range(n), key=lambda k: (-order(k), k)):
            cyc = {power(k, e) for e in range(order(k))}
            if cyc & span == {0}:
                best = k
                break
        if best is None:
            raise AssertionError("abelian decomposition failed")
        gens.append(best)
        cyc = [power(best, e) for e in range(order(best))]
        span = {table[a][b] for a in span for b in cyc}
    orders = [order(g) for g in gens]
    # coordinates of every element in the chosen basis
    coords: dict[int, tuple[int, ...]] = {}

    def rec(idx, x, cs):
        if idx == len(gens):
            coords[x] = tuple(cs)
            return
        y = x
        for e in range(orders[idx]):
            rec(idx + 1, y, cs + [e])
            y = table[y][gens[idx]]

    rec(0, 0, [])
    if len(coords) != n:
        raise AssertionError("generators do not give a direct product")
    rows = []

    def chars(idx, ks):
        if idx == len(gens):
            row = []
            for k in range(n):
                e = sum(Fraction(ks[t] * coords[k][t], orders[t]) for t in range(len(gens)))
                row.append(e - (e.numerator // e.denominator))
            rows.append(tuple(row))
            return
        for v in range(orders[idx]):
            chars(idx + 1, ks + [v])

    chars(0, [])
    return tuple(gens), tuple(rows)


@lru_cache(maxsize=None)
def omega_group(rd: RootDatum) -> OmegaGroup:
    """Omega with realizing words w0^{J_i} w0 for the nodes with mark 1."""
    ident = tuple(range(rd.rank + 1))
    elements: list[Perm] = [ident]
    words: list[Word] = [()]
    w0 = rd.longest_word()
    for i in range(1, rd.rank + 1):
        if rd.marks[i] != 1:
            continue
        J = [j for j in range(1, rd.rank + 1) if j != i]
        word = rd.reduce_word(rd.longest_word(J) + w0)
        perm = rd.node_permutation(word)
        if perm is None:
            raise WordInvalid(f"{rd.name}: word for node {i} does not preserve the affine nodes")
        if perm[0] != i:
            raise WordInvalid(f"{rd.name}: node {i} element sends 0 to {perm[0]}")
        elements.append(perm)
        words.append(word)
    index = {p: k for k, p in enumerate(elements)}
    table = []
    for p in elements:
        row = []
        for q in elements:
            pq = compose(p, q)
            if pq not in index:
                raise AssertionError(f"{rd.name}: Omega not closed under composition")
            row.append(index[pq])
        table.append(tuple(row))
    gens, chars = _characters(elements, table)
    return OmegaGroup(tuple(elements), tuple(words), tuple(table), chars, gens)


def w0_by_search(rd: RootDatum, max_order: int = 200_000) -> set[Perm]:
    """Exhaustive oracle: node permutations of all Weyl elements fixing the nodes.

    Enumerates W through the orbit of rho; only sensible for small rank.
    """
    rho = (1,) * rd.rank
    seen = {rho: ()}
    frontier = [rho]
    while frontier:
        nxt = []
        for v in frontier:
            w = seen[v]
            for i in range(1, rd.rank + 1):
                u = rd.reflect_weight(i, v)
                if u not in seen:
                    seen[u] = (i,) + w
                    nxt.append(u)
                    if len(seen) > max_order:
                        raise ValueError(f"Weyl group of {rd.name} exceeds {max_order}")
        frontier = nxt
    found = set()
    for w in seen.values():
        perm = rd.node_permutation(w)
        if perm is not None:
            found.add(perm)
    return found


SUPPORTED_TYPES: tuple[tuple[str, int], ...] = (
    ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5), ("A", 6), ("A", 7), ("A", 8),
    ("B", 2), ("B", 3), ("B", 4), ("B", 5),
    ("C", 2), ("C", 3), ("C", 4), ("C", 5),
    ("D", 4), ("D", 5), ("D", 6), ("D", 7),
    ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
)
