import itertools

import pytest

from simplesc.chevalley import structure_constants
from simplesc.errors import FieldMismatch, NotASubfield
from simplesc.gf import embed, field_of_order, make_field
from simplesc.inventory import (InputPair, base_change, class_representatives, enumerate_representations,
                                equivalent, formal_degree_derivation, formal_degree_ep, pair_class,
                                stable_pairs)
from simplesc.lparam import mu_jx
from simplesc.mp_layer import Covector, delta, is_stable
from simplesc.orbit_oracle import hx_orbits, orbit_criterion
from simplesc.polynomials import IntPoly, RatFunc
from simplesc.root_data import SUPPORTED_TYPES, build_root_datum, omega_group

Q = IntPoly.x("q")


def test_equivalence_examples():
    rd = build_root_datum("A", 1)
    F = make_field(5)
    base = InputPair(Covector.of(F, [1, 1]), F(1))
    assert equivalent(rd, base, base)
    assert not equivalent(rd, base, InputPair(Covector.of(F, [1, 1]), F(2)))
    assert equivalent(rd, base, InputPair(Covector.of(F, [4, 1]), F(2)))


@pytest.mark.parametrize("fam,r,q", [("A", 1, 4), ("B", 2, 3), ("G", 2, 3)])
def test_equivalence_relation(fam, r, q):
    rd = build_root_datum(fam, r)
    F = field_of_order(q)
    pairs = list(stable_pairs(rd, F))
    reps = class_representatives(rd, F)
    for a in pairs:
        assert equivalent(rd, a, a)
        assert sum(equivalent(rd, a, rep) for rep in reps) == 1
    for a, b in itertools.product(pairs[:12], repeat=2):
        assert equivalent(rd, a, b) == equivalent(rd, b, a)
        for c in pairs[:12]:
            if equivalent(rd, a, b) and equivalent(rd, b, c):
                assert equivalent(rd, a, c)


def test_equivalence_matches_orbits_b2():
    rd = build_root_datum("B", 2)
    F = field_of_order(3)
    part = hx_orbits(rd, structure_constants(rd), F)
    pairs = list(stable_pairs(rd, F))
    assert len(pairs) == 16
    for a in pairs:
        for b in pairs:
            assert equivalent(rd, a, b) == orbit_criterion(part, a.lam, a.char_scalar, b.lam, b.char_scalar)


def test_representatives():
    rd = build_root_datum("A", 2)
    F = make_field(5)
    reps = class_representatives(rd, F)
    assert sorted(delta(rd, p.lam).value for p in reps) == [1, 2, 3, 4]
    assert len(class_representatives(rd, make_field(2))) == 1
    for a, b in itertools.combinations(reps, 2):
        assert not equivalent(rd, a, b)


@pytest.mark.parametrize("fam,r,q,n", [("E", 8, 7, 6), ("A", 1, 3, 4), ("D", 4, 4, 12), ("C", 3, 5, 8)])
def test_inventory_counts(fam, r, q, n):
    rd = build_root_datum(fam, r)
    labels = enumerate_representations(rd, field_of_order(q))
    assert len(labels) == len(set(labels)) == n == (q - 1) * rd.det_cartan


def test_formal_degree():
    assert formal_degree_ep(build_root_datum("A", 1)) == RatFunc(Q + 1)
    assert formal_degree_ep(build_root_datum("A", 2)) == RatFunc(Q ** 3 - 1, Q - 1)
    assert formal_degree_ep(build_root_datum("A", 1), 3) == 4
    d = formal_degree_derivation(build_root_datum("G", 2))
    assert d.steps and d.value == formal_degree_ep(build_root_datum("G", 2))


@pytest.mark.parametrize("fam,r", SUPPORTED_TYPES)
def test_consistency_square(fam, r):
    rd = build_root_datum(fam, r)
    closed = RatFunc(1)
    for m in rd.exponents:
        closed = closed * RatFunc(Q ** (m + 1) - 1, Q ** m - 1)
    assert formal_degree_ep(rd) == closed
    assert formal_degree_ep(rd) * len(omega_group(rd)) * mu_jx(rd).value == 1


def test_base_change():
    rd = build_root_datum("A", 1)
    F = make_field(3)
    pair = class_representatives(rd, F)[1]
    assert base_change(rd, pair, 1).pair == pair
    bc = base_change(rd, pair, 2)
    assert is_stable(rd, bc.pair.lam)
    assert bc.pair.field == make_field(3, 2) and bc.pair.trace_marker == 2
    assert len(enumerate_representations(rd, make_field(3, 2))) == 8 * 2
    assert [a.psi for a in bc.label_map] == [b.psi for b in bc.label_map.values()]


def test_base_change_preserves_equivalence():
    rd = build_root_datum("A", 2)
    F = make_field(3)
    top = make_field(3, 2)
    pairs = list(stable_pairs(rd, F))[:20]
    for a in pairs:
        for b in pairs:
            if equivalent(rd, a, b):
                assert equivalent(rd, base_change(rd, a, 2).pair, base_change(rd, b, 2).pair)
        assert pair_class(rd, base_change(rd, a, 2).pair) == embed(pair_class(rd, a), top)


def test_base_change_tower():
    rd = build_root_datum("A", 2)
    for pair in class_representatives(rd, make_field(2, 2)):
        two = base_change(rd, base_change(rd, pair, 2).pair, 2)
        direct = base_change(rd, pair, 4)
        assert two.pair == direct.pair


def test_errors():
    rd = build_root_datum("A", 1)
    F3, F5 = make_field(3), make_field(5)
    with pytest.raises(FieldMismatch):
        equivalent(rd, class_representatives(rd, F3)[0], class_representatives(rd, F5)[0])
    with pytest.raises(FieldMismatch):
        InputPair(Covector.of(F3, [1, 1]), F5(1))
    with pytest.raises(ValueError):
        InputPair(Covector.of(F3, [1, 1]), F3(0))
    with pytest.raises(ValueError):
        pair_class(rd, InputPair(Covector.of(F3, [0, 1]), F3(1)))
    with pytest.raises(ValueError):
        base_change(rd, class_representatives(rd, F3)[0], 0)
