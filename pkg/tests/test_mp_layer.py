import itertools

import pytest

from simplesc.chevalley import structure_constants
from simplesc.errors import FieldMismatch, RankMismatch
from simplesc.gf import make_field
from simplesc.mp_layer import (Covector, TorusElem, delta, is_stable, omega_act, stable_covectors,
                               torus_act, torus_elements)
from simplesc.root_data import build_root_datum, omega_group


def test_delta_examples():
    rd = build_root_datum("A", 1)
    F = make_field(5)
    assert delta(rd, Covector.of(F, [1, 1])) == 1
    assert delta(rd, Covector.of(F, [4, 1])) == 4
    g2 = build_root_datum("G", 2)
    F7 = make_field(7)
    assert delta(g2, Covector.of(F7, [1, 2, 3])) == F7(2 ** 3 * 3 ** 2)
    assert not is_stable(g2, Covector.of(F7, [1, 0, 3]))


@pytest.mark.parametrize("fam,r,p,n", [("A", 2, 3, 1), ("B", 2, 2, 2), ("G", 2, 5, 1), ("C", 3, 3, 1)])
def test_delta_homogeneous(fam, r, p, n):
    rd = build_root_datum(fam, r)
    F = make_field(p, n)
    for lam in itertools.islice(stable_covectors(rd, F), 50):
        for c in F.units():
            assert delta(rd, lam.scale(c)) == c ** rd.coxeter_number * delta(rd, lam)


@pytest.mark.parametrize("fam,r,p,n", [("A", 2, 5, 1), ("B", 3, 3, 1), ("D", 4, 3, 1), ("G", 2, 2, 2),
                                       ("E", 6, 3, 1), ("A", 3, 2, 2)])
def test_actions_preserve_delta(fam, r, p, n):
    rd = build_root_datum(fam, r)
    table = structure_constants(rd)
    F = make_field(p, n)
    om = omega_group(rd)
    tori = list(itertools.islice(torus_elements(rd, F), 20))
    for lam in itertools.islice(stable_covectors(rd, F), 30):
        d = delta(rd, lam)
        for t in tori:
            assert delta(rd, torus_act(rd, t, lam)) == d
        for sigma in om.elements:
            assert delta(rd, omega_act(rd, table, sigma, lam)) == d


def test_torus_action_is_a_homomorphism():
    rd = build_root_datum("B", 2)
    F = make_field(5)
    lam = Covector.of(F, [1, 2, 3])
    ts = list(torus_elements(rd, F))
    for s in ts[:6]:
        for t in ts[:6]:
            assert torus_act(rd, s * t, lam) == torus_act(rd, s, torus_act(rd, t, lam))


@pytest.mark.parametrize("fam,r", [("A", 1), ("A", 2), ("B", 2), ("G", 2)])
def test_stable_stabilizers_trivial(fam, r):
    rd = build_root_datum(fam, r)
    F = make_field(5)
    for lam in itertools.islice(stable_covectors(rd, F), 10):
        fixers = [t for t in torus_elements(rd, F) if torus_act(rd, t, lam) == lam]
        assert fixers == [TorusElem.identity(F, rd.rank)]


def test_omega_action_permutes_coordinates():
    rd = build_root_datum("A", 2)
    table = structure_constants(rd)
    F = make_field(7)
    lam = Covector.of(F, [1, 2, 3])
    sigma = (1, 2, 0)
    img = omega_act(rd, table, sigma, lam)
    for j in range(3):
        assert img.coeffs[sigma[j]] in (lam.coeffs[j], -lam.coeffs[j])


def test_errors():
    rd = build_root_datum("A", 2)
    F = make_field(3)
    with pytest.raises(RankMismatch):
        delta(rd, Covector.of(F, [1, 1]))
    with pytest.raises(RankMismatch):
        torus_act(rd, TorusElem((F.one,)), Covector.of(F, [1, 1, 1]))
    with pytest.raises(FieldMismatch):
        torus_act(rd, TorusElem.identity(make_field(5), 2), Covector.of(F, [1, 1, 1]))
    with pytest.raises(RankMismatch):
        Covector(F, ())
    with pytest.raises(ValueError):
        TorusElem((F.zero,))
