import pytest

from simplesc.chevalley import (n_table_csv, omega_action_signs, omega_signs, string_p,
                                structure_constants, verify_sign_product)
from simplesc.errors import WordInvalid
from simplesc.root_data import SUPPORTED_TYPES, build_root_datum, neg, omega_group

SMALL = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2), ("D", 4)]


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def bracket(table, x, y):
    """Bilinear bracket on sparse vectors keyed ("e", root) / ("h", i)."""
    rd = table.rd
    out = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            c = cx * cy
            if kx[0] == "e":
                term = table.bracket_e(kx[1], {ky: 1})
            elif ky[0] == "e":
                term = {k: -v for k, v in table.bracket_e(ky[1], {kx: 1}).items()}
            else:
                term = {}
            for k, v in term.items():
                out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def _plus(*vs):
    out = {}
    for v in vs:
        for k, c in v.items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


@pytest.mark.parametrize("fam,r", SMALL)
def test_jacobi_identity(fam, r):
    table = structure_constants(build_root_datum(fam, r))
    rd = table.rd
    basis = [{("e", b): 1} for b in rd.all_roots] + [{("h", i): 1} for i in range(1, r + 1)]
    for x in basis:
        for y in basis:
            xy = bracket(table, x, y)
            for z in basis:
                total = _plus(bracket(table, xy, z), bracket(table, bracket(table, y, z), x),
                              bracket(table, bracket(table, z, x), y))
                assert not total


@pytest.mark.parametrize("fam,r", SUPPORTED_TYPES)
def test_structure_constant_magnitudes(fam, r):
    rd = build_root_datum(fam, r)
    table = structure_constants(rd)
    roots = set(rd.all_roots)
    for (a, b), n in table.n_constants.items():
        assert abs(n) == string_p(roots, a, b) + 1
        assert table.N(b, a) == -n
        assert table.N(neg(a), neg(b)) == -n


@pytest.mark.parametrize("fam,r", SUPPORTED_TYPES)
def test_sign_product_all_omega(fam, r):
    rd = build_root_datum(fam, r)
    table = structure_constants(rd)
    for sigma in omega_group(rd).elements:
        assert verify_sign_product(table, sigma)
        assert set(omega_signs(table, sigma)) <= {1, -1}
        assert set(omega_action_signs(table, sigma)) <= {1, -1}


def test_reflection_squares_to_sign():
    # n_i^2 = alpha_i^vee(-1), acting on E_b by (-1)^<b, alpha_i^vee>
    for fam, r in SMALL:
        rd = build_root_datum(fam, r)
        table = structure_constants(rd)
        for i in range(1, r + 1):
            for b in rd.all_roots:
                eps, img = table.word_sign((i, i), b)
                assert img == b
                assert eps == (-1) ** rd.pairing(b, i)


def test_identity_signs_trivial():
    rd = build_root_datum("A", 3)
    table = structure_constants(rd)
    assert omega_signs(table, tuple(range(4))) == (1, 1, 1, 1)


def test_bad_permutation_rejected():
    table = structure_constants(build_root_datum("A", 2))
    with pytest.raises(WordInvalid):
        omega_signs(table, (0, 2, 1))


def test_csv_dump():
    text = n_table_csv(structure_constants(build_root_datum("A", 2)))
    lines = text.strip().splitlines()
    assert lines[0] == "alpha,beta,N"
    assert len(lines) == 1 + 12
