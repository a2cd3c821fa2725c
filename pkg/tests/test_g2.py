from fractions import Fraction

import pytest
import sympy as sp

from errors import DomainError, ScaleError
from g2 import (BASIS_NAMES, DIM, G2_DATA, MIN_ORBIT_EQUATIONS, ORBIT_NAMES, TILDE_V_EQUATIONS,
                X_SYMBOLS, G2Nilpotent, basis_index, bracket, build_Cx, grid_classify,
                jacobi_check, jacobian_rank, jacobian_report, min_orbit_equations, orbit_rank,
                random_rational_check, summarize_scan, symbolic_Cx, tildeV_membership)

x1, x2, x3, x4, x5, x6 = X_SYMBOLS


def e(i):
    return G2Nilpotent(tuple(1 if k == i else 0 for k in range(1, 7)))


@pytest.fixture
def expected_Cx():
    rows = [
        [],
        [-x2],
        [-x3, -x1],
        [x4, 0, 2 * x1],
        [x5, 0, 0, 3 * x1],
        [0, x4, -2 * x3, -x2],
        [0, x5, x4, -x3, -x2, 2 * x1],
        [x6, -x5, 0, 3 * x3, 2 * x2, -3 * x1],
        [0, 0, x5, -2 * x4, -x3, 0, -x1],
        [0, x6, 0, 0, 0, 3 * x3, 0, -x2],
        [0, 0, x6, 0, 0, 2 * x4, -x3, -x3, x2, -x1],
        [0, 0, 0, -x6, 0, -x5, -2 * x4, -x4, 2 * x3, 0, -2 * x1],
        [0, 0, 0, 0, -x6, 0, -3 * x5, -x5, -3 * x4, 0, 0, 3 * x1],
        [0, 0, 0, 0, 0, 0, -3 * x6, -2 * x6, 0, -x5, -3 * x4, 3 * x3, x2],
    ]
    return sp.Matrix([row + [0] * (DIM - len(row)) for row in rows])


def test_structure_constants_antisymmetric():
    assert G2_DATA.antisymmetry_failures() == []


def test_jacobi_identity():
    result = jacobi_check()
    assert result['passed'], result['examples']
    assert result['antisymmetric']
    assert result['triples_checked'] == DIM ** 3


def test_basis_layout():
    assert len(BASIS_NAMES) == DIM
    assert basis_index(-6) == 0
    assert basis_index(-1) == 5
    assert basis_index(1) == 8
    assert basis_index(6) == 13


def test_bracket_antisymmetric():
    u = [Fraction(k, 3) for k in range(DIM)]
    v = [Fraction(DIM - k, 2) for k in range(DIM)]
    assert bracket(u, v) == [-c for c in bracket(v, u)]
    assert not any(bracket(u, u))


def test_symbolic_Cx_matches_fixture(expected_Cx):
    assert (symbolic_Cx() - expected_Cx).expand() == sp.zeros(DIM, DIM)


def test_Cx_specializes_symbolic():
    x = G2Nilpotent((1, 2, Fraction(1, 2), 0, -3, 5))
    numeric = build_Cx(x)
    symbolic = symbolic_Cx().subs(x.substitution())
    for i in range(DIM):
        for j in range(DIM):
            assert sp.sympify(numeric[i, j]) == symbolic[i, j]


@pytest.mark.parametrize('point,rank', [
    ((0, 0, 0, 0, 0, 0), 0),
    ((0, 0, 0, 0, 0, 1), 6),
    ((1, 0, 0, 0, 0, 0), 8),
    ((1, 1, 0, 0, 0, 0), 12),
])
def test_orbit_ranks(point, rank):
    assert orbit_rank(G2Nilpotent(point)) == rank


def test_orbit_names():
    assert ORBIT_NAMES[6] == 'A1'
    assert ORBIT_NAMES[8] == '~A1'


def test_min_orbit_equations():
    assert min_orbit_equations(e(6))
    assert not min_orbit_equations(e(1))
    assert not min_orbit_equations(G2Nilpotent((0,) * 6))


def test_tilde_membership():
    assert tildeV_membership(e(1))
    assert tildeV_membership(G2Nilpotent((0,) * 6))
    assert not tildeV_membership(e(2))
    assert not tildeV_membership(e(4))


def test_jacobian_ranks():
    assert jacobian_rank(MIN_ORBIT_EQUATIONS, e(6)) == 1
    assert jacobian_rank(TILDE_V_EQUATIONS, e(1)) == 2
    assert jacobian_rank(TILDE_V_EQUATIONS, G2Nilpotent((0,) * 6)) == 1


def test_jacobian_report():
    report = jacobian_report('min', e(6))
    assert report['jacobian_rank'] == 1
    assert report['expected_codimension'] == 3
    assert not report['smooth_at_point']
    assert jacobian_report('tilde', e(1))['smooth_at_point']


def test_jacobian_off_variety():
    with pytest.raises(DomainError):
        jacobian_rank(MIN_ORBIT_EQUATIONS, e(1))
    with pytest.raises(ValueError):
        jacobian_report('max', e(6))


def test_parse():
    assert G2Nilpotent.parse('1, 0, 1/2, 0, 0, -3').coefficients[2] == Fraction(1, 2)
    with pytest.raises(ValueError):
        G2Nilpotent.parse('1,2')
    with pytest.raises(ValueError):
        G2Nilpotent.parse('a,0,0,0,0,0')


def test_small_grid():
    df = grid_classify(1)
    summary = summarize_scan(df)
    assert summary['points'] == 3 ** 6
    assert summary['passed'], df[~(df['min_agrees'] & df['tilde_agrees'])].head()
    assert set(summary['rank_counts']) <= {0, 6, 8, 10, 12}


def test_grid_slice_x1_zero():
    summary = summarize_scan(grid_classify(2, x1_zero=True))
    assert summary['points'] == 5 ** 5
    assert summary['passed']


@pytest.mark.slow
def test_full_grid():
    assert summarize_scan(grid_classify(3))['passed']


def test_grid_radius_guard():
    with pytest.raises(ScaleError):
        grid_classify(4)


def test_random_points():
    df = random_rational_check(200, seed=7)
    summary = summarize_scan(df)
    assert summary['points'] == 200
    assert summary['passed']
    assert summary['tilde_v_points'] >= 100
    assert summary['min_orbit_points'] > 0


def test_random_points_are_seeded():
    a = random_rational_check(40, seed=3)
    b = random_rational_check(40, seed=3)
    assert a.equals(b)


@pytest.mark.slow
def test_random_points_full():
    assert summarize_scan(random_rational_check())['passed']
