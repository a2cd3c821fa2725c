"""
G2 Nilpotent Cone Computations
==============================
Exact computations in the 14-dimensional Lie algebra of type G2 restricted to
the nilradical n = span(e_1, ..., e_6) of positive root vectors.

- Bracket assembled from the structure-constant table N and the pairing table
  (<alpha_i, alpha>, <alpha_i, beta>); h_gamma = p1 * lambda_alpha + p2 * lambda_beta
- C_x: matrix of ad x in the basis (e_-6, ..., e_-1, lambda_alpha, lambda_beta, e_1, ..., e_6)
- rank C_x = dim G.x, one of 0, 6, 8, 10, 12
- Equations of the minimal orbit closure in n and of the 4-dimensional
  variety V-tilde, with pointwise Jacobian-rank tests

Roots are written in the simple-root basis (a, b) = a*alpha + b*beta.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
import sympy as sp

from config import DEFAULT_CONFIG, check_grid_radius
from errors import DomainError, InvariantViolation
from linalg_exact import RATIONALS, ExactMatrix

logger = logging.getLogger(__name__)


# =============================================================================
# ROOT DATA
# =============================================================================

POSITIVE_ROOTS: Dict[int, Tuple[int, int]] = {
    1: (1, 0),
    2: (0, 1),
    3: (1, 1),
    4: (2, 1),
    5: (3, 1),
    6: (3, 2),
}

# (<alpha_i, alpha>, <alpha_i, beta>)
PAIRING: Dict[int, Tuple[int, int]] = {
    1: (2, -3),
    2: (-1, 2),
    3: (-1, 3),
    4: (1, 0),
    5: (1, -1),
    6: (0, 1),
}

ROOT_INDICES: Tuple[int, ...] = (-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6)

# Rows and columns indexed by ROOT_INDICES; None where gamma + delta = 0.
_N_ROWS = [
    [0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, None],
    [0, 0, 0, 0, 1, 0, 1, 0, 0, -1, None, -1],
    [0, 0, 0, 3, 0, 3, -2, 0, 2, None, -1, -1],
    [0, 0, -3, 0, 0, -2, -3, 1, None, 2, 0, 1],
    [0, -1, 0, 0, 0, -1, 0, None, 1, 0, 0, 1],
    [0, 0, -3, 2, 1, 0, None, 0, -3, -2, 1, 0],
    [0, -1, 2, 3, 0, None, 0, -1, -2, 3, 0, 0],
    [-1, 0, 0, -1, None, 0, 1, 0, 0, 0, 1, 0],
    [-1, 0, -2, None, -1, 3, 2, 0, 0, 3, 0, 0],
    [1, 1, None, -2, 0, 2, -3, 0, -3, 0, 0, 0],
    [1, None, 1, 0, 0, -1, 0, -1, 0, 0, 0, 0],
    [None, 1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0],
]

STRUCTURE_CONSTANTS: Dict[Tuple[int, int], Optional[int]] = {
    (g, d): _N_ROWS[i][j]
    for i, g in enumerate(ROOT_INDICES) for j, d in enumerate(ROOT_INDICES)
}

# basis of g: e_-6..e_-1, lambda_alpha, lambda_beta, e_1..e_6
DIM = 14
LAMBDA_ALPHA = 6
LAMBDA_BETA = 7
BASIS_NAMES: Tuple[str, ...] = tuple(
    [f"e-{i}" for i in range(6, 0, -1)] + ["l_alpha", "l_beta"] + [f"e{i}" for i in range(1, 7)])


def root_vector(gamma: int) -> Tuple[int, int]:
    a, b = POSITIVE_ROOTS[abs(gamma)]
    return (a, b) if gamma > 0 else (-a, -b)


def basis_index(gamma: int) -> int:
    """Position of e_gamma in the basis."""
    return gamma + 6 if gamma < 0 else gamma + 7


_ROOT_BY_VECTOR = {root_vector(g): g for g in ROOT_INDICES}


@dataclass(frozen=True)
class G2Data:
    positive_roots: Dict[int, Tuple[int, int]]
    pairing: Dict[int, Tuple[int, int]]
    structure_constants: Dict[Tuple[int, int], Optional[int]]

    def antisymmetry_failures(self) -> List[Tuple[int, int]]:
        failures = []
        for (g, d), value in self.structure_constants.items():
            other = self.structure_constants[(d, g)]
            if value is None or other is None:
                if (value is None) != (other is None):
                    failures.append((g, d))
            elif value != -other:
                failures.append((g, d))
        return failures


G2_DATA = G2Data(POSITIVE_ROOTS, PAIRING, STRUCTURE_CONSTANTS)


# =============================================================================
# BRACKET
# =============================================================================

def _build_structure_tensor() -> np.ndarray:
    """T[i, j, :] = coordinates of [b_i, b_j]."""
    t = np.zeros((DIM, DIM, DIM), dtype=np.int64)
    for g in ROOT_INDICES:
        gi = basis_index(g)
        a, b = root_vector(g)
        # [lambda, e_g] = (lambda-coefficient of g) e_g
        t[LAMBDA_ALPHA, gi, gi] = a
        t[LAMBDA_BETA, gi, gi] = b
        t[gi, LAMBDA_ALPHA, gi] = -a
        t[gi, LAMBDA_BETA, gi] = -b
        for d in ROOT_INDICES:
            di = basis_index(d)
            if g + d == 0:
                p1, p2 = PAIRING[abs(g)]
                sign = 1 if g > 0 else -1
                t[gi, di, LAMBDA_ALPHA] = sign * p1
                t[gi, di, LAMBDA_BETA] = sign * p2
                continue
            total = (a + root_vector(d)[0], b + root_vector(d)[1])
            target = _ROOT_BY_VECTOR.get(total)
            coeff = STRUCTURE_CONSTANTS[(g, d)]
            if target is None or not coeff:
                continue
            t[gi, di, basis_index(target)] = coeff
    return t


STRUCTURE_TENSOR = _build_structure_tensor()
STRUCTURE_TENSOR.flags.writeable = False


_NONZERO = tuple((int(i), int(j), int(k), int(STRUCTURE_TENSOR[i, j, k]))
                 for i, j, k in zip(*np.nonzero(STRUCTURE_TENSOR)))


def bracket(u: Sequence, v: Sequence) -> List:
    """[u, v] for coordinate vectors in the 14-element basis (exact for int/Fraction)."""
    result = [0] * DIM
    for i, j, k, coeff in _NONZERO:
        if u[i] and v[j]:
            result[k] += coeff * u[i] * v[j]
    return result


def jacobi_check() -> Dict:
    """[a,[b,c]] + [b,[c,a]] + [c,[a,b]] over all basis triples."""
    t = STRUCTURE_TENSOR
    # inner[j,k,l] = [b_j, b_k]_l ; outer[i,l,m] = [b_i, b_l]_m
    first = np.einsum('jkl,ilm->ijkm', t, t)
    second = np.einsum('kil,jlm->ijkm', t, t)
    third = np.einsum('ijl,klm->ijkm', t, t)
    total = first + second + third
    bad = np.argwhere(np.any(total != 0, axis=3))
    failures = [tuple(BASIS_NAMES[k] for k in triple) for triple in bad[:10]]
    antisym = np.argwhere(np.any(t + t.transpose(1, 0, 2) != 0, axis=2))
    return {
        'triples_checked': DIM ** 3,
        'jacobi_failures': int(len(bad)),
        'examples': failures,
        'antisymmetric': len(antisym) == 0 and not G2_DATA.antisymmetry_failures(),
        'passed': len(bad) == 0 and len(antisym) == 0,
    }


# =============================================================================
# NILPOTENT ELEMENTS AND C_x
# =============================================================================

@dataclass(frozen=True)
class G2Nilpotent:
    """x = sum x_i e_{alpha_i} in n."""
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != 6:
            raise ValueError(f"x needs 6 coefficients (got {len(coeffs)})")
        object.__setattr__(self, 'coefficients', coeffs)

    @classmethod
    def parse(cls, text: str) -> 'G2Nilpotent':
        """'0,0,0,0,0,1' or '1, 0, 1/2, 0, 0, -3'."""
        return cls(tuple(Fraction(t.strip()) for t in text.split(',') if t.strip()))

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def substitution(self) -> Dict[sp.Symbol, sp.Rational]:
        return {s: sp.Rational(c.numerator, c.denominator)
                for s, c in zip(X_SYMBOLS, self.coefficients)}

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    def __str__(self) -> str:
        return '(' + ','.join(str(c) for c in self.coefficients) + ')'


def _ad_columns(coeffs: Sequence) -> List[List]:
    """Column j = [x, b_j] for x = sum coeffs[i-1] e_i."""
    c = [[0] * DIM for _ in range(DIM)]
    for i, j, k, coeff in _NONZERO:
        if i < 8:
            continue
        c[k][j] += coeff * coeffs[i - 8]
    return c


def build_Cx(x: G2Nilpotent) -> ExactMatrix:
    """
    Matrix of ad x on g.

    Args:
        x: element of n

    Returns:
        14x14 ExactMatrix over QQ
    """
    return ExactMatrix(_ad_columns(x.coefficients), RATIONALS)


def symbolic_Cx() -> sp.Matrix:
    """C_x with x_1..x_6 left as symbols."""
    return sp.Matrix(_ad_columns(X_SYMBOLS))


ORBIT_DIMENSIONS = (0, 6, 8, 10, 12)
ORBIT_NAMES = {0: '0', 6: 'A1', 8: '~A1', 10: 'G2(a1)', 12: 'G2'}


def orbit_rank(x: G2Nilpotent) -> int:
    """dim G.x = rank C_x."""
    r = build_Cx(x).rank()
    if r not in ORBIT_DIMENSIONS:
        raise InvariantViolation(f"rank C_x = {r} at {x} is not a G2 orbit dimension")
    return r


# =============================================================================
# EQUATIONS
# =============================================================================

X_SYMBOLS: Tuple[sp.Symbol, ...] = sp.symbols('x1:7')
x1, x2, x3, x4, x5, x6 = X_SYMBOLS

MIN_ORBIT_EQUATIONS: Tuple[sp.Expr, ...] = (
    x1,
    x2 * x4 - x3 ** 2,
    x3 * x5 + x4 ** 2,
    x2 * x5 + x3 * x4,
)

TILDE_V_EQUATIONS: Tuple[sp.Expr, ...] = (
    x2,
    3 * x4 ** 2 + 4 * x3 * x5 - 4 * x1 * x6,
)

VARIETIES = {
    'min': (MIN_ORBIT_EQUATIONS, 3),
    'tilde': (TILDE_V_EQUATIONS, 2),
}

_POLYS = {name: tuple(sp.Poly(e, *X_SYMBOLS) for e in eqs) for name, (eqs, _) in VARIETIES.items()}


def polynomial_values(variety: str, x: G2Nilpotent) -> List[sp.Rational]:
    values = [sp.Rational(c.numerator, c.denominator) for c in x.coefficients]
    return [p(*values) for p in _POLYS[variety]]


def min_orbit_equations(x: G2Nilpotent) -> bool:
    """x != 0 and the four minimal-orbit polynomials vanish."""
    if x.is_zero:
        return False
    return all(v == 0 for v in polynomial_values('min', x))


def tildeV_membership(x: G2Nilpotent) -> bool:
    return all(v == 0 for v in polynomial_values('tilde', x))


def jacobian_rank(equations: Sequence[sp.Expr], point: G2Nilpotent) -> int:
    """Rank of the Jacobian of equations at a point of their common zero set."""
    subs = point.substitution()
    if any(sp.sympify(e).subs(subs) != 0 for e in equations):
        raise DomainError(f"{point} does not satisfy the equations")
    jac = sp.Matrix(list(equations)).jacobian(X_SYMBOLS).subs(subs)
    rows = [[RATIONALS.coerce(sp.Rational(v)) for v in jac.row(i)] for i in range(jac.rows)]
    return ExactMatrix(rows, RATIONALS).rank()


def jacobian_report(variety: str, x: G2Nilpotent) -> Dict:
    """Jacobian rank next to the codimension of the variety; smooth at x iff they agree."""
    if variety not in VARIETIES:
        raise ValueError(f"unknown variety '{variety}' (expected one of {sorted(VARIETIES)})")
    equations, codim = VARIETIES[variety]
    r = jacobian_rank(equations, x)
    return {
        'variety': variety,
        'x': x.to_json(),
        'jacobian_rank': r,
        'expected_codimension': codim,
        'smooth_at_point': r == codim,
        'polynomial_values': [str(v) for v in polynomial_values(variety, x)],
    }


# =============================================================================
# SCANS
# =============================================================================

def _classify(x: G2Nilpotent) -> Dict:
    r = orbit_rank(x)
    on_min = min_orbit_equations(x)
    on_tilde = tildeV_membership(x)
    c = x.coefficients
    row = {f"x{i}": c[i - 1] for i in range(1, 7)}
    row.update({
        'rank': r,
        'orbit': ORBIT_NAMES[r],
        'min_orbit': on_min,
        'tilde_v': on_tilde,
        'min_agrees': on_min == (r == 6),
        'tilde_agrees': (not on_tilde) or (r <= 8 and (r == 8) == bool(c[0] or c[2])),
    })
    return row


def grid_classify(radius: int, x1_zero: bool = False) -> pd.DataFrame:
    """
    Classify every x with x_i in {-radius..radius}.

    Args:
        radius: grid radius (guarded by max_grid_radius)
        x1_zero: restrict to the slice x_1 = 0

    Returns:
        DataFrame with one row per point: coordinates, rank, orbit, equation
        verdicts and the two agreement columns
    """
    check_grid_radius(radius)
    values = range(-radius, radius + 1)
    rows = []
    first = [0] if x1_zero else values
    for point in product(first, values, values, values, values, values):
        rows.append(_classify(G2Nilpotent(point)))
    logger.debug("g2 grid radius=%d x1_zero=%s: %d points", radius, x1_zero, len(rows))
    return pd.DataFrame(rows)


def summarize_scan(df: pd.DataFrame) -> Dict:
    return {
        'points': int(len(df)),
        'rank_counts': {int(k): int(v) for k, v in df['rank'].value_counts().sort_index().items()},
        'min_orbit_points': int(df['min_orbit'].sum()),
        'tilde_v_points': int(df['tilde_v'].sum()),
        'min_disagreements': int((~df['min_agrees']).sum()),
        'tilde_disagreements': int((~df['tilde_agrees']).sum()),
        'passed': bool(df['min_agrees'].all() and df['tilde_agrees'].all()),
    }


def _random_fraction(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6)))


def _random_point(rng: np.random.Generator, family: int) -> G2Nilpotent:
    c = [_random_fraction(rng) for _ in range(6)]
    if family == 1:
        # on V-tilde with x_1 != 0
        c[0] = c[0] or Fraction(1)
        c[1] = Fraction(0)
        c[5] = (3 * c[3] ** 2 + 4 * c[2] * c[4]) / (4 * c[0])
    elif family == 2:
        # on V-tilde with x_1 = 0, x_3 != 0
        c[0] = c[1] = Fraction(0)
        c[2] = c[2] or Fraction(1)
        c[4] = -3 * c[3] ** 2 / (4 * c[2])
    elif family == 3:
        # O∩n chart (0, s^2, st, t^2, -t^3/s, x_6)
        s, t = c[1] or Fraction(1), c[2]
        c = [Fraction(0), s * s, s * t, t * t, -t ** 3 / s, c[5]]
    return G2Nilpotent(tuple(c))


def random_rational_check(count: Optional[int] = None, seed: Optional[int] = None) -> pd.DataFrame:
    """Classify random rational points, a quarter each generic, on V-tilde (two charts) and on O∩n."""
    count = DEFAULT_CONFIG.random_points if count is None else count
    seed = DEFAULT_CONFIG.default_seed if seed is None else seed
    rng = np.random.default_rng(seed)
    rows = [_classify(_random_point(rng, k % 4)) for k in range(count)]
    return pd.DataFrame(rows)


if __name__ == "__main__":
    print(f"Jacobi: {jacobi_check()['passed']}")
    for text in ("0,0,0,0,0,1", "1,0,0,0,0,0", "1,0,1,0,1,1"):
        x = G2Nilpotent.parse(text)
        print(f"x = {x}: rank {orbit_rank(x)}, min {min_orbit_equations(x)}, "
              f"V-tilde {tildeV_membership(x)}")
