"""
Exact Linear Algebra
====================
Matrices over the rationals (fractions.Fraction in numpy object arrays) or a
prime field F_q (numpy int64 residues; Python ints in object arrays once
q is large enough for products to leave the int64 range).

Provides:
- ExactMatrix with rank (fraction-free Bareiss over QQ), RREF and kernels
- Subspace: canonical reduced row echelon basis, used as the identity of a
  subspace (equality, hashing, dedup during flag enumeration)
- jordan_type / induced_jordan_type for nilpotent maps and x-stable subquotients

Vectors are column vectors; a matrix acts as v -> m @ v. Subspace bases are
stored as rows.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from errors import NilpotencyError, SubspaceError
from partitions import Partition, from_columns

logger = logging.getLogger(__name__)

# int64 residues need (q - 1)^2 times a row length to fit in 63 bits
INT64_MAX_Q = 1 << 26


# =============================================================================
# SCALAR FIELDS
# =============================================================================

@dataclass(frozen=True)
class ExactScalarField:
    """The rationals (q is None) or the prime field F_q."""
    q: Optional[int] = None

    def __post_init__(self):
        if self.q is not None and not isprime(self.q):
            raise ValueError(f"q must be prime (got {self.q})")

    @property
    def is_rational(self) -> bool:
        return self.q is None

    @property
    def dtype(self):
        if self.q is None or self.q > INT64_MAX_Q:
            return object
        return np.int64

    def coerce(self, value):
        """Map an int, Fraction, 'p/q' string or sympy Rational into the field."""
        if isinstance(value, np.integer):
            value = int(value)
        if isinstance(value, str):
            value = Fraction(value.strip())
        elif not isinstance(value, (int, Fraction)):
            # sympy Rational / Integer
            value = Fraction(int(value.p), int(value.q))
        if self.q is None:
            return Fraction(value)
        value = Fraction(value)
        return (value.numerator * pow(value.denominator, -1, self.q)) % self.q

    def array(self, data, shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
        rows = [[self.coerce(v) for v in row] for row in data]
        arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=self.dtype)
        for i, row in enumerate(rows):
            arr[i, :] = row
        if shape is not None and arr.size == 0:
            arr = np.empty(shape, dtype=self.dtype)
        return arr

    def vector(self, data) -> np.ndarray:
        vec = np.empty(len(data), dtype=self.dtype)
        vec[:] = [self.coerce(v) for v in data]
        return vec

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr if self.q is None else arr % self.q

    def elements(self) -> List[int]:
        if self.q is None:
            raise ValueError("the rationals are not finite")
        return list(range(self.q))

    def __str__(self) -> str:
        return 'QQ' if self.q is None else f'F_{self.q}'


RATIONALS = ExactScalarField()


def prime_field(q: int) -> ExactScalarField:
    return ExactScalarField(q)


def format_scalar(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(int(value))


# =============================================================================
# ELIMINATION KERNELS
# =============================================================================

def _rref(arr: np.ndarray, q: Optional[int]) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = arr.copy()
    nrows, ncols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c] != 0)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        pivot = a[r, c]
        if q is None:
            a[r] = a[r] / Fraction(pivot)
        else:
            a[r] = (a[r] * pow(int(pivot), -1, q)) % q
        col = a[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col != 0)
        if others.size:
            a[others] = a[others] - np.outer(col[others], a[r])
            if q is not None:
                a[others] %= q
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _bareiss_rank(arr: np.ndarray) -> int:
    """Rank of a rational matrix by fraction-free elimination on integers."""
    nrows, ncols = arr.shape
    if nrows == 0 or ncols == 0:
        return 0
    a = np.empty((nrows, ncols), dtype=object)
    for i in range(nrows):
        den = lcm(*(Fraction(v).denominator for v in arr[i]))
        a[i, :] = [int(Fraction(v) * den) for v in arr[i]]
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c] != 0)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        pivot = a[r, c]
        below = a[r + 1:]
        if below.shape[0]:
            a[r + 1:] = (below * pivot - np.outer(below[:, c], a[r])) // prev
        prev = pivot
        r += 1
    return r


def _rank(arr: np.ndarray, q: Optional[int]) -> int:
    if arr.size == 0:
        return 0
    if q is None:
        return _bareiss_rank(arr)
    return len(_rref(arr, q)[1])


def _kernel_rows(arr: np.ndarray, q: Optional[int], ncols: int) -> np.ndarray:
    """Null space of arr (vectors v with arr @ v = 0) as canonical RREF rows."""
    dtype = object if q is None or q > INT64_MAX_Q else np.int64
    if arr.shape[0] == 0:
        reduced, pivots = np.empty((0, ncols), dtype=dtype), []
    else:
        reduced, pivots = _rref(arr, q)
    free = [c for c in range(ncols) if c not in pivots]
    one = Fraction(1) if q is None else 1
    zero = Fraction(0) if q is None else 0
    kernel = np.empty((len(free), ncols), dtype=dtype)
    for k, f in enumerate(free):
        v = np.full(ncols, zero, dtype=dtype)
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        kernel[k] = v if q is None else v % q
    if len(free) == 0:
        return kernel
    return _rref(kernel, q)[0]


# =============================================================================
# EXACT MATRIX
# =============================================================================

class ExactMatrix:
    """Immutable matrix over an ExactScalarField."""

    __slots__ = ('field', 'data')

    def __init__(self, data, field: ExactScalarField = RATIONALS,
                 shape: Optional[Tuple[int, int]] = None):
        if field.q is not None and isinstance(data, np.ndarray) and data.ndim == 2:
            arr = field.reduce(data.astype(field.dtype))
        else:
            arr = field.array(list(data), shape)
        arr.flags.writeable = False
        self.field = field
        self.data = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray, field: ExactScalarField) -> 'ExactMatrix':
        m = cls.__new__(cls)
        arr = field.reduce(arr)
        arr.flags.writeable = False
        m.field = field
        m.data = arr
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: ExactScalarField = RATIONALS) -> 'ExactMatrix':
        arr = np.empty((nrows, ncols), dtype=field.dtype)
        arr[...] = field.coerce(0)
        return cls._wrap(arr, field)

    @classmethod
    def identity(cls, n: int, field: ExactScalarField = RATIONALS) -> 'ExactMatrix':
        arr = np.empty((n, n), dtype=field.dtype)
        arr[...] = field.coerce(0)
        for i in range(n):
            arr[i, i] = field.coerce(1)
        return cls._wrap(arr, field)

    # -------------------------------------------------------------------------
    # shape and access
    # -------------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, index):
        return self.data[index]

    def rows(self) -> List[Tuple]:
        return [tuple(row) for row in self.data]

    def column(self, j: int) -> np.ndarray:
        return self.data[:, j].copy()

    # -------------------------------------------------------------------------
    # arithmetic
    # -------------------------------------------------------------------------

    def _check_field(self, other: 'ExactMatrix'):
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other):
        if isinstance(other, np.ndarray):
            return self.field.reduce(self.data.dot(other))
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        if self.ncols == 0:
            return ExactMatrix.zeros(self.nrows, other.ncols, self.field)
        return ExactMatrix._wrap(self.data.dot(other.data), self.field)

    def __add__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        self._check_field(other)
        return ExactMatrix._wrap(self.data + other.data, self.field)

    def __sub__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        self._check_field(other)
        return ExactMatrix._wrap(self.data - other.data, self.field)

    def __neg__(self) -> 'ExactMatrix':
        return ExactMatrix._wrap(-self.data, self.field)

    def scale(self, c) -> 'ExactMatrix':
        return ExactMatrix._wrap(self.data * self.field.coerce(c), self.field)

    def __pow__(self, k: int) -> 'ExactMatrix':
        result = ExactMatrix.identity(self.nrows, self.field)
        for _ in range(k):
            result = result @ self
        return result

    @property
    def T(self) -> 'ExactMatrix':
        return ExactMatrix._wrap(self.data.T.copy(), self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and bool(np.all(self.data == other.data)))

    __hash__ = None

    def is_zero(self) -> bool:
        return bool(np.all(self.data == 0))

    def vstack(self, other: 'ExactMatrix') -> 'ExactMatrix':
        self._check_field(other)
        return ExactMatrix._wrap(np.vstack([self.data, other.data]), self.field)

    # -------------------------------------------------------------------------
    # elimination
    # -------------------------------------------------------------------------

    def rank(self) -> int:
        return _rank(self.data, self.field.q)

    def rref(self) -> Tuple['ExactMatrix', List[int]]:
        if self.nrows == 0:
            return self, []
        reduced, pivots = _rref(self.data, self.field.q)
        if reduced.shape[0] == 0:
            reduced = np.empty((0, self.ncols), dtype=self.field.dtype)
        return ExactMatrix._wrap(reduced, self.field), pivots

    def kernel_basis(self) -> List[Tuple]:
        return [tuple(v) for v in _kernel_rows(self.data, self.field.q, self.ncols)]

    def to_json(self) -> List[List[str]]:
        return [[format_scalar(v) for v in row] for row in self.data]

    def __repr__(self) -> str:
        body = '; '.join(' '.join(format_scalar(v) for v in row) for row in self.data)
        return f"ExactMatrix[{self.field}]({body})"


def block_diag(blocks: Sequence[ExactMatrix], field: ExactScalarField = RATIONALS) -> ExactMatrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    arr = ExactMatrix.zeros(n, m, field).data.copy()
    r = c = 0
    for b in blocks:
        arr[r:r + b.nrows, c:c + b.ncols] = b.data
        r += b.nrows
        c += b.ncols
    return ExactMatrix._wrap(arr, field)


# =============================================================================
# OPERATIONS
# =============================================================================

def rank(m: ExactMatrix) -> int:
    """Exact rank (fraction-free elimination over QQ, RREF over F_q)."""
    return m.rank()


def kernel_basis(m: ExactMatrix) -> List[Tuple]:
    """Canonical RREF basis of the null space; length = cols - rank."""
    return m.kernel_basis()


def solve(m: ExactMatrix, b: Sequence) -> Optional[np.ndarray]:
    """One solution v of m @ v = b, or None if the system is inconsistent."""
    rhs = m.field.vector(b).reshape(-1, 1)
    aug = np.hstack([m.data, rhs])
    reduced, pivots = _rref(aug, m.field.q)
    if m.ncols in pivots:
        return None
    v = np.empty(m.ncols, dtype=m.field.dtype)
    v[:] = m.field.coerce(0)
    for i, p in enumerate(pivots):
        v[p] = reduced[i, m.ncols]
    return v


def nilpotency_ranks(x: ExactMatrix) -> List[int]:
    """[rank x^0, rank x^1, ..., 0]; raises NilpotencyError if x is not nilpotent."""
    if x.nrows != x.ncols:
        raise NilpotencyError(f"matrix must be square (got {x.shape})")
    n = x.nrows
    ranks = [n]
    power = ExactMatrix.identity(n, x.field)
    while ranks[-1] > 0:
        if len(ranks) > n:
            raise NilpotencyError("matrix is not nilpotent")
        power = power @ x
        r = power.rank()
        if r == ranks[-1]:
            raise NilpotencyError("matrix is not nilpotent")
        ranks.append(r)
    return ranks


def jordan_type(x: ExactMatrix) -> Partition:
    """Jordan type of a nilpotent matrix, read from kernel-dimension increments."""
    ranks = nilpotency_ranks(x)
    return from_columns(ranks[j - 1] - ranks[j] for j in range(1, len(ranks)))


# =============================================================================
# SUBSPACES
# =============================================================================

@dataclass(frozen=True)
class Subspace:
    """Subspace of field^n, identified by its canonical RREF basis (rows)."""
    field: ExactScalarField
    ambient_dim: int
    basis: Tuple[Tuple, ...]

    @classmethod
    def span(cls, vectors: Iterable, field: ExactScalarField, ambient_dim: int) -> 'Subspace':
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(field, ambient_dim, ())
        arr = field.array(vectors)
        return cls._from_array(arr, field, ambient_dim)

    @classmethod
    def _from_array(cls, arr: np.ndarray, field: ExactScalarField, ambient_dim: int) -> 'Subspace':
        if arr.shape[0] == 0:
            return cls(field, ambient_dim, ())
        reduced, _ = _rref(arr, field.q)
        scalar = Fraction if field.q is None else int
        return cls(field, ambient_dim, tuple(tuple(scalar(v) for v in row) for row in reduced))

    @classmethod
    def zero(cls, field: ExactScalarField, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim, ())

    @classmethod
    def whole(cls, field: ExactScalarField, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim, tuple(tuple(r) for r in
                                             ExactMatrix.identity(ambient_dim, field).data))

    @classmethod
    def image_of(cls, m: ExactMatrix) -> 'Subspace':
        """Column space of m."""
        return cls._from_array(m.data.T.copy(), m.field, m.nrows)

    @classmethod
    def kernel_of(cls, m: ExactMatrix) -> 'Subspace':
        return cls._from_array(_kernel_rows(m.data, m.field.q, m.ncols), m.field, m.ncols)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.empty((len(self.basis), self.ambient_dim), dtype=self.field.dtype)
        for i, row in enumerate(self.basis):
            arr[i, :] = row
        return arr

    @cached_property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, v in enumerate(row) if v != 0) for row in self.basis)

    def reduce_vector(self, v) -> np.ndarray:
        """v minus its component along the pivots (zero iff v is in the subspace)."""
        w = np.array(v, dtype=self.field.dtype)
        for row, p in zip(self.array, self.pivots):
            if w[p] != 0:
                w = w - w[p] * row
                if self.field.q is not None:
                    w %= self.field.q
        return w

    def contains_vector(self, v) -> bool:
        return not np.any(self.reduce_vector(v) != 0)

    def contains(self, other: 'Subspace') -> bool:
        return all(self.contains_vector(v) for v in other.array)

    def join(self, other: 'Subspace') -> 'Subspace':
        return Subspace._from_array(np.vstack([self.array, other.array]),
                                    self.field, self.ambient_dim)

    def extend(self, v) -> 'Subspace':
        return Subspace._from_array(np.vstack([self.array, np.array([v], dtype=self.field.dtype)]),
                                    self.field, self.ambient_dim)

    def annihilator(self) -> np.ndarray:
        """Rows a with a . u = 0 for every u in the subspace."""
        return _kernel_rows(self.array, self.field.q, self.ambient_dim)

    def meet(self, other: 'Subspace') -> 'Subspace':
        constraints = np.vstack([self.annihilator(), other.annihilator()])
        return Subspace._from_array(_kernel_rows(constraints, self.field.q, self.ambient_dim),
                                    self.field, self.ambient_dim)

    def image(self, m: ExactMatrix) -> 'Subspace':
        if self.dim == 0:
            return self
        return Subspace._from_array(self.field.reduce(self.array.dot(m.data.T)),
                                    self.field, m.nrows)

    def preimage(self, m: ExactMatrix) -> 'Subspace':
        """{v : m @ v in self}."""
        ann = self.annihilator()
        if ann.shape[0] == 0:
            return Subspace.whole(self.field, m.ncols)
        constraints = self.field.reduce(ann.dot(m.data))
        return Subspace._from_array(_kernel_rows(constraints, self.field.q, m.ncols),
                                    self.field, m.ncols)

    def perp(self, gram: ExactMatrix) -> 'Subspace':
        """{v : omega(u, v) = 0 for all u}, with omega(u, v) = u^T G v."""
        if self.dim == 0:
            return Subspace.whole(self.field, self.ambient_dim)
        constraints = self.field.reduce(self.array.dot(gram.data))
        return Subspace._from_array(_kernel_rows(constraints, self.field.q, self.ambient_dim),
                                    self.field, self.ambient_dim)

    def is_stable(self, m: ExactMatrix) -> bool:
        return self.contains(self.image(m))

    def complement_in(self, larger: 'Subspace') -> List[np.ndarray]:
        """Basis vectors of larger that complete a basis of self (greedy, canonical order)."""
        current = self
        chosen = []
        for v in larger.array:
            if not current.contains_vector(v):
                chosen.append(v)
                current = current.extend(v)
        return chosen

    def quotient_lines(self, larger: 'Subspace') -> List[np.ndarray]:
        """
        Representatives u such that self + <u> runs once over every subspace
        between self and larger of dimension dim(self) + 1. Finite fields only.
        """
        comp = self.complement_in(larger)
        q = self.field.q
        if q is None:
            raise ValueError("quotient_lines needs a finite field")
        reps = []
        k = len(comp)
        for lead in range(k):
            for tail in itertools.product(range(q), repeat=k - lead - 1):
                u = comp[lead].copy()
                for coeff, c in zip(tail, comp[lead + 1:]):
                    if coeff:
                        u = u + coeff * c
                reps.append(u % q)
        return reps

    def lines(self) -> List['Subspace']:
        """All one-dimensional subspaces (points of the projective space)."""
        zero = Subspace.zero(self.field, self.ambient_dim)
        return [zero.extend(u) for u in zero.quotient_lines(self)]

    def to_json(self) -> List[List[str]]:
        return [[format_scalar(v) for v in row] for row in self.basis]


def induced_jordan_type(x: ExactMatrix, upper: Subspace, lower: Subspace,
                        check: bool = True) -> Partition:
    """
    Jordan type of the map induced by x on upper/lower.

    rank of x^j on the quotient = dim(x^j(upper) + lower) - dim(lower).
    """
    if check:
        if not upper.contains(lower):
            raise SubspaceError("lower subspace is not contained in upper")
        if not upper.is_stable(x) or not lower.is_stable(x):
            raise SubspaceError("subquotient is not x-stable")
    q = x.field.q
    low = lower.array
    base = lower.dim
    ranks = [upper.dim - base]
    current = upper.array
    xt = x.data.T
    while ranks[-1] > 0:
        current = x.field.reduce(current.dot(xt)) if current.shape[0] else current
        r = _rank(np.vstack([current, low]), q) - base
        if r == ranks[-1]:
            raise SubspaceError("x is not nilpotent on the subquotient")
        ranks.append(r)
    return from_columns(ranks[j - 1] - ranks[j] for j in range(1, len(ranks)))


if __name__ == "__main__":
    m = ExactMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    print(f"{m}: rank {rank(m)}, kernel {kernel_basis(m)}")
    J = ExactMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]], prime_field(3))
    print(f"Jordan type over F_3: {jordan_type(J)}")
