from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from errors import NilpotencyError, SubspaceError
from linalg_exact import (RATIONALS, ExactMatrix, ExactScalarField, Subspace, block_diag,
                          induced_jordan_type, jordan_type, kernel_basis, nilpotency_ranks,
                          prime_field, rank, solve)
from nilpotent_models import standard_nilpotent
from partitions import Partition
from strategies import integer_matrix_strategy, partition_strategy

F3 = prime_field(3)


def test_field_validation():
    with pytest.raises(ValueError):
        ExactScalarField(4)
    assert str(RATIONALS) == "QQ"
    assert str(F3) == "F_3"
    assert F3.coerce(Fraction(1, 2)) == 2
    assert F3.coerce(-1) == 2
    assert RATIONALS.coerce("3/4") == Fraction(3, 4)


def test_rank_and_kernel():
    m = ExactMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    kernel = kernel_basis(m)
    assert len(kernel) == 1
    v = np.array(kernel[0], dtype=object)
    assert all(value == 0 for value in m @ v)


def test_rational_entries():
    m = ExactMatrix([[Fraction(1, 2), Fraction(1, 3)], [1, Fraction(2, 3)]])
    assert rank(m) == 1
    assert rank(ExactMatrix([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])) == 2


def test_rank_depends_on_field():
    rows = [[1, 2], [2, 1]]
    assert rank(ExactMatrix(rows)) == 2
    assert rank(ExactMatrix(rows, F3)) == 1


def test_matrix_arithmetic():
    a = ExactMatrix([[1, 1], [0, 1]])
    b = ExactMatrix.identity(2)
    assert a @ b == a
    assert (a - b) ** 2 == ExactMatrix.zeros(2, 2)
    assert a.T == ExactMatrix([[1, 0], [1, 1]])
    assert (a + a) == a.scale(2)
    assert block_diag([a, b]).shape == (4, 4)
    with pytest.raises(ValueError):
        a @ ExactMatrix.identity(2, F3)


def test_matrix_is_read_only():
    a = ExactMatrix([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        a.data[0, 0] = 5


def test_solve():
    m = ExactMatrix([[1, 1], [0, 2]])
    v = solve(m, [3, 4])
    assert list(v) == [1, 2]
    assert solve(ExactMatrix([[1, 0], [0, 0]]), [0, 1]) is None


def test_jordan_type_and_nilpotency():
    x = standard_nilpotent(Partition.of(3, 2, 2)).x
    assert nilpotency_ranks(x) == [7, 4, 1, 0]
    assert jordan_type(x) == Partition.of(3, 2, 2)
    with pytest.raises(NilpotencyError):
        jordan_type(ExactMatrix.identity(2))
    with pytest.raises(NilpotencyError):
        jordan_type(ExactMatrix([[0, 1, 0]]))


def test_subspace_meet_and_join():
    v1 = Subspace.span([[1, 0, 0], [0, 1, 0]], RATIONALS, 3)
    v2 = Subspace.span([[0, 1, 0], [0, 0, 1]], RATIONALS, 3)
    assert v1.meet(v2).dim == 1
    assert v1.meet(v2) == Subspace.span([[0, 2, 0]], RATIONALS, 3)
    assert v1.join(v2) == Subspace.whole(RATIONALS, 3)
    assert v1.contains(v1.meet(v2))
    assert not v1.contains(v2)


def test_subspace_canonical_identity():
    a = Subspace.span([[1, 1, 0], [1, -1, 0]], RATIONALS, 3)
    b = Subspace.span([[1, 0, 0], [0, 1, 0]], RATIONALS, 3)
    assert a == b
    assert hash(a) == hash(b)


def test_image_preimage_perp():
    x = standard_nilpotent(Partition.of(3)).x
    line = Subspace.span([[1, 0, 0]], RATIONALS, 3)
    assert Subspace.image_of(x).dim == 2
    assert Subspace.kernel_of(x) == line
    assert line.preimage(x).dim == 2
    assert line.preimage(x).image(x) == line

    gram = ExactMatrix([[0, 1], [-1, 0]])
    e0 = Subspace.span([[1, 0]], RATIONALS, 2)
    assert e0.perp(gram) == e0
    assert Subspace.zero(RATIONALS, 2).perp(gram) == Subspace.whole(RATIONALS, 2)


def test_lines_over_finite_field():
    assert len(Subspace.whole(F3, 2).lines()) == 4
    assert len(Subspace.whole(F3, 3).lines()) == 13
    assert len(Subspace.whole(prime_field(5), 3).lines()) == 31
    with pytest.raises(ValueError):
        Subspace.whole(RATIONALS, 2).lines()


def test_quotient_lines_are_distinct():
    base = Subspace.span([[1, 0, 0, 0]], F3, 4)
    reps = base.quotient_lines(Subspace.whole(F3, 4))
    extended = {base.extend(u) for u in reps}
    assert len(reps) == len(extended) == 13


def test_induced_jordan_type():
    x = standard_nilpotent(Partition.of(3)).x
    whole = Subspace.whole(RATIONALS, 3)
    kernel = Subspace.kernel_of(x)
    assert induced_jordan_type(x, whole, kernel) == Partition.of(2)
    assert induced_jordan_type(x, whole, Subspace.zero(RATIONALS, 3)) == Partition.of(3)
    with pytest.raises(SubspaceError):
        induced_jordan_type(x, whole, Subspace.span([[0, 0, 1]], RATIONALS, 3))


def test_to_json():
    m = ExactMatrix([[Fraction(1, 2), 2]])
    assert m.to_json() == [["1/2", "2"]]


@given(integer_matrix_strategy())
def test_bareiss_rank_matches_rref(rows):
    m = ExactMatrix(rows)
    _, pivots = m.rref()
    assert m.rank() == len(pivots)
    assert len(m.kernel_basis()) == m.ncols - m.rank()


@settings(max_examples=30)
@given(partition_strategy(max_n=8))
def test_jordan_type_roundtrip(p):
    assert jordan_type(standard_nilpotent(p).x) == p
    assert jordan_type(standard_nilpotent(p, F3).x) == p


@given(integer_matrix_strategy())
def test_rank_agrees_with_large_prime(rows):
    # minors of a 5x5 matrix with entries in [-4, 4] stay far below the modulus
    big = prime_field(1000003)
    assert ExactMatrix(rows, big).rank() == ExactMatrix(rows).rank()
    assert ExactMatrix(rows, F3).rank() <= ExactMatrix(rows).rank()


@pytest.mark.parametrize("seed", range(20))
def test_rank_and_kernel_beyond_int64_products(seed):
    q = 4294967311
    big = prime_field(q)
    assert big.dtype is object and F3.dtype is np.int64
    rng = np.random.default_rng(seed)
    a, b, c, d, e, f = (int(v) for v in rng.integers(1, q, size=6))
    rows = [[1, a, b, c], [0, 1, d, e], [0, 0, 1, f]]
    rows.append([(u + v) % q for u, v in zip(rows[0], rows[1])])
    m = ExactMatrix(rows, big)
    assert m.rank() == 3
    kernel = m.kernel_basis()
    assert len(kernel) == 1
    assert not np.any((m @ np.array(kernel[0], dtype=object)) != 0)
    reduced, pivots = m.rref()
    assert pivots == [0, 1, 2]
