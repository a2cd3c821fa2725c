"""
Nilpotent Models
================
Concrete matrices for nilpotent orbits.

- standard_nilpotent: block-diagonal Jordan matrix, x e_{k+1} = e_k inside a block
- skew_adjoint_model: same x with a Gram matrix making x skew-adjoint
  * equal blocks whose size has the "wrong" parity for the form are paired
  * remaining blocks carry an anti-diagonal form with a sign c = +-1; the signs
    alternate across blocks so the form is split over any odd prime field
- orbit_dim: rank of ad x on gl_n or on the skew-adjoint algebra of the form
- induced_orbit_sample: Richardson/induced orbits in type A by random sampling
- induction_property_report: sampled induction against the row-sum rule
- split_by_columns: Jordan types on (x^l)^-1(M)/M and on Im x^l
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from errors import AdmissibilityError, ModelError, SubspaceError
from linalg_exact import (RATIONALS, ExactMatrix, ExactScalarField, Subspace,
                          induced_jordan_type, jordan_type)
from partitions import (FormKind, Partition, dominates, gl_orbit_dim, is_admissible)

logger = logging.getLogger(__name__)


class Ambient(Enum):
    GENERAL_LINEAR = 'general-linear'
    FORM_PRESERVING = 'form-preserving'


# =============================================================================
# MODEL TYPES
# =============================================================================

@dataclass(frozen=True)
class JordanBlock:
    offset: int
    size: int

    @property
    def indices(self) -> range:
        return range(self.offset, self.offset + self.size)


@dataclass(frozen=True, eq=False)
class NilpotentModel:
    """Nilpotent x on V = field^n, optionally skew-adjoint for a Gram matrix."""
    x: ExactMatrix
    jordan: Partition
    gram: Optional[ExactMatrix] = None
    kind: Optional[FormKind] = None
    blocks: Tuple[JordanBlock, ...] = ()

    def __post_init__(self):
        if jordan_type(self.x) != self.jordan:
            raise ModelError(f"jordan type of x is {jordan_type(self.x)}, expected {self.jordan}")
        if self.gram is None:
            return
        if self.kind is None:
            raise ModelError("a Gram matrix needs a form kind")
        g = self.gram
        if g.shape != self.x.shape:
            raise ModelError(f"Gram shape {g.shape} does not match x {self.x.shape}")
        expected = g if self.kind is FormKind.ORTHOGONAL else -g
        if g.T != expected:
            raise ModelError(f"Gram matrix is not {'symmetric' if self.kind is FormKind.ORTHOGONAL else 'antisymmetric'}")
        if g.rank() != g.nrows:
            raise ModelError("Gram matrix is degenerate")
        if not (self.x.T @ g + g @ self.x).is_zero():
            raise ModelError("x is not skew-adjoint for the Gram matrix")

    @property
    def field(self) -> ExactScalarField:
        return self.x.field

    @property
    def n(self) -> int:
        return self.x.nrows

    def omega(self, u, v):
        """u^T G v."""
        if self.gram is None:
            raise ModelError("model has no Gram matrix")
        return self.field.reduce(np.asarray(u, dtype=self.field.dtype).dot(self.gram @ np.asarray(v, dtype=self.field.dtype)))

    def to_json(self) -> Dict:
        data = {'field': str(self.field), 'jordan': self.jordan.to_json(),
                'x': self.x.to_json()}
        if self.gram is not None:
            data['kind'] = self.kind.value
            data['gram'] = self.gram.to_json()
        return data


@dataclass(frozen=True)
class LeviData:
    """Type A Levi subalgebra (block sizes) with one nilpotent orbit per block."""
    blocks: Tuple[int, ...]
    orbits: Tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, 'blocks', tuple(int(b) for b in self.blocks))
        object.__setattr__(self, 'orbits', tuple(self.orbits))
        if any(b < 1 for b in self.blocks):
            raise ValueError(f"block sizes must be positive: {self.blocks}")
        if len(self.blocks) != len(self.orbits):
            raise ValueError("one orbit per block is required")
        for size, orbit in zip(self.blocks, self.orbits):
            if orbit.n != size:
                raise ValueError(f"orbit {orbit} does not fit a block of size {size}")

    @classmethod
    def trivial(cls, blocks: Tuple[int, ...]) -> 'LeviData':
        return cls(blocks, tuple(Partition((1,) * b) for b in blocks))

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def nilradical_dim(self) -> int:
        return sum(self.blocks[i] * self.blocks[j]
                   for i in range(len(self.blocks)) for j in range(i + 1, len(self.blocks)))

    @property
    def levi_orbit_dim(self) -> int:
        return sum(gl_orbit_dim(o) for o in self.orbits)


# =============================================================================
# CONSTRUCTIONS
# =============================================================================

def _jordan_blocks(p: Partition) -> Tuple[JordanBlock, ...]:
    blocks = []
    offset = 0
    for size in p.parts:
        blocks.append(JordanBlock(offset, size))
        offset += size
    return tuple(blocks)


def _jordan_array(p: Partition, field: ExactScalarField) -> np.ndarray:
    arr = ExactMatrix.zeros(p.n, p.n, field).data.copy()
    one = field.coerce(1)
    for block in _jordan_blocks(p):
        for t in range(1, block.size):
            arr[block.offset + t - 1, block.offset + t] = one
    return arr


def standard_nilpotent(p: Partition, field: ExactScalarField = RATIONALS) -> NilpotentModel:
    """Block-diagonal Jordan matrix with block sizes p."""
    x = ExactMatrix._wrap(_jordan_array(p, field), field)
    return NilpotentModel(x=x, jordan=p, blocks=_jordan_blocks(p))


def _is_paired(size: int, kind: FormKind) -> bool:
    if kind is FormKind.ORTHOGONAL:
        return size % 2 == 0
    return size % 2 == 1


def skew_adjoint_model(p: Partition, kind: FormKind,
                       field: ExactScalarField = RATIONALS) -> NilpotentModel:
    """
    Nilpotent x of type p, skew-adjoint for an explicit form of the given kind.

    In a block with cyclic vector v (x^i v = e_{offset+size-1-i}):
    - single block: omega(x^i v, x^j v) = c (-1)^i [i+j = size-1]
    - paired blocks v, w: omega(x^i v, x^j w) = (-1)^i [i+j = size-1],
      omega(x^j w, x^i v) = eps (-1)^i [...], eps = +1 orthogonal, -1 symplectic
    """
    if not is_admissible(p, kind):
        raise AdmissibilityError(f"{p} is not {kind.value}-admissible")
    if field.q == 2:
        raise ModelError("forms need odd characteristic")
    blocks = _jordan_blocks(p)
    g = ExactMatrix.zeros(p.n, p.n, field).data.copy()
    eps = 1 if kind is FormKind.ORTHOGONAL else -1

    singles = 0
    i = 0
    while i < len(blocks):
        block = blocks[i]
        s, o = block.size, block.offset
        if _is_paired(s, kind):
            partner = blocks[i + 1]
            o2 = partner.offset
            for k in range(s):
                sign = (-1) ** k
                g[o + s - 1 - k, o2 + k] = field.coerce(sign)
                g[o2 + k, o + s - 1 - k] = field.coerce(eps * sign)
            i += 2
        else:
            c = (-1) ** (singles + s // 2)
            for k in range(s):
                g[o + s - 1 - k, o + k] = field.coerce(c * (-1) ** k)
            singles += 1
            i += 1

    x = ExactMatrix._wrap(_jordan_array(p, field), field)
    gram = ExactMatrix._wrap(g, field)
    logger.debug("skew-adjoint model %s %s over %s", p, kind.value, field)
    return NilpotentModel(x=x, jordan=p, gram=gram, kind=kind, blocks=blocks)


# =============================================================================
# ORBIT DIMENSIONS
# =============================================================================

def _ad_array(x: ExactMatrix) -> np.ndarray:
    """Matrix of y -> xy - yx on row-major vec(y)."""
    n = x.nrows
    field = x.field
    arr = ExactMatrix.zeros(n * n, n * n, field).data.copy()
    xt = x.data.T
    for i in range(n):
        for j in range(n):
            block = arr[i * n:(i + 1) * n, j * n:(j + 1) * n]
            for k in range(n):
                block[k, k] = block[k, k] + x.data[i, j]
            if i == j:
                block -= xt
    return field.reduce(arr)


def lie_algebra_basis(gram: ExactMatrix) -> np.ndarray:
    """Basis (rows = row-major vec(y)) of {y : y^T G + G y = 0}."""
    n = gram.nrows
    field = gram.field
    arr = ExactMatrix.zeros(n * n, n * n, field).data.copy()
    for a in range(n):
        for b in range(n):
            row = a * n + b
            for c in range(n):
                # (G y)_{ab} = sum_c G_{ac} y_{cb}
                arr[row, c * n + b] = arr[row, c * n + b] + gram.data[a, c]
                # (y^T G)_{ab} = sum_c y_{ca} G_{cb}
                arr[row, c * n + a] = arr[row, c * n + a] + gram.data[c, b]
    constraints = ExactMatrix._wrap(arr, field)
    basis = Subspace.kernel_of(constraints)
    return basis.array


def orbit_dim(model: NilpotentModel, ambient: Ambient = Ambient.GENERAL_LINEAR) -> int:
    """
    Dimension of the orbit of x: rank of [x, .] on the ambient Lie algebra.

    Args:
        model: nilpotent model
        ambient: GENERAL_LINEAR (all matrices) or FORM_PRESERVING (needs a Gram)

    Returns:
        orbit dimension
    """
    ad = ExactMatrix._wrap(_ad_array(model.x), model.field)
    if ambient is Ambient.GENERAL_LINEAR:
        return ad.rank()
    if model.gram is None:
        raise ModelError("form-preserving ambient needs a Gram matrix")
    basis = lie_algebra_basis(model.gram)
    if basis.shape[0] == 0:
        return 0
    images = ExactMatrix._wrap(ad.data.dot(basis.T), model.field)
    return images.rank()


def springer_fiber_dim(model: NilpotentModel, ambient: Ambient = Ambient.GENERAL_LINEAR) -> int:
    """(dim g - rank g - dim O) / 2."""
    n = model.n
    dim_o = orbit_dim(model, ambient)
    if ambient is Ambient.GENERAL_LINEAR:
        dim_g, rank_g = n * n, n
    elif model.kind is FormKind.SYMPLECTIC:
        dim_g, rank_g = n * (n + 1) // 2, n // 2
    else:
        dim_g, rank_g = n * (n - 1) // 2, n // 2
    return (dim_g - rank_g - dim_o) // 2


# =============================================================================
# INDUCED ORBITS (TYPE A)
# =============================================================================

@dataclass(frozen=True)
class InducedOrbitSample:
    levi: LeviData
    partition: Partition
    trials: int
    seed: int
    samples: List[Partition] = dataclass_field(default_factory=list, compare=False)

    @property
    def orbit_dim(self) -> int:
        return gl_orbit_dim(self.partition)

    @property
    def dimension_check(self) -> bool:
        """dim O = dim O_L + 2 dim n_P."""
        return self.orbit_dim == self.levi.levi_orbit_dim + 2 * self.levi.nilradical_dim

    def to_json(self) -> Dict:
        return {
            'blocks': list(self.levi.blocks),
            'orbits': [o.to_json() for o in self.levi.orbits],
            'induced': self.partition.to_json(),
            'orbit_dim': self.orbit_dim,
            'levi_orbit_dim': self.levi.levi_orbit_dim,
            'nilradical_dim': self.levi.nilradical_dim,
            'dimension_check': self.dimension_check,
            'trials': self.trials,
            'seed': self.seed,
        }


def induced_orbit_sample(levi: LeviData, trials: int, seed: int) -> InducedOrbitSample:
    """
    Sample O_L + n_P and keep the dominance-maximal Jordan type.

    Trial t draws strictly-upper-block entries uniformly from [-(t+1), t+1].
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    n = levi.n
    block_of = [b for b, size in enumerate(levi.blocks) for _ in range(size)]
    positions = [(i, j) for i in range(n) for j in range(n) if block_of[i] < block_of[j]]

    base = np.empty((n, n), dtype=object)
    base[...] = 0
    offset = 0
    for size, orbit in zip(levi.blocks, levi.orbits):
        base[offset:offset + size, offset:offset + size] = _jordan_array(orbit, RATIONALS)
        offset += size

    best: Optional[Partition] = None
    samples: List[Partition] = []
    for t in range(trials):
        bound = t + 1
        entries = rng.integers(-bound, bound + 1, size=len(positions))
        m = base.copy()
        for (i, j), value in zip(positions, entries):
            m[i, j] = int(value)
        p = jordan_type(ExactMatrix(m.tolist()))
        samples.append(p)
        if best is None or (p != best and dominates(p, best)):
            best = p
    logger.debug("induced orbit from %s: %s after %d trials", levi.blocks, best, trials)
    return InducedOrbitSample(levi=levi, partition=best, trials=trials, seed=seed, samples=samples)


def compositions(n: int) -> List[Tuple[int, ...]]:
    """Ordered block sizes summing to n."""
    if n == 0:
        return [()]
    return [(first,) + rest for first in range(1, n + 1) for rest in compositions(n - first)]


def row_sum(orbits: Sequence[Partition]) -> Partition:
    """Type A induction: the induced partition adds the parts row by row."""
    length = max((len(o) for o in orbits), default=0)
    return Partition(tuple(sum(o.parts[i] for o in orbits if i < len(o)) for i in range(length)))


def induction_property_report(max_n: int, trials: int = 32, seed: int = 7) -> Dict:
    """
    For every composition of n <= max_n, sample the zero-orbit and regular-orbit
    Levis and check the induced partition and dim O = dim O_L + 2 dim n_P.
    """
    failures = []
    checked = 0
    for n in range(1, max_n + 1):
        for blocks in compositions(n):
            for levi in (LeviData.trivial(blocks),
                         LeviData(blocks, tuple(Partition.of(b) for b in blocks))):
                sample = induced_orbit_sample(levi, trials, seed)
                checked += 1
                expected = row_sum(levi.orbits)
                if sample.partition != expected:
                    failures.append({'check': 'induced-partition', 'blocks': list(blocks),
                                     'orbits': [o.to_json() for o in levi.orbits],
                                     'expected': expected.to_json(),
                                     'sampled': sample.partition.to_json()})
                if not sample.dimension_check:
                    failures.append({'check': 'dimension', 'blocks': list(blocks),
                                     'orbits': [o.to_json() for o in levi.orbits]})
    logger.debug("induction properties: %d Levis, %d failures", checked, len(failures))
    return {'max_n': max_n, 'levis_checked': checked, 'trials': trials, 'seed': seed,
            'failures': failures, 'passed': not failures}


# =============================================================================
# COLUMN SPLITTING
# =============================================================================

def split_by_columns(model: NilpotentModel, l1: int,
                     M: Optional[Subspace] = None) -> Tuple[Partition, Partition]:
    """
    (type of x on (x^l1)^-1(M)/M, type of x on Im x^l1).

    M must be x-stable and inside Im x^l1; M = None means the zero subspace.
    """
    x = model.x
    if M is None:
        M = Subspace.zero(model.field, model.n)
    power = x ** l1
    image = Subspace.image_of(power)
    if not M.is_stable(x):
        raise SubspaceError("M is not x-stable")
    if not image.contains(M):
        raise SubspaceError(f"M is not contained in Im x^{l1}")
    upper = M.preimage(power)
    first = induced_jordan_type(x, upper, M, check=False)
    rest = induced_jordan_type(x, image, Subspace.zero(model.field, model.n), check=False)
    return first, rest


if __name__ == "__main__":
    from partitions import classical_orbit_dim

    p = Partition.of(2, 2, 1, 1)
    model = skew_adjoint_model(p, FormKind.SYMPLECTIC)
    print(f"Gram for {p} symplectic:\n{model.gram}")
    print(f"gl orbit dim: {orbit_dim(model)}")
    print(f"sp orbit dim: {orbit_dim(model, Ambient.FORM_PRESERVING)} "
          f"(closed form {classical_orbit_dim(p, FormKind.SYMPLECTIC)})")
    sample = induced_orbit_sample(LeviData.trivial((2, 2)), trials=8, seed=7)
    print(f"Richardson orbit for blocks (2,2): {sample.partition}, check {sample.dimension_check}")
