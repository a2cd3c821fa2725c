"""
Partitions
==========
Partitions as Young diagrams: rows, columns (dual), admissibility for a
bilinear-form kind, juxtaposition, and dimension bookkeeping.

Conventions:
- A Partition stores rows (weakly decreasing positive parts); the empty
  partition is allowed.
- dual() maps Partition -> DualPartition -> Partition, so dual(dual(p)) == p.
- Orthogonal admissibility: every even part has even multiplicity.
  Symplectic admissibility: every odd part has even multiplicity.
"""

import re
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import comb, factorial, prod
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from errors import ConcatenationOrderError

logger = logging.getLogger(__name__)


class FormKind(Enum):
    """Kind of the nondegenerate bilinear form on V."""
    ORTHOGONAL = 'orthogonal'
    SYMPLECTIC = 'symplectic'

    @classmethod
    def parse(cls, text: str) -> 'FormKind':
        key = text.strip().lower()
        aliases = {'o': cls.ORTHOGONAL, 'orth': cls.ORTHOGONAL,
                   's': cls.SYMPLECTIC, 'sp': cls.SYMPLECTIC, 'symp': cls.SYMPLECTIC}
        if key in aliases:
            return aliases[key]
        return cls(key)


# =============================================================================
# PARTITION TYPES
# =============================================================================

@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers (rows of a Young diagram)."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts: int) -> 'Partition':
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """Parse '2,2,1,1', '2+2+1+1' or '2 2 1 1'. '' and '0' give the empty partition."""
        text = text.strip().strip('()[]')
        if text in ('', '0'):
            return cls(())
        tokens = [t for t in re.split(r'[,+\s]+', text) if t]
        return cls(tuple(sorted((int(t) for t in tokens), reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return '(' + ','.join(str(p) for p in self.parts) + ')'

    @cached_property
    def columns(self) -> Tuple[int, ...]:
        """Column lengths: lambda*_j = #{i : lambda_i >= j}."""
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= j)
                     for j in range(1, self.parts[0] + 1))

    @property
    def num_columns(self) -> int:
        return self.parts[0] if self.parts else 0

    def padded_columns(self, kind: FormKind) -> Tuple[int, ...]:
        """
        Column lengths padded by a single zero so that the number of columns is
        odd for an orthogonal form and even for a symplectic form.
        """
        cols = self.columns
        want_odd = kind is FormKind.ORTHOGONAL
        if (len(cols) % 2 == 1) != want_odd:
            return cols + (0,)
        return cols

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    def boxes(self) -> List[Tuple[int, int]]:
        return [(r, c) for r, length in enumerate(self.parts) for c in range(length)]

    def contains(self, other: 'Partition') -> bool:
        """Diagram inclusion other ⊆ self."""
        if len(other) > len(self):
            return False
        return all(other.parts[i] <= self.parts[i] for i in range(len(other)))

    def to_json(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class DualPartition(Partition):
    """Column lengths lambda*_1 >= ... >= lambda*_{lambda_1} of a Partition."""


def from_columns(columns: Iterable[int]) -> Partition:
    """Row partition whose column lengths are the given (weakly decreasing) list."""
    cols = [c for c in columns if c > 0]
    if not cols:
        return Partition(())
    return Partition(tuple(sum(1 for c in cols if c >= i)
                           for i in range(1, cols[0] + 1)))


def dual(p: Union[Partition, DualPartition]) -> Partition:
    """Transpose the diagram. Partition -> DualPartition and back."""
    if isinstance(p, DualPartition):
        return from_columns(p.parts)
    return DualPartition(p.columns)


# =============================================================================
# ADMISSIBILITY AND JUXTAPOSITION
# =============================================================================

def is_admissible(p: Partition, kind: FormKind) -> bool:
    """Jordan types of skew-adjoint nilpotents for a form of the given kind."""
    restricted_parity = 0 if kind is FormKind.ORTHOGONAL else 1
    return all(mult % 2 == 0
               for part, mult in p.multiplicities().items()
               if part % 2 == restricted_parity)


def juxtapose(p1: Partition, p2: Partition) -> Partition:
    """Diagram whose columns are the columns of p1 followed by those of p2."""
    if not p2.parts:
        return p1
    if p1.parts and p1.columns[-1] < len(p2):
        raise ConcatenationOrderError(
            f"last column of {p1} has length {p1.columns[-1]} < {len(p2)} rows of {p2}")
    return from_columns(p1.columns + p2.columns)


def column_split(p: Partition, l1: int) -> Tuple[Partition, Partition]:
    """(first l1 columns, remaining columns) as partitions."""
    cols = p.columns
    return from_columns(cols[:l1]), from_columns(cols[l1:])


# =============================================================================
# ENUMERATION AND ORDER
# =============================================================================

def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def admissible_partitions(n: int, kind: FormKind) -> Iterator[Partition]:
    return (p for p in partitions_of(n) if is_admissible(p, kind))


def dominates(p: Partition, q: Partition) -> bool:
    """True if p >= q in dominance order (equal sizes assumed)."""
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p.parts[i] if i < len(p) else 0
        sq += q.parts[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


# =============================================================================
# DIMENSION BOOKKEEPING
# =============================================================================

def fl_dimension(p: Partition) -> int:
    """Dimension of the type A Springer fiber: sum of binom(lambda*_j, 2)."""
    return sum(comb(c, 2) for c in p.columns)


def fl_dimension_by_rows(p: Partition) -> int:
    """Same number via rows: sum of (i-1) * lambda_i."""
    return sum(i * part for i, part in enumerate(p.parts))


def gl_orbit_dim(p: Partition) -> int:
    """Dimension of the GL_n orbit of a nilpotent of type p."""
    return p.n ** 2 - sum(c * c for c in p.columns)


def classical_orbit_dim(p: Partition, kind: FormKind) -> int:
    """Closed-form orbit dimension in sp_N or so_N, N = |p|."""
    n = p.n
    square_sum = sum(c * c for c in p.columns)
    odd_rows = sum(1 for part in p.parts if part % 2 == 1)
    if kind is FormKind.SYMPLECTIC:
        return (n * (n + 1) - square_sum - odd_rows) // 2
    return (n * (n - 1) - square_sum + odd_rows) // 2


def hook_length_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p."""
    cols = p.columns
    hooks = prod(p.parts[r] - c + cols[c] - r - 1 for r, c in p.boxes())
    return factorial(p.n) // hooks


# =============================================================================
# PROPERTY REPORT
# =============================================================================

def _admissible_by_counting(p: Partition, kind: FormKind) -> bool:
    parity = 0 if kind is FormKind.ORTHOGONAL else 1
    for part in set(p.parts):
        if part % 2 == parity and p.parts.count(part) % 2:
            return False
    return True


def partition_property_report(max_n: int) -> Dict:
    """Check duality, admissibility and dimension bookkeeping for all |p| <= max_n."""
    failures = []
    checked = 0
    for n in range(max_n + 1):
        for p in partitions_of(n):
            checked += 1
            if dual(dual(p)) != p:
                failures.append({'check': 'dual-involution', 'partition': p.to_json()})
            for kind in FormKind:
                if is_admissible(p, kind) != _admissible_by_counting(p, kind):
                    failures.append({'check': f'admissible-{kind.value}',
                                     'partition': p.to_json()})
            if fl_dimension(p) != fl_dimension_by_rows(p):
                failures.append({'check': 'fl-dimension', 'partition': p.to_json()})
    logger.debug("partition properties: %d partitions, %d failures", checked, len(failures))
    return {'max_n': max_n, 'partitions_checked': checked,
            'failures': failures, 'passed': not failures}


if __name__ == "__main__":
    p = Partition.of(5, 4, 4, 2, 2)
    print(f"lambda = {p}, dual = {dual(p)}")
    print(f"padded (orthogonal) = {p.padded_columns(FormKind.ORTHOGONAL)}")
    print(f"admissible: O={is_admissible(p, FormKind.ORTHOGONAL)}, "
          f"S={is_admissible(p, FormKind.SYMPLECTIC)}")
    q = Partition.of(2, 2, 1, 1)
    print(f"dim Fl_x for {q}: {fl_dimension(q)}")
