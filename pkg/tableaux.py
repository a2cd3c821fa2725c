"""
Tableaux
========
Standard Young tableaux and domino tableaux.

- StandardYoungTableau: filling by 1..n, strictly increasing along rows and
  columns; equivalently a maximal chain of diagrams.
- DominoTableau: filling by 0..floor(n/2); each i >= 1 fills a domino (two
  adjacent boxes), 0 fills the top-left box when n is odd, entries weakly
  increase along rows and columns.
- d_nk / d_n0: the one- and two-column building blocks.
- construct_dxomega: concatenation of building blocks read off the padded
  column lengths of an admissible shape.

Rows are stored as tuples of entries; compact text form is "11/22/3/3".
"""

import re
import logging
from dataclasses import dataclass
from functools import reduce, cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from errors import (AdmissibilityError, ConcatenationOrderError, NotDominoError,
                    ParityError, RangeError)
from partitions import (FormKind, Partition, admissible_partitions, hook_length_count,
                        is_admissible)

logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


def _normalize_rows(rows: Sequence[Sequence[int]]) -> Rows:
    return tuple(tuple(int(v) for v in row) for row in rows if len(row) > 0)


def _shape_of(rows: Rows) -> Partition:
    return Partition(tuple(len(row) for row in rows))


def parse_rows(text: str) -> Rows:
    """Parse '03377/1448/26' (digits) or '0,3,3,7,7/1,4,4,8' (comma separated)."""
    text = text.strip()
    if text in ('', '-', '()'):
        return ()
    rows = []
    for chunk in re.split(r'[/;|]', text):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ',' in chunk or ' ' in chunk:
            rows.append(tuple(int(t) for t in re.split(r'[,\s]+', chunk) if t))
        else:
            rows.append(tuple(int(ch) for ch in chunk))
    return tuple(rows)


def format_rows(rows: Rows) -> str:
    wide = any(v > 9 for row in rows for v in row)
    sep = ',' if wide else ''
    return '/'.join(sep.join(str(v) for v in row) for row in rows)


def render_ascii(rows: Rows) -> str:
    """Box picture of a filled Young diagram."""
    if not rows:
        return '(empty)'
    width = max(len(str(v)) for row in rows for v in row)
    cell = '-' * (width + 2)

    def border(length: int) -> str:
        return '+' + '+'.join([cell] * length) + '+'

    lines = [border(len(rows[0]))]
    for i, row in enumerate(rows):
        lines.append('|' + '|'.join(f" {v:>{width}} " for v in row) + '|')
        below = len(rows[i + 1]) if i + 1 < len(rows) else 0
        lines.append(border(max(len(row), below)))
    return '\n'.join(lines)


def _chain_from_entries(rows: Rows, top: int) -> List[Partition]:
    """Shapes of {boxes with entry <= k} for k = 0..top."""
    return [Partition(tuple(n for n in (sum(1 for v in row if v <= k) for row in rows) if n))
            for k in range(top + 1)]


# =============================================================================
# STANDARD YOUNG TABLEAUX
# =============================================================================

@dataclass(frozen=True)
class StandardYoungTableau:
    rows: Rows

    def __post_init__(self):
        rows = _normalize_rows(self.rows)
        object.__setattr__(self, 'rows', rows)
        shape = _shape_of(rows)
        entries = sorted(v for row in rows for v in row)
        if entries != list(range(1, shape.n + 1)):
            raise ValueError(f"entries must be 1..{shape.n} exactly once: {rows}")
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if c + 1 < len(row) and row[c + 1] <= v:
                    raise ValueError(f"row {r} not strictly increasing: {rows}")
                if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c] <= v:
                    raise ValueError(f"column {c} not strictly increasing: {rows}")

    @property
    def shape(self) -> Partition:
        return _shape_of(self.rows)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def reading_word(self) -> Tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def shape_chain(self) -> List[Partition]:
        """lambda^0 = empty, ..., lambda^n = shape."""
        return _chain_from_entries(self.rows, self.n)

    @classmethod
    def from_shape_chain(cls, chain: Sequence[Partition]) -> 'StandardYoungTableau':
        filling: Dict[Tuple[int, int], int] = {}
        for k in range(1, len(chain)):
            if not chain[k].contains(chain[k - 1]):
                raise ValueError(f"chain is not increasing at step {k}")
            new = set(chain[k].boxes()) - set(chain[k - 1].boxes())
            if len(new) != 1:
                raise ValueError(f"step {k} adds {len(new)} boxes")
            filling[new.pop()] = k
        final = chain[-1]
        return cls(tuple(tuple(filling[(r, c)] for c in range(length))
                         for r, length in enumerate(final.parts)))

    def to_json(self) -> Dict:
        return {'shape': self.shape.to_json(), 'rows': [list(r) for r in self.rows], 'text': str(self)}

    def __str__(self) -> str:
        return format_rows(self.rows)


def enumerate_syt(shape: Partition) -> List[StandardYoungTableau]:
    """All standard fillings of shape, ordered by row-reading word."""
    found: List[Rows] = []

    def place(parts: List[int], filling: Dict[Tuple[int, int], int], k: int):
        if k == 0:
            found.append(tuple(tuple(filling[(r, c)] for c in range(length))
                               for r, length in enumerate(shape.parts)))
            return
        for r in range(len(parts)):
            below = parts[r + 1] if r + 1 < len(parts) else 0
            if parts[r] > below:
                parts[r] -= 1
                filling[(r, parts[r])] = k
                place(parts, filling, k - 1)
                del filling[(r, parts[r])]
                parts[r] += 1

    place(list(shape.parts), {}, shape.n)
    tableaux = sorted((StandardYoungTableau(rows) for rows in found),
                      key=lambda t: t.reading_word)
    logger.debug("shape %s: %d standard tableaux (hook formula %d)",
                 shape, len(tableaux), hook_length_count(shape))
    return tableaux


# =============================================================================
# DOMINO TABLEAUX
# =============================================================================

@dataclass(frozen=True)
class DominoTableau:
    rows: Rows = ()

    def __post_init__(self):
        rows = _normalize_rows(self.rows)
        object.__setattr__(self, 'rows', rows)
        shape = _shape_of(rows)
        n, m = shape.n, shape.n // 2

        cells: Dict[int, List[Tuple[int, int]]] = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v < 0 or v > m:
                    raise ValueError(f"entry {v} outside 0..{m}: {rows}")
                cells.setdefault(v, []).append((r, c))
        if len(cells.get(0, [])) != n % 2:
            raise ValueError(f"entry 0 must appear {n % 2} times: {rows}")
        for i in range(1, m + 1):
            boxes = cells.get(i, [])
            if len(boxes) != 2:
                raise ValueError(f"entry {i} must appear twice: {rows}")
            (r1, c1), (r2, c2) = boxes
            if abs(r1 - r2) + abs(c1 - c2) != 1:
                raise ValueError(f"entry {i} does not fill a domino: {rows}")
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if c + 1 < len(row) and row[c + 1] < v:
                    raise ValueError(f"row {r} decreases: {rows}")
                if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c] < v:
                    raise ValueError(f"column {c} decreases: {rows}")

    @classmethod
    def parse(cls, text: str) -> 'DominoTableau':
        return cls(parse_rows(text))

    @property
    def shape(self) -> Partition:
        return _shape_of(self.rows)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def reading_word(self) -> Tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    @cached_property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(row[j] for row in self.rows if len(row) > j)
                     for j in range(self.shape.num_columns))

    def shape_chain(self) -> List[Partition]:
        """lambda^0(d) ⊂ ... ⊂ lambda^m(d): shapes of {entries <= k}."""
        return _chain_from_entries(self.rows, self.m)

    def cells_of(self, k: int) -> List[Tuple[int, int]]:
        return sorted((r, c) for r, row in enumerate(self.rows)
                      for c, v in enumerate(row) if v == k)

    @classmethod
    def from_shape_chain(cls, chain: Sequence[Partition]) -> 'DominoTableau':
        """
        Tableau whose k-th prefix shape is chain[k].

        Raises NotDominoError when consecutive shapes do not differ by two
        adjacent boxes.
        """
        if not chain:
            return cls(())
        base = chain[0]
        if base.parts not in ((), (1,)):
            raise NotDominoError(f"chain must start at the empty diagram or (1), got {base}")
        filling: Dict[Tuple[int, int], int] = {(0, 0): 0} if base.parts else {}
        for k in range(1, len(chain)):
            if not chain[k].contains(chain[k - 1]):
                raise NotDominoError(f"{chain[k - 1]} is not inside {chain[k]}")
            new = sorted(set(chain[k].boxes()) - set(chain[k - 1].boxes()))
            if len(new) != 2 or abs(new[0][0] - new[1][0]) + abs(new[0][1] - new[1][1]) != 1:
                raise NotDominoError(
                    f"{chain[k - 1]} -> {chain[k]} does not add a domino (boxes {new})")
            for box in new:
                filling[box] = k
        final = chain[-1]
        return cls(tuple(tuple(filling[(r, c)] for c in range(length))
                         for r, length in enumerate(final.parts)))

    def to_json(self) -> Dict:
        return {'shape': self.shape.to_json(), 'rows': [list(r) for r in self.rows], 'text': str(self)}

    def __str__(self) -> str:
        return format_rows(self.rows)


EMPTY_DOMINO = DominoTableau(())


def _removable_dominoes(parts: List[int]) -> Iterator[List[Tuple[int, int]]]:
    padded = parts + [0, 0]
    for r in range(len(parts)):
        if padded[r] - padded[r + 1] >= 2:
            yield [(r, padded[r] - 2), (r, padded[r] - 1)]
        if padded[r] >= 1 and padded[r] == padded[r + 1] and padded[r + 1] > padded[r + 2]:
            yield [(r, padded[r] - 1), (r + 1, padded[r] - 1)]


def enumerate_domino(shape: Partition,
                     kind: Optional[FormKind] = None) -> List[DominoTableau]:
    """All domino tableaux of shape (optionally only the kind-admissible ones)."""
    n, m = shape.n, shape.n // 2
    base = [1] if n % 2 else []
    found: List[Rows] = []

    def peel(parts: List[int], filling: Dict[Tuple[int, int], int], k: int):
        if k == 0:
            if parts == base:
                if base:
                    filling[(0, 0)] = 0
                found.append(tuple(tuple(filling[(r, c)] for c in range(length))
                                   for r, length in enumerate(shape.parts)))
            return
        for cells in list(_removable_dominoes(parts)):
            smaller = list(parts)
            for r, _ in cells:
                smaller[r] -= 1
            while smaller and smaller[-1] == 0:
                smaller.pop()
            child = dict(filling)
            for box in cells:
                child[box] = k
            peel(smaller, child, k - 1)

    peel(list(shape.parts), {}, m)
    tableaux = sorted((DominoTableau(rows) for rows in found), key=lambda d: d.reading_word)
    if kind is not None:
        tableaux = [d for d in tableaux if is_admissible_domino(d, kind)]
    return tableaux


def is_admissible_domino(d: DominoTableau, kind: FormKind) -> bool:
    """Every prefix shape lambda^i(d) is admissible for kind."""
    return all(is_admissible(shape, kind) for shape in d.shape_chain())


# =============================================================================
# CONCATENATION AND BUILDING BLOCKS
# =============================================================================

def _from_columns(columns: Sequence[Sequence[int]]) -> Rows:
    depth = max((len(col) for col in columns), default=0)
    return tuple(tuple(col[r] for col in columns if len(col) > r) for r in range(depth))


def concat(d1: DominoTableau, d2: DominoTableau) -> DominoTableau:
    """Columns of d1, then columns of d2 with entries shifted by floor(n1/2)."""
    if d2.n % 2:
        raise ParityError(f"right operand must have even size (got {d2.n})")
    if not d2.rows:
        return d1
    if not d1.rows:
        return d2
    last = len(d1.columns[-1])
    first = len(d2.columns[0])
    if last < first:
        raise ConcatenationOrderError(
            f"last column of left operand has length {last} < {first}")
    shift = d1.n // 2
    columns = list(d1.columns) + [tuple(v + shift for v in col) for col in d2.columns]
    return DominoTableau(_from_columns(columns))


def d_nk(n: int, k: int) -> DominoTableau:
    """Horizontal dominoes 1..k in two columns atop vertical dominoes k+1..n/2."""
    if n % 2:
        raise ParityError(f"d_(n,k) needs n even (got {n})")
    if n < 0 or k < 0 or k > n // 2:
        raise RangeError(f"d_(n,k) needs 0 <= k <= n/2 (got n={n}, k={k})")
    rows = [(i, i) for i in range(1, k + 1)]
    for j in range(k + 1, n // 2 + 1):
        rows += [(j,), (j,)]
    return DominoTableau(tuple(rows))


def d_n0(n: int) -> DominoTableau:
    """Single column 1,1,2,2,...; a leading 0 when n is odd."""
    if n < 0:
        raise RangeError(f"n must be nonnegative (got {n})")
    if n % 2 == 0:
        return d_nk(n, 0)
    rows = [(0,)]
    for j in range(1, n // 2 + 1):
        rows += [(j,), (j,)]
    return DominoTableau(tuple(rows))


def construct_dxomega(shape: Partition, kind: FormKind) -> DominoTableau:
    """
    Concatenate building blocks read from the padded columns of shape.

    Orthogonal: d_(c1,0) + d_(c2+c3, c3) + d_(c4+c5, c5) + ...
    Symplectic: d_(c1+c2, c2) + d_(c3+c4, c4) + ...

    Args:
        shape: admissible Jordan type
        kind: form kind

    Returns:
        DominoTableau of the given shape, admissible for kind
    """
    if not is_admissible(shape, kind):
        raise AdmissibilityError(f"{shape} is not {kind.value}-admissible")
    if not shape.parts:
        return EMPTY_DOMINO
    cols = shape.padded_columns(kind)
    pieces = []
    if kind is FormKind.ORTHOGONAL:
        pieces.append(d_n0(cols[0]))
        cols = cols[1:]
    for a, b in zip(cols[0::2], cols[1::2]):
        pieces.append(d_nk(a + b, b))
    return reduce(concat, pieces, EMPTY_DOMINO)


def refine_to_syt(d: DominoTableau) -> StandardYoungTableau:
    """Unique standard tableau interpolating the domino chain (left/top box first)."""
    offset = d.n % 2
    filling: Dict[Tuple[int, int], int] = {}
    if offset:
        filling[(0, 0)] = 1
    for k in range(1, d.m + 1):
        first, second = d.cells_of(k)
        filling[first] = offset + 2 * k - 1
        filling[second] = offset + 2 * k
    return StandardYoungTableau(tuple(tuple(filling[(r, c)] for c in range(len(row)))
                                      for r, row in enumerate(d.rows)))


def lemma1_applies(d1: DominoTableau, d2: DominoTableau, kind: FormKind) -> bool:
    """
    Hypotheses under which concat(d1, d2) is kind-admissible: d2 symplectic-admissible,
    d1 kind-admissible with an odd (orthogonal) or even (symplectic) column count.
    """
    if not is_admissible_domino(d2, FormKind.SYMPLECTIC):
        return False
    if not is_admissible_domino(d1, kind):
        return False
    ncols = len(d1.columns)
    return ncols % 2 == (1 if kind is FormKind.ORTHOGONAL else 0)


# =============================================================================
# COMPONENT COUNT
# =============================================================================

@dataclass(frozen=True)
class ComponentCountPrediction:
    count: int
    reason: str

    def to_json(self) -> Dict:
        return {'count': self.count, 'reason': self.reason}


def predicted_component_count(shape: Partition, kind: FormKind, n: int) -> ComponentCountPrediction:
    """Components of the variety attached to d_x^omega: 2 only for orthogonal forms with n even."""
    if not is_admissible(shape, kind):
        raise AdmissibilityError(f"{shape} is not {kind.value}-admissible")
    if n != shape.n:
        raise RangeError(f"n = {n} does not match |shape| = {shape.n}")
    if kind is FormKind.ORTHOGONAL and n % 2 == 0:
        return ComponentCountPrediction(2, 'orthogonal-even')
    return ComponentCountPrediction(1, 'symplectic-or-odd')


def construct_property_report(max_n: int) -> Dict:
    """construct_dxomega output is admissible with the right shape, for all |shape| <= max_n."""
    failures = []
    checked = 0
    for n in range(max_n + 1):
        for kind in FormKind:
            for shape in admissible_partitions(n, kind):
                checked += 1
                d = construct_dxomega(shape, kind)
                if d.shape != shape or not is_admissible_domino(d, kind):
                    failures.append({'shape': shape.to_json(), 'kind': kind.value,
                                     'rows': [list(r) for r in d.rows]})
    return {'max_n': max_n, 'shapes_checked': checked,
            'failures': failures, 'passed': not failures}


if __name__ == "__main__":
    for shape, kind in [(Partition.of(5, 4, 4, 2, 2), FormKind.ORTHOGONAL),
                        (Partition.of(5, 5, 4, 1, 1), FormKind.SYMPLECTIC)]:
        d = construct_dxomega(shape, kind)
        print(f"\n{shape} {kind.value}: {d}")
        print(render_ascii(d.rows))
