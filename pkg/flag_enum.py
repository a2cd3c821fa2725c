"""
Flag Enumeration
================
Exhaustive enumeration of x-stable complete flags of F_q^n and the checks
built on it.

- enumerate_xstable_flags: depth-first, one x-stable line of V/V_i at a time;
  with isotropic=True only V_0..V_m are chosen (isotropic, inside V_i^perp)
  and the upper half is V_{n-i} = V_i^perp
- sigma / iota involutions
- syt_label / domino_label from subquotient Jordan types
- kernel_flag_set, lemma2_checks, section6_suite, partition_property_check

Finite-field results are evidence: reports say "verified over F_q".
"""

import logging
from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Iterator, List, Optional, Sequence, Union

import pandas as pd

from config import check_flag_scale
from errors import (InvariantViolation, ModelError, NotDominoError, ParityError,
                    RangeError)
from linalg_exact import (ExactMatrix, Subspace, induced_jordan_type, nilpotency_ranks,
                          prime_field, solve)
from nilpotent_models import NilpotentModel, skew_adjoint_model, standard_nilpotent
from partitions import FormKind, Partition, hook_length_count
from tableaux import (DominoTableau, StandardYoungTableau, concat, d_nk, enumerate_syt,
                      is_admissible_domino)

logger = logging.getLogger(__name__)


# =============================================================================
# FLAGS
# =============================================================================

@dataclass(frozen=True)
class Flag:
    """V_0 ⊂ V_1 ⊂ ... ⊂ V_n with dim V_i = i."""
    spaces: tuple

    def __post_init__(self):
        spaces = tuple(self.spaces)
        object.__setattr__(self, 'spaces', spaces)
        for i, space in enumerate(spaces):
            if space.dim != i:
                raise ValueError(f"V_{i} has dimension {space.dim}")
            if i and not space.contains(spaces[i - 1]):
                raise ValueError(f"V_{i - 1} is not contained in V_{i}")

    @property
    def n(self) -> int:
        return len(self.spaces) - 1

    def __getitem__(self, i: int) -> Subspace:
        return self.spaces[i]

    def apply(self, g: ExactMatrix) -> 'Flag':
        """Image flag (g V_0, ..., g V_n) for invertible g."""
        return Flag(tuple(space.image(g) for space in self.spaces))

    def is_stable(self, x: ExactMatrix) -> bool:
        return all(space.is_stable(x) for space in self.spaces)

    def to_json(self) -> List[List[List[str]]]:
        """Basis of each V_i, i = 1..n-1 (V_0 and V_n are implied)."""
        return [space.to_json() for space in self.spaces[1:-1]]


@dataclass(frozen=True)
class LabeledFlag:
    flag: Flag
    syt: StandardYoungTableau
    domino: Optional[DominoTableau] = None

    def to_json(self) -> Dict:
        return {'flag': self.flag.to_json(), 'syt': self.syt.to_json(),
                'domino': self.domino.to_json() if self.domino else None}


@dataclass
class CounterexampleReport:
    assertion: str
    detail: str
    flag: Optional[Flag] = None

    def to_json(self) -> Dict:
        data = {'assertion': self.assertion, 'detail': self.detail}
        if self.flag is not None:
            data['flag'] = self.flag.to_json()
        return data


def _matrix(x: Union[NilpotentModel, ExactMatrix]) -> ExactMatrix:
    return x.x if isinstance(x, NilpotentModel) else x


# =============================================================================
# ENUMERATION
# =============================================================================

def _extend(x: ExactMatrix, spaces: List[Subspace], n: int) -> Iterator[Flag]:
    current = spaces[-1]
    if current.dim == n:
        yield Flag(tuple(spaces))
        return
    ambient = current.preimage(x)
    for u in current.quotient_lines(ambient):
        yield from _extend(x, spaces + [current.extend(u)], n)


def _extend_isotropic(model: NilpotentModel, spaces: List[Subspace]) -> Iterator[Flag]:
    n = model.n
    m = n // 2
    x, gram = model.x, model.gram
    current = spaces[-1]
    if current.dim == m:
        upper = [spaces[n - k].perp(gram) for k in range(m + 1, n + 1)]
        yield Flag(tuple(spaces + upper))
        return
    ambient = current.preimage(x).meet(current.perp(gram))
    for u in current.quotient_lines(ambient):
        if model.omega(u, u) != 0:
            continue
        yield from _extend_isotropic(model, spaces + [current.extend(u)])


def enumerate_xstable_flags(model: NilpotentModel, isotropic: bool = False) -> Iterator[Flag]:
    """
    Every complete flag with x(V_i) ⊆ V_i, each exactly once, in a fixed order.

    Args:
        model: nilpotent model over F_q (q odd, n within the configured guard)
        isotropic: only flags fixed by sigma (needs model.gram)

    Returns:
        generator of Flag
    """
    q = model.field.q
    if q is None:
        raise ModelError("flag enumeration needs a model over a prime field")
    check_flag_scale(model.n, q)
    start = [Subspace.zero(model.field, model.n)]
    if isotropic:
        if model.gram is None:
            raise ModelError("isotropic enumeration needs a Gram matrix")
        return _extend_isotropic(model, start)
    return _extend(model.x, start, model.n)


def full_flag_count(k: int, q: int) -> int:
    """|Fl(F_q^k)| = prod_{i=1..k} (q^i - 1)/(q - 1)."""
    count = 1
    for i in range(1, k + 1):
        count *= (q ** i - 1) // (q - 1)
    return count


# =============================================================================
# INVOLUTIONS
# =============================================================================

def sigma(f: Flag, gram: ExactMatrix) -> Flag:
    """(V_n^perp, ..., V_0^perp)."""
    n = f.n
    return Flag(tuple(f[n - i].perp(gram) for i in range(n + 1)))


def is_isotropic(f: Flag, gram: ExactMatrix) -> bool:
    return sigma(f, gram) == f


def iota(f: Flag, gram: ExactMatrix,
         x: Optional[Union[NilpotentModel, ExactMatrix]] = None) -> Flag:
    """Swap V_m for the other Lagrangian containing V_{m-1} (orthogonal form, n even)."""
    n = f.n
    if n % 2:
        raise ParityError(f"iota needs n even (got {n})")
    if gram.T != gram:
        raise ModelError("iota needs a symmetric Gram matrix")
    m = n // 2
    base = f[m - 1]
    q = gram.field.q
    others = []
    for u in base.quotient_lines(base.perp(gram)):
        if gram.field.reduce(u.dot(gram @ u)) != 0:
            continue
        lagrangian = base.extend(u)
        if lagrangian != f[m]:
            others.append(lagrangian)
    if len(others) != 1:
        raise InvariantViolation(
            f"expected one other Lagrangian over V_{m - 1}, found {len(others)} (q = {q})")
    spaces = list(f.spaces)
    spaces[m] = others[0]
    result = Flag(tuple(spaces))
    if x is not None and not result.is_stable(_matrix(x)):
        raise InvariantViolation("iota image is not x-stable")
    return result


# =============================================================================
# LABELS
# =============================================================================

def syt_label(f: Flag, x: Union[NilpotentModel, ExactMatrix]) -> StandardYoungTableau:
    """Standard tableau with lambda^{n-i} = type of x on V_{b_i}/V_{a_i}, (a_i, b_i) = (floor(i/2), n - ceil(i/2))."""
    x = _matrix(x)
    n = f.n
    chain: List[Partition] = [Partition(())] * (n + 1)
    for i in range(n + 1):
        a, b = i // 2, n - (i + 1) // 2
        chain[n - i] = induced_jordan_type(x, f[b], f[a], check=False)
    try:
        return StandardYoungTableau.from_shape_chain(chain)
    except ValueError as exc:
        raise InvariantViolation(f"subquotient chain is not a standard tableau: {exc}") from exc


def domino_chain(f: Flag, x: Union[NilpotentModel, ExactMatrix]) -> List[Partition]:
    """[lambda^0, ..., lambda^m] with lambda^{m-i} = type of x on V_{n-i}/V_i."""
    x = _matrix(x)
    n = f.n
    m = n // 2
    chain: List[Partition] = [Partition(())] * (m + 1)
    for i in range(m + 1):
        chain[m - i] = induced_jordan_type(x, f[n - i], f[i], check=False)
    return chain


def domino_label(f: Flag, x: Union[NilpotentModel, ExactMatrix]) -> DominoTableau:
    """Domino tableau read from the centered subquotient chain; NotDominoError if none."""
    return DominoTableau.from_shape_chain(domino_chain(f, x))


def label_flags(model: NilpotentModel, isotropic: bool = False,
                with_domino: bool = True) -> List[LabeledFlag]:
    labeled = []
    for f in enumerate_xstable_flags(model, isotropic=isotropic):
        domino = None
        if with_domino:
            try:
                domino = domino_label(f, model.x)
            except NotDominoError:
                domino = None
        labeled.append(LabeledFlag(f, syt_label(f, model.x), domino))
    return labeled


def stratum_table(labels: Sequence) -> pd.DataFrame:
    """Counts per label (labels rendered as strings; None -> 'not-domino')."""
    names = ['not-domino' if label is None else str(label) for label in labels]
    if not names:
        return pd.DataFrame({'label': [], 'count': []})
    counts = pd.Series(names, dtype=str).value_counts().sort_index()
    return counts.rename_axis('label').reset_index(name='count')


def in_kernel_band(f: Flag, x: Union[NilpotentModel, ExactMatrix]) -> bool:
    """Im x ⊆ V_m ⊆ ker x, m = floor(n/2)."""
    x = _matrix(x)
    middle = f[f.n // 2]
    return middle.contains(Subspace.image_of(x)) and Subspace.kernel_of(x).contains(middle)


# =============================================================================
# KERNEL FLAGS
# =============================================================================

def kernel_flag_set(x: Union[NilpotentModel, ExactMatrix]) -> List[Flag]:
    """All flags refining 0 ⊂ ker x ⊂ ker x^2 ⊂ ... ⊂ V."""
    x = _matrix(x)
    if x.field.q is None:
        raise ModelError("kernel_flag_set needs a prime field")
    depth = len(nilpotency_ranks(x)) - 1
    kernels = [Subspace.kernel_of(x ** j) for j in range(depth + 1)]
    n = x.nrows
    found: List[Flag] = []

    def refine(spaces: List[Subspace]):
        current = spaces[-1]
        if current.dim == n:
            found.append(Flag(tuple(spaces)))
            return
        target = next(k for k in kernels if k.dim > current.dim)
        for u in current.quotient_lines(target):
            refine(spaces + [current.extend(u)])

    refine([Subspace.zero(x.field, n)])
    return found


# =============================================================================
# CONCATENATION CHECKS
# =============================================================================

@dataclass
class Lemma2Report:
    tableau: DominoTableau
    field: str
    flags_checked: int = 0
    flags_labeled: int = 0
    counterexamples: List[CounterexampleReport] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> Dict:
        return {
            'tableau': self.tableau.to_json(),
            'flags_checked': self.flags_checked,
            'flags_labeled': self.flags_labeled,
            'passed': self.passed,
            'verdict': (f"verified over {self.field}" if self.passed
                        else f"counterexample over {self.field}"),
            'counterexamples': [c.to_json() for c in self.counterexamples],
        }


def lemma2_checks(model: NilpotentModel, d1: DominoTableau, n2: int, k2: int,
                  isotropic: bool = False) -> Lemma2Report:
    """
    For d = d1 + d_(n2,k2) and every flag labeled d, with l1 = columns of d1
    and m2 = n2/2, check:
    - x^l1(V_{n-m2}) = V_{m2}
    - V_{n-m2} = (x^l1)^-1(V_{m2})
    - Im x^(l1+1) ⊆ V_{m2} ⊆ ker x ∩ Im x^l1
    - dim V_{m2} - dim Im x^(l1+1) = m2 - k2
    """
    d = concat(d1, d_nk(n2, k2))
    if d.shape != model.jordan:
        raise RangeError(f"tableau shape {d.shape} differs from the Jordan type {model.jordan}")
    x = model.x
    n = model.n
    l1 = len(d1.columns)
    m2 = n2 // 2
    power = x ** l1
    image_l1 = Subspace.image_of(power)
    image_next = Subspace.image_of(x ** (l1 + 1))
    band_top = Subspace.kernel_of(x).meet(image_l1)

    report = Lemma2Report(tableau=d, field=str(model.field))
    for f in enumerate_xstable_flags(model, isotropic=isotropic):
        report.flags_checked += 1
        try:
            if domino_label(f, x) != d:
                continue
        except NotDominoError:
            continue
        report.flags_labeled += 1
        upper, lower = f[n - m2], f[m2]
        if upper.image(power) != lower:
            report.counterexamples.append(CounterexampleReport(
                'image', f"x^{l1}(V_{n - m2}) != V_{m2}", f))
        if lower.preimage(power) != upper:
            report.counterexamples.append(CounterexampleReport(
                'preimage', f"V_{n - m2} != (x^{l1})^-1(V_{m2})", f))
        if not (lower.contains(image_next) and band_top.contains(lower)):
            report.counterexamples.append(CounterexampleReport(
                'band', f"V_{m2} not between Im x^{l1 + 1} and ker x ∩ Im x^{l1}", f))
        if lower.dim - image_next.dim != m2 - k2:
            report.counterexamples.append(CounterexampleReport(
                'grassmannian', f"dim V_{m2}/Im x^{l1 + 1} != {m2 - k2}", f))
    logger.debug("lemma2 %s: %d/%d flags labeled", d, report.flags_labeled, report.flags_checked)
    return report


# =============================================================================
# STRATIFICATION BY STANDARD TABLEAUX
# =============================================================================

@dataclass
class StratificationReport:
    partition: Partition
    q: int
    flag_count: int
    label_counts: Dict[str, int]
    expected_labels: int
    missing: List[str]
    unexpected: List[str]

    @property
    def passed(self) -> bool:
        return (not self.missing and not self.unexpected
                and len(self.label_counts) == self.expected_labels
                and sum(self.label_counts.values()) == self.flag_count)

    def to_json(self) -> Dict:
        return {'partition': self.partition.to_json(), 'q': self.q,
                'flag_count': self.flag_count, 'label_counts': self.label_counts,
                'expected_labels': self.expected_labels,
                'missing': self.missing, 'unexpected': self.unexpected,
                'passed': self.passed,
                'verdict': f"{'verified' if self.passed else 'counterexample'} over F_{self.q}"}


def partition_property_check(p: Partition, q: int = 3) -> StratificationReport:
    """syt_label fibers partition the x-stable flags; every standard tableau occurs."""
    model = standard_nilpotent(p, prime_field(q))
    counts: Counter = Counter()
    total = 0
    for f in enumerate_xstable_flags(model):
        counts[str(syt_label(f, model.x))] += 1
        total += 1
    expected = {str(t) for t in enumerate_syt(p)}
    return StratificationReport(
        partition=p, q=q, flag_count=total, label_counts=dict(sorted(counts.items())),
        expected_labels=hook_length_count(p),
        missing=sorted(expected - set(counts)), unexpected=sorted(set(counts) - expected))


# =============================================================================
# SP6 EXAMPLE: lambda = (2,2,1,1)
# =============================================================================

SP6_SHAPE = Partition.of(2, 2, 1, 1)
SP6_TABLEAUX = {
    'd1': d_nk(6, 2),
    'd2': DominoTableau.parse('13/13/2/2'),
    'd3': DominoTableau.parse('12/12/3/3'),
}


@dataclass
class Section6Report:
    q: int
    flag_count: int = 0
    label_counts: Dict[str, int] = dataclass_field(default_factory=dict)
    zset_counts: Dict[str, int] = dataclass_field(default_factory=dict)
    assertions: Dict[str, bool] = dataclass_field(default_factory=dict)
    counterexamples: List[CounterexampleReport] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.assertions.values()) and not self.counterexamples

    def fail(self, assertion: str, detail: str, flag: Optional[Flag] = None):
        self.assertions[assertion] = False
        self.counterexamples.append(CounterexampleReport(assertion, detail, flag))

    def to_json(self) -> Dict:
        return {
            'q': self.q,
            'flag_count': self.flag_count,
            'label_counts': self.label_counts,
            'zset_counts': self.zset_counts,
            'assertions': self.assertions,
            'passed': self.passed,
            'verdict': f"{'verified' if self.passed else 'counterexample'} over F_{self.q}",
            'counterexamples': [c.to_json() for c in self.counterexamples],
        }


def _chi_isotropic_lines(model: NilpotentModel) -> List[Subspace]:
    """Lines of Im x isotropic for chi(xv, xw) = omega(v, xw)."""
    x, gram = model.x, model.gram
    lines = []
    for line in Subspace.image_of(x).lines():
        w = line.array[0]
        v = solve(x, list(w))
        if model.field.reduce(v.dot(gram @ w)) == 0:
            lines.append(line)
    return lines


def _block_reflection(model: NilpotentModel, block_index: int) -> ExactMatrix:
    """Identity with -1 on one Jordan block."""
    arr = ExactMatrix.identity(model.n, model.field).data.copy()
    for i in model.blocks[block_index].indices:
        arr[i, i] = model.field.coerce(-1)
    return ExactMatrix._wrap(arr, model.field)


def section6_suite(q: int = 3) -> Section6Report:
    """
    Sp_6, lambda(x) = (2,2,1,1): stratification of the isotropic x-stable
    flags by Z_1, Z_{2,i} = {V_1 = L_i}, Z_{3,i} = {L_i ⊆ V_2 ⊆ ker x}.
    Z_2 = {x(V_5) ⊆ V_1} is checked to be Z_{2,1} ∪ Z_{2,2}.
    """
    check_flag_scale(SP6_SHAPE.n, q)
    field = prime_field(q)
    model = skew_adjoint_model(SP6_SHAPE, FormKind.SYMPLECTIC, field)
    x, gram = model.x, model.gram
    report = Section6Report(q=q)

    image = Subspace.image_of(x)
    kernel = Subspace.kernel_of(x)
    report.assertions['kernel-is-image-perp'] = kernel == image.perp(gram)

    lines = _chi_isotropic_lines(model)
    report.assertions['two-chi-isotropic-lines'] = len(lines) == 2
    if len(lines) != 2:
        report.fail('two-chi-isotropic-lines', f"found {len(lines)} chi-isotropic lines")
        return report
    L1, L2 = lines
    report.assertions['line-perp-is-preimage'] = all(
        L.perp(gram) == L.preimage(x) for L in lines)

    h = _block_reflection(model, 1)
    identity = ExactMatrix.identity(model.n, field)
    report.assertions['h-involutive-symplectic'] = (
        h @ h == identity and h.T @ gram @ h == gram and h @ x == x @ h)
    report.assertions['h-swaps-lines'] = L1.image(h) == L2 and L2.image(h) == L1

    def zsets(f: Flag) -> Dict[str, bool]:
        return {
            'Z1': f[3].contains(image) and kernel.contains(f[3]),
            'Z2': f[1].contains(f[5].image(x)),
            'Z2_1': f[1] == L1,
            'Z2_2': f[1] == L2,
            'Z3_1': f[2].contains(L1) and kernel.contains(f[2]),
            'Z3_2': f[2].contains(L2) and kernel.contains(f[2]),
        }

    flags = list(enumerate_xstable_flags(model, isotropic=True))
    flag_set = set(flags)
    report.flag_count = len(flags)
    names = {t: name for name, t in SP6_TABLEAUX.items()}
    labels: List[str] = []
    zcounts: Counter = Counter()
    expected_zone = {'d1': ('Z1',), 'd2': ('Z2_1', 'Z2_2'), 'd3': ('Z3_1', 'Z3_2')}
    for name in ('cover', 'inclusion', 'admissible-labels', 'z2-disjoint', 'z2-union',
                 'z3-intersection', 'h-swap'):
        report.assertions[name] = True

    z3_both = []
    middle_is_image = []
    for f in flags:
        membership = zsets(f)
        zcounts.update(k for k, v in membership.items() if v)
        try:
            label = domino_label(f, x)
        except NotDominoError as exc:
            report.fail('admissible-labels', f"isotropic flag without domino label: {exc}", f)
            continue
        if not is_admissible_domino(label, FormKind.SYMPLECTIC):
            report.fail('admissible-labels', f"inadmissible label {label}", f)
        name = names.get(label, str(label))
        labels.append(name)
        if not any(membership.values()):
            report.fail('cover', "flag outside Z1 ∪ Z2 ∪ Z3", f)
        zone = expected_zone.get(name)
        if zone is None or not any(membership[z] for z in zone):
            report.fail('inclusion', f"flag labeled {name} outside its Z-set", f)
        if membership['Z2_1'] and membership['Z2_2']:
            report.fail('z2-disjoint', "flag in Z2_1 and Z2_2", f)
        if membership['Z2'] != (membership['Z2_1'] or membership['Z2_2']):
            report.fail('z2-union', "x(V_5) ⊆ V_1 disagrees with V_1 ∈ {L_1, L_2}", f)
        if membership['Z3_1'] and membership['Z3_2']:
            z3_both.append(f)
        if f[2] == image:
            middle_is_image.append(f)

        g = f.apply(h)
        if g not in flag_set:
            report.fail('h-swap', "h(f) is not an isotropic x-stable flag", f)
        else:
            moved = zsets(g)
            if (moved['Z2_1'], moved['Z2_2'], moved['Z3_1'], moved['Z3_2']) != (
                    membership['Z2_2'], membership['Z2_1'], membership['Z3_2'], membership['Z3_1']):
                report.fail('h-swap', "h does not swap the Z-sets", f)

    if not z3_both or set(z3_both) != set(middle_is_image):
        report.fail('z3-intersection',
                    f"Z3_1 ∩ Z3_2 has {len(z3_both)} flags, {{V_2 = Im x}} has {len(middle_is_image)}")
    zcounts['Z3_1&Z3_2'] = len(z3_both)

    report.label_counts = dict(sorted(Counter(labels).items()))
    report.assertions['three-labels'] = set(report.label_counts) == set(SP6_TABLEAUX)
    report.zset_counts = dict(sorted(zcounts.items()))
    logger.debug("section6 q=%d: %d flags, labels %s", q, len(flags), report.label_counts)
    return report


if __name__ == "__main__":
    report = section6_suite(3)
    print(f"Sp6 (2,2,1,1) over F_3: {report.flag_count} isotropic x-stable flags")
    print(f"labels:  {report.label_counts}")
    print(f"Z-sets:  {report.zset_counts}")
    print(f"passed:  {report.passed}")
