"""
Exceptional Orbit Data
======================
Static table: for each nilpotent orbit of G2, F4, E6, E7, E8 (Bala-Carter
labels), whether the orbit is known to contain a smooth orbital variety.

- GUARANTEED_SMOOTH: induced from a classical Levi (or Richardson), so the
  smooth component construction applies
- UNKNOWN: rigid, or induced only from exceptional Levis; open, not negative
- NO_SMOOTH: the minimal orbit of G2 (its orbital varieties are singular)

Labels are normalized before lookup: whitespace, underscores, braces and '$'
dropped, tildes and primes mapped to ASCII, and the summands of a sum sorted,
so "A1+2A2" and "2A2+A1" name the same orbit.
"""

import re
import logging
import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Tuple

import pandas as pd

from errors import LabelError

logger = logging.getLogger(__name__)


class Verdict(Enum):
    GUARANTEED_SMOOTH = 'guaranteed-smooth'
    UNKNOWN = 'unknown'
    NO_SMOOTH = 'no-smooth'


# =============================================================================
# ORBIT UNIVERSES
# =============================================================================

ORBIT_LABELS: Dict[str, Tuple[str, ...]] = {
    'G2': ('0', 'A1', '~A1', 'G2(a1)', 'G2'),
    'F4': ('0', 'A1', '~A1', 'A1+~A1', 'A2', '~A2', 'A2+~A1', 'B2', '~A2+A1', 'C3(a1)',
           'F4(a3)', 'B3', 'C3', 'F4(a2)', 'F4(a1)', 'F4'),
    'E6': ('0', 'A1', '2A1', '3A1', 'A2', 'A2+A1', '2A2', 'A2+2A1', 'A3', '2A2+A1',
           'A3+A1', 'D4(a1)', 'A4', 'D4', 'A4+A1', 'A5', 'D5(a1)', 'E6(a3)', 'D5',
           'E6(a1)', 'E6'),
    'E7': ('0', 'A1', '2A1', "(3A1)''", "(3A1)'", 'A2', '4A1', 'A2+A1', 'A2+2A1', 'A3',
           '2A2', 'A2+3A1', "(A3+A1)''", '2A2+A1', "(A3+A1)'", 'D4(a1)', 'A3+2A1', 'D4',
           'D4(a1)+A1', 'A3+A2', 'A4', 'A3+A2+A1', "(A5)''", 'D4+A1', 'A4+A1', 'D5(a1)',
           'A4+A2', "(A5)'", 'A5+A1', 'D5(a1)+A1', 'D6(a2)', 'E6(a3)', 'D5', 'E7(a5)', 'A6',
           'D5+A1', 'D6(a1)', 'E7(a4)', 'D6', 'E6(a1)', 'E6', 'E7(a3)', 'E7(a2)', 'E7(a1)',
           'E7'),
    'E8': ('0', 'A1', '2A1', '3A1', 'A2', '4A1', 'A2+A1', 'A2+2A1', 'A3', 'A2+3A1', '2A2',
           '2A2+A1', 'A3+A1', 'D4(a1)', 'D4', '2A2+2A1', 'A3+2A1', 'D4(a1)+A1', 'A3+A2',
           'A4', 'A3+A2+A1', 'D4+A1', 'D4(a1)+A2', 'A4+A1', '2A3', 'D5(a1)', 'A4+2A1',
           'A4+A2', 'A5', 'D5(a1)+A1', 'A4+A2+A1', 'D4+A2', 'E6(a3)', 'D5', 'A4+A3',
           'A5+A1', 'D5(a1)+A2', 'D6(a2)', 'E6(a3)+A1', 'E7(a5)', 'D5+A1', 'E8(a7)', 'A6',
           'D6(a1)', 'A6+A1', 'E7(a4)', 'E6(a1)', 'D5+A2', 'D6', 'E6', 'D7(a2)', 'A7',
           'E6(a1)+A1', 'E7(a3)', 'E8(b6)', 'D7(a1)', 'E6+A1', 'E7(a2)', 'E8(a6)', 'D7',
           'E8(b5)', 'E7(a1)', 'E8(a5)', 'E8(b4)', 'E7', 'E8(a4)', 'E8(a3)', 'E8(a2)',
           'E8(a1)', 'E8'),
}

# Orbits the smooth construction does not reach: rigid ones, then (E7, E8) those
# induced only from Levis with an exceptional factor.
RIGID_EXCLUSIONS: Dict[str, Tuple[str, ...]] = {
    'G2': (),
    'F4': ('A1', '~A1', 'A1+~A1', 'A2+~A1', '~A2+A1'),
    'E6': ('A1', '3A1', '2A2+A1'),
    'E7': ('A1', '2A1', "(3A1)'", '4A1', 'A2+2A1', 'A1+2A2', "(A1+A3)'"),
    'E8': ('A1', '2A1', '3A1', '4A1', 'A2+A1', 'A2+2A1', 'A2+3A1', '2A2+A1', 'A3+A1',
           '2A2+2A1', 'A3+2A1', 'D4(a1)+A1', 'A3+A2+A1', '2A3', 'D5(a1)+A2', 'A5+A1',
           'A4+A3'),
}

EXCEPTIONAL_LEVI_EXCLUSIONS: Dict[str, Tuple[str, ...]] = {
    'G2': (),
    'F4': (),
    'E6': (),
    'E7': ('A2+A1', 'A3+2A1', 'A5+A1'),
    'E8': ('A3', 'D4+A1', 'A4+A1', 'D5(a1)', 'D5(a1)+A1', 'E6(a3)+A1', 'E7(a5)', 'D5+A1',
           'E6+A1'),
}

NO_SMOOTH: Dict[str, Tuple[str, ...]] = {'G2': ('A1',)}

SOURCE_G2_MINIMAL = 'g2-minimal-orbit'
SOURCE_RIGID = 'rigid-orbit-exclusion'
SOURCE_EXCEPTIONAL_LEVI = 'induced-only-from-exceptional-levi'
SOURCE_CLASSICAL_LEVI = 'induced-from-classical-levi'


# =============================================================================
# LABEL NORMALIZATION
# =============================================================================

_WRAPPED = re.compile(r"^\((.*)\)('*)$")


def normalize_label(label: str) -> str:
    """ASCII spelling: '~A1', "(3A1)'", 'D4(a1)+A1'."""
    text = unicodedata.normalize('NFC', label)
    for old, new in (('\\widetilde{A}', '~A'), ('\\tilde{A}', '~A'),
                     ('\\widetilde A', '~A'), ('Ã', '~A'), ('Ã', '~A'),
                     ('″', "''"), ('′', "'"), ('\\prime', "'")):
        text = text.replace(old, new)
    text = re.sub(r"[\s_{}$]", '', text)
    text = text.replace("^''", "''").replace("^'", "'")
    return text


def label_key(label: str) -> Tuple[Tuple[str, ...], str]:
    """Order-free key: (sorted summands, primes)."""
    text = normalize_label(label)
    match = _WRAPPED.match(text)
    primes = ''
    if match:
        text, primes = match.group(1), match.group(2)
    summands = tuple(sorted(s for s in text.split('+') if s))
    return summands, primes


def normalize_group(group: str) -> str:
    key = group.strip().upper()
    if key not in ORBIT_LABELS:
        raise LabelError(f"unknown exceptional type '{group}' (expected one of {', '.join(ORBIT_LABELS)})")
    return key


# =============================================================================
# RECORDS
# =============================================================================

@dataclass(frozen=True)
class ExceptionalOrbitRecord:
    group: str
    label: str
    verdict: Verdict
    source: str

    def to_json(self) -> Dict:
        data = {'group': self.group, 'orbit': self.label,
                'verdict': self.verdict.value, 'source': self.source}
        if self.verdict is Verdict.UNKNOWN:
            data['note'] = 'open: outside the smooth construction, not a negative result'
        return data


def _keys(labels) -> FrozenSet:
    return frozenset(label_key(label) for label in labels)


def _build_records() -> Dict[str, Dict[Tuple, ExceptionalOrbitRecord]]:
    table: Dict[str, Dict[Tuple, ExceptionalOrbitRecord]] = {}
    for group, labels in ORBIT_LABELS.items():
        rigid = _keys(RIGID_EXCLUSIONS[group])
        exceptional = _keys(EXCEPTIONAL_LEVI_EXCLUSIONS[group])
        none = _keys(NO_SMOOTH.get(group, ()))
        records = {}
        for label in labels:
            key = label_key(label)
            if key in none:
                verdict, source = Verdict.NO_SMOOTH, SOURCE_G2_MINIMAL
            elif key in rigid:
                verdict, source = Verdict.UNKNOWN, SOURCE_RIGID
            elif key in exceptional:
                verdict, source = Verdict.UNKNOWN, SOURCE_EXCEPTIONAL_LEVI
            else:
                verdict, source = Verdict.GUARANTEED_SMOOTH, SOURCE_CLASSICAL_LEVI
            records[key] = ExceptionalOrbitRecord(group, label, verdict, source)
        missing = (rigid | exceptional | none) - set(records)
        if missing:
            raise LabelError(f"{group} exclusions name orbits outside the label list: {sorted(missing)}")
        table[group] = records
    return table


RECORDS = _build_records()


def orbit_record(group: str, orbit: str) -> ExceptionalOrbitRecord:
    g = normalize_group(group)
    record = RECORDS[g].get(label_key(orbit))
    if record is None:
        raise LabelError(f"'{orbit}' is not a nilpotent orbit label of {g}")
    return record


def smooth_ov_verdict(group: str, orbit: str) -> Verdict:
    """
    Whether the orbit is known to contain a smooth orbital variety.

    Args:
        group: G2, F4, E6, E7 or E8 (case-insensitive)
        orbit: Bala-Carter label, typographic variants accepted

    Returns:
        Verdict
    """
    return orbit_record(group, orbit).verdict


def orbits_of(group: str) -> List[str]:
    return list(ORBIT_LABELS[normalize_group(group)])


def verdict_table(group: str) -> pd.DataFrame:
    g = normalize_group(group)
    rows = [{'orbit': r.label, 'verdict': r.verdict.value, 'source': r.source}
            for r in RECORDS[g].values()]
    return pd.DataFrame(rows, columns=['orbit', 'verdict', 'source'])


if __name__ == "__main__":
    for group, orbit in [('G2', 'A1'), ('E7', 'A2+A1'), ('F4', 'B2'), ('E8', 'A4+A3')]:
        record = orbit_record(group, orbit)
        print(f"{group:3} {orbit:10} -> {record.verdict.value:18} ({record.source})")
    print(verdict_table('F4').groupby('verdict').size())
