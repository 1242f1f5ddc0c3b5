"""Generic character table skeleton: labels, degrees, series, field action.

A character label is a family id plus a canonical index tuple; the degree
depends only on the family.  Indices are stored per slot group, sorted inside
starred groups, so equality is structural.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import indexing
from .arith import GroupSpec, PrimeRegime, ell_part, group_order
from .dataio import CharFamily, Tables
from .errors import InvalidSeries


@dataclass(frozen=True)
class CharLabel:
    gf: str  # sp6 / sp4
    fam: int
    idx: tuple  # one entry per slot group: int or tuple of ints

    def __repr__(self):
        if not self.idx:
            return f"X{self.fam}"
        return f"X{self.fam}{self.idx}"

    def __lt__(self, other):
        return (self.fam, self.idx) < (other.fam, other.idx)


def _group_space(kind: str, q: int, k: int, starred: bool):
    if k == 1:
        return [c.rep for c in indexing.enumerate_classes(kind, q)]
    if starred:
        tuples = indexing.starred_tuples(kind, q, k)
    else:
        tuples = indexing.ordered_tuples(kind, q, k)
    return [tuple(c.rep for c in t) for t in tuples]


def index_space(fam: CharFamily, q: int):
    """All canonical index tuples of the family at q."""
    spaces = [_group_space(kind, q, k, starred) for kind, k, starred in fam.slots]
    return list(itertools.product(*spaces))


def canonical_idx(fam: CharFamily, q: int, idx: tuple) -> tuple:
    """Canonicalize raw per-group indices (sorting starred groups)."""
    out = []
    for (kind, k, starred), val in zip(fam.slots, idx):
        if k == 1:
            out.append(indexing.canonicalize(kind, q, val).rep)
        else:
            reps = [indexing.canonicalize(kind, q, v).rep for v in val]
            if starred:
                reps.sort()
            out.append(tuple(reps))
    return tuple(out)


def all_characters(tables: Tables, g: GroupSpec) -> list[CharLabel]:
    labels = []
    for fam in sorted(tables.families):
        f = tables.families[fam]
        for idx in index_space(f, g.q):
            labels.append(CharLabel(tables.gf, fam, idx))
    return labels


def series_of(tables: Tables, label: CharLabel) -> int:
    return tables.families[label.fam].series


def series_families(tables: Tables, series_id: int) -> list[int]:
    fams = [f for f, spec in tables.families.items() if spec.series == series_id]
    if not fams:
        raise InvalidSeries(f"no series {series_id} in {tables.gf}")
    return sorted(fams)


def series_members(tables: Tables, g: GroupSpec, series_id: int, idx: tuple) -> list[CharLabel]:
    """The members of one Lusztig series instance E_series(idx)."""
    members = []
    for fam in series_families(tables, series_id):
        f = tables.families[fam]
        members.append(CharLabel(tables.gf, fam, canonical_idx(f, g.q, idx)))
    return members


def series_count_formula(tables: Tables, series_id: int, q: int) -> int:
    """Number of series instances, from the index-set counting formulas."""
    fam = series_families(tables, series_id)[0]
    n = 1
    for kind, k, starred in tables.families[fam].slots:
        c = indexing.class_count_formula(kind, q)
        if k == 1:
            n *= c
        else:
            ways = 1
            for j in range(k):
                ways *= c - j
            if starred:
                for j in range(2, k + 1):
                    ways //= j
            n *= ways
    return n


def degree(tables: Tables, label: CharLabel, q: int) -> int:
    return tables.families[label.fam].degree.eval(q)


def degree_ell_part(tables: Tables, label: CharLabel, q: int, ell: int) -> int:
    return ell_part(degree(tables, label, q), ell)[0]


def is_defect_zero(tables: Tables, g: GroupSpec, label: CharLabel, regime: PrimeRegime) -> bool:
    gpart = ell_part(group_order(g), regime.ell)[0]
    return degree_ell_part(tables, label, g.q, regime.ell) == gpart


def count_ell_prime(tables: Tables, g: GroupSpec, regime: PrimeRegime) -> int:
    return sum(
        1
        for c in all_characters(tables, g)
        if degree(tables, c, g.q) % regime.ell != 0
    )


def mass(tables: Tables, g: GroupSpec) -> int:
    return sum(degree(tables, c, g.q) ** 2 for c in all_characters(tables, g))


def is_unipotent(tables: Tables, label: CharLabel) -> bool:
    return tables.families[label.fam].series == 1


def ell_trivial_indices(tables: Tables, g: GroupSpec, label: CharLabel, regime: PrimeRegime) -> bool:
    """True when every index slot is an ell-element index (the character then
    belongs to the unipotent union of blocks)."""
    f = tables.families[label.fam]
    for (kind, k, _), val in zip(f.slots, label.idx):
        vals = (val,) if k == 1 else val
        mod = indexing.kind_lprime_modulus(kind, g.q, regime)
        if any(v % mod != 0 for v in vals):
            return False
    return True


def sigma_char(tables: Tables, g: GroupSpec, label: CharLabel) -> CharLabel:
    """The index-doubling field action; fixes the family."""
    f = tables.families[label.fam]
    doubled = []
    for (kind, k, _), val in zip(f.slots, label.idx):
        if k == 1:
            doubled.append(2 * val)
        else:
            doubled.append(tuple(2 * v for v in val))
    return CharLabel(label.gf, label.fam, canonical_idx(f, g.q, tuple(doubled)))


# --- the graph automorphism of Sp4 -------------------------------------------

# family swaps: (image family, index rule)
#   keep    : same index
#   double  : doubled index
#   sum/dif : (i, j) -> (i+j, i-j)
#   merge   : (i, j) -> i*(q+1) + j*(q-1) in the q^2-1 set
#   split   : r -> (2*r1, 2*r2) with r = r1*(q+1) + r2*(q-1)
#   qp1     : i -> (q+1)*i

_GAMMA_SP4 = {
    1: (1, "keep"),
    2: (2, "keep"),
    3: (4, "keep"),
    4: (3, "keep"),
    5: (5, "keep"),
    6: (6, "keep"),
    7: (11, "keep"),
    8: (12, "keep"),
    11: (7, "double"),
    12: (8, "double"),
    9: (13, "keep"),
    10: (14, "keep"),
    13: (9, "double"),
    14: (10, "double"),
    15: (15, "sumdif"),
    19: (19, "sumdif"),
    16: (17, "split"),
    17: (16, "merge"),
    18: (18, "qp1"),
}


def gamma_sp4_indices(rule: str, q: int, idx: tuple) -> tuple:
    if rule == "keep":
        return idx
    if rule == "double":
        return tuple(2 * v if isinstance(v, int) else tuple(2 * x for x in v) for v in idx)
    if rule == "sumdif":
        (i, j) = idx[0]
        return ((i + j, i - j),)
    if rule == "merge":
        i, j = idx
        return (i * (q + 1) + j * (q - 1),)
    if rule == "split":
        r1, r2 = indexing.crt_split(idx[0], q)
        return (2 * r1, 2 * r2)
    if rule == "qp1":
        return ((q + 1) * idx[0],)
    raise ValueError(rule)


def gamma_char(tables: Tables, g: GroupSpec, label: CharLabel) -> CharLabel:
    assert tables.gf == "sp4"
    fam2, rule = _GAMMA_SP4[label.fam]
    raw = gamma_sp4_indices(rule, g.q, label.idx)
    f2 = tables.families[fam2]
    return CharLabel("sp4", fam2, canonical_idx(f2, g.q, raw))
