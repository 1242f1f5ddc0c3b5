"""Index sets, orbit canonicalization, and the doubling action.

Six kinds of index sets parametrize character families, one per maximal-torus
cyclotomic factor.  Kind codes (q always a power of 2):

    a : residues mod q-1
    b : residues mod q+1
    c : residues mod q^2-1, excluding multiples of q-1 and q+1
    d : residues mod q^2+1
    e : residues mod q^3-1, excluding multiples of q^2+q+1
    f : residues mod q^3+1, excluding multiples of q^2-q+1

Classes are orbits under negation (all kinds) and multiplication by q
(kinds c..f); the canonical representative is the minimum orbit member.
Orbits are computed by closure rather than closed form, so the exclusion
interactions cannot be transcribed wrongly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .arith import PrimeRegime, ell_part
from .errors import ExcludedIndex

KINDS = ("a", "b", "c", "d", "e", "f")


def kind_modulus(kind: str, q: int) -> int:
    return {
        "a": q - 1,
        "b": q + 1,
        "c": q**2 - 1,
        "d": q**2 + 1,
        "e": q**3 - 1,
        "f": q**3 + 1,
    }[kind]


def _excluded(kind: str, q: int, i: int) -> bool:
    i %= kind_modulus(kind, q)
    if i == 0:
        return True
    if kind == "c":
        return i % (q - 1) == 0 or i % (q + 1) == 0
    if kind == "e":
        return i % (q**2 + q + 1) == 0
    if kind == "f":
        return i % (q**2 - q + 1) == 0
    return False


def _n_multipliers(kind: str) -> int:
    # powers of q acting on the kind: q^0 only, q^0..q^1, or q^0..q^2
    return {"a": 1, "b": 1, "c": 2, "d": 2, "e": 3, "f": 3}[kind]


@dataclass(frozen=True)
class IndexClass:
    kind: str
    q: int
    rep: int
    orbit: frozenset[int]

    def __repr__(self):
        return f"[{self.kind}:{self.rep}]"

    def __lt__(self, other: "IndexClass"):
        return (self.kind, self.rep) < (other.kind, other.rep)


def _orbit_of(kind: str, q: int, i: int) -> frozenset[int]:
    mod = kind_modulus(kind, q)
    npow = _n_multipliers(kind)
    seen = set()
    frontier = [i % mod]
    while frontier:
        x = frontier.pop()
        if x in seen:
            continue
        seen.add(x)
        for j in range(npow):
            y = x * q**j % mod
            for z in (y, mod - y):
                if z % mod not in seen:
                    frontier.append(z % mod)
    return frozenset(seen)


def canonicalize(kind: str, q: int, i: int) -> IndexClass:
    mod = kind_modulus(kind, q)
    i %= mod
    if _excluded(kind, q, i):
        raise ExcludedIndex(f"index {i} excluded from kind {kind} at q={q}")
    orbit = _orbit_of(kind, q, i)
    return IndexClass(kind, q, min(orbit), orbit)


@lru_cache(maxsize=None)
def enumerate_classes(kind: str, q: int) -> tuple[IndexClass, ...]:
    """All classes of the kind, sorted by representative.  May be empty."""
    mod = kind_modulus(kind, q)
    seen: set[int] = set()
    out = []
    for i in range(1, mod):
        if i in seen or _excluded(kind, q, i):
            continue
        cls = canonicalize(kind, q, i)
        seen.update(cls.orbit)
        out.append(cls)
    return tuple(out)


def class_count_formula(kind: str, q: int) -> int:
    """Closed-form class counts, used to validate the enumeration."""
    return {
        "a": (q - 2) // 2,
        "b": q // 2,
        "c": q * (q - 2) // 4,
        "d": q**2 // 4,
        "e": q * (q**2 - 1) // 6,
        "f": q * (q**2 - 1) // 6,
    }[kind]


def ordered_tuples(kind: str, q: int, k: int) -> list[tuple[IndexClass, ...]]:
    """Tuples of k pairwise distinct classes, ordered."""
    return list(itertools.permutations(enumerate_classes(kind, q), k))


def starred_tuples(kind: str, q: int, k: int) -> list[tuple[IndexClass, ...]]:
    """Unordered k-sets of distinct classes, stored sorted by representative."""
    return list(itertools.combinations(enumerate_classes(kind, q), k))


def sigma_double(cls: IndexClass) -> IndexClass:
    """Index doubling; stays inside the kind since exclusions are odd."""
    return canonicalize(cls.kind, cls.q, 2 * cls.rep)


def sigma_order(kind: str, q: int, a: int) -> int:
    """Order of the doubling permutation on the class set (divides a)."""
    classes = enumerate_classes(kind, q)
    n = 1
    current = {c: sigma_double(c) for c in classes}
    while any(current[c] != c for c in classes):
        current = {c: sigma_double(current[c]) for c in classes}
        n += 1
        assert n <= a, "doubling order exceeded a"
    return n


# --- regime-dependent arithmetic on indices ---------------------------------


def kind_ell_divisor(kind: str, q: int, regime: PrimeRegime) -> int:
    """ell-part of the kind's modulus; indices of ell'-elements are its multiples."""
    p, _ = ell_part(kind_modulus(kind, q), regime.ell)
    return p


def kind_lprime_modulus(kind: str, q: int, regime: PrimeRegime) -> int:
    """ell'-part of the kind's modulus; congruences in block rules live here."""
    _, m = ell_part(kind_modulus(kind, q), regime.ell)
    return m


def lpart_divides(cls: IndexClass, regime: PrimeRegime) -> bool:
    return cls.rep % kind_ell_divisor(cls.kind, cls.q, regime) == 0


def is_ell_index(cls: IndexClass, regime: PrimeRegime) -> bool:
    """True when the class indexes an ell-element (trivial ell'-part)."""
    return cls.rep % kind_lprime_modulus(cls.kind, cls.q, regime) == 0


def orbit_matches(
    cls: IndexClass, param: IndexClass, modulus: int, multiplier: int = 1
) -> bool:
    """True iff some orbit member of cls is congruent mod modulus to
    multiplier times some orbit member of param."""
    targets = {multiplier * s % modulus for s in param.orbit}
    return any(x % modulus in targets for x in cls.orbit)


def orbit_trivial(cls: IndexClass, modulus: int) -> bool:
    """True iff the orbit meets 0 mod modulus (equivalently modulus | rep)."""
    return cls.rep % modulus == 0


def congruent_mod(c1: IndexClass, c2: IndexClass, modulus: int) -> bool:
    """Orbit-to-orbit congruence (the 'r = +-s or +-qs mod m' predicate)."""
    return orbit_matches(c1, c2, modulus)


def residues_one_class(values: list[int], m: int) -> bool:
    """True iff all values fall in a single {+-s} class mod m (0 included)."""
    if m == 1:
        return True
    for x, y in itertools.combinations(values, 2):
        if (x - y) % m != 0 and (x + y) % m != 0:
            return False
    return True


def crt_split(i: int, q: int) -> tuple[int, int]:
    """Write i = a*(q+1) + b*(q-1) mod q^2-1 with a mod q-1, b mod q+1.

    q+1 and q-1 are coprime (both odd, differing by 2), so the pair (a, b)
    is unique; a is the q-1 coordinate, b the q+1 coordinate.
    """
    a = i * pow(q + 1, -1, q - 1) % (q - 1)
    b = i * pow(q - 1, -1, q + 1) % (q + 1)
    return a, b
