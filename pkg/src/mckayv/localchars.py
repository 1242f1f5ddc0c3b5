"""Labeled irreducible characters of the radical-subgroup normalizers.

A local character is identified by its constituent on the centralizer C plus
an extension tag wherever several characters share that constituent (the tag
assignment is fixed lexicographically; any consistent choice works).  Labels
carry exact degrees so the ell-part conditions and sum-of-squares checks can
be tested.

Component tokens used in `base`:
    ("1",)            trivial character of a GL1^eps(q) factor
    ("phi", r)        induced character above phi_r, r a class representative
    ("sl", f, r)      SL2(q) character, f in {1, st, x3, x4}
    ("sp4", t, i, j)  Sp4(q) character, t in {a2, r22, x15, x18, x19}
    ("x8", r)         the GL3^eps character pair above chi8(r)
    ("oneC",), ("phiZ", r), ("phiC", r)   normalizer of the GL1(q^3) radical
    ("oneJ",), ("thJ", i, j)              normalizer of the wreath Sylow P
    ("oneR",), ("phiR", r)                defect-zero characters over R
    ("oneT",), ("th2", r)                 normalizer of the GU1(q^2) radical
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import indexing, radicals
from .arith import GroupSpec, PrimeRegime, ell_part
from .errors import RadicalNotInRegime

DZ = "dz"
IRR0 = "irr0"
LPRIME = "lprime"

SIGNS = ("+", "-")
S3_EXT = ("t", "s", "r")  # trivial, sign, reflection (degree 2)
PAIR11_EXT = ("pp+", "pp-", "mm+", "mm-", "pm")  # the five characters of C2 wr S2


@dataclass(frozen=True)
class LocalChar:
    radical: str
    base: tuple
    ext: str | None
    deg: int

    def __repr__(self):
        e = f"^{self.ext}" if self.ext else ""
        return f"N[{self.radical}]{self.base}{e}"

    def __lt__(self, other):
        return (self.radical, self.base, self.ext or "") < (
            other.radical,
            other.base,
            other.ext or "",
        )


# --- small helpers ------------------------------------------------------------


def phi_kind(regime: PrimeRegime) -> str:
    """Index kind of the C_{q-eps} factors carrying the radical."""
    return "a" if regime.epsilon == 1 else "b"


def sl_family(regime: PrimeRegime) -> tuple[str, str]:
    """The SL2(q) family of degree q-eps and its index kind."""
    return ("x4", "b") if regime.epsilon == 1 else ("x3", "a")


def sl_dim(comp: tuple, q: int) -> int:
    f = comp[1]
    return {"1": 1, "st": q, "x3": q + 1, "x4": q - 1}[f]


def sp4_dim(comp: tuple, q: int) -> int:
    t = comp[1]
    return {
        "a2": q * (q - 1) ** 2 // 2,
        "r22": q * (q + 1) ** 2 // 2,
        "x15": (q + 1) ** 2 * (q**2 + 1),
        "x18": (q**2 - 1) ** 2,
        "x19": (q - 1) ** 2 * (q**2 + 1),
    }[t]


def gl1_dim(comp: tuple) -> int:
    return 2 if comp[0] == "phi" else 1


def _gl1_sort_key(comp: tuple):
    # phi components first (by representative), trivial parts last
    return (0, comp[1]) if comp[0] == "phi" else (1,)


def _phis(regime: PrimeRegime, q: int, dz_only: bool):
    kind = phi_kind(regime)
    ld = indexing.kind_ell_divisor(kind, q, regime)
    for c in indexing.enumerate_classes(kind, q):
        if dz_only and c.rep % ld != 0:
            continue
        yield ("phi", c.rep)


def _sl_all(regime: PrimeRegime, q: int):
    fam, kind = sl_family(regime)
    return [("sl", fam, c.rep) for c in indexing.enumerate_classes(kind, q)]


def _sp2_all(q: int):
    out = [("sl", "1", 0), ("sl", "st", 0)]
    out += [("sl", "x3", c.rep) for c in indexing.enumerate_classes("a", q)]
    out += [("sl", "x4", c.rep) for c in indexing.enumerate_classes("b", q)]
    return out


def _sp4_constituents(regime: PrimeRegime, q: int):
    """Sp4(q) characters whose degree carries the full (q-eps)^2 ell-part."""
    if regime.epsilon == 1:
        out = [("sp4", "a2", 0, 0)]
        out += [("sp4", "x18", c.rep, 0) for c in indexing.enumerate_classes("d", q)]
        out += [("sp4", "x19", i.rep, j.rep) for i, j in indexing.starred_tuples("b", q, 2)]
    else:
        out = [("sp4", "r22", 0, 0)]
        out += [("sp4", "x15", i.rep, j.rep) for i, j in indexing.starred_tuples("a", q, 2)]
        out += [("sp4", "x18", c.rep, 0) for c in indexing.enumerate_classes("d", q)]
    return out


# --- per-radical enumerations --------------------------------------------------


def _enum_q1_sp6(g, regime, kind):
    q = g.q
    out = []
    for psi in _sp4_constituents(regime, q):
        d = sp4_dim(psi, q)
        for s in SIGNS:
            out.append(LocalChar("q1", (("1",), psi), s, d))
        for ph in _phis(regime, q, kind == DZ):
            out.append(LocalChar("q1", (ph, psi), None, 2 * d))
    return out


def _enum_q2_sp6(g, regime, kind):
    q = g.q
    out = []
    sls = _sl_all(regime, q)
    for sj, sk in itertools.product(sls, sls):
        d = sl_dim(sj, q) * sl_dim(sk, q)
        for s in SIGNS:
            out.append(LocalChar("q2", (("1",), sj, sk), s, d))
        for ph in _phis(regime, q, kind == DZ):
            out.append(LocalChar("q2", (ph, sj, sk), None, 2 * d))
    return out


def _enum_q3_sp6(g, regime, kind):
    if regime.is3:
        return []  # no characters of the right ell-part exist
    q, eps = g.q, regime.epsilon
    ekind = "e" if eps == 1 else "f"
    ld = indexing.kind_ell_divisor(ekind, q, regime)
    deg = 2 * (q - eps) ** 2 * (q + eps)
    out = []
    for c in indexing.enumerate_classes(ekind, q):
        if kind == DZ and c.rep % ld != 0:
            continue
        out.append(LocalChar("q3", (("x8", c.rep),), None, deg))
    return out


def _pair_labels(radical, pair_exts, glparts, tail, q, tail_dim):
    """Characters of (GL1:2 wr S2) x tail over a sorted pair of constituents."""
    out = []
    phis = [p for p in glparts if p[0] == "phi"]
    for p1, p2 in itertools.combinations(phis, 2):
        base = (p1, p2) + tail
        out.append(LocalChar(radical, base, None, 8 * tail_dim))
    for p in phis:
        out.append(LocalChar(radical, (p, p) + tail, "+", 4 * tail_dim))
        out.append(LocalChar(radical, (p, p) + tail, "-", 4 * tail_dim))
        out.append(LocalChar(radical, (p, ("1",)) + tail, "+", 4 * tail_dim))
        out.append(LocalChar(radical, (p, ("1",)) + tail, "-", 4 * tail_dim))
    for tag in pair_exts:
        d = 2 if tag == "pm" else 1
        out.append(LocalChar(radical, (("1",), ("1",)) + tail, tag, d * tail_dim))
    return out


def _enum_q11_sp6(g, regime, kind):
    q = g.q
    out = []
    glparts = list(_phis(regime, q, kind == DZ))
    for sj in _sl_all(regime, q):
        out += _pair_labels("q11", PAIR11_EXT, glparts, (sj,), q, sl_dim(sj, q))
    return out


def _enum_q21_sp6(g, regime, kind):
    q = g.q
    out = []
    phis = list(_phis(regime, q, kind == DZ))
    for sj in _sl_all(regime, q):
        d = sl_dim(sj, q)
        for s1, s2 in itertools.product(SIGNS, SIGNS):
            out.append(LocalChar("q21", (("1",), sj, ("1",)), s1 + s2, d))
        for ph in phis:
            for s in SIGNS:
                out.append(LocalChar("q21", (("1",), sj, ph), s, 2 * d))
                out.append(LocalChar("q21", (ph, sj, ("1",)), s, 2 * d))
        for p1, p2 in itertools.product(phis, phis):
            out.append(LocalChar("q21", (p1, sj, p2), None, 4 * d))
    return out


_Q111_TRIV_EXT = ("ppp.t", "ppp.s", "ppp.r", "mmm.t", "mmm.s", "mmm.r",
                  "ppm.1", "ppm.2", "mmp.1", "mmp.2")


def _enum_q111_sp6(g, regime, kind):
    q = g.q
    out = []
    one = ("1",)
    phis = list(_phis(regime, q, kind == DZ))
    l3 = regime.is3 and kind in (DZ, IRR0)
    # constituent (1,1,1): ten characters; for ell = 3 only the four whose
    # L-constituent mixes the two extensions of the trivial character survive
    for tag in _Q111_TRIV_EXT:
        if l3 and tag[:3] in ("ppp", "mmm"):
            continue
        d = 2 if tag == "ppp.r" or tag == "mmm.r" else (3 if tag[3] == "." and tag[:3] in ("ppm", "mmp") else 1)
        out.append(LocalChar("q111", (one, one, one), tag, d))
    for p in phis:
        if not l3:
            for tag in S3_EXT:
                out.append(LocalChar("q111", (p, p, p), tag, 16 if tag == "r" else 8))
        for tag in ("pp1", "pp2", "mm1", "mm2"):
            out.append(LocalChar("q111", (p, one, one), tag, 6))
        out.append(LocalChar("q111", (p, one, one), "pm", 12))
        for tag in ("p1", "p2", "m1", "m2"):
            out.append(LocalChar("q111", (p, p, one), tag, 12))
    for p1, p2 in itertools.permutations(phis, 2):
        base = tuple(sorted((p1, p1, p2), key=_gl1_sort_key))
        if l3 and indexing.residues_one_class([p1[1], p2[1]], regime.m):
            continue
        out.append(LocalChar("q111", base, "1" if p1 < p2 else "2", 24))
    for p1, p2 in itertools.combinations(phis, 2):
        if l3 and indexing.residues_one_class([p1[1], p2[1], 0], regime.m):
            continue
        for tag in ("p", "m"):
            out.append(LocalChar("q111", (p1, p2, one), tag, 24))
    for p1, p2, p3 in itertools.combinations(phis, 3):
        if l3 and indexing.residues_one_class([p1[1], p2[1], p3[1]], regime.m):
            continue
        out.append(LocalChar("q111", (p1, p2, p3), None, 48))
    return out


def _enum_p_sp6(g, regime, kind):
    q = g.q
    ld = 3**regime.d
    m = regime.m
    out = []
    dz_one = ("+t", "+s", "-t", "-s")
    for s in SIGNS:
        for t in S3_EXT:
            tag = s + t
            if kind == DZ and tag not in dz_one:
                continue
            out.append(LocalChar("p", (("oneJ",),), tag, 2 if t == "r" else 1))
    seen = set()
    for i in range(ld):
        for j in range(m):
            if (i, j) == (0, 0):
                continue
            key = min((i, j), ((-i) % ld, (-j) % m))
            if key in seen:
                continue
            seen.add(key)
            if kind == DZ and key[0] != 0:
                continue
            exts = ("t", "s") if kind == DZ else S3_EXT
            for t in exts:
                out.append(LocalChar("p", (("thJ",) + key,), t, 4 if t == "r" else 2))
    return out


def _enum_r_sp6(g, regime, kind):
    if kind != DZ:
        return []  # R is never a defect group; only dz(N/R) is used
    m = regime.m
    out = [LocalChar("r", (("oneR",),), s, 3) for s in SIGNS]
    for j in range(1, m):
        if j > (m - j):
            continue
        out.append(LocalChar("r", (("phiR", min(j, m - j)),), None, 6))
    return out


def _enum_q3c_sp6(g, regime, kind):
    q, eps = g.q, regime.epsilon
    ekind = "e" if eps == 1 else "f"
    out = []
    if regime.is3:
        n = (q**2 + eps * q + 1) // 3
        ld = indexing.kind_ell_divisor(ekind, q, regime)  # 3^(d+1)
        for c in indexing.enumerate_classes(ekind, q):
            if kind == DZ:
                if c.rep % ld == 0:
                    out.append(LocalChar("q3c", (("phiC", c.rep),), None, 6))
            elif c.rep % n != 0:
                out.append(LocalChar("q3c", (("phiC", c.rep),), None, 6))
        return out
    # ell != 3: the Sylow subgroup is cyclic and every character counts
    for i in range(6):
        out.append(LocalChar("q3c", (("oneC",),), str(i), 1))
    pk = phi_kind(regime)
    for c in indexing.enumerate_classes(pk, q):
        for t in ("0", "1", "2"):
            out.append(LocalChar("q3c", (("phiZ", c.rep),), t, 2))
    ld = indexing.kind_ell_divisor(ekind, q, regime)
    for c in indexing.enumerate_classes(ekind, q):
        if kind == DZ and c.rep % ld != 0:
            continue
        out.append(LocalChar("q3c", (("phiC", c.rep),), None, 6))
    return out


def _enum_q2c_sp6(g, regime, kind):
    q = g.q
    ld = indexing.kind_ell_divisor("d", q, regime)
    out = []
    for theta in _sp2_all(q):
        d = sl_dim(theta, q)
        for s1, s2 in itertools.product(SIGNS, SIGNS):
            out.append(LocalChar("q2c", (("oneT",), theta), s1 + s2, d))
        for c in indexing.enumerate_classes("d", q):
            if kind == DZ and c.rep % ld != 0:
                continue
            out.append(LocalChar("q2c", (("th2", c.rep), theta), None, 4 * d))
    return out


def _enum_q1_sp4(g, regime, kind):
    q = g.q
    out = []
    for sj in _sl_all(regime, q):
        d = sl_dim(sj, q)
        for s in SIGNS:
            out.append(LocalChar("q1", (("1",), sj), s, d))
        for ph in _phis(regime, q, kind == DZ):
            out.append(LocalChar("q1", (ph, sj), None, 2 * d))
    return out


def _enum_q2_sp4(g, regime, kind):
    q = g.q
    out = []
    for sj in _sl_all(regime, q):
        d = sl_dim(sj, q)
        for s in SIGNS:
            out.append(LocalChar("q2", (("1",), sj), s, d))
        for ph in _phis(regime, q, kind == DZ):
            out.append(LocalChar("q2", (ph, sj), None, 2 * d))
    return out


def _enum_q11_sp4(g, regime, kind):
    glparts = list(_phis(regime, g.q, kind == DZ))
    return _pair_labels("q11", PAIR11_EXT, glparts, (), g.q, 1)


def _enum_q2c_sp4(g, regime, kind):
    q = g.q
    ld = indexing.kind_ell_divisor("d", q, regime)
    out = []
    for s1, s2 in itertools.product(SIGNS, SIGNS):
        out.append(LocalChar("q2c", (("oneT",),), s1 + s2, 1))
    for c in indexing.enumerate_classes("d", q):
        if kind == DZ and c.rep % ld != 0:
            continue
        out.append(LocalChar("q2c", (("th2", c.rep),), None, 4))
    return out


_ENUM = {
    ("sp6", "q1"): _enum_q1_sp6,
    ("sp6", "q2"): _enum_q2_sp6,
    ("sp6", "q3"): _enum_q3_sp6,
    ("sp6", "q11"): _enum_q11_sp6,
    ("sp6", "q21"): _enum_q21_sp6,
    ("sp6", "q111"): _enum_q111_sp6,
    ("sp6", "p"): _enum_p_sp6,
    ("sp6", "r"): _enum_r_sp6,
    ("sp6", "q3c"): _enum_q3c_sp6,
    ("sp6", "q2c"): _enum_q2c_sp6,
    ("sp4", "q1"): _enum_q1_sp4,
    ("sp4", "q2"): _enum_q2_sp4,
    ("sp4", "q11"): _enum_q11_sp4,
    ("sp4", "q2c"): _enum_q2c_sp4,
}

_SYLOW = {
    ("e+", False): {"sp6": "q111", "sp4": "q11"},
    ("e-", False): {"sp6": "q111", "sp4": "q11"},
    ("e+", True): {"sp6": "p", "sp4": "q11"},
    ("e-", True): {"sp6": "p", "sp4": "q11"},
    ("c3+", False): {"sp6": "q3c"},
    ("c3-", False): {"sp6": "q3c"},
    ("c2", False): {"sp6": "q2c", "sp4": "q2c"},
}

_cache: dict = {}


def sylow_radical(g: GroupSpec, regime: PrimeRegime) -> str:
    try:
        return _SYLOW[(regime.branch, regime.is3)][g.family]
    except KeyError:
        raise RadicalNotInRegime(f"no Sylow radical for {g} at {regime}")


def enumerate_local(g: GroupSpec, regime: PrimeRegime, radical: str, kind: str) -> tuple:
    """The label set dz(N/Q), irr0(N|Q), or Irr_{ell'}(N) for the radical."""
    radicals.radical_by_tag(g, regime, radical)  # raises if absent
    if kind == LPRIME:
        if sylow_radical(g, regime) != radical:
            raise RadicalNotInRegime(f"{radical} is not the Sylow radical")
        kind = IRR0
    key = (g.family, g.q, regime.ell, radical, kind)
    if key not in _cache:
        fn = _ENUM[(g.family, radical)]
        labels = tuple(sorted(fn(g, regime, kind)))
        assert len(set(labels)) == len(labels), f"duplicate labels for {key}"
        _cache[key] = labels
    return _cache[key]


def labels_above(g, regime, radical: str, kind: str, base: tuple) -> frozenset:
    """All labels of the given kind with the given constituent."""
    return frozenset(c for c in enumerate_local(g, regime, radical, kind) if c.base == base)


# --- field and graph actions ----------------------------------------------------


def _double_component(comp: tuple, g: GroupSpec, regime: PrimeRegime):
    q = g.q
    tag = comp[0]
    if tag in ("1", "oneC", "oneJ", "oneR", "oneT"):
        return comp
    if tag == "phi":
        return ("phi", indexing.canonicalize(phi_kind(regime), q, 2 * comp[1]).rep)
    if tag == "sl":
        if comp[1] in ("1", "st"):
            return comp
        kind = "a" if comp[1] == "x3" else "b"
        return ("sl", comp[1], indexing.canonicalize(kind, q, 2 * comp[2]).rep)
    if tag == "sp4":
        t = comp[1]
        if t in ("a2", "r22"):
            return comp
        if t == "x18":
            return ("sp4", t, indexing.canonicalize("d", q, 2 * comp[2]).rep, 0)
        kind = "a" if t == "x15" else "b"
        i = indexing.canonicalize(kind, q, 2 * comp[2]).rep
        j = indexing.canonicalize(kind, q, 2 * comp[3]).rep
        return ("sp4", t, min(i, j), max(i, j))
    if tag == "x8":
        kind = "e" if regime.epsilon == 1 else "f"
        return ("x8", indexing.canonicalize(kind, q, 2 * comp[1]).rep)
    if tag == "phiZ":
        return ("phiZ", indexing.canonicalize(phi_kind(regime), q, 2 * comp[1]).rep)
    if tag == "phiC":
        kind = "e" if regime.epsilon == 1 else "f"
        return ("phiC", indexing.canonicalize(kind, q, 2 * comp[1]).rep)
    if tag == "thJ":
        ld, m = 3**regime.d, regime.m
        i, j = 2 * comp[1] % ld, 2 * comp[2] % m
        return ("thJ",) + min((i, j), ((-i) % ld, (-j) % m))
    if tag == "phiR":
        m = regime.m
        j = 2 * comp[1] % m
        return ("phiR", min(j, m - j))
    if tag == "th2":
        return ("th2", indexing.canonicalize("d", q, 2 * comp[1]).rep)
    raise ValueError(comp)


_SORTED_BASES = {("sp6", "q111"): True}


def sigma_local(g: GroupSpec, regime: PrimeRegime, label: LocalChar) -> LocalChar:
    """Index doubling on every constituent; extension tags are fixed."""
    comps = [_double_component(c, g, regime) for c in label.base]
    if label.radical == "q111" or (label.radical == "q11" and g.family == "sp4"):
        comps.sort(key=_gl1_sort_key)
    elif label.radical == "q11":
        head = sorted(comps[:2], key=_gl1_sort_key)
        comps = head + comps[2:]
    return LocalChar(label.radical, tuple(comps), label.ext, label.deg)


_GAMMA_PAIR11 = {"pp+": "pp+", "mm-": "mm-", "pm": "pm", "pp-": "mm+", "mm+": "pp-"}


def gamma_local_sp4(g: GroupSpec, regime: PrimeRegime, label: LocalChar) -> LocalChar:
    """Graph-automorphism action on Sp4 local characters; swaps q1 and q2."""
    q = g.q
    pk = phi_kind(regime)

    def dbl(comp):
        return _double_component(comp, g, regime)

    if label.radical == "q1":
        return LocalChar("q2", tuple(dbl(c) for c in label.base), label.ext, label.deg)
    if label.radical == "q2":
        return LocalChar("q1", label.base, label.ext, label.deg)
    if label.radical == "q11":
        c1, c2 = label.base
        if c1[0] == "phi" and c2[0] == "phi":
            i, j = c1[1], c2[1]
            if i == j:
                # (phi_i x phi_i)^(nu) -> (phi_2i x 1)^(nu)
                p = ("phi", indexing.canonicalize(pk, q, 2 * i).rep)
                return LocalChar("q11", (p, ("1",)), label.ext, label.deg)
            a = indexing.canonicalize(pk, q, i + j).rep
            b = indexing.canonicalize(pk, q, i - j).rep
            base = tuple(sorted([("phi", a), ("phi", b)], key=_gl1_sort_key))
            return LocalChar("q11", base, None, label.deg)
        if c1[0] == "phi":
            # (phi_i x 1)^(nu) -> (phi_i x phi_i)^(nu)
            return LocalChar("q11", (c1, c1), label.ext, label.deg)
        return LocalChar("q11", label.base, _GAMMA_PAIR11[label.ext], label.deg)
    if label.radical == "q2c":
        comp = label.base[0]
        if comp[0] == "th2":
            r = indexing.canonicalize("d", q, (q + 1) * comp[1]).rep
            return LocalChar("q2c", (("th2", r),), label.ext, label.deg)
        return label
    raise ValueError(label.radical)


# --- independent wreath-product counting oracle ---------------------------------


def wreath_s3_irr_count(point_dims: list[int]) -> tuple[int, int]:
    """Number of irreducibles of D wr S3 and their degree mass, from Irr(D).

    Counts S3-orbits on Irr(D)^3 with |Irr(stab)| extensions each; degrees by
    orbit size times the stabilizer character degree.  Used as a cross-check
    against the explicit label enumeration at the wreath Sylow normalizer.
    """
    n = len(point_dims)
    count = 0
    mass = 0
    for x, y, z in itertools.combinations_with_replacement(range(n), 3):
        dl = point_dims[x] * point_dims[y] * point_dims[z]
        if x == y == z:
            count += 3
            mass += dl**2 + dl**2 + (2 * dl) ** 2
        elif x == y or y == z or x == z:
            count += 2
            mass += 2 * (3 * dl) ** 2
        else:
            count += 1
            mass += (6 * dl) ** 2
    return count, mass
