"""Radical subgroup catalog with exact orders; centralizer-order computation.

Structural descriptors are orders plus tagged shape expressions; there is no
group element arithmetic anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import (
    SP4,
    SP6,
    GroupSpec,
    PrimeRegime,
    ell_part,
    gl_order,
    group_order,
    gu_order,
    sp_order,
)
from .dataio import ShapeSpec
from .errors import MalformedShape, RadicalNotInRegime

# radical tags
Q1, Q2, Q3 = "q1", "q2", "q3"
Q11, Q21, Q111 = "q11", "q21", "q111"
P, R = "p", "r"
QC3, QC2 = "q3c", "q2c"  # the cyclic groups in GL1(q^3) and GU1(q^2)


@dataclass(frozen=True)
class RadicalClass:
    tag: str
    order: int
    centralizer_order: int
    normalizer_order: int
    is_sylow: bool
    structure: str


def centralizer_order(shape: ShapeSpec, q: int, rank: int | None = None) -> int:
    """Order of Sp_{m0}(q) x prod GU x prod GL via the standard formulas."""
    if rank is not None:
        dim = shape.m0 + sum(m * d for m, d in shape.unitary) + 2 * sum(
            n * k for n, k in shape.linear
        )
        if dim != 2 * rank:
            raise MalformedShape(f"shape {shape.text()} has dimension {dim} != {2 * rank}")
    order = sp_order(shape.m0, q)
    for m, d in shape.unitary:
        if d % 2 != 0:
            raise MalformedShape(f"unitary part needs even d, got {d}")
        order *= gu_order(m, q ** (d // 2))
    for n, k in shape.linear:
        order *= gl_order(n, q**k)
    return order


def sylow_order(g: GroupSpec, regime: PrimeRegime) -> int:
    return ell_part(group_order(g), regime.ell)[0]


def _gl_eps_order(r: int, q: int, eps: int) -> int:
    return gl_order(r, q) if eps == 1 else gu_order(r, q)


def _abelian_radical(tag, g, regime, rs, sylow):
    """Q_{r1,r2,r3}: the ell-part of the product-of-GL^eps centres.

    C_G(Q) = Sp_{2(n-s)}(q) x prod GL_{ri}^eps(q); N_G(Q) adds a C2 on each
    GL factor and the wreath symmetry among equal ri.
    """
    q, eps = g.q, regime.epsilon
    ld = ell_part(q - eps, regime.ell)[0]
    s = sum(rs)
    cent = sp_order(2 * (g.rank - s), q)
    for r in rs:
        cent *= _gl_eps_order(r, q, eps)
    norm = cent * 2 ** len(rs)
    counts: dict[int, int] = {}
    for r in rs:
        counts[r] = counts.get(r, 0) + 1
    for c in counts.values():
        for j in range(2, c + 1):
            norm *= j
    structure = "C%d" % ld + ("^%d" % len(rs) if len(rs) > 1 else "")
    return RadicalClass(tag, ld ** len(rs), cent, norm, sylow, structure)


def radical_catalog(g: GroupSpec, regime: PrimeRegime) -> list[RadicalClass]:
    q = g.q
    ell = regime.ell
    branch = regime.branch
    syl = sylow_order(g, regime)
    out: list[RadicalClass] = []

    if branch in ("e+", "e-"):
        eps = regime.epsilon
        ld = ell_part(q - eps, ell)[0]
        if g.family == SP6:
            out.append(_abelian_radical(Q1, g, regime, (1,), False))
            out.append(_abelian_radical(Q2, g, regime, (2,), False))
            out.append(_abelian_radical(Q3, g, regime, (3,), False))
            out.append(_abelian_radical(Q11, g, regime, (1, 1), False))
            out.append(_abelian_radical(Q21, g, regime, (2, 1), False))
            out.append(_abelian_radical(Q111, g, regime, (1, 1, 1), not regime.is3))
            if regime.is3:
                # cyclic 3^(d+1) inside GL1(q^3); normalizer C_{q^3-eps}:6
                zorder = 3 * ld
                cent = q**3 - eps
                out.append(RadicalClass(QC3, zorder, cent, 6 * cent, False, "C%d" % zorder))
                # P = C_{3^d} wr C_3 is the Sylow subgroup
                csp = (q - eps) * ld**2  # |C| = q-eps; |K| = 2(q-eps)*3^{2d}
                norm = 12 * (q - eps) * ld**2
                assert syl == 3 * ld**3
                out.append(RadicalClass(P, syl, q - eps, norm, True, "C%d wr C3" % ld))
                del csp
                # R = Z.E27, central product over a shared centre of order 3
                rorder = 9 * ld
                norm_r = 48 * regime.m * rorder
                out.append(RadicalClass(R, rorder, q - eps, norm_r, False, "C%d.E27" % ld))
        else:
            out.append(_abelian_radical(Q1, g, regime, (1,), False))
            out.append(_abelian_radical(Q2, g, regime, (2,), False))
            out.append(_abelian_radical(Q11, g, regime, (1, 1), True))
    elif branch in ("c3+", "c3-"):
        assert g.family == SP6
        eps = regime.epsilon
        cent = q**3 - eps
        out.append(RadicalClass(QC3, syl, cent, 6 * cent, True, "C%d" % syl))
    elif branch == "c2":
        cent = (q**2 + 1) * sp_order(2, q) if g.family == SP6 else q**2 + 1
        norm = 4 * cent
        out.append(RadicalClass(QC2, syl, cent, norm, True, "C%d" % syl))
    return out


def radical_by_tag(g: GroupSpec, regime: PrimeRegime, tag: str) -> RadicalClass:
    for rc in radical_catalog(g, regime):
        if rc.tag == tag:
            return rc
    raise RadicalNotInRegime(f"{tag} not present for {g} at {regime}")


def normalizer_order(g: GroupSpec, regime: PrimeRegime, tag: str) -> int:
    return radical_by_tag(g, regime, tag).normalizer_order
