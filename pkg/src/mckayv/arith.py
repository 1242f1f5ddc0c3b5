"""Exact integer arithmetic: group orders, ell-adic valuations, regime classification.

Everything here is plain (arbitrary precision) integer arithmetic; no floats,
no factorization beyond trial division.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenPrime, NonIntegralResult, NotADivisor

SP6 = "sp6"
SP4 = "sp4"

# divisor classes for an odd prime ell dividing |G|; "3" marks the special
# prime, which divides both q-eps and q^2+eps*q+1
CLASS_QM1 = "q-1"
CLASS_QP1 = "q+1"
CLASS_Q2P1 = "q2+1"
CLASS_Q2PQ1 = "q2+q+1"
CLASS_Q2MQ1 = "q2-q+1"
CLASS_THREE = "3"


@dataclass(frozen=True)
class GroupSpec:
    family: str  # SP6 or SP4
    a: int

    def __post_init__(self):
        if self.family not in (SP6, SP4):
            raise ValueError(f"unknown family {self.family!r}")
        if self.a < 1:
            raise ValueError("exponent a must be >= 1")

    @property
    def q(self) -> int:
        return 2**self.a

    @property
    def rank(self) -> int:
        return 3 if self.family == SP6 else 2

    def __str__(self):
        return f"{self.family}(q={self.q})"


@dataclass(frozen=True)
class PrimeRegime:
    ell: int
    divisor_class: str
    epsilon: int | None  # +1, -1, or None (only for the q2+1 class)
    d: int
    m: int

    @property
    def branch(self) -> str:
        """One of e+, e-, c2, c3+, c3- (ell=3 folds into e+/e-)."""
        if self.divisor_class == CLASS_THREE:
            return "e+" if self.epsilon == 1 else "e-"
        return {
            CLASS_QM1: "e+",
            CLASS_QP1: "e-",
            CLASS_Q2P1: "c2",
            CLASS_Q2PQ1: "c3+",
            CLASS_Q2MQ1: "c3-",
        }[self.divisor_class]

    @property
    def is3(self) -> bool:
        return self.ell == 3

    def __str__(self):
        eps = {1: "+", -1: "-", None: "."}[self.epsilon]
        return f"ell={self.ell}[{self.branch}{eps} d={self.d} m={self.m}]"


def ell_val(n: int, ell: int) -> int:
    """ell-adic valuation of n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def ell_part(n: int, ell: int) -> tuple[int, int]:
    """Split n = ell^v * cofactor with ell not dividing cofactor."""
    v = ell_val(n, ell)
    p = ell**v
    return p, n // p


def group_order(g: GroupSpec) -> int:
    q = g.q
    if g.family == SP6:
        return q**9 * (q**2 - 1) * (q**4 - 1) * (q**6 - 1)
    return q**4 * (q**2 - 1) * (q**4 - 1)


def sp_order(n2: int, q: int) -> int:
    """|Sp_{n2}(q)| for even n2 (n2 = 0 gives 1)."""
    n = n2 // 2
    order = q ** (n * n)
    for i in range(1, n + 1):
        order *= q ** (2 * i) - 1
    return order


def gl_order(n: int, q: int) -> int:
    order = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        order *= q**i - 1
    return order


def gu_order(n: int, q: int) -> int:
    order = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        order *= q**i - (-1) ** i
    return order


def classify_regime(g: GroupSpec, ell: int) -> PrimeRegime:
    """Classify an odd prime ell dividing |G| by its cyclotomic divisor class.

    For ell != 3 exactly one of q-1, q+1, q^2+1, q^2+q+1, q^2-q+1 is divisible
    by ell; ell = 3 divides q-eps together with q^2+eps*q+1.  d is the
    valuation of the class polynomial at q (for ell = 3: of q-eps), and m is
    the ell'-part of q-eps (of q^2+1 in the q2+1 class).
    """
    q = g.q
    if ell == 2:
        raise EvenPrime("ell must be odd")
    if group_order(g) % ell != 0:
        raise NotADivisor(f"{ell} does not divide |{g}|")
    if ell == 3:
        eps = 1 if (q - 1) % 3 == 0 else -1
        d = ell_val(q - eps, 3)
        _, m = ell_part(q - eps, 3)
        return PrimeRegime(3, CLASS_THREE, eps, d, m)
    candidates = [
        (CLASS_QM1, q - 1, 1),
        (CLASS_QP1, q + 1, -1),
        (CLASS_Q2P1, q**2 + 1, None),
        (CLASS_Q2PQ1, q**2 + q + 1, 1),
        (CLASS_Q2MQ1, q**2 - q + 1, -1),
    ]
    hits = [(cls, val, eps) for cls, val, eps in candidates if val % ell == 0]
    assert len(hits) == 1, f"ell={ell} q={q}: divisor class not unique: {hits}"
    cls, val, eps = hits[0]
    d = ell_val(val, ell)
    if eps is None:
        _, m = ell_part(q**2 + 1, ell)
    else:
        _, m = ell_part(q - eps, ell)
    if g.family == SP4 and cls in (CLASS_Q2PQ1, CLASS_Q2MQ1):
        # q^4+q^2+1 does not divide |Sp4|; unreachable given the divisor check
        raise NotADivisor(f"{ell} does not divide |{g}|")
    return PrimeRegime(ell, cls, eps, d, m)


def odd_prime_divisors(g: GroupSpec) -> list[int]:
    """Odd primes dividing |G|, via trial division of the cyclotomic values.

    The values are at most q^2+q+1, so this is instant for a <= 16 (the
    practical range of the CLI sweep).
    """
    q = g.q
    vals = [q - 1, q + 1, q**2 + 1]
    if g.family == SP6:
        vals += [q**2 + q + 1, q**2 - q + 1]
    primes: set[int] = set()
    for v in vals:
        n = v
        f = 3
        while f * f <= n:
            if n % f == 0:
                primes.add(f)
                while n % f == 0:
                    n //= f
            f += 2
        if n > 1:
            primes.add(n)
    primes.discard(1)
    primes.discard(2)
    return sorted(primes)


@dataclass(frozen=True)
class DegreePolynomial:
    """Degree polynomial in q with denominator 1 or 2.

    coeffs[k] is the numerator coefficient of q^k; evaluation multiplies out
    the numerator first and divides last, asserting exactness.
    """

    coeffs: tuple[int, ...]
    den: int = 1

    def __post_init__(self):
        if self.den not in (1, 2):
            raise ValueError("denominator must be 1 or 2")

    def eval(self, q: int) -> int:
        num = 0
        for c in reversed(self.coeffs):
            num = num * q + c
        if num % self.den != 0:
            raise NonIntegralResult(f"{self.coeffs}/{self.den} at q={q}")
        val = num // self.den
        if val <= 0:
            raise NonIntegralResult(f"non-positive degree {val} at q={q}")
        return val


def eval_degree(p: DegreePolynomial, q: int) -> int:
    return p.eval(q)
