"""Weierstrass models over Q: invariants, reduction types, point counts.

A curve is given by long Weierstrass coefficients (a1, a2, a3, a4, a6) for

    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6

with the classical derived quantities

    b2 = a1^2 + 4*a2            b4 = 2*a4 + a1*a3
    b6 = a3^2 + 4*a6            b8 = a1^2*a6 + 4*a2*a6 - a1*a3*a4 + a2*a3^2 - a4^2
    c4 = b2^2 - 24*b4           c6 = -b2^3 + 36*b2*b4 - 216*b6
    disc = -b2^2*b8 - 8*b4^3 - 27*b6^2 + 9*b2*b4*b6

satisfying 1728*disc = c4^3 - c6^2 and 4*b8 = b2*b6 - b4^2.

Reduction classification at a prime ell >= 5 assumes the model is minimal at
ell; a sufficient minimality check (v_ell(disc) < 12 or v_ell(c4) < 4) is
enforced.  Classification below 5 needs Tate's algorithm and is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import arith
from .errors import (
    BadReduction,
    EqualPrimes,
    InternalInvariantViolation,
    NonMinimalModel,
    SingularCurve,
    SmallPrime,
)


class ReductionType(Enum):
    GOOD = "good"
    SPLIT_MULTIPLICATIVE = "split_multiplicative"
    NONSPLIT_MULTIPLICATIVE = "nonsplit_multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class WeierstrassCurve:
    """An integral long Weierstrass model with precomputed invariants."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    label: str | None = None

    @property
    def ainvs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def validate(self) -> None:
        """Recompute every derived invariant and check the two identities."""
        other = make_curve(*self.ainvs, label=self.label)
        for f in ("b2", "b4", "b6", "b8", "c4", "c6", "disc"):
            if getattr(self, f) != getattr(other, f):
                raise InternalInvariantViolation(f"stored {f} disagrees")
        if 1728 * self.disc != self.c4**3 - self.c6**2:
            raise InternalInvariantViolation("1728*disc != c4^3 - c6^2")
        if 4 * self.b8 != self.b2 * self.b6 - self.b4**2:
            raise InternalInvariantViolation("4*b8 != b2*b6 - b4^2")


@dataclass(frozen=True)
class PointCount:
    """#E(F_{ell^k}) together with the Frobenius trace ell^k + 1 - count."""

    ell: int
    k: int
    count: int
    trace: int

    def validate(self) -> None:
        if self.count != self.ell**self.k + 1 - self.trace:
            raise InternalInvariantViolation("count/trace mismatch")
        if self.trace**2 > 4 * self.ell**self.k:
            raise InternalInvariantViolation("Hasse bound violated")


def make_curve(a1: int, a2: int, a3: int, a4: int, a6: int,
               label: str | None = None) -> WeierstrassCurve:
    """Build a curve from long Weierstrass coefficients.

    Raises SingularCurve when the discriminant vanishes.
    """
    for v in (a1, a2, a3, a4, a6):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"coefficients must be integers, got {v!r}")
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise SingularCurve(f"discriminant vanishes for a-invariants {(a1, a2, a3, a4, a6)}")
    if 1728 * disc != c4**3 - c6**2 or 4 * b8 != b2 * b6 - b4 * b4:
        raise InternalInvariantViolation("invariant identities failed")  # pragma: no cover
    return WeierstrassCurve(a1, a2, a3, a4, a6, b2, b4, b6, b8, c4, c6, disc, label)


def curve_from_ainvs(ainvs, label: str | None = None) -> WeierstrassCurve:
    """Same as make_curve but from a 5-element sequence."""
    vals = list(ainvs)
    if len(vals) != 5:
        raise ValueError(f"need exactly 5 a-invariants, got {len(vals)}")
    return make_curve(*vals, label=label)


def _check_prime(ell: int) -> None:
    if not arith.is_prime(ell):
        raise ValueError(f"{ell} is not prime")


def is_minimal_at(E: WeierstrassCurve, ell: int) -> bool:
    """Sufficient minimality check at ell: v_ell(disc) < 12 or v_ell(c4) < 4."""
    _check_prime(ell)
    if E.disc % ell:
        return True
    if arith.padic_valuation(E.disc, ell) < 12:
        return True
    return E.c4 != 0 and arith.padic_valuation(E.c4, ell) < 4


def reduction_type(E: WeierstrassCurve, ell: int) -> ReductionType:
    """Classify the reduction of E at a prime ell >= 5.

    Good        <=> ell does not divide disc.
    Multiplicative (ell | disc, ell does not divide c4): split when -c6 is a
    nonzero square mod ell, nonsplit otherwise.
    Additive    <=> ell | disc and ell | c4.
    """
    _check_prime(ell)
    if ell < 5:
        raise SmallPrime(f"reduction classification needs ell >= 5, got {ell}")
    if not is_minimal_at(E, ell):
        raise NonMinimalModel(f"model not checked minimal at {ell}")
    if E.disc % ell:
        return ReductionType.GOOD
    if E.c4 % ell:
        s = arith.legendre_symbol(-E.c6, ell)
        if s == 0:
            # ell | disc and ell does not divide c4 force ell to miss c6
            raise InternalInvariantViolation("c6 = 0 mod ell in multiplicative case")
        return (ReductionType.SPLIT_MULTIPLICATIVE if s == 1
                else ReductionType.NONSPLIT_MULTIPLICATIVE)
    return ReductionType.ADDITIVE


def _count_small(E: WeierstrassCurve, ell: int) -> PointCount:
    # Brute-force count over F_2 / F_3 on the long equation; good reduction
    # is taken as ell not dividing disc (model assumed minimal at ell).
    if E.disc % ell == 0:
        raise BadReduction(f"{E.label or E.ainvs} has bad reduction at {ell}")
    a1, a2, a3, a4, a6 = E.ainvs
    n = 1  # point at infinity
    for x in range(ell):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % ell
        for y in range(ell):
            if (y * y + a1 * x * y + a3 * y - rhs) % ell == 0:
                n += 1
    pc = PointCount(ell, 1, n, ell + 1 - n)
    pc.validate()
    return pc


def count_points(E: WeierstrassCurve, ell: int) -> PointCount:
    """#E(F_ell) for a prime of good reduction.

    For ell >= 5 the count is the character sum ell + 1 + sum_x chi(g(x))
    on the completed-square form y^2 = g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6;
    for ell in {2, 3} a brute-force enumeration is used.
    """
    _check_prime(ell)
    if ell in (2, 3):
        return _count_small(E, ell)
    if reduction_type(E, ell) is not ReductionType.GOOD:
        raise BadReduction(f"{E.label or E.ainvs} has bad reduction at {ell}")
    B2, B4, B6 = E.b2 % ell, (2 * E.b4) % ell, E.b6 % ell
    s = 0
    half = (ell - 1) // 2
    for x in range(ell):
        g = (((4 * x + B2) * x + B4) * x + B6) % ell
        if g:
            s += 1 if pow(g, half, ell) == 1 else -1
    pc = PointCount(ell, 1, ell + 1 + s, -s)
    pc.validate()
    return pc


def count_points_ext(E: WeierstrassCurve, ell: int, k: int) -> PointCount:
    """#E(F_{ell^k}) via the trace recurrence s_0 = 2, s_1 = a_ell,
    s_j = a_ell*s_{j-1} - ell*s_{j-2}; the count is ell^k + 1 - s_k."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"extension degree must be a positive integer, got {k}")
    base = count_points(E, ell)
    if k == 1:
        return base
    a = base.trace
    s_prev, s_cur = 2, a
    for _ in range(k - 1):
        s_prev, s_cur = s_cur, a * s_cur - ell * s_prev
    pc = PointCount(ell, k, ell**k + 1 - s_cur, s_cur)
    pc.validate()
    return pc


def is_good_ordinary(E: WeierstrassCurve, p: int) -> bool:
    """True iff E has good reduction at p and p does not divide the trace a_p."""
    _check_prime(p)
    if p < 5:
        raise SmallPrime(f"good-ordinary test needs p >= 5, got {p}")
    if reduction_type(E, p) is not ReductionType.GOOD:
        return False
    return count_points(E, p).trace % p != 0


def has_p_torsion_over(E: WeierstrassCurve, ell: int, p: int, k: int) -> bool:
    """True iff p divides #E(F_{ell^k}), i.e. the reduction has a point of
    order p over the degree-k extension."""
    _check_prime(p)
    if ell == p:
        raise EqualPrimes(f"torsion test needs ell != p, both were {p}")
    return count_points_ext(E, ell, k).count % p == 0


def bad_primes(E: WeierstrassCurve) -> tuple[int, ...]:
    """Primes dividing the discriminant, in increasing order."""
    return tuple(arith.factorize(E.disc))
