"""Splitting of rational primes in the cyclotomic p-tower.

For a prime ell != p, the number of primes above ell at finite level n
(the field of p^n-th roots of unity) is

    g_n = phi(p^n) / ord_{p^n}(ell).

Writing f = ord_p(ell) and m = v_p(ell^f - 1), the order mod p^n equals f
for n <= m and grows by a factor p per level afterwards, so g_n increases
up to level m and is constant from there on; the stable value

    g_inf = ((p - 1) / f) * p^(m - 1)

is the number of primes above ell all the way up the tower.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith
from .errors import EqualPrimes, InternalInvariantViolation


@dataclass(frozen=True)
class SplittingData:
    """Splitting of ell in the p-cyclotomic tower.

    residue_order   f = ord_p(ell), the residue degree at level 1
    stable_level    m = v_p(ell^f - 1), the level where splitting stabilizes
    num_primes      g_inf, the stable number of primes above ell
    """

    ell: int
    p: int
    residue_order: int
    stable_level: int
    num_primes: int


def _check_pair(ell: int, p: int) -> None:
    if not arith.is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if not arith.is_prime(p) or p < 5:
        raise ValueError(f"tower prime must be a prime >= 5, got {p}")
    if ell == p:
        raise EqualPrimes(f"splitting needs ell != p, both were {p}")


def splitting_finite(ell: int, p: int, level: int) -> int:
    """Number of primes above ell at finite level: phi(p^level)/ord_{p^level}(ell)."""
    _check_pair(ell, p)
    if not isinstance(level, int) or isinstance(level, bool) or level < 1:
        raise ValueError(f"level must be a positive integer, got {level}")
    modulus = p**level
    return (p - 1) * p ** (level - 1) // arith.multiplicative_order(ell, modulus)


def splitting_infinite(ell: int, p: int) -> SplittingData:
    """Stable splitting data of ell in the p-cyclotomic tower.

    The result is cross-checked against splitting_finite at the stabilizing
    level and the next one; disagreement raises InternalInvariantViolation.
    """
    _check_pair(ell, p)
    f = arith.multiplicative_order(ell, p)
    m = arith.padic_valuation(ell**f - 1, p)
    g = ((p - 1) // f) * p ** (m - 1)
    for level in (m, m + 1):
        if splitting_finite(ell, p, level) != g:
            raise InternalInvariantViolation(
                f"splitting of {ell} in the {p}-tower not stable at level {level}"
            )
    return SplittingData(ell=ell, p=p, residue_order=f, stable_level=m, num_primes=g)
