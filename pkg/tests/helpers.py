"""Independent oracles and generators for the test suite.

Everything here is deliberately written from scratch against the definitions
(projective enumeration, trial division, repeated multiplication) so the
library paths it checks are never used to verify themselves.
"""

from __future__ import annotations

import random

from towerbounds.series import DistinguishedPoly, PadicSeries


def brute_count_projective(ainvs, ell: int) -> int:
    """#E(F_ell) by enumerating representatives of the projective plane.

    Points are [x:y:1] for all x, y; [x:1:0] for all x; and [1:0:0]; the
    homogeneous Weierstrass equation is evaluated on each.
    """
    a1, a2, a3, a4, a6 = ainvs

    def F(X, Y, Z):
        return (Y * Y * Z + a1 * X * Y * Z + a3 * Y * Z * Z
                - X**3 - a2 * X * X * Z - a4 * X * Z * Z - a6 * Z**3) % ell

    n = 0
    for x in range(ell):
        for y in range(ell):
            if F(x, y, 1) == 0:
                n += 1
    for x in range(ell):
        if F(x, 1, 0) == 0:
            n += 1
    if F(1, 0, 0) == 0:
        n += 1
    return n


def trial_division_primes(limit: int) -> list[int]:
    """Primes up to limit by bare trial division."""
    out = []
    for n in range(2, limit + 1):
        d = 2
        while d * d <= n:
            if n % d == 0:
                break
            d += 1
        else:
            out.append(n)
    return out


def brute_multiplicative_order(a: int, m: int) -> int:
    """Order of a mod m by repeated multiplication."""
    x = a % m
    k = 1
    while x != 1:
        x = x * a % m
        k += 1
    return k


def random_distinguished(rng: random.Random, p: int, max_degree: int = 3) -> DistinguishedPoly:
    deg = rng.randint(0, max_degree)
    coeffs = tuple(p * rng.randint(0, p) for _ in range(deg)) + (1,)
    return DistinguishedPoly(p=p, coeffs=coeffs)


def random_unit_series(rng: random.Random, p: int, prec: int, length: int) -> PadicSeries:
    pm = p**prec
    units = [u for u in range(1, p)]
    coeffs = [rng.choice(units) + p * rng.randint(0, pm // p - 1 if pm > p else 0)]
    coeffs += [rng.randrange(pm) for _ in range(length - 1)]
    return PadicSeries(p=p, prec=prec, coeffs=tuple(c % pm for c in coeffs))
