"""Exact integer and modular arithmetic primitives.

Everything works on arbitrary-precision Python integers; nothing here ever
goes through floating point.  All functions are pure, so they are safe to
call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import LimitTooLarge, NotCoprime, ZeroInput

# Deterministic Miller-Rabin witness set, certified for all n below this
# bound (Sorenson & Webster).  Desk-scale inputs stay far under it.
MR_CERTIFIED_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

#: default sieve memory budget (bytes of sieve array, one per integer)
SIEVE_BUDGET = 10**8


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n`` < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= MR_CERTIFIED_BOUND:
        raise ValueError(
            f"primality only certified below {MR_CERTIFIED_BOUND}; got {n}"
        )
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeRange:
    """All primes up to ``limit``, inclusive, in increasing order."""

    limit: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)


def sieve_primes(limit: int, budget: int = SIEVE_BUDGET) -> PrimeRange:
    """Eratosthenes sieve of [2, limit].

    Raises LimitTooLarge when ``limit`` exceeds ``budget`` (default 10^8),
    which caps the sieve array at about 100 MB.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit > budget:
        raise LimitTooLarge(f"sieve limit {limit} exceeds budget {budget}")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return PrimeRange(limit, tuple(i for i in range(limit + 1) if flags[i]))


def padic_valuation(n: int, p: int) -> int:
    """Largest v with p^v | n.  Undefined (ZeroInput) for n = 0."""
    if n == 0:
        raise ZeroInput("valuation of 0 is undefined")
    if p < 2 or not is_prime(p):
        raise ValueError(f"valuation base must be prime, got {p}")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre_symbol(a: int, ell: int) -> int:
    """Legendre symbol (a/ell) in {-1, 0, 1} for an odd prime ell, by Euler's
    criterion."""
    if ell == 2 or not is_prime(ell):
        raise ValueError(f"Legendre symbol needs an odd prime, got {ell}")
    a %= ell
    if a == 0:
        return 0
    r = pow(a, (ell - 1) // 2, ell)
    return 1 if r == 1 else -1


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite, odd, non-prime-power n (Brent's cycle
    finding).  Deterministic: increments are tried in a fixed order."""
    for c in range(1, n):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.  n must be nonzero."""
    if n == 0:
        raise ZeroInput("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # trial division by 6k+-1 up to a small bound, then rho on what is left
    f = 53
    while f * f <= n and f < 10_000:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


def euler_phi(n: int) -> int:
    """Euler's totient, via factorization."""
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi if n > 1 else 1


def multiplicative_order(a: int, m: int) -> int:
    """Least k >= 1 with a^k = 1 mod m.  Raises NotCoprime when gcd(a,m) > 1."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1")
    order = euler_phi(m)
    for q in factorize(order):
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order
