"""p-adic power series with explicit precision, and Weierstrass preparation.

A PadicSeries carries two precision knobs that every operation respects:

* ``prec`` (call it M): coefficients are residues mod p^M, stored in [0, p^M);
* its length N: only the coefficients of 1, T, ..., T^(N-1) are declared.

No operation reads beyond the declared precision, and preparation raises a
named error instead of extrapolating when the data cannot decide the answer.

Weierstrass preparation: any nonzero f in Z_p[[T]] factors as

    f = p^mu * u(T) * P(T)

with u a unit power series and P a *distinguished* polynomial (monic, all
lower coefficients divisible by p); mu and lambda = deg P are the invariants
extracted here.  On residue data the recipe is: mu is the least coefficient
valuation, lambda the first index attaining it (the unit pivot).

Convention note: the lambda of a module built from p-power multiplicities
``mu_list`` and distinguished factors is the total degree of the factors,
independent of the multiplicities — i.e. lambda sums over the distinguished
polynomials only, never over the p-power part.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import arith
from .errors import (
    InsufficientCoeffPrecision,
    InsufficientLength,
    LengthTooShort,
    PrimeMismatch,
)


def _check_p(p: int) -> None:
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class PadicSeries:
    """A power series over Z_p known mod (p^prec, T^len(coeffs))."""

    p: int
    prec: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_p(self.p)
        if not isinstance(self.prec, int) or self.prec < 1:
            raise ValueError(f"coefficient precision must be >= 1, got {self.prec}")
        if len(self.coeffs) < 1:
            raise ValueError("a series needs at least one declared coefficient")
        pm = self.p**self.prec
        for i, c in enumerate(self.coeffs):
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < pm:
                raise ValueError(
                    f"coefficient {i} = {c!r} is not a residue in [0, {self.p}^{self.prec})"
                )

    @property
    def length(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class DistinguishedPoly:
    """Monic polynomial over Z_p whose lower coefficients are all divisible by p.

    ``coeffs`` is ascending, so coeffs[-1] == 1 and len(coeffs) = degree + 1.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_p(self.p)
        if len(self.coeffs) < 1:
            raise ValueError("empty coefficient list")
        if self.coeffs[-1] != 1:
            raise ValueError(f"not monic: leading coefficient {self.coeffs[-1]}")
        for i, c in enumerate(self.coeffs[:-1]):
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficient {i} = {c!r} is not an integer")
            if c % self.p:
                raise ValueError(
                    f"coefficient {i} = {c} of a distinguished polynomial "
                    f"must be divisible by {self.p}"
                )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class IwasawaInvariants:
    """The pair (mu, lambda).  ``lam`` is lambda; both are >= 0."""

    mu: int
    lam: int

    def __post_init__(self):
        if self.mu < 0 or self.lam < 0:
            raise ValueError(f"invariants must be >= 0, got {self}")


@dataclass(frozen=True)
class CharacteristicElement:
    """p^mu times a product of distinguished polynomials; lam is their total degree."""

    p: int
    mu: int
    factors: tuple[DistinguishedPoly, ...]
    lam: int = field(init=False)

    def __post_init__(self):
        _check_p(self.p)
        if self.mu < 0:
            raise ValueError(f"mu must be >= 0, got {self.mu}")
        for f in self.factors:
            if f.p != self.p:
                raise PrimeMismatch(f"factor over p={f.p} in element over p={self.p}")
        object.__setattr__(self, "lam", sum(f.degree for f in self.factors))

    @property
    def invariants(self) -> IwasawaInvariants:
        return IwasawaInvariants(mu=self.mu, lam=self.lam)


def char_element(p: int, mu_list: list[int] | tuple[int, ...],
                 factors: list[DistinguishedPoly] | tuple[DistinguishedPoly, ...],
                 ) -> CharacteristicElement:
    """Assemble a characteristic element from p-power multiplicities and
    distinguished factors.  mu = sum(mu_list), lambda = sum of degrees."""
    for m in mu_list:
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"p-power multiplicities must be positive integers, got {m!r}")
    return CharacteristicElement(p=p, mu=sum(mu_list), factors=tuple(factors))


def series_multiply(f: PadicSeries, g: PadicSeries) -> PadicSeries:
    """Cauchy product truncated to the shorter length, at the coarser precision."""
    if f.p != g.p:
        raise PrimeMismatch(f"cannot multiply series over p={f.p} and p={g.p}")
    prec = min(f.prec, g.prec)
    n = min(f.length, g.length)
    pm = f.p**prec
    out = [0] * n
    for i in range(n):
        ci = f.coeffs[i] % pm
        if ci == 0:
            continue
        for j in range(n - i):
            out[i + j] = (out[i + j] + ci * g.coeffs[j]) % pm
    return PadicSeries(p=f.p, prec=prec, coeffs=tuple(out))


def weierstrass_prepare(f: PadicSeries) -> tuple[IwasawaInvariants, bool]:
    """Extract (mu, lambda) from a series by Weierstrass preparation.

    mu is the least coefficient valuation, lambda the first index attaining
    it.  Returns (invariants, unit_checked); unit_checked reports that mu was
    determined strictly below the declared precision and the pivot's unit
    part is a unit mod p.

    Raises InsufficientCoeffPrecision when every declared coefficient is
    0 mod p^prec (mu >= prec, undetermined), and InsufficientLength when no
    trustworthy unit pivot exists before the declared length.
    """
    vals = [f.prec if c == 0 else arith.padic_valuation(c, f.p) for c in f.coeffs]
    mu = min(vals)
    if mu >= f.prec:
        raise InsufficientCoeffPrecision(
            f"all {f.length} coefficients vanish mod {f.p}^{f.prec}"
        )
    pivot = vals.index(mu)
    unit = (f.coeffs[pivot] // f.p**mu) % f.p
    if unit == 0:
        # Unreachable for residues in [0, p^prec): a nonzero residue of
        # valuation mu < prec always has a unit cofactor.  Kept so the case
        # analysis is total.
        raise InsufficientLength(
            f"no unit pivot before index {f.length}; lambda undetermined"
        )  # pragma: no cover
    return IwasawaInvariants(mu=mu, lam=pivot), True


def expand_char_element(ce: CharacteristicElement, prec: int, length: int) -> PadicSeries:
    """Multiply out a characteristic element into a PadicSeries of the given
    precision.

    Needs length > ce.lam so the distinguished part fits (LengthTooShort
    otherwise); then weierstrass_prepare recovers (mu, lambda) exactly
    whenever prec > ce.mu.
    """
    if not isinstance(length, int) or length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if not isinstance(prec, int) or prec < 1:
        raise ValueError(f"precision must be >= 1, got {prec}")
    if length <= ce.lam:
        raise LengthTooShort(
            f"length {length} cannot hold a distinguished part of degree {ce.lam}"
        )
    poly = [1]
    for fac in ce.factors:
        acc = [0] * (len(poly) + fac.degree)
        for i, a in enumerate(poly):
            if a == 0:
                continue
            for j, b in enumerate(fac.coeffs):
                acc[i + j] += a * b
        poly = acc
    pm = ce.p**prec
    scale = ce.p**ce.mu
    coeffs = [(scale * c) % pm for c in poly]
    coeffs += [0] * (length - len(coeffs))
    return PadicSeries(p=ce.p, prec=prec, coeffs=tuple(coeffs[:length]))


def series_to_text(f: PadicSeries) -> str:
    """Render as ``p M N : c0 c1 ... c_{N-1}`` (decimal residues)."""
    head = f"{f.p} {f.prec} {f.length}"
    return head + " : " + " ".join(str(c) for c in f.coeffs)


def series_from_text(text: str) -> PadicSeries:
    """Parse the ``p M N : c0 c1 ...`` form; strict about counts and ranges."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"missing ':' in series text {text!r}")
    parts = head.split()
    if len(parts) != 3:
        raise ValueError(f"series header must be 'p M N', got {head.strip()!r}")
    try:
        p, prec, n = (int(t) for t in parts)
        coeffs = tuple(int(t) for t in tail.split())
    except ValueError as e:
        raise ValueError(f"non-integer token in series text: {e}") from None
    if len(coeffs) != n:
        raise ValueError(f"header declares {n} coefficients, found {len(coeffs)}")
    return PadicSeries(p=p, prec=prec, coeffs=coeffs)
