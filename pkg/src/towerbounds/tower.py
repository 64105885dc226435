"""Uniform pro-p towers over Q and their ramified-prime bookkeeping.

A tower is the compositum picture: a p-adic Lie extension F_infty/Q of
dimension d containing the cyclotomic Z_p-extension, with

    [level n : level 0] = p^(d*n)      over the base field,
    [cyc level n : cyc level 0] = p^((d-1)*n)   over the cyclotomic line.

Supported kinds:

* zpd        -- compositum of d independent Z_p-lines; nothing ramifies away
                from p that matters here.
* falsetate  -- adjoin p-power roots of a fixed prime ell != p (d = 2).
* torsion    -- the field generated by all p-power torsion of the curve
                (d = 4 for a non-CM curve; CM is the caller's responsibility
                to flag, it is not detected).
* generic    -- any dimension with an explicit list of ramified primes.

compute_qsets evaluates, prime by prime, the two counts that drive the
level-n bounds:

    q1 = number of primes of the cyclotomic line, ramified in F_infty, where
         the curve has split multiplicative reduction;
    q2 = same but with good reduction and a p-torsion point over the local
         residue extension.

For the torsion kind the counts are taken over *rational* primes ell != p of
split multiplicative reduction (so each witness carries count 1); for the
other kinds each witness carries the stable number of primes above ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import arith, curve, cyclotomic
from .errors import NotGoodOrdinary, SmallBadPrime

DEFAULT_DIMENSION = {"falsetate": 2, "torsion": 4}


class TowerKind(Enum):
    ZPD_COMPOSITE = "zpd"
    FALSE_TATE = "falsetate"
    TORSION_FIELD = "torsion"
    GENERIC = "generic"


@dataclass(frozen=True)
class TowerSpec:
    """A tower kind with its parameters and the MH(G)-style hypothesis flag.

    ``assume_mhg`` records (does not verify) the module-theoretic hypothesis
    that the conditional growth formulas need; it is printed verbatim in
    reports.
    """

    p: int
    kind: TowerKind
    d: int
    ell: int | None = None
    ramified_primes: tuple[int, ...] = ()
    assume_mhg: bool = False

    def __post_init__(self):
        if not arith.is_prime(self.p) or self.p < 5:
            raise ValueError(f"tower prime must be a prime >= 5, got {self.p}")
        if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 2:
            raise ValueError(f"tower dimension must be an integer >= 2, got {self.d}")
        if self.kind is TowerKind.FALSE_TATE:
            if self.d != 2:
                raise ValueError("false-Tate towers have dimension 2")
            if self.ell is None or not arith.is_prime(self.ell):
                raise ValueError(f"false-Tate tower needs a prime ell, got {self.ell}")
            if self.ell == self.p:
                raise ValueError("false-Tate ell must differ from p")
        elif self.kind is TowerKind.TORSION_FIELD:
            if self.d != 4:
                raise ValueError("torsion-field towers have dimension 4")
        elif self.kind is TowerKind.GENERIC:
            seen = set()
            for ell in self.ramified_primes:
                if not arith.is_prime(ell) or ell == self.p:
                    raise ValueError(f"ramified prime {ell} must be a prime != {self.p}")
                if ell in seen:
                    raise ValueError(f"duplicate ramified prime {ell}")
                seen.add(ell)
        if self.kind is not TowerKind.FALSE_TATE and self.ell is not None:
            raise ValueError(f"{self.kind.value} tower takes no ell parameter")
        if self.kind is not TowerKind.GENERIC and self.ramified_primes:
            raise ValueError(f"{self.kind.value} tower takes no ramified-prime list")

    @classmethod
    def zpd_composite(cls, p: int, d: int, *, assume_mhg: bool = False) -> "TowerSpec":
        return cls(p=p, kind=TowerKind.ZPD_COMPOSITE, d=d, assume_mhg=assume_mhg)

    @classmethod
    def false_tate(cls, p: int, ell: int, *, assume_mhg: bool = False) -> "TowerSpec":
        return cls(p=p, kind=TowerKind.FALSE_TATE, d=2, ell=ell, assume_mhg=assume_mhg)

    @classmethod
    def torsion_field(cls, p: int, *, assume_mhg: bool = False) -> "TowerSpec":
        return cls(p=p, kind=TowerKind.TORSION_FIELD, d=4, assume_mhg=assume_mhg)

    @classmethod
    def generic(cls, p: int, d: int, ramified_primes, *,
                assume_mhg: bool = False) -> "TowerSpec":
        return cls(p=p, kind=TowerKind.GENERIC, d=d,
                   ramified_primes=tuple(sorted(ramified_primes)),
                   assume_mhg=assume_mhg)


def dimension(spec: TowerSpec) -> int:
    """Lie dimension d of the tower."""
    return spec.d


def cyc_layer_degree(spec: TowerSpec, n: int) -> int:
    """[level-n layer : base] over the cyclotomic line: p^((d-1)*n)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"level must be an integer >= 0, got {n}")
    return spec.p ** ((spec.d - 1) * n)


def full_layer_degree(spec: TowerSpec, n: int) -> int:
    """[level-n layer : base] over Q: p^(d*n)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"level must be an integer >= 0, got {n}")
    return spec.p ** (spec.d * n)


@dataclass(frozen=True)
class QSets:
    """The ramified-prime counts q1/q2 with their per-prime witnesses.

    Witnesses are (ell, count) pairs; each qi equals the sum of its witness
    counts, witness primes are pairwise distinct, and none equals p.
    """

    q1: int
    q2: int
    witnesses_q1: tuple[tuple[int, int], ...] = ()
    witnesses_q2: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for q, wits, tag in ((self.q1, self.witnesses_q1, "q1"),
                             (self.q2, self.witnesses_q2, "q2")):
            if q < 0:
                raise ValueError(f"{tag} must be >= 0, got {q}")
            if sum(c for _, c in wits) != q:
                raise ValueError(f"{tag}={q} does not match witness counts {wits}")
            for ell, c in wits:
                if c < 1:
                    raise ValueError(f"witness count for {ell} must be >= 1")
        primes = [ell for ell, _ in self.witnesses_q1 + self.witnesses_q2]
        if len(primes) != len(set(primes)):
            raise ValueError(f"witness primes must be pairwise distinct: {primes}")


def _classify_at(E: curve.WeierstrassCurve, ell: int, p: int) -> tuple[int, int]:
    """(split-multiplicative count, good-with-torsion count) contributed by ell.

    Counts are numbers of primes above ell on the cyclotomic line.  A bad
    prime below 5 cannot be classified (SmallBadPrime).
    """
    if ell < 5:
        if E.disc % ell == 0:
            raise SmallBadPrime(
                f"cannot classify reduction at bad prime {ell} < 5"
            )
        rt = curve.ReductionType.GOOD
    else:
        rt = curve.reduction_type(E, ell)
    if rt is curve.ReductionType.SPLIT_MULTIPLICATIVE:
        g = cyclotomic.splitting_infinite(ell, p).num_primes
        return g, 0
    if rt is curve.ReductionType.GOOD:
        data = cyclotomic.splitting_infinite(ell, p)
        if curve.has_p_torsion_over(E, ell, p, data.residue_order):
            return 0, data.num_primes
        return 0, 0
    return 0, 0


def compute_qsets(E: curve.WeierstrassCurve, spec: TowerSpec) -> QSets:
    """Evaluate q1/q2 for the curve in the given tower.

    Requires E good ordinary at spec.p (NotGoodOrdinary otherwise).
    """
    if not curve.is_good_ordinary(E, spec.p):
        raise NotGoodOrdinary(
            f"{E.label or E.ainvs} is not good ordinary at {spec.p}"
        )
    if spec.kind is TowerKind.ZPD_COMPOSITE:
        return QSets(0, 0)

    if spec.kind is TowerKind.TORSION_FIELD:
        wits = []
        for ell in curve.bad_primes(E):
            if ell < 5:
                raise SmallBadPrime(
                    f"cannot classify reduction at bad prime {ell} < 5"
                )
            if curve.reduction_type(E, ell) is curve.ReductionType.SPLIT_MULTIPLICATIVE:
                wits.append((ell, 1))
        return QSets(q1=len(wits), q2=0, witnesses_q1=tuple(wits))

    ells = (spec.ell,) if spec.kind is TowerKind.FALSE_TATE else spec.ramified_primes
    w1, w2 = [], []
    for ell in sorted(ells):
        s, t = _classify_at(E, ell, spec.p)
        if s:
            w1.append((ell, s))
        if t:
            w2.append((ell, t))
    return QSets(
        q1=sum(c for _, c in w1),
        q2=sum(c for _, c in w2),
        witnesses_q1=tuple(w1),
        witnesses_q2=tuple(w2),
    )
