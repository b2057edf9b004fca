"""Series combinatorics for the general linear and unitary groups: cuspidal
pairs, the partition of unipotent characters into series by their cores, the
quotient map onto multipartitions, wreath-product character degrees, signs of
degree polynomials modulo cyclotomics, and the predicted Hecke parameters.

A cuspidal pair for GL_n at level e is encoded by an e-core of size n - a*e;
the pairs with a = 0 are cuspidal singletons.  The members of a pair's series
are the partitions of n with that e-core, and the series map sends a member
to its charged e-quotient taken at charge e + len(core).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .partitions import (
    ChargedMultiPartition,
    MultiPartition,
    Partition,
    core_exponents,
    e_core,
    e_quotient_charged,
    is_e_core,
    multinomial,
    multipartitions_of,
    partitions_of,
    render_multipartition,
    render_partition,
    syt_count,
)
from .polynomials import generic_degree, mod_cyclotomic


class DegreeSignError(ArithmeticError):
    """The degree polynomial did not reduce to the expected constant."""


@dataclass(frozen=True)
class CuspidalPairGL:
    """A level-e cuspidal pair for GL_n: an e-core of size n - a*e."""

    n: int
    e: int
    a: int
    core: Partition

    def __post_init__(self):
        if self.a < 0 or self.core.size + self.a * self.e != self.n:
            raise ValueError("sizes of core and torus part do not add up")
        if not is_e_core(self.core, self.e):
            raise ValueError(f"{self.core.parts} is not a {self.e}-core")

    @property
    def is_cuspidal_singleton(self) -> bool:
        return self.a == 0


@dataclass(frozen=True)
class WreathGroup:
    """The wreath product of a cyclic group of order e with the symmetric
    group on a letters; its irreducibles are indexed by e-multipartitions
    of total size a."""

    e: int
    a: int

    def irreducible_count(self) -> int:
        return len(multipartitions_of(self.e, self.a))

    def order(self) -> int:
        result = self.e**self.a
        for k in range(2, self.a + 1):
            result *= k
        return result


class HeckeParam(NamedTuple):
    """One Hecke parameter: a root of unity times a power of x.

    arg is the argument of the root in full turns (a reduced fraction in
    [0, 1)); exponent is the power of x.
    """

    arg: Fraction
    exponent: int


@dataclass(frozen=True)
class HeckeSpecialization:
    """Parameter data of a specialized Ariki-Koike algebra: one parameter
    per cyclic-generator eigenvalue and two for the symmetric generators."""

    tau_params: tuple[HeckeParam, ...]
    sigma_params: tuple[HeckeParam, HeckeParam]


@lru_cache(maxsize=None)
def hc_pairs(n: int, e: int) -> tuple[CuspidalPairGL, ...]:
    """All cuspidal pairs for GL_n at level e, cores sorted lexicographically."""
    if n < 1 or e < 1:
        raise ValueError("n and e must be >= 1")
    pairs = []
    for k in range(n % e, n + 1, e):
        a = (n - k) // e
        for core in partitions_of(k):
            if is_e_core(core, e):
                pairs.append(CuspidalPairGL(n, e, a, core))
    pairs.sort(key=lambda pr: pr.core.parts)
    return tuple(pairs)


def hc_series_of(p: Partition, e: int) -> tuple[CuspidalPairGL, ChargedMultiPartition]:
    """The cuspidal pair whose series contains p, and p's image in it.

    The image is the charged e-quotient at charge e + len(core); a partition
    that is itself an e-core maps to the empty multipartition (the trivial
    character of the trivial wreath group).
    """
    core = e_core(p, e)
    pair = CuspidalPairGL(p.size, e, (p.size - core.size) // e, core)
    return pair, e_quotient_charged(p, e, core.length)


def hc_partition(n: int, e: int) -> dict[CuspidalPairGL, tuple[Partition, ...]]:
    """Partition of the partitions of n into series, keyed by cuspidal pair.

    Members are listed in lexicographic order of their part tuples.
    """
    grouped: dict[CuspidalPairGL, list[Partition]] = {pr: [] for pr in hc_pairs(n, e)}
    for p in partitions_of(n):
        pair, _ = hc_series_of(p, e)
        grouped[pair].append(p)
    return {
        pair: tuple(sorted(members, key=lambda q: q.parts))
        for pair, members in grouped.items()
    }


def series_intersection(
    pair_e: CuspidalPairGL, pair_m: CuspidalPairGL
) -> tuple[Partition, ...]:
    """All partitions lying in both series; may be empty."""
    if pair_e.n != pair_m.n:
        raise ValueError("pairs belong to different ranks")
    return tuple(
        p
        for p in sorted(partitions_of(pair_e.n), key=lambda q: q.parts)
        if e_core(p, pair_e.e) == pair_e.core and e_core(p, pair_m.e) == pair_m.core
    )


def series_json(n: int, e: int) -> list[dict]:
    """Series data as JSON-ready objects, one per cuspidal pair.

    Fields: n, e, a, core, members, quotients, charges.  Quotients are
    listed in member order; the charge vector is shared by the series.
    Entries follow the lexicographic core order of hc_pairs.
    """
    out = []
    for pair, members in hc_partition(n, e).items():
        quotients = [
            render_multipartition(hc_series_of(p, e)[1].components) for p in members
        ]
        charges = e_quotient_charged(pair.core, e, pair.core.length).charges
        out.append(
            {
                "n": pair.n,
                "e": pair.e,
                "a": pair.a,
                "core": render_partition(pair.core),
                "members": [render_partition(p) for p in members],
                "quotients": quotients,
                "charges": list(charges),
            }
        )
    return out


def wreath_dim(mp: MultiPartition) -> int:
    """Degree of the wreath-product irreducible indexed by mp.

    >>> wreath_dim((Partition((1,)), Partition((1,))))
    2
    """
    dim = multinomial(p.size for p in mp)
    for p in mp:
        dim *= syt_count(p)
    return dim


def degree_sign(p: Partition, e: int) -> int:
    """Sign of the degree polynomial of p modulo the e-th cyclotomic.

    The remainder must be a constant of absolute value equal to the wreath
    degree of p's e-quotient; a mismatch raises DegreeSignError.
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    rem = mod_cyclotomic(generic_degree(p), e)
    if not rem.is_constant():
        raise DegreeSignError(f"nonconstant remainder {rem} for {p.parts} at e={e}")
    c = rem.constant_value()
    _, image = hc_series_of(p, e)
    expected = wreath_dim(image.components)
    if abs(c) != expected:
        raise DegreeSignError(
            f"remainder {c} does not match wreath degree {expected}"
            f" for {p.parts} at e={e}"
        )
    return 1 if c > 0 else -1


GL = "gl"
GU = "gu"

_HALF = Fraction(1, 2)


def specialization(pair: CuspidalPairGL, variant: str = GL) -> HeckeSpecialization:
    """Predicted Hecke parameters of a cuspidal pair.

    The cyclic-generator parameters are x to the core exponents (unitary
    variant: -x in place of x); the symmetric-generator parameters are
    (1, -x^e) (unitary: 1, -(-x)^e).  Pairs with a = 0 have no Hecke data.
    """
    if pair.a < 1:
        raise ValueError("cuspidal singletons carry no Hecke parameters")
    if variant not in (GL, GU):
        raise ValueError(f"unknown variant {variant!r}")
    e = pair.e
    exps = core_exponents(pair.core, e)
    zero = Fraction(0)
    if variant == GL:
        tau = tuple(HeckeParam(zero, a) for a in exps)
        sigma1 = HeckeParam(_HALF, e)
    else:
        tau = tuple(HeckeParam((a * _HALF) % 1, a) for a in exps)
        sigma1 = HeckeParam(((e + 1) * _HALF) % 1, e)
    return HeckeSpecialization(tau, (HeckeParam(zero, 0), sigma1))
