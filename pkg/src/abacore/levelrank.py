"""Level-rank combinatorics: twisted index maps, the Uglov bijection between
charged e- and m-multipartitions, and the affine permutations that make the
two core-quotient routes commute.

Everything acts on beads.  A bead of an e-abacus is a pair (x, i) with x an
integer position in component i.  The twisted quotient-remainder map qr_em
re-reads such a bead as a bead of an m-abacus; the Uglov bijection is its
bead-by-bead application; the affine permutations are the corrections that
relate splitting at two different charges.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .partitions import (
    BetaSet,
    ChargedMultiPartition,
    ChargedPartition,
    Partition,
    ceil_div,
    e_core,
    from_beta,
    split_charged,
    to_beta,
)


def qr(x: int, m: int) -> tuple[int, int]:
    """Floor quotient and remainder: x = m*q + r with 0 <= r < m.

    >>> qr(-1, 3)
    (-1, 2)
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return (x // m, x % m)


def qr_em(x: int, y: int, e: int, m: int) -> tuple[int, int]:
    """Re-read bead (x, y) of an e-abacus as a bead of an m-abacus.

    Returns (e*q_m(x) + y, r_m(x)); satisfies e*x + m*y = m*q' + e*r'.

    >>> qr_em(-1, 1, 2, 3)
    (-1, 2)
    """
    if e < 1 or m < 1:
        raise ValueError("levels must be >= 1")
    if not 0 <= y < e:
        raise ValueError(f"component {y} out of range for level {e}")
    q, r = qr(x, m)
    return (e * q + y, r)


def qr_em_inv(q: int, r: int, e: int, m: int) -> tuple[int, int]:
    """Inverse of qr_em: apply the (m, e)-swapped map to (q, r)."""
    if not 0 <= r < m:
        raise ValueError(f"component {r} out of range for level {m}")
    return qr_em(q, r, m, e)


def _uglov_abaci(abaci: tuple[BetaSet, ...], m: int) -> tuple[BetaSet, ...]:
    """Bead-by-bead image of an e-abacus under qr_em, as an m-abacus."""
    e = len(abaci)
    out = []
    for rho in range(m):
        # component i's infinite part contributes beads e*q + i for
        # q < ceil((floor_i - rho) / m)
        floors = [ceil_div(b.floor - rho, m) for b in abaci]
        tmin = min(floors)
        beads = set()
        for i, b in enumerate(abaci):
            beads.update(e * ((x - rho) // m) + i for x in b.tail if x % m == rho)
            beads.update(e * q + i for q in range(tmin, floors[i]))
        out.append(BetaSet.from_floor_and_beads(e * tmin, beads))
    return tuple(out)


def uglov(cmp: ChargedMultiPartition, m: int) -> ChargedMultiPartition:
    """The Uglov bijection from charged e-multipartitions to charged
    m-multipartitions, realized on abaci.

    Total charge is preserved, and applying the map with (m, e) swapped
    inverts it.  At e = 1 this is exactly the abacus splitting.
    """
    if m < 1:
        raise ValueError("target level must be >= 1")
    abaci = tuple(
        to_beta(ChargedPartition(p, s)) for p, s in zip(cmp.components, cmp.charges)
    )
    images = [from_beta(b) for b in _uglov_abaci(abaci, m)]
    return ChargedMultiPartition(
        tuple(c.partition for c in images), tuple(c.charge for c in images)
    )


@dataclass(frozen=True)
class AffinePerm:
    """An affine permutation of beads (x, i): component i is sent to
    perm[i], and a bead landing in component j is shifted by shifts[j].

    perm must be a bijection of range(e); shifts is indexed by the target
    component.
    """

    e: int
    perm: tuple[int, ...]
    shifts: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(self.e)) or len(self.shifts) != self.e:
            raise ValueError("inconsistent affine permutation data")

    def bead(self, x: int, i: int) -> tuple[int, int]:
        j = self.perm[i]
        return (x + self.shifts[j], j)


def residue_perm(e: int, m: int, s: int) -> tuple[int, ...]:
    """The permutation w of range(e) with w((m*b + s) mod e) = b.

    Defined only for coprime e, m.

    >>> residue_perm(3, 2, 0)
    (0, 2, 1)
    """
    if e < 1 or m < 1:
        raise ValueError("levels must be >= 1")
    if gcd(e, m) != 1:
        raise ValueError(f"levels {e}, {m} must be coprime")
    w = [0] * e
    for b in range(e):
        w[(m * b + s) % e] = b
    return tuple(w)


def affine_perm(e: int, m: int, s: int) -> AffinePerm:
    """The affine permutation correcting the e-abacus for charge s.

    Sends a bead (a, r_e(m*b + s)) to (a - q_e(m*b + s), b); the shift is
    indexed by the target component b.
    """
    w = residue_perm(e, m, s)
    shifts = tuple(-((m * b + s) // e) for b in range(e))
    return AffinePerm(e, w, shifts)


def apply_affine(ap: AffinePerm, cmp: ChargedMultiPartition) -> ChargedMultiPartition:
    """Act on a charged multipartition through its abacus, bead by bead.

    Components are permuted and each shifted component's charge moves by the
    shift amount.
    """
    if cmp.level != ap.e:
        raise ValueError(f"expected {ap.e} components, got {cmp.level}")
    out: list[ChargedPartition | None] = [None] * ap.e
    for i in range(ap.e):
        j = ap.perm[i]
        beta = to_beta(ChargedPartition(cmp.components[i], cmp.charges[i]))
        out[j] = from_beta(beta.shifted(ap.shifts[j]))
    return ChargedMultiPartition(
        tuple(c.partition for c in out), tuple(c.charge for c in out)
    )


def check_bead_square(x: int, e: int, m: int, s: int, t: int) -> bool:
    """Pointwise commutation of the bead-level square at the integer x.

    Route one: split x through the e-side (charge s), correct by the affine
    permutation, then re-read via qr_em.  Route two: split x through the
    m-side (charge t) and correct there.  The two must agree.
    """
    ape = affine_perm(e, m, s)
    apm = affine_perm(m, e, t)
    a, b = qr(x + s, e)
    left = ape.bead(a, b)
    via_e = qr_em(left[0], left[1], e, m)
    c, d = qr(x + t, m)
    via_m = apm.bead(c, d)
    return via_e == via_m


def check_uglov_diagram(p: Partition, e: int, m: int, s: int, t: int) -> bool:
    """Commutation of the two routes from a partition to an m-multipartition.

    Route one: split at charge s into e components, apply the (e, m, s)
    affine permutation, then the Uglov bijection to level m.  Route two:
    split at charge t into m components and apply the (m, e, t) affine
    permutation.
    """
    route_e = uglov(
        apply_affine(affine_perm(e, m, s), split_charged(ChargedPartition(p, s), e)), m
    )
    route_m = apply_affine(
        affine_perm(m, e, t), split_charged(ChargedPartition(p, t), m)
    )
    return route_e == route_m


def check_core_matched_diagram(p: Partition, e: int, m: int) -> bool:
    """The diagram check at the canonical charges e + len(e-core) and
    m + len(m-core), the charges used by the series combinatorics."""
    s = e + e_core(p, e).length
    t = m + e_core(p, m).length
    return check_uglov_diagram(p, e, m, s, t)
