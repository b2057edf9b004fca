"""Block combinatorics for specialized Ariki-Koike algebras.

The block key of a charged e-multipartition is the multiset of integers
e*(content + charge) + component over its boxes; blocks at level m compare
this multiset modulo m.  For parameters involving roots of unity the key is
evaluated in Q/Z instead, which keeps sign twists exact.  The generating
series identities tie the keys to beta sets and underlie the equivalence
between sharing an m-core and sharing a key.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .hc_series import (
    GL,
    GU,
    CuspidalPairGL,
    HeckeSpecialization,
    hc_pairs,
    hc_series_of,
    specialization,
)
from .partitions import (
    BetaSet,
    ChargedMultiPartition,
    ChargedPartition,
    MultiPartition,
    Partition,
    e_core,
    e_quotient_charged,
    multipartitions_of,
    partitions_of,
    to_beta,
)
from .polynomials import ennola_e


class OmegaIsOne(ValueError):
    """The symmetric-generator ratio specialized to 1, where the block
    criterion does not apply."""


class EquivalenceViolation(AssertionError):
    """The core comparison and the key comparison disagreed."""


@dataclass(frozen=True)
class ResidueMultiset:
    """A finite multiset of integers, stored as sorted (value, count) pairs."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_values(cls, values) -> "ResidueMultiset":
        acc: dict[int, int] = {}
        for v in values:
            acc[v] = acc.get(v, 0) + 1
        return cls(tuple(sorted(acc.items())))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def values(self):
        for v, c in self.counts:
            for _ in range(c):
                yield v


@dataclass(frozen=True)
class ResidueMultisetMod:
    """A multiset of residue classes modulo m."""

    m: int
    counts: tuple[tuple[int, int], ...]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)


@dataclass(frozen=True)
class RootResidueKey:
    """A finite multiset of elements of Q/Z, stored as sorted
    (reduced fraction in [0, 1), count) pairs."""

    counts: tuple[tuple[Fraction, int], ...]


@dataclass(frozen=True)
class TruncatedSeries:
    """A series in t with integer coefficients, exact for exponents >= low.

    coeffs[k] is the coefficient of t^(low + k); high zeros are trimmed.
    """

    low: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        trimmed = self.coeffs
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "coeffs", tuple(trimmed))

    def coefficient(self, k: int) -> int:
        if k < self.low:
            raise ValueError(f"exponent {k} below truncation {self.low}")
        idx = k - self.low
        return self.coeffs[idx] if idx < len(self.coeffs) else 0

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        low = max(self.low, other.low)
        high = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        return TruncatedSeries(
            low,
            tuple(
                self.coefficient(k) - other.coefficient(k) for k in range(low, high)
            ),
        )

    def matches(self, other: "TruncatedSeries") -> bool:
        """Coefficientwise equality on exponents >= max(self.low, other.low)."""
        low = max(self.low, other.low)
        high = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        return all(
            self.coefficient(k) == other.coefficient(k) for k in range(low, high)
        )


def residue_multiset(cmp: ChargedMultiPartition, e: int) -> ResidueMultiset:
    """Box residues e*(content + charge) + component of a charged
    e-multipartition.

    >>> mp = ChargedMultiPartition((Partition(()), Partition((1,))), (0, 0))
    >>> residue_multiset(mp, 2).counts
    ((1, 1),)
    """
    if cmp.level != e:
        raise ValueError(f"expected {e} components, got {cmp.level}")
    values = []
    for j, (p, s) in enumerate(zip(cmp.components, cmp.charges)):
        for content in p.contents():
            values.append(e * (content + s) + j)
    return ResidueMultiset.from_values(values)


def residue_mod(rm: ResidueMultiset, m: int) -> ResidueMultisetMod:
    """Sum multiplicities over residue classes modulo m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    acc: dict[int, int] = {}
    for v, c in rm.counts:
        acc[v % m] = acc.get(v % m, 0) + c
    return ResidueMultisetMod(m, tuple(sorted(acc.items())))


def _eval_param(arg: Fraction, exponent: int, at_root: int) -> Fraction:
    return (arg + Fraction(exponent, at_root)) % 1


def root_residue_key(
    mp: MultiPartition, params: HeckeSpecialization, at_root: int
) -> RootResidueKey:
    """Evaluate the block key of mp at x = a primitive at_root-th root.

    Each box contributes omega^content times the component's parameter,
    recorded additively in Q/Z; omega is the negated second symmetric
    parameter.  Raises OmegaIsOne when omega evaluates to 1, where the block
    criterion does not apply.
    """
    if at_root < 1:
        raise ValueError("at_root must be >= 1")
    if len(mp) != len(params.tau_params):
        raise ValueError("component count does not match parameter count")
    s0, s1 = params.sigma_params
    if _eval_param(s0.arg, s0.exponent, at_root) != 0:
        raise ValueError("first symmetric parameter must evaluate to 1")
    omega = (_eval_param(s1.arg, s1.exponent, at_root) + Fraction(1, 2)) % 1
    if omega == 0:
        raise OmegaIsOne(f"symmetric ratio is 1 at a {at_root}-th root")
    acc: dict[Fraction, int] = {}
    for j, p in enumerate(mp):
        alpha = _eval_param(params.tau_params[j].arg, params.tau_params[j].exponent, at_root)
        for content in p.contents():
            v = (content * omega + alpha) % 1
            acc[v] = acc.get(v, 0) + 1
    return RootResidueKey(tuple(sorted(acc.items())))


def root_key_partition(
    e: int, a: int, params: HeckeSpecialization, at_root: int
) -> tuple[tuple[MultiPartition, ...], ...]:
    """Partition of all e-multipartitions of size a by their root-of-unity
    block keys under the given parameters."""
    grouped: dict[RootResidueKey, list[MultiPartition]] = {}
    for mp in multipartitions_of(e, a):
        grouped.setdefault(root_residue_key(mp, params, at_root), []).append(mp)
    return _canonical_blocks(grouped.values())


def _series_charges(core: Partition, e: int) -> tuple[int, ...]:
    return e_quotient_charged(core, e, core.length).charges


def _member_key(p: Partition, e: int, core: Partition, m: int) -> ResidueMultisetMod:
    return residue_mod(
        residue_multiset(e_quotient_charged(p, e, core.length), e), m
    )


def same_block(p: Partition, r: Partition, e: int, m: int, core: Partition) -> bool:
    """Whether p and r lie in the same level-m block of their common series.

    Both partitions must have e-core equal to core.  Compares the residue
    keys of the charged e-quotients modulo m; whenever the root-of-unity
    route applies, its verdict is asserted to agree.
    """
    if e_core(p, e) != core or e_core(r, e) != core:
        raise ValueError("both partitions must have the given core")
    result = _member_key(p, e, core, m) == _member_key(r, e, core, m)
    if p.size == r.size and p.size > core.size and e % m != 0:
        pair = CuspidalPairGL(p.size, e, (p.size - core.size) // e, core)
        params = specialization(pair, GL)
        kp = root_residue_key(e_quotient_charged(p, e, core.length).components, params, m)
        kr = root_residue_key(e_quotient_charged(r, e, core.length).components, params, m)
        if (kp == kr) != result:
            raise EquivalenceViolation(
                f"residue and root keys disagree for {p.parts}, {r.parts}"
            )
    return result


def _mp_sort_key(mp: MultiPartition) -> tuple:
    return tuple(p.parts for p in mp)


def _canonical_blocks(groups) -> tuple[tuple[MultiPartition, ...], ...]:
    """Sort members within blocks and blocks by first member."""
    blocks = [tuple(sorted(members, key=_mp_sort_key)) for members in groups]
    blocks.sort(key=lambda block: _mp_sort_key(block[0]))
    return tuple(blocks)


def block_partition(
    e: int, a: int, core: Partition, m: int
) -> tuple[tuple[MultiPartition, ...], ...]:
    """Partition of all e-multipartitions of size a into level-m blocks.

    Keys are residue multisets modulo m with the charge vector of the given
    core.  Raises OmegaIsOne when m divides e, where the underlying ratio
    specializes to 1.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if e % m == 0:
        raise OmegaIsOne(f"level {m} blocks are undefined at level e={e}")
    charges = _series_charges(core, e)
    grouped: dict[ResidueMultisetMod, list[MultiPartition]] = {}
    for mp in multipartitions_of(e, a):
        key = residue_mod(residue_multiset(ChargedMultiPartition(mp, charges), e), m)
        grouped.setdefault(key, []).append(mp)
    return _canonical_blocks(grouped.values())


# ---------------------------------------------------------------------------
# generating series

def generating_series(obj, low: int) -> TruncatedSeries:
    """Exponent-indicator series of a beta set, or multiplicity series of a
    residue multiset, truncated below low.

    For a residue multiset, low must not exceed the support.
    """
    if isinstance(obj, BetaSet):
        high = obj.tail[0] + 1 if obj.tail else obj.floor
        return TruncatedSeries(
            low, tuple(1 if k in obj else 0 for k in range(low, max(high, low)))
        )
    if isinstance(obj, ResidueMultiset):
        if obj.counts and obj.counts[0][0] < low:
            raise ValueError("truncation cuts into the multiset support")
        if not obj.counts:
            return TruncatedSeries(low, ())
        high = obj.counts[-1][0] + 1
        table = dict(obj.counts)
        return TruncatedSeries(
            low, tuple(table.get(k, 0) for k in range(low, high))
        )
    raise TypeError(f"no generating series for {type(obj).__name__}")


def _scaled_difference_series(rm: ResidueMultiset, e: int, low: int) -> TruncatedSeries:
    """The series (1 - t^-e) * sum multiplicity(k) t^k, exactly, from low up."""
    table = dict(rm.counts)
    high = (rm.counts[-1][0] + 1) if rm.counts else low
    return TruncatedSeries(
        low,
        tuple(
            table.get(k, 0) - table.get(k + e, 0) for k in range(low, max(high, low))
        ),
    )


def check_content_lemma(p: Partition, s: int, e: int, window: int) -> bool:
    """Coefficientwise check of the two content generating identities.

    First: (1 - 1/t) times the level-1 residue series of |p, s> equals the
    beta-set series minus the series of the trivial abacus at charge s.
    Second: (1 - t^-e) times the residue series of the charged e-quotient
    equals the beta-set series of p minus that of its e-core, both at
    charge s.  All series are compared on exponents >= -window.
    """
    if window < p.size + abs(s) + e + 5:
        raise ValueError("window too small to be lossless")
    low = -window
    beta_p = to_beta(ChargedPartition(p, s))
    level1 = residue_multiset(ChargedMultiPartition((p,), (s,)), 1)
    lhs1 = _scaled_difference_series(level1, 1, low)
    rhs1 = generating_series(beta_p, low) - generating_series(BetaSet(s), low)
    if not lhs1.matches(rhs1):
        return False
    quotient = e_quotient_charged(p, e, s - e)  # charge s overall
    level_e = residue_multiset(quotient, e)
    lhs2 = _scaled_difference_series(level_e, e, low)
    beta_core = to_beta(ChargedPartition(e_core(p, e), s))
    rhs2 = generating_series(beta_p, low) - generating_series(beta_core, low)
    return lhs2.matches(rhs2)


def check_core_key_equivalence(p: Partition, r: Partition, e: int, m: int) -> bool:
    """Assert that sharing an m-core and sharing a level-m residue key are
    equivalent for same-size partitions with the same e-core, and return the
    common truth value.

    Raises EquivalenceViolation if the two sides disagree; requires e and m
    coprime.
    """
    if gcd(e, m) != 1:
        raise ValueError("levels must be coprime")
    if p.size != r.size:
        raise ValueError("partitions must have the same size")
    core = e_core(p, e)
    if e_core(r, e) != core:
        raise ValueError("partitions must have the same e-core")
    same_core = e_core(p, m) == e_core(r, m)
    same_key = _member_key(p, e, core, m) == _member_key(r, e, core, m)
    if same_core != same_key:
        raise EquivalenceViolation(
            f"core comparison {same_core} but key comparison {same_key}"
            f" for {p.parts}, {r.parts} at (e, m) = ({e}, {m})"
        )
    return same_core


# ---------------------------------------------------------------------------
# the series-versus-blocks report

def _image_multipartition(p: Partition, e: int) -> MultiPartition:
    _, image = hc_series_of(p, e)
    return image.components


def _side_blocks(
    pair: CuspidalPairGL, at_root: int
) -> tuple[tuple[tuple[MultiPartition, ...], ...], bool]:
    """Block partition of a series at a given root, and whether the unitary
    variant induces the same partition.

    At at_root = 1 every key collapses, so the partition is the single full
    block on both variants.  The unitary keys are evaluated at the paired
    cyclotomic index, where the sign-twisted parameters hit a primitive
    at_root-th root.
    """
    mps = multipartitions_of(pair.e, pair.a)
    if at_root == 1:
        return _canonical_blocks([mps]), True
    blocks = block_partition(pair.e, pair.a, pair.core, at_root)
    if pair.a == 0:
        return blocks, True
    gu_params = specialization(pair, GU)
    gu_blocks = root_key_partition(pair.e, pair.a, gu_params, ennola_e(at_root))
    return blocks, gu_blocks == blocks


def block_match_report(n: int, e: int, m: int) -> dict:
    """Check that every nonempty intersection of a level-e series and a
    level-m series maps to exactly one block on each side.

    For each pair of series with nonempty intersection, the image of the
    intersection in the e-side multipartitions must equal one full block of
    the e-side block partition at level m, and symmetrically.  The unitary
    variant must induce the same block partitions.  Returns a report dict
    with one entry per nonempty intersection.
    """
    if n < 1 or e < 1 or m < 1:
        raise ValueError("n, e, m must be >= 1")
    if gcd(e, m) != 1:
        raise ValueError("levels must be coprime")

    groups: dict[tuple[Partition, Partition], list[Partition]] = {}
    for p in partitions_of(n):
        groups.setdefault((e_core(p, e), e_core(p, m)), []).append(p)

    pairs_e = {pr.core: pr for pr in hc_pairs(n, e)}
    pairs_m = {pr.core: pr for pr in hc_pairs(n, m)}
    side_cache: dict[tuple[int, Partition], tuple] = {}

    def side(pair: CuspidalPairGL, at_root: int):
        key = (pair.e, pair.core)
        if key not in side_cache:
            side_cache[key] = _side_blocks(pair, at_root)
        return side_cache[key]

    def image_matches_one_block(members, level, blocks):
        image = sorted(
            (tuple(q.parts for q in _image_multipartition(p, level)) for p in members)
        )
        touched = []
        for block in blocks:
            flat = sorted(tuple(q.parts for q in mp) for mp in block)
            if any(x in flat for x in image):
                touched.append(flat)
        ok = len(touched) == 1 and touched[0] == image
        return ok, [len(b) for b in touched]

    intersections = []
    all_pass = True
    for (core_e, core_m), members in sorted(
        groups.items(), key=lambda kv: (kv[0][0].parts, kv[0][1].parts)
    ):
        members = sorted(members, key=lambda q: q.parts)
        blocks_e, gu_ok_e = side(pairs_e[core_e], m)
        blocks_m, gu_ok_m = side(pairs_m[core_m], e)
        ok_e, sizes_e = image_matches_one_block(members, e, blocks_e)
        ok_m, sizes_m = image_matches_one_block(members, m, blocks_m)
        ok = ok_e and ok_m and gu_ok_e and gu_ok_m
        all_pass = all_pass and ok
        intersections.append(
            {
                "coreE": str(core_e),
                "coreM": str(core_m),
                "members": [str(p) for p in members],
                "blockE_sizes": sizes_e,
                "blockM_sizes": sizes_m,
                "pass": ok,
            }
        )
    return {
        "n": n,
        "e": e,
        "m": m,
        "intersections": intersections,
        "pass": all_pass,
    }
