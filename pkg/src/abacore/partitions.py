"""Integer partitions, beta sets (abaci), and the charged core-quotient maps.

Conventions used throughout the package:

* A partition is a weakly decreasing tuple of positive integers; the empty
  partition is allowed.  Boxes are indexed (row, column), both 1-based, and
  the content of a box is column - row.
* A beta set encodes a charged partition as the set
  {parts[i] - (i+1) + charge : i >= 0}, which contains every integer below
  some floor.  We store the canonical pair (floor, tail): floor is the
  largest t with Z_{<t} contained in the set, and tail lists the finitely
  many beads above the floor in decreasing order.
* charge(beta) = floor + len(tail), which equals the charge used to build
  the beta set.
* Splitting a beta set into e residue classes (an e-abacus) and rebuilding
  partitions componentwise gives the charged core-quotient bijection;
  components are indexed 0..e-1 by residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def ceil_div(a: int, b: int) -> int:
    """Ceiling division for a positive divisor b."""
    return -((-a) // b)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    >>> Partition((3, 1, 1)).size
    5
    >>> Partition(()).length
    0
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i + 1 < len(parts) and parts[i + 1] > p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def boxes(self):
        """Yield (row, column) pairs, 1-based."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contents(self):
        """Yield column - row over all boxes."""
        for i, j in self.boxes():
            yield j - i

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def __str__(self) -> str:
        return render_partition(self)


MultiPartition = tuple[Partition, ...]
MultiCharge = tuple[int, ...]


@dataclass(frozen=True)
class ChargedPartition:
    """A partition together with an integer charge."""

    partition: Partition
    charge: int


@dataclass(frozen=True)
class ChargedMultiPartition:
    """An e-tuple of partitions with an e-tuple of integer charges."""

    components: MultiPartition
    charges: MultiCharge

    def __post_init__(self):
        if len(self.components) != len(self.charges):
            raise ValueError("component and charge counts differ")
        if not self.components:
            raise ValueError("need at least one component")

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def total_size(self) -> int:
        return sum(p.size for p in self.components)

    @property
    def total_charge(self) -> int:
        return sum(self.charges)


@dataclass(frozen=True)
class BetaSet:
    """The set Z_{<floor} union tail, with tail decreasing and above floor.

    Canonical form: floor is the largest t such that every integer below t
    is in the set; consequently floor itself is never a bead and every tail
    entry exceeds it.

    >>> BetaSet(0, ()).charge
    0
    >>> BetaSet(-2, (1, -1)).charge
    0
    """

    floor: int
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        for i, x in enumerate(self.tail):
            if x <= self.floor:
                raise ValueError("tail entries must exceed the floor")
            if i + 1 < len(self.tail) and self.tail[i + 1] >= x:
                raise ValueError("tail must be strictly decreasing")

    @classmethod
    def from_floor_and_beads(cls, floor: int, beads) -> "BetaSet":
        """Canonicalize Z_{<floor} union beads (beads below floor are absorbed)."""
        pending = {x for x in beads if x >= floor}
        while floor in pending:
            pending.discard(floor)
            floor += 1
        return cls(floor, tuple(sorted(pending, reverse=True)))

    @property
    def charge(self) -> int:
        return self.floor + len(self.tail)

    def __contains__(self, x: int) -> bool:
        return x < self.floor or x in self.tail

    def shifted(self, d: int) -> "BetaSet":
        """The beta set {x + d : x in self}."""
        return BetaSet(self.floor + d, tuple(x + d for x in self.tail))


# ---------------------------------------------------------------------------
# hooks and cores by direct Young-diagram combinatorics

def hook_lengths(p: Partition) -> tuple[int, ...]:
    """The multiset of hook lengths of p, as a decreasing tuple.

    >>> hook_lengths(Partition((2, 1)))
    (3, 1, 1)
    """
    conj = p.conjugate().parts
    hooks = []
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            arm = row - j
            leg = conj[j - 1] - i
            hooks.append(arm + leg + 1)
    return tuple(sorted(hooks, reverse=True))


def is_e_core(p: Partition, e: int) -> bool:
    """True iff no hook length of p is divisible by e."""
    if e < 1:
        raise ValueError("e must be >= 1")
    return all(h % e != 0 for h in hook_lengths(p))


# ---------------------------------------------------------------------------
# charged partitions <-> beta sets

def to_beta(cp: ChargedPartition) -> BetaSet:
    """The beta set {parts[i] - (i+1) + charge : i >= 0} of a charged partition.

    >>> to_beta(ChargedPartition(Partition((2, 1)), 0))
    BetaSet(floor=-2, tail=(1, -1))
    """
    parts = cp.partition.parts
    s = cp.charge
    tail = tuple(parts[i] - (i + 1) + s for i in range(len(parts)))
    return BetaSet(s - len(parts), tail)


def from_beta(b: BetaSet) -> ChargedPartition:
    """Inverse of to_beta; the output charge equals charge(b)."""
    s = b.charge
    parts = tuple(x + i + 1 - s for i, x in enumerate(b.tail))
    return ChargedPartition(Partition(parts), s)


def split_beta(b: BetaSet, e: int) -> tuple[BetaSet, ...]:
    """Split a beta set into its e residue classes.

    Component i collects q values of beads x = e*q + i; the tuple of
    component charges sums to charge(b).
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    comps = []
    for i in range(e):
        floor_i = ceil_div(b.floor - i, e)
        beads = {(x - i) // e for x in b.tail if x % e == i}
        comps.append(BetaSet.from_floor_and_beads(floor_i, beads))
    return tuple(comps)


def join_beta(comps) -> BetaSet:
    """Inverse of split_beta: {e*q + i : q in comps[i]}."""
    comps = tuple(comps)
    if not comps:
        raise ValueError("need at least one component")
    e = len(comps)
    tmin = min(c.floor for c in comps)
    beads = set()
    for i, c in enumerate(comps):
        beads.update(e * x + i for x in c.tail)
        beads.update(e * q + i for q in range(tmin, c.floor))
    return BetaSet.from_floor_and_beads(e * tmin, beads)


# ---------------------------------------------------------------------------
# the charged core-quotient bijection

def split_charged(cp: ChargedPartition, e: int) -> ChargedMultiPartition:
    """Charged partition -> charged e-multipartition through the abacus.

    The total charge of the output equals the input charge.
    """
    comps = [from_beta(c) for c in split_beta(to_beta(cp), e)]
    return ChargedMultiPartition(
        tuple(c.partition for c in comps), tuple(c.charge for c in comps)
    )


def join_charged(cmp: ChargedMultiPartition) -> ChargedPartition:
    """Inverse of split_charged."""
    beta = join_beta(
        tuple(
            to_beta(ChargedPartition(p, s))
            for p, s in zip(cmp.components, cmp.charges)
        )
    )
    return from_beta(beta)


@lru_cache(maxsize=None)
def e_core(p: Partition, e: int) -> Partition:
    """The partition left after removing all rim e-hooks from p.

    Computed by emptying the quotient components of the abacus splitting;
    the result does not depend on the auxiliary charge.

    >>> e_core(Partition((3,)), 3)
    Partition(parts=())
    """
    cmp = split_charged(ChargedPartition(p, 0), e)
    emptied = ChargedMultiPartition(
        tuple(Partition(()) for _ in range(e)), cmp.charges
    )
    return join_charged(emptied).partition


@lru_cache(maxsize=None)
def e_quotient_charged(p: Partition, e: int, s: int) -> ChargedMultiPartition:
    """The charged e-quotient of p at charge e + s.

    The multipartition part carries the quotient and the charge part is the
    charge vector used downstream for residue keys and Hecke exponents.
    """
    return split_charged(ChargedPartition(p, e + s), e)


@lru_cache(maxsize=None)
def core_exponents(core: Partition, e: int) -> tuple[int, ...]:
    """The exponent vector (e*c_i + i) read off the quotient charges of an e-core.

    Entry i is e times the i-th charge of e_quotient_charged(core, e, length)
    plus i.  Rejects inputs that are not e-cores.

    >>> core_exponents(Partition(()), 2)
    (2, 3)
    >>> core_exponents(Partition((1,)), 2)
    (2, 5)
    """
    if not is_e_core(core, e):
        raise ValueError(f"{core.parts} is not a {e}-core")
    charges = e_quotient_charged(core, e, core.length).charges
    return tuple(e * c + i for i, c in enumerate(charges))


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in leading-part-descending order."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(parts) for parts in gen(n, n))


@lru_cache(maxsize=None)
def multipartitions_of(e: int, a: int) -> tuple[MultiPartition, ...]:
    """All e-tuples of partitions of total size a, in a fixed order."""
    if e < 1:
        raise ValueError("e must be >= 1")
    if a < 0:
        raise ValueError("a must be >= 0")
    if e == 1:
        return tuple((p,) for p in partitions_of(a))
    out = []
    for head in range(a, -1, -1):
        for p in partitions_of(head):
            for rest in multipartitions_of(e - 1, a - head):
                out.append((p,) + rest)
    return tuple(out)


# ---------------------------------------------------------------------------
# shared text formats ("3,1,1"; multipartitions joined with ";")

def parse_partition(text: str) -> Partition:
    """Parse "3,1,1"; the empty string denotes the empty partition."""
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition text {text!r}") from exc
    return Partition(parts)


def render_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts)


def parse_multipartition(text: str) -> MultiPartition:
    """Parse components joined with ";" (";1" parses as (empty, (1)))."""
    return tuple(parse_partition(tok) for tok in text.split(";"))


def render_multipartition(mp: MultiPartition) -> str:
    return ";".join(render_partition(p) for p in mp)


def parse_charges(text: str) -> MultiCharge:
    text = text.strip()
    if not text:
        raise ValueError("empty charge list")
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad charge text {text!r}") from exc


def render_charges(charges: MultiCharge) -> str:
    return ",".join(str(c) for c in charges)


def all_boxes(mp: MultiPartition):
    """Yield (component index, row, column) over all boxes of a multipartition."""
    for j, p in enumerate(mp):
        for i, row_len in enumerate(p.parts, start=1):
            for col in range(1, row_len + 1):
                yield (j, i, col)


def syt_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p, by the hook formula."""
    hooks = hook_lengths(p)
    num = 1
    for k in range(2, p.size + 1):
        num *= k
    den = 1
    for h in hooks:
        den *= h
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("hook formula did not divide evenly")
    return q


def multinomial(sizes) -> int:
    """Multinomial coefficient (sum sizes)! / prod sizes!."""
    total = 0
    result = 1
    for k in sizes:
        for i in range(1, k + 1):
            total += 1
            result = result * total // i
    return result
