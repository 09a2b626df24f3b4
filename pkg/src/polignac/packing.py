"""Density bound formulas and constructive packings of difference sets.

Two constructions are provided: a first-fit greedy over regular admissible
sets of size k, and a size-3 family built from a zero-padded assignment of
multiples of 6 to even anchors. Finite-interval upper bounds cap what any
disjoint family of size-3 difference sets can achieve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .admissible import AdmissibleTuple, DiffSet, is_admissible
from .sieve import primorial

THEOREM2_LOWER = "theorem2_lower"
TRIVIAL_UPPER = "trivial_upper"
K3_UPPER_ASYMPTOTIC = "k3_upper_asymptotic"

PAPER_LITERAL = "paper_literal"
EXTENDED = "extended"
GEH_STRATEGIES = (PAPER_LITERAL, EXTENDED)


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class DensityBound:
    kind: str
    k: int
    value: Fraction


@dataclass(frozen=True)
class PackingCertificate:
    """A pairwise-disjoint family of difference sets inside [1, x].

    ``raw_count`` is the number of candidates generated before the
    span/disjointness filters; it equals ``count`` when nothing was dropped.
    """

    k: int
    x: int
    members: tuple[tuple[str, DiffSet], ...]
    raw_count: int
    covered: frozenset[int] = field(init=False)

    def __post_init__(self) -> None:
        union: set[int] = set()
        for _, ds in self.members:
            union |= ds.values
        object.__setattr__(self, "covered", frozenset(union))

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def density(self) -> Fraction:
        return Fraction(self.count, self.x)

    def validate(self) -> None:
        """Re-check every certificate invariant; raise on any violation."""
        if self.count > self.raw_count:
            raise InvariantViolation("count exceeds raw_count")
        total = 0
        for label, ds in self.members:
            if not ds.values:
                raise InvariantViolation(f"member {label} is empty")
            if min(ds.values) < 1 or ds.span > self.x:
                raise InvariantViolation(f"member {label} not contained in [1, {self.x}]")
            total += len(ds.values)
        if total != len(self.covered):
            raise InvariantViolation("members are not pairwise disjoint")


@dataclass(frozen=True)
class GehAssignment:
    """Zero-padded decreasing assignment of the multiples of 6 in [6, x-2].

    Slot i holds 0 when 3 | i; the remaining slots hold the multiples of 6
    in strictly decreasing order, pairing slot i with the i-th largest.
    """

    x: int
    sequence: tuple[int, ...]
    strategy: str

    @property
    def slots(self) -> int:
        return len(self.sequence)


def lower_bound_density(k: int) -> DensityBound:
    """Guaranteed packing density 2 / ((k-1)((k-1)(k-2)+2) P(k))."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    value = Fraction(2, (k - 1) * ((k - 1) * (k - 2) + 2) * primorial(k))
    return DensityBound(THEOREM2_LOWER, k, value)


def trivial_upper_bound_density(k: int) -> DensityBound:
    """Cap 1 / (2(k-1)): each difference set needs k-1 distinct even values."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return DensityBound(TRIVIAL_UPPER, k, Fraction(1, 2 * (k - 1)))


def k3_upper_bound_density() -> DensityBound:
    """Asymptotic cap 7/36 for disjoint size-3 difference set families."""
    return DensityBound(K3_UPPER_ASYMPTOTIC, 3, Fraction(7, 36))


def regular_overlap(k: int, n: int, m: int) -> bool:
    """Whether the regular difference sets at indices n < m intersect.

    Equivalent to the existence of 1 <= i < j <= k-1 with i*m = j*n.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if n >= m:
        raise ValueError(f"need n < m, got n={n}, m={m}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return any(i * m == j * n for j in range(2, k) for i in range(1, j))


def greedy_regular_packing(k: int, x: int) -> PackingCertificate:
    """First-fit over n = 1, 2, ...: keep each regular difference set that is
    disjoint from everything kept so far.

    Candidates are exactly the n with (k-1) n P(k) <= x, so every kept set
    lies in [1, x] by construction.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if x < 1:
        raise ValueError(f"x must be positive, got {x}")
    step = primorial(k)
    n_max = x // ((k - 1) * step)
    used: set[int] = set()
    members = []
    for n in range(1, n_max + 1):
        values = frozenset(i * n * step for i in range(1, k))
        if used.isdisjoint(values):
            used |= values
            members.append((f"n={n}", DiffSet(values)))
    return PackingCertificate(k, x, tuple(members), raw_count=n_max)


def greedy_counting_floor(k: int, x: int) -> int:
    """Guaranteed minimum size of the greedy packing, with unit slack for
    the bounded correction term: floor(2 floor(x/((k-1)P(k))) / ((k-1)(k-2)+2)) - 1."""
    n_max = x // ((k - 1) * primorial(k))
    return 2 * n_max // ((k - 1) * (k - 2) + 2) - 1


def geh_assignment(x: int, strategy: str = EXTENDED) -> GehAssignment:
    """Build the zero-padded sequence backing the size-3 construction."""
    if strategy not in GEH_STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    count = (x - 2) // 6 if x >= 8 else 0
    if count == 0:
        return GehAssignment(x, (), strategy)
    # Smallest slot count whose non-multiple-of-3 positions number exactly `count`.
    slots = 3 * ((count - 1) // 2) + 1 + (count - 1) % 2
    sequence = []
    for i in range(1, slots + 1):
        if i % 3 == 0:
            sequence.append(0)
        else:
            rank = i - i // 3
            sequence.append(6 * (count - rank + 1))
    return GehAssignment(x, tuple(sequence), strategy)


def geh_family(x: int, strategy: str = EXTENDED) -> PackingCertificate:
    """Size-3 packing from patterns {0, 2n, 2n + a_n} with 3 not dividing n.

    The literal range stops at n <= floor(x/6); the extended range uses every
    non-zero slot of the assignment. Candidates whose span exceeds x are
    dropped, admissibility of each survivor is verified, and disjointness is
    enforced by first-fit filtering in increasing n.
    """
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    assignment = geh_assignment(x, strategy)
    n_max = min(x // 6, assignment.slots) if strategy == PAPER_LITERAL else assignment.slots
    raw_count = 0
    used: set[int] = set()
    members = []
    for n in range(1, n_max + 1):
        if n % 3 == 0:
            continue
        a = assignment.sequence[n - 1]
        if a == 0:
            continue
        raw_count += 1
        top = 2 * n + a
        if top > x:
            continue
        pattern = AdmissibleTuple((0, 2 * n, top))
        if not is_admissible(pattern):
            raise InvariantViolation(f"generated pattern {pattern.offsets} is not admissible")
        values = frozenset({2 * n, a, top})
        if used.isdisjoint(values):
            used |= values
            members.append((f"n={n}", DiffSet(values)))
    return PackingCertificate(3, x, tuple(members), raw_count=raw_count)


def k3_finite_upper_bound(x: int) -> int:
    """Exact cap on any disjoint family of size-3 difference sets in [1, x].

    All such difference sets are even; two-element sets are multiples of 6
    (at most floor(x/12) of them) and the rest use three even values each.
    """
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    regular = x // 12
    return regular + (x // 2 - 2 * regular) // 3
