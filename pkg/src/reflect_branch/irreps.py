"""Labels for the irreducible representations of G(de,e,r).

An irreducible of the wreath-type group G(m,1,r), m = d*e, is coded by an
m-tuple of partitions of total size r (a multipartition).  The index-e
normal subgroup G(de,e,r) sees that tuple only up to rotation by multiples
of d, and each rotation class carries as many irreducibles as the order of
its rotation stabilizer inside the step-d subgroup.  An IrrepLabel is such
a rotation class plus a constituent tag j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial, lcm

from .partitions import Partition, format_partition, parse_partition, size, syt_count, partitions_of

MultiPartition = tuple[Partition, ...]


@dataclass(frozen=True)
class GroupParams:
    """Parameters (d, e, r) of the monomial reflection group G(de,e,r)."""

    d: int
    e: int
    r: int

    def __post_init__(self):
        if self.d < 1 or self.e < 1:
            raise ValueError(f"d and e must be positive: d={self.d}, e={self.e}")
        if self.r < 0:
            raise ValueError(f"rank must be nonnegative: r={self.r}")

    @property
    def m(self) -> int:
        return self.d * self.e

    def order(self) -> int:
        if self.r == 0:
            return 1
        return self.m**self.r * factorial(self.r) // self.e

    def lower(self) -> "GroupParams":
        if self.r == 0:
            raise ValueError("rank 0 has no parabolic subgroup")
        return GroupParams(self.d, self.e, self.r - 1)

    def __str__(self) -> str:
        return f"G({self.m},{self.e},{self.r})"


@dataclass(frozen=True)
class OrbitLabel:
    """Rotation class of a multipartition under the step-d subgroup.

    canonical is the minimum of the class, stabilizer_order divides e and
    orbit_size * stabilizer_order = e.
    """

    canonical: MultiPartition
    stabilizer_order: int
    orbit_size: int


@dataclass(frozen=True)
class IrrepLabel:
    orbit: OrbitLabel
    j: int


def total_size(c: MultiPartition) -> int:
    return sum(size(p) for p in c)


def rotate_multipartition(c: MultiPartition, k: int) -> MultiPartition:
    m = len(c)
    k %= m
    if k == 0:
        return c
    return c[-k:] + c[:-k]


@cache
def multipartitions(r: int, m: int) -> tuple[MultiPartition, ...]:
    """All m-tuples of partitions of total size r, sorted."""
    if m < 1:
        raise ValueError("need at least one slot")

    def gen(slots: int, remaining: int):
        if slots == 1:
            for p in partitions_of(remaining):
                yield (p,)
            return
        for here in range(remaining + 1):
            for p in partitions_of(here):
                for rest in gen(slots - 1, remaining - here):
                    yield (p,) + rest

    return tuple(sorted(gen(m, r)))


def gamma_prime_orbit(c: MultiPartition, params: GroupParams) -> list[MultiPartition]:
    """The rotation class of c under rotations by multiples of d."""
    return sorted({rotate_multipartition(c, t * params.d) for t in range(params.e)})


def orbit_label(c: MultiPartition, params: GroupParams) -> OrbitLabel:
    if len(c) != params.m:
        raise ValueError(f"multipartition has {len(c)} slots, expected m={params.m}")
    if params.r == 0:
        # Rank 0 is the trivial group with a single representation; the
        # cyclic-quotient splitting machinery is degenerate there.
        return OrbitLabel(canonical=c, stabilizer_order=1, orbit_size=params.e)
    stab = sum(
        1 for t in range(params.e) if rotate_multipartition(c, t * params.d) == c
    )
    orbit = gamma_prime_orbit(c, params)
    assert stab * len(orbit) == params.e
    return OrbitLabel(canonical=orbit[0], stabilizer_order=stab, orbit_size=len(orbit))


def enumerate_irreps(params: GroupParams) -> list[IrrepLabel]:
    """One label per irreducible of G(de,e,r), deterministically ordered."""
    labels = []
    seen: set[MultiPartition] = set()
    for c in multipartitions(params.r, params.m):
        if c in seen:
            continue
        lab = orbit_label(c, params)
        seen.update(gamma_prime_orbit(c, params))
        for j in range(lab.stabilizer_order):
            labels.append(IrrepLabel(orbit=lab, j=j))
    labels.sort(key=lambda L: (L.orbit.canonical, L.j))
    return labels


def dim(label: IrrepLabel, params: GroupParams) -> int:
    """Dimension: the wreath-type dimension of the class, split evenly."""
    c = label.orbit.canonical
    r = total_size(c)
    if r != params.r:
        raise ValueError(f"label has total size {r}, group has rank {params.r}")
    multinomial = factorial(r)
    for p in c:
        multinomial //= factorial(size(p))
    full = multinomial
    for p in c:
        full *= syt_count(p)
    s = label.orbit.stabilizer_order
    if full % s != 0:
        raise RuntimeError(
            f"internal invariant violation: dimension {full} not divisible "
            f"by stabilizer order {s}"
        )
    return full // s


def extends_to_full(label: IrrepLabel) -> bool:
    """True iff the label is the restriction of a single irreducible of the
    covering group G(de,1,r), i.e. its splitting is trivial."""
    return label.orbit.stabilizer_order == 1


def tensor_by_epsilon(c: MultiPartition, params: GroupParams) -> MultiPartition:
    """Twist by the linear character cutting out G(de,e,r): rotation by d."""
    return rotate_multipartition(c, params.d)


def stabilizer_order_arith(c: MultiPartition, params: GroupParams) -> int:
    """Stabilizer order via subgroup arithmetic; cross-check for orbit_label."""
    if params.r == 0:
        return 1
    m = params.m
    a = next(g for g in range(1, m + 1) if m % g == 0 and rotate_multipartition(c, g) == c)
    return m // lcm(a, params.d)


def format_multipartition(c: MultiPartition) -> str:
    return ",".join(format_partition(p) for p in c)


def format_irrep_label(label: IrrepLabel) -> str:
    """Text form "<canonical>#j", e.g. "[1],[1],[]#0"."""
    return f"{format_multipartition(label.orbit.canonical)}#{label.j}"


def parse_multipartition(text: str) -> MultiPartition:
    parts = []
    depth = 0
    start = 0
    s = text.strip()
    for i, ch in enumerate(s):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(s[start:i])
            start = i + 1
    parts.append(s[start:])
    return tuple(parse_partition(p) for p in parts)
