"""Necklaces: functions from a free cyclic Z/n-set to an ornament alphabet.

A NecklaceSystem is a disjoint union of regular Z/n-orbits ("orbits"), all
rotated simultaneously.  Ornaments are arbitrary hashable values; where an
operation needs an order (is_child, children, twins) the ornaments must be
comparable, and for step_relation they must be partition tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Any, Hashable, Iterable

from .partitions import covers, one_box_removals

Ornament = Hashable


@dataclass(frozen=True)
class NecklaceSystem:
    orbits: tuple[tuple[Ornament, ...], ...]

    def __post_init__(self):
        if not self.orbits:
            raise ValueError("a necklace system needs at least one orbit")
        n = len(self.orbits[0])
        if n < 1:
            raise ValueError("orbit length must be positive")
        if any(len(o) != n for o in self.orbits):
            raise ValueError("all orbits must have the same length")

    @property
    def n(self) -> int:
        return len(self.orbits[0])

    @property
    def positions(self) -> list[tuple[int, int]]:
        return [(o, i) for o in range(len(self.orbits)) for i in range(self.n)]

    def value(self, pos: tuple[int, int]) -> Ornament:
        o, i = pos
        return self.orbits[o][i]


def necklace(values: Iterable[Ornament]) -> NecklaceSystem:
    """Single-orbit system from a value sequence."""
    return NecklaceSystem((tuple(values),))


def system(*orbits: Iterable[Ornament]) -> NecklaceSystem:
    return NecklaceSystem(tuple(tuple(o) for o in orbits))


def rotate(s: NecklaceSystem, k: int) -> NecklaceSystem:
    """Simultaneous rotation: result(i) = original(i - k mod n) in each orbit."""
    n = s.n
    k %= n
    if k == 0:
        return s
    return NecklaceSystem(tuple(o[-k:] + o[:-k] for o in s.orbits))


def aut(s: NecklaceSystem) -> int:
    """Stabilizer subgroup of Z/n, encoded by its least positive generator.

    The subgroup is { 0, g, 2g, ... } for the returned divisor g of n;
    g == n encodes the trivial stabilizer, g == 1 the full group.
    """
    n = s.n
    for g in range(1, n + 1):
        if n % g == 0 and rotate(s, g) == s:
            return g
    raise AssertionError("unreachable: n always stabilizes")


def aut_contains(s: NecklaceSystem, k: int) -> bool:
    return k % aut(s) == 0


def diff_positions(a: NecklaceSystem, b: NecklaceSystem) -> list[tuple[int, int]]:
    if len(a.orbits) != len(b.orbits) or a.n != b.n:
        raise ValueError("incomparable necklace systems: shapes differ")
    return [
        (o, i)
        for o in range(len(a.orbits))
        for i in range(a.n)
        if a.orbits[o][i] != b.orbits[o][i]
    ]


def perp(a: NecklaceSystem, b: NecklaceSystem) -> bool:
    """True iff a and b differ in exactly one position."""
    return len(diff_positions(a, b)) == 1


def is_child(a: NecklaceSystem, c: NecklaceSystem) -> bool:
    """True iff perp(a, c) and a(x) <= c(x) everywhere (ordered ornaments)."""
    diffs = diff_positions(a, c)
    if len(diffs) != 1:
        return False
    o, i = diffs[0]
    return a.orbits[o][i] <= c.orbits[o][i]


def step_relation(a: NecklaceSystem, c: NecklaceSystem) -> bool:
    """One-box step for partition ornaments: perp plus covers at the change."""
    diffs = diff_positions(a, c)
    if len(diffs) != 1:
        return False
    o, i = diffs[0]
    low, high = a.orbits[o][i], c.orbits[o][i]
    if not (isinstance(low, tuple) and isinstance(high, tuple)):
        raise TypeError("step_relation needs partition ornaments")
    return covers(low, high)


def _replace(s: NecklaceSystem, pos: tuple[int, int], value: Ornament) -> NecklaceSystem:
    o, i = pos
    orbit = s.orbits[o]
    return NecklaceSystem(
        s.orbits[:o] + (orbit[:i] + (value,) + orbit[i + 1:],) + s.orbits[o + 1:]
    )


def children(c: NecklaceSystem, alphabet: Iterable[Ornament] | None = None) -> set[NecklaceSystem]:
    """All one-position fades of c.

    With an alphabet, a child replaces one ornament by a strictly smaller
    letter.  Without one the ornaments must be partitions and a child removes
    one box (the one-box step relation).
    """
    out: set[NecklaceSystem] = set()
    if alphabet is not None:
        letters = sorted(set(alphabet))
        for pos in c.positions:
            current = c.value(pos)
            for y in letters:
                if y < current:
                    out.add(_replace(c, pos, y))
    else:
        for pos in c.positions:
            for smaller in one_box_removals(c.value(pos)):
                out.add(_replace(c, pos, smaller))
    return out


def twins(
    c: NecklaceSystem, alphabet: Iterable[Ornament] | None = None
) -> set[tuple[NecklaceSystem, NecklaceSystem]]:
    """Unordered pairs of distinct children related by a rotation outside aut(c)."""
    kids = children(c, alphabet)
    autg = aut(c)
    pairs: set[tuple[NecklaceSystem, NecklaceSystem]] = set()
    for a, b in combinations(sorted(kids, key=_sort_key), 2):
        for k in range(1, c.n):
            if k % autg == 0:
                continue
            if rotate(a, k) == b or rotate(b, k) == a:
                pairs.add((a, b))
                break
    return pairs


def _sort_key(s: NecklaceSystem) -> Any:
    return s.orbits


def canonical_rotation(s: NecklaceSystem, step: int = 1) -> NecklaceSystem:
    """Minimal rotation of s over rotations by multiples of step."""
    n = s.n
    step %= n
    if step == 0:
        return s
    count = n // gcd(step, n)
    return min((rotate(s, t * step) for t in range(count)), key=_sort_key)


def interval(v: int, u: int, step: int, n: int) -> tuple[int, ...]:
    """Positions v, v+step, ..., u inside Z/n; u must lie on the step-orbit of v."""
    step %= n
    order = n // gcd(step, n) if step else 1
    out = [v % n]
    x = v % n
    for _ in range(order):
        if x == u % n:
            return tuple(out)
        x = (x + step) % n
        out.append(x)
    raise ValueError(f"{u} is not on the step-{step} orbit of {v} in Z/{n}")


def format_necklace(s: NecklaceSystem, fmt=str) -> str:
    """Text form: orbits separated by "|", positions by ",", e.g. "A,B,A|C,C,C"."""
    return "|".join(",".join(fmt(x) for x in orbit) for orbit in s.orbits)
