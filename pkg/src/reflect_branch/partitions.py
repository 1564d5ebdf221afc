"""Integer partitions: size, lexicographic order, one-box covers, tableau counts.

Partitions are plain tuples of weakly decreasing positive integers, stored
without trailing zeros so tuple equality and hashing are canonical.
"""

from __future__ import annotations

from functools import cache
from math import factorial

Partition = tuple[int, ...]


def check_partition(parts) -> Partition:
    """Validate and normalize a sequence into a partition tuple."""
    p = tuple(int(x) for x in parts)
    for i, part in enumerate(p):
        if part < 1:
            raise ValueError(f"partition parts must be positive: {parts!r}")
        if i > 0 and p[i - 1] < part:
            raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
    return p


def size(p: Partition) -> int:
    return sum(p)


def lex_compare(p: Partition, q: Partition) -> int:
    """Position-wise comparison, absent parts read as 0. Returns -1, 0 or 1."""
    for a, b in zip(p, q):
        if a != b:
            return -1 if a < b else 1
    if len(p) == len(q):
        return 0
    return -1 if len(p) < len(q) else 1


def covers(p: Partition, q: Partition) -> bool:
    """True iff q is p with one extra box: p_i <= q_i everywhere, |q| = |p| + 1.

    Computed by the direct definition; the removable-corner search in
    one_box_removals is validated against this in the test suite.
    """
    if size(q) != size(p) + 1:
        return False
    if len(p) > len(q):
        return False
    return all(a <= b for a, b in zip(p, q))


def one_box_removals(q: Partition) -> list[Partition]:
    """All partitions p with covers(p, q), via removable corners."""
    out = []
    for i in range(len(q)):
        below = q[i + 1] if i + 1 < len(q) else 0
        if q[i] > below:
            if q[i] == 1:
                out.append(q[:i])
            else:
                out.append(q[:i] + (q[i] - 1,) + q[i + 1:])
    return out


def one_box_additions(p: Partition) -> list[Partition]:
    """All partitions q with covers(p, q), via addable corners."""
    out = []
    for i in range(len(p)):
        above = p[i - 1] if i > 0 else None
        if above is None or above > p[i]:
            out.append(p[:i] + (p[i] + 1,) + p[i + 1:])
    out.append(p + (1,))
    return out


@cache
def syt_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p (hook length formula)."""
    n = size(p)
    if n == 0:
        return 1
    hook_product = 1
    for i in range(len(p)):
        for j in range(p[i]):
            arm = p[i] - j - 1
            leg = sum(1 for row in p[i + 1:] if row > j)
            hook_product *= arm + leg + 1
    return factorial(n) // hook_product


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, sorted ascending in the lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)

    def gen(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n)))


def format_partition(p: Partition) -> str:
    """Text form "[3,2]"; "[]" for the empty partition."""
    return "[" + ",".join(str(x) for x in p) + "]"


def parse_partition(text: str) -> Partition:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"not a partition literal: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return check_partition(int(x) for x in body.split(","))
