"""Symmetry breaking on finite groups: changing one value of a function on G
with a nontrivial stabilizer always yields a function with trivial stabilizer.

Functions G -> pearls carry the action (g.f)(h) = f(g^{-1} h).  A function
has a nontrivial stabilizer exactly when it factors through a coset space
H\\G for some nontrivial subgroup H, so the verifier enumerates colorings of
coset spaces instead of the full pearl-power space.
"""

from __future__ import annotations

from itertools import product

from .laws import LawReport


class FiniteGroup:
    """Group given by a Cayley table on indices 0..order-1, identity at 0.

    Associativity, the identity law and inverses are checked on the full
    table at construction.
    """

    def __init__(self, name: str, table):
        self.name = name
        self.table = tuple(tuple(row) for row in table)
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise ValueError("Cayley table must be square")
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError("index 0 must be the identity")
        for row in self.table:
            if sorted(row) != list(range(n)):
                raise ValueError("rows must be permutations")
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    if self.table[ij][k] != self.table[i][self.table[j][k]]:
                        raise ValueError(f"associativity fails at ({i},{j},{k})")
        inverse = [-1] * n
        for i in range(n):
            for j in range(n):
                if self.table[i][j] == 0:
                    if self.table[j][i] != 0:
                        raise ValueError(f"one-sided inverse at {i}")
                    inverse[i] = j
        if -1 in inverse:
            raise ValueError("missing inverse")
        self.inverse = tuple(inverse)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


# ---------------------------------------------------------------------------
# Builtin families.
# ---------------------------------------------------------------------------

def _from_elements(name, elements, mul):
    index = {el: i for i, el in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(name, table)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(f"Z{n}", [[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product_of_cyclics(a: int, b: int) -> FiniteGroup:
    elements = [(x, y) for x in range(a) for y in range(b)]
    return _from_elements(
        f"Z{a}xZ{b}", elements,
        lambda g, h: ((g[0] + h[0]) % a, (g[1] + h[1]) % b),
    )


def dihedral_group(n: int) -> FiniteGroup:
    """Order 2n; elements (i, j) standing for rotation^i * flip^j."""
    elements = [(i, j) for j in range(2) for i in range(n)]
    def mul(g, h):
        i1, j1 = g
        i2, j2 = h
        return ((i1 + (i2 if j1 == 0 else -i2)) % n, (j1 + j2) % 2)
    return _from_elements(f"D{n}", elements, mul)


def quaternion_group() -> FiniteGroup:
    units = [
        (1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
        (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1),
    ]
    def mul(g, h):
        a1, b1, c1, d1 = g
        a2, b2, c2, d2 = h
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    return _from_elements("Q8", units, mul)


def builtin_groups(max_order: int) -> list[FiniteGroup]:
    """Cyclics, products of two cyclics, dihedrals, and the quaternions,
    of order up to max_order (at most 24)."""
    if max_order > 24:
        raise ValueError("builtin families are provided up to order 24")
    out = []
    for n in range(1, max_order + 1):
        out.append(cyclic_group(n))
    for a in range(2, max_order + 1):
        for b in range(a, max_order + 1):
            if a * b <= max_order:
                out.append(direct_product_of_cyclics(a, b))
    for n in range(3, max_order // 2 + 1):
        out.append(dihedral_group(n))
    if max_order >= 8:
        out.append(quaternion_group())
    return out


# ---------------------------------------------------------------------------
# Subgroups, stabilizers, and the breaking sweep.
# ---------------------------------------------------------------------------

def subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups, by closing generating sets one element at a time."""
    def close(seed: frozenset[int]) -> frozenset[int]:
        elems = set(seed) | {0}
        frontier = list(elems)
        while frontier:
            x = frontier.pop()
            for y in list(elems):
                for z in (g.mul(x, y), g.mul(y, x)):
                    if z not in elems:
                        elems.add(z)
                        frontier.append(z)
            inv = g.inverse[x]
            if inv not in elems:
                elems.add(inv)
                frontier.append(inv)
        return frozenset(elems)

    found = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        base = frontier.pop()
        for x in range(g.order):
            if x in base:
                continue
            bigger = close(base | {x})
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def stabilizer(g: FiniteGroup, coloring: tuple[int, ...]) -> frozenset[int]:
    """Direct definition: {h : coloring(h^{-1} x) = coloring(x) for all x}."""
    out = set()
    for h in range(g.order):
        hinv = g.inverse[h]
        if all(coloring[g.mul(hinv, x)] == coloring[x] for x in range(g.order)):
            out.add(h)
    return frozenset(out)


def stabilizer_via_cosets(g: FiniteGroup, coloring: tuple[int, ...]) -> frozenset[int]:
    """Same subgroup, via constancy on the left-translation orbits of each
    candidate element; used as a cross-check of stabilizer()."""
    out = set()
    for h in range(g.order):
        ok = True
        seen = [False] * g.order
        for start in range(g.order):
            if seen[start]:
                continue
            x = start
            while not seen[x]:
                seen[x] = True
                if coloring[x] != coloring[start]:
                    ok = False
                x = g.mul(h, x)
            if not ok:
                break
        if ok:
            out.add(h)
    return frozenset(out)


def _has_nontrivial_stabilizer(g: FiniteGroup, coloring: tuple[int, ...]) -> bool:
    for h in range(1, g.order):
        hinv = g.inverse[h]
        if all(coloring[g.mul(hinv, x)] == coloring[x] for x in range(g.order)):
            return True
    return False


def symmetric_colorings(g: FiniteGroup, pearl_count: int) -> list[tuple[int, ...]]:
    """All functions G -> pearls with a nontrivial stabilizer: the pullbacks
    of pearl assignments on H\\G over all nontrivial subgroups H."""
    out: set[tuple[int, ...]] = set()
    for sub in subgroups(g):
        if len(sub) == 1:
            continue
        orbit_of = [-1] * g.order
        orbit_count = 0
        for start in range(g.order):
            if orbit_of[start] != -1:
                continue
            for h in sub:
                orbit_of[g.mul(h, start)] = orbit_count
            orbit_count += 1
        for assignment in product(range(pearl_count), repeat=orbit_count):
            out.add(tuple(assignment[orbit_of[x]] for x in range(g.order)))
    return sorted(out)


def check_symmetry_breaking(g: FiniteGroup, pearl_count: int) -> LawReport:
    """For every coloring with a nontrivial stabilizer, every single-position
    change produces a coloring with trivial stabilizer."""
    if pearl_count < 2:
        raise ValueError("need at least 2 pearls")
    report = LawReport(f"symmetry-breaking:{g.name}", 0)
    for coloring in symmetric_colorings(g, pearl_count):
        for position in range(g.order):
            for value in range(pearl_count):
                if value == coloring[position]:
                    continue
                report.space += 1
                changed = (
                    coloring[:position] + (value,) + coloring[position + 1:]
                )
                if _has_nontrivial_stabilizer(g, changed):
                    report.counterexamples.append({
                        "group": g.name,
                        "coloring": list(coloring),
                        "position": position,
                        "value": value,
                        "stabilizer": sorted(stabilizer(g, changed)),
                        "reason": "changed coloring keeps a nontrivial stabilizer",
                    })
    return report
