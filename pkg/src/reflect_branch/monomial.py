"""G(de,e,r) as symbolic monomial matrices: permutation plus exponent vector.

An element g = (perm, exps) sends basis vector v_i to zeta^exps[i] *
v_perm[i] for a fixed primitive m-th root of unity zeta, m = d*e.  Roots of
unity are never evaluated; exponents live in Z/m.  Membership requires the
total exponent to vanish mod e (the product of the matrix entries is then
an m/e-th root of unity), which carves out the index-e subgroup of the full
wreath-type group.
"""

from __future__ import annotations

from itertools import permutations, product
from math import lcm
from typing import NamedTuple

from .caps import CapExceeded, group_cap
from .irreps import GroupParams


class MonomialElement(NamedTuple):
    perm: tuple[int, ...]
    exps: tuple[int, ...]


def parabolic_embed(g: MonomialElement, upper: GroupParams) -> MonomialElement:
    """Embed fixing the last coordinate: perm fixes r, exps extended by 0."""
    r = upper.r - 1
    if len(g.perm) != r:
        raise ValueError(f"element has rank {len(g.perm)}, expected {r}")
    return MonomialElement(g.perm + (r,), g.exps + (0,))


def format_element(g: MonomialElement) -> str:
    """Debug form "(cycles; exps)", e.g. "((0 1); [1,2])"."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(g.perm)):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = g.perm[x]
        if len(cyc) > 1:
            cycles.append("(" + " ".join(str(v) for v in cyc) + ")")
    cycle_text = "".join(cycles) or "()"
    return f"({cycle_text}; [{','.join(str(a) for a in g.exps)}])"


class MonomialGroup:
    """Element arithmetic, enumeration and conjugacy classes of G(de,e,r)."""

    def __init__(self, params: GroupParams):
        self.params = params
        self.m = params.m
        self.e = params.e
        self.r = params.r
        self._elements: list[MonomialElement] | None = None
        self._index: dict[MonomialElement, int] | None = None
        self._classes: list[list[int]] | None = None
        self._class_of: list[int] | None = None

    # -- arithmetic --------------------------------------------------------

    def identity(self) -> MonomialElement:
        return MonomialElement(tuple(range(self.r)), (0,) * self.r)

    def is_member(self, g: MonomialElement) -> bool:
        return (
            len(g.perm) == self.r
            and sorted(g.perm) == list(range(self.r))
            and all(0 <= a < self.m for a in g.exps)
            and sum(g.exps) % self.e == 0
        )

    def multiply(self, g: MonomialElement, h: MonomialElement) -> MonomialElement:
        if len(g.perm) != len(h.perm):
            raise ValueError("rank mismatch")
        perm = tuple(g.perm[h.perm[i]] for i in range(self.r))
        exps = tuple((h.exps[i] + g.exps[h.perm[i]]) % self.m for i in range(self.r))
        return MonomialElement(perm, exps)

    def inverse(self, g: MonomialElement) -> MonomialElement:
        inv_perm = [0] * self.r
        for i, image in enumerate(g.perm):
            inv_perm[image] = i
        exps = tuple((-g.exps[inv_perm[i]]) % self.m for i in range(self.r))
        return MonomialElement(tuple(inv_perm), exps)

    def conjugate(self, g: MonomialElement, h: MonomialElement) -> MonomialElement:
        return self.multiply(self.multiply(g, h), self.inverse(g))

    def element_order(self, g: MonomialElement) -> int:
        identity = self.identity()
        x, order = g, 1
        while x != identity:
            x = self.multiply(x, g)
            order += 1
        return order

    # -- enumeration -------------------------------------------------------

    def order(self) -> int:
        return self.params.order()

    def elements(self, cap: int | None = None) -> list[MonomialElement]:
        if self._elements is not None:
            return self._elements
        order = self.order()
        limit = group_cap(cap)
        if order > limit:
            raise CapExceeded(f"{self.params} has order {order} > cap {limit}")
        m, e, r = self.m, self.e, self.r
        out = []
        if r == 0:
            out.append(MonomialElement((), ()))
        else:
            tails_by_residue = {
                res: [t for t in range(m) if (t + res) % e == 0] for res in range(e)
            }
            for perm in permutations(range(r)):
                for head in product(range(m), repeat=r - 1):
                    res = sum(head) % e
                    for tail in tails_by_residue[res]:
                        out.append(MonomialElement(perm, head + (tail,)))
        if len(out) != order:
            raise RuntimeError(
                f"internal invariant violation: enumerated {len(out)} elements, "
                f"expected {order}"
            )
        self._elements = out
        self._index = {g: i for i, g in enumerate(out)}
        return out

    def index_of(self, g: MonomialElement) -> int:
        self.elements()
        assert self._index is not None
        return self._index[g]

    def generators(self) -> list[MonomialElement]:
        m, e, r = self.m, self.e, self.r
        gens = []
        for i in range(r - 1):
            perm = list(range(r))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            gens.append(MonomialElement(tuple(perm), (0,) * r))
        if r >= 2 and m >= 2:
            exps = [0] * r
            exps[0], exps[1] = 1, m - 1
            gens.append(MonomialElement(tuple(range(r)), tuple(exps)))
        if r >= 1 and e < m:
            exps = [0] * r
            exps[0] = e
            gens.append(MonomialElement(tuple(range(r)), tuple(exps)))
        return gens

    # -- conjugacy ---------------------------------------------------------

    def conjugacy_classes(self, cap: int | None = None) -> list[list[int]]:
        """Partition of the element list into conjugation orbits (index lists)."""
        if self._classes is not None:
            return self._classes
        elements = self.elements(cap)
        index = self._index
        assert index is not None
        gens = self.generators()
        gen_invs = [self.inverse(g) for g in gens]
        class_of = [-1] * len(elements)
        classes = []
        for start in range(len(elements)):
            if class_of[start] != -1:
                continue
            cid = len(classes)
            pending = [start]
            class_of[start] = cid
            members = []
            while pending:
                i = pending.pop()
                members.append(i)
                x = elements[i]
                for g, ginv in zip(gens, gen_invs):
                    y = self.multiply(self.multiply(g, x), ginv)
                    j = index[y]
                    if class_of[j] == -1:
                        class_of[j] = cid
                        pending.append(j)
            classes.append(sorted(members))
        self._classes = classes
        self._class_of = class_of
        return classes

    def class_of(self, g: MonomialElement) -> int:
        self.conjugacy_classes()
        assert self._class_of is not None
        return self._class_of[self.index_of(g)]

    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        classes = self.conjugacy_classes()
        elements = self.elements()
        out = 1
        for cls in classes:
            out = lcm(out, self.element_order(elements[cls[0]]))
        return out
