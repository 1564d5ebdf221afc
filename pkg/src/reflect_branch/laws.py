"""Exhaustive bounded verifiers for the necklace rotation laws.

Each verifier sweeps its whole bounded search space and returns a LawReport
whose counterexample list is empty exactly when the law held everywhere.

The necklace verifiers do not materialize the full value-assignment space.
They first restrict to the systems that can possibly matter and check those
exhaustively; everything else is excluded by two elementary facts:

* if some single-change system a and its k-rotation both differ from c in
  exactly one position, then c and its own k-rotation differ in at most two
  positions (triangle inequality for the Hamming distance);
* a rotation permutes values, so c and its k-rotation never differ in
  exactly one position, and the near-periodic systems split each rotation
  cycle into at most two constant arcs.

Candidate systems are therefore the k-periodic ones plus the "two-arc"
ones, which are enumerated constructively.  The test suite revalidates this
reduction against naive full enumeration at small bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd, lcm

from .caps import CapExceeded, law_space_cap

Flat = tuple[int, ...]


@dataclass
class LawReport:
    law: str
    space: int
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "space": self.space,
            "counterexamples": self.counterexamples,
        }


# ---------------------------------------------------------------------------
# Flat representation helpers: a system over `orbits` regular Z/n-orbits is a
# tuple of length orbits*n, position p = orbit*n + i, rotated simultaneously.
# ---------------------------------------------------------------------------

def _shift(p: int, k: int, n: int) -> int:
    return (p // n) * n + (p % n + k) % n


def _rotate_flat(c: Flat, k: int, n: int) -> Flat:
    return tuple(c[_shift(p, -k, n)] for p in range(len(c)))


def _diffs(c: Flat, k: int, n: int) -> list[int]:
    """Positions where the k-rotation of c differs from c."""
    return [p for p in range(len(c)) if c[p] != c[_shift(p, -k, n)]]


def _aut_flat(c: Flat, n: int) -> int:
    for g in range(1, n + 1):
        if n % g == 0 and _rotate_flat(c, g, n) == c:
            return g
    raise AssertionError("unreachable")


def _replace(c: Flat, p: int, y: int) -> Flat:
    return c[:p] + (y,) + c[p + 1:]


def _cycles(n: int, orbits: int, k: int) -> list[list[int]]:
    """Orbits of the rotation-by-k subgroup, each in step order x, x+k, ..."""
    g = gcd(k, n)
    out = []
    for o in range(orbits):
        base = o * n
        for r in range(g):
            i, cyc = r, []
            for _ in range(n // g):
                cyc.append(base + i)
                i = (i + k) % n
            out.append(cyc)
    return out


def _format_flat(c: Flat, n: int) -> str:
    orbits = len(c) // n
    return "|".join(
        ",".join(str(x) for x in c[o * n:(o + 1) * n]) for o in range(orbits)
    )


def _periodic_candidates(n: int, orbits: int, alphabet: int, k: int):
    """All systems fixed by rotation-by-k (constant on every k-cycle)."""
    cycles = _cycles(n, orbits, k)
    size = n * orbits
    for values in product(range(alphabet), repeat=len(cycles)):
        c = [0] * size
        for cyc, v in zip(cycles, values):
            for p in cyc:
                c[p] = v
        yield tuple(c)


def _two_arc_candidates(n: int, orbits: int, alphabet: int, k: int):
    """All systems whose k-rotation differs from them in exactly two positions.

    Exactly one k-cycle carries two constant arcs with distinct values; every
    other cycle is constant.
    """
    cycles = _cycles(n, orbits, k)
    size = n * orbits
    length = n // gcd(k, n)
    if length < 2:
        return
    for special in range(len(cycles)):
        rest = cycles[:special] + cycles[special + 1:]
        seq = cycles[special]
        for t1, t2 in combinations(range(length), 2):
            for a in range(alphabet):
                for b in range(alphabet):
                    if a == b:
                        continue
                    for values in product(range(alphabet), repeat=len(rest)):
                        c = [0] * size
                        for cyc, v in zip(rest, values):
                            for p in cyc:
                                c[p] = v
                        for t, p in enumerate(seq):
                            c[p] = a if t1 <= t < t2 else b
                        yield tuple(c)


def _single_change_rotation_pairs(c: Flat, k: int, n: int, alphabet: int,
                                  diffs: list[int]) -> list[tuple[int, int]]:
    """All (x, y) with a = c[x -> y] and its k-rotation both one off from c.

    Requires diffs = _diffs(c, k, n) with len in {0, 2}; a position-p value of
    the rotated a equals c[p-k] off x+k and y at x+k, so the rotated system is
    one off from c iff the old mismatches collapse onto x+k.
    """
    out = []
    if not diffs:
        for x in range(len(c)):
            for y in range(alphabet):
                if y != c[x]:
                    out.append((x, y))
    elif len(diffs) == 2:
        for p in diffs:
            x = _shift(p, -k, n)
            y = c[p]
            if y != c[x]:
                out.append((x, y))
    else:
        raise AssertionError("candidate systems always have 0 or 2 mismatches")
    return out


def _guard(n: int, alphabet_size: int, orbit_count: int, cap: int | None) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    if alphabet_size < 2:
        raise ValueError("alphabet needs at least 2 ornaments")
    if orbit_count < 1:
        raise ValueError("orbit count must be positive")
    space = alphabet_size ** (n * orbit_count) * (n - 1)
    limit = law_space_cap(cap)
    if space > limit:
        raise CapExceeded(
            f"search space {space} exceeds cap {limit} "
            f"(n={n}, alphabet={alphabet_size}, orbits={orbit_count})"
        )
    return space


# ---------------------------------------------------------------------------
# Rotated one-off pairs: equivalence with the special-orbit interval shape.
# ---------------------------------------------------------------------------

def verify_basic_lemma(n: int, alphabet_size: int, orbit_count: int = 1,
                       *, cap: int | None = None) -> LawReport:
    """For every system c and rotation k: a pair a != b, both one off from c,
    with b the k-rotation of a, exists iff exactly one k-cycle splits into two
    constant arcs while every other k-cycle is constant.  Also checks, for
    every witness pair: the changed positions u, v lie in that special cycle,
    the arc between them and its complement are constant, k stabilizes c iff
    the special cycle is monochrome iff v is u shifted by k, and a and b take
    equally many values on the special cycle.
    """
    space = _guard(n, alphabet_size, orbit_count, cap)
    report = LawReport("basic-lemma", space)
    for k in range(1, n):
        cycles = _cycles(n, orbit_count, k)
        cycle_of = {p: ci for ci, cyc in enumerate(cycles) for p in cyc}
        seen_periodic = set()
        for c in _periodic_candidates(n, orbit_count, alphabet_size, k):
            seen_periodic.add(c)
            _check_basic(report, c, k, n, alphabet_size, cycles, cycle_of, [])
        for c in _two_arc_candidates(n, orbit_count, alphabet_size, k):
            diffs = _diffs(c, k, n)
            _check_basic(report, c, k, n, alphabet_size, cycles, cycle_of, diffs)
    return report


def _check_basic(report, c, k, n, alphabet, cycles, cycle_of, diffs):
    witnesses = []
    for x, y in _single_change_rotation_pairs(c, k, n, alphabet, diffs):
        a = _replace(c, x, y)
        b = _rotate_flat(a, k, n)
        if b != a:
            witnesses.append((x, y, a, b))

    changes = []
    for cyc in cycles:
        changes.append(sum(1 for t in range(len(cyc)) if c[cyc[t]] != c[cyc[t - 1]]))
    nonconst = [ci for ci, ch in enumerate(changes) if ch > 0]
    # A non-constant cycle must split into two constant arcs, and the arc
    # between the changed positions keeps both endpoints, so it needs at
    # least two positions: length-2 cycles only qualify when constant.
    shape_holds = len(nonconst) == 0 or (
        len(nonconst) == 1
        and changes[nonconst[0]] == 2
        and len(cycles[0]) >= 3
    )

    def fail(reason, **extra):
        report.counterexamples.append(
            {"c": _format_flat(c, n), "k": k, "reason": reason, **extra}
        )

    if bool(witnesses) != shape_holds:
        fail("pair existence disagrees with the two-arc shape",
             has_pair=bool(witnesses), has_shape=shape_holds)
        return

    k_in_aut = not diffs
    for x, y, a, b in witnesses:
        u = x
        vs = [p for p in range(len(c)) if b[p] != c[p]]
        if len(vs) != 1:
            fail("rotated witness not one off", witness=_format_flat(a, n))
            continue
        v = vs[0]
        ctx = {"witness": _format_flat(a, n), "u": u, "v": v}
        if u == v:
            fail("changed positions coincide", **ctx)
            continue
        ci = cycle_of[u]
        if cycle_of[v] != ci:
            fail("changed positions in different cycles", **ctx)
            continue
        if any(changes[cj] != 0 for cj in range(len(cycles)) if cj != ci):
            fail("value varies outside the special cycle", **ctx)
            continue
        seq = cycles[ci]
        tv, tu = seq.index(v), seq.index(u)
        span = [seq[(tv + t) % len(seq)] for t in range((tu - tv) % len(seq) + 1)]
        rest = [p for p in seq if p not in span]
        if len({c[p] for p in span}) > 1 or (rest and len({c[p] for p in rest}) > 1):
            fail("arc between v and u (or its complement) not constant", **ctx)
            continue
        monochrome = len({c[p] for p in seq}) == 1
        v_is_shifted_u = v == _shift(u, k, n)
        if not (k_in_aut == monochrome == v_is_shifted_u):
            fail("stabilizer / monochrome / v = k.u equivalences broken",
                 k_in_aut=k_in_aut, monochrome=monochrome,
                 v_is_shifted_u=v_is_shifted_u, **ctx)
            continue
        if len({a[p] for p in seq}) != len({b[p] for p in seq}):
            fail("witness pair shows unequal value counts on the cycle", **ctx)


# ---------------------------------------------------------------------------
# Rigid systems: rotating a one-off system onto another one-off system.
# ---------------------------------------------------------------------------

def verify_restricted_symmetry(n: int, alphabet_size: int, orbit_count: int = 1,
                               *, cap: int | None = None) -> LawReport:
    """For every c with a nontrivial stabilizer: whenever a and its k-rotation
    are both one off from c, the rotation k stabilizes c.
    """
    space = _guard(n, alphabet_size, orbit_count, cap)
    report = LawReport("restricted-symmetry", space)
    size = n * orbit_count

    symmetric = set()
    for p in _prime_divisors(n):
        symmetric.update(_periodic_candidates(n, orbit_count, alphabet_size, n // p))

    for c in sorted(symmetric):
        autg = _aut_flat(c, n)
        for k in range(1, n):
            if k % autg == 0:
                continue
            diffs = set(_diffs(c, k, n))
            for x in range(size):
                xk = _shift(x, k, n)
                base = len(diffs - {xk})
                if base > 1:
                    continue
                for y in range(alphabet_size):
                    if y == c[x]:
                        continue
                    if base + (1 if y != c[xk] else 0) == 1:
                        report.counterexamples.append({
                            "c": _format_flat(c, n),
                            "witness": _format_flat(_replace(c, x, y), n),
                            "k": k,
                            "reason": "rotation outside the stabilizer maps a "
                                      "one-off system to a one-off system",
                        })
    return report


def verify_no_triplets(n: int, alphabet_size: int, orbit_count: int = 1,
                       *, cap: int | None = None) -> LawReport:
    """A one-off system b reaches at most one one-off system by rotations
    outside the stabilizer of c: b = k1.a1 = k2.a2 with a1, a2 one off from c
    and k1, k2 not stabilizing c forces a1 = a2.
    """
    space = _guard(n, alphabet_size, orbit_count, cap)
    report = LawReport("no-triplets", space)
    size = n * orbit_count

    survivors = set()
    for k in range(1, n):
        survivors.update(_two_arc_candidates(n, orbit_count, alphabet_size, k))

    for c in sorted(survivors):
        autg = _aut_flat(c, n)
        diffs_by_k = {k: set(_diffs(c, k, n)) for k in range(1, n)}
        for x in range(size):
            for y in range(alphabet_size):
                if y == c[x]:
                    continue
                b = None
                found: dict[Flat, int] = {}
                for k in range(1, n):
                    if k % autg == 0:
                        continue
                    # a = (-k).b is one off from c iff the mismatches of c
                    # against its own (-k)-rotation collapse onto x-k.
                    back = diffs_by_k[(n - k) % n]
                    p_star = _shift(x, -k, n)
                    cnt = len(back - {p_star}) + (1 if y != c[p_star] else 0)
                    if cnt == 1:
                        if b is None:
                            b = _replace(c, x, y)
                        found[_rotate_flat(b, -k, n)] = k
                if len(found) > 1:
                    report.counterexamples.append({
                        "c": _format_flat(c, n),
                        "b": _format_flat(_replace(c, x, y), n),
                        "alphas": [_format_flat(a, n) for a in sorted(found)],
                        "ks": sorted(found.values()),
                        "reason": "two distinct one-off systems rotate onto b",
                    })
    return report


# ---------------------------------------------------------------------------
# Ordered pearls: children and twins.
# ---------------------------------------------------------------------------

def _symmetric_children(c: Flat, g: int, n: int) -> list[Flat]:
    """Children of c invariant under rotation by g (all cycles constant)."""
    cycles = _cycles(n, len(c) // n, g)
    nonconst = [cyc for cyc in cycles if len({c[p] for p in cyc}) > 1]
    if len(nonconst) != 1:
        return []
    cyc = nonconst[0]
    out = []
    for t in sorted({c[p] for p in cyc}):
        deviants = [p for p in cyc if c[p] != t]
        if len(deviants) == 1 and t < c[deviants[0]]:
            out.append(_replace(c, deviants[0], t))
    return out


def _prime_divisors(n: int) -> list[int]:
    out, m, q = [], n, 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


def verify_one_child(n: int, alphabet_size: int, orbit_count: int = 1,
                     *, cap: int | None = None) -> LawReport:
    """At most one child of any system has a nontrivial stabilizer."""
    _guard(n, alphabet_size, orbit_count, cap)
    space = alphabet_size ** (n * orbit_count)
    report = LawReport("one-child", space)

    survivors = set()
    for p in _prime_divisors(n):
        survivors.update(_two_arc_candidates(n, orbit_count, alphabet_size, n // p))

    for c in sorted(survivors):
        symmetric: set[Flat] = set()
        for p in _prime_divisors(n):
            symmetric.update(_symmetric_children(c, n // p, n))
        if len(symmetric) > 1:
            report.counterexamples.append({
                "c": _format_flat(c, n),
                "children": [_format_flat(a, n) for a in sorted(symmetric)],
                "reason": "two distinct children have nontrivial stabilizers",
            })
    return report


def verify_twins_structure(n: int, alphabet_size: int, orbit_count: int = 1,
                           *, relation: str = "child",
                           cap: int | None = None) -> LawReport:
    """Two disjoint twin pairs force the one-special-orbit shape.

    For every c with twin pairs (a1, b1), (a2, b2), all four children
    distinct, and every admissible pair of rotation amounts: in the orbit
    partition of the subgroup those amounts generate there is exactly one
    orbit where the maximum value fills all but one position, every other
    orbit is monochrome, all four children agree with c outside that orbit,
    and the orbit has at least 5 positions.

    relation="perp" weakens children to arbitrary one-off systems; this is
    the negative-control mode, expected to produce counterexamples.
    """
    if relation not in ("child", "perp"):
        raise ValueError("relation must be 'child' or 'perp'")
    _guard(n, alphabet_size, orbit_count, cap)
    space = alphabet_size ** (n * orbit_count)
    name = "twins-structure" if relation == "child" else "twins-structure-perp"
    report = LawReport(name, space)

    survivors = set()
    for k in range(1, n):
        survivors.update(_two_arc_candidates(n, orbit_count, alphabet_size, k))

    for c in sorted(survivors):
        pair_rotations = _twin_pairs(c, n, alphabet_size, relation)
        pairs = sorted(pair_rotations.items(), key=lambda kv: sorted(kv[0]))
        for (pair1, ks1), (pair2, ks2) in combinations(pairs, 2):
            if pair1 & pair2:
                continue
            children = sorted(pair1 | pair2)
            steps = sorted({gcd(gcd(k1, k2), n) for k1 in ks1 for k2 in ks2})
            for step in steps:
                reason = _twins_shape_violation(c, step, children, n)
                if reason:
                    report.counterexamples.append({
                        "c": _format_flat(c, n),
                        "pairs": [[_format_flat(a, n) for a in sorted(pair1)],
                                  [_format_flat(a, n) for a in sorted(pair2)]],
                        "subgroup_step": step,
                        "reason": reason,
                    })
    return report


def _twin_pairs(c: Flat, n: int, alphabet: int, relation: str) -> dict[frozenset, set[int]]:
    """Unordered pairs of distinct one-off systems (children when
    relation='child') related by rotations outside the stabilizer of c,
    mapped to the admissible rotation amounts."""
    autg = _aut_flat(c, n)
    pair_rotations: dict[frozenset, set[int]] = {}
    for k in range(1, n):
        if k % autg == 0:
            continue
        diffs = _diffs(c, k, n)
        if len(diffs) != 2:
            continue
        for x, y in _single_change_rotation_pairs(c, k, n, alphabet, diffs):
            a = _replace(c, x, y)
            b = _rotate_flat(a, k, n)
            if a == b:
                continue
            if relation == "child":
                if not y < c[x]:
                    continue
                q = next(p for p in range(len(c)) if b[p] != c[p])
                if not b[q] < c[q]:
                    continue
            pair_rotations.setdefault(frozenset((a, b)), set()).add(k)
    return pair_rotations


def _twins_shape_violation(c: Flat, step: int, children: list[Flat], n: int) -> str | None:
    cycles = _cycles(n, len(c) // n, step)
    special = []
    for ci, cyc in enumerate(cycles):
        top = max(c[p] for p in cyc)
        if sum(1 for p in cyc if c[p] == top) == len(cyc) - 1:
            special.append(ci)
    if len(special) != 1:
        return f"{len(special)} orbits have the maximum on all but one position"
    keep = special[0]
    for ci, cyc in enumerate(cycles):
        if ci != keep and len({c[p] for p in cyc}) > 1:
            return "a non-special orbit is not monochrome"
    inside = set(cycles[keep])
    for a in children:
        changed = next(p for p in range(len(c)) if a[p] != c[p])
        if changed not in inside:
            return "a child changes c outside the special orbit"
    if len(cycles[keep]) < 5:
        return f"special orbit has only {len(cycles[keep])} positions"
    return None


# ---------------------------------------------------------------------------
# Cyclic-group preliminaries.
# ---------------------------------------------------------------------------

def verify_coset_lemma(n1: int, n2: int) -> LawReport:
    """In Z/lcm(n1,n2), every coset of the order-n1 subgroup meets every
    coset of the order-n2 subgroup.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("subgroup orders must be positive")
    big = lcm(n1, n2)
    m1, m2 = big // n1, big // n2  # coset counts; cosets are residues mod m_i
    report = LawReport("coset-intersection", m1 * m2)
    for a in range(m1):
        for b in range(m2):
            if not any(x % m1 == a and x % m2 == b for x in range(big)):
                report.counterexamples.append({
                    "n1": n1, "n2": n2, "coset1": a, "coset2": b,
                    "reason": "empty intersection",
                })
    return report


def verify_affine_lemma(n: int) -> LawReport:
    """Bijective affine maps of Z/n preserving a proper initial segment
    {0..m} are exactly: the identity or x -> m-x when 1 <= m <= n-3;
    x -> rx when m = 0; x -> r-1+rx when m = n-2.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    units = [b for b in range(n) if gcd(b, n) == 1]
    report = LawReport("affine-interval", n * len(units) * (n - 1))
    for m in range(0, n - 1):
        segment = set(range(m + 1))
        for b in units:
            for a in range(n):
                if not all((a + b * x) % n in segment for x in segment):
                    continue
                if m == 0:
                    ok = a == 0
                elif m == n - 2:
                    ok = a == (b - 1) % n
                else:
                    ok = (a == 0 and b == 1) or (a == m % n and b == n - 1)
                if not ok:
                    report.counterexamples.append({
                        "n": n, "m": m, "a": a, "b": b,
                        "reason": "segment-preserving map of unexpected form",
                    })
    return report
