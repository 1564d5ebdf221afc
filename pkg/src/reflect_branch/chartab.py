"""Character-theoretic oracle: exact tables over a prime field.

Irreducible characters are computed as the common eigenvectors of the
class-multiplication matrices acting on the class algebra over F_p (Dixon's
method).  With p = 1 mod exponent(G) and p > 2|G| the algebra is split
semisimple, the refinement always reaches one-dimensional eigenspaces, and
integer degrees and restriction multiplicities are recovered exactly from
their residues.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable

import numpy as np

from .branching import BranchingTable
from .irreps import GroupParams, dim
from .modp import (
    charpoly,
    column_echelon,
    is_prime,
    matmul,
    modinv,
    nullspace,
    poly_roots,
    sqrt_mod,
)
from .monomial import MonomialGroup, parabolic_embed
from .symbreak import FiniteGroup


@dataclass
class ClassData:
    """Just enough of a finite group to run the table computation."""

    label: str
    order: int
    classes: list[list[int]]
    class_of: list[int]
    mul: Callable[[int, int], int]
    inv: Callable[[int], int]
    exponent: int

    @classmethod
    def from_monomial(cls, group: MonomialGroup, cap: int | None = None) -> "ClassData":
        elements = group.elements(cap)
        index = {g: i for i, g in enumerate(elements)}
        classes = group.conjugacy_classes(cap)
        class_of = [0] * len(elements)
        for ci, members in enumerate(classes):
            for i in members:
                class_of[i] = ci
        inv_table = [index[group.inverse(g)] for g in elements]
        return cls(
            label=str(group.params),
            order=len(elements),
            classes=classes,
            class_of=class_of,
            mul=lambda i, j: index[group.multiply(elements[i], elements[j])],
            inv=lambda i: inv_table[i],
            exponent=group.exponent(),
        )

    @classmethod
    def from_cayley(cls, group: FiniteGroup) -> "ClassData":
        n = group.order
        class_of = [-1] * n
        classes: list[list[int]] = []
        for start in range(n):
            if class_of[start] != -1:
                continue
            members = sorted({
                group.mul(group.mul(g, start), group.inverse[g]) for g in range(n)
            })
            for x in members:
                class_of[x] = len(classes)
            classes.append(members)
        exponent = 1
        for x in range(n):
            order, y = 1, x
            while y != 0:
                y = group.mul(y, x)
                order += 1
            exponent = lcm(exponent, order)
        return cls(
            label=group.name,
            order=n,
            classes=classes,
            class_of=class_of,
            mul=group.mul,
            inv=lambda i: group.inverse[i],
            exponent=exponent,
        )


@dataclass
class CharacterTableModP:
    p: int
    class_sizes: list[int]
    class_representatives: list[int]
    inverse_class: list[int]
    identity_class: int
    table: np.ndarray  # rows: irreducible characters, cols: classes, mod p
    degrees: list[int]

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p with p = 1 mod exponent and p > 2*order."""
    candidate = 1 + exponent
    while candidate <= 2 * order or not is_prime(candidate):
        candidate += exponent
    return candidate


def _class_matrices(cd: ClassData) -> list[np.ndarray]:
    k = len(cd.classes)
    reps = [cls[0] for cls in cd.classes]
    mats = []
    for i in range(k):
        mat = np.zeros((k, k), dtype=np.int64)
        for x in cd.classes[i]:
            xinv = cd.inv(x)
            for col, z in enumerate(reps):
                mat[cd.class_of[cd.mul(xinv, z)], col] += 1
        mats.append(mat)
    return mats


def _common_eigenvectors(mats: list[np.ndarray], cd: ClassData, p: int) -> list[np.ndarray]:
    k = len(mats)
    identity_class = cd.class_of[0]
    start = np.eye(k, dtype=np.int64)
    subspaces: list[tuple[np.ndarray, list[int]]] = [(start, list(range(k)))]
    process_order = sorted(
        (ci for ci in range(k) if ci != identity_class),
        key=lambda ci: (len(cd.classes[ci]), ci),
    )
    for ci in process_order:
        if all(basis.shape[1] == 1 for basis, _ in subspaces):
            break
        mat = mats[ci] % p
        refined: list[tuple[np.ndarray, list[int]]] = []
        for basis, pivots in subspaces:
            width = basis.shape[1]
            if width == 1:
                refined.append((basis, pivots))
                continue
            image = matmul(mat, basis, p)
            small = image[pivots, :]
            if not np.array_equal(matmul(basis, small, p), image):
                raise RuntimeError(
                    "internal error: subspace not invariant under a class matrix"
                )
            for eigenvalue in poly_roots(charpoly(small, p), p):
                shifted = (small - eigenvalue * np.eye(width, dtype=np.int64)) % p
                kernel = nullspace(shifted, p)
                if kernel.shape[1] == 0:
                    continue
                newbasis, newpivots = column_echelon(matmul(basis, kernel, p), p)
                refined.append((newbasis, newpivots))
        subspaces = refined
    if any(basis.shape[1] != 1 for basis, _ in subspaces) or len(subspaces) != k:
        raise RuntimeError(
            "internal error: eigenspace refinement did not fully diagonalize"
        )
    return [basis[:, 0] % p for basis, _ in subspaces]


def character_table_from_classdata(cd: ClassData, prime: int | None = None) -> CharacterTableModP:
    k = len(cd.classes)
    p = prime if prime is not None else dixon_prime(cd.order, cd.exponent)
    if not is_prime(p) or (p - 1) % cd.exponent != 0 or p <= 2 * cd.order:
        raise ValueError(
            f"prime {p} unsuitable for {cd.label}: need p = 1 mod "
            f"{cd.exponent} and p > {2 * cd.order}"
        )
    class_sizes = [len(cls) for cls in cd.classes]
    reps = [cls[0] for cls in cd.classes]
    inverse_class = [cd.class_of[cd.inv(rep)] for rep in reps]
    identity_class = cd.class_of[0]

    vectors = _common_eigenvectors(_class_matrices(cd), cd, p)

    size_inverses = [modinv(s, p) for s in class_sizes]
    rows = []
    for w in vectors:
        w = (w * modinv(int(w[identity_class]), p)) % p
        denom = 0
        for t in range(k):
            denom = (denom + int(w[t]) * int(w[inverse_class[t]]) * size_inverses[t]) % p
        degree_sq = cd.order * modinv(denom, p) % p
        degree = sqrt_mod(degree_sq, p)
        if degree > p // 2:
            degree = p - degree
        if degree < 1 or degree * degree > cd.order:
            raise RuntimeError(f"internal error: implausible degree {degree}")
        row = [(degree * int(w[t]) * size_inverses[t]) % p for t in range(k)]
        rows.append((degree, row))

    rows.sort(key=lambda item: (item[0], item[1]))
    degrees = [deg for deg, _ in rows]
    table = np.array([row for _, row in rows], dtype=np.int64)

    if sum(d * d for d in degrees) != cd.order:
        raise RuntimeError("internal error: degree squares do not sum to |G|")
    weighted = (table * np.array(class_sizes, dtype=np.int64)) % p
    gram = matmul(weighted, table[:, inverse_class].T, p)
    if not np.array_equal(gram, (cd.order % p) * np.eye(k, dtype=np.int64) % p):
        raise RuntimeError("internal error: row orthogonality fails")

    return CharacterTableModP(
        p=p,
        class_sizes=class_sizes,
        class_representatives=reps,
        inverse_class=inverse_class,
        identity_class=identity_class,
        table=table,
        degrees=degrees,
    )


def character_table(params: GroupParams, prime: int | None = None,
                    cap: int | None = None) -> CharacterTableModP:
    return character_table_from_classdata(
        ClassData.from_monomial(MonomialGroup(params), cap), prime
    )


def character_table_cayley(group: FiniteGroup, prime: int | None = None) -> CharacterTableModP:
    return character_table_from_classdata(ClassData.from_cayley(group), prime)


# ---------------------------------------------------------------------------
# Restriction multiplicities by inner products.
# ---------------------------------------------------------------------------

@dataclass
class OracleRestrictionTable:
    upper: GroupParams
    lower: GroupParams
    entries: list[list[int]]
    row_degrees: list[int]
    col_degrees: list[int]
    prime: int


def restriction_table_oracle(upper: GroupParams, cap: int | None = None) -> OracleRestrictionTable:
    """Restriction multiplicities of every lower irreducible in every upper
    irreducible, from the two character tables over one shared prime."""
    big = MonomialGroup(upper)
    small = MonomialGroup(upper.lower())
    cd_big = ClassData.from_monomial(big, cap)
    cd_small = ClassData.from_monomial(small, cap)
    p = dixon_prime(cd_big.order, lcm(cd_big.exponent, cd_small.exponent))
    t_big = character_table_from_classdata(cd_big, p)
    t_small = character_table_from_classdata(cd_small, p)

    counts = np.zeros((t_big.num_classes, t_small.num_classes), dtype=np.int64)
    for idx, h in enumerate(small.elements(cap)):
        b = big.class_of(parabolic_embed(h, upper))
        counts[b, cd_small.class_of[idx]] += 1

    inv_cols = t_small.table[:, t_small.inverse_class]
    raw = matmul(matmul(t_big.table, counts, p), inv_cols.T, p)
    raw = (raw * modinv(cd_small.order, p)) % p
    entries = []
    for row in raw:
        lifted = []
        for value in row:
            value = int(value)
            if value >= p // 2:
                raise RuntimeError(
                    f"internal error: residue {value} too large to be a multiplicity"
                )
            lifted.append(value)
        entries.append(lifted)
    return OracleRestrictionTable(
        upper=upper,
        lower=upper.lower(),
        entries=entries,
        row_degrees=t_big.degrees,
        col_degrees=t_small.degrees,
        prime=p,
    )


# ---------------------------------------------------------------------------
# Canonical comparison of independently labeled tables.
# ---------------------------------------------------------------------------

@dataclass
class CompareOutcome:
    match: bool
    weak: bool
    reason: str


MATCH_BUDGET = 10_000


def compare_canonical(table: BranchingTable, oracle: OracleRestrictionTable) -> bool:
    return compare_canonical_detail(table, oracle).match


def compare_canonical_detail(table: BranchingTable,
                             oracle: OracleRestrictionTable) -> CompareOutcome:
    """Equality up to the independent labelings of the two tables.

    Rows and columns are keyed by (degree, entry pattern) and the keys are
    refined jointly until stable; a matching relabeling must respect the key
    classes, and remaining ties are resolved by individualizing one row or
    column at a time and backtracking, under a work budget.  When the budget
    runs out the stable key multisets alone decide, flagged as weak.
    """
    comb = [list(row) for row in table.entries]
    row_degs = [dim(label, table.upper) for label in table.rows]
    col_degs = [dim(label, table.lower) for label in table.cols]
    orac = [list(row) for row in oracle.entries]

    if sorted(row_degs) != sorted(oracle.row_degrees):
        return CompareOutcome(False, False, "row degree multisets differ")
    if sorted(col_degs) != sorted(oracle.col_degrees):
        return CompareOutcome(False, False, "column degree multisets differ")
    if len(comb) != len(orac) or len(comb[0]) != len(orac[0]):
        return CompareOutcome(False, False, "table shapes differ")

    state = _MatchState(comb, orac)
    rids_a = [(d,) for d in row_degs]
    rids_b = [(d,) for d in oracle.row_degrees]
    cids_a = [(d,) for d in col_degs]
    cids_b = [(d,) for d in oracle.col_degrees]
    rids_a, rids_b = _compress(rids_a, rids_b)
    cids_a, cids_b = _compress(cids_a, cids_b)
    result = state.search(rids_a, cids_a, rids_b, cids_b)
    if result is None:
        return CompareOutcome(True, True,
                              "tie resolution exceeded the work budget; "
                              "refined key multisets agree (weak match)")
    if result:
        return CompareOutcome(True, False, "exact match after canonical sorting")
    return CompareOutcome(False, False,
                          "no label matching reconciles the tables")


def _compress(sigs_a, sigs_b):
    mapping = {s: i for i, s in enumerate(sorted(set(sigs_a) | set(sigs_b)))}
    return [mapping[s] for s in sigs_a], [mapping[s] for s in sigs_b]


class _MatchState:
    """Individualization-refinement matcher for a pair of integer matrices
    with colored rows and columns."""

    def __init__(self, mat_a, mat_b):
        self.mat_a = mat_a
        self.mat_b = mat_b
        self.rows = len(mat_a)
        self.cols = len(mat_a[0])
        self.budget = MATCH_BUDGET

    def refine(self, rids_a, cids_a, rids_b, cids_b):
        """Jointly refine key classes to a fixed point; None when the two
        sides' class multisets diverge (no matching exists down this branch)."""
        while True:
            if sorted(rids_a) != sorted(rids_b) or sorted(cids_a) != sorted(cids_b):
                return None
            before = (len(set(rids_a)), len(set(cids_a)))
            new_r_a = [
                (rids_a[i],
                 tuple(sorted((cids_a[j], self.mat_a[i][j]) for j in range(self.cols))))
                for i in range(self.rows)
            ]
            new_r_b = [
                (rids_b[i],
                 tuple(sorted((cids_b[j], self.mat_b[i][j]) for j in range(self.cols))))
                for i in range(self.rows)
            ]
            rids_a, rids_b = _compress(new_r_a, new_r_b)
            new_c_a = [
                (cids_a[j],
                 tuple(sorted((rids_a[i], self.mat_a[i][j]) for i in range(self.rows))))
                for j in range(self.cols)
            ]
            new_c_b = [
                (cids_b[j],
                 tuple(sorted((rids_b[i], self.mat_b[i][j]) for i in range(self.rows))))
                for j in range(self.cols)
            ]
            cids_a, cids_b = _compress(new_c_a, new_c_b)
            if (len(set(rids_a)), len(set(cids_a))) == before:
                if sorted(rids_a) != sorted(rids_b) or sorted(cids_a) != sorted(cids_b):
                    return None
                return rids_a, cids_a, rids_b, cids_b

    def search(self, rids_a, cids_a, rids_b, cids_b):
        refined = self.refine(rids_a, cids_a, rids_b, cids_b)
        if refined is None:
            return False
        rids_a, cids_a, rids_b, cids_b = refined

        target = self._smallest_ambiguous_class(rids_a, cids_a)
        if target is None:
            return self._compare_resolved(rids_a, cids_a, rids_b, cids_b)
        axis, class_id = target
        fresh = 1 + max(max(rids_a), max(cids_a), max(rids_b), max(cids_b))
        if axis == "col":
            pick_a = next(j for j in range(self.cols) if cids_a[j] == class_id)
            candidates = [j for j in range(self.cols) if cids_b[j] == class_id]
            for jb in candidates:
                if self.budget <= 0:
                    return None
                self.budget -= 1
                next_a = list(cids_a)
                next_a[pick_a] = fresh
                next_b = list(cids_b)
                next_b[jb] = fresh
                result = self.search(rids_a, next_a, rids_b, next_b)
                if result is not False:
                    return result
            return False
        pick_a = next(i for i in range(self.rows) if rids_a[i] == class_id)
        candidates = [i for i in range(self.rows) if rids_b[i] == class_id]
        for ib in candidates:
            if self.budget <= 0:
                return None
            self.budget -= 1
            next_a = list(rids_a)
            next_a[pick_a] = fresh
            next_b = list(rids_b)
            next_b[ib] = fresh
            result = self.search(next_a, cids_a, next_b, cids_b)
            if result is not False:
                return result
        return False

    def _smallest_ambiguous_class(self, rids_a, cids_a):
        best = None
        for axis, ids in (("col", cids_a), ("row", rids_a)):
            counts: dict[int, int] = {}
            for value in ids:
                counts[value] = counts.get(value, 0) + 1
            for class_id, count in counts.items():
                if count > 1 and (best is None or count < best[2]):
                    best = (axis, class_id, count)
        if best is None:
            return None
        return best[0], best[1]

    def _compare_resolved(self, rids_a, cids_a, rids_b, cids_b):
        row_a = sorted(range(self.rows), key=lambda i: rids_a[i])
        row_b = sorted(range(self.rows), key=lambda i: rids_b[i])
        col_a = sorted(range(self.cols), key=lambda j: cids_a[j])
        col_b = sorted(range(self.cols), key=lambda j: cids_b[j])
        for ia, ib in zip(row_a, row_b):
            for ja, jb in zip(col_a, col_b):
                if self.mat_a[ia][ja] != self.mat_b[ib][jb]:
                    return False
        return True
