"""Restriction multiplicities between G(de,e,r+1) and G(de,e,r).

The multiplicity of a rank-r label in the restriction of a rank-(r+1) label
is the number of multipartitions in the lower label's rotation class that
reach the upper label's multipartition by adding one box, divided by the
upper stabilizer order.  The division is always exact and the result never
exceeds 2; both facts are enforced as internal invariants and additionally
swept by the refutation-style verifiers below.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .irreps import (
    GroupParams,
    IrrepLabel,
    MultiPartition,
    enumerate_irreps,
    extends_to_full,
    format_irrep_label,
    format_multipartition,
    gamma_prime_orbit,
    orbit_label,
    rotate_multipartition,
    total_size,
)
from .laws import LawReport
from .necklaces import aut, necklace, step_relation
from .partitions import Partition, covers, format_partition


@dataclass
class BranchingTable:
    upper: GroupParams
    lower: GroupParams
    rows: list[IrrepLabel]
    cols: list[IrrepLabel]
    entries: list[list[int]]

    def row_index(self, label: IrrepLabel) -> int:
        return self.rows.index(label)

    def to_json(self) -> dict:
        return {
            "upper": {"d": self.upper.d, "e": self.upper.e, "r": self.upper.r},
            "lower": {"d": self.lower.d, "e": self.lower.e, "r": self.lower.r},
            "rows": [format_irrep_label(l) for l in self.rows],
            "cols": [format_irrep_label(l) for l in self.cols],
            "entries": self.entries,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [format_irrep_label(l) for l in self.cols])
        for label, row in zip(self.rows, self.entries):
            writer.writerow([format_irrep_label(label)] + row)
        return buf.getvalue()


def _orbit_step_count(c_low_orbit: list[MultiPartition], c_up: MultiPartition) -> int:
    target = necklace(c_up)
    return sum(1 for a in c_low_orbit if step_relation(necklace(a), target))


def restriction_mult(rho1: IrrepLabel, rho2: IrrepLabel, upper: GroupParams) -> int:
    """Multiplicity of rho2 (rank r) in the restriction of rho1 (rank r+1).

    Independent of the j tags of either label.
    """
    c1 = rho1.orbit.canonical
    c2 = rho2.orbit.canonical
    if len(c1) != upper.m or len(c2) != upper.m:
        raise ValueError("labels do not match the group parameters")
    if total_size(c1) != upper.r or total_size(c2) != upper.r - 1:
        raise ValueError("labels must have ranks r+1 and r")
    count = _orbit_step_count(gamma_prime_orbit(c2, upper), c1)
    s1 = rho1.orbit.stabilizer_order
    if count % s1 != 0:
        raise RuntimeError(
            f"internal invariant violation: step count {count} not divisible "
            f"by stabilizer order {s1}"
        )
    return count // s1


def induction_table(upper: GroupParams) -> BranchingTable:
    """Full restriction table from G(de,e,r) down to G(de,e,r-1)."""
    if upper.r < 1:
        raise ValueError("need rank at least 1")
    lower = upper.lower()
    rows = enumerate_irreps(upper)
    cols = enumerate_irreps(lower)

    row_orbits = _distinct_orbits(rows)
    col_orbits = _distinct_orbits(cols)
    col_members = {
        lab.canonical: gamma_prime_orbit(lab.canonical, upper) for lab in col_orbits
    }
    by_orbit: dict[tuple[MultiPartition, MultiPartition], int] = {}
    for up in row_orbits:
        target = necklace(up.canonical)
        for low in col_orbits:
            count = sum(
                1 for a in col_members[low.canonical]
                if step_relation(necklace(a), target)
            )
            if count % up.stabilizer_order != 0:
                raise RuntimeError(
                    "internal invariant violation: inexact stabilizer division"
                )
            by_orbit[(up.canonical, low.canonical)] = count // up.stabilizer_order

    entries = [
        [by_orbit[(r.orbit.canonical, c.orbit.canonical)] for c in cols]
        for r in rows
    ]
    for row in entries:
        for value in row:
            if value > 2:
                raise RuntimeError(
                    f"internal invariant violation: multiplicity {value} > 2"
                )
    return BranchingTable(upper=upper, lower=lower, rows=rows, cols=cols, entries=entries)


def _distinct_orbits(labels: list[IrrepLabel]):
    seen = set()
    out = []
    for lab in labels:
        if lab.orbit.canonical not in seen:
            seen.add(lab.orbit.canonical)
            out.append(lab.orbit)
    return out


# ---------------------------------------------------------------------------
# Refutation sweeps.
# ---------------------------------------------------------------------------

def verify_theorem_bound(d: int, e: int, r_max: int) -> LawReport:
    """Every multiplicity is at most 2, and a multiplicity of 2 forces the
    upper label to have trivial splitting.  Multiplicities are recomputed
    from restriction_mult, independent of the table constructor's checks.
    """
    report = LawReport("multiplicity-bound", 0)
    for rank in range(1, r_max + 1):
        upper = GroupParams(d, e, rank)
        rows = enumerate_irreps(upper)
        cols = enumerate_irreps(upper.lower())
        report.space += len(rows) * len(cols)
        for rho1 in rows:
            for rho2 in cols:
                mult = restriction_mult(rho1, rho2, upper)
                if mult > 2:
                    report.counterexamples.append({
                        "upper": str(upper),
                        "row": format_irrep_label(rho1),
                        "col": format_irrep_label(rho2),
                        "mult": mult,
                        "reason": "multiplicity exceeds 2",
                    })
                elif mult == 2 and not extends_to_full(rho1):
                    report.counterexamples.append({
                        "upper": str(upper),
                        "row": format_irrep_label(rho1),
                        "col": format_irrep_label(rho2),
                        "reason": "multiplicity 2 on a non-extending row",
                    })
    return report


def verify_nonextending_components(d: int, e: int, r_max: int) -> LawReport:
    """Non-extending labels on either side of a restriction constrain the
    other side: a non-extending row only meets extending columns; a
    non-extending column in a row forces the row to extend; and all
    non-extending components of one row have multiplicity 1 and come from a
    single rotation class.
    """
    report = LawReport("nonextending-components", 0)
    for rank in range(1, r_max + 1):
        upper = GroupParams(d, e, rank)
        table = induction_table(upper)
        report.space += len(table.rows) * len(table.cols)
        for i, rho1 in enumerate(table.rows):
            comps = [
                (table.cols[j], table.entries[i][j])
                for j in range(len(table.cols))
                if table.entries[i][j] != 0
            ]
            row_name = f"{upper}:{format_irrep_label(rho1)}"
            if not extends_to_full(rho1):
                bad = [c for c, _ in comps if not extends_to_full(c)]
                if bad:
                    report.counterexamples.append({
                        "row": row_name,
                        "cols": [format_irrep_label(c) for c in bad],
                        "reason": "non-extending row meets non-extending column",
                    })
            nonext = [(c, mult) for c, mult in comps if not extends_to_full(c)]
            if nonext and not extends_to_full(rho1):
                report.counterexamples.append({
                    "row": row_name,
                    "reason": "row with non-extending component fails to extend",
                })
            if any(mult != 1 for _, mult in nonext):
                report.counterexamples.append({
                    "row": row_name,
                    "reason": "non-extending component with multiplicity != 1",
                })
            origins = {c.orbit.canonical for c, _ in nonext}
            if len(origins) > 1:
                report.counterexamples.append({
                    "row": row_name,
                    "origins": [format_multipartition(c) for c in sorted(origins)],
                    "reason": "non-extending components from several rotation classes",
                })
    return report


# ---------------------------------------------------------------------------
# The double-multiplicity family (d = 1).
# ---------------------------------------------------------------------------

def build_mult2_family(e: int, u: int, fillers: list[Partition],
                       lambda0: Partition, mu0: Partition,
                       *, check: bool = True) -> MultiPartition:
    """Necklace over Z/e built from a subgroup of order u: mu0 at 0, lambda0
    on the rest of the subgroup, one constant filler per other coset.

    With fillers pairwise distinct and different from lambda0 and mu0 the
    necklace is rigid, and its row in the rank table carries at least
    floor((u-1)/2) multiplicity-2 components (verified when check is True).
    """
    if e < 1 or u < 1 or e % u != 0:
        raise ValueError(f"u must divide e: e={e}, u={u}")
    if not covers(mu0, lambda0):
        raise ValueError(
            f"{format_partition(lambda0)} must be {format_partition(mu0)} plus one box"
        )
    coset_count = e // u
    if len(fillers) != coset_count - 1:
        raise ValueError(f"need {coset_count - 1} fillers, got {len(fillers)}")
    taken = {lambda0, mu0}
    for f in fillers:
        if f in taken:
            raise ValueError("fillers must be distinct from each other, "
                             "lambda0 and mu0")
        taken.add(f)

    values: list[Partition] = []
    for x in range(e):
        residue = x % coset_count
        if residue == 0:
            values.append(mu0 if x == 0 else lambda0)
        else:
            values.append(fillers[residue - 1])
    c = tuple(values)
    if aut(necklace(c)) != e:
        raise RuntimeError("internal invariant violation: family necklace not rigid")
    if check:
        guaranteed = (u - 1) // 2
        if mult2_component_count(c, e) < guaranteed:
            raise RuntimeError(
                "internal invariant violation: family row below the "
                f"guaranteed {guaranteed} multiplicity-2 components"
            )
    return c


def mult2_component_count(c: MultiPartition, e: int) -> int:
    """Distinct components of multiplicity 2 in the row of c (d = 1)."""
    upper = GroupParams(1, e, total_size(c))
    table = induction_table(upper)
    lab = orbit_label(c, upper)
    i = next(
        idx for idx, row in enumerate(table.rows)
        if row.orbit.canonical == lab.canonical and row.j == 0
    )
    return sum(1 for value in table.entries[i] if value == 2)


def matches_mult2_family_shape(c: MultiPartition, e: int) -> int | None:
    """Subgroup order u >= 5 for which some rotation of c fits the family
    shape (see build_mult2_family), or None.
    """
    for u in range(e, 4, -1):
        if e % u != 0:
            continue
        coset_count = e // u
        for shift in range(e):
            rotated = rotate_multipartition(c, shift)
            subgroup = [rotated[t * coset_count] for t in range(u)]
            lam = subgroup[1]
            if any(v != lam for v in subgroup[1:]):
                continue
            if not covers(rotated[0], lam):
                continue
            ok = True
            for residue in range(1, coset_count):
                coset = {rotated[residue + t * coset_count] for t in range(u)}
                if len(coset) > 1:
                    ok = False
                    break
            if ok:
                return u
    return None


def verify_mult2_classification(e: int, r_max: int, d: int = 1) -> LawReport:
    """Every row with at least two distinct multiplicity-2 components matches
    the family shape for some subgroup order u >= 5, up to rotation (d = 1).
    """
    if d != 1:
        raise ValueError("the classification sweep is stated for d = 1")
    report = LawReport("mult2-classification", 0)
    for rank in range(1, r_max + 1):
        upper = GroupParams(d, e, rank)
        table = induction_table(upper)
        report.space += len(table.rows)
        for i, rho1 in enumerate(table.rows):
            if rho1.j != 0:
                continue
            hits = [j for j, value in enumerate(table.entries[i]) if value == 2]
            if len(hits) < 2:
                continue
            u = matches_mult2_family_shape(rho1.orbit.canonical, e)
            if u is None:
                report.counterexamples.append({
                    "row": f"{upper}:{format_irrep_label(rho1)}",
                    "mult2_cols": [format_irrep_label(table.cols[j]) for j in hits],
                    "reason": "row with two multiplicity-2 components outside "
                              "the family shape",
                })
    return report
