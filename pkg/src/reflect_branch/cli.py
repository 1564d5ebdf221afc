"""Batch command line surface.

Subcommands: table, verify-laws, verify-theorem, verify-symbreak,
oracle-compare, family.  Exit codes: 0 success / no counterexamples,
1 counterexample found or comparison failed, 2 usage or cap errors.
Output on stdout is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import lcm

from . import branching, chartab, laws, symbreak
from .caps import CapExceeded
from .irreps import GroupParams, format_multipartition
from .necklaces import aut, necklace
from .partitions import parse_partition

NECKLACE_LAWS = [
    "basic-lemma",
    "restricted-symmetry",
    "no-triplets",
    "one-child",
    "twins-structure",
]


def _run_law_task(task: tuple) -> dict:
    kind = task[0]
    if kind == "necklace":
        _, law, n, alphabet, orbits = task
        runner = {
            "basic-lemma": laws.verify_basic_lemma,
            "restricted-symmetry": laws.verify_restricted_symmetry,
            "no-triplets": laws.verify_no_triplets,
            "one-child": laws.verify_one_child,
            "twins-structure": laws.verify_twins_structure,
        }[law]
        return runner(n, alphabet, orbits).to_json()
    if kind == "twins-perp":
        _, n, alphabet, orbits = task
        return laws.verify_twins_structure(n, alphabet, orbits, relation="perp").to_json()
    if kind == "coset":
        _, n1, n2 = task
        return laws.verify_coset_lemma(n1, n2).to_json()
    if kind == "affine":
        _, n = task
        return laws.verify_affine_lemma(n).to_json()
    raise ValueError(f"unknown task {task!r}")


def _run_tasks(tasks: list[tuple], jobs: int) -> list[dict]:
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_law_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_law_task, tasks))


def _cmd_table(args) -> int:
    params = GroupParams(args.d, args.e, args.r)
    table = branching.induction_table(params)
    if args.format == "json":
        print(json.dumps(table.to_json(), indent=2))
    else:
        sys.stdout.write(table.to_csv())
    return 0


def _cmd_verify_laws(args) -> int:
    tasks: list[tuple] = []
    if args.negative_control:
        for n in range(2, args.max_n + 1):
            tasks.append(("twins-perp", n, args.alphabet, args.orbits))
    else:
        selected = args.law or NECKLACE_LAWS
        for law in selected:
            if law not in NECKLACE_LAWS:
                print(f"unknown law: {law}", file=sys.stderr)
                return 2
            for n in range(2, args.max_n + 1):
                for orbits in range(1, args.orbits + 1):
                    tasks.append(("necklace", law, n, args.alphabet, orbits))
        if not args.law:
            for n1 in range(1, args.coset_lcm_max + 1):
                for n2 in range(n1, args.coset_lcm_max + 1):
                    if lcm(n1, n2) <= args.coset_lcm_max:
                        tasks.append(("coset", n1, n2))
            for n in range(3, args.affine_max + 1):
                tasks.append(("affine", n))
    reports = _run_tasks(tasks, args.jobs)
    print(json.dumps(reports, indent=2))
    found = any(r["counterexamples"] for r in reports)
    if args.negative_control:
        return 0 if found else 1
    return 1 if found else 0


def _cmd_verify_theorem(args) -> int:
    reports = [
        branching.verify_theorem_bound(args.d, args.e, args.rmax),
        branching.verify_nonextending_components(args.d, args.e, args.rmax),
    ]
    if args.d == 1:
        reports.append(branching.verify_mult2_classification(args.e, args.rmax))
    print(json.dumps([r.to_json() for r in reports], indent=2))
    return 1 if any(not r.ok for r in reports) else 0


def _cmd_verify_symbreak(args) -> int:
    groups = symbreak.builtin_groups(args.max_order)
    if args.group:
        groups = [g for g in groups if g.name == args.group]
        if not groups:
            print(f"no builtin group named {args.group!r}", file=sys.stderr)
            return 2
    out = []
    failed = False
    for group in groups:
        for pearls in args.pearls:
            report = symbreak.check_symmetry_breaking(group, pearls)
            entry = report.to_json()
            entry["pearls"] = pearls
            out.append(entry)
            failed = failed or not report.ok
    print(json.dumps(out, indent=2))
    return 1 if failed else 0


def _cmd_oracle_compare(args) -> int:
    params = GroupParams(args.d, args.e, args.r)
    table = branching.induction_table(params)
    oracle = chartab.restriction_table_oracle(params)
    outcome = chartab.compare_canonical_detail(table, oracle)
    print(json.dumps({
        "upper": {"d": params.d, "e": params.e, "r": params.r},
        "lower": {"d": params.d, "e": params.e, "r": params.r - 1},
        "degrees_upper": sorted(oracle.row_degrees),
        "degrees_lower": sorted(oracle.col_degrees),
        "prime": oracle.prime,
        "match": outcome.match,
        "weak": outcome.weak,
        "reason": outcome.reason,
    }, indent=2))
    return 0 if outcome.match else 1


def _cmd_family(args) -> int:
    lambda0 = parse_partition(args.lambda0)
    mu0 = parse_partition(args.mu0)
    fillers = [parse_partition(f) for f in args.filler]
    c = branching.build_mult2_family(args.e, args.u, fillers, lambda0, mu0)
    count = branching.mult2_component_count(c, args.e)
    guaranteed = (args.u - 1) // 2
    print(json.dumps({
        "e": args.e,
        "u": args.u,
        "necklace": format_multipartition(c),
        "rank": sum(sum(p) for p in c),
        "aut_trivial": aut(necklace(c)) == args.e,
        "guaranteed_mult2_components": guaranteed,
        "mult2_components": count,
    }, indent=2))
    return 0 if count >= guaranteed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reflect-branch",
        description="Branching tables for G(de,e,r) and necklace-law verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit the restriction table G(de,e,r) -> G(de,e,r-1)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify-laws", help="run the necklace law verifiers")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--orbits", type=int, default=1)
    p.add_argument("--law", action="append",
                   help=f"restrict to one of {', '.join(NECKLACE_LAWS)} (repeatable)")
    p.add_argument("--coset-lcm-max", type=int, default=60)
    p.add_argument("--affine-max", type=int, default=12)
    p.add_argument("--negative-control", action="store_true",
                   help="run the weakened twins verifier; success means a "
                        "counterexample was found")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=_cmd_verify_laws)

    p = sub.add_parser("verify-theorem", help="sweep the multiplicity bound")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("verify-symbreak", help="symmetry breaking on builtin groups")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--pearls", type=int, action="append", default=None)
    p.add_argument("--group", help="restrict to one builtin group by name, e.g. D4")
    p.set_defaults(func=_cmd_verify_symbreak)

    p = sub.add_parser("oracle-compare", help="compare a table against the character oracle")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_oracle_compare)

    p = sub.add_parser("family", help="build and analyze a double-multiplicity family necklace")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--lambda0", required=True, help='partition literal, e.g. "[1]"')
    p.add_argument("--mu0", required=True, help='partition literal, e.g. "[]"')
    p.add_argument("--filler", action="append", default=[],
                   help="one partition literal per extra coset (repeatable)")
    p.set_defaults(func=_cmd_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-symbreak" and not args.pearls:
        args.pearls = [2, 3]
    try:
        return args.func(args)
    except (ValueError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
