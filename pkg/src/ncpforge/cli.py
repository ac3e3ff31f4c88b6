"""Command-line front end: catalog listing, verification suites, orbit dumps.

Exit codes: 0 all selected checks pass, 2 at least one check failed,
3 a resource cap was hit, 4 configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations

import numpy as np

from .catalog import catalog_specs, degrees_of, order_of, parse_spec
from .errors import (
    ConfigError,
    NcpForgeError,
    OrbitCapExceeded,
    OrderCapExceeded,
)
from .factorizations import (
    chapoton_identity,
    fact_counts,
    iter_fact_with_composition,
    red_count_formula,
)
from .group import DEFAULT_ORDER_CAP, build_group
from .hurwitz import (
    DEFAULT_ORBIT_CAP,
    classify_primitive_orbits,
    conjugacy_partition_on_ncp,
    orbit_decomposition,
    strong_conjugacy_classes,
)
from .ncp import build_ncp, fuss_catalan
from .parabolic import (
    length2_strata,
    reference_row,
    submax_counts,
    submax_total_formula,
    table_a1_verify,
)
from .report import RENDERERS, SCHEMA_VERSION, CheckRow, GroupSection, Report

EXIT_OK = 0
EXIT_CHECK_FAILED = 2
EXIT_CAP = 3
EXIT_CONFIG = 4

SUITES = ("ncp", "counts", "chapoton", "hurwitz", "strata", "table-a1")
DEFAULT_NMAX = 6


class _Parser(argparse.ArgumentParser):
    """argparse with the exit-code contract (4 = config error)."""

    def error(self, message):
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


# -- verification suites -----------------------------------------------------

def _suite_ncp(label, group, ncp):
    rows = [CheckRow(label, "ncp", "catalan",
                     fuss_catalan(group.degrees, 1), ncp.size)]
    member_idx = np.array(ncp.members, dtype=np.int32)
    codim = group.n - group.fixed_dim[member_idx]
    rows.append(CheckRow(label, "ncp", "length_is_codim",
                         0, int(np.sum(ncp.rank != codim))))
    missing = 0
    for i in range(ncp.size):
        for j in range(i, ncp.size):
            try:
                ncp.meet(ncp.members[i], ncp.members[j])
                ncp.join(ncp.members[i], ncp.members[j])
            except NcpForgeError:
                missing += 1
    rows.append(CheckRow(label, "ncp", "meet_join_missing", 0, missing))
    return rows


def _suite_counts(label, group, ncp, ledger):
    n = group.n
    rows = [CheckRow(label, "counts", "red",
                     red_count_formula(group), ledger.fact_enumerated[n])]
    for p in range(1, n + 1):
        rows.append(CheckRow(label, "counts", f"fact_{p}",
                             ledger.fact_zeta[p], ledger.fact_enumerated[p]))
    rows.append(CheckRow(label, "counts", "submax_total",
                         submax_total_formula(group),
                         ledger.fact_enumerated.get(n - 1, 0)))
    return rows


def _suite_chapoton(label, group, ncp, ledger, nmax):
    rows = []
    for chain_length in range(1, nmax + 1):
        res = chapoton_identity(group, ledger, chain_length)
        rows.append(CheckRow(label, "chapoton", f"identity_N{chain_length}",
                             res["rhs"], res["lhs"]))
        rows.append(CheckRow(label, "chapoton", f"multichain_N{chain_length}",
                             fuss_catalan(group.degrees, chain_length),
                             ncp.multichain_count(chain_length)))
    return rows


def _suite_hurwitz(label, group, ncp, orbit_cap):
    n = group.n
    red = list(iter_fact_with_composition(ncp, (1,) * n))
    orbits = orbit_decomposition(group, red, cap=orbit_cap)
    rows = [CheckRow(label, "hurwitz", "red_orbits", 1, len(orbits)),
            CheckRow(label, "hurwitz", "red_orbit_size",
                     red_count_formula(group), orbits[0].size)]
    for k in range(2, n + 1):
        res = classify_primitive_orbits(ncp, k, cap=orbit_cap)
        expected = len({int(group.class_id[ncp.members[i]])
                        for i in range(ncp.size) if ncp.rank[i] == k})
        rows.append(CheckRow(label, "hurwitz", f"primitive_k{k}_orbits",
                             expected, len(res["orbits"])))
        rows.append(CheckRow(label, "hurwitz", f"primitive_k{k}_total",
                             sum(o.size for o in res["orbits"]),
                             res["total"]))
    strong = strong_conjugacy_classes(ncp)
    ordinary = conjugacy_partition_on_ncp(ncp)
    rows.append(CheckRow(label, "hurwitz", "strong_conjugacy_is_conjugacy",
                         True, strong == ordinary))
    return rows


def _suite_strata(label, group, ncp):
    strata = length2_strata(ncp)
    total = submax_counts(ncp, strata)
    rows = [CheckRow(label, "strata", "num_strata",
                     len(reference_row(group.spec)), len(strata)),
            CheckRow(label, "strata", "submax_total",
                     submax_total_formula(group), total),
            CheckRow(label, "strata", "r_is_order",
                     sorted(s.order for s in strata),
                     sorted(s.r for s in strata)),
            CheckRow(label, "strata", "r_degree_shortcut",
                     sorted(s.r for s in strata),
                     sorted(s.r_from_degrees for s in strata))]
    return rows


def _suite_table_a1(label, group, ncp):
    n, h = group.n, group.h
    rep = table_a1_verify(ncp)
    rows = [CheckRow(label, "table-a1", "ll_data",
                     rep["expected"], rep["computed"]),
            CheckRow(label, "table-a1", "degree_sum",
                     n * (n - 1) * h, rep["degree_sum"])]
    if n >= 2:
        # the fiber identity comes from concatenating a length-2 first
        # factor, which only exists in rank >= 2
        rows.append(CheckRow(label, "table-a1", "fiber_identity",
                             rep["red_count"], rep["fiber_total"]))
    return rows


def run_group(spec, suites, order_cap, orbit_cap, nmax) -> GroupSection:
    label = spec.label
    try:
        group = build_group(spec, order_cap=order_cap)
    except (OrderCapExceeded, OrbitCapExceeded):
        raise
    except NcpForgeError as exc:
        section = GroupSection(label=label, order=order_of(spec),
                               degrees=list(degrees_of(spec)),
                               h=degrees_of(spec)[-1], num_reflections=0)
        section.checks.append(CheckRow(label, "build", "group_build",
                                       "ok", f"{type(exc).__name__}: {exc}"))
        return section
    ncp = build_ncp(group)
    section = GroupSection(
        label=label, order=group.size, degrees=list(group.degrees),
        h=group.h, num_reflections=len(group.reflections),
        ncp_size=ncp.size)
    ledger = None
    for suite in suites:
        try:
            if suite == "ncp":
                section.checks.extend(_suite_ncp(label, group, ncp))
            elif suite == "counts":
                ledger = ledger or fact_counts(group, ncp, fuss_range=nmax)
                section.checks.extend(_suite_counts(label, group, ncp, ledger))
            elif suite == "chapoton":
                ledger = ledger or fact_counts(group, ncp, fuss_range=nmax)
                section.checks.extend(
                    _suite_chapoton(label, group, ncp, ledger, nmax))
            elif suite == "hurwitz":
                section.checks.extend(
                    _suite_hurwitz(label, group, ncp, orbit_cap))
            elif suite == "strata":
                section.checks.extend(_suite_strata(label, group, ncp))
            elif suite == "table-a1":
                section.checks.extend(_suite_table_a1(label, group, ncp))
        except (OrderCapExceeded, OrbitCapExceeded):
            raise
        except NcpForgeError as exc:
            section.checks.append(CheckRow(
                label, suite, type(exc).__name__, "ok", str(exc)))
    return section


# -- commands -----------------------------------------------------------------

def _thread_count(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("NCPFORGE_THREADS", "")
    if env.strip():
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"bad NCPFORGE_THREADS value {env!r}") from None
    return 1


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_catalog(args) -> int:
    entries = []
    for spec in catalog_specs():
        order = order_of(spec)
        if args.max_order is not None and order > args.max_order:
            continue
        entries.append({"group": spec.label, "order": order,
                        "degrees": list(degrees_of(spec)),
                        "coxeter_number": degrees_of(spec)[-1]})
    if args.format == "json":
        text = json.dumps({"schema_version": SCHEMA_VERSION,
                           "catalog": entries}, indent=2) + "\n"
    else:
        lines = [f"{e['group']:10s} |W|={e['order']:<7d} "
                 f"degrees={e['degrees']}" for e in entries]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.group:
        specs = [parse_spec(g) for g in args.group]
    else:
        specs = [s for s in catalog_specs()
                 if args.allow_large or order_of(s) <= args.order_cap]
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    order_cap = 10 ** 18 if args.allow_large else args.order_cap
    threads = _thread_count(args)

    def work(spec):
        return run_group(spec, suites, order_cap, args.orbit_cap, args.nmax)

    report = Report()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            report.sections = list(pool.map(work, specs))
    else:
        report.sections = [work(spec) for spec in specs]
    _emit(RENDERERS[args.format](report), args.output)
    return EXIT_OK if report.all_pass else EXIT_CHECK_FAILED


def cmd_orbits(args) -> int:
    spec = parse_spec(args.group)
    try:
        shape = tuple(sorted((int(p) for p in args.shape.split(",")),
                             reverse=True))
    except ValueError:
        raise ConfigError(f"bad shape {args.shape!r}") from None
    group = build_group(spec, order_cap=args.order_cap)
    if any(p < 1 for p in shape) or sum(shape) != group.n:
        raise ConfigError(
            f"shape {list(shape)} is not a partition of n = {group.n}")
    ncp = build_ncp(group)
    tuples = []
    for comp in sorted(set(permutations(shape))):
        tuples.extend(iter_fact_with_composition(ncp, comp))
    orbits = orbit_decomposition(group, tuples, cap=args.orbit_cap)
    summary = {
        "schema_version": SCHEMA_VERSION,
        "group": spec.label,
        "shape": list(shape),
        "total": len(tuples),
        "orbit_count": len(orbits),
        "orbits": [
            {"size": o.size,
             "factor_classes": sorted({
                 tuple(int(group.class_id[w]) for w in t) for t in o.members
             })[0]}
            for o in orbits
        ],
    }
    if args.format == "json":
        text = json.dumps(summary, indent=2, default=list) + "\n"
    else:
        lines = [f"group {spec.label}  shape {list(shape)}  "
                 f"tuples {len(tuples)}  orbits {len(orbits)}"]
        lines += [f"  orbit {i}: size {o.size}"
                  for i, o in enumerate(orbits)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="ncpforge",
                     description="Exact verification toolkit for "
                                 "noncrossing-partition combinatorics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="list supported groups")
    p_cat.add_argument("--max-order", type=int, default=None)
    p_cat.add_argument("--format", choices=("text", "json"), default="text")
    p_cat.add_argument("--output", default=None)
    p_cat.set_defaults(func=cmd_catalog)

    p_ver = sub.add_parser("verify", help="run verification suites")
    p_ver.add_argument("--group", action="append", default=None,
                       help="group spec (repeatable); default: whole catalog")
    p_ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p_ver.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
    p_ver.add_argument("--output", default=None)
    p_ver.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    p_ver.add_argument("--orbit-cap", type=int, default=DEFAULT_ORBIT_CAP)
    p_ver.add_argument("--nmax", type=int, default=DEFAULT_NMAX,
                       help="largest multichain length for the Chapoton suite")
    p_ver.add_argument("--threads", type=int, default=None)
    p_ver.add_argument("--allow-large", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_orb = sub.add_parser("orbits", help="Hurwitz orbit decomposition")
    p_orb.add_argument("--group", required=True)
    p_orb.add_argument("--shape", required=True,
                       help="comma-separated partition of n, e.g. 2,1,1")
    p_orb.add_argument("--format", choices=("text", "json"), default="text")
    p_orb.add_argument("--output", default=None)
    p_orb.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    p_orb.add_argument("--orbit-cap", type=int, default=DEFAULT_ORBIT_CAP)
    p_orb.set_defaults(func=cmd_orbits)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OrderCapExceeded, OrbitCapExceeded) as exc:
        print(f"ncpforge: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ConfigError as exc:
        print(f"ncpforge: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
