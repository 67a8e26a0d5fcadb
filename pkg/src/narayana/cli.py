"""Command-line surface: distribution tables, q-polynomials, verification
reports, and Hasse-diagram exports, all machine readable.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 usage error.  With identical inputs and --seed the standard output is
byte identical across runs; wall-clock timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import time
from collections.abc import Sequence

from . import __version__
from .dyck import DyckPath, distribution, enumerate_paths, joint_q, ls_set, random_path
from .posets import chain_product_2xn, flag_h_table, ideal_lattice, verify_theorem_main
from .qpoly import QPoly, catalan, narayana, q_narayana_closed
from .shelling import check_preshelling, flag_h_from_partition, omega_n, partition_intervals
from .tableaux import (
    dyck_to_ssyt,
    enumerate_ssyt,
    q_narayana_schur,
    row_sums,
    ssyt_to_dyck,
    two_column,
)

CLOSED_FORM_LIMIT = 60
ENUMERATION_LIMIT = 12
OMEGA_LIMIT = 8
ENUMERATIVE_ROUTES = ("enumerate", "schur-ssyt")
VERIFY_LIMITS = {
    "main-theorem": 6,
    "preshelling": 5,
    "ssyt": 8,
    "q-identity": 8,
    "parth": 8,
}
Q_PAIRINGS = {"des": "maj", "lnfs": "maj_l", "hp": "maj_w"}


def _usage(message: str) -> int:
    print(f"narayana: error: {message}", file=sys.stderr)
    return 2


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _subset_order(s: frozenset) -> tuple:
    return (len(s), sorted(s))


def cmd_narayana(args: argparse.Namespace) -> int:
    """Row of N(n, k) for k = 0..n-1 plus the Catalan row sum."""
    n = args.n
    if not 1 <= n <= CLOSED_FORM_LIMIT:
        return _usage(f"n out of range: expected 1 <= n <= {CLOSED_FORM_LIMIT}, got {n}")
    row = [narayana(n, k) for k in range(n)]
    total = catalan(n)
    if args.format == "json":
        _emit_json({"command": "narayana", "n": n, "row": row, "sum": total})
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["k", "narayana"])
        for k, value in enumerate(row):
            writer.writerow([k, value])
        writer.writerow(["sum", total])
    else:
        print(", ".join(str(value) for value in row))
        print(f"sum {total}")
    return 0


def _qnarayana_route(route: str, n: int, k: int) -> QPoly:
    if route == "closed":
        return q_narayana_closed(n, k)
    if route == "schur-ssyt":
        return q_narayana_schur(n, k, method="ssyt")
    if route == "schur-hook":
        return q_narayana_schur(n, k, method="hook")
    return joint_q(n, "des", "maj").get(k, QPoly.zero())


def cmd_qnarayana(args: argparse.Namespace) -> int:
    """One q-Narayana polynomial, by a single route or all routes compared."""
    n, k, route = args.n, args.k, args.route
    if n < 1:
        return _usage(f"n must be positive, got {n}")
    if k < 0:
        return _usage(f"k must be nonnegative, got {k}")
    if route in ENUMERATIVE_ROUTES and n > ENUMERATION_LIMIT:
        return _usage(f"route {route} enumerates and is limited to n <= {ENUMERATION_LIMIT}")
    if route != "all":
        poly = _qnarayana_route(route, n, k)
        if args.format == "json":
            _emit_json(
                {
                    "coefficients": list(poly.coeffs),
                    "command": "qnarayana",
                    "k": k,
                    "n": n,
                    "route": route,
                }
            )
        else:
            print(poly)
        return 0
    names = ["closed", "schur-hook"]
    if n <= ENUMERATION_LIMIT:
        names += list(ENUMERATIVE_ROUTES)
    routes = {name: _qnarayana_route(name, n, k) for name in names}
    verdict = "pass" if len({p.coeffs for p in routes.values()}) == 1 else "fail"
    if args.format == "json":
        _emit_json(
            {
                "command": "qnarayana",
                "k": k,
                "n": n,
                "routes": {name: list(p.coeffs) for name, p in routes.items()},
                "verdict": verdict,
            }
        )
    else:
        for name in sorted(routes):
            print(f"{name}: {routes[name]}")
        print(f"verdict {verdict}")
    return 0 if verdict == "pass" else 1


def _cache_file(args: argparse.Namespace, n: int, stat: str, with_q: bool) -> str | None:
    root = args.cache_dir or os.environ.get("NARAYANA_CACHE_DIR")
    if not root:
        return None
    marker = "-q" if with_q else ""
    return os.path.join(root, f"dist-{__version__}-n{n}-{stat}{marker}.json")


def _load_cached(path: str | None) -> dict | None:
    if path is None or not os.path.exists(path):
        return None
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, ValueError):
        return None


def _store_cached(path: str | None, payload: dict) -> None:
    if path is None:
        return
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")


def _compute_dist(n: int, stat: str, costat: str | None) -> dict:
    if costat is None:
        table = [[k, count] for k, count in distribution(n, stat).items()]
    else:
        wrt = DyckPath("vh" * n) if costat == "maj_w" else None
        polys = joint_q(n, stat, costat, wrt=wrt)
        table = [[k, list(p.coeffs)] for k, p in sorted(polys.items())]
    return {
        "command": "dist",
        "costat": costat,
        "n": n,
        "q": costat is not None,
        "stat": stat,
        "table": table,
    }


def cmd_dist(args: argparse.Namespace) -> int:
    """Exact value-to-count table of one statistic, optionally q-refined."""
    n, stat = args.n, args.stat
    if not 1 <= n <= ENUMERATION_LIMIT:
        return _usage(f"n out of range: expected 1 <= n <= {ENUMERATION_LIMIT}, got {n}")
    costat = None
    if args.q:
        costat = Q_PAIRINGS.get(stat)
        if costat is None:
            return _usage(f"statistic {stat} has no paired co-statistic for --q")
    cache = _cache_file(args, n, stat, args.q)
    payload = _load_cached(cache)
    if payload is None:
        payload = _compute_dist(n, stat, costat)
        _store_cached(cache, payload)
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if payload["q"]:
            writer.writerow(["value", "coefficients"])
            for k, coeffs in payload["table"]:
                writer.writerow([k, json.dumps(coeffs, separators=(",", ":"))])
        else:
            writer.writerow(["value", "count"])
            for k, count in payload["table"]:
                writer.writerow([k, count])
    else:
        for k, entry in payload["table"]:
            rendered = QPoly(entry) if payload["q"] else entry
            print(f"{k}  {rendered}")
    return 0


def _verify_main_theorem(n: int, ws: list[DyckPath]) -> list[dict]:
    witnesses = []
    for w in ws:
        report = verify_theorem_main(n, w)
        if report["passed"]:
            continue
        for entry in report["entries"]:
            if not entry["match"]:
                witnesses.append(
                    {
                        "flag_h": entry["flag_h"],
                        "paths": entry["paths"],
                        "ref_path": w.word,
                        "s": entry["s"],
                    }
                )
    return witnesses


def _verify_ssyt(n: int) -> list[dict]:
    betas = flag_h_table(ideal_lattice(chain_product_2xn(n)))
    counts: dict[frozenset, int] = {}
    witnesses = []
    for k in range(n):
        for T in enumerate_ssyt(two_column(k), n - 1):
            S = frozenset(row_sums(T))
            counts[S] = counts.get(S, 0) + 1
            w = ssyt_to_dyck(T, n)
            if dyck_to_ssyt(w) != T:
                witnesses.append({"path": w.word, "tableau": [list(r) for r in T.rows]})
    for S in sorted(betas, key=_subset_order):
        expected, got = betas[S], counts.get(S, 0)
        if expected != got:
            witnesses.append({"flag_h": expected, "s": sorted(S), "ssyt_count": got})
    return witnesses


def _verify_preshelling(n: int) -> list[dict]:
    report = check_preshelling(omega_n(n))
    if report["is_preshelling"]:
        return []
    witnesses = []
    for name in ("i", "ii", "iii", "iv"):
        if name in report["witnesses"]:
            witnesses.append({"condition": name, **report["witnesses"][name]})
    return witnesses


def _verify_q_identity(n: int) -> list[dict]:
    by_des = joint_q(n, "des", "maj")
    witnesses = []
    for k in range(n):
        routes = {
            "closed": q_narayana_closed(n, k),
            "enumerate": by_des.get(k, QPoly.zero()),
            "schur-hook": q_narayana_schur(n, k, method="hook"),
            "schur-ssyt": q_narayana_schur(n, k, method="ssyt"),
        }
        if len({p.coeffs for p in routes.values()}) > 1:
            witnesses.append(
                {"k": k, "routes": {name: list(p.coeffs) for name, p in routes.items()}}
            )
    return witnesses


def _verify_parth(n: int) -> list[dict]:
    L = ideal_lattice(chain_product_2xn(n))
    betas = flag_h_table(L)
    table = flag_h_from_partition(L, partition_intervals(omega_n(n)))
    ls_counts: dict[frozenset, int] = {}
    for w in enumerate_paths(n):
        s = ls_set(w)
        ls_counts[s] = ls_counts.get(s, 0) + 1
    witnesses = []
    for S in sorted(betas, key=_subset_order):
        trio = (table.get(S, 0), betas[S], ls_counts.get(S, 0))
        if len(set(trio)) > 1:
            witnesses.append(
                {
                    "flag_h": trio[1],
                    "ls_count": trio[2],
                    "partition": trio[0],
                    "s": sorted(S),
                }
            )
    return witnesses


def cmd_verify(args: argparse.Namespace) -> int:
    """Run one verification check; exit 1 with witnesses when it fails."""
    check, n = args.check, args.n
    limit = VERIFY_LIMITS[check]
    if not 1 <= n <= limit:
        return _usage(f"check {check} supports 1 <= n <= {limit}, got {n}")
    if args.samples < 1:
        return _usage(f"samples must be positive, got {args.samples}")
    parameters: dict = {"n": n}
    started = time.monotonic()
    if check == "main-theorem":
        ref = args.ref_path if args.ref_path is not None else "v" * n + "h" * n
        if ref == "random":
            parameters.update({"ref_path": "random", "samples": args.samples, "seed": args.seed})
            rng = random.Random(args.seed)
            ws = [random_path(n, rng) for _ in range(args.samples)]
        else:
            try:
                w = DyckPath(ref)
            except ValueError as exc:
                return _usage(f"bad ref-path: {exc}")
            if w.n != n:
                return _usage(f"ref-path has semilength {w.n}, expected {n}")
            parameters["ref_path"] = w.word
            ws = [w]
        witnesses = _verify_main_theorem(n, ws)
    elif check == "ssyt":
        witnesses = _verify_ssyt(n)
    elif check == "preshelling":
        witnesses = _verify_preshelling(n)
    elif check == "q-identity":
        witnesses = _verify_q_identity(n)
    else:
        witnesses = _verify_parth(n)
    elapsed = time.monotonic() - started
    verdict = "pass" if not witnesses else "fail"
    if args.format == "json":
        _emit_json(
            {
                "check": check,
                "command": "verify",
                "parameters": parameters,
                "verdict": verdict,
                "witnesses": witnesses,
            }
        )
    else:
        print(f"check {check}")
        for key in sorted(parameters):
            print(f"{key.replace('_', '-')} {parameters[key]}")
        print(f"verdict {verdict}")
        for witness in witnesses:
            print(f"witness {json.dumps(witness, sort_keys=True)}")
        print(f"elapsed {elapsed:.3f}s", file=sys.stderr)
    return 0 if verdict == "pass" else 1


def cmd_omega(args: argparse.Namespace) -> int:
    """Hasse diagram of the rewriting order, as DOT or JSON."""
    n = args.n
    if not 1 <= n <= OMEGA_LIMIT:
        return _usage(f"n out of range: expected 1 <= n <= {OMEGA_LIMIT}, got {n}")
    om = omega_n(n)
    words = om.labels
    annotations = {w: sorted(ls_set(DyckPath(w))) for w in words}
    edges = [(words[a], words[b]) for a, b in sorted(om.covers())]
    if args.format == "json":
        _emit_json(
            {
                "command": "omega",
                "edges": [list(edge) for edge in edges],
                "n": n,
                "nodes": [{"ls": annotations[w], "word": w} for w in words],
            }
        )
    else:
        print(f"digraph omega_{n} {{")
        print("  rankdir = BT;")
        for w in words:
            inner = ", ".join(str(i) for i in annotations[w])
            print(f'  "{w}" [label="{w}\\nLS {{{inner}}}"];')
        for a, b in edges:
            print(f'  "{a}" -> "{b}";')
        print("}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narayana",
        description="Exact Narayana, q-Narayana, and shelling computations on Dyck paths.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("narayana", help="row of Narayana numbers with its Catalan sum")
    p.add_argument("--n", type=int, required=True, help="semilength, 1 <= n <= 60")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_narayana)

    p = sub.add_parser("qnarayana", help="q-Narayana polynomial by one route or all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--route",
        choices=("closed", "schur-ssyt", "schur-hook", "enumerate", "all"),
        default="closed",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_qnarayana)

    p = sub.add_parser("dist", help="distribution table of a path statistic")
    p.add_argument("--n", type=int, required=True, help="semilength, 1 <= n <= 12")
    p.add_argument("--stat", choices=("des", "hp", "ea", "lnfs", "da"), required=True)
    p.add_argument(
        "--q",
        action="store_true",
        help="refine counts by the statistic's paired major-index co-statistic",
    )
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument(
        "--cache-dir",
        help="directory for cached tables; NARAYANA_CACHE_DIR is the fallback",
    )
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="run one verification check and report pass/fail")
    p.add_argument(
        "--check",
        choices=("main-theorem", "ssyt", "preshelling", "q-identity", "parth"),
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--ref-path",
        help="vh-string or 'random' (main-theorem only); default v^n h^n",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("omega", help="Hasse diagram of the rewriting order on paths")
    p.add_argument("--n", type=int, required=True, help="semilength, 1 <= n <= 8")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_omega)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
