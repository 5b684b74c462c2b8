"""Command line front end.

    finitetc info sphere:1
    finitetc cc --n 2 sphere:1
    finitetc cc --n 2 --m 0 --variant linear sphere:1
    finitetc cck --n 2 --k 1 sphere:1
    finitetc ccinf --n 2 --k-max 2 sphere:1
    finitetc sc --n 2 --k-max 2 cycle:4
    finitetc verify corollaries --random 50 --max-size 5 --seed 7

Exit codes: 0 exact answer (or all properties pass), 2 undecided or only an
upper bound, 1 error or a property violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .complex import face_poset
from .complexity import Budget, cat, cc_n, cc_nm
from .errors import FiniteTCError, ParseError
from .formats import load_complex, load_poset
from .homotopy import core, is_contractible
from .poset import is_connected
from .sections import VARIANTS
from .simplicial import sc_n_of_complex
from .subdivision import cc_inf_n, cc_k_n
from . import verify as V

EXIT_OK, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 2


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value
    return parse


def _at_least_two(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=_positive(int), default=None,
                        help="maps visited per homotopy search")
    common.add_argument("--budget-seconds", type=_positive(float), default=None,
                        help="wall clock limit per invariant")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--emit-witness", action="store_true", help="include section witnesses")
    common.add_argument("--jobs", type=_positive(int), default=1, help="worker processes (verify)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON")

    p = argparse.ArgumentParser(prog="finitetc", description="Higher topological complexity of finite spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", parents=[common], help="size, connectivity and core of a poset")
    s.add_argument("source")

    s = sub.add_parser("cat", parents=[common], help="LS category")
    s.add_argument("source")

    s = sub.add_parser("cc", parents=[common], help="cc_n, or cc_{n,m} with --m")
    s.add_argument("source")
    s.add_argument("--n", type=_at_least_two, default=2)
    s.add_argument("--m", type=_nonnegative, default=None)
    s.add_argument("--variant", choices=VARIANTS, default="wedge")

    s = sub.add_parser("cck", aliases=["cc_k"], parents=[common], help="cc^k_n over sd^k(P^n)")
    s.add_argument("source")
    s.add_argument("--n", type=_at_least_two, default=2)
    s.add_argument("--k", type=_nonnegative, required=True)

    for name, aliases, helptext in (("ccinf", ["cc_inf"], "min over k <= k_max of cc^k_n"),
                                    ("sc", [], "SC_n of a simplicial complex")):
        s = sub.add_parser(name, aliases=aliases, parents=[common], help=helptext)
        s.add_argument("source")
        s.add_argument("--n", type=_at_least_two, default=2)
        s.add_argument("--k-max", type=_nonnegative, default=2)
        s.add_argument("--accept-stable", action="store_true",
                       help="certify two consecutive equal exact levels")

    s = sub.add_parser("verify", parents=[common], help="run the property suites")
    s.add_argument("suite", choices=V.SUITES + ("all",))
    s.add_argument("--random", type=_nonnegative, default=0, help="extra random connected posets")
    s.add_argument("--max-size", type=_positive(int), default=5)
    return p


def _budget(args) -> Budget:
    b = Budget()
    if args.budget_nodes is not None:
        b.nodes = args.budget_nodes
    b.seconds = args.budget_seconds
    return b


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def cmd_info(args) -> int:
    P = load_poset(args.source)
    C = core(P)
    info = {"source": args.source, "elements": len(P), "hasse_edges": len(P.hasse_edges),
            "connected": is_connected(P), "core_size": len(C), "contractible": is_contractible(P)}
    if args.format == "json":
        print(_dump(info))
    else:
        for key, value in info.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_compute(args) -> int:
    budget = _budget(args)
    cmd = args.command
    if cmd == "sc":
        K = load_complex(args.source)
        rep = sc_n_of_complex(K, args.n, args.k_max, budget=budget, accept_stable=args.accept_stable,
                              want_witness=args.emit_witness)
    else:
        P = load_poset(args.source)
        if cmd == "cat":
            rep = cat(P, budget=budget)
        elif cmd == "cc" and args.m is not None:
            rep = cc_nm(P, args.n, args.m, args.variant, budget=budget, want_witness=args.emit_witness)
        elif cmd == "cc":
            rep = cc_n(P, args.n, budget=budget, want_witness=args.emit_witness)
        elif cmd in ("cck", "cc_k"):
            rep = cc_k_n(P, args.n, args.k, budget=budget, want_witness=args.emit_witness)
        else:
            rep = cc_inf_n(P, args.n, args.k_max, budget=budget, accept_stable=args.accept_stable,
                           want_witness=args.emit_witness)
    if args.format == "json":
        print(_dump(rep.to_json(timing=args.timing)))
    else:
        print(rep)
        for i, U in enumerate(rep.cover):
            print(f"  open {i}: {{" + ", ".join(U.labels()) + "}")
        for note in rep.notes:
            print(f"  note: {note}")
        if args.emit_witness and rep.witnesses:
            print(_dump([w.to_json() if w is not None else None for w in rep.witnesses]))
    return EXIT_OK if rep.exact else EXIT_UNDECIDED


def _verify_one(task):
    suite, item, budget = task
    if suite == "lemmas":
        return V.verify_lemmas([item], budget=budget)
    return V.verify_corollaries([item], exhaustive_size=0, budget=budget)


def _merge(results, suite) -> V.SuiteResult:
    out = V.SuiteResult(suite)
    for r in results:
        for name, prop in r.properties.items():
            acc = out.prop(name)
            acc.checked += prop.checked
            acc.passed += prop.passed
            acc.skipped += prop.skipped
            acc.violations.extend(prop.violations)
    return out


def run_verify(suite: str, random_count: int, max_size: int, seed: int, budget: Budget,
               jobs: int = 1) -> list:
    """Suites over the builtin corpus plus random posets.

    With ``jobs > 1`` corpus members are checked in worker processes and the
    results merged in corpus order, so the output does not depend on ``jobs``.
    """
    if jobs <= 1:
        return V.run_suite(suite, random_count=random_count, max_size=max_size, seed=seed, budget=budget)
    corpus = V.default_corpus(random_count, max_size, seed)
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        if suite in ("lemmas", "all"):
            parts = list(pool.map(_verify_one, [("lemmas", item, budget) for item in corpus]))
            out.append(_merge(parts, "lemmas"))
        if suite in ("corollaries", "all"):
            head = V.verify_corollaries([], budget=budget)
            parts = list(pool.map(_verify_one, [("corollaries", item, budget) for item in corpus]))
            out.append(_merge([head] + parts, "corollaries"))
    if suite in ("transfer", "all"):
        out.append(V.verify_transfer(budget=budget))
    return out


def cmd_verify(args) -> int:
    results = run_verify(args.suite, args.random, args.max_size, args.seed, _budget(args), args.jobs)
    if args.format == "json":
        print(_dump([r.to_json() for r in results]))
    else:
        for r in results:
            print("\n".join(r.lines()))
    return EXIT_OK if all(r.ok for r in results) else EXIT_ERROR


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "info":
            return cmd_info(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_compute(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (FiniteTCError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
