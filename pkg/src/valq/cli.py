"""Command-line front end.

Subcommands: ``seeds`` walks the exchange graph, ``mutate`` applies a
mutation word, ``char`` prints a character table for one dimension
vector, ``verify`` runs one named suite and ``verify-all`` runs every
suite.  Exit status: 0 when nothing failed, 1 when a suite reported
FAIL, 2 on bad input.  Vertex numbers on the command line are 1-based.
"""

import argparse
import json
import sys

from .characters import (
    DEFAULT_PRIMES,
    character_in_seed,
    counting_polynomials,
    torus_denominator_vector,
    InterpolationInconsistent,
)
from .classical import (
    ClassicalSeed,
    default_names,
    enumerate_exchange_graph,
    variable_f_polynomial,
    variable_g_vector,
)
from .exchange import (
    BUILTIN_MATRICES,
    BadSymmetrizer,
    IncompatiblePair,
    IndexOutOfRange,
    Lambda0NotSkew,
    NotAcyclic,
    NotSkewSymmetrizable,
    build_exchange_data,
    builtin_exchange_data,
)
from .finfield import CapExceeded, NotPrime, is_prime
from .laurent import ArityMismatch, NegativeExponentInF
from .qtorus import QuantumSeed
from .reps import NoRigidFound, NotSinkOrSource
from .verify import (
    ALL_CHECKS,
    FAIL,
    IMPLIED_NOTE,
    VerifyContext,
    run_all,
    run_check,
)

INPUT_ERRORS = (
    NotSkewSymmetrizable,
    NotAcyclic,
    BadSymmetrizer,
    Lambda0NotSkew,
    IndexOutOfRange,
    IncompatiblePair,
    NotPrime,
    CapExceeded,
    NoRigidFound,
    NotSinkOrSource,
    InterpolationInconsistent,
    ArityMismatch,
    NegativeExponentInF,
    KeyError,
    OSError,
    ValueError,
)


def _int_list(text, flag):
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError("%s expects comma-separated integers" % flag)


def _add_common(parser):
    parser.add_argument(
        "--matrix", metavar="FILE", help="JSON file with B and optional D, Lambda0"
    )
    parser.add_argument(
        "--type",
        dest="type_name",
        metavar="NAME",
        help="built-in matrix: %s" % ", ".join(sorted(BUILTIN_MATRICES)),
    )
    parser.add_argument("--primes", metavar="p1,p2,...", default=None)
    parser.add_argument("--max-depth", type=int, default=None)
    parser.add_argument("--max-seeds", type=int, default=10000)
    parser.add_argument("--cap", type=int, default=1 << 16)
    parser.add_argument("--rng-seed", type=int, default=0)
    parser.add_argument("--json", action="store_true", dest="as_json")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="valq",
        description="exact verification suites for acyclic exchange matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seeds", help="enumerate the exchange graph")
    _add_common(p)

    p = sub.add_parser("mutate", help="apply a mutation word to the initial seed")
    _add_common(p)
    p.add_argument(
        "--seq", required=True, metavar="k1,k2,...", help="1-based vertices"
    )

    p = sub.add_parser("char", help="character table of one dimension vector")
    _add_common(p)
    p.add_argument("--dim", required=True, metavar="v1,v2,...")

    p = sub.add_parser("verify", help="run one named suite")
    _add_common(p)
    p.add_argument("check", choices=list(ALL_CHECKS))
    p.add_argument(
        "--source",
        type=int,
        default=None,
        metavar="K",
        help="restrict principal-source to the 1-based source vertex K",
    )

    p = sub.add_parser("verify-all", help="run every suite")
    _add_common(p)

    return parser


def load_data(args):
    """Exchange data plus a display label from --type or --matrix."""
    if args.matrix and args.type_name:
        raise ValueError("give either --matrix or --type, not both")
    if args.type_name:
        name = args.type_name.upper()
        return builtin_exchange_data(name), name
    if args.matrix:
        with open(args.matrix, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
        if not isinstance(obj, dict) or "B" not in obj:
            raise ValueError("matrix file needs a JSON object with key B")
        b = tuple(tuple(int(x) for x in row) for row in obj["B"])
        diag = obj.get("D")
        if diag is not None:
            diag = tuple(int(x) for x in diag)
        lambda0 = obj.get("Lambda0")
        if lambda0 is not None:
            lambda0 = tuple(tuple(int(x) for x in row) for row in lambda0)
        return build_exchange_data(b, lambda0=lambda0, diag=diag), args.matrix
    raise ValueError("need --matrix FILE or --type NAME")


def _primes(args):
    if args.primes is None:
        return DEFAULT_PRIMES
    primes = tuple(_int_list(args.primes, "--primes"))
    if not primes:
        raise ValueError("--primes must name at least one prime")
    for p in primes:
        if not is_prime(p):
            raise NotPrime("--primes entry %d is not prime" % p)
    return primes


def cmd_seeds(args):
    data, _ = load_data(args)
    result = enumerate_exchange_graph(
        data, max_depth=args.max_depth, max_seeds=args.max_seeds
    )
    names = default_names(data.n)
    if args.as_json:
        doc = {
            "count": len(result.seeds),
            "truncated": result.truncated,
            "seeds": [
                {
                    "index": idx,
                    "history": [k + 1 for k in seed.history],
                    "variables": [
                        seed.variables[i].render(names) for i in range(data.n)
                    ],
                }
                for idx, seed in enumerate(result.seeds)
            ],
            "edges": sorted(sorted(edge) for edge in result.edges),
        }
        print(json.dumps(doc, indent=2))
    else:
        print(
            "%d seeds%s" % (len(result.seeds), " (truncated)" if result.truncated else "")
        )
        for idx, seed in enumerate(result.seeds):
            variables = ", ".join(
                seed.variables[i].render(names) for i in range(data.n)
            )
            print("%3d  depth %d  %s" % (idx, seed.depth, variables))
    return 0


def cmd_mutate(args):
    data, _ = load_data(args)
    word = _int_list(args.seq, "--seq")
    for k in word:
        if not 1 <= k <= data.n:
            raise IndexOutOfRange("--seq entries must lie in 1..%d" % data.n)
    seed = ClassicalSeed.initial_seed(data).mutate_sequence(
        [k - 1 for k in word]
    )
    names = default_names(data.n)
    if args.as_json:
        doc = {
            "history": word,
            "B": [list(r) for r in seed.current.btilde[: data.n]],
            "variables": [
                seed.variables[i].render(names) for i in range(data.n)
            ],
            "d_vectors": [list(seed.d_vector(i)) for i in range(data.n)],
        }
        print(json.dumps(doc, indent=2))
    else:
        for i in range(data.n):
            print("x%d = %s" % (i + 1, seed.variables[i].render(names)))
    return 0


def character_table(data, v, primes, rng_seed, cap):
    """Character data for one dimension vector, JSON-ready."""
    n = data.n
    if len(v) != n or any(x < 0 for x in v):
        raise ValueError("--dim needs %d nonnegative entries" % n)
    polys = counting_polynomials(
        data.principal(), data.diag, v, primes=primes, rng_seed=rng_seed, cap=cap
    )
    x_v = character_in_seed(QuantumSeed.initial_seed(data), v, polys)
    classical = x_v.specialize_q1()
    frozen = variable_f_polynomial(classical, n)
    names = default_names(n)
    return {
        "v": list(v),
        "P": {
            ",".join(str(x) for x in e): list(polys[e])
            for e in sorted(polys)
        },
        "F": frozen.render(names[n:]),
        "g": list(variable_g_vector(classical, n)),
        "d": list(torus_denominator_vector(x_v, n)),
        "X_v": x_v.render(),
        "X_v_terms": [
            [list(exp), coeff.render()] for exp, coeff in x_v.sorted_terms()
        ],
    }


def cmd_char(args):
    data, _ = load_data(args)
    v = tuple(_int_list(args.dim, "--dim"))
    table = character_table(
        data, v, _primes(args), args.rng_seed, args.cap
    )
    if args.as_json:
        print(json.dumps(table, indent=2))
    else:
        print("v = (%s)" % ", ".join(str(x) for x in table["v"]))
        for key in sorted(table["P"]):
            print("P[%s] = %s" % (key, table["P"][key]))
        print("F = %s" % table["F"])
        print("g = %s" % table["g"])
        print("d = %s" % table["d"])
        print("X_v = %s" % table["X_v"])
    return 0


def _context(args, data, name):
    return VerifyContext(
        data,
        primes=_primes(args),
        rng_seed=args.rng_seed,
        cap=args.cap,
        max_depth=args.max_depth,
        max_seeds=args.max_seeds,
        name=name,
    )


def _emit_reports(reports, as_json, note=None):
    if as_json:
        doc = {"reports": [r.to_dict() for r in reports]}
        if note:
            doc["note"] = note
        print(json.dumps(doc, indent=2))
    else:
        for report in reports:
            print(report.row())
        if note:
            print("note: %s" % note)
    return 1 if any(r.status == FAIL for r in reports) else 0


def cmd_verify(args):
    data, name = load_data(args)
    ctx = _context(args, data, name)
    source = None
    if args.source is not None:
        if not 1 <= args.source <= data.n:
            raise IndexOutOfRange("--source must lie in 1..%d" % data.n)
        source = args.source - 1
    report = run_check(args.check, ctx, source=source)
    return _emit_reports([report], args.as_json)


def cmd_verify_all(args):
    data, name = load_data(args)
    ctx = _context(args, data, name)
    reports = run_all(ctx)
    return _emit_reports(reports, args.as_json, note=IMPLIED_NOTE)


COMMANDS = {
    "seeds": cmd_seeds,
    "mutate": cmd_mutate,
    "char": cmd_char,
    "verify": cmd_verify,
    "verify-all": cmd_verify_all,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except INPUT_ERRORS as exc:
        message = exc.args[0] if exc.args else exc
        print("error: %s" % (message,), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
