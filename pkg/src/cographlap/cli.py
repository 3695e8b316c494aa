"""Command line front end.

Machine-oriented, line-based output: every command prints space-separated
key=value tokens or value:multiplicity pairs, so runs diff cleanly and
golden tests stay byte-stable.  Exit codes: 0 success, 1 usage or input
error, 2 input graph is not a cograph (an induced-path witness is
printed), 3 internal invariant violation.

Graph inputs come in three forms: an inline cotree expression like
"J(U(3),U(J(3),1))", an edge-list file, or a builtin family member
"G:<n>" / "H:<n>".  Commands taking one input use -e/-f; commands taking
two take positional specs, where "@path" names a file and anything else
is parsed as an expression or builtin reference.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import analysis, families
from .cotree import (
    Cotree,
    NotACographError,
    from_graph,
    parse,
    random_cotree,
    render,
)
from .diagonalize import IntegralityError, count_relative, spectrum
from .graph import parse_edge_text
from .twins import are_equivalent, reduction, twin_partition_from_cotree

_FAMILY_REF = re.compile(r"^([GH]):(\d+)$")
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class _Parser(argparse.ArgumentParser):
    # usage errors are exit code 1, not argparse's default 2
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise ValueError(f"expected an integer or p/q rational, got {text!r}")
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ValueError("rational denominator must be nonzero")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def _load_file(path: str) -> Cotree:
    return from_graph(parse_edge_text(Path(path).read_text()))


def _resolve(spec: str) -> Cotree:
    if spec.startswith("@"):
        return _load_file(spec[1:])
    m = _FAMILY_REF.match(spec)
    if m:
        n = int(m.group(2))
        return families.build_g(n) if m.group(1) == "G" else families.build_h(n)
    return parse(spec)


def _input_tree(args) -> Cotree:
    if args.file is not None:
        return _load_file(args.file)
    return _resolve(args.expr)


def _format_spectrum(sp: dict[int, int]) -> str:
    return " ".join(f"{v}:{sp[v]}" for v in sorted(sp, reverse=True))


def _partition_line(sizes: list[int], kinds: list[str]) -> str:
    t = ",".join(str(s) for s in sizes)
    ty = ",".join(kinds)
    return f"k={len(sizes)} t=({t}) types=({ty})"


def cmd_spectrum(args) -> int:
    print(_format_spectrum(spectrum(_input_tree(args))))
    return 0


def cmd_count(args) -> int:
    c = count_relative(_input_tree(args), _parse_rational(args.at))
    print(f"{c.greater} {c.equal} {c.less}")
    return 0


def cmd_twins(args) -> int:
    part = twin_partition_from_cotree(_input_tree(args))
    print(_partition_line(part.twin_numbers(), part.kinds()))
    return 0


def cmd_reduce(args) -> int:
    prof = reduction(_input_tree(args))
    print(_partition_line(prof.twin_numbers, prof.kinds))
    print("reps=(" + ",".join(str(r) for r in prof.reps) + ")")
    print(f"reduced={render(from_graph(prof.graph))}")
    return 0


def cmd_equivalent(args) -> int:
    match = are_equivalent(_resolve(args.a), _resolve(args.b))
    if match is None:
        print("equivalent=no")
        return 0
    t = ",".join(str(s) for s in match.twin_numbers)
    mp = ",".join(str(j) for j in match.class_map)
    sh = ",".join(str(i) for i in match.shared_type)
    print(f"equivalent=yes k={len(match.twin_numbers)} t=({t}) map=({mp}) shared=({sh})")
    return 0


def cmd_verify(args) -> int:
    ta, tb = _resolve(args.a), _resolve(args.b)
    try:
        report = analysis.verify_shared_bound(ta, tb)
    except analysis.NotEquivalentError:
        print("equivalent=no")
        return 0
    holds = "yes" if report.holds else "no"
    print(
        f"equivalent=yes k={report.k} bound={report.bound} "
        f"common={report.common} holds={holds}"
    )
    return 0


def cmd_family(args) -> int:
    if args.prefix is not None:
        companion = _resolve(args.prefix)
        pair = families.cospectral_family(companion, args.n)
    else:
        pair = families.cospectral_pair(args.n)
    print(f"a={render(pair.a)}")
    print(f"b={render(pair.b)}")
    print(f"spectrum={_format_spectrum(pair.spectrum)}")
    return 0


def cmd_random(args) -> int:
    print(render(random_cotree(args.n, random.Random(args.seed))))
    return 0


def cmd_bench(args) -> int:
    # timings vary run to run; everything else on the line is deterministic
    t = random_cotree(args.n, random.Random(args.seed))
    times = []
    for i in range(args.queries):
        start = time.perf_counter()
        c = count_relative(t, i)
        elapsed = (time.perf_counter() - start) * 1000.0
        times.append(elapsed)
        print(
            f"x={i} greater={c.greater} equal={c.equal} less={c.less} "
            f"ms={elapsed:.1f}"
        )
    print(
        f"n={args.n} queries={args.queries} min_ms={min(times):.1f} "
        f"mean_ms={sum(times) / len(times):.1f}"
    )
    return 0


def _add_input_flags(sp) -> None:
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument(
        "-e", "--expr", help="cotree expression, or builtin reference G:<n> / H:<n>"
    )
    g.add_argument(
        "-f", "--file", help="edge-list file: header line 'n m', then m lines 'u v'"
    )


def _add_pair_args(sp) -> None:
    sp.add_argument("a", help="expression, G:<n>/H:<n>, or @file")
    sp.add_argument("b", help="expression, G:<n>/H:<n>, or @file")


def _build_parser() -> _Parser:
    p = _Parser(prog="cographlap", description="Laplacian eigenvalue tools for cographs")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="full Laplacian spectrum")
    _add_input_flags(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("count", help="eigenvalues greater / equal / less than a point")
    _add_input_flags(sp)
    sp.add_argument("--at", required=True, metavar="X", help="integer or p/q rational")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("twins", help="twin classes: sizes and types")
    _add_input_flags(sp)
    sp.set_defaults(func=cmd_twins)

    sp = sub.add_parser("reduce", help="twin reduction: classes, representatives, result")
    _add_input_flags(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("equivalent", help="match the twin reductions of two cographs")
    _add_pair_args(sp)
    sp.set_defaults(func=cmd_equivalent)

    sp = sub.add_parser("verify", help="shared-eigenvalue bound on an equivalent pair")
    _add_pair_args(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("family", help="cospectral nonisomorphic pair of order 2n+1")
    sp.add_argument("--n", type=int, required=True, help="parameter n >= 3")
    sp.add_argument(
        "--prefix", metavar="EXPR", help="join an order-n companion onto both members"
    )
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("random", help="random normalized cotree expression")
    sp.add_argument("--n", type=int, required=True, help="number of leaves")
    sp.add_argument("--seed", type=int, default=0, help="rng seed (default 0)")
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("bench", help="time count queries on a large random cotree")
    sp.add_argument("--n", type=int, default=100000, help="number of leaves")
    sp.add_argument("--queries", type=int, default=10, help="number of query points")
    sp.add_argument("--seed", type=int, default=0, help="rng seed (default 0)")
    sp.set_defaults(func=cmd_bench)

    return p


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IntegralityError, families.VerificationFailedError,
            analysis.RelationViolatedError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except NotACographError as exc:
        print("witness:", *exc.witness)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
