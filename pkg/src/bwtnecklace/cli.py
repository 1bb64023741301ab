"""Command line front end.

Every command prints one JSON object (the canonical format) carrying a
``schema_version`` field; ``--format csv|text`` flatten the same data and
``graph ... --format dot`` emits Graphviz.  Exit status is 0 on success,
1 on a domain error or a failed verification, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .bwt import (bwt, inverse_bwt, inverse_standard_permutation_cycle, is_bwt_image,
                  standard_permutation)
from . import gdb_graph as gg
from . import gfp_algebra as gf
from . import snf_sandpile as sp
from . import verify as vf
from .errors import NecklaceError
from .words import DEFAULT_BOUND, Necklace, Word

SCHEMA_VERSION = 1
MIN_BOUND = 2**10


@dataclass
class RunConfig:
    enumeration_bound: int = DEFAULT_BOUND
    output_format: str = "json"
    # accepted for interface compatibility; computations are single-threaded
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)


@dataclass
class Output:
    payload: dict
    rows: list[dict] | None = None
    dot: str | None = None
    ok: bool = True


class UsageError(Exception):
    pass


# -- handlers -----------------------------------------------------------------

def _word(args, k: int | None = None) -> Word:
    if args.word is None or len(args.word) != 1:
        raise UsageError("expected exactly one --word")
    return Word.parse(args.word[0], k or args.k or 36)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def cmd_bwt(args, cfg):
    w = _word(args)
    u = bwt(w)
    try:
        cycle = list(inverse_standard_permutation_cycle(u))
    except NecklaceError:
        cycle = None
    return Output({"bwt": str(u), "cycle": cycle})


def cmd_ibwt(args, cfg):
    u = _word(args)
    info = is_bwt_image(u)
    neck = inverse_bwt(u)
    return Output({"necklace": str(neck), "kind": info.kind.value, "power": info.power})


def cmd_stdperm(args, cfg):
    u = _word(args)
    pi = standard_permutation(u)
    inv = pi.inverse()
    return Output({
        "one_line": list(pi.one_line),
        "cycles": [list(c) for c in pi.cycles()],
        "inverse_one_line": list(inv.one_line),
        "inverse_cycles": [list(c) for c in inv.cycles()],
        "is_cycle": pi.is_single_cycle(),
    })


def _necklace_rows(necks):
    return [{"necklace": str(n)} for n in necks]


def cmd_words(args, cfg):
    _require(args, "k", "length")
    words = gg.enumerate_gdb_words(args.k, args.length, cfg.enumeration_bound)
    return Output({"k": args.k, "length": args.length, "count": len(words),
                   "words": [str(w) for w in words]}, rows=_necklace_rows(words))


def cmd_count(args, cfg):
    _require(args, "k")
    if args.length is not None:
        c = gg.count_gdb_words(args.k, args.length)
        return Output({"k": args.k, "length": args.length, "count": c})
    _require(args, "max_n")
    rows = [{"n": n, "length": args.k * n, "count": gg.count_gdb_words(args.k, args.k * n)}
            for n in range(1, args.max_n + 1)]
    return Output({"k": args.k, "counts": rows}, rows=rows)


def cmd_graph(args, cfg):
    _require(args, "k", "n")
    g = gg.GdbGraph(args.k, args.n)
    action = args.action
    if action == "edges":
        out = Output({"k": g.k, "n": g.n, "edges": [list(e) for e in g.edges()]},
                     rows=[{"source": s, "target": t} for s, t in g.edges()])
    elif action == "laplacian":
        out = Output({"k": g.k, "n": g.n, "laplacian": gg.laplacian(g),
                      "reduced_laplacian": gg.reduced_laplacian(g)},
                     rows=[{f"c{j}": x for j, x in enumerate(r)} for r in gg.laplacian(g)])
    elif action == "kappa":
        out = Output({"k": g.k, "n": g.n, "kappa": gg.kappa(g),
                      "eulerian_cycles": gg.eulerian_cycle_count(g)})
    elif action == "hamiltonian":
        cycles = gg.enumerate_hamiltonian_cycles(g, cfg.enumeration_bound)
        out = Output({"k": g.k, "n": g.n, "count": len(cycles), "cycles": [list(c) for c in cycles]},
                     rows=[{"cycle": " ".join(map(str, c))} for c in cycles])
    elif action == "words":
        words = gg.enumerate_gdb_words(g.k, g.n, cfg.enumeration_bound)
        out = Output({"k": g.k, "length": g.n, "count": len(words), "words": [str(w) for w in words]},
                     rows=_necklace_rows(words))
    else:  # count
        out = Output({"k": g.k, "length": g.n, "count": gg.count_gdb_words(g.k, g.n)})
    out.dot = g.to_dot()
    return out


def cmd_inv(args, cfg):
    _require(args, "p")
    p = args.p
    action = args.action
    if action == "list":
        _require(args, "n")
        necks = gf.enumerate_invertible_necklaces(p, args.n, cfg.enumeration_bound)
        return Output({"p": p, "n": args.n, "count": len(necks), "necklaces": [str(x) for x in necks]},
                      rows=_necklace_rows(necks))
    if action == "count":
        _require(args, "n")
        phi = gf.count_normal_elements(p, args.n)
        return Output({"p": p, "n": args.n, "normal_elements": phi,
                       "invertible_necklaces": phi // args.n})
    if action == "mul":
        if not args.word or len(args.word) != 2:
            raise UsageError("mul needs two --word arguments")
        a, b = (gf.CirculantClass.of(Necklace.parse(w, p), p) for w in args.word)
        c = a * b
        return Output({"p": p, "product": str(c), "matrix": c.matrix().to_json()})
    if action == "act":
        if not args.word or len(args.word) != 2:
            raise UsageError("act needs two --word arguments: the group element, then the necklace")
        a = gf.CirculantClass.of(Necklace.parse(args.word[0], p), p)
        v = Necklace.parse(args.word[1], p)
        return Output({"p": p, "result": str(gf.reutenauer_act(a, v))})
    # dichotomy
    _require(args, "n")
    res = gf.verify_invertibility_dichotomy(p, args.n, cfg.enumeration_bound)
    return Output({"p": p, "n": args.n, "all_invertible": res.all_invertible,
                   "predicted": res.predicted,
                   "counterexample": None if res.counterexample is None else str(res.counterexample)})


def cmd_snf(args, cfg):
    if args.matrix is not None:
        m = json.loads(args.matrix)
    else:
        _require(args, "k", "n")
        g = gg.GdbGraph(args.k, args.n)
        m = gg.reduced_laplacian(g) if args.reduced else gg.laplacian(g)
    factors = list(sp.smith_normal_form(m).invariant_factors)
    return Output({"invariant_factors": factors}, rows=[{"d": d} for d in factors])


def cmd_group(args, cfg):
    _require(args, "n")
    if args.action == "sandpile":
        _require(args, "k")
        grp = sp.sandpile_group(gg.GdbGraph(args.k, args.n))
    elif args.action == "reutenauer":
        _require(args, "p")
        grp = sp.reutenauer_group_structure(args.p, args.n)
    else:
        _require(args, "p")
        grp = sp.sandpile_prime_power(args.p, args.n)
    return Output({**grp.to_json(), "group": str(grp)},
                  rows=[{"factor": d} for d in grp.invariant_factors])


def cmd_verify(args, cfg):
    if args.action == "tables":
        rep = vf.verify_tables(args.max_n if args.max_n is not None else 12, cfg.enumeration_bound)
    elif args.action == "bijection":
        _require(args, "n")
        rep = vf.verify_bijection(args.p or 2, args.n, cfg.enumeration_bound)
    else:
        _require(args, "max_n")
        rep = vf.verify_dichotomy(args.p or 2, args.max_n, cfg.enumeration_bound)
    rows = [{"name": c.name, "expected": c.expected, "actual": c.actual, "pass": c.passed}
            for c in rep.checks]
    return Output(rep.to_json(), rows=rows, ok=rep.overall)


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--p", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--length", type=int)
    common.add_argument("--word", action="append")
    common.add_argument("--format", choices=["json", "csv", "text", "dot"], default="json")
    common.add_argument("--max-n", type=int, dest="max_n")
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    common.add_argument("--threads", type=int)

    parser = argparse.ArgumentParser(prog="bwtneck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, actions=None, extra=None):
        sp_ = sub.add_parser(name, parents=[common], help=help)
        if actions:
            sp_.add_argument("action", choices=actions)
        if extra:
            extra(sp_)
        sp_.set_defaults(func=func)

    add("bwt", cmd_bwt, "BWT of a necklace and the FL cycle of the result")
    add("ibwt", cmd_ibwt, "invert a BWT image")
    add("stdperm", cmd_stdperm, "standard permutation of a word")
    add("words", cmd_words, "enumerate generalized de Bruijn words")
    add("count", cmd_count, "count generalized de Bruijn words")
    add("graph", cmd_graph, "generalized de Bruijn graph DB(k,n)",
        ["edges", "laplacian", "kappa", "hamiltonian", "words", "count"])
    add("inv", cmd_inv, "invertible necklaces over GF(p)",
        ["list", "count", "mul", "act", "dichotomy"])

    def snf_extra(p):
        p.add_argument("--matrix", help="integer matrix as a JSON array of rows")
        p.add_argument("--reduced", action="store_true")

    add("snf", cmd_snf, "Smith normal form of a Laplacian or given matrix", extra=snf_extra)
    add("group", cmd_group, "sandpile and Reutenauer group structure",
        ["sandpile", "reutenauer", "primepower"])
    add("verify", cmd_verify, "run verification reports", ["bijection", "dichotomy", "tables"])
    return parser


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"schema_version": SCHEMA_VERSION, **out.payload}) + "\n"
    if fmt == "dot":
        if out.dot is None:
            raise UsageError("--format dot is only available for the graph command")
        return out.dot
    rows = out.rows
    if rows is None:
        rows = [{"key": k, "value": json.dumps(v) if isinstance(v, (list, dict)) else v}
                for k, v in out.payload.items()]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["value"],
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    return "".join(" ".join(str(v) for v in r.values()) + "\n" for r in rows)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bound < MIN_BOUND:
        parser.error(f"--bound must be at least {MIN_BOUND}")
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be positive")
    cfg = RunConfig(enumeration_bound=args.bound, output_format=args.format)
    if args.threads is not None:
        cfg.threads = args.threads
    try:
        out = args.func(args, cfg)
        text = render(out, cfg.output_format)
    except UsageError as e:
        parser.error(str(e))
    except (NecklaceError, ValueError) as e:
        kind = getattr(e, "kind", type(e).__name__)
        err = {"schema_version": SCHEMA_VERSION, "error": {"kind": kind, "message": str(e)}}
        stderr.write(json.dumps(err) + "\n")
        return 1
    stdout.write(text)
    return 0 if out.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
