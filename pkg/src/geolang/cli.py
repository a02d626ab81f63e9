"""Command-line entry point.

Exit codes: 0 success / pass, 1 verification failure, 2 usage or input error.
Progress for long runs goes to stderr so stdout stays parseable.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional

from . import automata, lab, lamp, machines, oracle, thompson
from .lamp import Gens, LampElement


class UsageError(Exception):
    pass


def _emit(args, data, human: Optional[str] = None) -> None:
    if args.json or human is None:
        print(json.dumps(data, indent=1, sort_keys=False))
    else:
        print(human)


def _table(rows: list[tuple]) -> str:
    width = max((len(str(k)) for k, _ in rows), default=0)
    return "\n".join(f"{str(k):<{width}}  {v}" for k, v in rows)


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _element(args) -> LampElement:
    if getattr(args, "element", None):
        try:
            x = LampElement.from_json(args.element)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad --element: {exc}") from exc
        if args.m is not None and args.m != x.m:
            raise UsageError(f"--m {args.m} disagrees with the element modulus {x.m}")
        return x
    if getattr(args, "word", None) is None:
        raise UsageError("give --element JSON or --word")
    return lamp.evaluate(args.word, args.m or 2)


# --- subcommands ---------------------------------------------------------------


def cmd_eval(args) -> int:
    x = lamp.evaluate(args.word, args.m)
    _emit(args, x.to_dict(), str(x))
    return 0


def cmd_length(args) -> int:
    x = _element(args)
    d = lamp.word_length(x, args.gens)
    data = {"element": x.to_dict(), "gens": Gens(args.gens).value, "length": d}
    if args.oracle:
        data["oracle"] = oracle.distance(x, args.gens, cap=args.cap)
    human = str(d) if not args.oracle else f"{d} (oracle {data['oracle']})"
    _emit(args, data, human)
    return 0


def cmd_geodesics(args) -> int:
    x = _element(args)
    words = oracle.all_geodesics(x, args.gens, cap=args.cap)
    canon = lamp.canonical_geodesic(x, args.gens)
    data = {"element": x.to_dict(), "length": len(canon), "canonical": canon, "count": len(words), "geodesics": words}
    _emit(args, data, "\n".join(w or "(empty)" for w in words))
    return 0


def cmd_ball(args) -> int:
    t0 = time.time()
    b = oracle.ball(args.m, args.gens, args.radius)
    _progress(f"ball of radius {args.radius}: {len(b)} elements in {time.time() - t0:.1f}s")
    stats = b.stats()
    if args.figure:
        from . import plotting
        plotting.sphere_growth(stats["sphere_sizes"], f"L_{args.m}, {stats['gens']} generators", args.figure)
        stats["figure"] = str(args.figure)
    if args.stats or args.json:
        _emit(args, stats)
    else:
        print(_table([(r, n) for r, n in enumerate(stats["sphere_sizes"])]))
    return 0


def cmd_cone_types(args) -> int:
    gens = Gens(args.gens)
    fam = oracle.cone_witnesses(gens, args.n_max)
    depth = args.depth if args.depth is not None else args.n_max + 1
    length = oracle.distance_fn(gens) if args.bfs else (lambda y: lamp.word_length(y, gens))
    classes = oracle.distinct_cone_types([x for _, x in fam], depth, gens, length=length)
    names = {x: name for name, x in fam}
    data = {
        "gens": gens.value, "depth": depth, "lengths": "oracle" if args.bfs else "formula",
        "members": len(fam), "classes": [[names[x] for x in c] for c in classes],
    }
    _emit(args, data, _table([("members", len(fam)), ("depth", depth), ("distinct cone types", len(classes))]))
    return 0


def cmd_find_seesaw(args) -> int:
    found = oracle.find_seesaw(args.m, args.gens, args.radius, args.min_swing)
    rows = [{"element": w.to_dict(), "generator": g, "swing": k} for w, g, k in found[: args.limit]]
    data = {"count": len(found), "shown": rows}
    _emit(args, data, "\n".join(f"{r['swing']}  {r['generator']}  {json.dumps(r['element'])}" for r in rows)
          + f"\n{len(found)} seesaw elements")
    return 0


def cmd_export_machine(args) -> int:
    try:
        mach = machines.build(args.name, args.m)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    text = mach.to_dot(args.name) if args.format == "dot" else mach.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
        _progress(f"wrote {args.output}")
    else:
        print(text.rstrip("\n"))
    return 0


def cmd_verify(args) -> int:
    if args.machine not in machines.GEODESIC_MACHINES:
        raise UsageError(f"--machine must be one of {sorted(machines.GEODESIC_MACHINES)}")
    gens, default_mode = machines.GEODESIC_MACHINES[args.machine]
    mode = args.mode or default_mode
    m = args.m if gens is Gens.WREATH else 2
    mach = machines.build(args.machine, m)
    t0 = time.time()
    _progress(f"verifying {args.machine} (m={m}) to length {args.max_len} in {mode} mode")
    rep = lab.verify_geodesic_language(mach, m, gens, args.max_len, mode)
    _progress(f"done in {time.time() - t0:.1f}s")
    data = {"machine": args.machine, "m": m, **rep.to_dict()}
    if args.figure:
        from . import plotting
        b = oracle.ball(m, gens, args.max_len)
        plotting.length_counts(mach.enumerate_language(args.max_len), oracle.geodesic_words(b),
                               f"{args.machine}, m={m}", args.figure)
        data["figure"] = str(args.figure)
    human = _table([
        ("machine", args.machine), ("mode", mode), ("max length", args.max_len),
        ("accepted words", rep.accepted), ("oracle count", rep.geodesics),
        ("soundness violations", len(rep.soundness_violations)),
        ("completeness violations", len(rep.completeness_violations)),
        ("uniqueness violations", len(rep.uniqueness_violations)),
        ("result", "PASS" if rep.passed else "FAIL"),
    ])
    _emit(args, data, human)
    return 0 if rep.passed else 1


def cmd_pumping_demo(args) -> int:
    rec = lab.pumping_witness(args.n, args.gens)
    if args.figure:
        from . import plotting
        plotting.pumping(rec.rows, args.n, args.figure)
    rows = [(f"i={r.i} j={r.j}", f"{r.word}  length {r.length} > distance {r.distance}") for r in rec.rows]
    _emit(args, rec.to_dict(), _table([("word", rec.word)] + rows + [("result", "PASS" if rec.passed else "FAIL")]))
    return 0 if rec.passed else 1


def cmd_swap_demo(args) -> int:
    rec = lab.swap_demo(args.len, args.m)
    rows = [(f"swap {s.index}", f"{s.encoding}  length {s.length} > distance {s.distance}") for s in rec.swaps]
    human = _table([("positive", rec.positive), ("suffix", rec.suffix),
                    ("word geodesic", rec.geodesic)] + rows + [("result", "PASS" if rec.passed else "FAIL")])
    _emit(args, rec.to_dict(), human)
    return 0 if rec.passed else 1


def cmd_squarefree(args) -> int:
    w = lab.squarefree_word(args.len)
    ok = lab.is_squarefree(w)
    _emit(args, {"word": w, "squarefree": ok}, w)
    return 0 if ok else 1


def cmd_thompson_nf(args) -> int:
    try:
        word = thompson.parse_word(args.word)
    except thompson.FWordError as exc:
        raise UsageError(str(exc)) from exc
    nf = thompson.rewrite_to_nf(word)
    data = {"input": thompson.format_word(word), **nf.to_dict()}
    if args.distance is not None:
        data["distance"] = thompson.distance_bidirectional(nf, args.distance)
    _emit(args, data, str(nf))
    return 0


def cmd_thompson_seesaw(args) -> int:
    rep = thompson.verify_seesaw(args.k, args.cap, args.budget)
    rows = [("word", rep.word), ("length", rep.length)] + [(c.name, c.status) for c in rep.clauses]
    _emit(args, rep.to_dict(), _table(rows + [("status", rep.status)]))
    return 1 if rep.status == "refuted" else 0


# --- parser --------------------------------------------------------------------


def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="JSON output")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomized steps")
    parser.add_argument("--threads", type=_positive, default=d(1), help="worker threads (runs are single-threaded)")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _modulus(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("modulus must be >= 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geolang", description="Geodesic languages of lamplighter groups and Thompson's group F")
    _globals(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    def gens_opt(sp):
        sp.add_argument("--gens", choices=[g.value for g in Gens], default="wreath")

    sp = add("eval", cmd_eval, "evaluate a word")
    sp.add_argument("--m", type=_modulus, default=2)
    gens_opt(sp)
    sp.add_argument("--word", required=True)

    for name, func, help in (("length", cmd_length, "word length of an element"),
                             ("geodesics", cmd_geodesics, "all geodesics of an element")):
        sp = add(name, func, help)
        sp.add_argument("--m", type=_modulus, default=None)
        gens_opt(sp)
        sp.add_argument("--element", help='JSON such as {"m":2,"bulbs":{"1":1},"cursor":0}')
        sp.add_argument("--word")
        sp.add_argument("--cap", type=_nonneg, default=16 if name == "geodesics" else 64)
        if name == "length":
            sp.add_argument("--oracle", action="store_true", help="also compute the BFS distance")

    sp = add("ball", cmd_ball, "Cayley ball statistics")
    sp.add_argument("--m", type=_modulus, default=2)
    gens_opt(sp)
    sp.add_argument("--radius", type=_nonneg, required=True)
    sp.add_argument("--stats", action="store_true")
    sp.add_argument("--figure", help="write a sphere-growth plot to this file")

    sp = add("cone-types", cmd_cone_types, "bounded cone types of the two-bulb witnesses")
    gens_opt(sp)
    sp.add_argument("--n-max", type=_positive, default=4)
    sp.add_argument("--depth", type=_nonneg, default=None)
    sp.add_argument("--bfs", action="store_true", help="use BFS distances instead of the length formula")

    sp = add("find-seesaw", cmd_find_seesaw, "scan a ball for seesaw elements")
    sp.add_argument("--m", type=_modulus, default=2)
    gens_opt(sp)
    sp.add_argument("--radius", type=_positive, default=8)
    sp.add_argument("--min-swing", type=_positive, default=1)
    sp.add_argument("--limit", type=_nonneg, default=20)

    sp = add("export-machine", cmd_export_machine, "print a machine as DOT or JSON")
    sp.add_argument("--name", required=True, choices=sorted(machines.MACHINES))
    sp.add_argument("--m", type=_modulus, default=2)
    sp.add_argument("--format", choices=["dot", "json"], default="dot")
    sp.add_argument("--output")

    sp = add("verify", cmd_verify, "compare a machine with the oracle")
    sp.add_argument("--machine", required=True, choices=sorted(machines.GEODESIC_MACHINES))
    sp.add_argument("--m", type=_modulus, default=2)
    sp.add_argument("--max-len", type=_nonneg, default=10)
    sp.add_argument("--mode", choices=["full", "unique"], default=None)
    sp.add_argument("--figure", help="write per-length word counts to this file")

    sp = add("pumping-demo", cmd_pumping_demo, "pump the two-bulb geodesic")
    sp.add_argument("--n", type=_positive, default=3)
    gens_opt(sp)
    sp.add_argument("--figure")

    sp = add("swap-demo", cmd_swap_demo, "swap blocks of a square-free lighting word")
    sp.add_argument("--len", type=int, default=12)
    sp.add_argument("--m", type=_modulus, default=2)

    sp = add("squarefree", cmd_squarefree, "square-free word over {1,2,3}")
    sp.add_argument("--len", type=_positive, required=True)

    sp = add("thompson", None, "Thompson's group F")
    tsub = sp.add_subparsers(dest="tcommand", required=True)
    tp = tsub.add_parser("nf", parents=[common], help="normal form of a word")
    tp.add_argument("--word", required=True, help='tokens such as "x0 x1 X0"')
    tp.add_argument("--distance", type=_nonneg, default=None, metavar="CAP", help="also compute the word length up to CAP")
    tp.set_defaults(func=cmd_thompson_nf)
    tp = tsub.add_parser("seesaw", parents=[common], help="check the seesaw clauses")
    tp.add_argument("--k", type=_positive, default=1)
    tp.add_argument("--cap", type=_nonneg, default=24)
    tp.add_argument("--budget", type=_positive, default=thompson.DEFAULT_BUDGET)
    tp.set_defaults(func=cmd_thompson_seesaw)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        return args.func(args)
    except (UsageError, lamp.WordError, lamp.InvalidModulus, lamp.UnsupportedModulus,
            automata.AlphabetMismatch, lab.EncodingError, ValueError) as exc:
        print(f"geolang: error: {exc}", file=sys.stderr)
        return 2
    except (oracle.CapExceeded, oracle.InsufficientBall) as exc:
        print(f"geolang: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
