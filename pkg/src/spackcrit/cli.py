"""Command line front end.

JSON reports go to stdout, a short human summary to stderr.  Exit codes:
0 ok, 1 verification failed, 2 bad input, 3 no finite colouring.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import __version__
from .construct import (
    caterpillar, realization_clique_of_cliques, realization_cycle_cliques, tree_T,
)
from .critical import (
    criticality_report, enumerate_critical, expected_3_critical,
    expected_4_critical, verify_characterization,
)
from .errors import NoFiniteColoring, SpackError
from .graph import (
    Graph, basic_stats, connected_graphs, graph_name, is_cycle, is_path,
    parse_family, parse_graph6, read_graph6_lines, write_graph6,
)
from .seq import PackingSequence, parse_sequence, truncate
from .solver import chi_S, chi_S_diam2_formula, exists_coloring

SCHEMA = 1

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT, EXIT_NO_COLORING = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source) as fh:
        return fh.read()


def _load_graph(args) -> tuple[Graph, dict]:
    if (args.graph is None) == (args.family is None):
        raise _Usage("give exactly one of --graph and --family")
    if args.family is not None:
        return parse_family(args.family), {"family": args.family}
    lines = [ln for ln in _read_text(args.graph).splitlines() if ln.strip()]
    if not lines:
        raise _Usage(f"no graph6 line in {args.graph}")
    return parse_graph6(lines[0]), {"graph": args.graph, "graph6": lines[0].strip()}


def _seq(text: Optional[str], default: Optional[str] = None) -> PackingSequence:
    if text is None:
        if default is None:
            raise _Usage("--sequence is required")
        text = default
    return parse_sequence(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise _Usage(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------- commands

def cmd_chi(args) -> tuple[dict, dict, int, str]:
    S = _seq(args.sequence)
    G, src = _load_graph(args)
    res = chi_S(G, S)
    out = {"n": G.n, "chi": res.chi,
           "certificate": list(res.certificate) if res.certificate else []}
    return {"sequence": str(S), **src}, out, EXIT_OK, f"chi_S = {res.chi}"


def cmd_delta(args):
    S = _seq(args.sequence)
    G, src = _load_graph(args)
    rep = criticality_report(G, S)
    out = {
        "n": G.n,
        "chi": rep.chi,
        "per_vertex": [{"vertex": v, "chi": c, "difference": rep.chi - c}
                       for v, c in rep.per_vertex],
        "delta": sorted(rep.delta_set),
        "critical": rep.critical,
    }
    lines = [f"chi_S = {rep.chi}"]
    lines += [f"  G-{v}: {c}" for v, c in rep.per_vertex]
    lines.append(f"delta = {sorted(rep.delta_set)}  critical = {rep.critical}")
    return {"sequence": str(S), **src}, out, EXIT_OK, "\n".join(lines)


def cmd_enumerate(args):
    S = _seq(args.sequence)
    stream = None
    if args.stream is not None:
        stream = list(read_graph6_lines(_read_text(args.stream).splitlines()))
    found = enumerate_critical(args.n_max, S, args.k, stream=stream,
                               method=args.method, jobs=args.jobs)
    names = {g: graph_name(parse_graph6(g)) for g in found}
    out = {"count": len(found), "graphs": found,
           "names": {g: nm for g, nm in names.items() if nm}}
    inputs = {"sequence": str(S), "k": args.k, "n_max": args.n_max,
              "stream": args.stream, "method": args.method}
    summary = f"{len(found)} connected {args.k}-critical graph(s), n <= {args.n_max}: " + \
        ", ".join(names[g] or g for g in found)
    return inputs, out, EXIT_OK, summary


def _verify_diam2(S: PackingSequence, n_max: int) -> dict:
    checked, mismatches = 0, []
    for n in range(3, n_max + 1):
        for G in connected_graphs(n):
            if basic_stats(G).diameter != 2:
                continue
            checked += 1
            formula = chi_S_diam2_formula(G, S)
            exact = chi_S(G, S).chi
            if formula != exact:
                mismatches.append({"graph6": write_graph6(G), "formula": formula,
                                   "chi": exact})
    return {"checked": checked, "mismatches": mismatches, "pass": not mismatches}


def _verify_col222(S: PackingSequence, n_max: int) -> dict:
    checked, mismatches = 0, []
    for n in range(1, n_max + 1):
        for G in connected_graphs(n):
            checked += 1
            colorable = exists_coloring(G, S, 3) is not None
            predicted = is_path(G) or (is_cycle(G) and G.n % 3 == 0)
            if colorable != predicted:
                mismatches.append({"graph6": write_graph6(G), "colorable": colorable,
                                   "predicted": predicted})
    return {"checked": checked, "mismatches": mismatches, "pass": not mismatches}


def _verify_n5bound(S: PackingSequence, n_max: int) -> dict:
    if n_max < 6:
        raise _Usage("n5bound checks orders 6..n_max; use --n-max >= 6")
    checked, colorable = 0, []
    for n in range(6, n_max + 1):
        for G in connected_graphs(n):
            checked += 1
            if exists_coloring(G, S, 3) is not None:
                colorable.append(write_graph6(G))
    return {"checked": checked, "colorable": colorable, "pass": not colorable}


def cmd_verify(args):
    theorem = args.theorem
    if theorem in ("3crit", "4crit"):
        S = _seq(args.sequence)
        if theorem == "3crit":
            k, expected = 3, expected_3_critical(S)
        else:
            k, expected = 4, expected_4_critical(S)
        rep = verify_characterization(S, k, args.n_max, expected, jobs=args.jobs)
        out = rep.to_json()
        out.pop("elapsed_ms")
        summary = (f"{theorem} {S} n<= {args.n_max}: found {len(rep.found)}, "
                   f"missing {rep.missing}, extra {rep.extra} -> "
                   f"{'PASS' if rep.passed else 'FAIL'}")
    elif theorem == "diam2":
        S = _seq(args.sequence)
        out = _verify_diam2(S, args.n_max)
        summary = f"diam2 {S}: {out['checked']} graphs, {len(out['mismatches'])} mismatches"
    elif theorem == "col222":
        S = _seq(args.sequence, "2^3")
        if truncate(S, 3) != (2, 2, 2):
            raise _Usage("col222 is about S = (2,2,2)")
        out = _verify_col222(PackingSequence((2, 2, 2)), args.n_max)
        summary = f"col222: {out['checked']} graphs, {len(out['mismatches'])} mismatches"
    else:
        S = _seq(args.sequence, "2,2,3")
        s = truncate(S, 3)
        if s[0] != 2 or s[2] < 3:
            raise _Usage("n5bound needs s_1 = 2 and s_3 >= 3")
        out = _verify_n5bound(PackingSequence(s), args.n_max)
        summary = f"n5bound {PackingSequence(s)}: {out['checked']} graphs, " \
                  f"{len(out['colorable'])} colorable"
    inputs = {"theorem": theorem, "sequence": str(S), "n_max": args.n_max}
    return inputs, out, EXIT_OK if out["pass"] else EXIT_FAILED, summary


def cmd_construct(args):
    fam = args.family
    if fam == "realization1":
        if args.ell is None or args.a is None:
            raise _Usage("realization1 needs --ell and --a")
        res = realization_cycle_cliques(args.ell, _int_list(args.a))
    elif fam == "realization2":
        if args.a is None:
            raise _Usage("realization2 needs --sequence and --a")
        res = realization_clique_of_cliques(_seq(args.sequence), _int_list(args.a))
    elif fam == "treeT":
        if args.k is None:
            raise _Usage("treeT needs --k")
        res = tree_T(args.k)
    else:
        if args.k is None:
            raise _Usage(f"{fam} needs --k")
        res = caterpillar("G" + fam[-1], args.k, args.s2)
    out = {
        "family": res.family,
        "params": res.params,
        "n": res.graph.n,
        "graph6": write_graph6(res.graph),
        "roles": list(res.roles),
        "predicted_chi": res.predicted_chi,
        "predicted_delta": sorted(res.predicted_delta) if res.predicted_delta else None,
        "sequence": str(res.sequence) if res.sequence else None,
    }
    code = EXIT_OK
    summary = f"{res.family} n={res.graph.n} {out['graph6']}"
    if args.check:
        S = _seq(args.sequence) if args.sequence else res.sequence
        rep = criticality_report(res.graph, S)
        ok = ((res.predicted_chi is None or rep.chi == res.predicted_chi)
              and (res.predicted_delta is None or rep.delta_set == res.predicted_delta))
        out["check"] = {"sequence": str(S), "chi": rep.chi, "delta": sorted(rep.delta_set),
                        "critical": rep.critical, "matches_prediction": ok}
        summary += f"\nchi_S = {rep.chi} delta = {sorted(rep.delta_set)} " \
                   f"critical = {rep.critical} matches = {ok}"
        code = EXIT_OK if ok else EXIT_FAILED
    inputs = {k: v for k, v in vars(args).items()
              if k in ("family", "ell", "a", "k", "s2", "sequence", "check")}
    return inputs, out, code, summary


# ---------------------------------------------------------------- plumbing

def _graph_args(p):
    p.add_argument("--sequence", required=True, help="packing sequence, e.g. 1,2^inf")
    p.add_argument("--graph", help="graph6 file, or - for stdin (first line is used)")
    p.add_argument("--family", help="named graph, e.g. path:4, cycle:6, star:3, z1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spackcrit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="S-packing chromatic number with certificate")
    _graph_args(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("delta", help="per-vertex deletion differences and criticality")
    _graph_args(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("enumerate", help="connected k-critical graphs up to n-max")
    p.add_argument("--sequence", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--stream", help="graph6 file (or -) to test instead of built-in enumeration")
    p.add_argument("--method", choices=("classes", "labeled"), default="classes")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", choices=("json", "g6"), default="json",
                   help="g6: graph6 lines on stdout, JSON summary on stderr")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive check of a characterization")
    p.add_argument("--theorem", required=True,
                   choices=("3crit", "4crit", "diam2", "col222", "n5bound"))
    p.add_argument("--sequence")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a constructed family")
    p.add_argument("--family", required=True,
                   choices=("realization1", "realization2", "treeT", "cat1", "cat2", "cat3"))
    p.add_argument("--ell", type=int)
    p.add_argument("--a", help="comma-separated difference values, e.g. 2,4")
    p.add_argument("--k", type=int)
    p.add_argument("--s2", type=int)
    p.add_argument("--sequence")
    p.add_argument("--check", action="store_true",
                   help="solve the graph and compare with the predicted values")
    p.set_defaults(func=cmd_construct)
    return parser


def _emit(report: dict, stream) -> None:
    stream.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    t0 = time.perf_counter()
    report = {"schema": SCHEMA, "version": __version__, "command": args.command}
    try:
        inputs, outputs, code, summary = args.func(args)
    except NoFiniteColoring as exc:
        report.update(error="NoFiniteColoring", message=str(exc))
        code, summary = EXIT_NO_COLORING, f"no finite coloring: {exc}"
        _emit(report, sys.stdout)
        print(summary, file=sys.stderr)
        return code
    except (SpackError, _Usage, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    report.update(inputs=inputs, outputs=outputs,
                  elapsed_ms=round((time.perf_counter() - t0) * 1000, 3))
    if getattr(args, "output", "json") == "g6":
        for g in outputs["graphs"]:
            print(g)
        _emit(report, sys.stderr)
    else:
        _emit(report, sys.stdout)
        print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
