"""Command-line front end.

Exit codes: 0 success, 1 error, 2 ``check`` found no consistent halfspace.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time
from fractions import Fraction

from . import oracles
from .consistency import ConsistencyChecker, build_formula, has_nontrivial_halfspace, mh_check
from .convexity import hull_set_greedy, is_mconvex, mhull
from .corpus import DEFAULT_PROBS, DEFAULT_SEED, random_corpus
from .enumeration import canonical_key, count_bound, list_all_fpt, list_version_space
from .graph import (Graph, GraphError, clique_number, diameter, format_edge_list, omega_tilde,
                    popcount, read_graph)
from .learners import (LearnerTranscript, OracleNotRealizableError, QueryOracle, active_learn,
                       agnostic_winnow_online, erm, halving_online, pac_experiment, random_stream,
                       weighted_majority_online, winnow_online)
from .learners.pac import NotRealizableError
from .report import bench_csv, write_bench_report
from .shadows import edge_shadow, is_halfspace

EXIT_OK, EXIT_ERROR, EXIT_INCONSISTENT = 0, 1, 2

ONLINE_ALGOS = {
    "winnow": winnow_online,
    "halving": halving_online,
    "agnostic-winnow": agnostic_winnow_online,
    "wm": weighted_majority_online,
}


class UsageError(Exception):
    pass


# -- file formats -------------------------------------------------------------


def load_labels(g: Graph, text: str) -> list[tuple[int, int]]:
    """Parse ``vertexname label`` lines into a sample (duplicates kept)."""
    sample = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2 or tokens[1] not in ("0", "1"):
            raise UsageError(f"labels line {lineno}: expected 'vertex 0|1'")
        try:
            v = g.vertex(tokens[0])
        except GraphError as exc:
            raise UsageError(f"labels line {lineno}: {exc}") from None
        sample.append((v, int(tokens[1])))
    return sample


def load_vertex_set(g: Graph, text: str) -> int:
    try:
        return g.mask_of(text.replace(",", " ").split())
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def format_set(g: Graph, h: int) -> str:
    return "{" + " ".join(g.names_of(h)) + "}"


def parse_set_text(g: Graph, line: str) -> int:
    """Inverse of :func:`format_set`."""
    return load_vertex_set(g, line.strip().strip("{}"))


def _fraction_json(x: Fraction):
    return x.numerator if x.denominator == 1 else {"numerator": x.numerator, "denominator": x.denominator,
                                                   "value": float(x)}


# -- helpers -----------------------------------------------------------------


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _graph(args) -> Graph:
    if not args.graph:
        raise UsageError("--graph is required")
    g = read_graph(args.graph)
    if getattr(args, "name_map", None):
        with open(args.name_map, "w") as fh:
            fh.write(g.name_map_json() + "\n")
    return g


def _labels(args, g: Graph, required: bool = True):
    if not args.labels:
        if required:
            raise UsageError("--labels is required")
        return []
    return load_labels(g, _read(args.labels))


def _emit(args, text: str) -> None:
    if args.out and args.command not in ("bench", "gen-corpus"):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _vertex(g: Graph, name: str) -> int:
    try:
        return g.vertex(name)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


# -- subcommands ---------------------------------------------------------------


def cmd_check(args) -> int:
    g = _graph(args)
    sample = _labels(args, g)
    if args.dimacs:
        with open(args.dimacs, "w") as fh:
            for u, v in ConsistencyChecker(g).orientations:
                fh.write(f"c orientation {g.names[u]} {g.names[v]}\n")
                fh.write(build_formula(g, u, v, sample).to_dimacs(g.names))
    h = mh_check(g, sample)
    if args.format == "json":
        doc = {"status": "consistent" if h is not None else "inconsistent",
               "halfspace": g.names_of(h) if h is not None else None}
        _emit(args, json.dumps(doc) + "\n")
    else:
        _emit(args, (format_set(g, h) if h is not None else "INCONSISTENT") + "\n")
    return EXIT_OK if h is not None else EXIT_INCONSISTENT


def cmd_enumerate(args) -> int:
    g = _graph(args)
    sample = _labels(args, g, required=False)
    if sample or args.algo == "list":
        hs = list(list_version_space(g, sample))
    else:
        hs = list(list_all_fpt(g))
    hs.sort(key=canonical_key)
    bound = count_bound(g)
    if args.format == "json":
        doc = {"halfspaces": [g.names_of(h) for h in hs], "count": len(hs), "bound": _fraction_json(bound)}
        _emit(args, json.dumps(doc) + "\n")
    else:
        lines = [format_set(g, h) for h in hs] + [f"count={len(hs)} bound={bound}"]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_hull(args) -> int:
    g = _graph(args)
    h = mhull(g, load_vertex_set(g, args.set))
    _emit(args, json.dumps({"hull": g.names_of(h)}) + "\n" if args.format == "json" else format_set(g, h) + "\n")
    return EXIT_OK


def cmd_convex(args) -> int:
    g = _graph(args)
    x = load_vertex_set(g, args.set)
    convex = is_mconvex(g, x)
    half = is_halfspace(g, x)
    if args.format == "json":
        _emit(args, json.dumps({"convex": convex, "halfspace": half}) + "\n")
    else:
        _emit(args, f"convex={str(convex).lower()} halfspace={str(half).lower()}\n")
    return EXIT_OK


def cmd_shadow(args) -> int:
    g = _graph(args)
    z, v = _vertex(g, args.z), _vertex(g, args.v)
    if not g.has_edge(z, v):
        raise UsageError(f"{args.z} {args.v} is not an edge")
    s = edge_shadow(g, z, v)
    _emit(args, json.dumps({"shadow": g.names_of(s)}) + "\n" if args.format == "json" else " ".join(g.names_of(s)) + "\n")
    return EXIT_OK


def cmd_erm(args) -> int:
    g = _graph(args)
    sample = _labels(args, g)
    h, risk = erm(g, sample)
    if args.format == "json":
        _emit(args, json.dumps({"halfspace": g.names_of(h), "risk": _fraction_json(risk)}) + "\n")
    else:
        _emit(args, f"{format_set(g, h)}\nrisk={risk}\n")
    return EXIT_OK


def cmd_active(args) -> int:
    g = _graph(args)
    if not args.target:
        raise UsageError("--target is required")
    target = load_vertex_set(g, _read(args.target))
    oracle = QueryOracle(target)
    transcript = LearnerTranscript()
    h = active_learn(g, oracle, transcript)
    hull_size = popcount(hull_set_greedy(g))
    bound = hull_size + math.ceil(math.log2(max(diameter(g), 1))) + clique_number(g)
    if args.format == "json":
        _emit(args, transcript.to_jsonl(g.names) + json.dumps(
            {"kind": "result", "halfspace": g.names_of(h), "queries": transcript.queries,
             "query_bound": bound}) + "\n")
    else:
        _emit(args, f"{format_set(g, h)}\nqueries={transcript.queries} bound={bound}\n")
    return EXIT_OK


def _stream(args, g: Graph, rng: random.Random):
    source = args.stream
    if source.startswith("random:"):
        seed = int(source.split(":", 1)[1])
        srng = random.Random(seed)
        if args.target:
            target = load_vertex_set(g, _read(args.target))
        else:
            hs = sorted(list_all_fpt(g), key=canonical_key)
            target = hs[srng.randrange(len(hs))]
        return random_stream(g, target, srng, passes=args.passes, flip=args.flip), target
    return load_labels(g, _read(source)), None


def cmd_online(args) -> int:
    g = _graph(args)
    if not args.stream:
        raise UsageError("--stream is required")
    rng = random.Random(args.seed)
    stream, target = _stream(args, g, rng)
    learner = ONLINE_ALGOS[args.algo](g)
    transcript = learner.run(stream)
    if args.format == "json":
        _emit(args, transcript.to_jsonl(g.names))
    else:
        head = f"target={format_set(g, target)}\n" if target is not None else ""
        _emit(args, f"{head}algo={args.algo} rounds={transcript.rounds} mistakes={transcript.mistakes}\n")
    return EXIT_OK


def cmd_pac(args) -> int:
    rng = random.Random(args.seed)
    if args.graph:
        graphs = [_graph(args)]
    else:
        graphs = [e.graph for e in random_corpus(args.count, args.seed)]
    res = pac_experiment(graphs, args.eps, args.delta, args.trials, rng)
    res["passed"] = res["failure_rate"] <= args.delta
    if args.format == "json":
        _emit(args, json.dumps(res) + "\n")
    else:
        _emit(args, "".join(f"{k}={v}\n" for k, v in res.items()))
    return EXIT_OK


def graph_stats(g: Graph) -> dict:
    w = clique_number(g)
    hs = list(list_all_fpt(g))
    bound = count_bound(g)
    diam_m = oracles.monophonic_diameter_bf(g) if g.n <= oracles.HALFSPACE_LIMIT else None
    nontrivial, _ = has_nontrivial_halfspace(g)
    return {"n": g.n, "m": g.m, "omega": w, "omega_tilde": omega_tilde(g), "halfspaces": len(hs),
            "count_bound": bound, "hull_set_size": popcount(hull_set_greedy(g)),
            "diam_g": diameter(g), "diam_m": diam_m, "nontrivial_halfspace": nontrivial}


def cmd_stats(args) -> int:
    g = _graph(args)
    st = graph_stats(g)
    if args.format == "json":
        st["count_bound"] = _fraction_json(st["count_bound"])
        _emit(args, json.dumps(st) + "\n")
    else:
        _emit(args, "".join(f"{k}={'null' if v is None else str(v).lower() if isinstance(v, bool) else v}\n"
                            for k, v in st.items()))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _graph(args)
    q = args.query
    if q in ("interval", "shadow"):
        if args.u is None or args.v is None:
            raise UsageError(f"oracle {q} needs --u and --v")
        u, v = _vertex(g, args.u), _vertex(g, args.v)
        res = oracles.interval_bf(g, u, v) if q == "interval" else oracles.shadow_bf(g, u, v)
        out = g.names_of(res)
    elif q == "hull":
        out = g.names_of(oracles.hull_bf(g, load_vertex_set(g, args.set or "")))
    elif q == "halfspaces":
        out = [g.names_of(h) for h in sorted(oracles.halfspaces_bf(g), key=canonical_key)]
    elif q == "vc":
        out = oracles.vc_dim_bf(g)
    else:
        out = g.names_of(oracles.min_hullset_bf(g))
    if args.format == "json":
        _emit(args, json.dumps({"query": q, "result": out}) + "\n")
    elif q == "halfspaces":
        _emit(args, "".join("{" + " ".join(h) + "}\n" for h in out))
    elif q == "vc":
        _emit(args, f"{out}\n")
    else:
        _emit(args, "{" + " ".join(out) + "}\n")
    return EXIT_OK


def _bench_graphs(args):
    if args.corpus:
        names = sorted(f for f in os.listdir(args.corpus) if f.endswith(".el"))
        return [(os.path.splitext(f)[0], read_graph(os.path.join(args.corpus, f))) for f in names]
    if args.graph:
        return [(os.path.splitext(os.path.basename(args.graph))[0], _graph(args))]
    probs = tuple(args.p) if args.p else DEFAULT_PROBS
    return [(e.graph_id, e.graph) for e in
            random_corpus(args.count, args.seed, args.n_min, args.n_max, probs)]


def bench_rows(graphs, seed: int, samples: int = 10) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for gid, g in graphs:
        t0 = time.perf_counter()
        hs = list(list_all_fpt(g))
        enum_ms = (time.perf_counter() - t0) * 1e3
        checker = ConsistencyChecker(g)
        queries = []
        for _ in range(samples):
            k = rng.randint(1, g.n)
            queries.append([(rng.randrange(g.n), rng.randint(0, 1)) for _ in range(k)])
        t0 = time.perf_counter()
        for sample in queries:
            mh_check(g, sample, checker)
        check_ms = (time.perf_counter() - t0) * 1e3 / samples
        rows.append({"graph-id": gid, "n": g.n, "m": g.m, "omega": clique_number(g), "hm": len(hs),
                     "enum-ms": round(enum_ms, 3), "check-ms": round(check_ms, 3),
                     "bound": count_bound(g)})
    return rows


def cmd_bench(args) -> int:
    rows = bench_rows(_bench_graphs(args), args.seed)
    if args.out:
        paths = write_bench_report(rows, args.out)
        sys.stdout.write("".join(p + "\n" for p in paths))
    else:
        sys.stdout.write(bench_csv({k: r[k] for k in r if k != "bound"} for r in rows))
    return EXIT_OK


def cmd_gen_corpus(args) -> int:
    if not args.out:
        raise UsageError("--out DIR is required")
    os.makedirs(args.out, exist_ok=True)
    probs = tuple(args.p) if args.p else DEFAULT_PROBS
    entries = random_corpus(args.count, args.seed, args.n_min, args.n_max, probs)
    manifest = []
    for e in entries:
        path = os.path.join(args.out, f"{e.graph_id}.el")
        with open(path, "w") as fh:
            fh.write(format_edge_list(e.graph))
        manifest.append({"graph_id": e.graph_id, "n": e.n, "m": e.graph.m, "p": e.p, "seed": e.seed})
    with open(os.path.join(args.out, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1)
        fh.write("\n")
    sys.stdout.write(f"wrote {len(entries)} graphs to {args.out}\n")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="edge-list file")
    common.add_argument("--labels", help="label file: lines 'vertex 0|1'")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", help="output file (directory for bench/gen-corpus)")
    common.add_argument("--name-map", help="write the vertex-name map as JSON to this file")

    parser = argparse.ArgumentParser(prog="monohalf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="find a halfspace consistent with labels")
    p.add_argument("--dimacs", help="dump every orientation's formula in DIMACS form to this file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="list all halfspaces (or the version space)")
    p.add_argument("--algo", choices=("fpt", "list"), default="fpt")
    p.set_defaults(func=cmd_enumerate)

    for name, func in (("hull", cmd_hull), ("convex", cmd_convex)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--set", required=True, help="vertex names, space or comma separated")
        p.set_defaults(func=func)

    p = sub.add_parser("shadow", parents=[common], help="edge shadow z/v")
    p.add_argument("--z", required=True)
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("erm", parents=[common], help="empirical risk minimiser")
    p.set_defaults(func=cmd_erm)

    p = sub.add_parser("active", parents=[common], help="simulate active learning of a target")
    p.add_argument("--target", help="file listing the target halfspace's vertices")
    p.set_defaults(func=cmd_active)

    p = sub.add_parser("online", parents=[common], help="run an online learner on a stream")
    p.add_argument("--algo", choices=tuple(ONLINE_ALGOS), default="winnow")
    p.add_argument("--stream", help="label file or random:SEED")
    p.add_argument("--target", help="target halfspace for random streams")
    p.add_argument("--passes", type=int, default=3)
    p.add_argument("--flip", type=float, default=0.0, help="label-noise rate for random streams")
    p.set_defaults(func=cmd_online)

    p = sub.add_parser("pac", parents=[common], help="realizable PAC simulation")
    p.add_argument("--eps", type=float, default=0.2)
    p.add_argument("--delta", type=float, default=0.2)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--count", type=int, default=300, help="corpus size when --graph is absent")
    p.set_defaults(func=cmd_pac)

    p = sub.add_parser("stats", parents=[common], help="graph invariants")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("oracle", parents=[common], help="brute-force reference values")
    p.add_argument("query", choices=("interval", "shadow", "hull", "halfspaces", "vc", "minhull"))
    p.add_argument("--u")
    p.add_argument("--v")
    p.add_argument("--set")
    p.set_defaults(func=cmd_oracle)

    for name, func in (("bench", cmd_bench), ("gen-corpus", cmd_gen_corpus)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--count", type=int, default=300)
        p.add_argument("--n-min", type=int, default=4)
        p.add_argument("--n-max", type=int, default=10)
        p.add_argument("--p", type=float, action="append", help="edge probability (repeatable)")
        if name == "bench":
            p.add_argument("--corpus", help="directory of .el files")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, NotRealizableError, OracleNotRealizableError,
            oracles.OracleSizeError, OSError) as exc:
        sys.stderr.write(f"monohalf {args.command}: error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
