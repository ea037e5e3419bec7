"""Command-line interface: ``graphzeta <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from pathlib import Path

from . import figures
from .divisors import RankCalculator, q_reduce
from .enumerate import MAX_BUILTIN_VERTICES, enumerate_connected_graphs, enumerate_graphs, extend_by_vertex
from .experiment import random_graph_experiment
from .graph import (
    GraphError,
    GraphFormatError,
    is_connected,
    parse_edge_list,
    parse_graph6,
    read_graph6_file,
    to_graph6,
)
from .harness import SEARCH_KEYS, ConsistencyError, compute_many, search_pairs
from .jacobian import duality_pairing, jacobian_presentation, pairing_automorphism_count
from .rotor import RotorError, load_rotor_spec, random_gluing, random_rotor, rotor_pair
from .tutte import tutte_polynomial
from .zeta import numerator_f, verify_functional_equation, zeta_function

log = logging.getLogger("graphzeta")

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CONSISTENCY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser, inputs: bool = True) -> None:
    if inputs:
        p.add_argument("graphs", nargs="*", help="graph6 strings")
        p.add_argument("--graph6", action="append", default=[], metavar="FILE",
                       help="file with one graph6 string per line")
        p.add_argument("--edges", action="append", default=[], metavar="FILE",
                       help="edge-list file ('n m' then 'a b' lines)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base-vertex", type=int, default=0)
    p.add_argument("--report-dir", type=Path, default=None,
                   help="write CSV tables and PNG figures here")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphzeta", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="Jacobian, Tutte polynomial and zeta function per graph")
    _common(p)
    p.add_argument("--no-tutte", action="store_true")
    p.add_argument("--no-zeta", action="store_true")

    for name, text in (("tutte", "Tutte polynomial"), ("jacobian", "Jacobian group"),
                       ("zeta", "two-variable zeta function")):
        p = sub.add_parser(name, help=text)
        _common(p)
        if name == "jacobian":
            p.add_argument("--pairing", action="store_true", help="also print the duality pairing")
        if name == "zeta":
            p.add_argument("--census", action="store_true", help="also print N(d, h)")

    p = sub.add_parser("rank", help="Baker-Norine rank of a divisor")
    _common(p)
    p.add_argument("--divisor", required=True, help="comma-separated coefficients or a JSON list")

    p = sub.add_parser("search", help="pairs agreeing on some invariants and differing on others")
    _common(p)
    p.add_argument("--vertices", type=int, help=f"use the built-in census (n <= {MAX_BUILTIN_VERTICES})")
    p.add_argument("--match", default="tutte")
    p.add_argument("--differ", default="jacobian")

    p = sub.add_parser("rotor", help="Tutte's rotor construction")
    _common(p, inputs=False)
    p.add_argument("specs", nargs="*", type=Path, help="rotor spec JSON files")
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="also run COUNT randomized rotors")
    p.add_argument("--orders", default="3,4,5")

    p = sub.add_parser("random", help="Jacobians of random graphs")
    _common(p, inputs=False)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--model", default="gnp:0.5", help="gnp:<p> or fixed:<graph6>")
    p.add_argument("--pairing", action="store_true")
    p.add_argument("--pairing-bound", type=int, default=10**4)

    p = sub.add_parser("enumerate", help="write the connected-graph census in graph6")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--output", type=Path)
    p.add_argument("--extend", action="store_true",
                   help=f"go past {MAX_BUILTIN_VERTICES} vertices by repeated vertex extension "
                        "(8 vertices: ~30 s; 9 vertices: ~10 min, ~3 GB)")
    return parser


# ---------------------------------------------------------------------------

class _Inputs:
    def __init__(self, args):
        self.args = args
        self.parse_errors = 0

    def __iter__(self):
        a = self.args
        for s in a.graphs:
            try:
                yield s, parse_graph6(s)
            except GraphFormatError as exc:
                self._fail(f"{s}: {exc}")
        for path in a.graph6:
            try:
                for lineno, raw, g in read_graph6_file(path):
                    if isinstance(g, Exception):
                        self._fail(f"{path}:{lineno}: {g}")
                    else:
                        yield raw, g
            except OSError as exc:
                self._fail(f"{path}: {exc}")
        for path in a.edges:
            try:
                yield str(path), parse_edge_list(Path(path).read_text())
            except (OSError, GraphFormatError, GraphError) as exc:
                self._fail(f"{path}: {exc}")

    def _fail(self, msg):
        self.parse_errors += 1
        print(f"graphzeta: parse error: {msg}", file=sys.stderr)

    def usable(self):
        for gid, g in self:
            if not g.is_simple:
                log.warning("skipping %s: not simple", gid)
            elif not is_connected(g):
                log.warning("skipping %s: disconnected", gid)
            else:
                yield gid, g


def _emit(args, obj, text):
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _cmd_invariants(args, inputs):
    reports = []
    for r in compute_many(inputs.usable(), tutte=not args.no_tutte, zeta=not args.no_zeta, jobs=args.jobs):
        reports.append(r)
        _emit(args, r.to_json(), r.to_text())
    if args.report_dir:
        figures.write_invariants_table(reports, args.report_dir / "invariants.csv")
        for i, r in enumerate(reports):
            if r.zeta is not None and r.zeta.census is not None and r.genus >= 1:
                figures.plot_rank_census(r.zeta.census, args.report_dir / f"census_{i:04d}.png",
                                         title=f"{r.graph_id}: N(d, h)")


def _cmd_tutte(args, inputs):
    for gid, g in inputs.usable():
        t = tutte_polynomial(g)
        _emit(args, {"id": gid, "tutte": t.to_text(), "terms": t.to_json()}, f"{gid}\t{t}")


def _cmd_jacobian(args, inputs):
    for gid, g in inputs.usable():
        pres = jacobian_presentation(g)
        obj = {"id": gid, "jacobian": list(pres.factors), "jacobian_text": str(pres.group),
               "order": str(pres.group.order), "cyclic": pres.group.is_cyclic}
        text = f"{gid}\t{pres.group}"
        if args.pairing:
            form = duality_pairing(g, pres)
            obj["generators"] = [list(x) for x in form.generators]
            obj["pairing"] = [[str(v) for v in row] for row in form.gram]
            text += "\n  pairing: " + str([[str(v) for v in row] for row in form.gram])
            if pres.group.order <= 10**4:
                aut = pairing_automorphism_count(pres.group, form)
                obj["pairing_automorphisms"] = aut
                text += f"\n  pairing-preserving automorphisms: {aut}"
        _emit(args, obj, text)


def _cmd_zeta(args, inputs):
    for gid, g in inputs.usable():
        z = zeta_function(g, q=args.base_vertex)
        f = numerator_f(z)
        ok = verify_functional_equation(z)
        if not ok:
            raise ConsistencyError("functional equation fails", {"graph": gid})
        obj = {"id": gid, "zeta": z.to_json(), "zeta_text": z.to_text(), "f": f.to_text(),
               "functional_equation": ok}
        text = f"{gid}\n  Z = {z}\n  f = {f}"
        if args.census:
            obj["census"] = [[d, h, c] for (d, h), c in sorted(z.census.counts.items())]
            text += "\n  N(d,h): " + ", ".join(f"({d},{h})={c}" for (d, h), c in sorted(z.census.counts.items()))
        _emit(args, obj, text)
        if args.report_dir and z.census is not None and z.g >= 1:
            safe = "".join(ch if ch.isalnum() else "_" for ch in gid)
            figures.write_census_table(z.census, args.report_dir / f"census_{safe}.csv")
            figures.plot_rank_census(z.census, args.report_dir / f"census_{safe}.png", title=f"{gid}: N(d, h)")


def _parse_divisor(text):
    text = text.strip()
    try:
        if text.startswith("["):
            return [int(x) for x in json.loads(text)]
        return [int(x) for x in text.split(",")]
    except (ValueError, json.JSONDecodeError):
        raise UsageError(f"cannot parse divisor {text!r}") from None


def _cmd_rank(args, inputs):
    d = _parse_divisor(args.divisor)
    for gid, g in inputs.usable():
        if len(d) != g.vertex_count:
            raise UsageError(f"divisor has {len(d)} entries, graph {gid} has {g.vertex_count} vertices")
        calc = RankCalculator(g, args.base_vertex)
        r = calc.r(d)
        red = q_reduce(g, d, args.base_vertex)
        _emit(args, {"id": gid, "divisor": d, "degree": sum(d), "rank": r, "h": r + 1, "reduced": list(red)},
              f"{gid}\tdeg={sum(d)} r={r} h={r + 1} reduced={list(red)}")


def _split_keys(text):
    keys = [k.strip() for k in text.split(",") if k.strip()]
    bad = [k for k in keys if k not in SEARCH_KEYS]
    if bad:
        raise UsageError(f"unknown invariant(s) {bad}; choose from {SEARCH_KEYS}")
    return keys


def _cmd_search(args, inputs):
    match, differ = _split_keys(args.match), _split_keys(args.differ)
    corpus = list(inputs.usable())
    if args.vertices is not None:
        try:
            corpus += [(to_graph6(g), g) for g in enumerate_connected_graphs(args.vertices)]
        except GraphError as exc:
            raise UsageError(str(exc)) from None
    if not corpus:
        raise UsageError("no graphs to search (give --vertices, --graph6 or graph6 strings)")
    try:
        records = search_pairs(corpus, match, differ, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for rec in records:
        _emit(args, rec.to_json(), rec.to_text())
    if args.format == "text":
        print(f"# {len(records)} pairs among {len(corpus)} graphs")
    if args.report_dir:
        figures.write_collisions_table(records, args.report_dir / "collisions.csv")
        figures.plot_collisions(records, args.report_dir / "collisions.png")


def _rotor_report(label, rotor, glue):
    a, b = rotor_pair(rotor, glue)
    from .canonical import canonical_key
    from .jacobian import jacobian_group

    ta, tb = tutte_polynomial(a), tutte_polynomial(b)
    ja, jb = jacobian_group(a), jacobian_group(b)
    za, zb = zeta_function(a), zeta_function(b)
    iso = None
    if a.vertex_count <= 12:
        iso = canonical_key(a) == canonical_key(b)
    return {
        "spec": label,
        "order": rotor.order,
        "graphs": [to_graph6(a), to_graph6(b)],
        "vertices": a.vertex_count,
        "edges": a.edge_count,
        "tutte_equal": ta == tb,
        "tutte": ta.to_text(),
        "jacobians": [str(ja), str(jb)],
        "jacobian_isomorphic": ja == jb,
        "zetas": [za.to_text(), zb.to_text()],
        "zeta_equal": za == zb,
        "isomorphic": iso,
    }


def _cmd_rotor(args):
    reports = []
    for path in args.specs:
        try:
            rotor, glue = load_rotor_spec(path)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"graphzeta: parse error: {path}: {exc}", file=sys.stderr)
            return EXIT_PARSE
        reports.append(_rotor_report(str(path), rotor, glue))
    if args.random:
        from .graph import Graph

        orders = [int(x) for x in args.orders.split(",")]
        rng = random.Random(args.seed)
        made = 0
        while made < args.random:
            k = rng.choice(orders)
            # two orbits of size 3 almost always admit a reflection, making the pair isomorphic
            rotor = random_rotor(rng, k, orbits=3 if k == 3 else 2, fixed=rng.choice([0, 1]),
                                 edge_orbits=rng.randint(2, 4))
            nb = rng.randint(k, k + 1)
            base = Graph(nb, [(i, j) for j in range(nb) for i in range(j) if rng.random() < 0.5])
            if not is_connected(base):
                continue
            try:
                reports.append(_rotor_report(f"random#{made}", rotor, random_gluing(rng, rotor, base)))
            except RotorError:
                continue
            made += 1
    for r in reports:
        text = (f"{r['spec']}: order {r['order']}, {r['vertices']} vertices, {r['edges']} edges\n"
                f"  tutte_equal: {str(r['tutte_equal']).lower()}\n"
                f"  jacobians: {r['jacobians'][0]} | {r['jacobians'][1]} "
                f"(isomorphic: {str(r['jacobian_isomorphic']).lower()})\n"
                f"  zeta_equal: {str(r['zeta_equal']).lower()}\n"
                f"  isomorphic: {str(r['isomorphic']).lower()}")
        _emit(args, r, text)
    if len(reports) > 1:
        iso = sum(r["jacobian_isomorphic"] for r in reports)
        summary = {"pairs": len(reports), "jacobian_isomorphic": iso, "jacobian_not_isomorphic": len(reports) - iso,
                   "tutte_equal": sum(r["tutte_equal"] for r in reports)}
        _emit(args, {"summary": summary}, "# " + ", ".join(f"{k}={v}" for k, v in summary.items()))
    if args.report_dir:
        figures.write_csv(args.report_dir / "rotor.csv",
                          ["spec", "order", "first", "second", "tutte_equal", "jacobian_first",
                           "jacobian_second", "jacobian_isomorphic", "zeta_equal", "isomorphic"],
                          [[r["spec"], r["order"], *r["graphs"], r["tutte_equal"], *r["jacobians"],
                            r["jacobian_isomorphic"], r["zeta_equal"], r["isomorphic"]] for r in reports])
    if any(not r["tutte_equal"] for r in reports):
        return EXIT_CONSISTENCY
    return EXIT_OK


def _cmd_random(args):
    try:
        result = random_graph_experiment(args.vertices, args.trials, args.seed, args.model,
                                         pairing=args.pairing, pairing_bound=args.pairing_bound)
    except (ValueError, GraphFormatError) as exc:
        raise UsageError(str(exc)) from None
    obj = result.to_json()
    top = sorted(result.structures.items(), key=lambda kv: (-kv[1], kv[0]))[:10]
    text = (f"model={result.model} n={result.vertices} trials={result.trials} seed={result.seed}\n"
            f"cyclic fraction: {result.cyclic_fraction:.4f} ({result.cyclic}/{result.trials})\n"
            + "\n".join(f"  {s}\t{c}" for s, c in top))
    _emit(args, obj, text)
    if args.report_dir:
        figures.write_experiment_table(result, args.report_dir / "random_jacobians.csv")
        figures.plot_group_distribution(result, args.report_dir / "random_jacobians.png")
    return EXIT_OK


def _cmd_enumerate(args):
    n = args.vertices
    try:
        if args.extend and n > MAX_BUILTIN_VERTICES:
            graphs = enumerate_graphs(MAX_BUILTIN_VERTICES)
            for _ in range(n - MAX_BUILTIN_VERTICES):
                graphs = extend_by_vertex(graphs)
            graphs = [g for g in graphs if is_connected(g)]
        else:
            graphs = list(enumerate_connected_graphs(n))
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    lines = "".join(to_graph6(g) + "\n" for g in graphs)
    if args.output:
        args.output.write_text(lines)
        print(f"# wrote {len(graphs)} graphs to {args.output}")
    else:
        sys.stdout.write(lines)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    handlers = {"invariants": _cmd_invariants, "tutte": _cmd_tutte, "jacobian": _cmd_jacobian,
                "zeta": _cmd_zeta, "rank": _cmd_rank, "search": _cmd_search}
    try:
        if args.command in handlers:
            inputs = _Inputs(args)
            handlers[args.command](args, inputs)
            return EXIT_PARSE if inputs.parse_errors else EXIT_OK
        if args.command == "rotor":
            return _cmd_rotor(args)
        if args.command == "random":
            return _cmd_random(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
    except UsageError as exc:
        print(f"graphzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RotorError as exc:
        print(f"graphzeta: invalid rotor spec: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConsistencyError as exc:
        print(f"graphzeta: internal consistency violation: {exc}", file=sys.stderr)
        print(json.dumps(exc.diagnostics, indent=2, sort_keys=True, default=str), file=sys.stderr)
        return EXIT_CONSISTENCY
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
