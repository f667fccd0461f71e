"""Command-line interface.

Subcommands: enumerate, blockers formula, blockers exact, verify, witness,
render. All machine output is canonical JSON (sorted keys, compact
separators) or the plain edge-set text format, written to stdout or --out;
progress and timing go to stderr so repeated runs stay byte-identical.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure,
4 solver gave up (node limit).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .enumeration import enumerate_shp, enumerate_spm
from .formula import iter_blocker_specs, parse_blocker_spec, realize
from .geometry import Context, Edge, SimplePath, format_edge_set, is_simple_hamiltonian_path, parse_edge_set
from .hitting import SetSystem, SolverConfig, directional_blocker_search, min_hitting_sets
from .render import Layer, RenderSpec, render_svg
from .verification import verify_theorems
from .witnesses import P1Params, Prop1Params, build_p0, build_p1, build_prop1_path, prop1_special_edges

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY_FAIL = 3
EXIT_INCOMPLETE = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(lines: list[str], out_path: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need(args: argparse.Namespace, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise _UsageError(f"missing required option --{name.replace('_', '-')}")
    return value


def build_parser(defaults: dict | None = None) -> _Parser:
    """Construct the argument parser.

    `defaults` (from --config) must reach every subparser, not just the root:
    subcommands parse into a fresh namespace whose action defaults would
    otherwise win over root-level set_defaults.
    """
    parser = _Parser(prog="convexblockers", description=__doc__)
    parser.add_argument("--config", help="JSON file of default option values (flags win)")
    sub = parser.add_subparsers(dest="command", required=True)
    leaves = []

    p = sub.add_parser("enumerate", help="list simple perfect matchings or Hamiltonian paths")
    leaves.append(p)
    p.add_argument("--m", type=int)
    p.add_argument("--family", choices=["spm", "shp"])
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out")

    blockers = sub.add_parser("blockers", help="blocker families")
    bsub = blockers.add_subparsers(dest="blockers_command", required=True)

    p = bsub.add_parser("formula", help="the explicit caterpillar family")
    leaves.append(p)
    p.add_argument("--m", type=int)
    p.add_argument("--spec", help="single member as 'r:t:e1,e2,...'")
    p.add_argument("--out")

    p = bsub.add_parser("exact", help="all minimum blockers by exact search")
    leaves.append(p)
    p.add_argument("--m", type=int)
    p.add_argument("--family", choices=["spm", "shp"])
    p.add_argument("--algorithm", choices=["generic", "directional"], default="generic")
    p.add_argument("--node-limit", type=int, default=SolverConfig().node_limit)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="full certification for a range of m")
    leaves.append(p)
    p.add_argument("--m", type=int)
    p.add_argument("--to", type=int)
    p.add_argument("--node-limit", type=int, default=SolverConfig().node_limit)
    p.add_argument("--out")

    p = sub.add_parser("witness", help="explicit avoidance paths")
    leaves.append(p)
    p.add_argument("kind", choices=["prop1", "p0", "p1"])
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--alpha-prime", type=int, dest="alpha_prime")
    p.add_argument("--beta", type=int)
    p.add_argument("--beta-prime", type=int, dest="beta_prime")
    p.add_argument("--out")

    p = sub.add_parser("render", help="draw layers to SVG")
    leaves.append(p)
    p.add_argument("--m", type=int)
    p.add_argument("--layer", action="append", help="edge set layer 'a-b,c-d[:style]'", default=None)
    p.add_argument("--path", action="append", help="path layer 'v0,v1,...[:style]'", default=None)
    p.add_argument("--background", help="draw all edges first in this style")
    p.add_argument("--labels", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--angles", action="store_true", help="annotate edge directions")
    p.add_argument("--out")

    if defaults:
        for q in [parser, *leaves]:
            q.set_defaults(**defaults)
    return parser


def _cmd_enumerate(args: argparse.Namespace) -> int:
    ctx = Context(_need(args, "m"))
    family = _need(args, "family")
    if family == "spm":
        items = list(enumerate_spm(ctx))
        if args.count_only:
            _emit([str(len(items))], args.out)
            return EXIT_OK
        lines = [
            _dumps({"m": ctx.m, "kind": "spm", "edges": [[e.a, e.b] for e in sorted(s)]}) for s in items
        ]
    else:
        paths = list(enumerate_shp(ctx))
        if args.count_only:
            _emit([str(len(paths))], args.out)
            return EXIT_OK
        lines = [
            _dumps(
                {
                    "m": ctx.m,
                    "kind": "shp",
                    "vertices": list(p.vertices),
                    "edges": [[e.a, e.b] for e in sorted(p.edge_set())],
                }
            )
            for p in paths
        ]
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_blockers_formula(args: argparse.Namespace) -> int:
    ctx = Context(_need(args, "m"))
    if args.spec:
        spec = parse_blocker_spec(args.spec)
        _emit([format_edge_set(realize(spec, ctx))], args.out)
        return EXIT_OK
    first_spec: dict[frozenset, object] = {}
    for spec in iter_blocker_specs(ctx):
        s = realize(spec, ctx)
        first_spec.setdefault(s, spec)
    lines = [
        _dumps({"m": ctx.m, "spec": first_spec[s].to_json_dict(), "edges": [[e.a, e.b] for e in sorted(s)]})
        for s in sorted(first_spec, key=lambda s: tuple(sorted(s)))
    ]
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_blockers_exact(args: argparse.Namespace) -> int:
    ctx = Context(_need(args, "m"))
    family = _need(args, "family")
    if family == "spm":
        sets = list(enumerate_spm(ctx))
    else:
        sets = [p.edge_set() for p in enumerate_shp(ctx)]
    if args.algorithm == "directional":
        result = directional_blocker_search(ctx, sets)
        payload = {
            "min_size": ctx.m if result.solutions else -1,
            "solutions": [[ctx.edge_index(e) for e in sorted(s)] for s in result.solutions],
            "status": "complete",
            "nodes": result.nodes,
        }
        _emit([_dumps(payload)], args.out)
        return EXIT_OK
    system = SetSystem(
        ground_size=ctx.num_edges,
        sets=tuple(tuple(ctx.edge_index(e) for e in sorted(s)) for s in sets),
    )
    res = min_hitting_sets(system, SolverConfig(node_limit=args.node_limit))
    _emit([_dumps(res.to_json_dict())], args.out)
    return EXIT_INCOMPLETE if res.status == "incomplete" else EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    m_from = _need(args, "m")
    m_to = args.to if args.to is not None else m_from
    if m_to < m_from:
        raise _UsageError(f"--to {m_to} is smaller than --m {m_from}")
    config = SolverConfig(node_limit=args.node_limit)
    lines = []
    any_fail = False
    any_incomplete = False
    for m in range(m_from, m_to + 1):
        started = time.perf_counter()
        report = verify_theorems(m, config)
        elapsed = time.perf_counter() - started
        print(f"m={m}: status={report.status} ({elapsed:.2f}s)", file=sys.stderr)
        lines.append(report.canonical_json())
        any_fail = any_fail or report.status == "fail"
        any_incomplete = any_incomplete or report.status == "inconclusive"
    _emit(lines, args.out)
    if any_fail:
        return EXIT_VERIFY_FAIL
    if any_incomplete:
        return EXIT_INCOMPLETE
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace) -> int:
    m = _need(args, "m")
    ctx = Context(m)
    if args.kind == "prop1":
        params = Prop1Params(m=m, k=_need(args, "k"), i=_need(args, "i"))
        path = build_prop1_path(params)
        f, g, h = prop1_special_edges(params)
        avoids, contains = [f, g], [h]
        params_dict = {"m": m, "k": params.k, "i": params.i}
    elif args.kind == "p0":
        j, s, t = _need(args, "j"), _need(args, "s"), _need(args, "t")
        path = build_p0(m, j, s, t)
        avoids, contains = [Edge(s, t)], []
        params_dict = {"m": m, "j": j, "s": s, "t": t}
    else:
        params = P1Params(
            m=m,
            j=_need(args, "j"),
            alpha=_need(args, "alpha"),
            alpha2=_need(args, "alpha_prime"),
            beta=_need(args, "beta"),
            beta2=_need(args, "beta_prime"),
        )
        path = build_p1(params)
        avoids = [Edge(params.alpha, params.beta), Edge(params.alpha2, params.beta2)]
        contains = []
        params_dict = {
            "m": m,
            "j": params.j,
            "alpha": params.alpha,
            "alpha_prime": params.alpha2,
            "beta": params.beta,
            "beta_prime": params.beta2,
        }
    edge_set = path.edge_set()
    checks = {
        "is_shp": is_simple_hamiltonian_path(path, ctx),
        "avoids": [str(e) for e in avoids if e not in edge_set],
        "contains": [str(e) for e in contains if e in edge_set],
    }
    ok = checks["is_shp"] and len(checks["avoids"]) == len(avoids) and len(checks["contains"]) == len(contains)
    payload = {"kind": args.kind, "params": params_dict, "vertices": list(path.vertices), "checks": checks}
    _emit([_dumps(payload)], args.out)
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _split_style(text: str) -> tuple[str, str]:
    if ":" in text:
        body, style = text.rsplit(":", 1)
        return body, style
    return text, "solid"


def _cmd_render(args: argparse.Namespace) -> int:
    ctx = Context(_need(args, "m"))
    layers: list[Layer] = []
    if args.background:
        layers.append(Layer(content=frozenset(ctx.all_edges), style=args.background))
    for text in args.layer or []:
        body, style = _split_style(text)
        layers.append(Layer(content=parse_edge_set(body), style=style))
    for text in args.path or []:
        body, style = _split_style(text)
        vertices = tuple(int(v) for v in body.split(","))
        layers.append(Layer(content=SimplePath(vertices), style=style))
    if not layers:
        raise _UsageError("nothing to draw: give --layer, --path or --background")
    spec = RenderSpec(
        m=ctx.m, layers=tuple(layers), show_labels=args.labels, highlight_angles=args.angles
    )
    svg = render_svg(spec)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "witness": _cmd_witness,
    "render": _cmd_render,
}


def _dispatch(argv: Sequence[str]) -> int:
    pre = _Parser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(list(argv))
    defaults = None
    if known.config:
        with open(known.config) as fh:
            defaults = json.load(fh)
        if not isinstance(defaults, dict):
            raise ValueError(f"config file {known.config} must hold a JSON object")
    parser = build_parser(defaults)
    args = parser.parse_args(list(argv))
    if args.command == "blockers":
        if args.blockers_command == "formula":
            return _cmd_blockers_formula(args)
        return _cmd_blockers_exact(args)
    return _HANDLERS[args.command](args)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return _dispatch(sys.argv[1:] if argv is None else argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SystemExit as exc:  # argparse --help
        return 0 if exc.code in (None, 0) else EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
