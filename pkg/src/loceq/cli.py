"""Command-line interface.

Exit codes: 0 success, 1 identity violation, 2 parse/configuration error,
3 budget exceeded.  JSON goes to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .errors import BudgetExceeded, ConfigurationError, GraphFormatError, IdentityViolation, InvalidArgument
from .eulerian import count_eulerian, tutte_martin_recursive
from .gf import SUPPORTED_Q
from .graph import DEFAULT_BUDGET, all_graphs, format_graph, parse_graph, read_graph
from .index import has_odd_cycle, lambda_index, nu_perp_dim
from .isotropic import standard_system
from .orbits import census, label_string, orbit, scalar_orbit, verify_counting

EXIT_OK, EXIT_IDENTITY, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    path: str = None
    inline: str = None
    q: int = None
    n: int = None
    connected_only: bool = True
    budget: int = DEFAULT_BUDGET
    fmt: str = "json"
    figure: str = None
    dump: str = None
    jobs: int = 1

    def validate(self, need_graph):
        if self.budget <= 0:
            raise ConfigurationError("budget must be positive")
        if self.q is not None and self.q not in SUPPORTED_Q:
            raise ConfigurationError(f"unsupported q={self.q}")
        sources = sum(x is not None for x in (self.path, self.inline))
        if need_graph == "required" and sources != 1:
            raise ConfigurationError("give exactly one of a graph file or --graph")
        if sources > 1:
            raise ConfigurationError("give at most one graph source")

    def graph(self):
        if self.inline is not None:
            return parse_graph(self.inline.replace(";", "\n"))
        return read_graph(self.path)


def _emit(cfg, payload, table=None):
    if cfg.fmt == "text" and table is not None:
        sys.stdout.write(table)
    else:
        json.dump(payload, sys.stdout, indent=2, sort_keys=False)
        sys.stdout.write("\n")


def cmd_orbit(cfg):
    G = cfg.graph()
    orb = orbit(G, budget=cfg.budget)
    sorb = scalar_orbit(G, budget=2 * cfg.budget)
    payload = {
        "schema": "loceq.orbit/1",
        "q": G.q,
        "n": G.n,
        "l": orb.size,
        "scalar_orbit_size": sorb.size,
        "representative": label_string(min(orb.members)),
    }
    if cfg.dump:
        with open(cfg.dump, "w") as fh:
            fh.write("\n".join(format_graph(H) for H in orb.graphs()))
    table = "".join(f"{k}\t{v}\n" for k, v in payload.items() if k != "schema")
    _emit(cfg, payload, table)
    return EXIT_OK


def cmd_invariants(cfg):
    G = cfg.graph()
    L = standard_system(G)
    tm = tutte_martin_recursive(G)
    payload = {
        "schema": "loceq.invariants/1",
        "q": G.q,
        "n": G.n,
        "epsilon": count_eulerian(L, budget=cfg.budget),
        "lambda": lambda_index(G, budget=cfg.budget),
        "nu_perp_dim": nu_perp_dim(G),
        "has_odd_cycle": has_odd_cycle(G),
        "tutte_martin": {"q": G.q, "n": G.n, "coeffs": tm.as_dict()},
    }
    table = "".join(
        f"{k}\t{v}\n" for k, v in payload.items() if k not in ("schema", "tutte_martin")
    ) + "".join(f"tutte_martin_{d}\t{c}\n" for d, c in tm.as_dict().items())
    _emit(cfg, payload, table)
    return EXIT_OK


def cmd_census(cfg):
    if cfg.q is None or cfg.n is None:
        raise ConfigurationError("census needs --q and --n")
    rep = census(cfg.n, cfg.q, connected_only=cfg.connected_only, budget=cfg.budget)
    payload = rep.as_dict()
    if cfg.figure:
        from .report import plot_census

        payload["figure"] = plot_census(rep, cfg.figure)
    table = None
    if cfg.fmt == "text":
        from .report import census_table

        table = census_table(rep)
    _emit(cfg, payload, table)
    return EXIT_OK


def _verify_graphs(cfg):
    if cfg.path is not None or cfg.inline is not None:
        return [cfg.graph()]
    if cfg.q is None or cfg.n is None:
        raise ConfigurationError("verify needs a graph or --q and --n")
    return list(all_graphs(cfg.n, cfg.q, connected_only=True, budget=cfg.budget))


def cmd_verify(cfg):
    graphs = _verify_graphs(cfg)
    cache = {}
    reports = [verify_counting(G, budget=cfg.budget, raise_on_failure=False, cache=cache) for G in graphs]
    failures = [r for r in reports if not r.ok]
    payload = {
        "schema": "loceq.verify/1",
        "graphs_checked": len(reports),
        "failures": [r.as_dict() for r in failures],
        "ok": not failures,
    }
    if cfg.figure:
        from .report import plot_verification

        payload["figure"] = plot_verification(reports, cfg.figure)
    table = None
    if cfg.fmt == "text":
        from .report import verification_table

        table = verification_table(reports)
    _emit(cfg, payload, table)
    for r in failures:
        print("identity violation: " + json.dumps(r.as_dict()), file=sys.stderr)
    return EXIT_OK if not failures else EXIT_IDENTITY


COMMANDS = {
    "orbit": (cmd_orbit, "required"),
    "invariants": (cmd_invariants, "required"),
    "census": (cmd_census, "none"),
    "verify": (cmd_verify, "optional"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="loceq", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_input=True):
        if graph_input:
            p.add_argument("path", nargs="?", help="graph file ('q n' header, then 'u v label' lines)")
            p.add_argument("--graph", dest="inline", help="inline graph, e.g. '2 3; 0 1 1; 1 2 1'")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on enumeration size")
        p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    p = sub.add_parser("orbit", help="size of the local-equivalence orbit of a graph")
    common(p)
    p.add_argument("--dump", help="write every orbit member to this file")

    p = sub.add_parser("invariants", help="epsilon, lambda, nu-perp dimension, Tutte-Martin polynomial")
    common(p)

    p = sub.add_parser("census", help="count local-equivalence classes on n vertices")
    common(p, graph_input=False)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--connected", dest="connected_only", action="store_true", default=True)
    grp.add_argument("--all", dest="connected_only", action="store_false")
    p.add_argument("--figure", help="write an orbit-size histogram to this image file")

    p = sub.add_parser("verify", help="check the orbit/epsilon/lambda counting identities")
    common(p)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--figure", help="write an identity scatter plot to this image file")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    cfg = RunConfig(
        command=args.command,
        **{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__ and k != "command"},
    )
    func, need_graph = COMMANDS[cfg.command]
    try:
        cfg.validate(need_graph)
        return func(cfg)
    except (GraphFormatError, ConfigurationError, InvalidArgument, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except IdentityViolation as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return EXIT_IDENTITY


if __name__ == "__main__":
    sys.exit(main())
