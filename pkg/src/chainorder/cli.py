"""Command line interface: analyze, distance, oracle-verify, experiment, classical."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .chain import Chain, Topology, clean_symbols, parse_chain
from .classical import (
    EpsilonModel,
    classical_summary,
    connection_F_closed_form,
    entropy_sweep,
    k_markov,
    markov_epsilons,
    shannon_H,
)
from .errors import ChainError, TooLarge, UnknownExperiment
from .experiments import (
    additivity_exhaustive,
    additivity_probe,
    nB_struggle,
    perturbation_suite,
    separation_bonding,
    struggle_sweep,
)
from .metrics import DEFAULT_THETA, omega3_distance, order_report
from .oracle import N_MAX, bfs_distance, verify_suite
from .output import render
from .poles import Omega

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
EXPERIMENTS = ("struggle", "nb-struggle", "additivity", "perturbation", "entropy-sweep")


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); 2 is reserved for failed checks
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, "%s: error: %s\n" % (self.prog, message))


def parse_range(text: str) -> list:
    """'1..50', '7' or '2,4,8' to a list of ints."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part]


def _common(p, omega_default="1"):
    p.add_argument("--topology", choices=("open", "closed"), default=None,
                   help="chain topology (default: open, or closed for --omega 3)")
    p.add_argument("--omega", choices=("1", "2", "3"), default=omega_default,
                   help="ordering method: 1 symbol transfer, 2 block transfer, 3 adjacent swap")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--no-header", action="store_true", help="omit the comment header line")
    p.add_argument("--output", "-o", default=None, help="write data here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = Parser(prog="chainorder", description=__doc__)
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=Parser)
    sub.required = True

    p = sub.add_parser("analyze", help="order report and classical baseline per chain")
    p.add_argument("chains", nargs="*", help="chains; '-' or none reads standard input")
    p.add_argument("--file", "-f", default=None, help="one chain per line, '#' comments")
    p.add_argument("--theta", type=Fraction, default=DEFAULT_THETA, help="near-chaos threshold")
    p.add_argument("--window", type=int, default=None, help="sliding window length")
    _common(p)

    p = sub.add_parser("distance", help="exact BFS distance between two chains")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--n-max", type=int, default=None)
    _common(p)

    for name in ("oracle-verify", "verify"):
        p = sub.add_parser(name, help="exhaustive verification of the closed forms")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--n-max", type=int, default=None)
        _common(p, omega_default=None)

    p = sub.add_parser("experiment", help="reproduction tables")
    p.add_argument("name", help="one of: " + ", ".join(EXPERIMENTS))
    p.add_argument("--s", type=int, default=2, help="half-period of the repeated block")
    p.add_argument("--n", default=None, help="n or range like 1..50")
    p.add_argument("--chain", default=None, help="block B for nb-struggle, or chain A for additivity")
    p.add_argument("--chain2", default=None, help="chain B for a single additivity probe")
    p.add_argument("--max-length", type=int, default=12)
    p.add_argument("--step", type=float, default=1.0, help="k step for entropy-sweep")
    _common(p)

    p = sub.add_parser("classical", help="Markov information and connection function")
    p.add_argument("chains", nargs="*")
    p.add_argument("--file", "-f", default=None)
    p.add_argument("--eps", nargs=3, type=float, metavar=("E11", "E00", "E10"), default=None)
    p.add_argument("--n", type=int, default=None, help="closed-form evaluation without a chain")
    p.add_argument("--b", type=int, default=None)
    _common(p)
    return parser


def resolve_topology(args) -> Topology:
    omega = getattr(args, "omega", None)
    if args.topology is None:
        return Topology.CLOSED if omega == "3" else Topology.OPEN
    if omega == "3" and args.topology == "open":
        raise UsageError("--omega 3 (adjacent swaps) is defined for --topology closed only")
    return Topology(args.topology)


def read_inputs(args) -> list:
    lines = list(args.chains)
    if args.file:
        with open(args.file) as fh:
            lines.extend(fh.read().splitlines())
    if not lines or lines == ["-"]:
        lines = sys.stdin.read().splitlines()
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line and line != "-":
            out.append(line)
    return out


def _header(args, extra=""):
    if args.no_header:
        return None
    return ("chainorder %s %s %s" % (__version__, args.command, extra)).rstrip()


def _emit(args, records, extra=""):
    text = render(records, args.format, _header(args, extra))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def analyze_record(chain: Chain, omega: Omega, theta) -> dict:
    rec = {"chain": chain.symbols}
    rec.update(order_report(chain, omega, theta).as_record())
    base = classical_summary(chain)
    rec.update({key: base[key] for key in ("c00", "c01", "c10", "c11", "H_bits", "K_markov")})
    return rec


def cmd_analyze(args) -> int:
    topology = resolve_topology(args)
    omega = Omega.coerce(args.omega)
    if args.window is not None and (args.window < 4 or args.window % 2):
        raise UsageError("--window must be an even length >= 4")
    records, skipped = [], 0
    for text in read_inputs(args):
        if args.window:
            symbols = clean_symbols(text)
            for offset in range(len(symbols) - args.window + 1):
                piece = symbols[offset:offset + args.window]
                if 2 * piece.count("1") != len(piece):
                    skipped += 1
                    continue
                rec = {"offset": offset}
                rec.update(analyze_record(parse_chain(piece, topology), omega, args.theta))
                records.append(rec)
        else:
            records.append(analyze_record(parse_chain(text, topology), omega, args.theta))
    if args.window:
        print("skipped %d unbalanced window(s)" % skipped, file=sys.stderr)
    _emit(args, records)
    return EXIT_OK


def cmd_distance(args) -> int:
    topology = resolve_topology(args)
    omega = Omega.coerce(args.omega)
    a, b = parse_chain(args.a, topology), parse_chain(args.b, topology)
    bound = args.n_max if args.n_max is not None else N_MAX[topology]
    if a.n > bound:
        raise TooLarge("n=%d exceeds the oracle bound %d; pass --n-max to override" % (a.n, bound))
    rec = {"a": a.symbols, "b": b.symbols, "omega": int(omega), "topology": topology.value,
           "bfs_steps": bfs_distance(a, b, omega)}
    if omega is Omega.ADJACENT_SWAP:
        rec["matching_steps"] = omega3_distance(a, b)
    _emit(args, [rec])
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.topology is not None and args.omega == "3" and args.topology == "open":
        raise UsageError("--omega 3 (adjacent swaps) is defined for --topology closed only")
    omegas = [Omega.coerce(args.omega)] if args.omega else list(Omega)
    topologies = [Topology(args.topology)] if args.topology else [Topology.OPEN, Topology.CLOSED]
    reports = []
    for top in topologies:
        for om in omegas:
            if om is Omega.ADJACENT_SWAP and top is Topology.OPEN:
                continue
            reports.append(verify_suite(args.n, om, top, args.n_max))
    if args.format == "json":
        _emit(args, [r.to_dict() for r in reports])
    else:
        rows = []
        for r in reports:
            rows.append({
                "n": r.n, "omega": int(r.omega), "topology": r.topology.value, "states": r.states,
                "symmetric": r.symmetric, "connected": r.connected,
                "t_bfs": r.pole_distance_bfs, "t_formula": r.pole_distance_formula,
                "max_other": r.max_other_distance, "strict": r.strict,
                "maximality_ok": r.maximality_ok,
                "t_plus_agree": "%d/%d" % (r.agreement["t_plus"]["agree"], r.agreement["t_plus"]["total"]),
                "t_minus_agree": "%d/%d" % (r.agreement["t_minus"]["agree"], r.agreement["t_minus"]["total"]),
                "locality_ok": not r.locality_violations,
                "passed": r.passed,
            })
        _emit(args, rows)
    failed = [r for r in reports if not r.passed]
    print("%d of %d verification runs passed" % (len(reports) - len(failed), len(reports)),
          file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_experiment(args) -> int:
    name = args.name
    if name not in EXPERIMENTS:
        raise UnknownExperiment("unknown experiment %r; choose from %s" % (name, ", ".join(EXPERIMENTS)))
    omega = Omega.coerce(args.omega)
    if name == "struggle":
        n_range = parse_range(args.n or "1..50")
        rows = struggle_sweep(omega, args.s, n_range)
        records = [r.as_record() for r in rows]
        worst = max((abs(r.k - r.k_formula) for r in rows), default=0)
        bad = sum(not r.agree for r in rows)
        summary = "rows=%d limit=%s max_deviation_from_closed_form=%s disagreements=%d" % (
            len(rows), rows[0].limit_value if rows else "-", worst, bad)
    elif name == "nb-struggle":
        if not args.chain:
            raise ChainError("nb-struggle needs --chain B")
        rows = nB_struggle(parse_chain(args.chain), parse_range(args.n or "1..20"))
        records = [r.as_record() for r in rows]
        bad = sum(r.t_plus != r.t_plus_formula or not r.l_in_bound for r in rows)
        summary = "rows=%d disagreements=%d" % (len(rows), bad)
    elif name == "additivity":
        topology = resolve_topology(args)
        if args.chain and args.chain2:
            res = additivity_probe(parse_chain(args.chain, topology), parse_chain(args.chain2, topology), omega)
            records = [res.as_record()]
            bad = 0
            summary = "K_resid=%d I_resid=%d" % (res.K_resid, res.I_resid)
        else:
            s = additivity_exhaustive(omega, args.max_length, topology)
            records = [{
                "omega": s.omega, "topology": s.topology, "pairs": s.pairs,
                "same_sign_pairs": s.same_sign_pairs,
                "K_resid_min": min(s.K_resid_values), "K_resid_max": max(s.K_resid_values),
                "I_resid_violations": len(s.I_resid_violations),
                "commut_K_violations": len(s.commut_K_violations),
                "commut_I_violations": len(s.commut_I_violations),
            }]
            if omega is Omega.SYMBOL_TRANSFER:
                records += [dict(separation_bonding(m, k).as_record(), m=m)
                            for m in range(2, 6) for k in range(m, 7)]
            bad = 0 if omega is not Omega.BLOCK_TRANSFER or s.ok else 1
            summary = "pairs=%d violations=%d" % (s.pairs, bad)
    elif name == "perturbation":
        rows = [row for n in parse_range(args.n or "3..12") for row in perturbation_suite(n, omega)]
        records = [r.as_record() for r in rows]
        bad = sum(not r.agree for r in rows)
        summary = "rows=%d disagreements=%d" % (len(rows), bad)
    else:
        n_values = parse_range(args.n or "10")
        points = [p for n in n_values for p in entropy_sweep(n, args.step)]
        records = [{"n": p.n, "k": p.k, "H": p.H} for p in points]
        bad = 0
        summary = "rows=%d" % len(records)
    _emit(args, records, name)
    print(summary, file=sys.stderr)
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_classical(args) -> int:
    model = EpsilonModel(*args.eps) if args.eps else None
    records = []
    if args.n is not None:
        if args.b is None:
            raise ChainError("--n needs --b")
        n, b = args.n, args.b
        rec = {"n": n, "b": b, "k00": n - b, "H_bits": shannon_H(n, n - b), "K_markov": k_markov(b, n)}
        model = model or markov_epsilons(n, b)
        rec.update(model.as_dict())
        rec["F_closed_form"] = connection_F_closed_form(n, b, model)
        records.append(rec)
    else:
        topology = Topology(args.topology or "closed")
        for text in read_inputs(args):
            chain = parse_chain(text, topology)
            rec = {"chain": chain.symbols, "n": chain.n, "b": chain.b}
            rec.update(classical_summary(chain, model))
            records.append(rec)
    _emit(args, records)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "distance": cmd_distance,
    "oracle-verify": cmd_verify,
    "verify": cmd_verify,
    "experiment": cmd_experiment,
    "classical": cmd_classical,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print("chainorder: error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except ChainError as exc:
        print("chainorder: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
