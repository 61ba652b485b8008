"""Command-line front end.

Exit codes: 0 success, 1 domain negative (e.g. not realisable), 2 usage or
parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .construct import construct_initial
from .core import Hypergraph, degree_sequence, dimension_sequence
from .errors import CapExceeded, EmptyInput, InternalInvariantError, ParseError, RealisabilityError
from .estimate import (
    WEIGHT_MODES,
    WeightedSample,
    avg_clustering_coefficient,
    snis_estimate,
    uniform_estimate,
)
from .gen import hypergraph_multiplicity, sample_traces
from .io import (
    format_hypergraph_edgelist,
    format_sequence,
    parse_hypergraph_edgelist,
    parse_sequence_file,
    pseudofractal_sequences,
    read_samples_report,
    samples_report_json,
    write_samples_csv,
    write_samples_report,
)
from .mcmc import ChainState, chain_series, mcmc_ess, select_lag
from .oracle import enumerate_hypergraphs
from .seq import realisability_violation

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

PROPERTIES = {"cc": avg_clustering_coefficient}


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_sequences(args) -> tuple[tuple[int, ...], tuple[int, ...], list[str] | None]:
    """Degrees (sorted), dimensions (sorted) and optional labels per sorted position."""
    if args.hypergraph:
        if args.degrees or args.dimensions:
            raise ParseError("give either --hypergraph or degree/dimension files, not both")
        parsed = parse_hypergraph_edgelist(_read(args.hypergraph))
        seq = degree_sequence(parsed.hypergraph)
        labels = [parsed.labels[v] for v in seq.order]
        return seq.values, dimension_sequence(parsed.hypergraph), labels
    if not (args.degrees and args.dimensions):
        raise ParseError("need a degree file and a dimension file (or --hypergraph)")
    return parse_sequence_file(_read(args.degrees)), parse_sequence_file(_read(args.dimensions)), None


def _add_inputs(p):
    p.add_argument("degrees", nargs="?", help="degree sequence file")
    p.add_argument("dimensions", nargs="?", help="dimension sequence file")
    p.add_argument("--hypergraph", metavar="EDGELIST", help="take both sequences from an edge-list file")


def _add_output(p):
    p.add_argument("--output", "-o", help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _write_report(args, metadata, records, estimate) -> None:
    if args.format == "csv":
        if not args.output:
            raise ParseError("--format csv needs --output")
        write_samples_csv(args.output, records)
        return
    if args.output:
        write_samples_report(args.output, metadata, records, estimate)
    else:
        sys.stdout.write(samples_report_json(metadata, records, estimate))


def cmd_check(args) -> int:
    a, b, _ = _load_sequences(args)
    reason = realisability_violation(a, b)
    if reason is None:
        print("realisable")
        return EXIT_OK
    print(f"not realisable: {reason}")
    return EXIT_NEGATIVE


def cmd_construct(args) -> int:
    a, b, labels = _load_sequences(args)
    h = construct_initial(a, b)
    _emit(format_hypergraph_edgelist(h, labels), args.output)
    return EXIT_OK


def _estimate_block(report) -> dict:
    return {"property": "cc", **report.to_dict()}


def cmd_generate(args) -> int:
    a, b, labels = _load_sequences(args)
    traces = sample_traces(a, b, args.samples, args.seed, workers=args.workers)
    samples = [WeightedSample.from_trace(t) for t in traces]
    records = [
        {"log_prob": s.log_prob, "log_multiplicity": s.log_multiplicity, "cc": s.property_value,
         "edges": [list(e) for e in t.edges]}
        for s, t in zip(samples, traces)
    ]
    estimate = None
    if samples:
        report = snis_estimate(samples, mode=args.weight_mode, n_bootstrap=args.bootstrap, seed=args.seed)
        estimate = _estimate_block(report)
    metadata = {
        "sampler": "snis", "seed": args.seed, "weight_mode": args.weight_mode, "n_samples": args.samples,
        "degrees": list(a), "dimensions": list(b), "vertex_labels": labels, "version": __version__,
    }
    _write_report(args, metadata, records, estimate)
    return EXIT_OK


def cmd_mcmc(args) -> int:
    a, b, labels = _load_sequences(args)
    initial = construct_initial(a, b)
    prop = PROPERTIES["cc"]
    seeds = np.random.SeedSequence(args.seed).spawn(2)
    lag_note = "fixed"
    if args.lag == "auto":
        pilot = chain_series(initial, args.pilot_steps, prop, seeds[0])
        if np.ptp(pilot) == 0:
            lag, lag_note = 1, "auto (pilot statistic constant)"
        else:
            lag, lag_note = select_lag(pilot, args.threshold), "auto"
    else:
        lag = int(args.lag)
        if lag < 1:
            raise ParseError("--lag must be a positive integer or 'auto'")
    burn_in = 10 * lag if args.burn_in is None else args.burn_in

    state = ChainState(initial, seeds[1])
    hs = state.sample(args.samples, lag, burn_in)
    values = [prop(h) for h in hs]
    records = [{"log_prob": None, "log_multiplicity": hypergraph_multiplicity(h), "cc": v,
                "edges": [list(e) for e in h.edges]} for h, v in zip(hs, values)]
    estimate = None
    if hs:
        ess = mcmc_ess(values, args.threshold) if len(values) > 1 and np.ptp(values) > 0 else float(len(values))
        estimate = _estimate_block(uniform_estimate(values, ess, args.bootstrap, args.seed))
    metadata = {
        "sampler": "mcmc", "seed": args.seed, "weight_mode": "uniform", "n_samples": args.samples,
        "lag": lag, "lag_selection": lag_note, "burn_in": burn_in, "pilot_steps": args.pilot_steps,
        "threshold": args.threshold, "noop_steps": state.n_noop, "steps": state.steps_taken,
        "degrees": list(a), "dimensions": list(b), "vertex_labels": labels, "version": __version__,
    }
    _write_report(args, metadata, records, estimate)
    return EXIT_OK


def cmd_estimate(args) -> int:
    doc = read_samples_report(args.report)
    meta = doc["metadata"]
    prop = PROPERTIES[args.property]
    n = len(meta["degrees"])
    values = []
    samples = []
    for rec in doc["samples"]:
        if "edges" in rec:
            h = Hypergraph.from_edges(n, rec["edges"])
            v = prop(h)
        else:
            h, v = None, rec["cc"]
        values.append(v)
        if meta["sampler"] == "snis":
            samples.append(WeightedSample(h or Hypergraph(n, ()), rec["log_prob"], rec["log_multiplicity"], v))
    if not values:
        out = {"property": args.property, "estimate": None, "ess": None, "n_samples": 0,
               "weight_mode": None, "std_error": None}
    elif meta["sampler"] == "snis":
        mode = args.weight_mode or meta.get("weight_mode", "exact")
        out = _estimate_block(snis_estimate(samples, values, mode, args.bootstrap, args.seed))
    else:
        ess = mcmc_ess(values, args.threshold) if len(values) > 1 and np.ptp(values) > 0 else float(len(values))
        out = _estimate_block(uniform_estimate(values, ess, args.bootstrap, args.seed))
    out["property"] = args.property
    out["sampler"] = meta["sampler"]
    _emit(json.dumps(out, indent=1, sort_keys=True) + "\n", args.output)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    a, b, _ = _load_sequences(args)
    hs = enumerate_hypergraphs(a, b)
    if not hs:
        print("no realisations")
        return EXIT_NEGATIVE
    lines = [f"# {len(hs)} hypergraph realisations, {sum(c for _, c in hs)} incidence matrices"]
    for h, count in hs:
        lines.append(f"{count}\t" + " | ".join(",".join(map(str, e)) for e in h.edges))
    cc = float(np.mean([avg_clustering_coefficient(h) for h, _ in hs]))
    lines.append(f"# exact mean cc {cc!r}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_pseudofractal(args) -> int:
    a, b = pseudofractal_sequences(args.t)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / f"G{args.t}_degrees.txt").write_text(format_sequence(a), encoding="utf-8")
    (out / f"G{args.t}_dimensions.txt").write_text(format_sequence(b), encoding="utf-8")
    print(f"G_{args.t}: {len(a)} vertices, {len(b)} edges -> {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypergen", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test whether a degree/dimension pair is realisable")
    _add_inputs(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="write one deterministic realisation as an edge list")
    _add_inputs(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("generate", help="draw random hypergraphs and an importance-sampling estimate")
    _add_inputs(p)
    _add_output(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight-mode", choices=WEIGHT_MODES, default="exact")
    p.add_argument("--bootstrap", type=int, default=1000, help="bootstrap resamples for the standard error")
    p.add_argument("--workers", type=int, default=None, help="worker threads (capped by HYPERGEN_THREADS)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("mcmc", help="sample with the edge-shuffle Markov chain")
    _add_inputs(p)
    _add_output(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--lag", default="auto", help="thinning lag, or 'auto' to pick it from a pilot chain")
    p.add_argument("--burn-in", type=int, default=None, help="default: 10 x lag")
    p.add_argument("--pilot-steps", type=int, default=10_000)
    p.add_argument("--threshold", type=float, default=0.001, help="autocorrelation cut-off")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bootstrap", type=int, default=1000)
    p.set_defaults(func=cmd_mcmc)

    p = sub.add_parser("estimate", help="estimate a property from a samples report")
    p.add_argument("report")
    p.add_argument("--property", choices=sorted(PROPERTIES), default="cc")
    p.add_argument("--weight-mode", choices=WEIGHT_MODES, default=None)
    p.add_argument("--threshold", type=float, default=0.001)
    p.add_argument("--bootstrap", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("enumerate", help="list every realisation (small inputs only)")
    _add_inputs(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("pseudofractal", help="write the sequences of pseudo-fractal graph G_t")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--output-dir", default=".")
    p.set_defaults(func=cmd_pseudofractal)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, EmptyInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RealisabilityError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (InternalInvariantError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
