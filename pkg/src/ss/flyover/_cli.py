# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Batch runner: seeded scenarios in, one CSV row per run out."""

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional

from public import public

from .__about__ import __title__, __version__
from .net import Topology, Corruption, Strategy, SupervisorMode, ScenarioError
from .engine import Scenario, build_simulation
from .ttp import enumerate_labelled_trees, tree_to_path, oracle_is_valid_output

log = logging.getLogger(__name__)

COLUMNS = ("seed", "n", "topology", "supervisor", "rounds_to_legal", "rounds_to_all_reject",
           "max_degree_seen", "total_messages", "connectivity_violations", "sybil_violations")

SUPERVISORS = ["honest", "none"] + [s.value.replace("_", "-") for s in Strategy]


@public
@dataclass
class ExperimentSpec:

    scenarios: List[Scenario]
    reps:      int = 1
    out:       Optional[str] = None
    trace:     Optional[str] = None
    workers:   int = 1

    def __post_init__(self):

        if self.reps < 1:
            raise ScenarioError("reps", self.reps, "an integer >= 1")
        if self.workers < 1:
            raise ScenarioError("workers", self.workers, "an integer >= 1")

    def runs(self):
        """Scenarios with consecutive seeds, ordered by scenario index then seed."""
        for scenario in self.scenarios:
            for k in range(self.reps):
                yield replace(scenario, seed=scenario.seed + k)


def _positive(text):

    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected an integer >= 1, got {}".format(value))
    return value


def _supervisor(label):

    if label == "honest":
        return SupervisorMode.HONEST, None
    if label == "none":
        return SupervisorMode.ABSENT, None
    return SupervisorMode.MALICIOUS, Strategy(label.replace("-", "_"))


@public
def build_parser():

    parser = argparse.ArgumentParser(prog="flyover-sim",
        description="Simulate self-stabilizing linearization with supervisor advice.")
    parser.add_argument("--version", action="version",
                        version="{} {}".format(__title__, __version__))
    parser.add_argument("--n", type=_positive, default=16,
                        help="number of nodes (default: %(default)s)")
    parser.add_argument("--topology", choices=[t.value for t in Topology],
                        default=Topology.RANDOM_CONNECTED.value,
                        help="initial weakly connected topology; far_pair joins two cliques "
                             "of n/4 nodes by a path (default: %(default)s)")
    parser.add_argument("--supervisor", choices=SUPERVISORS, default="honest",
                        help="supervisor behaviour; 'none' runs the base algorithm only "
                             "(default: %(default)s)")
    parser.add_argument("--seed", type=int, default=0,
                        help="first seed (default: %(default)s)")
    parser.add_argument("--reps", type=_positive, default=1,
                        help="runs per scenario with consecutive seeds (default: %(default)s)")
    parser.add_argument("--max-rounds", type=_positive, default=None,
                        help="round limit per run (default: grows with n)")
    parser.add_argument("--corruption", choices=[c.value for c in Corruption],
                        default=Corruption.NONE.value,
                        help="transient faults in the initial configuration "
                             "(default: %(default)s)")
    parser.add_argument("--extra-edges", type=float, default=None,
                        help="extra random edges per node for random_connected "
                             "(default: from flyover.cfg)")
    parser.add_argument("--attacks", type=int, default=1,
                        help="advice rounds of a malicious supervisor (default: %(default)s)")
    parser.add_argument("--out", default=None,
                        help="CSV output file (default: standard output)")
    parser.add_argument("--trace", default=None,
                        help="JSON-lines trace file, one record per round")
    parser.add_argument("--workers", type=_positive, default=1,
                        help="worker processes (default: %(default)s)")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="logging level (default: %(default)s)")
    parser.add_argument("--verify-ttp", type=int, default=None, metavar="MAX_N",
                        help="check Tree-to-Path on every labelled tree up to MAX_N "
                             "vertices and exit")
    return parser


def _scenario_from(args):

    mode, strategy = _supervisor(args.supervisor)
    return Scenario(n=args.n, topology=Topology(args.topology), supervisor=mode,
                    strategy=strategy, seed=args.seed, max_rounds=args.max_rounds,
                    corruption=Corruption(args.corruption), extra_edges=args.extra_edges,
                    attacks=args.attacks)


@public
def parse_scenario(argv=None) -> Scenario:
    """Scenario from command line flags; invalid input exits with status 2."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _scenario_from(args)
    except ScenarioError as exc:
        parser.error(str(exc))


@public
def parse_experiment(argv=None) -> ExperimentSpec:

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return ExperimentSpec([_scenario_from(args)], reps=args.reps, out=args.out,
                              trace=args.trace, workers=args.workers)
    except ScenarioError as exc:
        parser.error(str(exc))


def _row(scenario, metrics):

    return {"seed": scenario.seed,
            "n": scenario.n,
            "topology": scenario.topology.value,
            "supervisor": scenario.supervisor_label,
            "rounds_to_legal": metrics.rounds_to_legal,
            "rounds_to_all_reject": metrics.rounds_to_all_reject,
            "max_degree_seen": metrics.max_degree_seen,
            "total_messages": metrics.total_messages,
            "connectivity_violations": metrics.connectivity_violations,
            "sybil_violations": metrics.sybil_violations}


def _run_one(scenario, tracing=False):

    trace = io.StringIO() if tracing else None
    if trace is not None:
        trace.write(json.dumps({"seed": scenario.seed, "n": scenario.n,
                                "topology": scenario.topology.value,
                                "supervisor": scenario.supervisor_label}, sort_keys=True) + "\n")
    metrics = build_simulation(scenario, trace).run(scenario.max_rounds)
    return _row(scenario, metrics), None if trace is None else trace.getvalue()


@public
def run_experiments(spec: ExperimentSpec) -> List[dict]:
    """Run every (scenario, seed) and return the rows in run order."""
    runs = list(spec.runs())
    tracing = spec.trace is not None
    if spec.workers > 1 and len(runs) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(_run_one, runs, [tracing] * len(runs)))
    else:
        results = [_run_one(scenario, tracing) for scenario in runs]
    if tracing:
        with open(spec.trace, "w") as f:
            for _, text in results:
                f.write(text)
    rows = [row for row, _ in results]
    log.info("%d runs finished", len(rows))
    return rows


@public
def write_rows(rows, stream):

    writer = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: "" if value is None else value for key, value in row.items()})


@public
def verify_tree_to_path(max_n: int) -> int:
    """Number of labelled trees up to ``max_n`` vertices with a bad path."""
    failures = 0
    for tree in enumerate_labelled_trees(max_n):
        if not oracle_is_valid_output(tree, tree_to_path(tree)):
            failures += 1
            log.error("bad path for %r", tree)
    return failures


@public
def main(argv=None):

    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(levelname)s %(name)s: %(message)s")
    if args.verify_ttp is not None:
        try:
            failures = verify_tree_to_path(args.verify_ttp)
        except ValueError as exc:
            parser.error(str(exc))
        print("tree-to-path: {} failures".format(failures))
        return 1 if failures else 0
    try:
        spec = ExperimentSpec([_scenario_from(args)], reps=args.reps, out=args.out,
                              trace=args.trace, workers=args.workers)
    except ScenarioError as exc:
        parser.error(str(exc))

    rows = run_experiments(spec)
    if spec.out is None:
        write_rows(rows, sys.stdout)
    else:
        with open(spec.out, "w", newline="") as f:
            write_rows(rows, f)
    bad = sum(1 for row in rows
              if row["connectivity_violations"] or row["sybil_violations"])
    if bad:
        log.error("%d of %d runs recorded violations", bad, len(rows))
    return 1 if bad else 0
