# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Synchronous round loop and the instrumented run around it."""

import json
import logging
import random
from typing import Dict, List, Optional, Tuple

import networkx as nx
from public import public

from ..__config__ import config as _config
from ..net import (NodeId, Configuration, SUPERVISOR, Advice,
                   extract_graph, is_weakly_connected, state_digest, dump_configuration)
from ..protocol import node_round, RoundOutput
from ..supervisor import SupervisorState, supervisor_step
from ._scenario import Scenario, RunMetrics
from ._topology import generate_topology, initial_configuration
from ._faults import inject_faults
from ._detectors import classify_structures, is_legal, explicit_degree, precarious
from ._provenance import ProvenanceViolation, provenance_violations

log = logging.getLogger(__name__)

SETTLE_ROUNDS = _config.getint("SETTLE_ROUNDS", 2)


@public
class RoundRecord(object):
    """Everything one round delivered and produced, for instrumentation."""

    __slots__ = ('before', 'after', 'delivered', 'outputs', 'supervisor_sends', 'dropped')

    def __init__(self, before, after, delivered, outputs, supervisor_sends, dropped):

        super(RoundRecord, self).__init__()
        self.before           = before
        self.after            = after
        self.delivered: Dict[NodeId, list] = delivered
        self.outputs: Dict[NodeId, RoundOutput] = outputs
        self.supervisor_sends = supervisor_sends
        self.dropped          = dropped   # sends to ids outside the configuration

    @property
    def message_count(self):
        return (len(self.supervisor_sends) +
                sum(len(output.outbound) for output in self.outputs.values()))

    @property
    def advice_delivered(self):
        return any(isinstance(msg, Advice) for _, msg in self.supervisor_sends)


def _advance(config: Configuration, rules=None) -> Tuple[Configuration, RoundRecord]:

    round = config.round + 1
    delivered = {u: list(state.channel) for u, state in config.nodes.items()}

    supervisor, supervisor_sends = config.supervisor, []
    if supervisor is not None:
        attentive = {u: state.attentive for u, state in config.nodes.items()}
        supervisor, supervisor_sends = supervisor_step(supervisor, supervisor.inbox,
                                                       attentive, round)
        supervisor.inbox = []
        for u, msg in supervisor_sends:
            if u in delivered:
                delivered[u].append(msg)

    nodes, outputs = {}, {}
    for u in config.ids:
        nodes[u], outputs[u] = node_round(config.nodes[u], delivered[u], rules)

    dropped = 0
    for u in config.ids:
        for recipient, msg in outputs[u].outbound:
            if recipient is SUPERVISOR:
                if supervisor is not None:
                    supervisor.inbox.append(msg)
            elif recipient in nodes:
                nodes[recipient].channel.append(msg)
            else:
                dropped += 1

    after = Configuration(nodes, supervisor, round)
    return after, RoundRecord(config, after, delivered, outputs, supervisor_sends, dropped)


@public
def step_round(config: Configuration, rules=None) -> Configuration:
    """One synchronous round.

    The supervisor acts first on the previous round's reports and its
    messages are handled by the nodes in this same round; every node then
    handles its channel in id order and the sends are queued for the next
    round. Sends to unknown ids are lost.
    """
    return _advance(config, rules)[0]


def _pair_distance(graph, pair):

    try:
        return nx.shortest_path_length(graph.to_undirected(as_view=True), *pair)
    except nx.NetworkXNoPath:
        return None


@public
class Simulation(object):
    """A run of ``step_round`` with metrics and detectors attached."""

    __slots__ = ('config', 'rules', 'metrics', 'check_connectivity', 'check_provenance',
                 'watch', 'distances', 'provenance_events', 'trace',
                 '_legal_since', '_settled', '_owing', '_entered')

    def __init__(self, config: Configuration, rules=None, watch=(), trace=None,
                 check_connectivity: Optional[bool] = None,
                 check_provenance: Optional[bool] = None):

        super(Simulation, self).__init__()
        if check_connectivity is None:
            check_connectivity = _config.getboolean("CHECK_CONNECTIVITY", True)
        if check_provenance is None:
            check_provenance = _config.getboolean("CHECK_PROVENANCE", True)
        self.config             = config
        self.rules              = rules
        self.metrics            = RunMetrics()
        self.check_connectivity = check_connectivity
        self.check_provenance   = check_provenance
        self.watch              = [tuple(pair) for pair in watch]
        self.distances: Dict[tuple, List[Optional[int]]] = {pair: [] for pair in self.watch}
        self.provenance_events: List[ProvenanceViolation] = []
        self.trace              = trace
        self._settled           = 0
        self._owing             = {u for u, s in config.nodes.items() if s.dual_state}
        self._entered           = bool(self._owing)
        self._legal_since       = None
        self._observe(config, None)

    @property
    def round(self):
        return self.config.round

    def _quiet(self, config):
        """No timer running, no exit pending and no flyover left to dissolve or certify."""
        supervisor = config.supervisor
        if any(state.adv.t != 0 or state.fly.exit for state in config.nodes.values()):
            return False
        if precarious(config):
            return False
        if supervisor is None or supervisor.exhausted:
            return True
        return not any(state.attentive for state in config.nodes.values())

    def _observe(self, config, record: Optional[RoundRecord]):

        metrics = self.metrics
        graph = extract_graph(config)
        members = set(config.nodes)
        degree = max((explicit_degree(state, members) for state in config.nodes.values()),
                     default=0)
        metrics.max_degree_seen = max(metrics.max_degree_seen, degree)

        if self.check_connectivity and config.n and not is_weakly_connected(graph):
            metrics.connectivity_violations += 1
            log.error("round %d: communication graph is disconnected", config.round)

        for pair in self.watch:
            dist = _pair_distance(graph, pair)
            self.distances[pair].append(dist)
            initial = self.distances[pair][0]
            if dist is not None and initial is not None and dist * 2 ** config.round < initial:
                metrics.floor_violations += 1

        if record is not None:
            self._track_dual_state(record)
        legal = is_legal(config)
        if legal and self._legal_since is None:
            self._legal_since = config.round
        elif not legal:
            self._legal_since = None
        self._settled = self._settled + 1 if legal and self._quiet(config) else 0

        if record is not None:
            metrics.rounds_run = config.round
            metrics.messages_per_round.append(record.message_count)
            if record.advice_delivered and metrics.advice_round is None:
                metrics.advice_round = config.round
            if self.check_provenance:
                for u in config.ids:
                    bad = provenance_violations(record.before.nodes[u], record.delivered[u],
                                                config.nodes[u], record.outputs[u])
                    if bad:
                        self.provenance_events.append(
                            ProvenanceViolation(config.round, u, frozenset(bad)))
                        log.error("round %d: node %s used unlearned ids %s",
                                  config.round, u, sorted(bad))
                metrics.sybil_violations = len(self.provenance_events)
        if self.trace is not None:
            self._write_trace(config, record, legal)

    def _track_dual_state(self, record):

        for u, state in record.after.nodes.items():
            was = record.before.nodes[u].dual_state
            output = record.outputs[u]
            if output.rejected or (was and not state.dual_state):
                self._owing.discard(u)
            if state.dual_state and (not was or output.rejected):
                self._owing.add(u)
                self._entered = True
        if self._entered and not self._owing and self.metrics.rounds_to_all_reject is None:
            self.metrics.rounds_to_all_reject = record.after.round

    def _write_trace(self, config, record, legal):

        entry = {"round": config.round,
                 "messages": 0 if record is None else record.message_count,
                 "legal": legal,
                 "structures": classify_structures(config).summary(),
                 "digests": {str(u): state_digest(s) for u, s in config.nodes.items()}}
        self.trace.write(json.dumps(entry, sort_keys=True) + "\n")

    def step(self) -> Configuration:

        self.config, record = _advance(self.config, self.rules)
        self._observe(self.config, record)
        return self.config

    @property
    def settled(self):
        return self._settled >= SETTLE_ROUNDS

    def run(self, max_rounds: int) -> RunMetrics:
        """Step until legality has held quietly for a few rounds or time is up."""
        while self.config.round < max_rounds and not self.settled:
            self.step()
        metrics = self.metrics
        metrics.rounds_to_legal = self._legal_since
        if metrics.rounds_to_all_reject is None and not self._entered:
            metrics.rounds_to_all_reject = 0
        log.info("finished after %d rounds: legal since %s, %d messages",
                 self.config.round, metrics.rounds_to_legal, metrics.total_messages)
        return metrics

    def dump(self) -> str:
        return dump_configuration(self.config)


@public
def distance_floor_check(run: Simulation, pair) -> bool:
    """True when the watched pair never came closer than D / 2**t."""
    pair = tuple(pair)
    if pair not in run.distances:
        raise ValueError("Pair {!r} was not watched in this run".format(pair))
    history = run.distances[pair]
    if not history or history[0] is None:
        return True
    initial = history[0]
    return all(dist is None or dist * 2 ** t >= initial for t, dist in enumerate(history))


@public
def build_simulation(scenario: Scenario, trace=None, rules=None) -> Simulation:
    """Topology, faults and supervisor of a scenario, ready to run."""
    rng = random.Random(scenario.seed)
    graph = generate_topology(scenario.topology, scenario.n, rng, scenario.extra_edges)
    supervisor = SupervisorState(scenario.supervisor, membership=graph.nodes,
                                 strategy=scenario.strategy, attacks=scenario.attacks,
                                 seed=scenario.seed)
    config = inject_faults(initial_configuration(graph, supervisor),
                           scenario.corruption, scenario.seed)
    watch = [graph.graph["pair"]] if scenario.n > 1 else []
    return Simulation(config, rules=rules, watch=watch, trace=trace)


@public
def run_scenario(scenario: Scenario, trace=None, rules=None) -> RunMetrics:

    log.debug("running %r", scenario)
    return build_simulation(scenario, trace, rules).run(scenario.max_rounds)

