# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Adversarial supervisors."""

import dataclasses
import logging
import random

import networkx as nx
from public import public

from ..net import Strategy, SupervisorMode, Advice, AdviceMessage, DisconnectedSnapshotError
from ._advice import Snapshot, compute_advice, bfs_parents
from ._honest import interact, honest_step

log = logging.getLogger(__name__)


def _rng(seed, round):
    return random.Random(seed * 1000003 + round)


def _advise_group(snapshot, group):

    group = sorted(group)
    if len(group) == 1:
        return {group[0]: AdviceMessage(vID=1, c_par=None, c_dist=0, par=None, dist=0)}
    return compute_advice(Snapshot(snapshot.graph.subgraph(group)), group[0])


def _split(snapshot, root, rng):

    parent = bfs_parents(snapshot.graph, root)
    tree = nx.DiGraph((p, c) for c, p in parent.items())
    tree.add_nodes_from(snapshot.nodes)
    n = len(snapshot.nodes)
    best = min(parent, key=lambda c: (abs(2 * (len(nx.descendants(tree, c)) + 1) - n), c))
    lower = {best} | nx.descendants(tree, best)
    upper = set(snapshot.nodes) - lower
    advice = _advise_group(snapshot, upper)
    advice.update(_advise_group(snapshot, lower))
    return advice


def _sybil(advice, root, rng):

    others = sorted(u for u in advice if u != root)
    fake = max(advice) + 1
    for k, u in enumerate(sorted(rng.sample(others, max(1, len(others) // 2)))):
        advice[u] = dataclasses.replace(advice[u], par=fake + k)
    return advice


def _wrong_vids(advice, root, rng):

    others = sorted(u for u in advice if u != root)
    if len(others) >= 2 and rng.random() < 0.5:
        x, y = rng.sample(others, 2)
        advice[x] = dataclasses.replace(advice[x], vID=advice[y].vID)
    else:
        x = rng.choice(others)
        advice[x] = dataclasses.replace(advice[x], vID=advice[x].vID + len(advice))
    return advice


def _cycle(advice, root, rng):

    others = sorted(u for u in advice if u != root)
    ring = sorted(rng.sample(others, min(len(others), max(2, len(others) // 4))))
    vids = [advice[u].vID for u in ring]
    for k, u in enumerate(ring):
        advice[u] = dataclasses.replace(advice[u], c_par=vids[(k + 1) % len(ring)])
    return advice


def _partial(advice, root, rng, subset=None):

    if subset is None:
        nodes = sorted(advice)
        subset = rng.sample(nodes, rng.randint(1, len(nodes) - 1))
    return {u: advice[u] for u in sorted(subset) if u in advice}


@public
def malicious_advice(strategy: Strategy, snapshot: Snapshot, rng, subset=None,
                     stale_snapshot=None):
    """Advice map a malicious supervisor sends for ``snapshot``."""
    if strategy is Strategy.STALE:
        old = snapshot if stale_snapshot is None else stale_snapshot
        return compute_advice(old, min(old.nodes))
    root = min(snapshot.nodes)
    if strategy is Strategy.SPLIT:
        return _split(snapshot, root, rng)
    advice = compute_advice(snapshot, root)
    if strategy is Strategy.SYBIL:
        return _sybil(advice, root, rng)
    if strategy is Strategy.WRONG_VIDS:
        return _wrong_vids(advice, root, rng)
    if strategy is Strategy.CYCLE:
        return _cycle(advice, root, rng)
    if strategy is Strategy.PARTIAL:
        return _partial(advice, root, rng, subset)
    raise ValueError("Unknown strategy {!r}".format(strategy))


@public
def malicious_step(strategy: Strategy, round, membership, snapshot=None, seed=0,
                   subset=None, stale_snapshot=None):
    """Advice messages of one attack; the snapshot defaults to the sorted path."""
    membership = sorted(membership)
    if len(membership) < 2 or subset is not None and not subset:
        return []
    if snapshot is None:
        snapshot = Snapshot(nx.path_graph(membership))
    advice = malicious_advice(strategy, snapshot, _rng(seed, round), subset, stale_snapshot)
    return [(u, Advice(advice[u])) for u in sorted(advice)]


def _malicious_advise(state, snapshot, round):

    if state.strategy is Strategy.STALE and state.stale_snapshot is None:
        log.info("round %d: keeping snapshot for a later stale attack", round)
        state.stale_snapshot = snapshot
        return None
    state.attacks_left -= 1
    try:
        return malicious_advice(state.strategy, snapshot, _rng(state.seed, round),
                                stale_snapshot=state.stale_snapshot)
    except DisconnectedSnapshotError:
        return {}


@public
def supervisor_step(state, inbound, attentive_report, round=0):
    """Dispatch one supervisor round by mode."""
    if state.mode is SupervisorMode.MALICIOUS:
        return interact(state, inbound, attentive_report, round, _malicious_advise)
    return honest_step(state, inbound, attentive_report, round)
