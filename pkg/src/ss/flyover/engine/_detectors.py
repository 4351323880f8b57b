# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Structure detectors over the dual-state nodes of a configuration."""

import math
from typing import Dict, List, Tuple

import networkx as nx
from public import public

from ..__config__ import config as _config
from ..net import Configuration
from ..supervisor import sorted_path_tree

C_EXTRA = _config.getint("C_EXTRA", 2)


@public
class BackboneFlags(object):

    __slots__ = ('winged', 'flyover', 'correctly_configured')

    def __init__(self, winged=False, flyover=False, correctly_configured=False):

        super(BackboneFlags, self).__init__()
        self.winged = winged
        self.flyover = flyover
        self.correctly_configured = correctly_configured

    def __eq__(self, other):
        if not isinstance(other, BackboneFlags):
            return NotImplemented
        return (self.winged, self.flyover, self.correctly_configured) == \
               (other.winged, other.flyover, other.correctly_configured)

    __hash__ = None

    def __repr__(self):
        return ("BackboneFlags(winged={0.winged}, flyover={0.flyover}, "
                "correctly_configured={0.correctly_configured})".format(self))


@public
class StructureReport(object):
    """Partition of the dual-state nodes.

    Backbones and ouroboroi are tuples in level-1 order, left end first.
    """

    __slots__ = ('backbones', 'ouroboroi', 'lost', 'flags')

    def __init__(self, backbones=(), ouroboroi=(), lost=(), flags=None):

        super(StructureReport, self).__init__()
        self.backbones: List[Tuple] = list(backbones)
        self.ouroboroi: List[Tuple] = list(ouroboroi)
        self.lost = tuple(lost)
        self.flags: Dict[Tuple, BackboneFlags] = {} if flags is None else flags

    @property
    def is_empty(self):
        return not (self.backbones or self.ouroboroi or self.lost)

    def classified(self):
        """Every classified node, with repetitions if the partition were broken."""
        nodes = list(self.lost)
        for group in self.backbones + self.ouroboroi:
            nodes.extend(group)
        return nodes

    def summary(self):
        return {"backbones": [len(b) for b in self.backbones],
                "ouroboroi": [len(o) for o in self.ouroboroi],
                "lost": len(self.lost),
                "flyovers": sum(1 for f in self.flags.values() if f.flyover),
                "correct": sum(1 for f in self.flags.values() if f.correctly_configured)}

    def __repr__(self):
        return "StructureReport({})".format(self.summary())


def _is_flyover(nodes, chain):

    size = len(chain)
    for i in range(size - 1):
        if nodes[chain[i + 1]].fly.vID != nodes[chain[i]].fly.vID + 1:
            return False
    for i in range(size - 1):  # 0-based position i is v_(i+1)
        left = nodes[chain[i]].fly
        for j in range(1, int(math.log2(size - 1 - i)) + 2):
            k = i + 2 ** (j - 1)
            if k >= size:
                return False
            right = nodes[chain[k]].fly
            if (len(left.R) < j or left.R[j - 1] != chain[k] or
                    len(right.L) < j or right.L[j - 1] != chain[i]):
                return False
    return True


def _is_correctly_configured(nodes, chain):

    root = chain[0]
    position = {u: i for i, u in enumerate(chain, 1)}
    parent, depth = sorted_path_tree(chain, root)
    ids = sorted(chain)
    for u in chain:
        fly = nodes[u].fly
        if fly.vID != position[u] or fly.flyID != root:
            return False
        if fly.c_dist != depth[u]:
            return False
        if u != root and fly.c_par != position[parent[u]]:
            return False
        k = ids.index(u)
        sorted_neighbors = set(ids[max(k - 1, 0):k]) | set(ids[k + 1:k + 2])
        if not sorted_neighbors <= fly.c_ids:
            return False
    return True


@public
def classify_structures(config: Configuration) -> StructureReport:
    """Split dual-state nodes into backbones, ouroboroi and lost nodes."""
    nodes = config.nodes
    dual = [u for u, state in nodes.items() if state.fly.in_flyover]
    dual_set = set(dual)
    right_of, left_of = {}, {}
    for u in dual:
        fly = nodes[u].fly
        if fly.R and fly.R[0] in dual_set:
            v = fly.R[0]
            other = nodes[v].fly
            if other.L and other.L[0] == u:
                right_of[u] = v
                left_of[v] = u

    report = StructureReport()
    seen = set()
    chains = []
    for u in dual:
        if u in left_of or u in seen:
            continue
        chain = [u]
        seen.add(u)
        while chain[-1] in right_of and right_of[chain[-1]] not in seen:
            chain.append(right_of[chain[-1]])
            seen.add(chain[-1])
        chains.append(tuple(chain))
    for u in dual:
        if u in seen:
            continue
        ring = [u]  # every node here has both mutual links
        seen.add(u)
        while right_of[ring[-1]] not in seen:
            ring.append(right_of[ring[-1]])
            seen.add(ring[-1])
        report.ouroboroi.append(tuple(ring))

    lost = []
    for chain in chains:
        if len(chain) < 2:
            lost.append(chain[0])
            continue
        members = set(chain)
        first, last = nodes[chain[0]].fly, nodes[chain[-1]].fly
        if (first.L and first.L[0] in members) or (last.R and last.R[0] in members):
            report.ouroboroi.append(chain)
            continue
        report.backbones.append(chain)
        report.flags[chain] = BackboneFlags(winged=bool(first.L or last.R),
                                            flyover=_is_flyover(nodes, chain),
                                            correctly_configured=_is_correctly_configured(nodes, chain))
    report.lost = tuple(sorted(lost))
    return report


@public
def precarious(config: Configuration, report: StructureReport = None):
    """Dual-state nodes that must eventually leave their flyover."""
    if report is None:
        report = classify_structures(config)
    nodes = set(report.lost)
    for ring in report.ouroboroi:
        nodes.update(ring)
    for chain in report.backbones:
        flags = report.flags[chain]
        if (len(chain) < config.n or flags.winged or not flags.correctly_configured
                or any(config.nodes[u].fly.exit for u in chain)):
            nodes.update(chain)
    return nodes


@public
def explicit_degree(state, members) -> int:
    """Distinct member ids in the node's address variables."""
    return len((state.address_ids() - {state.id}) & members)


@public
def is_legal(config: Configuration, c_extra: int = C_EXTRA) -> bool:
    """Sorted-path edges present and only logarithmically many extra edges."""
    ids = config.ids
    n = len(ids)
    members = set(ids)
    explicit = {u: config.nodes[u].address_ids() for u in ids}
    for a, b in zip(ids, ids[1:]):
        if b not in explicit[a] and a not in explicit[b]:
            return False
    slack = c_extra * (math.ceil(math.log2(n)) + 1) if n > 1 else 0
    for k, u in enumerate(ids):
        deg_star = (k > 0) + (k < n - 1)
        if explicit_degree(config.nodes[u], members) > deg_star + slack:
            return False
    return True


@public
def advised_graph(config: Configuration) -> nx.Graph:
    """Undirected graph of the certified parent relation.

    u and v are joined when v names u's vID as c_par and sits one level
    below u in certified distance.
    """
    graph = nx.Graph()
    graph.add_nodes_from(config.nodes)
    by_vid = {}
    for u, state in config.nodes.items():
        by_vid.setdefault(state.fly.vID, []).append(u)
    for v, state in config.nodes.items():
        for u in by_vid.get(state.fly.c_par, ()):
            if u != v and config.nodes[u].fly.c_dist == state.fly.c_dist - 1:
                graph.add_edge(u, v)
    return graph
