# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import logging
from typing import Dict, Iterable

import networkx as nx
from public import public

from ..net import NodeId, AdviceMessage, DisconnectedSnapshotError
from ..ttp import LabelledRootedTree, tree_to_path

log = logging.getLogger(__name__)


@public
class Snapshot(object):
    """Undirected view of the reported neighborhoods."""

    __slots__ = ('graph',)

    def __init__(self, graph: nx.Graph):

        super(Snapshot, self).__init__()
        self.graph = nx.Graph(graph)

    @classmethod
    def from_neighborhoods(cls, neighborhoods: Dict[NodeId, Iterable[NodeId]], membership=None):
        """Union of reported neighborhoods; ids outside ``membership`` are dropped."""
        graph = nx.Graph()
        members = set(neighborhoods) if membership is None else set(membership)
        graph.add_nodes_from(members)
        for u, ids in neighborhoods.items():
            for v in ids:
                if u != v and u in members and v in members:
                    graph.add_edge(u, v)
        return cls(graph)

    @property
    def nodes(self):
        return sorted(self.graph.nodes)

    def is_connected(self):
        return self.graph.number_of_nodes() > 0 and nx.is_connected(self.graph)

    def __eq__(self, other):
        if not isinstance(other, Snapshot):
            return NotImplemented
        return (set(self.graph.nodes) == set(other.graph.nodes) and
                {frozenset(e) for e in self.graph.edges} == {frozenset(e) for e in other.graph.edges})

    __hash__ = None

    def __repr__(self):
        return "Snapshot(nodes={}, edges={})".format(self.graph.number_of_nodes(),
                                                     self.graph.number_of_edges())


@public
def bfs_parents(graph: nx.Graph, root: NodeId) -> Dict[NodeId, NodeId]:
    """BFS spanning tree as a child -> parent map, neighbors visited in id order."""
    return {child: par for par, child in nx.bfs_edges(graph, root, sort_neighbors=sorted)}


@public
def sorted_path_tree(ids, root):
    """Parent and depth of every id in the sorted path rooted at ``root``."""
    ids = sorted(ids)
    k = ids.index(root)
    parent, depth = {}, {root: 0}
    for i, u in enumerate(ids):
        if i < k:
            parent[u] = ids[i + 1]
        elif i > k:
            parent[u] = ids[i - 1]
        if u != root:
            depth[u] = abs(i - k)
    return parent, depth


@public
def compute_advice(snapshot: Snapshot, root: NodeId) -> Dict[NodeId, AdviceMessage]:
    """Advice for every node of a connected snapshot."""
    graph = snapshot.graph
    if root not in graph:
        raise ValueError("root {!r} is not in the snapshot".format(root))
    if graph.number_of_nodes() < 2:
        raise ValueError("advice needs at least 2 nodes, got {}".format(graph.number_of_nodes()))
    if not nx.is_connected(graph):
        raise DisconnectedSnapshotError(nx.number_connected_components(graph))

    parent = bfs_parents(graph, root)
    tree = LabelledRootedTree.from_parents(root, parent, root_label=0)
    vid = {u: position for position, u in enumerate(tree_to_path(tree), 1)}
    star_parent, star_depth = sorted_path_tree(graph.nodes, root)

    advice = {}
    for u in sorted(graph.nodes):
        if u == root:
            advice[u] = AdviceMessage(vID=vid[u], c_par=None, c_dist=0, par=None, dist=0)
        else:
            advice[u] = AdviceMessage(vID=vid[u], c_par=vid[star_parent[u]],
                                      c_dist=star_depth[u], par=parent[u],
                                      dist=tree.depth(u))
    return advice
