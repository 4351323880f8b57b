# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Weakly connected initial topologies over the ids 1..n."""

import itertools
import logging

import networkx as nx
from public import public

from ..net import Topology, NodeState, Configuration

log = logging.getLogger(__name__)


def _random_tree(nodes, rng):

    nodes = list(nodes)
    if len(nodes) <= 2:
        return nx.path_graph(nodes)
    seq = [rng.randrange(len(nodes)) for _ in range(len(nodes) - 2)]
    tree = nx.from_prufer_sequence(seq)
    return nx.relabel_nodes(tree, dict(enumerate(nodes)))


def _add_random_edges(graph, nodes, count, rng):

    nodes = sorted(nodes)
    room = len(nodes) * (len(nodes) - 1) // 2 - graph.subgraph(nodes).number_of_edges()
    count = min(count, room)
    attempts = 0
    while count > 0 and attempts < 50 * (count + 10):
        attempts += 1
        a, b = rng.sample(nodes, 2)
        if not graph.has_edge(a, b):
            graph.add_edge(a, b)
            count -= 1


def _random_connected(n, rng, extra_edges):

    graph = _random_tree(range(n), rng)
    _add_random_edges(graph, range(n), int(round(extra_edges * n)), rng)
    return graph


def _two_clusters(n, rng, extra_edges):

    half = n // 2
    if half == 0:
        return nx.path_graph(n)
    left, right = list(range(half)), list(range(half, n))
    graph = nx.union(_random_tree(left, rng), _random_tree(right, rng))
    _add_random_edges(graph, left, max(1, int(round(extra_edges * 2 * len(left)))), rng)
    _add_random_edges(graph, right, max(1, int(round(extra_edges * 2 * len(right)))), rng)
    graph.add_edge(rng.choice(left), rng.choice(right))
    return graph


def _far_pair(n):
    """Two cliques of n // 4 nodes joined by a path; the pair sits at the clique ends."""
    k = n // 4
    if k < 2:
        graph = nx.path_graph(n)
        graph.graph["pair"] = (0, n - 1)
        return graph
    graph = nx.complete_graph(range(k))
    graph.add_edges_from(itertools.combinations(range(n - k, n), 2))
    nx.add_path(graph, range(k - 1, n - k + 1))
    graph.graph["pair"] = (0, n - 1)
    return graph


@public
def generate_topology(kind: Topology, n: int, rng, extra_edges: float = 0.5) -> nx.DiGraph:
    """Random directed weakly connected graph; ``graph.graph["pair"]`` names
    the two nodes farthest apart."""
    if n < 1:
        raise ValueError("n must be at least 1, got {}".format(n))
    if kind is Topology.RANDOM_CONNECTED:
        graph = _random_connected(n, rng, extra_edges)
    elif kind is Topology.PATH:
        graph = nx.path_graph(n)
    elif kind is Topology.STAR:
        graph = nx.star_graph(n - 1)
    elif kind is Topology.TWO_CLUSTERS:
        graph = _two_clusters(n, rng, extra_edges)
    elif kind is Topology.FAR_PAIR:
        graph = _far_pair(n)
    else:
        raise ValueError("Unknown topology {!r}".format(kind))

    ids = list(range(1, n + 1))
    rng.shuffle(ids)
    mapping = dict(zip(range(n), ids))
    digraph = nx.DiGraph()
    digraph.add_nodes_from(ids)
    for a, b in sorted(graph.edges):
        a, b = mapping[a], mapping[b]
        coin = rng.random()
        if coin < 0.4:
            digraph.add_edge(a, b)
        elif coin < 0.8:
            digraph.add_edge(b, a)
        else:
            digraph.add_edges_from(((a, b), (b, a)))
    if "pair" in graph.graph:
        pair = tuple(mapping[v] for v in graph.graph["pair"])
    else:
        pair = farthest_pair(digraph)
    digraph.graph["pair"] = tuple(sorted(pair))
    log.debug("%s topology: n=%d, %d edges", kind.value, n, digraph.number_of_edges())
    return digraph


@public
def farthest_pair(graph):
    """Smallest-id pair realizing the diameter of the undirected graph."""
    undirected = graph.to_undirected(as_view=True)
    best, best_dist = None, -1
    for u, lengths in sorted(nx.all_pairs_shortest_path_length(undirected)):
        for v, d in sorted(lengths.items()):
            if u < v and d > best_dist:
                best, best_dist = (u, v), d
    return best if best is not None else (min(graph), min(graph))


@public
def initial_configuration(graph: nx.DiGraph, supervisor=None) -> Configuration:
    """Default node states whose base memories are the out-neighborhoods."""
    nodes = {u: NodeState(u, base_mem=graph.successors(u)) for u in graph.nodes}
    return Configuration(nodes, supervisor, 0)
