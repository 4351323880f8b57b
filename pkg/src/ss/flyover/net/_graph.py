# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import networkx as nx
from public import public

from ._state import Configuration

EXPLICIT = "explicit"
IMPLICIT = "implicit"
public(EXPLICIT = EXPLICIT)
public(IMPLICIT = IMPLICIT)


@public
def extract_graph(config: Configuration) -> nx.DiGraph:
    """Communication graph of a configuration.

    Edge (u, v) carries ``explicit=True`` when v sits in an address variable
    of u and ``implicit=True`` when v appears in a payload of a message in
    u's channel; ``kind`` is "explicit" whenever the former holds.
    Ids outside the configuration and self-loops are left out.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(config.nodes)
    for u, state in config.nodes.items():
        for v in state.address_ids():
            if v != u and v in config.nodes:
                graph.add_edge(u, v, explicit=True, implicit=False, kind=EXPLICIT)
        for v in state.channel_ids():
            if v == u or v not in config.nodes:
                continue
            if graph.has_edge(u, v):
                graph.edges[u, v]["implicit"] = True
            else:
                graph.add_edge(u, v, explicit=False, implicit=True, kind=IMPLICIT)
    return graph


@public
def explicit_edges(graph: nx.DiGraph):
    return {(u, v) for u, v, explicit in graph.edges(data="explicit") if explicit}


@public
def is_weakly_connected(graph) -> bool:

    if graph.number_of_nodes() == 0:
        raise ValueError("Connectivity of an empty graph is undefined")
    if graph.is_directed():
        return nx.is_weakly_connected(graph)
    return nx.is_connected(graph)
