# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from typing import Optional, Sequence

from public import public

from ..net import NodeId, NodeState, FlyoverVars, Configuration
from ..supervisor import sorted_path_tree
from ..protocol import RoundContext, DEFAULT_RULES

_TEST_RULES = DEFAULT_RULES.subset("TestFlyoverConstruction", "TestConnCertificate",
                                   "TestFlyoverMetadata")


def _shortcuts(chain, i, levels, step):

    ids = []
    for j in range(levels):
        k = i + step * 2 ** j
        if not 0 <= k < len(chain):
            break
        ids.append(chain[k])
    return ids


def _prime(nodes):

    outbound = []
    for state in nodes.values():
        ctx = RoundContext(state.copy(), ())
        _TEST_RULES.run(ctx)
        outbound.extend(ctx.output.outbound)
    for recipient, msg in outbound:
        if recipient in nodes:
            nodes[recipient].channel.append(msg)


@public
def build_backbone_configuration(ids: Sequence[NodeId], levels: int = 1,
                                 vids: Optional[Sequence[int]] = None,
                                 flyid: Optional[NodeId] = None,
                                 certified: bool = False,
                                 exit_at: Optional[NodeId] = None,
                                 base_path: bool = True,
                                 supervisor=None,
                                 primed: bool = False) -> Configuration:
    """A configuration whose nodes form one backbone in the given order.

    Every node gets its first ``levels`` shortcut levels on both sides,
    ``vids`` (positions by default) and ``flyid`` (the left end by default).
    c_par and c_dist always follow the sorted path rooted at the left end;
    ``certified`` also fills c_ids with the sorted neighbors and
    ``base_path`` puts them into the base memories. A ``primed`` backbone
    already ran one round: its channels hold the test messages of that round.
    """
    ids = list(ids)
    if len(set(ids)) != len(ids):
        raise ValueError("Backbone ids must be distinct, got {!r}".format(ids))
    if len(ids) < 2:
        raise ValueError("A backbone needs at least 2 nodes, got {}".format(len(ids)))
    if levels < 1:
        raise ValueError("levels must be at least 1, got {}".format(levels))
    if vids is None:
        vids = range(1, len(ids) + 1)
    vids = list(vids)
    if len(vids) != len(ids):
        raise ValueError("Expected {} vIDs, got {}".format(len(ids), len(vids)))
    flyid = ids[0] if flyid is None else flyid

    position = {u: i for i, u in enumerate(ids, 1)}
    parent, depth = sorted_path_tree(ids, ids[0])
    ordered = sorted(ids)
    nodes = {}
    for i, u in enumerate(ids):
        fly = FlyoverVars(u, L=_shortcuts(ids, i, levels, -1), R=_shortcuts(ids, i, levels, 1),
                          vID=vids[i], flyID=flyid, exit=(u == exit_at))
        k = ordered.index(u)
        neighbors = set(ordered[max(k - 1, 0):k]) | set(ordered[k + 1:k + 2])
        fly.c_par  = 0 if u == ids[0] else position[parent[u]]
        fly.c_dist = depth[u]
        if certified:
            fly.c_ids = set(neighbors)
        nodes[u] = NodeState(u, fly, base_mem=neighbors if base_path else ())
    if primed:
        _prime(nodes)
    return Configuration(nodes, supervisor, 0)
