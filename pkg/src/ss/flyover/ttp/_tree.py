# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from typing import Dict, List

import networkx as nx
from public import public

from ..net import NodeId, NotATreeError


@public
class LabelledRootedTree(object):
    """Rooted tree with 0/1 vertex labels; child sets are ordered by id."""

    __slots__ = ('root', 'parent', 'label', '_children', '_depth')

    def __init__(self, root: NodeId, parent: Dict[NodeId, NodeId], label: Dict[NodeId, int]):

        super(LabelledRootedTree, self).__init__()
        self.root   = root
        self.parent = dict(parent)
        self.label  = dict(label)
        self._children = {v: [] for v in self.label}
        for v, p in self.parent.items():
            self._children.setdefault(p, []).append(v)
            self._children.setdefault(v, [])
        for kids in self._children.values():
            kids.sort()
        self._depth = None

    @classmethod
    def from_parents(cls, root, parent, root_label=0):
        """Label a tree given as a child -> parent map."""
        depth = _depths(root, parent)
        label = {v: (root_label + d) % 2 for v, d in depth.items()}
        return cls(root, parent, label)

    @property
    def vertices(self) -> List[NodeId]:
        return sorted(self.label)

    def __len__(self):
        return len(self.label)

    def children(self, v) -> List[NodeId]:
        return self._children.get(v, [])

    def depth(self, v) -> int:
        if self._depth is None:
            self._depth = _depths(self.root, self.parent)
        return self._depth[v]

    def siblings(self, v):
        """(left sibling, right sibling) of v in its parent's child order."""
        kids = self._children[self.parent[v]]
        k = kids.index(v)
        return (kids[k - 1] if k > 0 else None,
                kids[k + 1] if k + 1 < len(kids) else None)

    def labels_consistent(self):
        root_label = self.label.get(self.root)
        if root_label not in (0, 1):
            return False
        try:
            depth = _depths(self.root, self.parent)
        except NotATreeError:
            return False
        if set(depth) != set(self.label):
            return False
        return all(self.label[v] == (root_label + d) % 2 for v, d in depth.items())

    def to_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.label)
        graph.add_edges_from(self.parent.items())
        return graph

    def __repr__(self):
        return "LabelledRootedTree(root={!r}, parent={!r}, root_label={!r})".format(
               self.root, dict(sorted(self.parent.items())), self.label.get(self.root))


def _depths(root, parent):

    graph = nx.DiGraph((p, v) for v, p in parent.items())
    graph.add_node(root)
    if graph.in_degree(root) or not nx.is_arborescence(graph):
        raise NotATreeError(graph.number_of_nodes(), graph.number_of_edges())
    return nx.single_source_shortest_path_length(graph, root)


@public
def label_tree(tree, root: NodeId, root_label: int = 0) -> LabelledRootedTree:
    """Root and label an undirected tree given as a networkx graph."""
    if root_label not in (0, 1):
        raise ValueError("root_label must be 0 or 1, got {!r}".format(root_label))
    if not isinstance(tree, nx.Graph):
        tree = nx.Graph(tree)
    if root not in tree:
        raise ValueError("root {!r} is not a vertex of the tree".format(root))
    if not nx.is_tree(tree):
        raise NotATreeError(tree.number_of_nodes(), tree.number_of_edges())
    parent = {child: par for par, child in nx.bfs_edges(tree, root)}
    return LabelledRootedTree.from_parents(root, parent, root_label)
