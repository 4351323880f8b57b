# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import itertools
from typing import Iterator

import networkx as nx
from public import public

from ._tree import LabelledRootedTree

MAX_ENUMERATION = 9


@public
def enumerate_labelled_trees_of_size(n: int) -> Iterator[LabelledRootedTree]:
    """All n**(n-1) rooted trees on vertices 1..n, each with root labels 0 and 1."""
    if n < 2:
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        tree = nx.from_prufer_sequence(list(seq))
        tree = nx.relabel_nodes(tree, {v: v + 1 for v in tree})
        for root in range(1, n + 1):
            parent = {child: p for p, child in nx.bfs_edges(tree, root)}
            for root_label in (0, 1):
                yield LabelledRootedTree.from_parents(root, parent, root_label)


@public
def enumerate_labelled_trees(max_n: int) -> Iterator[LabelledRootedTree]:
    """Every rooted labelled tree on 2..max_n vertices, both root labels."""
    if max_n > MAX_ENUMERATION:
        raise ValueError("max_n must not exceed {}, got {}".format(MAX_ENUMERATION, max_n))
    for n in range(2, max_n + 1):
        yield from enumerate_labelled_trees_of_size(n)
