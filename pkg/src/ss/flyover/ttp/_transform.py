# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Sequential Tree-to-Path.

Each non-root vertex v with parent p adds one directed edge:

    label(v) == 1:  (RSib(v) or p)  ->  (max C(v) or v)
    label(v) == 0:  (min C(v) or v) ->  (LSib(v) or p)

where RSib/LSib are the nearest right/left siblings in id order.
"""

from typing import List

from public import public

from ..net import NodeId, TreeToPathError
from ._tree import LabelledRootedTree


@public
def path_edges(tree: LabelledRootedTree):
    """The directed edges the transform adds, one per non-root vertex."""
    edges = []
    for v in sorted(tree.parent):
        p = tree.parent[v]
        lsib, rsib = tree.siblings(v)
        kids = tree.children(v)
        if tree.label[v] == 1:
            edges.append((p if rsib is None else rsib, kids[-1] if kids else v))
        else:
            edges.append((kids[0] if kids else v, p if lsib is None else lsib))
    return edges


@public
def tree_to_path(tree: LabelledRootedTree) -> List[NodeId]:
    """Directed Hamiltonian path over the tree's vertices, Beg first."""
    if len(tree) < 2:
        raise TreeToPathError("a tree of at least 2 vertices is required")
    if not tree.labels_consistent():
        raise TreeToPathError("labels do not follow depth parity", tree.root)

    succ = {}
    has_pred = set()
    for a, b in path_edges(tree):
        if a in succ or b in has_pred:
            raise TreeToPathError("vertex gets a second path edge", a if a in succ else b)
        succ[a] = b
        has_pred.add(b)
    starts = [v for v in tree.vertices if v not in has_pred]
    if len(starts) != 1:
        raise TreeToPathError("expected exactly one path start, got {}".format(len(starts)))
    path = [starts[0]]
    while path[-1] in succ:
        path.append(succ[path[-1]])
        if len(path) > len(tree):
            raise TreeToPathError("edges close a cycle", path[-1])
    if len(path) != len(tree):
        raise TreeToPathError("path covers {} of {} vertices".format(len(path), len(tree)))
    return path


@public
def oracle_is_valid_output(tree: LabelledRootedTree, path) -> bool:
    """Hamiltonian over the vertex set with the endpoints the root label dictates."""
    path = list(path)
    vertices = tree.vertices
    if len(path) != len(vertices) or sorted(path) != vertices:
        return False
    kids = tree.children(tree.root)
    if not kids:
        return False
    if tree.label[tree.root] == 0:
        return path[0] == tree.root and path[-1] == kids[0]
    return path[0] == kids[-1] and path[-1] == tree.root


@public
def oracle_path_is_local(tree: LabelledRootedTree, path, hops: int = 3) -> bool:
    """Every path edge joins vertices at tree distance at most ``hops``."""
    for a, b in zip(path, path[1:]):
        if _tree_distance(tree, a, b) > hops:
            return False
    return True


def _tree_distance(tree, a, b):

    da, db = tree.depth(a), tree.depth(b)
    steps = 0
    while da > db:
        a, da, steps = tree.parent[a], da - 1, steps + 1
    while db > da:
        b, db, steps = tree.parent[b], db - 1, steps + 1
    while a != b:
        a, b, steps = tree.parent[a], tree.parent[b], steps + 2
    return steps
