# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from public import public


@public
class FlyoverError(Exception):
    """Base class of the package's errors."""


@public
class NotATreeError(FlyoverError):

    def __init__(self, nodes, edges):
        self.nodes = nodes
        self.edges = edges

    def __str__(self):
        return ("Expected a tree, got a graph with {} nodes "
                "and {} edges".format(self.nodes, self.edges))


@public
class TreeToPathError(FlyoverError):

    def __init__(self, reason, vertex=None):
        self.reason = reason
        self.vertex = vertex

    def __str__(self):
        if self.vertex is None:
            return "Tree-to-Path contract violated: {}".format(self.reason)
        return "Tree-to-Path contract violated at {!r}: {}".format(self.vertex, self.reason)


@public
class DisconnectedSnapshotError(FlyoverError):

    def __init__(self, components):
        self.components = components

    def __str__(self):
        return "Snapshot is disconnected ({} components)".format(self.components)


@public
class ScenarioError(FlyoverError, ValueError):

    def __init__(self, field, value, expected):
        self.field    = field
        self.value    = value
        self.expected = expected

    def __str__(self):
        return "Invalid {} {!r}: expected {}".format(self.field, self.value, self.expected)
