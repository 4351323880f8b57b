# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from typing import Dict, List, Optional

from public import public

from ._constants import NodeId


@public
class FlyoverVars(object):
    """Flyover registers of one node.

    ``L[i-1]`` and ``R[i-1]`` hold the level-i left and right shortcuts.
    """

    __slots__ = ('owner', 'L', 'R', 'vID', 'flyID', 'exit', 'c_par', 'c_dist', 'c_ids')

    def __init__(self, owner: NodeId, L=(), R=(), vID=0, flyID=None, exit=False,
                 c_par=0, c_dist=-1, c_ids=()):

        super(FlyoverVars, self).__init__()
        self.owner  = owner
        self.L      = list(L)
        self.R      = list(R)
        self.vID    = vID
        self.flyID  = owner if flyID is None else flyID
        self.exit   = bool(exit)
        self.c_par  = c_par
        self.c_dist = c_dist
        self.c_ids  = set(c_ids)

    @property
    def S(self):
        """All shortcut ids of both sides."""
        return set(self.L) | set(self.R)

    @property
    def in_flyover(self):
        return bool(self.L or self.R)

    def reset(self):

        self.L      = []
        self.R      = []
        self.vID    = 0
        self.flyID  = self.owner
        self.exit   = False
        self.c_par  = 0
        self.c_dist = -1
        self.c_ids  = set()

    def is_default(self):
        return (not self.L and not self.R and self.vID == 0 and self.flyID == self.owner
                and not self.exit and self.c_par == 0 and self.c_dist == -1 and not self.c_ids)

    def address_ids(self):
        """Ids stored in the flyover address variables (flyID only when foreign)."""
        ids = set(self.L) | set(self.R) | self.c_ids
        if self.flyID != self.owner:
            ids.add(self.flyID)
        return ids

    def copy(self):
        return FlyoverVars(self.owner, self.L, self.R, self.vID, self.flyID, self.exit,
                           self.c_par, self.c_dist, self.c_ids)

    def __eq__(self, other):
        if not isinstance(other, FlyoverVars):
            return NotImplemented
        return all(getattr(self, name) == getattr(other, name) for name in self.__slots__)

    __hash__ = None

    def __repr__(self):
        return ("FlyoverVars(owner={0.owner!r}, L={0.L!r}, R={0.R!r}, vID={0.vID}, "
                "flyID={0.flyID!r}, exit={0.exit}, c_par={0.c_par}, c_dist={0.c_dist}, "
                "c_ids={1!r})".format(self, sorted(self.c_ids)))


@public
class AdviceVars(object):

    __slots__ = ('t', 'dist')

    def __init__(self, t=0, dist=-1):

        super(AdviceVars, self).__init__()
        self.t    = t
        self.dist = dist

    def copy(self):
        return AdviceVars(self.t, self.dist)

    def __eq__(self, other):
        if not isinstance(other, AdviceVars):
            return NotImplemented
        return self.t == other.t and self.dist == other.dist

    __hash__ = None

    def __repr__(self):
        return "AdviceVars(t={0.t}, dist={0.dist})".format(self)


@public
class NodeState(object):
    """A node's complete register plus its inbound channel."""

    __slots__ = ('id', 'fly', 'adv', 'base_mem', 'channel')

    def __init__(self, id: NodeId, fly: Optional[FlyoverVars] = None,
                 adv: Optional[AdviceVars] = None, base_mem=(), channel=()):

        super(NodeState, self).__init__()
        self.id       = id
        self.fly      = FlyoverVars(id) if fly is None else fly
        self.adv      = AdviceVars() if adv is None else adv
        self.base_mem = set(base_mem)
        self.channel  = list(channel)

    @property
    def attentive(self):
        """Ready for advice: not in a flyover, exit clear and timer zero."""
        return not self.fly.in_flyover and not self.fly.exit and self.adv.t == 0

    @property
    def dual_state(self):
        return self.fly.in_flyover

    def address_ids(self):
        return self.fly.address_ids() | self.base_mem

    def channel_ids(self):
        ids = set()
        for msg in self.channel:
            ids.update(msg.ids())
        return ids

    def copy(self):
        return NodeState(self.id, self.fly.copy(), self.adv.copy(),
                         self.base_mem, self.channel)

    def __eq__(self, other):
        if not isinstance(other, NodeState):
            return NotImplemented
        return (self.id == other.id and self.fly == other.fly and self.adv == other.adv
                and self.base_mem == other.base_mem
                and sorted(msg.sort_key() for msg in self.channel) ==
                    sorted(msg.sort_key() for msg in other.channel))

    __hash__ = None

    def __repr__(self):
        return ("NodeState(id={0.id!r}, fly={0.fly!r}, adv={0.adv!r}, base_mem={1!r}, "
                "channel=<{2} messages>)".format(self, sorted(self.base_mem), len(self.channel)))


@public
class Configuration(object):
    """All node states, the supervisor state and the round counter."""

    __slots__ = ('nodes', 'supervisor', 'round')

    def __init__(self, nodes: Dict[NodeId, NodeState], supervisor=None, round: int = 0):

        super(Configuration, self).__init__()
        self.nodes      = {node_id: nodes[node_id] for node_id in sorted(nodes)}
        self.supervisor = supervisor
        self.round      = round

    @property
    def ids(self) -> List[NodeId]:
        return list(self.nodes)

    @property
    def n(self):
        return len(self.nodes)

    def copy(self):
        return Configuration({node_id: state.copy() for node_id, state in self.nodes.items()},
                             None if self.supervisor is None else self.supervisor.copy(),
                             self.round)

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return (self.round == other.round and self.nodes == other.nodes
                and self.supervisor == other.supervisor)

    __hash__ = None

    def __repr__(self):
        return "Configuration(n={}, round={})".format(self.n, self.round)
