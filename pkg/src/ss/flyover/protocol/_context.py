# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from typing import List, Set, Tuple

from public import public

from ..net import NodeId, Message, NodeState, sort_messages
from ..baseline import flush as base_flush


@public
class RoundOutput(object):
    """What one node emitted in one round."""

    __slots__ = ('outbound', 'flushed', 'rejected', 'left_flyover')

    def __init__(self, outbound=(), flushed=(), rejected=False, left_flyover=False):

        super(RoundOutput, self).__init__()
        self.outbound = list(outbound)   # (recipient, message); recipient may be SUPERVISOR
        self.flushed  = set(flushed)
        self.rejected = rejected         # RejectFlyover executed
        self.left_flyover = left_flyover  # ... while S was non-empty

    def __repr__(self):
        return "RoundOutput(<{} sends>, flushed={!r}, rejected={})".format(
               len(self.outbound), sorted(self.flushed), self.rejected)


@public
class RoundContext(object):
    """Working state of one node during one round."""

    __slots__ = ('state', 'delivered', 'output', '_by_type')

    def __init__(self, state: NodeState, delivered):

        super(RoundContext, self).__init__()
        self.state     = state
        self.delivered = sort_messages(delivered)
        self.output    = RoundOutput()
        self._by_type  = {}
        for msg in self.delivered:
            self._by_type.setdefault(type(msg), []).append(msg)

    id  = property(lambda self: self.state.id)
    fly = property(lambda self: self.state.fly)
    adv = property(lambda self: self.state.adv)

    def received(self, *types) -> List[Message]:
        """Delivered messages of the given types, in processing order."""
        if len(types) == 1:
            return list(self._by_type.get(types[0], ()))
        return [msg for msg in self.delivered if isinstance(msg, types)]

    def has(self, mtype) -> bool:
        return bool(self._by_type.get(mtype))

    def send(self, recipient: NodeId, message: Message):
        if recipient is None:
            return
        self.output.outbound.append((recipient, message))

    def send_all(self, sends: List[Tuple[NodeId, Message]]):
        for recipient, message in sends:
            self.send(recipient, message)

    def flush(self, ids):
        ids = {v for v in ids if v is not None and v != self.id}
        if ids:
            self.state.base_mem = base_flush(self.id, self.state.base_mem, ids)
            self.output.flushed |= ids

    def memory_ids(self) -> Set[NodeId]:
        """Address variables without flyID."""
        fly = self.fly
        return (set(fly.L) | set(fly.R) | fly.c_ids | self.state.base_mem) - {self.id}

    def channel_ids(self) -> Set[NodeId]:
        """Ids carried by delivered node messages."""
        ids = set()
        for msg in self.delivered:
            if not msg.from_supervisor:
                ids.update(msg.ids())
        ids.discard(self.id)
        return ids
