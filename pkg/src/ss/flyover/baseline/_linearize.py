# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Classic linearization with delegate-after-reversal.

A node keeps its closest smaller and closest larger neighbor.  Every other
left neighbor is handed to its successor in sorted order (and every other
right neighbor to its predecessor) by asking the delegated node to
introduce itself: the edge is reversed for one round, then re-pointed.
"""

from typing import Iterable, List, Set, Tuple

from public import public

from ..net import NodeId, Message, Base, Rev

Send = Tuple[NodeId, Message]


@public
def flush(self_id: NodeId, mem: Set[NodeId], ids: Iterable[NodeId]) -> Set[NodeId]:
    """Base memory after moving ``ids`` into it."""
    return (set(mem) | set(ids)) - {self_id}


@public
def dr_delegate(self_id: NodeId, targets, recipient: NodeId) -> List[Send]:
    """Delegate the ids ``targets`` to ``recipient``.

    The first target receives Rev(recipient, Base(targets)) and forwards the
    whole set; the others only introduce themselves.  Targets equal to the
    recipient or to the delegating node are suppressed.
    """
    targets = [w for w in targets if w != recipient and w != self_id]
    if not targets:
        return []
    sends = [(targets[0], Rev(recipient, Base(frozenset(targets)) if len(targets) > 1 else None))]
    sends.extend((w, Rev(recipient)) for w in targets[1:])
    return sends


@public
def handle_reversals(self_id: NodeId, delivered) -> List[Send]:
    """Answer delivered Rev messages (second round of a delegation)."""
    sends = []
    for msg in delivered:
        if not isinstance(msg, Rev) or msg.dest == self_id:
            continue
        if msg.inner is None:
            sends.append((msg.dest, Base(frozenset((self_id,)))))
        else:
            sends.append((msg.dest, msg.inner))
    return sends


@public
def base_step(self_id: NodeId, mem: Set[NodeId], delivered=()) -> Tuple[Set[NodeId], List[Send]]:
    """One round of linearization; returns the retained memory and the sends."""
    neighbors = set(mem)
    for msg in delivered:
        if isinstance(msg, Base):
            neighbors.update(msg.members)
    neighbors.discard(self_id)

    sends = handle_reversals(self_id, delivered)
    left  = sorted(v for v in neighbors if v < self_id)
    right = sorted((v for v in neighbors if v > self_id), reverse=True)
    for side in (left, right):
        for farther, nearer in zip(side, side[1:]):
            sends.extend(dr_delegate(self_id, [farther], nearer))

    retained = set()
    if left:
        retained.add(left[-1])
    if right:
        retained.add(right[-1])
    return retained, sends


@public
def self_introduce(self_id: NodeId, mem: Set[NodeId]) -> List[Send]:
    """Keep-alive: introduce oneself to the retained neighbors."""
    me = Base(frozenset((self_id,)))
    return [(v, me) for v in sorted(mem) if v != self_id]
