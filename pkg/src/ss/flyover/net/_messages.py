# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""The message catalog.

Every message is an immutable value.  Node ids a receiver may learn from a
message are exactly those returned by its ``ids()``; senders are anonymous
unless they put themselves in a payload field.
"""

import enum
import dataclasses
from dataclasses import dataclass
from typing import Optional, FrozenSet, Tuple

from public import public

from ._constants import NodeId, VerifiedKind


def _sortable(value):
    if value is None:
        return (0,)
    if isinstance(value, enum.Enum):
        return (1, value.value)
    if isinstance(value, (frozenset, set)):
        return (2, tuple(sorted(value)))
    if dataclasses.is_dataclass(value):
        return (3, type(value).__name__,
                tuple(_sortable(getattr(value, field.name))
                      for field in dataclasses.fields(value)))
    return (4, value)


@public
@dataclass(frozen=True)
class AdviceMessage:
    """Advice the supervisor hands to a single node."""

    vID:    int
    c_par:  Optional[int]
    c_dist: int
    par:    Optional[NodeId]
    dist:   int

    def is_well_formed(self) -> bool:

        if self.par is None:
            return self.dist == 0 and self.vID == 1 and self.c_dist == 0 and self.c_par is None
        return (self.dist > 0 and self.vID > 1 and self.c_dist > 0
                and self.c_par is not None and self.c_par >= 1)


@public
@dataclass(frozen=True)
class Message:

    @property
    def tag(self) -> str:
        return type(self).__name__

    def ids(self) -> Tuple[NodeId, ...]:
        """Node ids carried in payload fields."""
        return ()

    def sort_key(self):
        return _sortable(self)

    from_supervisor = False
    to_supervisor   = False


@public
@dataclass(frozen=True)
class RejFlyover(Message):
    pass


@public
@dataclass(frozen=True)
class TestLineR(Message):
    sender: NodeId

    def ids(self):
        return (self.sender,)


@public
@dataclass(frozen=True)
class TestLineL(Message):
    sender: NodeId

    def ids(self):
        return (self.sender,)


@public
@dataclass(frozen=True)
class FlyConstR(Message):
    w:      NodeId
    level:  int
    sender: NodeId

    def ids(self):
        return (self.w, self.sender)


@public
@dataclass(frozen=True)
class FlyConstL(Message):
    w:      NodeId
    level:  int
    sender: NodeId

    def ids(self):
        return (self.w, self.sender)


@public
@dataclass(frozen=True)
class TestvID(Message):
    vid: int


@public
@dataclass(frozen=True)
class TestFlyID(Message):
    flyid: Optional[NodeId]  # None stands for bottom

    def ids(self):
        return () if self.flyid is None else (self.flyid,)


@public
@dataclass(frozen=True)
class TestCert(Message):
    origin: NodeId
    vid:    int
    dist:   int

    def ids(self):
        return (self.origin,)


@public
@dataclass(frozen=True)
class IntroCert(Message):
    sender: NodeId

    def ids(self):
        return (self.sender,)


@public
@dataclass(frozen=True)
class RequestSnapshot(Message):
    from_supervisor = True


@public
@dataclass(frozen=True)
class Intro(Message):
    id: NodeId

    def ids(self):
        return (self.id,)


@public
@dataclass(frozen=True)
class Neighborhood(Message):
    sender: NodeId
    members: FrozenSet[NodeId]

    to_supervisor = True

    def ids(self):
        return (self.sender,) + tuple(sorted(self.members))


@public
@dataclass(frozen=True)
class Advice(Message):
    advice: AdviceMessage

    from_supervisor = True

    def ids(self):
        # The supervisor's claim, not a learned id: provenance never counts it.
        return () if self.advice.par is None else (self.advice.par,)


@public
@dataclass(frozen=True)
class TestAdvice(Message):
    dist:   int
    sender: NodeId

    def ids(self):
        return (self.sender,)


@public
@dataclass(frozen=True)
class Verified(Message):
    kind: VerifiedKind
    id:   NodeId

    def ids(self):
        return (self.id,)


@public
@dataclass(frozen=True)
class PathPlus(Message):
    id: NodeId

    def ids(self):
        return (self.id,)


@public
@dataclass(frozen=True)
class PathMinus(Message):
    id: NodeId

    def ids(self):
        return (self.id,)


@public
@dataclass(frozen=True)
class Base(Message):
    """Payload of the base linearization algorithm: a set of ids."""
    members: FrozenSet[NodeId]

    def ids(self):
        return tuple(sorted(self.members))


@public
@dataclass(frozen=True)
class Rev(Message):
    """Reversal request of the delegate-after-reversal primitive.

    The receiver forwards ``inner`` to ``dest``, or its own id when
    ``inner`` is None.
    """
    dest:  NodeId
    inner: Optional[Base] = None

    def ids(self):
        return (self.dest,) + (() if self.inner is None else self.inner.ids())


public(MESSAGE_TYPES = (RejFlyover, TestLineR, TestLineL, FlyConstR, FlyConstL,
                        TestvID, TestFlyID, TestCert, IntroCert, RequestSnapshot,
                        Intro, Neighborhood, Advice, TestAdvice, Verified,
                        PathPlus, PathMinus, Rev, Base))


@public
def sort_messages(messages):
    """Deterministic processing order of a multiset of messages."""
    return sorted(messages, key=lambda msg: msg.sort_key())
