# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import enum

from public import public

public(NodeId = int)


@public
class VerifiedKind(enum.IntEnum):
    """Relation carried by a Verified message."""
    PARENT    = 0
    SIB_PLUS  = 1
    SIB_MINUS = 2
    CHILD     = 3


@public
class Topology(enum.Enum):
    RANDOM_CONNECTED = "random_connected"
    PATH             = "path"
    STAR             = "star"
    TWO_CLUSTERS     = "two_clusters"
    FAR_PAIR         = "far_pair"          # two cliques of n//4 nodes joined by a path


@public
class Corruption(enum.Enum):
    NONE                   = "none"
    GARBAGE_FLYOVER_VARS   = "garbage_flyover_vars"
    STALE_CHANNEL_MESSAGES = "stale_channel_messages"
    ALL                    = "all"


@public
class Strategy(enum.Enum):
    """Malicious supervisor strategies."""
    SPLIT      = "split"
    SYBIL      = "sybil"
    WRONG_VIDS = "wrong_vids"
    CYCLE      = "cycle"
    PARTIAL    = "partial"
    STALE      = "stale"


@public
class SupervisorMode(enum.Enum):
    HONEST    = "honest"
    ABSENT    = "absent"
    MALICIOUS = "malicious"


@public
class Phase(enum.Enum):
    IDLE       = "idle"
    WAITING    = "waiting"
    COLLECTING = "collecting"
    ADVISING   = "advising"


class _Supervisor(object):

    __slots__ = ()

    def __repr__(self):
        return "SUPERVISOR"

    def __reduce__(self):
        return "SUPERVISOR"


public(SUPERVISOR = _Supervisor())
