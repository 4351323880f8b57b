# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from typing import Optional

from public import public

from ..__config__ import config
from ..net import SupervisorMode, Strategy, Phase


@public
class SupervisorState(object):

    __slots__ = ('mode', 'strategy', 'membership', 'phase', 'wait_counter', 'collected',
                 'inbox', 'attacks_left', 'stale_snapshot', 'advice_rounds', 'seed')

    def __init__(self, mode=SupervisorMode.HONEST, membership=(),
                 strategy: Optional[Strategy] = None, attacks=None, seed=0):

        super(SupervisorState, self).__init__()
        if (mode is SupervisorMode.MALICIOUS) != (strategy is not None):
            raise ValueError("A strategy is required exactly for malicious mode, "
                             "got mode={} strategy={}".format(mode, strategy))
        self.mode           = mode
        self.strategy       = strategy
        self.membership     = frozenset(membership)
        self.phase          = Phase.IDLE
        self.wait_counter   = 0
        self.collected      = {}
        self.inbox          = []   # node messages sent last round
        self.attacks_left   = (config.getint("MALICIOUS_ATTACKS", 1)
                               if attacks is None else attacks)
        self.stale_snapshot = None
        self.advice_rounds  = []
        self.seed           = seed

    @property
    def exhausted(self):
        """True when this supervisor will never advise again."""
        if self.mode is SupervisorMode.ABSENT or len(self.membership) < 2:
            return True
        if self.mode is SupervisorMode.MALICIOUS:
            return self.attacks_left <= 0
        return False

    def copy(self):

        other = SupervisorState.__new__(SupervisorState)
        for name in self.__slots__:
            setattr(other, name, getattr(self, name))
        other.collected     = dict(self.collected)
        other.inbox         = list(self.inbox)
        other.advice_rounds = list(self.advice_rounds)
        return other

    def describe(self):
        return {"mode": self.mode.value,
                "strategy": None if self.strategy is None else self.strategy.value,
                "phase": self.phase.value,
                "wait_counter": self.wait_counter,
                "collected": len(self.collected),
                "attacks_left": self.attacks_left}

    def __eq__(self, other):
        if not isinstance(other, SupervisorState):
            return NotImplemented
        return all(getattr(self, name) == getattr(other, name)
                   for name in self.__slots__ if name != 'inbox') and \
               sorted(m.sort_key() for m in self.inbox) == sorted(m.sort_key() for m in other.inbox)

    __hash__ = None

    def __repr__(self):
        return "SupervisorState({})".format(self.describe())
