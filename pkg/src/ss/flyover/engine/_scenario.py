# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import math
from dataclasses import dataclass, field
from typing import List, Optional

from public import public

from ..__config__ import config
from ..net import Topology, Corruption, Strategy, SupervisorMode, ScenarioError


@public
def supervisor_label(mode: SupervisorMode, strategy: Optional[Strategy] = None) -> str:
    if mode is SupervisorMode.MALICIOUS:
        return strategy.value
    return "none" if mode is SupervisorMode.ABSENT else mode.value


@public
def default_max_rounds(n: int) -> int:
    """Enough rounds for the base algorithm alone plus a few advice cycles."""
    return 8 * n + 16 * (math.ceil(math.log2(max(n, 2))) + 4)


@public
@dataclass(frozen=True)
class Scenario:

    n:           int
    topology:    Topology = Topology.RANDOM_CONNECTED
    supervisor:  SupervisorMode = SupervisorMode.HONEST
    strategy:    Optional[Strategy] = None
    seed:        int = 0
    max_rounds:  Optional[int] = None
    corruption:  Corruption = Corruption.NONE
    extra_edges: Optional[float] = None
    attacks:     int = 1

    def __post_init__(self):

        if not isinstance(self.n, int) or self.n < 1:
            raise ScenarioError("n", self.n, "an integer >= 1")
        if self.max_rounds is None:
            object.__setattr__(self, "max_rounds", default_max_rounds(self.n))
        if not isinstance(self.max_rounds, int) or self.max_rounds < 1:
            raise ScenarioError("max_rounds", self.max_rounds, "an integer >= 1")
        if (self.supervisor is SupervisorMode.MALICIOUS) != (self.strategy is not None):
            raise ScenarioError("strategy", self.strategy, "a strategy for malicious mode only")
        if self.extra_edges is None:
            object.__setattr__(self, "extra_edges", config.getfloat("EXTRA_EDGES", 0.5))
        if self.extra_edges < 0:
            raise ScenarioError("extra_edges", self.extra_edges, "a non-negative number")
        if self.attacks < 0:
            raise ScenarioError("attacks", self.attacks, "a non-negative integer")

    @property
    def supervisor_label(self):
        return supervisor_label(self.supervisor, self.strategy)


@public
@dataclass
class RunMetrics:

    rounds_to_legal:         Optional[int] = None
    rounds_to_all_reject:    Optional[int] = None
    max_degree_seen:         int = 0
    messages_per_round:      List[int] = field(default_factory=list)
    connectivity_violations: int = 0
    sybil_violations:        int = 0
    advice_round:            Optional[int] = None
    rounds_run:              int = 0
    floor_violations:        int = 0

    @property
    def total_messages(self):
        return sum(self.messages_per_round)

    @property
    def rounds_after_advice(self):
        """Rounds from the first advice delivery to legality."""
        if self.rounds_to_legal is None or self.advice_round is None:
            return None
        return max(0, self.rounds_to_legal - self.advice_round)
