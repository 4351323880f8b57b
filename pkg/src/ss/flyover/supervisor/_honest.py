# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import logging

from public import public

from ..net import (SupervisorMode, Phase, RequestSnapshot, Neighborhood, Advice,
                   DisconnectedSnapshotError)
from ._advice import Snapshot, compute_advice
from ._state import SupervisorState

log = logging.getLogger(__name__)


def interact(state: SupervisorState, inbound, attentive, round, advise):
    """Request/collect/advise cycle shared by honest and malicious supervisors.

    ``advise(state, snapshot, round)`` returns the advice map to send, or
    None to send nothing this time.
    """
    state = state.copy()
    outbound = []
    for msg in inbound:
        if isinstance(msg, Neighborhood) and msg.sender in state.membership:
            state.collected[msg.sender] = msg.members
    if state.exhausted:
        state.phase = Phase.IDLE
        return state, outbound

    if state.phase is Phase.ADVISING:
        state.phase = Phase.IDLE
    if state.phase is Phase.IDLE and any(attentive.values()):
        state.phase = Phase.WAITING
        state.wait_counter = 0

    if state.phase is Phase.COLLECTING:
        if not state.membership <= set(state.collected):
            log.info("round %d: %d of %d neighborhoods, waiting again", round,
                     len(state.collected), len(state.membership))
            state.phase = Phase.WAITING
            return state, outbound
        snapshot = Snapshot.from_neighborhoods(state.collected, state.membership)
        try:
            advice = advise(state, snapshot, round)
        except DisconnectedSnapshotError as exc:
            log.warning("round %d: refusing to advise: %s", round, exc)
            advice = None
        if advice is None:
            state.phase = Phase.WAITING
            return state, outbound
        outbound.extend((u, Advice(advice[u])) for u in sorted(advice))
        state.advice_rounds.append(round)
        state.phase = Phase.ADVISING
        log.info("round %d: advice sent to %d nodes", round, len(advice))
        return state, outbound

    if state.phase is Phase.WAITING:
        if attentive and all(attentive.get(u, False) for u in state.membership):
            outbound.extend((u, RequestSnapshot()) for u in sorted(state.membership))
            state.collected = {}
            state.phase = Phase.COLLECTING
        else:
            state.wait_counter += 1
    return state, outbound


def _honest_advice(state, snapshot, round):
    return compute_advice(snapshot, min(snapshot.nodes))


@public
def honest_step(state: SupervisorState, inbound, attentive_report, round=0):
    """One round of the honest supervisor; returns (state, [(node, message)])."""
    if state.mode is SupervisorMode.ABSENT:
        return state.copy(), []
    return interact(state, inbound, attentive_report, round, _honest_advice)
