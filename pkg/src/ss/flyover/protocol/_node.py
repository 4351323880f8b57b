# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from typing import Optional, Tuple

from public import public

from ..net import NodeState
from ._context import RoundContext, RoundOutput
from ._rulemanager import RuleManager, DEFAULT_RULES
from ._rules import strip_self


def _execute(state: NodeState, delivered, rules: RuleManager) -> Tuple[NodeState, RoundOutput]:

    ctx = RoundContext(state.copy(), delivered)
    strip_self(ctx)
    rules.run(ctx)
    ctx.state.channel = []
    return ctx.state, ctx.output


@public
def node_round(state: NodeState, delivered, rules: Optional[RuleManager] = None):
    """One synchronous round of a node: every rule in order, base step last.

    ``delivered`` are the messages sent to the node in the previous round
    (plus what the supervisor hands it this round).
    """
    return _execute(state, delivered, DEFAULT_RULES if rules is None else rules)


@public
def flyover_construction_step(state: NodeState, delivered):
    return _execute(state, delivered, DEFAULT_RULES.subset(
                    "R_TestFlyoverConstruction", "TestFlyoverConstruction"))


@public
def flyover_metadata_step(state: NodeState, delivered):
    return _execute(state, delivered, DEFAULT_RULES.subset(
                    "R_TestFlyoverMetadata", "TestFlyoverMetadata"))


@public
def conn_cert_step(state: NodeState, delivered):
    return _execute(state, delivered, DEFAULT_RULES.subset(
                    "R_TestConnCertificate", "TestConnCertificate"))


@public
def advice_phase_step(state: NodeState, delivered):
    return _execute(state, delivered, DEFAULT_RULES.subset(
                    "BasicChecks2", "SnapshotReq", "GetAdvice", "CertifyTree",
                    "LocalTransform", "JoinPath"))
