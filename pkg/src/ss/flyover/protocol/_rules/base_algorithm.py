# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from public import public

from ...net import Base, Rev
from ...baseline import base_step, self_introduce
from ._base_rule import _BaseRule


@public
def transfer_advised_neighbors(state):
    """Copy the certified sorted-path neighbors into the base memory."""
    state.base_mem |= state.fly.c_ids - {state.id}
    return state


@public
class TransferAdvisedNeighbors(_BaseRule):

    __slots__ = ()

    name = "TransferAdvisedNeighbors"

    def __call__(self, ctx):
        transfer_advised_neighbors(ctx.state)


@public
class BaseAlgorithm(_BaseRule):

    __slots__ = ()

    name = "BaseAlgorithm"

    def __call__(self, ctx):

        state = ctx.state
        state.base_mem, sends = base_step(state.id, state.base_mem, ctx.received(Base, Rev))
        ctx.send_all(sends)
        ctx.send_all(self_introduce(state.id, state.base_mem))
