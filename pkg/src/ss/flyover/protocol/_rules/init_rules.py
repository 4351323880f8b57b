# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from public import public

from ...net import FlyoverVars, RejFlyover
from .._helpers import next_stop, send_rej_fly
from ._base_rule import _BaseRule


@public
def strip_self(ctx):
    """Drop the owner's id from its address variables.

    Shortcut lists are cut at the first occurrence; the cut-off ids are
    flushed so they stay reachable.
    """
    fly, me = ctx.fly, ctx.id
    for side in ("L", "R"):
        ids = getattr(fly, side)
        if me in ids:
            k = ids.index(me)
            setattr(fly, side, ids[:k])
            ctx.flush(ids[k + 1:])
    fly.c_ids.discard(me)
    ctx.state.base_mem.discard(me)


@public
def basic_checks(fly: FlyoverVars, rejected: bool = False) -> FlyoverVars:
    """Copy of ``fly`` with exit raised when a local consistency check fails."""
    fly = fly.copy()
    me = fly.owner
    S = fly.in_flyover
    if (rejected
            or (not S and (fly.c_ids or fly.flyID != me))
            or (not fly.L and fly.R and (fly.vID != 1 or fly.flyID != me))
            or (fly.L and fly.vID <= 1)
            or (fly.vID == 1 and fly.c_dist != 0)
            or (fly.vID > 1 and fly.c_dist <= 0)
            or (S and fly.vID > 1 and next_stop(fly, fly.c_par) is None)
            or len(fly.c_ids) > 2
            or (len(fly.c_ids) == 2 and (me > max(fly.c_ids) or me < min(fly.c_ids)))):
        fly.exit = True
    return fly


@public
class BasicChecks(_BaseRule):

    __slots__ = ()

    name = "BasicChecks"

    def __call__(self, ctx):
        ctx.state.fly = basic_checks(ctx.fly, ctx.has(RejFlyover))


@public
class RejectFlyover(_BaseRule):
    """Leave the flyover: notify and flush every flyover id, reset to defaults."""

    __slots__ = ()

    name = "RejectFlyover"

    def __call__(self, ctx):

        fly = ctx.fly
        if not fly.exit:
            return
        ctx.output.left_flyover = fly.in_flyover
        send_rej_fly(ctx, fly.S | {fly.flyID} | fly.c_ids)
        fly.reset()
        ctx.output.rejected = True
