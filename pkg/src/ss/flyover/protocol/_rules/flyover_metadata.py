# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from public import public

from ...net import TestvID, TestFlyID
from .._helpers import prop_flyid, send_rej_fly
from ._base_rule import _BaseRule


@public
class RTestFlyoverMetadata(_BaseRule):

    __slots__ = ()

    name = "R_TestFlyoverMetadata"

    def __call__(self, ctx):

        fly, me = ctx.fly, ctx.id
        for msg in ctx.received(TestvID):
            if not fly.in_flyover or fly.vID != msg.vid:
                fly.exit = True
        for msg in ctx.received(TestFlyID):
            f = msg.flyid
            if fly.L and not fly.exit and fly.flyID == me and f is not None:
                fly.flyID = f
            if (fly.in_flyover and fly.flyID != f) or (not fly.in_flyover and f is not None):
                fly.exit = True
            if fly.exit:
                send_rej_fly(ctx, [f])


@public
class TestFlyoverMetadata(_BaseRule):

    __slots__ = ()

    name = "TestFlyoverMetadata"

    def __call__(self, ctx):

        fly = ctx.fly
        for level, v in enumerate(fly.R, 1):
            ctx.send(v, TestvID(fly.vID + 2 ** (level - 1)))
        for level, v in enumerate(fly.L, 1):
            ctx.send(v, TestvID(fly.vID - 2 ** (level - 1)))
        if not fly.in_flyover and fly.vID == 0:
            # attentive nodes also warn the ids they only hold in the channel
            for v in sorted(ctx.memory_ids() | ctx.channel_ids()):
                ctx.send(v, TestFlyID(None))
        if prop_flyid(fly):
            for v in sorted(ctx.memory_ids() - {fly.flyID}):
                ctx.send(v, TestFlyID(fly.flyID))
