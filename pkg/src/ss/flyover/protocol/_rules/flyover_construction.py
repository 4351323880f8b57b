# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Pointer doubling over the level-1 line.

A node with shortcuts on both sides tells its level-i right shortcut about
its level-i left shortcut (and vice versa); the receiver appends it as its
level-(i+1) shortcut when it is the next level to fill.
"""

from public import public

from ...net import TestLineR, TestLineL, FlyConstR, FlyConstL
from .._helpers import send_rej_fly
from ._base_rule import _BaseRule


@public
class RTestFlyoverConstruction(_BaseRule):

    __slots__ = ()

    name = "R_TestFlyoverConstruction"

    def __call__(self, ctx):

        fly = ctx.fly
        for msg in ctx.received(TestLineL, TestLineR):
            # TestLine-R comes from the left neighbor, so it is checked against L.
            near = fly.L if isinstance(msg, TestLineR) else fly.R
            if not near or near[0] != msg.sender:
                fly.exit = True
            if not fly.in_flyover or fly.exit:
                send_rej_fly(ctx, [msg.sender])

        for msg in ctx.received(FlyConstL, FlyConstR):
            side = fly.L if isinstance(msg, FlyConstR) else fly.R
            w, i, sen = msg.w, msg.level, msg.sender
            if i < 1 or not side or (len(side) >= i and side[i - 1] != sen):
                fly.exit = True
            if len(side) >= i + 1 and side[i] != w:
                fly.exit = True
            if not fly.exit:
                if len(side) == i and side[i - 1] == sen:
                    side.append(w)  # next level
                elif len(side) < i:
                    ctx.flush([sen, w])
            if not fly.in_flyover or fly.exit:
                send_rej_fly(ctx, [sen, w])


@public
class TestFlyoverConstruction(_BaseRule):

    __slots__ = ()

    name = "TestFlyoverConstruction"

    def __call__(self, ctx):

        fly, me = ctx.fly, ctx.id
        if fly.R:
            ctx.send(fly.R[0], TestLineR(me))
        if fly.L:
            ctx.send(fly.L[0], TestLineL(me))
        if fly.L and fly.R:
            for i in range(1, min(len(fly.L), len(fly.R)) + 1):
                ctx.send(fly.R[i - 1], FlyConstR(fly.L[i - 1], i, me))
                ctx.send(fly.L[i - 1], FlyConstL(fly.R[i - 1], i, me))
