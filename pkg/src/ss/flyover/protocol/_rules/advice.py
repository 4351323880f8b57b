# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Advice reception.

The timer t drives a fixed pipeline once a snapshot is requested:
t=5 request, t=4 advice, t=3 TestAdvice, t=2 Verified, t=1 Path messages.
"""

from public import public

from ...net import (SUPERVISOR, VerifiedKind, RequestSnapshot, Intro, Neighborhood,
                    Advice, TestAdvice, Verified)
from ._base_rule import _BaseRule, TIMER_MAX, pipeline_open


@public
class BasicChecks2(_BaseRule):

    __slots__ = ()

    name = "BasicChecks2"

    def __call__(self, ctx):

        adv, fly = ctx.adv, ctx.fly
        adv.t = min(max(adv.t, 0), TIMER_MAX)
        if adv.t > 0:
            adv.t -= 1
        if adv.t == 0 and (not fly.in_flyover or fly.exit):
            fly.vID = 0


@public
class SnapshotReq(_BaseRule):

    __slots__ = ()

    name = "SnapshotReq"

    def __call__(self, ctx):

        fly, adv, me = ctx.fly, ctx.adv, ctx.id
        if fly.in_flyover or fly.exit or adv.t != 0 or not ctx.has(RequestSnapshot):
            return
        adv.t = TIMER_MAX
        snap = sorted((ctx.state.base_mem | ctx.channel_ids()) - {me})
        for v in snap:
            ctx.send(v, Intro(me))
            ctx.send(me, Intro(v))
        ctx.send(SUPERVISOR, Neighborhood(me, frozenset(snap)))


@public
def advice_acceptable(advice, snap, me) -> bool:
    """Well-formed advice whose tree parent is an introduced neighbor."""
    if not advice.is_well_formed():
        return False
    return advice.par is None or (advice.par != me and advice.par in snap)


@public
class GetAdvice(_BaseRule):

    __slots__ = ()

    name = "GetAdvice"

    def __call__(self, ctx):

        adv, me = ctx.adv, ctx.id
        busy = not pipeline_open(ctx)
        snap = {msg.id for msg in ctx.received(Intro)} - {me}
        advices = ctx.received(Advice)
        # several advices in one round cannot all be honest
        if len(advices) == 1 and not busy and adv.t == TIMER_MAX - 1:
            advice = advices[0].advice
            if advice_acceptable(advice, snap, me):
                self.accept(ctx, advice)
        ctx.flush(snap)

    def accept(self, ctx, advice):

        fly, adv = ctx.fly, ctx.adv
        fly.vID    = advice.vID
        fly.c_par  = 0 if advice.c_par is None else advice.c_par
        fly.c_dist = advice.c_dist
        adv.dist   = advice.dist
        if advice.par is not None:
            ctx.send(advice.par, TestAdvice(advice.dist, ctx.id))


@public
def setup_local_transform(ctx, children):
    """Tell each child its parent and siblings, and oneself its children."""
    me = ctx.id
    kids = sorted(children)
    for u in kids:
        ctx.send(u, Verified(VerifiedKind.PARENT, me))
    for left, right in zip(kids, kids[1:]):
        ctx.send(left,  Verified(VerifiedKind.SIB_PLUS,  right))
        ctx.send(right, Verified(VerifiedKind.SIB_MINUS, left))
    for u in kids:
        ctx.send(me, Verified(VerifiedKind.CHILD, u))


@public
class CertifyTree(_BaseRule):

    __slots__ = ()

    name = "CertifyTree"

    def __call__(self, ctx):

        ignore = not pipeline_open(ctx)
        children = set()
        for msg in ctx.received(TestAdvice):
            if msg.sender == ctx.id:
                ignore = True
                continue
            children.add(msg.sender)
            if ctx.adv.dist != msg.dist - 1:
                ignore = True
        if not ignore and children:
            setup_local_transform(ctx, children)
        ctx.flush(children)
