# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Distributed Tree-to-Path over the advised tree, dist parity as label."""

from public import public

from ...net import VerifiedKind, Verified, PathPlus, PathMinus
from ._base_rule import _BaseRule, pipeline_open


@public
def execute_transform(ctx, parent, rsib, lsib, children):
    """Emit the node's single path edge as a Path+/Path- pair."""
    me = ctx.id
    if ctx.adv.dist % 2 == 1:
        target = parent if rsib is None else rsib
        moved  = max(children) if children else me
        ctx.send(target, PathPlus(moved))
        ctx.send(moved, PathMinus(target))
    else:
        target = parent if lsib is None else lsib
        moved  = min(children) if children else me
        ctx.send(target, PathMinus(moved))
        ctx.send(moved, PathPlus(target))


@public
class LocalTransform(_BaseRule):

    __slots__ = ()

    name = "LocalTransform"

    def __call__(self, ctx):

        ignore = not pipeline_open(ctx)
        parent = rsib = lsib = None
        children = set()
        for msg in ctx.received(Verified):
            kind, v = msg.kind, msg.id
            if v == ctx.id:
                ignore = True
                continue
            if ((kind is VerifiedKind.PARENT and parent is not None) or
                (kind is VerifiedKind.SIB_MINUS and lsib is not None) or
                (kind is VerifiedKind.SIB_PLUS and rsib is not None)):
                ignore = True
            if kind is VerifiedKind.CHILD or ignore:
                children.add(v)
            elif kind is VerifiedKind.PARENT:
                parent = v
            elif kind is VerifiedKind.SIB_MINUS:
                lsib = v
            else:
                rsib = v
        dist = ctx.adv.dist
        if (parent is None and dist != 0) or (parent is not None and dist < 1):
            ignore = True
        if not ignore and parent is not None:
            execute_transform(ctx, parent, rsib, lsib, children)
        ctx.flush({parent, rsib, lsib} | children)


@public
class JoinPath(_BaseRule):
    """Adopt the path neighbors as first left and right shortcuts."""

    __slots__ = ()

    name = "JoinPath"

    def __call__(self, ctx):

        fly = ctx.fly
        ignore = not pipeline_open(ctx, t_min=1)
        fly_l = fly_r = None
        for msg in ctx.received(PathMinus, PathPlus):
            v = msg.id
            minus = isinstance(msg, PathMinus)
            if v == ctx.id:
                ignore = True
            elif minus and (fly.vID == 1 or fly_l is not None):
                ignore = True
            elif not minus and fly_r is not None:
                ignore = True
            elif minus and not ignore:
                fly_l = v
            elif not ignore:
                fly_r = v
            if ignore:
                ctx.flush([v])
        if not ignore:
            if fly_l is not None:
                fly.L = [fly_l]
            if fly_r is not None:
                fly.R = [fly_r]
        ctx.flush([fly_l, fly_r])
