# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Local certification of the sorted-path tree.

Each non-root node routes (its id, its parent's vID, its distance) over the
flyover to the parent, which accepts when its own distance is one less.
Both ends then keep each other in c_ids.
"""

from public import public

from ...net import TestCert, IntroCert
from .._helpers import next_stop, prop_flyid, send_rej_fly
from ._base_rule import _BaseRule


@public
class RTestConnCertificate(_BaseRule):

    __slots__ = ()

    name = "R_TestConnCertificate"

    def __call__(self, ctx):

        fly, me = ctx.fly, ctx.id
        for msg in ctx.received(TestCert):
            w, tvid, d = msg.origin, msg.vid, msg.dist
            hop = None
            if fly.vID == tvid and d - 1 != fly.c_dist:
                fly.exit = True
            if fly.vID != tvid:
                hop = next_stop(fly, tvid)
                if hop is None:
                    fly.exit = True
            if not fly.in_flyover or fly.exit:
                send_rej_fly(ctx, [w])
            elif fly.vID != tvid:
                if prop_flyid(fly):
                    ctx.send(hop, msg)
                else:
                    ctx.flush([w])
            elif w != me:
                fly.c_ids.add(w)
                ctx.send(w, IntroCert(me))
        for msg in ctx.received(IntroCert):
            if msg.sender != me:
                fly.c_ids.add(msg.sender)


@public
class TestConnCertificate(_BaseRule):

    __slots__ = ()

    name = "TestConnCertificate"

    def __call__(self, ctx):

        fly, me = ctx.fly, ctx.id
        if fly.vID > 1 and fly.flyID != me:
            ctx.send(next_stop(fly, fly.c_par), TestCert(me, fly.c_par, fly.c_dist))
