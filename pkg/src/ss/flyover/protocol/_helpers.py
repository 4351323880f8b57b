# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from typing import Optional

from public import public

from ..net import NodeId, FlyoverVars, RejFlyover


@public
def next_stop(fly: FlyoverVars, val: int) -> Optional[NodeId]:
    """Shortcut that brings a message closest to virtual id ``val``.

    None when there is nowhere to go.  Ties go to the lower level.
    """
    vid = fly.vID
    if val < 1 or val == vid or vid < 1 or not (fly.L or fly.R):
        return None
    if val > vid:
        side, sign = fly.R, 1
    else:
        side, sign = fly.L, -1
    if not side:
        return None
    best, best_gap = None, None
    for level, node in enumerate(side, 1):
        gap = abs(vid + sign * 2 ** (level - 1) - val)
        if best_gap is None or gap < best_gap:
            best, best_gap = node, gap
    return best


@public
def prop_flyid(fly: FlyoverVars) -> bool:
    """Whether the node may vouch for its flyID (and forward certificates)."""
    return fly.in_flyover and (fly.vID == 1 or (fly.vID > 1 and fly.flyID != fly.owner))


@public
def send_rej_fly(ctx, ids):
    """RejFlyover to each of ``ids`` and flush them."""
    ids = sorted({v for v in ids if v is not None and v != ctx.id})
    for v in ids:
        ctx.send(v, RejFlyover())
    ctx.flush(ids)
