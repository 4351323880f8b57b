# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Id provenance: a node may only store or send ids it knew or was sent."""

from typing import NamedTuple, FrozenSet

from public import public

from ..net import NodeId, SUPERVISOR


@public
class ProvenanceViolation(NamedTuple):
    round: int
    node:  NodeId
    ids:   FrozenSet[NodeId]


@public
def known_ids(before, delivered):
    """Own id, own address variables and ids carried by delivered node messages.

    Supervisor messages contribute nothing: their ids are claims.
    """
    known = {before.id} | before.address_ids()
    for msg in delivered:
        if not msg.from_supervisor:
            known.update(msg.ids())
    return known


@public
def used_ids(after, output):
    """Ids stored at round end, addressed, or put into outgoing payloads."""
    used = set(after.address_ids())
    for recipient, msg in output.outbound:
        if recipient is not SUPERVISOR:
            used.add(recipient)
        used.update(msg.ids())
    return used


@public
def provenance_violations(before, delivered, after, output):
    """Ids the node used this round without having learned them."""
    return used_ids(after, output) - known_ids(before, delivered)


@public
def track_provenance(run) -> int:
    """Number of (round, node) events in which an unlearned id was used."""
    if not run.check_provenance:
        raise ValueError("The run was executed without provenance instrumentation")
    return len(run.provenance_events)
