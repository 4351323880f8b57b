# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Structured text snapshots of configurations."""

import enum
import json
import hashlib
import dataclasses

from public import public


def _payload(value):
    if isinstance(value, frozenset):
        return sorted(value)
    if dataclasses.is_dataclass(value):
        return message_record(value)
    if isinstance(value, enum.Enum):
        return value.name
    return value


@public
def message_record(msg):
    record = {"tag": type(msg).__name__}
    for field in dataclasses.fields(msg):
        record[field.name] = _payload(getattr(msg, field.name))
    return record


@public
def node_record(state):
    """One record per node: id, flyover vars, advice vars, base memory and channel."""
    fly = state.fly
    return {
        "id":       state.id,
        "L":        list(fly.L),
        "R":        list(fly.R),
        "vID":      fly.vID,
        "flyID":    fly.flyID,
        "exit":     int(fly.exit),
        "c_par":    fly.c_par,
        "c_dist":   fly.c_dist,
        "c_ids":    sorted(fly.c_ids),
        "t":        state.adv.t,
        "dist":     state.adv.dist,
        "base_mem": sorted(state.base_mem),
        "channel":  [message_record(msg)
                     for msg in sorted(state.channel, key=lambda msg: msg.sort_key())],
    }


@public
def state_digest(state) -> str:
    text = json.dumps(node_record(state), sort_keys=True, separators=(",", ":"))
    return hashlib.sha1(text.encode("utf-8")).hexdigest()[:12]


@public
def dump_configuration(config) -> str:
    """JSON-lines text: a header record then one record per node in id order."""
    lines = [json.dumps({"round": config.round, "n": config.n,
                         "supervisor": None if config.supervisor is None
                                       else config.supervisor.describe()},
                        sort_keys=True)]
    for state in config.nodes.values():
        lines.append(json.dumps(node_record(state), sort_keys=True))
    return "\n".join(lines) + "\n"
