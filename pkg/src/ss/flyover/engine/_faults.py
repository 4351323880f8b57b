# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

"""Transient faults in the initial configuration.

Faults only add ids to registers and channels, so the union graph stays
weakly connected.
"""

import logging
import random

from public import public

from ..net import (Corruption, Configuration, VerifiedKind, MESSAGE_TYPES, RejFlyover, TestLineR,
                   TestLineL, FlyConstR, FlyConstL, TestvID, TestFlyID, TestCert, IntroCert,
                   Intro, TestAdvice, Verified, PathPlus, PathMinus, Base, Rev)

log = logging.getLogger(__name__)


def _pool(state, live, rng):

    near = sorted((state.address_ids() | state.channel_ids()) - {state.id})
    others = sorted(set(live) - {state.id} - set(near))
    return near + rng.sample(others, min(len(others), 2))


def _scramble(state, live, n, rng, witness):

    pool = _pool(state, live, rng)
    if not pool:
        return
    fly, adv = state.fly, state.adv
    state.base_mem |= fly.address_ids() - {state.id}  # keep what gets overwritten
    fly.L = [rng.choice(pool) for _ in range(rng.randint(0, 3))]
    fly.R = [rng.choice(pool) for _ in range(rng.randint(0, 3))]
    fly.vID = rng.randint(0, n + 2)
    fly.flyID = rng.choice(pool + [state.id])
    fly.exit = rng.random() < 0.2
    fly.c_par = rng.randint(0, n + 1)
    fly.c_dist = rng.randint(-1, n)
    fly.c_ids = set(rng.sample(pool, min(len(pool), rng.randint(0, 3))))
    adv.t = rng.randint(-2, 8)
    adv.dist = rng.randint(-1, n)
    if witness:
        # a left shortcut with vID <= 1 fails BasicChecks
        fly.L = [rng.choice(pool)] + fly.L
        fly.vID = rng.randint(0, 1)
        fly.exit = False


public(STALE_MESSAGE_TYPES = tuple(mtype for mtype in MESSAGE_TYPES
                                   if not (mtype.from_supervisor or mtype.to_supervisor)))


def _stale_message(pool, n, rng, flyid=False):

    pick = lambda: rng.choice(pool)  # noqa: E731
    if flyid:
        return TestFlyID(pick())
    forge = {
        RejFlyover: lambda: RejFlyover(),
        TestLineR:  lambda: TestLineR(pick()),
        TestLineL:  lambda: TestLineL(pick()),
        FlyConstR:  lambda: FlyConstR(pick(), rng.randint(1, 4), pick()),
        FlyConstL:  lambda: FlyConstL(pick(), rng.randint(1, 4), pick()),
        TestvID:    lambda: TestvID(rng.randint(0, n + 2)),
        TestFlyID:  lambda: TestFlyID(pick() if rng.random() < 0.7 else None),
        TestCert:   lambda: TestCert(pick(), rng.randint(0, n), rng.randint(-1, n)),
        IntroCert:  lambda: IntroCert(pick()),
        Intro:      lambda: Intro(pick()),
        TestAdvice: lambda: TestAdvice(rng.randint(0, n), pick()),
        Verified:   lambda: Verified(rng.choice(list(VerifiedKind)), pick()),
        PathPlus:   lambda: PathPlus(pick()),
        PathMinus:  lambda: PathMinus(pick()),
        Base:       lambda: Base(frozenset(rng.sample(pool, min(len(pool), 2)))),
        Rev:        lambda: Rev(pick(), Base(frozenset((pick(),)))
                                if rng.random() < 0.5 else None),
    }
    return forge[rng.choice(STALE_MESSAGE_TYPES)]()


@public
def inject_faults(config: Configuration, corruption: Corruption, seed: int) -> Configuration:
    """Copy of ``config`` with corrupted registers and/or stale messages."""
    if corruption is Corruption.NONE:
        return config.copy()
    config = config.copy()
    rng = random.Random(seed)
    live = config.ids
    n = config.n
    candidates = [u for u in live
                  if (config.nodes[u].address_ids() | config.nodes[u].channel_ids()) - {u}]
    if not candidates:
        return config

    if corruption in (Corruption.GARBAGE_FLYOVER_VARS, Corruption.ALL):
        witness = rng.choice(candidates)
        for u in candidates:
            if u == witness or rng.random() < 0.5:
                _scramble(config.nodes[u], live, n, rng, u == witness)

    if corruption in (Corruption.STALE_CHANNEL_MESSAGES, Corruption.ALL):
        witness = rng.choice(candidates)
        for u in candidates:
            if u != witness and rng.random() >= 0.5:
                continue
            state = config.nodes[u]
            pool = _pool(state, live, rng)
            if u == witness:
                state.channel.append(_stale_message(pool, n, rng, flyid=True))
            state.channel.extend(_stale_message(pool, n, rng) for _ in range(rng.randint(1, 4)))

    log.debug("injected %s faults (seed %d)", corruption.value, seed)
    return config
