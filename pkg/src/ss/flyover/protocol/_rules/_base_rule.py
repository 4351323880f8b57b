# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from ...__config__ import config

TIMER_MAX = config.getint("TIMER_MAX", 5)


class _BaseRule(object):
    """A named function of the node program, run once per round."""

    __slots__ = ()

    name = None

    def __call__(self, ctx):

        raise NotImplementedError()

    def __repr__(self):
        return "<rule {}>".format(self.name)


def pipeline_open(ctx, t_min=2):
    """S empty, exit clear and the advice timer at least ``t_min``."""
    return not ctx.fly.in_flyover and not ctx.fly.exit and ctx.adv.t >= t_min
