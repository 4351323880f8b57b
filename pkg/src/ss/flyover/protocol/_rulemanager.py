# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import logging

from public import public

from ._rules import *  # noqa

log = logging.getLogger(__name__)


@public
class RuleManager(object):
    """The ordered list of functions a node executes each round."""

    __slots__ = ('_rules',)

    def __init__(self, rules=()):

        super(RuleManager, self).__init__()
        self._rules = list(rules)

    def start(self):
        """Register the rules in round order; responses precede tests, one level per round."""
        self._register_rule(BasicChecks)
        self._register_rule(RejectFlyover)
        self._register_rule(RTestFlyoverConstruction)
        self._register_rule(RTestConnCertificate)
        self._register_rule(RTestFlyoverMetadata)
        self._register_rule(TestFlyoverConstruction)
        self._register_rule(TestConnCertificate)
        self._register_rule(TestFlyoverMetadata)
        self._register_rule(BasicChecks2)
        self._register_rule(SnapshotReq)
        self._register_rule(GetAdvice)
        self._register_rule(CertifyTree)
        self._register_rule(LocalTransform)
        self._register_rule(JoinPath)
        self._register_rule(TransferAdvisedNeighbors)
        self._register_rule(BaseAlgorithm)
        return self

    def stop(self):

        self._rules = []

    def _register_rule(self, rcls):

        rule = rcls()
        self._rules.append(rule)
        return rule

    @property
    def names(self):
        return [rule.name for rule in self._rules]

    def get_rule(self, name):

        for rule in self._rules:
            if rule.name == name:
                return rule
        raise ValueError("No rule named '{}'".format(name))

    def replace(self, name, rule):
        """New manager with the rule called ``name`` swapped for ``rule``."""
        self.get_rule(name)
        log.debug("replacing rule %s with %r", name, rule)
        return RuleManager(rule if old.name == name else old for old in self._rules)

    def subset(self, *names):
        """New manager running only the named rules, in registration order."""
        return RuleManager(rule for rule in self._rules if rule.name in names)

    def run(self, ctx):

        for rule in self._rules:
            rule(ctx)
        return ctx


public(DEFAULT_RULES = RuleManager().start())
