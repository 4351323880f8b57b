# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from ._context     import RoundContext, RoundOutput
from ._helpers     import next_stop, prop_flyid, send_rej_fly
from ._rules       import *  # noqa
from ._rulemanager import RuleManager, DEFAULT_RULES
from ._node        import (node_round, flyover_construction_step, flyover_metadata_step,
                           conn_cert_step, advice_phase_step)
