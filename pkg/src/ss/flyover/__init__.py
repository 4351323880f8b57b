# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from . import __config__ ; del __config__
from .__about__ import * ; del __about__  # noqa
