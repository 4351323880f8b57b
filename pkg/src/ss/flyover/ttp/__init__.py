# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from ._tree      import *  # noqa
from ._transform import *  # noqa
from ._enumerate import *  # noqa
