# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from ._advice    import *  # noqa
from ._state     import *  # noqa
from ._honest    import *  # noqa
from ._malicious import *  # noqa
