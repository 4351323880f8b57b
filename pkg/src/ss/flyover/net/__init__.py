# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from ._constants  import *  # noqa
from ._exceptions import *  # noqa
from ._messages   import *  # noqa
from ._state      import *  # noqa
from ._graph      import *  # noqa
from ._trace      import *  # noqa
