# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from ._scenario   import *  # noqa
from ._topology   import *  # noqa
from ._faults     import *  # noqa
from ._detectors  import *  # noqa
from ._provenance import *  # noqa
from ._seeding    import *  # noqa
from ._simulator  import *  # noqa
