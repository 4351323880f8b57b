# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

from .init_rules           import *  # noqa
from .flyover_construction import *  # noqa
from .conn_certificate     import *  # noqa
from .flyover_metadata     import *  # noqa
from .advice               import *  # noqa
from .tree_transform       import *  # noqa
from .base_algorithm       import *  # noqa
