# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import sys

from ._cli import main

sys.exit(main())
