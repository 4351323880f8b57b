# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

__all__ = ('top_dir', 'test_dir', 'SLOW')

import sys, os
sys.dont_write_bytecode = True
test_dir = os.path.dirname(os.path.abspath(__file__))
top_dir = os.path.dirname(test_dir)
SLOW = bool(os.environ.get("FLYOVER_SLOW"))
del sys, os
