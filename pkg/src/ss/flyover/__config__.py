# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

__import__("_util", globals(), None, ["make_config"], 1).make_config("flyover.cfg", "ss.flyover")
