# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import sys
import os
import configparser

from public import public


@public
def make_config(cfg_fname, cfg_section):
    """Load <namespace dir>/<cfg_fname> and bind its section as
    <cfg_section>.__config__.config"""

    pkg = sys.modules[cfg_section]
    cfg_path = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(pkg.__file__))),
                            cfg_fname)
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    parser.optionxform = str  # keys are upper-case constants
    parser.read(cfg_path, encoding="utf-8")
    if not parser.has_section(cfg_section):
        parser.add_section(cfg_section)
    module = sys.modules[cfg_section + ".__config__"]
    module.config = parser[cfg_section]
    return module.config
