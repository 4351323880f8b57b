# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

__import__("pkg_resources").declare_namespace(__name__)
