"""Obstruction calculator for trivializing welded links by 4-moves.

Thin wrapper over the C++ extension module. ``check_link`` returns the
report as a plain dict; everything else is re-exported from the extension.
"""

import json as _json

try:
    from ._fourmove import *  # noqa: F401,F403  (installed wheel layout)
    from . import _fourmove as _ext
except ImportError:  # in-tree CMake build: extension sits on sys.path
    from _fourmove import *  # noqa: F401,F403
    import _fourmove as _ext

__all__ = [
    "parse_link_file", "serialize_link", "import_gauss",
    "linking_number", "writhe", "linking_matrix", "longitude_words",
    "expand_word", "mu_mod2", "commutator_series",
    "check_link", "check_link_json",
    "catalog_list", "catalog_get", "catalog_note",
    "UnderpassCode", "ParseError", "ValidationError",
    "PreconditionError", "ResourceError",
]


def check_link(code, q=5, D=None):
    """Run the obstruction check and return the report as a dict."""
    return _json.loads(_ext.check_link_json(code, q, D))
