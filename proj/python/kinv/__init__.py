"""Knot invertibility via finite group quotients.

Thin wrapper over the compiled ``_kinv`` extension. Polynomials are returned
as ``{exponent: coefficient}`` dicts; search reports as plain dicts with the
same fields as the command-line JSON output.
"""

import os
import pathlib

_data = pathlib.Path(__file__).with_name("data")
if _data.is_dir():
    os.environ.setdefault("KINV_DATA_DIR", str(_data))

from ._kinv import (  # noqa: E402
    ComputeError,
    Diagram,
    InvalidInput,
    KinvError,
    ParseError,
    PermGroup,
    alexander,
    alexander_str,
    count_homs,
    group,
    group_from_text,
    invert_test,
    jones,
    jones_str,
    knot,
    knot_names,
    table_lookup,
    wirtinger,
    wirtinger_checks,
)

__version__ = "0.1.0"

__all__ = [
    "ComputeError",
    "Diagram",
    "InvalidInput",
    "KinvError",
    "ParseError",
    "PermGroup",
    "alexander",
    "alexander_str",
    "count_homs",
    "group",
    "group_from_text",
    "invert_test",
    "jones",
    "jones_str",
    "knot",
    "knot_names",
    "table_lookup",
    "wirtinger",
    "wirtinger_checks",
]
