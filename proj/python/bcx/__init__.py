"""Betweenness centrality via mutually cross-checking methods.

The heavy lifting lives in the compiled extension; this package re-exports
the operations most callers need.
"""

from ._core import (
    MethodError,
    OracleCapError,
    OverflowError,
    ParseError,
    SamplingError,
    bc_table,
    compute,
    generate,
    verify,
)

__all__ = [
    "MethodError",
    "OracleCapError",
    "OverflowError",
    "ParseError",
    "SamplingError",
    "bc_table",
    "compute",
    "generate",
    "verify",
]
