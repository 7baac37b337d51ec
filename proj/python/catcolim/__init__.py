"""2-categorical colimits over finite data.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (  # noqa: F401
    DEFAULT_BOUND,
    Document,
    InvalidInput,
    ParseError,
    classifier,
    decompose,
    flexible,
    nerve_reconstruction_holds,
    parse,
    sifted,
    verify,
    weighted_colimit_sizes,
)

__all__ = [
    "DEFAULT_BOUND",
    "Document",
    "InvalidInput",
    "ParseError",
    "classifier",
    "decompose",
    "flexible",
    "nerve_reconstruction_holds",
    "parse",
    "sifted",
    "verify",
    "weighted_colimit_sizes",
]
