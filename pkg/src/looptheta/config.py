"""Global truncation depth.

All Laurent arithmetic lives in the exponent band [-D, D].  Any operation
that would produce a nonzero coefficient outside the band raises
WindowOverflow instead of silently dropping it; widening the depth is the
caller's decision.
"""

from contextlib import contextmanager

DEFAULT_DEPTH = 8

_depth = DEFAULT_DEPTH


def truncation_depth() -> int:
    """Current global truncation depth D."""
    return _depth


def set_truncation_depth(depth: int) -> None:
    if depth < 1:
        raise ValueError("truncation depth must be >= 1")
    global _depth
    _depth = depth


@contextmanager
def truncation(depth: int):
    """Temporarily run with a different global depth."""
    global _depth
    old = _depth
    set_truncation_depth(depth)
    try:
        yield
    finally:
        _depth = old
