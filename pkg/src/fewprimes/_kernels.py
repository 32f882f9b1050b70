"""Exact pairwise set arithmetic on integer numerators.

Every additive or multiplicative set operation reduces to "all x op y, deduplicated"
over two integer arrays.  When the results provably fit in int64 this is done with
numpy (a dense bitmap when the value range is small, sort-and-unique otherwise);
otherwise it falls back to Python big integers.  Both routes are exact.
"""

from __future__ import annotations

import numpy as np

from .config import DEFAULT_BUDGETS, Budgets
from .errors import BudgetExceeded

_INT64_SAFE = 1 << 62
_CHUNK_PAIRS = 1 << 22
_MERGE_AT = 1 << 24
_BITMAP_SPAN = 1 << 28


def _absmax(xs) -> int:
    return max((abs(int(x)) for x in (xs[0], xs[-1])), default=0) if len(xs) else 0


def fits_int64(xs, ys, op: str) -> bool:
    """True when every ``x op y`` is safely representable as int64 (inputs sorted)."""
    mx, my = _absmax(xs), _absmax(ys)
    if mx >= _INT64_SAFE or my >= _INT64_SAFE:
        return False
    bound = mx + my if op == "add" else mx * my
    return bound < _INT64_SAFE


def _apply(x, y, op):
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    return x * y


def _vector_unique(xs: np.ndarray, ys: np.ndarray, op: str) -> np.ndarray:
    if op == "add":
        lo, hi = int(xs[0]) + int(ys[0]), int(xs[-1]) + int(ys[-1])
    elif op == "sub":
        lo, hi = int(xs[0]) - int(ys[-1]), int(xs[-1]) - int(ys[0])
    else:
        corners = [int(a) * int(b) for a in (xs[0], xs[-1]) for b in (ys[0], ys[-1])]
        lo, hi = min(corners), max(corners)
    rows = max(1, _CHUNK_PAIRS // len(ys))
    if hi - lo < _BITMAP_SPAN:
        seen = np.zeros(hi - lo + 1, dtype=bool)
        for start in range(0, len(xs), rows):
            block = _apply(xs[start : start + rows, None], ys[None, :], op)
            seen[(block - lo).ravel()] = True
        return np.flatnonzero(seen).astype(np.int64) + lo
    parts: list[np.ndarray] = []
    pending = 0
    for start in range(0, len(xs), rows):
        block = np.unique(_apply(xs[start : start + rows, None], ys[None, :], op))
        parts.append(block)
        pending += len(block)
        if pending > _MERGE_AT and len(parts) > 1:
            merged = np.unique(np.concatenate(parts))
            parts, pending = [merged], len(merged)
    if len(parts) == 1:
        return parts[0]
    return np.unique(np.concatenate(parts))


def pairwise(xs, ys, op: str, budgets: Budgets = DEFAULT_BUDGETS, what: str = "pairwise set operation"):
    """Sorted distinct values of ``x op y``; ``op`` is ``"add"``, ``"sub"`` or ``"mul"``.

    ``xs`` and ``ys`` must be sorted sequences of ints.  Returns a numpy int64
    array on the vector route and a sorted list of ints otherwise.
    """
    n_pairs = len(xs) * len(ys)
    if n_pairs == 0:
        return []
    check_op = "add" if op == "sub" else op
    if fits_int64(xs, ys, check_op):
        if n_pairs > budgets.vector_pairs:
            raise BudgetExceeded(what, n_pairs, budgets.vector_pairs)
        xa = np.asarray(xs, dtype=np.int64)
        ya = np.asarray(ys, dtype=np.int64)
        return _vector_unique(xa, ya, op)
    if n_pairs > budgets.python_pairs:
        raise BudgetExceeded(what, n_pairs, budgets.python_pairs)
    if op == "add":
        out = {x + y for x in xs for y in ys}
    elif op == "sub":
        out = {x - y for x in xs for y in ys}
    else:
        out = {x * y for x in xs for y in ys}
    return sorted(out)


def as_int_list(values) -> list[int]:
    if isinstance(values, np.ndarray):
        return values.tolist()
    return list(values)


def gcd_all(values) -> int:
    """gcd of all entries (0 for an empty sequence)."""
    if isinstance(values, np.ndarray):
        if len(values) == 0:
            return 0
        return int(np.gcd.reduce(np.abs(values)))
    from math import gcd

    return gcd(*values) if len(values) else 0
