"""Backend selection for the congruence closure kernel.

The compiled kernel is preferred when its extension module built; the
pure-Python kernel is the fallback and the reference.  Both implement the
same contract and are cross-checked in the test suite.  Set PLQ_PURE=1 to
force the pure kernel.
"""

from __future__ import annotations

import os

from . import _closure_py

if os.environ.get("PLQ_PURE"):
    _impl = _closure_py
else:
    try:
        from . import _closure_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _closure_py

offsets = _closure_py.offsets


def backend_name() -> str:
    return "compiled" if _impl.__name__.endswith("_closure_cy") else "pure"


def closure_reps(n, cap, rules, front_transposition=False):
    """Partition words of length <= cap by single-factor rewrites.

    Returns a sequence mapping each word index to the least word index in
    its component; index order is shortlex order.
    """
    if n < 0 or cap < 0:
        raise ValueError("alphabet size and cap must be nonnegative")
    cleaned = []
    seen = set()
    for lhs, rhs in rules:
        lhs, rhs = tuple(lhs), tuple(rhs)
        if len(lhs) < len(rhs):
            lhs, rhs = rhs, lhs
        if lhs == rhs or (lhs, rhs) in seen:
            continue
        if any(not 0 <= d < n for d in lhs + rhs):
            raise ValueError(f"rule {(lhs, rhs)} out of range for alphabet size {n}")
        seen.add((lhs, rhs))
        cleaned.append((lhs, rhs))
    cleaned.sort()
    return _impl.closure_reps(n, cap, cleaned, front_transposition)


def word_index(ranks, n, off) -> int:
    value = 0
    for d in ranks:
        value = value * n + d
    return off[len(ranks)] + value


def index_word(idx, n, off) -> tuple[int, ...]:
    length = 0
    while off[length + 1] <= idx:
        length += 1
    value = idx - off[length]
    out = [0] * length
    for j in range(length - 1, -1, -1):
        out[j] = value % n
        value //= n
    return tuple(out)
