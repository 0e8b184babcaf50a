"""Counting sequences used by the cardinality and idempotent formulas.

Bell, Catalan, and shifted Schroeder numbers are computed on demand.  The
Borel triangle has no convenient closed form, so its first eight rows are
a stored fixture (OEIS A234950) that is cross-checked at run time against
direct enumeration of the trees it counts; a mismatch is a hard error.
"""

from __future__ import annotations

import math

from .errors import IndexOutOfRange

# Rows 0..7 of the Borel triangle.  Row m, column k counts binary search
# trees on m+1 distinct labels with m+k+1 nodes, no node having a left
# child with an equal label.
_BOREL_ROWS = (
    (1,),
    (2, 1),
    (5, 6, 2),
    (14, 28, 20, 5),
    (42, 120, 135, 70, 14),
    (132, 495, 770, 616, 252, 42),
    (429, 2002, 4004, 4368, 2730, 924, 132),
    (1430, 8008, 19656, 27300, 23100, 11880, 3432, 429),
)

# Rows whose fixture values are cheap enough to re-derive by enumeration.
_BOREL_CHECK_MAX_ROW = 4
_checked_rows: set[int] = set()

_bell_cache = [1]
_schroder_cache = [1, 2]  # large Schroeder numbers r_0, r_1, ...


def bell(n: int) -> int:
    """Number of set partitions of an n-element set."""
    if n < 0:
        raise IndexOutOfRange(f"bell({n})")
    while len(_bell_cache) <= n:
        m = len(_bell_cache)
        _bell_cache.append(sum(math.comb(m - 1, k) * _bell_cache[k] for k in range(m)))
    return _bell_cache[n]


def catalan(n: int) -> int:
    """Number of Dyck paths of length 2n."""
    if n < 0:
        raise IndexOutOfRange(f"catalan({n})")
    return math.comb(2 * n, n) // (n + 1)


def schroder_shifted(n: int) -> int:
    """Schroeder numbers shifted by one: 1, 1, 2, 6, 22, 90, ..."""
    if n < 0:
        raise IndexOutOfRange(f"schroder_shifted({n})")
    if n == 0:
        return 1
    while len(_schroder_cache) < n:
        m = len(_schroder_cache)
        nxt = _schroder_cache[-1] + sum(
            _schroder_cache[k] * _schroder_cache[m - 1 - k] for k in range(m)
        )
        _schroder_cache.append(nxt)
    return _schroder_cache[n - 1]


def borel(n: int, k: int) -> int:
    """Entry (n, k) of the Borel triangle, 0 <= k <= n <= 7."""
    if not 0 <= k <= n or n >= len(_BOREL_ROWS):
        raise IndexOutOfRange(f"borel({n}, {k})")
    if n <= _BOREL_CHECK_MAX_ROW and n not in _checked_rows:
        _crosscheck_borel_row(n)
        _checked_rows.add(n)
    return _BOREL_ROWS[n][k]


def _crosscheck_borel_row(n: int) -> None:
    # Deferred import: the tree enumerator lives with the tree code.
    from .sylvester import count_reduced_trees

    for k in range(n + 1):
        s = n + 1
        i = n + k + 1
        got = count_reduced_trees(i, k, s)
        if got != _BOREL_ROWS[n][k]:
            raise AssertionError(
                f"Borel fixture row {n} is wrong at k={k}: "
                f"stored {_BOREL_ROWS[n][k]}, tree enumeration gives {got}"
            )


def sequence_value(kind: str, n: int, k: int | None = None) -> int:
    """Dispatch by sequence name; k is required exactly for 'borel'."""
    if kind == "borel":
        if k is None:
            raise IndexOutOfRange("borel requires a column index")
        return borel(n, k)
    if k is not None:
        raise IndexOutOfRange(f"{kind} takes no column index")
    if kind == "bell":
        return bell(n)
    if kind == "catalan":
        return catalan(n)
    if kind == "schroder_shifted":
        return schroder_shifted(n)
    raise IndexOutOfRange(f"unknown sequence kind {kind!r}")
