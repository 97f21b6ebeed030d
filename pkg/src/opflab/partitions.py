"""Integer partitions / Young diagrams.

Partitions are plain tuples of positive integers in weakly decreasing order.
The empty tuple is the empty diagram (trivial representation).
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator, Optional, Sequence, Tuple

Partition = Tuple[int, ...]


class NonIntegerPadding(ValueError):
    """Raised when columns cannot be added to reach the requested size."""


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a canonical partition (drops zeros, checks order)."""
    out = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {out}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"parts not weakly decreasing: {out}")
    return out


def partitions(n: int, max_rows: Optional[int] = None,
               max_part: Optional[int] = None) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rows = n if max_rows is None else max_rows
    return list(_gen(n, n if max_part is None else max_part, rows))


def _gen(n: int, largest: int, rows: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if rows == 0:
        return
    for first in range(min(n, largest), 0, -1):
        if first * rows < n:
            break
        for rest in _gen(n - first, first, rows - 1):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_lengths(lam: Sequence[int]) -> list[int]:
    cols = conjugate(lam)
    return [lam[i] - j + cols[j] - i - 1
            for i in range(len(lam)) for j in range(lam[i])]


def sym_dim(lam: Sequence[int]) -> int:
    """Dimension of the symmetric-group irrep labelled by ``lam`` (hook length formula)."""
    n = sum(lam)
    return factorial(n) // prod(hook_lengths(lam))


def su_dim(lam: Sequence[int], d: int) -> int:
    """Dimension of the SU(d) irrep labelled by ``lam``; 0 if it has more than d rows."""
    if len(lam) > d:
        return 0
    # hook-content formula: prod (d + c) / h
    num = 1
    cols = conjugate(lam)
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= d + j - i
            den *= row - j + cols[j] - i - 1
    return num // den


def centralizer_order(mu: Sequence[int]) -> int:
    return prod(k ** m * factorial(m) for k, m in Counter(mu).items())


def class_size(mu: Sequence[int]) -> int:
    """Number of permutations with cycle type ``mu``."""
    return factorial(sum(mu)) // centralizer_order(mu)


def pad(mu: Sequence[int], m: int, f: int) -> Partition:
    """Add full columns of height ``m`` to ``mu`` until it has ``f`` boxes."""
    if len(mu) > m:
        raise ValueError(f"{tuple(mu)} has more than {m} rows")
    extra, rem = divmod(f - sum(mu), m)
    if rem or extra < 0:
        raise NonIntegerPadding(f"cannot pad {tuple(mu)} to {f} boxes with columns of {m}")
    rows = list(mu) + [0] * (m - len(mu))
    return partition(r + extra for r in rows)


def strip_columns(lam: Sequence[int], m: int) -> Partition:
    """Canonical SU(m) label: remove all columns of height ``m``."""
    if len(lam) > m:
        raise ValueError(f"{tuple(lam)} has more than {m} rows")
    if len(lam) < m:
        return tuple(lam)
    last = lam[-1]
    return partition(p - last for p in lam)


def add(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """Row-wise sum of two partitions."""
    k = max(len(lam), len(mu))
    a = list(lam) + [0] * (k - len(lam))
    b = list(mu) + [0] * (k - len(mu))
    return tuple(x + y for x, y in zip(a, b))


def born_rep_partition(j: int, d: int) -> Partition:
    """Diagram ``(2j, j^(d-2))`` labelling the SU(d) irrep of a degree-j measurement rule."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return ()
    return (2 * j,) + (j,) * (d - 2)


def dim_Dj(j: int, d: int) -> int:
    """Closed-form dimension of D_j^d, evaluated in exact rational arithmetic."""
    if d < 2 or j < 0:
        raise ValueError("need j >= 0 and d >= 2")
    val = Fraction(2 * j, d - 1) + 1
    for k in range(1, d - 1):
        val *= (1 + Fraction(j, k)) ** 2
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer dimension {val}")
    return int(val)


def format_partition(lam: Sequence[int]) -> str:
    """Compact exponent notation, e.g. (4,2^7)."""
    if not lam:
        return "()"
    out = []
    for k, grp in _runs(lam):
        out.append(str(k) if grp == 1 else f"{k}^{grp}")
    return "(" + ",".join(out) + ")"


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition`; also accepts ``4,2,2`` and ``[]``."""
    body = text.strip().strip("()[]").replace(" ", "")
    if not body:
        return ()
    parts: list[int] = []
    for tok in body.split(","):
        if "^" in tok:
            k, e = tok.split("^")
            parts.extend([int(k)] * int(e))
        else:
            parts.append(int(tok))
    return partition(parts)


def _runs(lam: Sequence[int]):
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        yield lam[i], j - i
        i = j
