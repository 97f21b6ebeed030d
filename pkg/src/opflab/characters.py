"""Symmetric-group characters (Murnaghan-Nakayama) and Kronecker coefficients.

Shapes are encoded internally as bead masks (beta-sets): bit ``b`` is set when
a bead sits at position ``b``.  Removing a rim hook of length ``r`` moves one
bead from ``b`` to ``b - r``; its sign is the parity of the beads jumped over.
Leading beads at positions 0, 1, ... carry no information and are stripped, so
the same shape always has the same key regardless of how many rows it started
with.
"""
from __future__ import annotations

import json
import os
import threading
from math import factorial
from pathlib import Path
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .partitions import (Partition, born_rep_partition, class_size, pad,
                         partition, partitions)

CACHE_ENV = "OPFLAB_CACHE_DIR"
DEFAULT_CACHE_DIR = ".opflab-cache"
CACHE_VERSION = 1

# (mask, remaining class parts) -> character value; shared by every cache object
_memo: Dict[Tuple[int, Tuple[int, ...]], int] = {}


def _mask(lam: Sequence[int]) -> int:
    rows = len(lam)
    m = 0
    for i, p in enumerate(lam):
        m |= 1 << (p + rows - 1 - i)
    return _canon(m)


def _canon(mask: int) -> int:
    while mask & 1:
        mask >>= 1
    return mask


def _chi(mask: int, parts: Tuple[int, ...]) -> int:
    if not parts:
        return 1
    key = (mask, parts)
    val = _memo.get(key)
    if val is not None:
        return val
    r, rest = parts[0], parts[1:]
    between = (1 << (r - 1)) - 1
    total = 0
    beads = mask
    while beads:
        b = beads.bit_length() - 1
        beads ^= 1 << b
        if b < r:
            break
        t = b - r
        if (mask >> t) & 1:
            continue
        sub = _chi(_canon(mask ^ (1 << b) ^ (1 << t)), rest)
        if bin((mask >> (t + 1)) & between).count("1") & 1:
            total -= sub
        else:
            total += sub
    _memo[key] = total
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Character of the irrep ``lam`` on the class of cycle type ``mu``."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _chi(_mask(lam), tuple(sorted(mu, reverse=True)))


def clear_memo() -> None:
    _memo.clear()


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE_DIR))


def _key(lam: Sequence[int], mu: Sequence[int]) -> str:
    return ",".join(map(str, lam)) + "|" + ",".join(map(str, mu))


def _unkey(key: str) -> Tuple[Partition, Partition]:
    a, b = key.split("|")
    conv = lambda s: tuple(int(x) for x in s.split(",") if x)  # noqa: E731
    return conv(a), conv(b)


class CharacterCache:
    """Table of exact character values for S_n, optionally backed by a JSON file.

    One file per ``n`` (``chars-n<n>.json``) maps ``"irrep|class"`` to a decimal
    integer string.
    """

    def __init__(self, n: int, directory: Optional[os.PathLike] = None):
        self.n = n
        self.directory = Path(directory) if directory is not None else cache_dir()
        self.table: Dict[Tuple[Partition, Partition], int] = {}
        self._lock = threading.Lock()

    @property
    def path(self) -> Path:
        return self.directory / f"chars-n{self.n}.json"

    def __len__(self) -> int:
        return len(self.table)

    def character(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        key = (tuple(lam), tuple(mu))
        val = self.table.get(key)
        if val is None:
            val = mn_character(lam, mu)
            self.table[key] = val
        return val

    def row(self, lam: Sequence[int]) -> Dict[Partition, int]:
        return {mu: self.character(lam, mu) for mu in partitions(self.n)}

    def load(self) -> "CharacterCache":
        if self.path.exists():
            data = json.loads(self.path.read_text())
            if data.get("version") != CACHE_VERSION or data.get("n") != self.n:
                raise ValueError(f"incompatible cache file {self.path}")
            for k, v in data["entries"].items():
                self.table[_unkey(k)] = int(v)
        return self

    def save(self) -> Path:
        with self._lock:
            self.directory.mkdir(parents=True, exist_ok=True)
            payload = {
                "version": CACHE_VERSION,
                "n": self.n,
                "order": "reverse-lexicographic",
                "entries": {_key(l, m): str(v) for (l, m), v in sorted(
                    self.table.items(), key=lambda kv: _key(*kv[0]))},
            }
            tmp = self.path.with_suffix(".tmp")
            tmp.write_text(json.dumps(payload, indent=0))
            tmp.replace(self.path)
        return self.path

    def clear(self) -> None:
        self.table.clear()
        if self.path.exists():
            self.path.unlink()


_caches: Dict[Tuple[int, Path], CharacterCache] = {}


def get_cache(n: int) -> CharacterCache:
    """Process-wide cache for degree ``n``, preloaded from disk when a file exists."""
    key = (n, cache_dir().resolve())
    if key not in _caches:
        _caches[key] = CharacterCache(n).load()
    return _caches[key]


def kronecker(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
              cache: Optional[CharacterCache] = None) -> int:
    """Kronecker coefficient g(lam, mu, nu) by the class sum.

    Only the three needed character values per class are computed; the full
    character table is never built.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("partitions must have equal size")
    cache = cache if cache is not None else get_cache(n)
    total = 0
    for cls in partitions(n):
        a = cache.character(lam, cls)
        if a == 0:
            continue
        b = cache.character(mu, cls)
        if b == 0:
            continue
        total += class_size(cls) * a * b * cache.character(nu, cls)
    g, rem = divmod(total, factorial(n))
    if rem:
        raise ArithmeticError("class sum not divisible by n!")
    return g


def character_table(n: int) -> Dict[Partition, Dict[Partition, int]]:
    return {lam: {mu: mn_character(lam, mu) for mu in partitions(n)}
            for lam in partitions(n)}


def inner_product(row_a: Dict[Partition, int], row_b: Dict[Partition, int]) -> int:
    """Unnormalized class sum  sum_C |C| chi_a(C) chi_b(C)."""
    return sum(class_size(c) * row_a[c] * row_b[c] for c in row_a)


def rows_needed(n: int) -> Iterable[Partition]:
    """Irrep labels whose rows the holism certificates at degree ``n`` use."""
    out = []
    for j in (1, 2, 3):
        if 9 * j == n:
            out += [born_rep_partition(j, 9), pad((), 3, n)]
    return out
