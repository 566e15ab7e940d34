"""Brute-force enumeration of irreducible words.

Two interchangeable backends count the words of a fixed degree that avoid
every forbidden subword, bucketed by how often a marked letter occurs:

* a numba ``@njit`` loop over all ``k**d`` words (default), and
* a vectorised numpy path over the full ``(k**d, d)`` word table.

Set ``NCREWRITE_NO_NUMBA=1`` (or run without numba installed) to force the
numpy path.  ``BACKEND`` records which one is active.
"""

from __future__ import annotations

import os
from typing import Sequence, Tuple

import numpy as np

NO_NUMBA_ENV = "NCREWRITE_NO_NUMBA"


def _numba_requested() -> bool:
    return os.environ.get(NO_NUMBA_ENV, "").strip().lower() not in ("1", "true", "yes")


try:
    if not _numba_requested():
        raise ImportError("numba disabled by environment")
    from numba import njit
except ImportError:
    njit = None


def pack_patterns(patterns: Sequence[Tuple[int, ...]]) -> Tuple[np.ndarray, np.ndarray]:
    """Pad forbidden words into an int64 matrix plus a length vector."""
    width = max((len(p) for p in patterns), default=1)
    mat = np.full((len(patterns), max(width, 1)), -1, dtype=np.int64)
    lengths = np.zeros(len(patterns), dtype=np.int64)
    for k, p in enumerate(patterns):
        mat[k, : len(p)] = p
        lengths[k] = len(p)
    return mat, lengths


def count_irreducible_numpy(n_letters: int, degree: int, patterns: np.ndarray,
                            lengths: np.ndarray, mark: int) -> np.ndarray:
    hist = np.zeros(degree + 1, dtype=np.int64)
    if degree == 0:
        hist[0] = 1
        return hist
    total = n_letters ** degree
    # row r spells r in base n_letters, most significant letter first
    powers = n_letters ** np.arange(degree - 1, -1, -1, dtype=np.int64)
    words = (np.arange(total, dtype=np.int64)[:, None] // powers) % n_letters
    alive = np.ones(total, dtype=bool)
    for pat, L in zip(patterns, lengths):
        L = int(L)
        if L == 0 or L > degree:
            continue
        for start in range(degree - L + 1):
            hit = np.ones(total, dtype=bool)
            for j in range(L):
                hit &= words[:, start + j] == pat[j]
            alive &= ~hit
    marks = (words[alive] == mark).sum(axis=1)
    np.add.at(hist, marks, 1)
    return hist


def _count_irreducible_loop(n_letters, degree, patterns, lengths, mark):
    hist = np.zeros(degree + 1, dtype=np.int64)
    if degree == 0:
        hist[0] = 1
        return hist
    total = 1
    for _ in range(degree):
        total *= n_letters
    word = np.zeros(degree, dtype=np.int64)
    n_pat = patterns.shape[0]
    for r in range(total):
        x = r
        for pos in range(degree - 1, -1, -1):
            word[pos] = x % n_letters
            x //= n_letters
        ok = True
        for k in range(n_pat):
            L = lengths[k]
            if L == 0 or L > degree:
                continue
            for start in range(degree - L + 1):
                same = True
                for j in range(L):
                    if word[start + j] != patterns[k, j]:
                        same = False
                        break
                if same:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            m = 0
            for pos in range(degree):
                if word[pos] == mark:
                    m += 1
            hist[m] += 1
    return hist


if njit is not None:
    count_irreducible_numba = njit(cache=True)(_count_irreducible_loop)
    BACKEND = "numba"
    count_irreducible = count_irreducible_numba
else:
    count_irreducible_numba = None
    BACKEND = "numpy"
    count_irreducible = count_irreducible_numpy


def irreducible_histogram(n_letters: int, degree: int, patterns: Sequence[Tuple[int, ...]],
                          mark: int = -1) -> np.ndarray:
    """``hist[j]`` = number of irreducible degree-``degree`` words with ``j`` copies of ``mark``."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    mat, lengths = pack_patterns(patterns)
    return count_irreducible(n_letters, degree, mat, lengths, mark)
