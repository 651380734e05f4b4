"""Compiled inner loops for coset sweeps over packed binary words (n <= 64)."""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.extending import intrinsic


@intrinsic
def _ctpop(typingctx, x):
    if not isinstance(x, types.Integer):
        return None

    def codegen(context, builder, sig, args):
        (val,) = args
        return builder.ctpop(val)

    return x(x), codegen


@njit(cache=True, inline="always")
def _deposit(t, free_bits):
    u = np.uint64(0)
    j = 0
    while t:
        if t & 1:
            u |= free_bits[j]
        t >>= 1
        j += 1
    return u


@njit(cache=True, inline="always")
def _score(u, codewords, hist, best_fixed, rep_fixed, best_ext, rep_ext, n):
    hist[:] = 0
    for c in codewords:
        hist[_ctpop(u ^ c)] += 1
    for w in range(n + 1):
        h = hist[w]
        if h > best_fixed[w] or (h == best_fixed[w] and u < rep_fixed[w]):
            best_fixed[w] = h
            rep_fixed[w] = u
    for w in range(1, n + 1):
        h = hist[w - 1] + hist[w]
        if h > best_ext[w] or (h == best_ext[w] and u < rep_ext[w]):
            best_ext[w] = h
            rep_ext[w] = u


def _init(n):
    best_fixed = np.full(n + 1, -1, dtype=np.int64)
    rep_fixed = np.zeros(n + 1, dtype=np.uint64)
    best_ext = np.full(n + 1, -1, dtype=np.int64)
    rep_ext = np.zeros(n + 1, dtype=np.uint64)
    return best_fixed, rep_fixed, best_ext, rep_ext


@njit(cache=True, nogil=True)
def _sweep_range(codewords, free_bits, start, stop, n, best_fixed, rep_fixed, best_ext, rep_ext):
    hist = np.zeros(n + 1, dtype=np.int64)
    for t in range(start, stop):
        u = _deposit(np.uint64(t), free_bits)
        _score(u, codewords, hist, best_fixed, rep_fixed, best_ext, rep_ext, n)


@njit(cache=True, nogil=True)
def _sweep_list(codewords, reps, n, best_fixed, rep_fixed, best_ext, rep_ext):
    hist = np.zeros(n + 1, dtype=np.int64)
    for u in reps:
        _score(u, codewords, hist, best_fixed, rep_fixed, best_ext, rep_ext, n)


@njit(cache=True, nogil=True)
def _histogram_sum_range(codewords, free_bits, start, stop, n):
    total = np.zeros(n + 1, dtype=np.int64)
    for t in range(start, stop):
        u = _deposit(np.uint64(t), free_bits)
        for c in codewords:
            total[_ctpop(u ^ c)] += 1
    return total


def sweep_range(codewords, free_bits, start, stop, n):
    """Best per-weight coset counts over transversal indices ``[start, stop)``.

    Returns ``(best_fixed, rep_fixed, best_ext, rep_ext)``; ties keep the
    numerically least representative.  ``best_ext[w]`` scores weights
    ``w - 1`` and ``w`` together.
    """
    out = _init(n)
    _sweep_range(codewords, free_bits, np.uint64(start), np.uint64(stop), n, *out)
    return out


def sweep_list(codewords, reps, n):
    out = _init(n)
    _sweep_list(codewords, reps, n, *out)
    return out


def histogram_sum_range(codewords, free_bits, start, stop, n):
    return _histogram_sum_range(codewords, free_bits, np.uint64(start), np.uint64(stop), n)
