"""Coset sweeps, averaging bounds and constant-weight code extraction.

A translate ``u + C`` of an ``(n, d)_q`` code meets the Johnson space
``J^n(w)`` in a binary constant-weight code of distance at least
``target_distance(d)``.  :func:`sweep` finds the translates maximizing that
intersection (``mode="fixed"``) or the intersection with
``J^n(w-1) | J^n(w)`` (``mode="extend"``, one extra coordinate restores
constant weight).  :func:`avg_bound` and :func:`avg_bound_extended` give the
guaranteed average over all translates.
"""

from __future__ import annotations

import csv
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from cwcodes import _kernels
from cwcodes.codebook import Code, ExplicitCode, LinearCode, make_explicit
from cwcodes.words import Word, add, is_binary_valued, to_binary, weight

log = logging.getLogger(__name__)

Mode = Literal["fixed", "extend"]
MODES: tuple[str, ...] = ("fixed", "extend")

#: Default cap on codeword visits (cosets x code size) for an exhaustive sweep.
DEFAULT_WORK_BUDGET = 1 << 36
#: Number of transversal ranges; fixed so results do not depend on thread count.
N_CHUNKS = 64


class InfeasibleSweep(ValueError):
    """Exhaustive sweep would exceed the work budget."""


def target_distance(d: int) -> int:
    """Even distance ``2 * floor((d + 1) / 2)`` guaranteed inside a Johnson space."""
    if d < 1:
        raise ValueError(f"distance must be positive, got {d}")
    return 2 * ((d + 1) // 2)


def ceil_div(a: int, b: int) -> int:
    if a < 0 or b <= 0:
        raise ValueError("ceil_div needs a >= 0 and b > 0")
    return (a + b - 1) // b


# -- histograms ------------------------------------------------------------


@dataclass(frozen=True)
class CosetHistogram:
    """``counts[w]`` = number of binary-valued weight-``w`` words in ``u + C``."""

    representative: Word
    counts: tuple[int, ...]

    def score(self, w: int, mode: Mode = "fixed") -> int:
        if mode == "fixed":
            return self.counts[w]
        return self.counts[w - 1] + self.counts[w]


def _binary_words(c: Code) -> np.ndarray | list[int]:
    if isinstance(c, LinearCode):
        return c.codeword_array if c.n <= 64 else c.codeword_ints()
    if c.n <= 64:
        return np.array([w.data for w in c.words], dtype=np.uint64)
    return [w.data for w in c.words]


def _check_rep(c: Code, u: Word) -> None:
    if u.n != c.n or u.q != c.q:
        raise ValueError(f"representative has (n={u.n}, q={u.q}), code has (n={c.n}, q={c.q})")


def coset_histogram(c: Code, u: Word) -> CosetHistogram:
    _check_rep(c, u)
    n = c.n
    if c.q == 2:
        words = _binary_words(c)
        if isinstance(words, np.ndarray):
            counts = np.bincount(np.bitwise_count(words ^ np.uint64(u.data)), minlength=n + 1)
        else:
            counts = np.bincount([(x ^ u.data).bit_count() for x in words], minlength=n + 1)
        return CosetHistogram(u, tuple(int(x) for x in counts))
    counts = [0] * (n + 1)
    for x in c.words:
        y = add(u, x)
        if is_binary_valued(y):
            counts[weight(y)] += 1
    return CosetHistogram(u, tuple(counts))


# -- sweeps ----------------------------------------------------------------


@dataclass(frozen=True)
class SweepEntry:
    w: int
    count: int
    representative: Word
    exhaustive: bool
    cosets_examined: int


@dataclass
class SweepReport:
    code_id: str
    n: int
    mode: str
    entries: dict[int, SweepEntry]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def exhaustive(self) -> bool:
        return all(e.exhaustive for e in self.entries.values())

    def counts(self) -> dict[int, int]:
        return {w: e.count for w, e in self.entries.items()}

    def csv_rows(self) -> list[list]:
        return [
            [self.code_id, self.mode, e.w, e.count, str(e.representative),
             str(e.exhaustive).lower(), e.cosets_examined]
            for e in sorted(self.entries.values(), key=lambda e: e.w)
        ]


SWEEP_CSV_HEADER = ["code_id", "mode", "w", "count", "representative", "exhaustive", "cosets_examined"]


def write_sweep_csv(reports: Iterable[SweepReport], fh, header: bool = True) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    if header:
        writer.writerow(SWEEP_CSV_HEADER)
    for r in reports:
        writer.writerows(r.csv_rows())


def _check_weights(weights: Iterable[int], n: int) -> list[int]:
    weights = sorted(set(weights))
    if not weights:
        raise ValueError("no target weights given")
    bad = [w for w in weights if not 0 < w < n]
    if bad:
        raise ValueError(f"weights {bad} outside 0 < w < n = {n} (propagation theorems need 0 < w < n)")
    return weights


def _merge(results, n):
    best_fixed, rep_fixed, best_ext, rep_ext = (np.array(a) for a in results[0])
    for bf, rf, be, re_ in results[1:]:
        for best, rep, b, r in ((best_fixed, rep_fixed, bf, rf), (best_ext, rep_ext, be, re_)):
            better = (b > best) | ((b == best) & (r < rep))
            best[better] = b[better]
            rep[better] = r[better]
    return best_fixed, rep_fixed, best_ext, rep_ext


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def _binary_sweep(c: Code, strategy: str, budget: int | None, seed: int,
                  threads: int, work_budget: int):
    """Run the kernel; returns merged arrays, cosets examined, exhaustive flag."""
    n = c.n
    if isinstance(c, LinearCode):
        free = c.free_positions
    else:
        free = tuple(range(n))
    # least significant free bit first, so transversal index order is numeric order
    free_bits = np.array([1 << (n - 1 - p) for p in reversed(free)], dtype=np.uint64)
    size = c.size
    n_cosets = 1 << len(free)
    if size > work_budget or (strategy == "exhaustive" and n_cosets * size > work_budget):
        raise InfeasibleSweep(
            f"exhaustive sweep needs {n_cosets} cosets x {size} words > budget {work_budget}; "
            "use sampling instead"
        )
    words = _binary_words(c)
    if strategy == "exhaustive":
        ranges = _chunks(n_cosets, N_CHUNKS)
        jobs = [lambda s=s, e=e: _kernels.sweep_range(words, free_bits, s, e, n) for s, e in ranges]
        examined, exhaustive = n_cosets, True
    elif strategy == "sample":
        if not budget or budget < 1:
            raise ValueError("sampling needs a positive budget")
        rng = np.random.default_rng(seed)
        idx = rng.integers(0, n_cosets, size=budget, dtype=np.uint64)
        reps = np.array([_deposit(int(t), free_bits) for t in idx], dtype=np.uint64)
        jobs = [lambda r=r: _kernels.sweep_list(words, r, n) for r in np.array_split(reps, N_CHUNKS) if len(r)]
        examined, exhaustive = budget, False
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(lambda job: job(), jobs))
    else:
        results = [job() for job in jobs]
    return _merge(results, n), examined, exhaustive


def _deposit(t: int, free_bits) -> int:
    u, j = 0, 0
    while t:
        if t & 1:
            u |= int(free_bits[j])
        t >>= 1
        j += 1
    return u


def _python_sweep(c: Code, strategy: str, budget: int | None, seed: int, work_budget: int):
    """Fallback for q > 2 or n > 64: per-translate histograms in Python."""
    n, q = c.n, c.q
    if isinstance(c, LinearCode):
        free = c.free_positions
        n_cosets = 1 << len(free)

        def rep(t: int) -> Word:
            u = 0
            for j, p in enumerate(reversed(free)):
                if (t >> j) & 1:
                    u |= 1 << (n - 1 - p)
            return Word(n, 2, u)
    else:
        n_cosets = q ** n

        def rep(t: int) -> Word:
            if q == 2:
                return Word(n, 2, t)
            digits = []
            for _ in range(n):
                t, r = divmod(t, q)
                digits.append(r)
            return Word(n, q, tuple(reversed(digits)))

    if c.size > work_budget:
        raise InfeasibleSweep(f"code has {c.size} words, more than the budget {work_budget}")
    if strategy == "exhaustive":
        if n_cosets * c.size > work_budget:
            raise InfeasibleSweep(
                f"exhaustive sweep needs {n_cosets} translates x {c.size} words > budget {work_budget}; "
                "use sampling instead"
            )
        indices: Iterable[int] = range(n_cosets)
        examined, exhaustive = n_cosets, True
    elif strategy == "sample":
        if not budget or budget < 1:
            raise ValueError("sampling needs a positive budget")
        rng = np.random.default_rng(seed)
        indices = [int(rng.integers(0, n_cosets)) if n_cosets < 2**63 else
                   int.from_bytes(rng.bytes(16), "big") % n_cosets for _ in range(budget)]
        examined, exhaustive = budget, False
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    best_fixed = np.full(n + 1, -1, dtype=np.int64)
    best_ext = np.full(n + 1, -1, dtype=np.int64)
    rep_fixed: list = [None] * (n + 1)
    rep_ext: list = [None] * (n + 1)

    def key(u: Word):
        return u.data

    for t in indices:
        u = rep(t)
        counts = coset_histogram(c, u).counts
        for w in range(n + 1):
            h = counts[w]
            if h > best_fixed[w] or (h == best_fixed[w] and key(u) < key(rep_fixed[w])):
                best_fixed[w], rep_fixed[w] = h, u
            if w and (h + counts[w - 1] > best_ext[w] or
                      (h + counts[w - 1] == best_ext[w] and key(u) < key(rep_ext[w]))):
                best_ext[w], rep_ext[w] = h + counts[w - 1], u
    return (best_fixed, rep_fixed, best_ext, rep_ext), examined, exhaustive


def sweep_modes(
    c: Code,
    weights: Iterable[int],
    modes: Iterable[str] = MODES,
    strategy: str = "exhaustive",
    budget: int | None = None,
    seed: int = 0,
    threads: int = 1,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> dict[str, SweepReport]:
    """One pass over the cosets, scored for every weight and mode requested."""
    weights = _check_weights(weights, c.n)
    modes = list(modes)
    for m in modes:
        if m not in MODES:
            raise ValueError(f"unknown mode {m!r}")
    start = time.perf_counter()
    if c.q == 2 and c.n <= 64:
        arrays, examined, exhaustive = _binary_sweep(c, strategy, budget, seed, threads, work_budget)
        bf, rf, be, re_ = arrays
        rf = [Word(c.n, 2, int(x)) for x in rf]
        re_ = [Word(c.n, 2, int(x)) for x in re_]
    else:
        (bf, rf, be, re_), examined, exhaustive = _python_sweep(c, strategy, budget, seed, work_budget)
    elapsed = time.perf_counter() - start
    log.info("swept %s: %d cosets in %.2fs", c.spec.code_id, examined, elapsed)
    reports = {}
    for m in modes:
        best, reps = (bf, rf) if m == "fixed" else (be, re_)
        entries = {
            w: SweepEntry(w, int(best[w]), reps[w], exhaustive, examined) for w in weights
        }
        reports[m] = SweepReport(c.spec.code_id, c.n, m, entries, elapsed)
    return reports


def sweep(
    c: Code,
    weights: Iterable[int],
    mode: Mode = "fixed",
    strategy: str = "exhaustive",
    budget: int | None = None,
    seed: int = 0,
    threads: int = 1,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> SweepReport:
    """Best translate of ``c`` for each target weight.

    For binary linear codes the exhaustive strategy visits one representative
    per coset (words vanishing on the pivot columns); explicit codes visit
    all ``q^n`` translates.  ``strategy="sample"`` scores ``budget`` random
    representatives drawn from ``seed`` instead.  Ties go to the numerically
    (colexicographically) least representative.
    """
    return sweep_modes(c, weights, [mode], strategy, budget, seed, threads, work_budget)[mode]


# -- bounds ----------------------------------------------------------------


@dataclass(frozen=True)
class BoundResult:
    """Exact averaging lower bound on ``A(length, d_prime, w)``.

    ``n`` is the length of the source code; for ``thm3ii`` the constant-weight
    code has length ``n + 1``.
    """

    theorem: str
    n: int
    q: int
    w: int
    size: int
    d: int | None
    d_prime: int | None
    value: int

    @property
    def length(self) -> int:
        return self.n + 1 if self.theorem == "thm3ii" else self.n

    def csv_row(self) -> list:
        return [self.theorem, self.length, self.q, self.w,
                "" if self.d_prime is None else self.d_prime, self.value]


BOUND_CSV_HEADER = ["theorem", "n", "q", "w", "d_prime", "value"]


def _check_bound_args(n: int, q: int, size: int) -> None:
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    if not 1 <= size <= q ** n:
        raise ValueError(f"code size must be in 1..q^n, got {size}")


def avg_bound(n: int, q: int, size: int, w: int, d: int | None = None) -> BoundResult:
    """``ceil(size * C(n, w) / q^n)``: some translate holds at least this many weight-``w`` words."""
    _check_bound_args(n, q, size)
    if not 0 < w < n:
        raise ValueError(f"need 0 < w < n, got w={w}, n={n}")
    value = ceil_div(size * math.comb(n, w), q ** n)
    return BoundResult("thm2", n, q, w, size, d, d and target_distance(d), value)


def avg_bound_extended(n: int, q: int, size: int, w: int, d: int | None = None) -> BoundResult:
    """``ceil(size * (C(n, w-1) + C(n, w)) / q^n)``, a bound on ``A(n+1, d', w)``."""
    _check_bound_args(n, q, size)
    if not 1 <= w <= n:
        raise ValueError(f"need 1 <= w <= n, got w={w}, n={n}")
    value = ceil_div(size * (math.comb(n, w - 1) + math.comb(n, w)), q ** n)
    return BoundResult("thm3ii", n, q, w, size, d, d and target_distance(d), value)


def write_bound_csv(results: Iterable[BoundResult], fh, header: bool = True) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    if header:
        writer.writerow(BOUND_CSV_HEADER)
    writer.writerows(r.csv_row() for r in results)


# -- extraction ------------------------------------------------------------


def _translate_words(c: Code, u: Word):
    _check_rep(c, u)
    if c.q == 2:
        for x in _binary_words(c):
            yield Word(c.n, 2, int(x) ^ u.data)
    else:
        for x in c.words:
            yield add(u, x)


def extract_fixed(c: Code, u: Word, w: int, d: int | None = None) -> ExplicitCode:
    """The weight-``w`` words of ``u + C`` as a binary constant-weight code.

    ``d`` is the source code's minimum distance (defaults to its design
    distance); the result declares ``target_distance(d)``.
    """
    if not 0 < w < c.n:
        raise ValueError(f"need 0 < w < n, got w={w}, n={c.n}")
    d = target_distance(d or c.spec.design_distance)
    words = sorted(
        (to_binary(y) for y in _translate_words(c, u) if is_binary_valued(y) and weight(y) == w),
        key=lambda y: y.data,
    )
    return make_explicit(words, c.n, 2, min(d, c.n), "extract_fixed",
                         f"{c.spec.code_id}_fixed_w{w}", allow_empty=True, check=False)


def extract_extended(c: Code, u: Word, w: int, d: int | None = None) -> ExplicitCode:
    """Weight ``w - 1`` and ``w`` words of ``u + C``, each padded to weight ``w``.

    The appended last coordinate is 1 for weight ``w - 1`` words and 0 for
    weight ``w`` words, giving a length ``n + 1`` constant-weight code.
    """
    if not 1 <= w <= c.n:
        raise ValueError(f"need 1 <= w <= n, got w={w}, n={c.n}")
    d = target_distance(d or c.spec.design_distance)
    out = []
    for y in _translate_words(c, u):
        if not is_binary_valued(y):
            continue
        y = to_binary(y)
        wt = weight(y)
        if wt == w - 1:
            out.append(Word(c.n + 1, 2, (y.data << 1) | 1))
        elif wt == w:
            out.append(Word(c.n + 1, 2, y.data << 1))
    out.sort(key=lambda y: y.data)
    return make_explicit(out, c.n + 1, 2, min(d, c.n + 1), "extract_extended",
                         f"{c.spec.code_id}_extend_w{w}", allow_empty=True, check=False)
