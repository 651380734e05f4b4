"""Code objects: construction, transforms, enumeration and file I/O.

Binary words are packed ints (see :mod:`cwcodes.words`), so "the last ``i``
positions" of a word are its ``i`` least significant bits.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace
from functools import cached_property
from pathlib import Path

import numpy as np

from cwcodes.algebra import bch_generator
from cwcodes.words import MAX_LENGTH, Word, distance

log = logging.getLogger(__name__)

#: Largest code for which :class:`ExplicitCode` checks distances on construction.
EAGER_DISTANCE_CHECK = 512
DEFAULT_ENUMERATION_BUDGET = 1 << 26


class CodeFileError(ValueError):
    """A generator-matrix or explicit-code file is malformed."""

    def __init__(self, path, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


@dataclass(frozen=True)
class CodeSpec:
    n: int
    q: int
    size: int
    design_distance: int
    family: str
    code_id: str = ""

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("a code has at least one word")
        if not 1 <= self.design_distance <= max(self.n, 1):
            raise ValueError(f"design distance {self.design_distance} outside 1..{self.n}")
        if not self.code_id:
            object.__setattr__(self, "code_id", self.family)


@dataclass(frozen=True)
class LinearCode:
    """Binary linear code held as a reduced row echelon generator matrix.

    ``rows[j]`` has a 1 at position ``pivots[j]`` and every other row has a
    0 there.  Positions are string indices (0 = leftmost = MSB).
    """

    spec: CodeSpec
    rows: tuple[int, ...]
    pivots: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def q(self) -> int:
        return 2

    @property
    def size(self) -> int:
        return 1 << self.k

    @property
    def free_positions(self) -> tuple[int, ...]:
        """Non-pivot positions; words supported here form a coset transversal."""
        pivots = set(self.pivots)
        return tuple(p for p in range(self.n) if p not in pivots)

    @cached_property
    def codeword_array(self) -> np.ndarray:
        """All codewords in reflected-binary message order as ``uint64``.

        Consecutive entries differ by exactly one generator row.
        """
        if self.n > 64:
            raise ValueError("packed codeword arrays need n <= 64")
        words = np.zeros(1, dtype=np.uint64)
        for row in self.rows:
            words = np.concatenate([words, words[::-1] ^ np.uint64(row)])
        words.setflags(write=False)
        return words

    def codeword_ints(self) -> list[int]:
        if self.n <= 64:
            return [int(x) for x in self.codeword_array]
        return [w.data for w in enumerate_codewords(self)]

    def contains(self, word: Word) -> bool:
        if word.n != self.n or word.q != 2:
            return False
        x = word.data
        for row, p in zip(self.rows, self.pivots):
            if (x >> (self.n - 1 - p)) & 1:
                x ^= row
        return x == 0

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True)
class ExplicitCode:
    """A code given by its list of words (any alphabet).

    ``distance_checked`` records whether the pairwise distance against
    ``spec.design_distance`` was confirmed at construction; larger lists are
    left for :mod:`cwcodes.verify`.
    """

    spec: CodeSpec
    words: tuple[Word, ...]
    distance_checked: bool = field(default=False, compare=False)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)


Code = LinearCode | ExplicitCode


def _reduce(rows: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Gauss-Jordan elimination scanning positions left to right."""
    rows = [r for r in rows if r]
    reduced: list[int] = []
    pivots: list[int] = []
    for pos in range(n):
        bit = 1 << (n - 1 - pos)
        pick = next((i for i, r in enumerate(rows) if r & bit), None)
        if pick is None:
            continue
        pivot_row = rows.pop(pick)
        rows = [r ^ pivot_row if r & bit else r for r in rows]
        reduced = [r ^ pivot_row if r & bit else r for r in reduced]
        reduced.append(pivot_row)
        pivots.append(pos)
        rows = [r for r in rows if r]
    return reduced, pivots


def linear_from_generator(
    rows: Sequence[Word | int],
    n: int | None = None,
    design_distance: int | None = None,
    family: str = "matrix",
    code_id: str = "",
) -> LinearCode:
    """Row-reduce a binary generator matrix.

    Dependent rows are dropped; the returned code's ``k`` is the rank.  With
    no ``design_distance`` the exact minimum weight is computed.
    """
    if n is None:
        if not rows or not isinstance(rows[0], Word):
            raise ValueError("length n is required for empty or integer rows")
        n = rows[0].n
    if n < 1:
        raise ValueError("zero-length rows")
    if n > MAX_LENGTH:
        raise ValueError(f"length {n} exceeds {MAX_LENGTH}")
    bits = []
    for r in rows:
        if isinstance(r, Word):
            if r.n != n or r.q != 2:
                raise ValueError(f"row {r!r} is not a binary word of length {n}")
            r = r.data
        if not 0 <= r < (1 << n):
            raise ValueError(f"row {r} does not fit in {n} bits")
        bits.append(r)
    reduced, pivots = _reduce(bits, n)
    if len(reduced) < len(bits):
        log.info("generator has rank %d < %d rows", len(reduced), len(bits))
    spec = CodeSpec(n, 2, 1 << len(reduced), design_distance or n, family, code_id)
    code = LinearCode(spec, tuple(reduced), tuple(pivots))
    if design_distance is None:
        d = min_weight_linear(code) if code.k else n
        code = replace(code, spec=replace(spec, design_distance=d))
    return code


def enumerate_codewords(c: LinearCode) -> Iterator[Word]:
    """Yield every codeword once, in reflected-binary message order from 0."""
    x = 0
    yield Word(c.n, 2, 0)
    for i in range(1, 1 << c.k):
        # index of the row flipped between Gray codes i-1 and i
        x ^= c.rows[(i & -i).bit_length() - 1]
        yield Word(c.n, 2, x)


def weight_distribution(c: Code) -> dict[int, int]:
    if isinstance(c, LinearCode) and c.n <= 64:
        counts = np.bincount(np.bitwise_count(c.codeword_array), minlength=c.n + 1)
    else:
        from cwcodes.words import weight

        counts = np.bincount([weight(w) for w in _iter_words(c)], minlength=c.n + 1)
    return {w: int(m) for w, m in enumerate(counts) if m}


def min_weight_linear(c: LinearCode, budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """Exact minimum distance of a binary linear code by full enumeration."""
    if c.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if c.size > budget:
        raise ValueError(f"2^{c.k} codewords exceed the enumeration budget {budget}")
    if c.n <= 64:
        weights = np.bitwise_count(c.codeword_array[1:])
        return int(weights.min())
    return min(w.data.bit_count() for w in enumerate_codewords(c) if w.data)


def bch_code(m: int, delta: int) -> LinearCode:
    """Narrow-sense binary BCH code of length ``2^m - 1``.

    Rows are the shifts ``x^j g(x)``, ``j < k``; the coefficient of ``x^i``
    sits at position ``i``.
    """
    n = (1 << m) - 1
    if n > MAX_LENGTH:
        raise ValueError(f"length 2^{m} - 1 exceeds {MAX_LENGTH}")
    g = bch_generator(m, delta)
    k = n - g.degree
    coeff_word = int(format(g.mask, f"0{n}b")[::-1], 2)
    rows = [coeff_word >> j for j in range(k)]
    return linear_from_generator(
        rows, n, design_distance=delta, family="bch", code_id=f"bch_{m}_{delta}"
    )


def reed_muller_1(m: int) -> LinearCode:
    """First-order Reed-Muller code RM(1, m); position ``p`` is the point ``p``."""
    n = 1 << m
    if m < 1 or n > MAX_LENGTH:
        raise ValueError(f"m must satisfy 1 <= m and 2^m <= {MAX_LENGTH}, got {m}")
    rows = [(1 << n) - 1]
    for j in range(m):
        row = 0
        for p in range(n):
            row = (row << 1) | ((p >> j) & 1)
        rows.append(row)
    return linear_from_generator(
        rows, n, design_distance=n // 2, family="reed_muller_1", code_id=f"rm1_{m}"
    )


def _iter_words(c: Code) -> Iterator[Word]:
    return enumerate_codewords(c) if isinstance(c, LinearCode) else iter(c.words)


def _check_count(c: Code, i: int) -> None:
    if not 1 <= i < c.n:
        raise ValueError(f"position count must be in 1..{c.n - 1}, got {i}")


def puncture(c: Code, i: int) -> Code:
    """Delete the last ``i`` coordinates of every codeword and merge duplicates."""
    if i == 0:
        log.warning("puncture by 0 positions is a no-op")
        return c
    _check_count(c, i)
    n = c.n - i
    d = max(1, c.spec.design_distance - i)
    family = f"punctured({c.spec.family},{i})"
    code_id = f"{c.spec.code_id}_p{i}"
    if isinstance(c, LinearCode):
        return linear_from_generator(
            [r >> i for r in c.rows], n, design_distance=d, family=family, code_id=code_id
        )
    if c.q == 2:
        words = [Word(n, 2, w.data >> i) for w in c.words]
    else:
        words = [Word(n, c.q, w.data[:n]) for w in c.words]
    words = sorted(set(words), key=_word_key)
    return make_explicit(words, n, c.q, d, family, code_id)


def shorten(c: Code, i: int) -> Code:
    """Keep codewords vanishing on the last ``i`` positions, then drop them."""
    if i == 0:
        log.warning("shorten by 0 positions is a no-op")
        return c
    _check_count(c, i)
    n = c.n - i
    d = min(c.spec.design_distance, n)
    family = f"shortened({c.spec.family},{i})"
    code_id = f"{c.spec.code_id}_s{i}"
    if isinstance(c, LinearCode):
        # eliminate on the low i bits; rows left with none of them span the subcode
        low = (1 << i) - 1
        rows = list(c.rows)
        for b in range(i):
            bit = 1 << b
            pick = next((j for j, r in enumerate(rows) if r & bit), None)
            if pick is None:
                continue
            pr = rows.pop(pick)
            rows = [r ^ pr if r & bit else r for r in rows]
        kept = [r >> i for r in rows if not r & low]
        return linear_from_generator(kept, n, design_distance=d, family=family, code_id=code_id)
    if c.q == 2:
        words = [Word(n, 2, w.data >> i) for w in c.words if not w.data & ((1 << i) - 1)]
    else:
        words = [Word(n, c.q, w.data[:n]) for w in c.words if not any(w.data[n:])]
    if not words:
        raise ValueError("shortening leaves no codewords")
    return make_explicit(words, n, c.q, d, family, code_id)


def _word_key(w: Word):
    return w.data


def make_explicit(
    words: Sequence[Word],
    n: int,
    q: int,
    d: int,
    family: str = "explicit",
    code_id: str = "",
    allow_empty: bool = False,
    check: bool = True,
) -> ExplicitCode:
    """Validate and wrap a word list.

    Raises on mixed ``(n, q)`` or duplicates.  With ``check``, lists of up to
    ``EAGER_DISTANCE_CHECK`` words are also scanned for a pair closer than
    ``d``.
    """
    words = tuple(words)
    for w in words:
        if w.n != n or w.q != q:
            raise ValueError(f"word {w!r} does not have n={n}, q={q}")
    if len(set(words)) != len(words):
        raise ValueError("duplicate codewords")
    if not words and not allow_empty:
        raise ValueError("empty code")
    checked = False
    if check and len(words) <= EAGER_DISTANCE_CHECK:
        for a in range(len(words)):
            for b in range(a + 1, len(words)):
                if distance(words[a], words[b]) < d:
                    raise ValueError(
                        f"{words[a]!r} and {words[b]!r} are closer than {d}"
                    )
        checked = True
    # CodeSpec needs size >= 1; an empty extraction still reports size 0 via len()
    spec = CodeSpec(n, q, max(len(words), 1), d, family, code_id)
    return ExplicitCode(spec, words, distance_checked=checked)


# -- files -----------------------------------------------------------------


def _content_lines(path: Path) -> Iterator[tuple[int, str]]:
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if line and not line.startswith("#"):
                yield lineno, line


def _parse_header(path, lineno: int, line: str) -> tuple[int, int, int, int]:
    fields = line.split()
    if len(fields) != 4 or not all(f.isdigit() for f in fields):
        raise CodeFileError(path, lineno, f"expected four integers in header, got {line!r}")
    return tuple(int(f) for f in fields)


def _parse_row(path, lineno: int, line: str, n: int, q: int) -> Word:
    if len(line) != n:
        raise CodeFileError(path, lineno, f"row has length {len(line)}, expected {n}")
    for col, ch in enumerate(line):
        if not ch.isdigit() or int(ch) >= q:
            raise CodeFileError(path, lineno, f"symbol {ch!r} at column {col} is not in Z_{q}")
    return Word.parse(line, q)


def load_generator_matrix(path, verify_distance: bool = True) -> LinearCode:
    """Read a ``n k q d`` header followed by ``k`` rows of ``n`` digits.

    When ``2^k`` is within the enumeration budget the exact minimum weight
    is checked against the declared ``d``.
    """
    path = Path(path)
    lines = _content_lines(path)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise CodeFileError(path, 0, "missing header") from None
    n, k, q, d = _parse_header(path, lineno, header)
    if q != 2:
        raise CodeFileError(path, lineno, f"generator matrices must be binary, got q={q}")
    if not 1 <= n <= MAX_LENGTH:
        raise CodeFileError(path, lineno, f"length {n} outside 1..{MAX_LENGTH}")
    rows = [_parse_row(path, ln, line, n, q) for ln, line in lines]
    if len(rows) != k:
        raise CodeFileError(path, lineno, f"header declares {k} rows, found {len(rows)}")
    code = linear_from_generator(
        rows, n, design_distance=min(max(d, 1), n), family="matrix_file", code_id=path.stem
    )
    if code.k != k:
        raise CodeFileError(path, lineno, f"rows have rank {code.k}, header declares {k}")
    if verify_distance and code.size <= DEFAULT_ENUMERATION_BUDGET:
        actual = min_weight_linear(code)
        if actual < d:
            raise CodeFileError(path, lineno, f"minimum distance is {actual}, header declares {d}")
    return code


def save_generator_matrix(c: LinearCode, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{c.n} {c.k} 2 {c.spec.design_distance}\n")
        for r in c.rows:
            fh.write(format(r, f"0{c.n}b") + "\n")


def load_explicit_code(path, check_distance: bool = False) -> ExplicitCode:
    """Read a ``n M q d`` header followed by ``M`` word lines."""
    path = Path(path)
    lines = _content_lines(path)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise CodeFileError(path, 0, "missing header") from None
    n, m, q, d = _parse_header(path, lineno, header)
    words = [_parse_row(path, ln, line, n, q) for ln, line in lines]
    if len(words) != m:
        raise CodeFileError(path, lineno, f"header declares {m} words, found {len(words)}")
    if len(set(words)) != len(words):
        raise CodeFileError(path, lineno, "duplicate codewords")
    spec = CodeSpec(n, q, max(m, 1), max(min(d, n), 1), "explicit", path.stem)
    code = ExplicitCode(spec, tuple(words))
    if check_distance:
        code = make_explicit(words, n, q, spec.design_distance, "explicit", path.stem, allow_empty=True)
    return code


def save_explicit_code(c: ExplicitCode, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w") as fh:
        for line in comments:
            fh.write(f"# {line}\n")
        fh.write(f"{c.n} {c.size} {c.q} {c.spec.design_distance}\n")
        for w in c.words:
            fh.write(f"{w}\n")
