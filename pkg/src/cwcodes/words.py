"""Words over Z_q and weight-class iteration.

Binary words are packed into a Python int read as a binary numeral: the
symbol at index 0 (leftmost when rendered) is the most significant bit.
Integer order on packed words is therefore colexicographic order on their
supports, which is the canonical tie-break order used by the sweeps.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

MAX_LENGTH = 128
MAX_ALPHABET = 255


@dataclass(frozen=True, order=False)
class Word:
    """A length-``n`` word over ``Z_q``.

    For ``q == 2`` ``data`` is the packed int; otherwise it is a tuple of
    symbols.  Use :meth:`binary`, :meth:`from_symbols` or :meth:`parse`
    rather than the raw constructor.
    """

    n: int
    q: int
    data: int | tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_LENGTH:
            raise ValueError(f"length must be in 1..{MAX_LENGTH}, got {self.n}")
        if not 2 <= self.q <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 2..{MAX_ALPHABET}, got {self.q}")
        if self.q == 2:
            if not isinstance(self.data, int) or not 0 <= self.data < (1 << self.n):
                raise ValueError("binary word data must be an int below 2^n")
        else:
            if len(self.data) != self.n:
                raise ValueError(f"expected {self.n} symbols, got {len(self.data)}")
            bad = [s for s in self.data if not 0 <= s < self.q]
            if bad:
                raise ValueError(f"symbol {bad[0]} outside Z_{self.q}")

    @classmethod
    def binary(cls, n: int, bits: int) -> Word:
        return cls(n, 2, bits)

    @classmethod
    def zero(cls, n: int, q: int = 2) -> Word:
        return cls(n, 2, 0) if q == 2 else cls(n, q, (0,) * n)

    @classmethod
    def from_symbols(cls, symbols, q: int = 2) -> Word:
        symbols = tuple(int(s) for s in symbols)
        if q != 2:
            return cls(len(symbols), q, symbols)
        bits = 0
        for s in symbols:
            if s not in (0, 1):
                raise ValueError(f"symbol {s} outside Z_2")
            bits = (bits << 1) | s
        return cls(len(symbols), 2, bits)

    @classmethod
    def parse(cls, text: str, q: int = 2) -> Word:
        """Parse contiguous decimal digits, index 0 leftmost (e.g. ``"10110"``)."""
        text = text.strip()
        if not text or not text.isdigit():
            raise ValueError(f"not a word: {text!r}")
        return cls.from_symbols((int(ch) for ch in text), q)

    @property
    def symbols(self) -> tuple[int, ...]:
        if self.q == 2:
            return tuple((self.data >> (self.n - 1 - i)) & 1 for i in range(self.n))
        return self.data

    def __str__(self) -> str:
        if self.q == 2:
            return format(self.data, f"0{self.n}b")
        if self.q > 10:
            raise ValueError("digit rendering needs q <= 10")
        return "".join(str(s) for s in self.data)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, q={self.q})" if self.q <= 10 else f"Word({self.data}, q={self.q})"


def _check_compatible(u: Word, v: Word) -> None:
    if u.n != v.n or u.q != v.q:
        raise ValueError(f"incompatible words: (n={u.n}, q={u.q}) vs (n={v.n}, q={v.q})")


def weight(u: Word) -> int:
    if u.q == 2:
        return u.data.bit_count()
    return sum(1 for s in u.data if s)


def distance(u: Word, v: Word) -> int:
    _check_compatible(u, v)
    if u.q == 2:
        return (u.data ^ v.data).bit_count()
    return sum(1 for a, b in zip(u.data, v.data) if a != b)


def add(u: Word, v: Word) -> Word:
    _check_compatible(u, v)
    if u.q == 2:
        return Word(u.n, 2, u.data ^ v.data)
    return Word(u.n, u.q, tuple((a + b) % u.q for a, b in zip(u.data, v.data)))


def negate(u: Word) -> Word:
    if u.q == 2:
        return u
    return Word(u.n, u.q, tuple((-a) % u.q for a in u.data))


def is_binary_valued(u: Word) -> bool:
    return u.q == 2 or all(s <= 1 for s in u.data)


def to_binary(u: Word) -> Word:
    """Reinterpret a binary-valued word over ``Z_q`` as a word over ``Z_2``."""
    if u.q == 2:
        return u
    if not is_binary_valued(u):
        raise ValueError(f"{u!r} is not binary-valued")
    return Word.from_symbols(u.data)


def next_combination(v: int) -> int:
    """Colexicographic successor of a nonzero bit pattern with the same popcount."""
    t = v | (v - 1)
    return (t + 1) | (((~t & -~t) - 1) >> ((v & -v).bit_length()))


def next_in_weight_class(u: Word) -> Word | None:
    """Next binary word of the same length and weight, or ``None`` at the end."""
    if not is_binary_valued(u):
        raise ValueError("weight-class iteration needs a binary-valued word")
    u = to_binary(u)
    if u.data == 0:
        return None
    nxt = next_combination(u.data)
    if nxt >> u.n:
        return None
    return Word(u.n, 2, nxt)


def weight_class(n: int, w: int) -> Iterator[Word]:
    """All binary words of length ``n`` and weight ``w`` in colex order."""
    if not 0 <= w <= n:
        raise ValueError(f"weight must be in 0..{n}, got {w}")
    word: Word | None = Word(n, 2, (1 << w) - 1)
    while word is not None:
        yield word
        word = next_in_weight_class(word)
