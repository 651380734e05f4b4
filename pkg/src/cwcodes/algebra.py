"""GF(2^m) arithmetic and BCH generator polynomials.

Field elements are ints in ``[0, 2^m)``; bit ``i`` is the coefficient of
``alpha^i``.  Binary polynomials (:class:`Poly2`) use the same convention on
their coefficient mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

# One primitive polynomial per degree, fixed so generated codes are reproducible.
PRIMITIVE_POLYS: dict[int, int] = {
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
    7: 0b10000011,  # x^7 + x + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,  # x^9 + x^4 + 1
    10: 0b10000001001,  # x^10 + x^3 + 1
    11: 0b100000000101,  # x^11 + x^2 + 1
    12: 0b1000001010011,  # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,  # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,  # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,  # x^15 + x + 1
    16: 0b10001000000001011,  # x^16 + x^12 + x^3 + x + 1
}


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) coefficient masks."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


@dataclass(frozen=True)
class Poly2:
    """Polynomial over GF(2); ``mask`` bit ``i`` is the coefficient of ``x^i``."""

    mask: int

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return self.mask.bit_length() - 1

    def coefficients(self) -> list[int]:
        return [(self.mask >> i) & 1 for i in range(self.degree + 1)]

    def __mul__(self, other: Poly2) -> Poly2:
        return Poly2(clmul(self.mask, other.mask))

    def __divmod__(self, other: Poly2) -> tuple[Poly2, Poly2]:
        q, r = poly_divmod(self.mask, other.mask)
        return Poly2(q), Poly2(r)

    def __mod__(self, other: Poly2) -> Poly2:
        return divmod(self, other)[1]

    def __str__(self) -> str:
        if self.mask == 0:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.mask >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldGF2m:
    """The field GF(2^m) built on a primitive modulus.

    The constructor checks that ``alpha = x`` has multiplicative order
    exactly ``2^m - 1``, which also rules out reducible moduli.
    """

    m: int
    modulus: int

    def __post_init__(self):
        if not 2 <= self.m <= 16:
            raise ValueError(f"extension degree must be in 2..16, got {self.m}")
        if self.modulus.bit_length() - 1 != self.m:
            raise ValueError(f"modulus {self.modulus:#b} does not have degree {self.m}")
        order = self.order
        if self.pow(2, order) != 1:
            raise ValueError(f"modulus {self.modulus:#b} is not irreducible")
        for p in _prime_factors(order):
            if self.pow(2, order // p) == 1:
                raise ValueError(f"modulus {self.modulus:#b} is not primitive")

    @classmethod
    def default(cls, m: int) -> FieldGF2m:
        return _default_field(m)

    @property
    def order(self) -> int:
        """Size of the multiplicative group, ``2^m - 1``."""
        return (1 << self.m) - 1

    def mul(self, a: int, b: int) -> int:
        return poly_divmod(clmul(a, b), self.modulus)[1]

    def pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    @cached_property
    def _exp_table(self) -> list[int]:
        table, x = [], 1
        for _ in range(self.order):
            table.append(x)
            x = self.mul(x, 2)
        return table

    def alpha_pow(self, e: int) -> int:
        """``alpha^e`` for any integer ``e`` (exponent taken mod ``2^m - 1``)."""
        return self._exp_table[e % self.order]

    def evaluate(self, poly: Poly2, x: int) -> int:
        acc = 0
        for i in range(poly.degree, -1, -1):
            acc = self.mul(acc, x) ^ ((poly.mask >> i) & 1)
        return acc


@lru_cache(maxsize=None)
def _default_field(m: int) -> FieldGF2m:
    if m not in PRIMITIVE_POLYS:
        raise ValueError(f"no built-in primitive polynomial for m={m}")
    return FieldGF2m(m, PRIMITIVE_POLYS[m])


def gf_mul(field: FieldGF2m, a: int, b: int) -> int:
    return field.mul(a, b)


def cyclotomic_cosets(n: int) -> list[list[int]]:
    """Partition ``Z_n`` into orbits of ``s -> 2s mod n``, for ``n = 2^m - 1``.

    Cosets are listed by their least element and each is sorted in orbit order
    starting from it.
    """
    if n < 1 or (n + 1) & n:
        raise ValueError(f"n must have the form 2^m - 1, got {n}")
    seen = [False] * n
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        orbit, x = [], s
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = (2 * x) % n
        cosets.append(orbit)
    return cosets


def minimal_polynomial(field: FieldGF2m, e: int) -> Poly2:
    """Minimal polynomial of ``alpha^e`` over GF(2)."""
    n = field.order
    if not 0 <= e < n:
        raise ValueError(f"exponent must be in 0..{n - 1}, got {e}")
    orbit, x = [], e
    while True:
        orbit.append(x)
        x = (2 * x) % n
        if x == e:
            break
    # coefficients live in GF(2^m) until the product is complete
    coeffs = [1]
    for j in orbit:
        root = field.alpha_pow(j)
        shifted = [0] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] ^= field.mul(c, root)
        coeffs = shifted
    mask = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise ArithmeticError("minimal polynomial has a non-binary coefficient")
        mask |= c << i
    return Poly2(mask)


def bch_generator(m: int, delta: int, field: FieldGF2m | None = None) -> Poly2:
    """Generator polynomial of the narrow-sense binary BCH code.

    This is the lcm of the minimal polynomials of ``alpha^1 .. alpha^(delta-1)``;
    ``delta = 1`` gives the constant polynomial 1 (the full space).
    """
    field = field or FieldGF2m.default(m)
    n = field.order
    if not 1 <= delta <= n:
        raise ValueError(f"designed distance must be in 1..{n}, got {delta}")
    g = Poly2(1)
    for coset in cyclotomic_cosets(n):
        if any(1 <= j < delta for j in coset):
            g = g * minimal_polynomial(field, coset[0])
    return g
