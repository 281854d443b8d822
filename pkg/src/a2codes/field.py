"""GF(2^e) arithmetic on bit-packed polynomial coefficients.

An element is an integer in [0, 2^e): bit i is the coefficient of x^i.
With that encoding addition is plain XOR for every extension degree, and
multiplication is carry-less multiplication reduced modulo an irreducible
polynomial of degree e (also given as a packed integer, e.g. x^2+x+1 = 0b111).

The default modulus for each degree is the lexicographically least
irreducible polynomial, i.e. the smallest packed integer with bit e set.
"""

from __future__ import annotations

from typing import Iterator

# Least irreducible polynomial per degree; degrees beyond the table are
# found by scanning (see default_modulus).
_DEFAULT_MODULI = {
    1: 0b10,        # x
    2: 0b111,       # x^2 + x + 1
    3: 0b1011,      # x^3 + x + 1
    4: 0b10011,     # x^4 + x + 1
}

# Full multiplication/inverse tables are built up to this field size.
_TABLE_LIMIT = 256


def poly_degree(bits: int) -> int:
    """Degree of a packed GF(2) polynomial; -1 for the zero polynomial."""
    return bits.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    """Remainder of packed polynomial a modulo m (m nonzero)."""
    dm = poly_degree(m)
    da = poly_degree(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = poly_degree(a)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    """Carry-less product of a and b, reduced modulo m."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
    return poly_mod(acc, m)


def is_irreducible(bits: int) -> bool:
    """Irreducibility over GF(2) by trial division up to half the degree.

    Degree-1 polynomials are irreducible; degree <= 0 is not.
    """
    d = poly_degree(bits)
    if d <= 0:
        return False
    if d == 1:
        return True
    if bits & 1 == 0:
        return False  # divisible by x
    for deg in range(1, d // 2 + 1):
        for g in range(1 << deg, 1 << (deg + 1)):
            if poly_mod(bits, g) == 0:
                return False
    return True


def default_modulus(e: int) -> int:
    """Lexicographically least irreducible polynomial of degree e."""
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    known = _DEFAULT_MODULI.get(e)
    if known is not None:
        return known
    for bits in range(1 << e, 1 << (e + 1)):
        if is_irreducible(bits):
            return bits
    raise AssertionError(f"no irreducible polynomial of degree {e}")  # unreachable


class GF2e:
    """The field GF(q), q = 2^e, with elements encoded as ints in [0, q).

    Instances are immutable and hashable; two instances are equal iff they
    share the extension degree and modulus, so fields can key dataclasses
    and caches.
    """

    def __init__(self, e: int, modulus: int | None = None) -> None:
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if modulus is None:
            modulus = default_modulus(e)
        if poly_degree(modulus) != e:
            raise ValueError(
                f"modulus 0b{modulus:b} has degree {poly_degree(modulus)}, expected {e}"
            )
        if not is_irreducible(modulus):
            raise ValueError(f"modulus 0b{modulus:b} is reducible over GF(2)")
        self.e = e
        self.modulus = modulus
        self.q = 1 << e
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None
        if self.q <= _TABLE_LIMIT:
            table = [[poly_mulmod(a, b, modulus) for b in range(self.q)] for a in range(self.q)]
            self._mul_table = table
            inv = [0] * self.q
            for a in range(1, self.q):
                row = table[a]
                inv[a] = row.index(1)
            self._inv_table = inv

    def __repr__(self) -> str:
        return f"GF2e(e={self.e}, modulus=0b{self.modulus:b})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2e) and (self.e, self.modulus) == (other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.e, self.modulus))

    def check(self, a: int) -> int:
        """Validate that a is a field element; returns it unchanged."""
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        """a + b; coefficientwise XOR (characteristic 2, so also a - b)."""
        self.check(a)
        self.check(b)
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return poly_mulmod(a, b, self.modulus)

    def inv(self, a: int) -> int:
        """Multiplicative inverse; zero has none."""
        self.check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no multiplicative inverse in GF({self.q})")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        """a ** n by square-and-multiply; n must be a nonnegative integer."""
        self.check(a)
        if n < 0:
            raise ValueError(f"exponent must be >= 0, got {n}")
        acc = 1
        base = a
        while n:
            if n & 1:
                acc = poly_mulmod(acc, base, self.modulus)
            base = poly_mulmod(base, base, self.modulus)
            n >>= 1
        return acc

    def elements(self) -> Iterator[int]:
        """All q elements once, in increasing packed-integer order."""
        return iter(range(self.q))
