"""Bit-exact linear algebra over GF(2) and arithmetic in GF(2^w).

Words and matrix rows are bit-packed into Python ints.  Index 0 is the
leftmost / first-transmitted bit everywhere and maps to bit 0 (the LSB)
of the backing integer.  String renderings put index 0 first.

Lengths are capped at MAX_LEN; the protocol needs n <= 127 and the cap
keeps enumeration oracles honest about their cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionError, UnsupportedSizeError

MAX_LEN = 1024

# Default primitive polynomials for GF(2^w), bit i = coefficient of x^i.
DEFAULT_PRIMITIVE_POLY = {
    2: 0b111,               # x^2 + x + 1
    3: 0b1011,              # x^3 + x + 1
    4: 0b10011,             # x^4 + x + 1
    5: 0b100101,            # x^5 + x^2 + 1
    6: 0b1000011,           # x^6 + x + 1
    7: 0b10001001,          # x^7 + x^3 + 1
    8: 0b100011101,         # x^8 + x^4 + x^3 + x^2 + 1
}


def _check_len(n: int) -> None:
    if not 0 <= n <= MAX_LEN:
        raise UnsupportedSizeError(f"length {n} outside [0, {MAX_LEN}]")


@dataclass(frozen=True)
class BitWord:
    """Immutable fixed-length vector over GF(2).

    ``value`` bit j is the symbol at position j (position 0 first).
    """

    value: int
    length: int

    def __post_init__(self) -> None:
        _check_len(self.length)
        if self.value < 0 or self.value >> self.length:
            raise DimensionError(
                f"value 0x{self.value:x} does not fit in {self.length} bits"
            )

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitWord":
        value = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit symbols must be 0 or 1, got {b!r}")
            value |= b << n
            n += 1
        return cls(value, n)

    @classmethod
    def from_str(cls, s: str) -> "BitWord":
        return cls.from_bits(int(c) for c in s)

    @classmethod
    def zeros(cls, n: int) -> "BitWord":
        return cls(0, n)

    @classmethod
    def from_hex(cls, s: str, length: int) -> "BitWord":
        return cls(int(s, 16), length)

    def to_hex(self) -> str:
        return format(self.value, "x")

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(f"bit index {j} out of range for length {self.length}")
        return (self.value >> j) & 1

    def __iter__(self) -> Iterator[int]:
        v = self.value
        for _ in range(self.length):
            yield v & 1
            v >>= 1

    def __xor__(self, other: "BitWord") -> "BitWord":
        if self.length != other.length:
            raise DimensionError(
                f"xor of lengths {self.length} and {other.length}"
            )
        return BitWord(self.value ^ other.value, self.length)

    def weight(self) -> int:
        return self.value.bit_count()

    def flip(self, positions: Iterable[int]) -> "BitWord":
        mask = 0
        for p in positions:
            if not 0 <= p < self.length:
                raise IndexError(f"position {p} out of range")
            mask |= 1 << p
        return BitWord(self.value ^ mask, self.length)

    def support(self) -> frozenset[int]:
        return frozenset(j for j in range(self.length) if (self.value >> j) & 1)

    def __str__(self) -> str:
        return "".join(str(b) for b in self)


def hamming_weight(v: BitWord) -> int:
    return v.weight()


def hamming_distance(u: BitWord, v: BitWord) -> int:
    return (u ^ v).weight()


@dataclass(frozen=True)
class BitMatrix:
    """Immutable dense matrix over GF(2); each row is a bit-packed int."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        _check_len(self.ncols)
        _check_len(len(self.rows))
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise DimensionError(f"row 0x{r:x} wider than {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        words = [BitWord.from_bits(r) for r in rows]
        if not words:
            raise DimensionError("matrix needs at least one row")
        ncols = words[0].length
        if any(w.length != ncols for w in words):
            raise DimensionError("ragged rows")
        return cls(tuple(w.value for w in words), ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"({i},{j}) out of range")
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitWord:
        return BitWord(self.rows[i], self.ncols)

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.ncols):
            c = 0
            for i, r in enumerate(self.rows):
                c |= ((r >> j) & 1) << i
            cols.append(c)
        return BitMatrix(tuple(cols), self.nrows)

    def row_reduce(self) -> "BitMatrix":
        """Reduced row echelon form (zero rows dropped)."""
        rows = list(self.rows)
        pivots: list[tuple[int, int]] = []  # (col, row value)
        reduced: list[int] = []
        col = 0
        for col in range(self.ncols):
            pivot = None
            for k, r in enumerate(rows):
                if (r >> col) & 1:
                    pivot = rows.pop(k)
                    break
            if pivot is None:
                continue
            reduced = [r ^ pivot if (r >> col) & 1 else r for r in reduced]
            rows = [r ^ pivot if (r >> col) & 1 else r for r in rows]
            reduced.append(pivot)
            pivots.append((col, pivot))
        if not reduced:
            reduced = [0]
        return BitMatrix(tuple(reduced), self.ncols)

    def rank(self) -> int:
        r = self.row_reduce()
        return sum(1 for row in r.rows if row)

    def pivot_columns(self) -> list[int]:
        cols = []
        for row in self.row_reduce().rows:
            if row:
                cols.append((row & -row).bit_length() - 1)
        return cols

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.nrows))


def mat_vec_mul(m: BitMatrix, v: BitWord, transpose: bool = False) -> BitWord:
    """GF(2) product M·v, or Mᵀ·v when ``transpose`` is set.

    With ``transpose=True`` this computes v·M read as a column, which is
    how syndromes w·Hᵀ are evaluated.
    """
    if transpose:
        if v.length != m.nrows:
            raise DimensionError(
                f"vector length {v.length} != row count {m.nrows}"
            )
        acc = 0
        for i, r in enumerate(m.rows):
            if (v.value >> i) & 1:
                acc ^= r
        return BitWord(acc, m.ncols)
    if v.length != m.ncols:
        raise DimensionError(f"vector length {v.length} != column count {m.ncols}")
    out = 0
    for i, r in enumerate(m.rows):
        out |= ((r & v.value).bit_count() & 1) << i
    return BitWord(out, m.nrows)


def rank(m: BitMatrix) -> int:
    return m.rank()


def row_reduce(m: BitMatrix) -> BitMatrix:
    return m.row_reduce()


# ---------------------------------------------------------------------------
# Polynomials over GF(2), bit i of the backing int = coefficient of x^i.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GF2Poly:
    """Polynomial over GF(2); over GF(2) every nonzero poly is monic."""

    coeffs: int

    def __post_init__(self) -> None:
        if self.coeffs < 0:
            raise ValueError("coefficient mask must be non-negative")

    @classmethod
    def from_coeff_list(cls, coeffs: Iterable[int]) -> "GF2Poly":
        return cls(BitWord.from_bits(coeffs).value)

    @classmethod
    def x_power(cls, k: int) -> "GF2Poly":
        return cls(1 << k)

    @classmethod
    def one(cls) -> "GF2Poly":
        return cls(1)

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.coeffs.bit_length() - 1

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def __add__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(self.coeffs ^ other.coeffs)

    __sub__ = __add__

    def __mul__(self, other: "GF2Poly") -> "GF2Poly":
        a, b = self.coeffs, other.coeffs
        out = 0
        while a:
            if a & 1:
                out ^= b
            a >>= 1
            b <<= 1
        return GF2Poly(out)

    def divmod(self, divisor: "GF2Poly") -> tuple["GF2Poly", "GF2Poly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        q = 0
        r = self.coeffs
        d = divisor.degree()
        while r.bit_length() - 1 >= d and r:
            shift = r.bit_length() - 1 - d
            q |= 1 << shift
            r ^= divisor.coeffs << shift
        return GF2Poly(q), GF2Poly(r)

    def __mod__(self, divisor: "GF2Poly") -> "GF2Poly":
        return self.divmod(divisor)[1]

    def __floordiv__(self, divisor: "GF2Poly") -> "GF2Poly":
        return self.divmod(divisor)[0]

    def divides(self, other: "GF2Poly") -> bool:
        return (other % self).is_zero()

    def __str__(self) -> str:
        if self.coeffs == 0:
            return "0"
        terms = []
        for k in range(self.degree(), -1, -1):
            if (self.coeffs >> k) & 1:
                terms.append("1" if k == 0 else ("x" if k == 1 else f"x^{k}"))
        return " + ".join(terms)


def poly_gcd(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a


def poly_lcm(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    if a.is_zero() or b.is_zero():
        return GF2Poly(0)
    return (a * b) // poly_gcd(a, b)


def poly_mod_mul(a: GF2Poly, b: GF2Poly, modulus: GF2Poly) -> GF2Poly:
    if modulus.is_zero():
        raise ValueError("zero modulus")
    return (a * b) % modulus


# ---------------------------------------------------------------------------
# GF(2^w) with exp/log tables over a primitive polynomial.
# ---------------------------------------------------------------------------

class GF2m:
    """The field GF(2^w); elements are ints in [0, 2^w) in the alpha basis."""

    def __init__(self, w: int, primitive_poly: int | None = None):
        if not 1 <= w <= 16:
            raise UnsupportedSizeError(f"field exponent {w} outside [1, 16]")
        if primitive_poly is None:
            try:
                primitive_poly = DEFAULT_PRIMITIVE_POLY[w]
            except KeyError:
                raise UnsupportedSizeError(
                    f"no default primitive polynomial for w={w}; supply one"
                ) from None
        if primitive_poly.bit_length() - 1 != w:
            raise ValueError(
                f"primitive polynomial 0b{primitive_poly:b} must have degree {w}"
            )
        self.w = w
        self.order = (1 << w) - 1  # size of the multiplicative group
        self.primitive_poly = primitive_poly
        exp = [0] * (2 * self.order)
        log = [0] * (1 << w)
        x = 1
        for k in range(self.order):
            exp[k] = x
            log[x] = k
            x <<= 1
            if x >> w:
                x ^= primitive_poly
        # x must generate the whole multiplicative group: every power
        # distinct and the cycle closing exactly at 2^w - 1 steps
        if x != 1 or len(set(exp[: self.order])) != self.order:
            raise ValueError(
                f"0b{primitive_poly:b} is not primitive over GF(2^{w})"
            )
        for k in range(self.order, 2 * self.order):
            exp[k] = exp[k - self.order]
        self._exp = exp
        self._log = log

    @property
    def alpha(self) -> int:
        return 2 if self.w > 1 else 1

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[self.order - self._log[a]]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0 if k else 1
        return self._exp[(self._log[a] * k) % self.order]

    def alpha_pow(self, k: int) -> int:
        return self._exp[k % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0")
        return self._log[a]

    def element(self, value: int) -> "GF2mElement":
        return GF2mElement(self, value)

    def poly_eval(self, poly: GF2Poly, at: int) -> int:
        """Evaluate a GF(2)-coefficient polynomial at a field element."""
        acc = 0
        c = poly.coeffs
        k = 0
        while c:
            if c & 1:
                acc ^= self.pow(at, k)
            c >>= 1
            k += 1
        return acc

    def __repr__(self) -> str:
        return f"GF2m(w={self.w}, primitive_poly=0b{self.primitive_poly:b})"


@dataclass(frozen=True)
class GF2mElement:
    """An element of a concrete GF(2^w), as a coefficient vector packed in an int."""

    field: GF2m
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value <= self.field.order:
            raise ValueError(f"{self.value} outside GF(2^{self.field.w})")

    def __mul__(self, other: "GF2mElement") -> "GF2mElement":
        return GF2mElement(self.field, self.field.mul(self.value, other.value))

    def __add__(self, other: "GF2mElement") -> "GF2mElement":
        return GF2mElement(self.field, self.value ^ other.value)

    def coefficients(self) -> tuple[int, ...]:
        return tuple((self.value >> k) & 1 for k in range(self.field.w))


def minimal_polynomial(elem: GF2mElement) -> GF2Poly:
    """Lowest-degree monic GF(2) polynomial with ``elem`` as a root.

    Built as the product of (x - c) over the conjugacy class
    {e, e^2, e^4, ...}; the product's coefficients land in GF(2).
    """
    field = elem.field
    if elem.value == 0:
        return GF2Poly.x_power(1)
    conjugates = []
    c = elem.value
    while c not in conjugates:
        conjugates.append(c)
        c = field.mul(c, c)
    # poly with GF(2^w) coefficients, lowest degree first; start with "1"
    coeffs = [1]
    for root in conjugates:
        nxt = [0] * (len(coeffs) + 1)
        for k, a in enumerate(coeffs):
            nxt[k] ^= field.mul(a, root)  # (x + root): constant-term part
            nxt[k + 1] ^= a
        coeffs = nxt
    if any(a not in (0, 1) for a in coeffs):
        raise AssertionError("conjugacy product left the prime field")
    return GF2Poly.from_coeff_list(coeffs)
