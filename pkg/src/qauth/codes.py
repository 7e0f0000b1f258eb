"""Binary linear block codes C[n, m, t]: encoding, syndromes, decoding.

The message-to-codeword map is c = k·G with a public G kept in reduced
row echelon form, so the message is read back off the pivot columns.
Decoding is bounded-distance: a syndrome lookup table when the check
dimension allows it, or an algebraic decoder supplied by the
constructor (see the bch module).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional, Protocol

from .errors import DimensionError, UnsupportedSizeError
from .gf2 import BitMatrix, BitWord, mat_vec_mul

SYNDROME_TABLE_MAX_CHECKS = 24
WEIGHT_ENUM_MAX_M = 20


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of bounded-distance decoding.

    ``ok`` means a codeword within distance t of the received word was
    returned; it is the transmitted one whenever the true error weight
    was <= t, and may be a miscorrection otherwise.
    """

    ok: bool
    codeword: Optional[BitWord] = None
    message: Optional[BitWord] = None
    corrected_positions: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def failure(cls) -> "DecodeResult":
        return cls(ok=False)


class Decoder(Protocol):
    def __call__(self, received: BitWord) -> tuple[bool, frozenset[int]]:
        """Return (success, error positions to flip)."""


@dataclass(frozen=True)
class LinearCode:
    """A binary [n, m] code correcting t errors, with public G and H."""

    name: str
    n: int
    m: int
    t: int
    generator: BitMatrix        # m x n, reduced row echelon form
    parity_check: BitMatrix     # (n-m) x n
    _decoder: Decoder = field(compare=False)
    message_columns: tuple[int, ...] = ()
    field_info: Optional[dict] = None

    def __post_init__(self) -> None:
        if self.generator.nrows != self.m or self.generator.ncols != self.n:
            raise DimensionError("generator shape mismatch")
        if self.parity_check.ncols != self.n:
            raise DimensionError("parity-check width mismatch")
        if self.generator.rank() != self.m:
            raise ValueError("generator rows are dependent")
        for i in range(self.m):
            if mat_vec_mul(self.parity_check, self.generator.row(i)).value != 0:
                raise ValueError("G·Hᵀ != 0")
        if not self.message_columns:
            object.__setattr__(
                self, "message_columns", tuple(self.generator.pivot_columns())
            )

    # -- encoding / verification -------------------------------------------

    def encode(self, message: BitWord) -> BitWord:
        if message.length != self.m:
            raise DimensionError(f"message length {message.length} != m={self.m}")
        acc = 0
        for i in range(self.m):
            if (message.value >> i) & 1:
                acc ^= self.generator.rows[i]
        return BitWord(acc, self.n)

    def syndrome(self, word: BitWord) -> BitWord:
        if word.length != self.n:
            raise DimensionError(f"word length {word.length} != n={self.n}")
        return mat_vec_mul(self.parity_check, word)

    def is_codeword(self, word: BitWord) -> bool:
        return self.syndrome(word).value == 0

    def message_of(self, codeword: BitWord) -> BitWord:
        """Project a codeword back to its message (pivot-column readout)."""
        bits = [codeword[j] for j in self.message_columns]
        return BitWord.from_bits(bits)

    # -- decoding ------------------------------------------------------------

    def decode(self, received: BitWord) -> DecodeResult:
        if received.length != self.n:
            raise DimensionError(f"received length {received.length} != n={self.n}")
        ok, positions = self._decoder(received)
        if not ok:
            return DecodeResult.failure()
        codeword = received.flip(positions)
        return DecodeResult(
            ok=True,
            codeword=codeword,
            message=self.message_of(codeword),
            corrected_positions=positions,
        )

    # -- enumeration ----------------------------------------------------------

    def codewords(self) -> list[BitWord]:
        if self.m > WEIGHT_ENUM_MAX_M:
            raise UnsupportedSizeError(
                f"enumerating 2^{self.m} codewords exceeds the m <= "
                f"{WEIGHT_ENUM_MAX_M} bound"
            )
        out = []
        for k in range(1 << self.m):
            out.append(self.encode(BitWord(k, self.m)))
        return out

    def weight_distribution(self) -> list[int]:
        """A_w for w = 0..n; sums to 2^m."""
        counts = [0] * (self.n + 1)
        for c in self.codewords():
            counts[c.weight()] += 1
        return counts

    # -- serialization ---------------------------------------------------------

    def to_spec_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "generator_rows": [format(r, "x") for r in self.generator.rows],
            "parity_rows": [format(r, "x") for r in self.parity_check.rows],
            "field": self.field_info,
        }

    def save_spec(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_spec_dict(), fh, indent=2)
            fh.write("\n")


def syndrome_table_decoder(parity_check: BitMatrix, t: int) -> Decoder:
    """Bounded-distance decoding via a syndrome -> error-pattern table.

    The table holds every pattern of weight <= t; patterns of larger
    weight decode to whatever <= t pattern shares their syndrome
    (miscorrection) or to failure.
    """
    n_checks = parity_check.nrows
    if n_checks > SYNDROME_TABLE_MAX_CHECKS:
        raise UnsupportedSizeError(
            f"{n_checks} checks exceed the syndrome-table bound "
            f"({SYNDROME_TABLE_MAX_CHECKS})"
        )
    n = parity_check.ncols
    table: dict[int, frozenset[int]] = {0: frozenset()}
    for w in range(1, t + 1):
        for positions in combinations(range(n), w):
            pattern = 0
            for p in positions:
                pattern |= 1 << p
            syn = mat_vec_mul(parity_check, BitWord(pattern, n)).value
            # weight-ordered fill: smallest pattern wins a syndrome collision
            table.setdefault(syn, frozenset(positions))

    def decode(received: BitWord) -> tuple[bool, frozenset[int]]:
        syn = mat_vec_mul(parity_check, received).value
        hit = table.get(syn)
        if hit is None:
            return False, frozenset()
        return True, hit

    return decode


def _standard_form(generator_rows: list[int], n: int) -> tuple[BitMatrix, BitMatrix]:
    """RREF generator plus a parity-check matrix from the non-pivot columns."""
    g = BitMatrix(tuple(generator_rows), n).row_reduce()
    m = sum(1 for r in g.rows if r)
    g = BitMatrix(tuple(r for r in g.rows if r), n)
    pivots = g.pivot_columns()
    free = [j for j in range(n) if j not in pivots]
    h_rows = []
    for k, j in enumerate(free):
        row = 1 << j
        for i, p in enumerate(pivots):
            if g.entry(i, j):
                row |= 1 << p
        h_rows.append(row)
    if not h_rows:
        h_rows = [0]
    return g, BitMatrix(tuple(h_rows), n)


def code_from_generator_rows(
    name: str,
    rows: list[int],
    n: int,
    t: int,
    decoder_factory: Optional[Callable[[BitMatrix, int], Decoder]] = None,
    field_info: Optional[dict] = None,
) -> LinearCode:
    g, h = _standard_form(rows, n)
    factory = decoder_factory or syndrome_table_decoder
    return LinearCode(
        name=name,
        n=n,
        m=g.nrows,
        t=t,
        generator=g,
        parity_check=h,
        _decoder=factory(h, t),
        field_info=field_info,
    )


def make_repetition(n: int) -> LinearCode:
    """The [n, 1, (n-1)/2] repetition code; n must be odd so majority decides."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"repetition length must be odd and >= 3, got {n}")
    t = (n - 1) // 2
    return code_from_generator_rows(f"rep{n}", [(1 << n) - 1], n, t)


def make_hamming_7_4() -> LinearCode:
    """The [7,4,3] Hamming code in systematic form."""
    rows = [
        BitWord.from_str("1000110").value,
        BitWord.from_str("0100101").value,
        BitWord.from_str("0010011").value,
        BitWord.from_str("0001111").value,
    ]
    return code_from_generator_rows("hamming74", rows, 7, 1)


def load_code_spec(path) -> LinearCode:
    """Rebuild a code from the JSON spec written by ``save_spec``.

    BCH specs (field present) get an algebraic decoder when the check
    dimension rules out a syndrome table.
    """
    with open(path) as fh:
        d = json.load(fh)
    n, t = d["n"], d["t"]
    rows = [int(r, 16) for r in d["generator_rows"]]
    factory = None
    if d.get("field") and n - d["m"] > SYNDROME_TABLE_MAX_CHECKS:
        from .bch import bch_decoder_factory

        factory = bch_decoder_factory(
            d["field"]["w"], t, primitive_poly=d["field"]["primitive_poly"]
        )
    return code_from_generator_rows(
        d["name"], rows, n, t, factory, field_info=d.get("field")
    )
