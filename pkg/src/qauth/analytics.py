"""Closed-form security probabilities, evaluated exactly.

Everything here is arbitrary-precision rational arithmetic
(fractions.Fraction): the quantities of interest span dozens of orders
of magnitude, and floats would mask formula errors.  Rendering to a
fixed number of significant digits happens only at the output boundary
and rounds half-to-even.

Quantities (n qubits, t-error-correcting code):
  p_f_no_message(n)            -- forge-from-scratch success, (3/4)^n
  p_x(n, i)                    -- i basis guesses correct, C(n,i)/2^n
  p_weight_le_t_given_i(n,t,i) -- decodable error weight given i matches
  p_dec(n, t)                  -- Eve decodes the intercepted word
  p_forge_given_i(n, t, i)     -- residual forgery success given i matches
  p_f_prime(n, t)              -- intercept-resend forgery success
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .codes import LinearCode
from .errors import DimensionError

ExactProb = Fraction


def _check_prob(p: Fraction) -> Fraction:
    assert 0 <= p <= 1, f"probability out of range: {p}"
    return p


def p_f_no_message(n: int) -> Fraction:
    """Success of a forged transmission with a random basis guess: (3/4)^n.

    Per qubit: the guessed basis matches with probability 1/2 (the
    receiver then reads the intended bit), else the readout is a fair
    coin -- 1/2 + 1/2 * 1/2 = 3/4.
    """
    if n < 1:
        raise DimensionError(f"n must be >= 1, got {n}")
    return _check_prob(Fraction(3**n, 4**n))


def p_x(n: int, i: int) -> Fraction:
    """P(exactly i of n independent fair basis guesses are correct)."""
    if not 0 <= i <= n:
        raise DimensionError(f"i={i} outside [0, {n}]")
    return _check_prob(Fraction(comb(n, i), 2**n))


def p_weight_le_t_given_i(n: int, t: int, i: int) -> Fraction:
    """P(measurement-error weight <= t | exactly i bases matched).

    The n - i mismatched positions each flip independently with
    probability 1/2; with i >= n - t the weight cannot exceed t.
    Note C(n-i, n-i-h) = C(n-i, h).
    """
    if not 0 <= i <= n:
        raise DimensionError(f"i={i} outside [0, {n}]")
    if i >= n - t:
        return Fraction(1)
    miss = n - i
    total = sum(comb(miss, h) for h in range(t + 1))
    return _check_prob(Fraction(total, 2**miss))


def p_dec(n: int, t: int) -> Fraction:
    """P(the eavesdropper's bounded-distance decode succeeds).

    Sum over the number i of correct basis guesses of
    p_x(n, i) * p_weight_le_t_given_i(n, t, i).
    """
    if not 0 <= t < n:
        raise DimensionError(f"t={t} outside [0, {n})")
    return _check_prob(
        sum(
            p_x(n, i) * p_weight_le_t_given_i(n, t, i)
            for i in range(n + 1)
        )
    )


def p_forge_given_i(n: int, t: int, i: int) -> Fraction:
    """P(receiver accepts | i matches and a successful t-position correction).

    Under the model's assumption that a successful decode corrects
    exactly t of the n - i wrong bases, n - t - i wrong bases remain and
    each must come out right as a fair coin: 2^-(n-t-i).
    """
    if not 0 <= i <= n - t - 1:
        raise DimensionError(
            f"i={i} outside [0, {n - t - 1}] (i >= n-t has probability 1)"
        )
    return _check_prob(Fraction(1, 2 ** (n - t - i)))


def p_f_prime(n: int, t: int) -> Fraction:
    """Intercept-resend forgery success probability.

    For i <= n-t-1: decode must succeed and the residual n-t-i wrong
    bases must all read out favorably; for i >= n-t acceptance is
    certain given the model's full key correction.
    """
    if not 0 <= t < n:
        raise DimensionError(f"t={t} outside [0, {n})")
    total = Fraction(0)
    for i in range(n - t):
        inner = sum(comb(n - i, h) for h in range(t + 1))
        total += Fraction(
            comb(n, i) * inner, 2 ** (3 * n - 2 * i - t)
        )
    for i in range(n - t, n + 1):
        total += Fraction(comb(n, i), 2**n)
    return _check_prob(total)


# ---------------------------------------------------------------------------
# Rendering and the security table.
# ---------------------------------------------------------------------------

def render_scientific(p: Fraction, sig: int = 2) -> str:
    """Scientific notation at ``sig`` significant digits, half-to-even."""
    if sig < 1:
        raise ValueError("need at least one significant digit")
    if p < 0:
        return "-" + render_scientific(-p, sig)
    if p == 0:
        return "0"
    exp = 0
    q = p
    while q >= 10:
        q /= 10
        exp += 1
    while q < 1:
        q *= 10
        exp -= 1
    digits = round(q * Fraction(10 ** (sig - 1)))  # Fraction round is half-even
    if digits >= 10**sig:  # rounding carried into a new decade
        digits //= 10
        exp += 1
    s = str(digits)
    mantissa = s[0] if sig == 1 else f"{s[0]}.{s[1:]}"
    return f"{mantissa}e{exp:+03d}"


def render_fixed(x: Fraction, decimals: int = 2) -> str:
    """Fixed-point rendering ('.' separator), half-to-even."""
    scaled = round(x * Fraction(10**decimals))
    s = f"{scaled:0{decimals + 1}d}"
    return f"{s[:-decimals]}.{s[-decimals:]}" if decimals else s


@dataclass(frozen=True)
class SecurityRow:
    """One code's security summary (the columns of the overview table)."""

    name: str
    n: int
    m: int
    t: int
    p_f: Fraction
    p_dec: Fraction
    p_f_prime: Fraction
    key_overhead: Fraction

    def rendered(self, sig: int = 2) -> dict:
        return {
            "code": self.name,
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "p_f": render_scientific(self.p_f, sig),
            "p_dec": render_scientific(self.p_dec, sig),
            "p_f_prime": render_scientific(self.p_f_prime, sig),
            "key_overhead": render_fixed(self.key_overhead, 2),
        }

    def to_json_dict(self, exact: bool = False) -> dict:
        d = self.rendered()
        if exact:
            for key, value in (
                ("p_f", self.p_f),
                ("p_dec", self.p_dec),
                ("p_f_prime", self.p_f_prime),
                ("key_overhead", self.key_overhead),
            ):
                d[f"{key}_exact"] = {
                    "numerator": str(value.numerator),
                    "denominator": str(value.denominator),
                }
        return d


def key_overhead(code: LinearCode) -> Fraction:
    """Key bits consumed per message bit: n/m."""
    return Fraction(code.n, code.m)


def security_row(code: LinearCode) -> SecurityRow:
    return SecurityRow(
        name=code.name,
        n=code.n,
        m=code.m,
        t=code.t,
        p_f=p_f_no_message(code.n),
        p_dec=p_dec(code.n, code.t),
        p_f_prime=p_f_prime(code.n, code.t),
        key_overhead=key_overhead(code),
    )


def table1(codes: Iterable[LinearCode]) -> list[SecurityRow]:
    return [security_row(code) for code in codes]


CSV_COLUMNS = ["code", "n", "m", "t", "p_f", "p_dec", "p_f_prime", "key_overhead"]


def table_to_csv(rows: Iterable[SecurityRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.rendered())
    return buf.getvalue()


def table_to_json(rows: Iterable[SecurityRow], exact: bool = False) -> str:
    return json.dumps([row.to_json_dict(exact=exact) for row in rows], indent=2)
