"""Ground-truth engines: exhaustive oracles and Monte Carlo estimation.

The oracles recompute attack probabilities for small codes by complete
enumeration against the real decoder, with exact rational weights; they
are the yardstick for both the closed-form analytics and the
simulator.  Monte Carlo runs full simulated sessions and reports exact
(Clopper-Pearson) confidence intervals, since true probabilities near 0
or 1 are common here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from scipy.stats import beta

from . import analytics
from .adversary import ABORT, RESEND_UNCORRECTED
from .codes import LinearCode
from .errors import UnsupportedSizeError
from .gf2 import BitWord
from .protocol import run_session
from .rng import substream

EXACT_CODEWORD_MAX_N = 16
P_DEC_MAX_N = 12
INTERCEPT_RESEND_MAX_N = 10


@dataclass(frozen=True)
class OracleReport:
    """Enumerated ground truth next to a closed-form value."""

    name: str
    exact_value: Fraction
    formula_value: Fraction
    equal: bool
    gap: Fraction  # exact_value - formula_value

    def __post_init__(self) -> None:
        assert self.equal == (self.gap == 0)
        assert self.gap == self.exact_value - self.formula_value

    @classmethod
    def compare(
        cls, name: str, exact_value: Fraction, formula_value: Fraction
    ) -> "OracleReport":
        gap = exact_value - formula_value
        return cls(
            name=name,
            exact_value=exact_value,
            formula_value=formula_value,
            equal=(gap == 0),
            gap=gap,
        )

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "exact_value": str(self.exact_value),
            "formula_value": str(self.formula_value),
            "equal": self.equal,
            "gap": str(self.gap),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


# ---------------------------------------------------------------------------
# No-message attack oracles.
# ---------------------------------------------------------------------------

def oracle_no_message_exact_codeword(code: LinearCode) -> Fraction:
    """P(receiver's measured word equals the forged codeword exactly).

    Enumerates every basis-difference pattern between the forger's guess
    and the true key; matched positions read out exactly, each
    mismatched position is a fair coin.  Must equal (3/4)^n.
    """
    n = code.n
    if n > EXACT_CODEWORD_MAX_N:
        raise UnsupportedSizeError(
            f"n={n} exceeds the exact-codeword enumeration bound "
            f"({EXACT_CODEWORD_MAX_N})"
        )
    # sum over difference patterns d of 2^-n * 2^-w(d)
    numerator = sum(1 << (n - d.bit_count()) for d in range(1 << n))
    return Fraction(numerator, 1 << (2 * n))


def oracle_no_message_any_codeword(code: LinearCode) -> Fraction:
    """P(receiver accepts at all): any codeword passes the syndrome test.

    Each measured bit independently equals the forger's intended bit
    with probability 3/4, so acceptance is sum_w A_w (1/4)^w (3/4)^(n-w)
    over the weight distribution A.
    """
    n = code.n
    weights = code.weight_distribution()
    total = sum(
        a_w * 3 ** (n - w) for w, a_w in enumerate(weights) if a_w
    )
    return Fraction(total, 4**n)


# ---------------------------------------------------------------------------
# Intercept-resend oracles (decoder in the loop).
# ---------------------------------------------------------------------------

def _submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def oracle_p_dec(code: LinearCode) -> OracleReport:
    """P(the eavesdropper's decode recovers the transmitted codeword).

    Enumerates every basis-difference pattern D and every readout on the
    mismatched positions, running the real decoder; an event counts only
    when the decoded codeword is the transmitted one (a miscorrection is
    not a correct decode).  Contract: equals p_dec(n, t) exactly.
    """
    n = code.n
    if n > P_DEC_MAX_N:
        raise UnsupportedSizeError(
            f"n={n} exceeds the decode-oracle enumeration bound ({P_DEC_MAX_N})"
        )
    c = code.encode(BitWord.zeros(code.m))
    total = Fraction(0)
    for d in range(1 << n):
        k = d.bit_count()
        successes = 0
        for e in _submasks(d):
            result = code.decode(BitWord(c.value ^ e, n))
            if result.ok and result.codeword == c:
                successes += 1
        total += Fraction(successes, 1 << (n + k))
    return OracleReport.compare(
        f"p_dec[{code.name}]", total, analytics.p_dec(n, code.t)
    )


def _codeword_masks(code: LinearCode) -> list[int]:
    return [cw.value for cw in code.codewords()]


def intercept_resend_success_given_difference(
    code: LinearCode,
    d: int,
    on_decode_failure: str = ABORT,
    _codewords: Optional[list[int]] = None,
) -> Fraction:
    """P(receiver accepts | basis-difference pattern d), exactly.

    Conditional slice of the intercept-resend attack: the eavesdropper's
    readout errs uniformly on the mismatched set D; after decoding she
    flips her basis guess at the corrected positions, leaving residual
    mismatch R = D xor flips.  The receiver reads the forged codeword
    exactly off R and fair coins on R, accepting iff the perturbation is
    itself a codeword: P = |{codewords with support in R}| / 2^|R|.
    """
    n = code.n
    codewords = _codewords if _codewords is not None else _codeword_masks(code)
    c = code.encode(BitWord.zeros(code.m))

    def acceptance(r: int) -> Fraction:
        inside = sum(1 for cw in codewords if cw & ~r == 0)
        return Fraction(inside, 1 << r.bit_count())

    k = d.bit_count()
    total = Fraction(0)
    for e in _submasks(d):
        result = code.decode(BitWord(c.value ^ e, n))
        if result.ok:
            flips = 0
            for j in result.corrected_positions:
                flips |= 1 << j
            total += acceptance(d ^ flips)
        elif on_decode_failure == RESEND_UNCORRECTED:
            total += acceptance(d)
        # abort: failed forgery, contributes 0
    return total / (1 << k)


def oracle_intercept_resend(
    code: LinearCode, on_decode_failure: str = ABORT
) -> OracleReport:
    """Exact intercept-resend forgery probability vs. the closed form.

    Full enumeration over the basis-difference pattern, the
    eavesdropper's readout (decoder in the loop, miscorrections
    included), and the receiver's readout under the any-codeword
    acceptance rule.  Equality with p_f_prime is NOT expected; the
    signed gap is the result.
    """
    n = code.n
    if n > INTERCEPT_RESEND_MAX_N:
        raise UnsupportedSizeError(
            f"n={n} exceeds the intercept-resend enumeration bound "
            f"({INTERCEPT_RESEND_MAX_N})"
        )
    codewords = _codeword_masks(code)
    total = Fraction(0)
    for d in range(1 << n):
        total += intercept_resend_success_given_difference(
            code, d, on_decode_failure, _codewords=codewords
        )
    exact = total / (1 << n)
    return OracleReport.compare(
        f"p_f_prime[{code.name}:{on_decode_failure}]",
        exact,
        analytics.p_f_prime(n, code.t),
    )


# ---------------------------------------------------------------------------
# Monte Carlo with exact confidence intervals.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TrialStats:
    """Acceptance frequency with a Clopper-Pearson confidence interval."""

    trials: int
    successes: int
    estimate: Fraction
    ci_low: float
    ci_high: float
    seed: int
    confidence: float = 0.99

    def __post_init__(self) -> None:
        assert self.ci_low <= self.estimate <= self.ci_high

    def contains(self, p) -> bool:
        return self.ci_low <= p <= self.ci_high

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "successes": self.successes,
            "estimate": str(self.estimate),
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "confidence": self.confidence,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def clopper_pearson(
    successes: int, trials: int, confidence: float = 0.99
) -> tuple[float, float]:
    alpha = 1.0 - confidence
    low = 0.0 if successes == 0 else float(
        beta.ppf(alpha / 2, successes, trials - successes + 1)
    )
    high = 1.0 if successes == trials else float(
        beta.ppf(1 - alpha / 2, successes + 1, trials - successes)
    )
    return low, high


def monte_carlo(
    code: LinearCode,
    trials: int,
    seed: int,
    adversary=None,
    message: Optional[BitWord] = None,
    confidence: float = 0.99,
) -> TrialStats:
    """Acceptance frequency over independent simulated sessions.

    Each trial runs a full session on its own substream, so results are
    bit-reproducible for a fixed seed regardless of scheduling.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if message is None:
        message = BitWord.zeros(code.m)
    successes = 0
    for trial in range(trials):
        record = run_session(
            message,
            code,
            adversary=adversary,
            randomness=substream(seed, "trial", trial),
        )
        if record.accepted:
            successes += 1
    low, high = clopper_pearson(successes, trials, confidence)
    return TrialStats(
        trials=trials,
        successes=successes,
        estimate=Fraction(successes, trials),
        ci_low=low,
        ci_high=high,
        seed=seed,
        confidence=confidence,
    )
