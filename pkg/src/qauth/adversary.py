"""Eve's strategies against the channel: no-message and intercept-resend.

Both strategies see only public data (the code) and the opaque channel
interface; intercepted qubits can be touched only through ``measure``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from random import Random
from typing import Optional

from .codes import LinearCode
from .errors import DimensionError
from .gf2 import BitWord
from .qsim import Basis, ChannelTap, QubitHandle, measure, prepare

ABORT = "abort"
RESEND_UNCORRECTED = "resend_uncorrected"


def _basis_of(key_bit: int) -> Basis:
    return Basis.Z if key_bit == 0 else Basis.X


def _prepare_word(word: BitWord, bases: BitWord) -> list[QubitHandle]:
    return [
        prepare(word[j], _basis_of(bases[j])) for j in range(word.length)
    ]


@dataclass(frozen=True)
class AdversaryTranscript:
    """Audit record of one attack attempt; never includes x_AB."""

    x_e: BitWord
    m_e: Optional[BitWord]
    decode_success: bool
    corrected_positions: frozenset[int]
    x_e_prime: Optional[BitWord]
    resent: bool

    def to_json_dict(self) -> dict:
        return {
            "x_E": self.x_e.to_hex(),
            "m_E": self.m_e.to_hex() if self.m_e is not None else None,
            "decode_success": self.decode_success,
            "corrected_positions": sorted(self.corrected_positions),
            "x_E_prime": (
                self.x_e_prime.to_hex() if self.x_e_prime is not None else None
            ),
            "resent": self.resent,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


class NoMessageStrategy:
    """Forge from scratch: random basis guess x_E, no interception."""

    name = "no-message"

    def __init__(self, forged_message: BitWord):
        self.forged_message = forged_message

    def forge(self, code: LinearCode, randomness: Random) -> tuple[
        list[QubitHandle], AdversaryTranscript
    ]:
        if self.forged_message.length != code.m:
            raise DimensionError(
                f"forged message length {self.forged_message.length} != m={code.m}"
            )
        x_e = BitWord(randomness.getrandbits(code.n), code.n)
        c_e = code.encode(self.forged_message)
        transcript = AdversaryTranscript(
            x_e=x_e,
            m_e=None,
            decode_success=False,
            corrected_positions=frozenset(),
            x_e_prime=None,
            resent=True,
        )
        return _prepare_word(c_e, x_e), transcript

    def act(self, tap: ChannelTap, code: LinearCode, randomness: Random) -> dict:
        tap.intercept()  # anything of Alice's in flight is discarded
        handles, transcript = self.forge(code, randomness)
        tap.replace(handles)
        return transcript.to_json_dict()


class InterceptResendStrategy:
    """Measure with a guessed key, decode, correct the guess, resend.

    Eve measures qubit j in the basis given by her uniformly random
    guess x_E, bounded-distance decodes the measured word, flips x_E at
    the corrected positions to get x_E', and resends her own codeword in
    the x_E' bases.  If decoding fails she follows ``on_decode_failure``:
    ``abort`` (drop the transmission, Bob rejects on qubit count) or
    ``resend_uncorrected`` (send the forgery under the unmodified x_E).
    """

    name = "intercept-resend"

    def __init__(self, forged_message: BitWord, on_decode_failure: str = ABORT):
        if on_decode_failure not in (ABORT, RESEND_UNCORRECTED):
            raise ValueError(
                f"on_decode_failure must be '{ABORT}' or '{RESEND_UNCORRECTED}'"
            )
        self.forged_message = forged_message
        self.on_decode_failure = on_decode_failure

    def attack(
        self,
        intercepted: list[QubitHandle],
        code: LinearCode,
        randomness: Random,
    ) -> tuple[Optional[list[QubitHandle]], AdversaryTranscript]:
        if self.forged_message.length != code.m:
            raise DimensionError(
                f"forged message length {self.forged_message.length} != m={code.m}"
            )
        if len(intercepted) != code.n:
            raise DimensionError(
                f"expected {code.n} intercepted qubits, got {len(intercepted)}"
            )
        n = code.n
        x_e = BitWord(randomness.getrandbits(n), n)
        m_e = BitWord.from_bits(
            measure(intercepted[j], _basis_of(x_e[j]), randomness)
            for j in range(n)
        )
        result = code.decode(m_e)
        c_f = code.encode(self.forged_message)
        if result.ok:
            x_e_prime = x_e.flip(result.corrected_positions)
            transcript = AdversaryTranscript(
                x_e=x_e,
                m_e=m_e,
                decode_success=True,
                corrected_positions=result.corrected_positions,
                x_e_prime=x_e_prime,
                resent=True,
            )
            return _prepare_word(c_f, x_e_prime), transcript
        if self.on_decode_failure == RESEND_UNCORRECTED:
            transcript = AdversaryTranscript(
                x_e=x_e,
                m_e=m_e,
                decode_success=False,
                corrected_positions=frozenset(),
                x_e_prime=x_e,
                resent=True,
            )
            return _prepare_word(c_f, x_e), transcript
        transcript = AdversaryTranscript(
            x_e=x_e,
            m_e=m_e,
            decode_success=False,
            corrected_positions=frozenset(),
            x_e_prime=None,
            resent=False,
        )
        return None, transcript

    def act(self, tap: ChannelTap, code: LinearCode, randomness: Random) -> dict:
        intercepted = tap.intercept()
        handles, transcript = self.attack(intercepted, code, randomness)
        tap.replace(handles if handles is not None else [])
        return transcript.to_json_dict()
