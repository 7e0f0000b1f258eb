"""The authenticated-message protocol: Alice, Bob, and full sessions.

Alice encodes an m-bit message to an n-bit codeword c_A and prepares
qubit j as c_A[j] in the Z basis when key bit j is 0, in the X basis
when it is 1.  Bob measures with the same key, accepts iff the measured
word has zero syndrome, and reads the message off the codeword's
systematic positions (the channel is noiseless, so an unperturbed word
is exactly c_A).  Keys are hard single-use.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from random import Random
from typing import Optional, Sequence

from .codes import LinearCode
from .errors import DimensionError, KeyReuseError
from .gf2 import BitWord
from .qsim import Basis, QubitHandle, channel_send, measure, prepare


def _basis_of(key_bit: int) -> Basis:
    return Basis.Z if key_bit == 0 else Basis.X


class SecretKey:
    """An n-bit shared key, consumable exactly once."""

    def __init__(self, bits: BitWord):
        self._bits = bits
        self._used = False

    @property
    def n(self) -> int:
        return self._bits.length

    @property
    def used(self) -> bool:
        return self._used

    def consume(self) -> BitWord:
        if self._used:
            raise KeyReuseError("secret key already used by a session")
        self._used = True
        return self._bits

    def peek(self) -> BitWord:
        """Read without consuming; for the holder's own bookkeeping only."""
        return self._bits

    def __repr__(self) -> str:  # never prints the bits
        state = "used" if self._used else "fresh"
        return f"<SecretKey n={self.n} {state}>"


def keygen(n: int, randomness: Random) -> SecretKey:
    if n < 1:
        raise DimensionError(f"key length must be >= 1, got {n}")
    return SecretKey(BitWord(randomness.getrandbits(n), n))


@dataclass(frozen=True)
class SessionOutcome:
    """accepted(message) or rejected."""

    accepted: bool
    message: Optional[BitWord] = None

    def __post_init__(self) -> None:
        if self.accepted and self.message is None:
            raise ValueError("accepted outcome requires a message")
        if not self.accepted and self.message is not None:
            raise ValueError("rejected outcome carries no message")

    @classmethod
    def rejected(cls) -> "SessionOutcome":
        return cls(accepted=False)

    @classmethod
    def accept(cls, message: BitWord) -> "SessionOutcome":
        return cls(accepted=True, message=message)


def alice_send(
    message: BitWord, key: SecretKey, code: LinearCode
) -> list[QubitHandle]:
    """Encode and prepare the n qubits; consumes the key."""
    if message.length != code.m:
        raise DimensionError(
            f"message length {message.length} != m={code.m}"
        )
    if key.n != code.n:
        raise DimensionError(f"key length {key.n} != n={code.n}")
    bits = key.consume()
    codeword = code.encode(message)
    return [
        prepare(codeword[j], _basis_of(bits[j])) for j in range(code.n)
    ]


def bob_receive(
    qubits: Sequence[QubitHandle],
    key_bits: BitWord,
    code: LinearCode,
    randomness: Random,
) -> SessionOutcome:
    """Measure with the shared key and accept iff the syndrome is zero.

    A wrong qubit count is treated as tampering and rejected outright.
    """
    if key_bits.length != code.n:
        raise DimensionError(f"key length {key_bits.length} != n={code.n}")
    if len(qubits) != code.n:
        return SessionOutcome.rejected()
    measured = [
        measure(qubits[j], _basis_of(key_bits[j]), randomness)
        for j in range(code.n)
    ]
    m_b = BitWord.from_bits(measured)
    if not code.is_codeword(m_b):
        return SessionOutcome.rejected()
    return SessionOutcome.accept(code.message_of(m_b))


@dataclass(frozen=True)
class SessionRecord:
    """Auditable result of one session; never contains keys or qubit state."""

    code_name: str
    n: int
    m: int
    t: int
    message_hex: str
    accepted: bool
    forged: bool
    adversary: Optional[str]
    seed: Optional[int]
    outcome: SessionOutcome = field(compare=False, repr=False)
    adversary_transcript: Optional[dict] = field(
        default=None, compare=False, repr=False
    )

    def to_json_dict(self) -> dict:
        return {
            "code_name": self.code_name,
            "message_hex": self.message_hex,
            "accepted": self.accepted,
            "forged": self.forged,
            "adversary": self.adversary,
            "seed": self.seed,
            "n": self.n,
            "m": self.m,
            "t": self.t,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def run_session(
    message: BitWord,
    code: LinearCode,
    adversary=None,
    randomness: Optional[Random] = None,
    seed: Optional[int] = None,
) -> SessionRecord:
    """One end-to-end session: keygen, Alice, channel (+ Eve), Bob.

    ``adversary`` is any object with ``name`` and
    ``act(tap, code, randomness) -> transcript-dict-or-None``; it works
    on the channel tap between Alice and Bob.
    """
    if randomness is None:
        from .rng import substream

        randomness = substream(seed if seed is not None else 0, "session")
    if message.length != code.m:
        raise DimensionError(f"message length {message.length} != m={code.m}")
    key = keygen(code.n, randomness)
    key_bits = key.peek()
    tap = channel_send(alice_send(message, key, code))
    transcript = None
    adversary_name = None
    if adversary is not None:
        adversary_name = adversary.name
        transcript = adversary.act(tap, code, randomness)
    outcome = bob_receive(tap.deliver(), key_bits, code, randomness)
    forged = bool(
        outcome.accepted and adversary is not None and outcome.message != message
    )
    return SessionRecord(
        code_name=code.name,
        n=code.n,
        m=code.m,
        t=code.t,
        message_hex=message.to_hex(),
        accepted=outcome.accepted,
        forged=forged,
        adversary=adversary_name,
        seed=seed,
        outcome=outcome,
        adversary_transcript=transcript,
    )
