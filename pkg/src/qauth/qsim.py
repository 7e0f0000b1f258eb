"""Minimal quantum layer for BB84-style prepare-and-measure.

Only the four BB84 states ever occur and there is no entanglement, so a
qubit is stored as its hidden (basis, bit) record: measuring in the
preparation basis is deterministic, in the conjugate basis a fair coin.
The StateVector path exists solely as a cross-check oracle for those
statistics.

No-cloning is modeled by opaque measure-once handles: the preparation
record is readable only by the measurement engine, and a handle is
consumed by its first measurement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Iterable, Sequence

from .errors import ProtocolViolationError

_NORM_TOL = 1e-12
_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class Basis(Enum):
    """The computational basis Z = {|0>, |1>} or diagonal basis X = {|+>, |->}."""

    Z = "Z"
    X = "X"


class QubitHandle:
    """Opaque, measure-once reference to a prepared qubit.

    The preparation record is private to this module; protocol parties
    and adversaries interact with a handle only through ``measure``.
    """

    __slots__ = ("__basis", "__bit", "__consumed")

    def __init__(self, bit: int, basis: Basis):
        if bit not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {bit!r}")
        if not isinstance(basis, Basis):
            raise ValueError(f"basis must be a Basis, got {basis!r}")
        self.__basis = basis
        self.__bit = bit
        self.__consumed = False

    @property
    def consumed(self) -> bool:
        return self.__consumed

    def _measure(self, basis: Basis, randomness: Random) -> int:
        if self.__consumed:
            raise ProtocolViolationError("qubit already measured (no-cloning)")
        self.__consumed = True
        if basis is self.__basis:
            return self.__bit
        return randomness.getrandbits(1)

    def __repr__(self) -> str:  # never leaks the preparation record
        state = "consumed" if self.__consumed else "fresh"
        return f"<QubitHandle {state} at {id(self):#x}>"


def prepare(bit: int, basis: Basis) -> QubitHandle:
    return QubitHandle(bit, basis)


def measure(handle: QubitHandle, basis: Basis, randomness: Random) -> int:
    """Measure once; deterministic on a matched basis, fair coin otherwise."""
    if not isinstance(basis, Basis):
        raise ValueError(f"basis must be a Basis, got {basis!r}")
    return handle._measure(basis, randomness)


# ---------------------------------------------------------------------------
# StateVector cross-check oracle.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StateVector:
    """Normalized single-qubit amplitudes (a0, a1)."""

    a0: complex
    a1: complex

    def __post_init__(self) -> None:
        norm = abs(self.a0) ** 2 + abs(self.a1) ** 2
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state not normalized: |a|^2 = {norm!r}")


def statevector_of(bit: int, basis: Basis) -> StateVector:
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit!r}")
    if basis is Basis.Z:
        return StateVector(1.0 + 0j, 0j) if bit == 0 else StateVector(0j, 1.0 + 0j)
    sign = 1.0 if bit == 0 else -1.0
    return StateVector(complex(_INV_SQRT2), complex(sign * _INV_SQRT2))


def born_probabilities(s: StateVector, basis: Basis) -> tuple[float, float]:
    """(p0, p1) of measuring ``s`` in ``basis``."""
    if basis is Basis.Z:
        p0 = abs(s.a0) ** 2
        p1 = abs(s.a1) ** 2
    else:
        p0 = abs(s.a0 + s.a1) ** 2 / 2.0
        p1 = abs(s.a0 - s.a1) ** 2 / 2.0
    return p0, p1


# ---------------------------------------------------------------------------
# Channel with adversary interposition.
# ---------------------------------------------------------------------------

class ChannelTap:
    """Ordered, noiseless delivery with an interposition point.

    An adversary sitting on the channel may take the in-flight handles
    (``intercept``) and install replacements (``replace``); the receiver
    then collects whatever is in flight with ``deliver``.
    """

    def __init__(self, handles: Iterable[QubitHandle]):
        self._payload: list[QubitHandle] = list(handles)
        self._delivered = False

    def intercept(self) -> list[QubitHandle]:
        """Remove and return the in-flight handles."""
        taken, self._payload = self._payload, []
        return taken

    def replace(self, handles: Iterable[QubitHandle]) -> None:
        self._payload = list(handles)

    def deliver(self) -> list[QubitHandle]:
        if self._delivered:
            raise ProtocolViolationError("channel already delivered")
        self._delivered = True
        return list(self._payload)


def channel_send(handles: Sequence[QubitHandle]) -> ChannelTap:
    return ChannelTap(handles)
