"""Chip sequences and m-sequence generation.

Bipolar convention used throughout: binary 0 -> +1, binary 1 -> -1, i.e.
``chips = 1 - 2 * bits``. Correlation value signs depend on it.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .gf2poly import CharacteristicPolynomial, as_polynomial, format_polynomial, lfsr_period


class NotPrimitiveError(ValueError):
    """The polynomial does not generate a maximal-length sequence."""

    def __init__(self, polynomial, period):
        self.polynomial = polynomial
        self.period = period
        super().__init__(
            f"{format_polynomial(polynomial)} is not primitive: all-ones LFSR has period "
            f"{period}, expected {polynomial.period}"
        )


class ChipSequence:
    """Immutable length-``N`` periodic code with ±1 chips.

    Equality and hashing look at the chips only; ``label`` is provenance.
    """

    __slots__ = ("_chips", "label")

    def __init__(self, chips, label: str = ""):
        arr = np.array(chips, dtype=np.int64).ravel()
        if arr.size < 3:
            raise ValueError(f"sequence length must be >= 3, got {arr.size}")
        if not np.all((arr == 1) | (arr == -1)):
            raise ValueError("chips must be +1 or -1")
        arr = arr.astype(np.int8)
        arr.flags.writeable = False
        self._chips = arr
        self.label = label

    @classmethod
    def from_binary(cls, bits, label: str = "") -> ChipSequence:
        b = np.asarray(bits, dtype=np.int64)
        if not np.all((b == 0) | (b == 1)):
            raise ValueError("binary chips must be 0 or 1")
        return cls(1 - 2 * b, label)

    @property
    def chips(self) -> np.ndarray:
        """Read-only bipolar view (int8)."""
        return self._chips

    @property
    def binary(self) -> np.ndarray:
        return ((1 - self._chips.astype(np.int64)) // 2).astype(np.uint8)

    @property
    def length(self) -> int:
        return int(self._chips.size)

    def __len__(self):
        return self.length

    def __eq__(self, other):
        if not isinstance(other, ChipSequence):
            return NotImplemented
        return np.array_equal(self._chips, other._chips)

    def __hash__(self):
        return hash(self._chips.tobytes())

    def __repr__(self):
        s = "".join("0" if c > 0 else "1" for c in self._chips[:32])
        more = "..." if self.length > 32 else ""
        return f"ChipSequence(label={self.label!r}, N={self.length}, bits={s}{more})"

    def to_dict(self) -> dict:
        return {"label": self.label, "length": self.length, "chips": [int(c) for c in self._chips]}

    @classmethod
    def from_dict(cls, d: dict) -> ChipSequence:
        seq = cls(d["chips"], d.get("label", ""))
        if seq.length != d.get("length", seq.length):
            raise ValueError(f"length field {d['length']} disagrees with {seq.length} chips")
        return seq

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "chip"])
        for i, c in enumerate(self._chips):
            w.writerow([i, int(c)])
        return buf.getvalue()


def lfsr_bits(p: CharacteristicPolynomial, count: int) -> np.ndarray:
    """First ``count`` output bits of the all-ones-seeded Fibonacci LFSR.

    The register holds ``(a_{i-1}, ..., a_{i-n})``; each clock computes
    ``a_i`` and shifts out ``a_{i-n}``, which is the emitted chip. The first
    ``n`` outputs are therefore the seed.
    """
    n = p.degree
    full = (1 << n) - 1
    taps = p.tap_mask
    out = np.empty(count, dtype=np.uint8)
    state = full
    for i in range(count):
        out[i] = (state >> (n - 1)) & 1
        fb = (state & taps).bit_count() & 1
        state = ((state << 1) | fb) & full
    return out


def generate_pn(p) -> ChipSequence:
    """One period of the m-sequence for primitive polynomial ``p``."""
    p = as_polynomial(p)
    period = lfsr_period(p)
    if period != p.period:
        raise NotPrimitiveError(p, period)
    return ChipSequence.from_binary(lfsr_bits(p, period), format_polynomial(p))


def cyclic_shift(s: ChipSequence, d: int) -> ChipSequence:
    """Advance by ``d`` chips: ``out[i] = s[(i + d) mod N]``.

    ``d`` may range over ``0..N`` inclusive; ``d = N`` is the identity.
    """
    n = s.length
    if not isinstance(d, (int, np.integer)) or not 0 <= d <= n:
        raise ValueError(f"shift {d!r} out of range 0..{n}")
    if d in (0, n):
        return ChipSequence(s.chips, s.label)
    return ChipSequence(np.roll(s.chips, -int(d)), f"D^{int(d)}({s.label})")


def xor_add(s1: ChipSequence, s2: ChipSequence, label: str | None = None) -> ChipSequence:
    """Modulo-2 sum of binary views (product of bipolar views)."""
    if s1.length != s2.length:
        raise ValueError(f"length mismatch: {s1.length} vs {s2.length}")
    if label is None:
        label = f"{s1.label}+{s2.label}"
    return ChipSequence(s1.chips.astype(np.int64) * s2.chips, label)
