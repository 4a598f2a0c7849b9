"""Binary characteristic polynomials for Fibonacci LFSRs.

A polynomial of degree ``n`` is stored as an integer bit pattern where bit
``k`` holds the coefficient of ``x^k``. The leading term ``x^n`` and the
constant term are always present.

Tap convention: term ``x^k`` (``1 <= k <= n-1``) switches on the feedback
coefficient ``C_k`` of the recursion ``a_i = sum_k C_k a_{i-k}``, and the
constant term supplies ``C_n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MIN_DEGREE = 2
MAX_DEGREE = 16

_TERM = re.compile(r"^(?:1|x|x\^(\d+))$")


class PolynomialParseError(ValueError):
    """Raised for malformed polynomial text."""


@dataclass(frozen=True, order=True)
class CharacteristicPolynomial:
    """Degree-``n`` feedback polynomial over GF(2).

    Ordering (and therefore every enumeration) is by ``bits``, the
    ascending coefficient bit pattern.
    """

    bits: int

    def __post_init__(self):
        n = self.bits.bit_length() - 1
        if not MIN_DEGREE <= n <= MAX_DEGREE:
            raise ValueError(f"degree {n} outside supported range {MIN_DEGREE}..{MAX_DEGREE}")
        if not self.bits & 1:
            raise ValueError(f"polynomial {self.bits:#b} has no constant term (C_n = 0)")

    @classmethod
    def from_exponents(cls, exponents) -> CharacteristicPolynomial:
        bits = 0
        for e in exponents:
            bits |= 1 << int(e)
        return cls(bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    @property
    def period(self) -> int:
        """Maximal period ``2^n - 1`` for this degree."""
        return (1 << self.degree) - 1

    @property
    def exponents(self) -> tuple[int, ...]:
        """Exponents with a nonzero coefficient, descending."""
        return tuple(k for k in range(self.degree, -1, -1) if (self.bits >> k) & 1)

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Connection vector ``(C_1, ..., C_n)``."""
        n = self.degree
        return tuple((self.bits >> k) & 1 for k in range(1, n)) + (self.bits & 1,)

    @property
    def tap_mask(self) -> int:
        """Connection vector packed so that bit ``k-1`` is ``C_k``."""
        n = self.degree
        return ((self.bits >> 1) & ((1 << (n - 1)) - 1)) | ((self.bits & 1) << (n - 1))

    def reciprocal(self) -> CharacteristicPolynomial:
        n = self.degree
        return CharacteristicPolynomial.from_exponents(n - k for k in self.exponents)

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(p: CharacteristicPolynomial) -> str:
    """Canonical text form, e.g. ``x^7+x^3+1``."""
    terms = []
    for k in p.exponents:
        terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
    return "+".join(terms)


def parse_polynomial(text: str) -> CharacteristicPolynomial:
    """Parse ``"x^7+x^3+1"`` style text (case and whitespace insensitive).

    Raises
    ------
    PolynomialParseError
        On a malformed term, a repeated exponent, a missing constant term or
        a missing leading (degree >= 2) term. The message names the token.
    """
    if not isinstance(text, str) or not text.strip():
        raise PolynomialParseError("empty polynomial text")
    cleaned = re.sub(r"\s+", "", text).lower()
    seen: dict[int, str] = {}
    for token in cleaned.split("+"):
        m = _TERM.match(token)
        if m is None:
            raise PolynomialParseError(f"malformed term {token!r} in {text!r}")
        if token == "1":
            e = 0
        elif token == "x":
            e = 1
        else:
            e = int(m.group(1))
        if e in seen:
            raise PolynomialParseError(f"duplicate exponent in term {token!r} (already given as {seen[e]!r})")
        seen[e] = token
    if 0 not in seen:
        raise PolynomialParseError(f"missing constant term '1' in {text!r}")
    degree = max(seen)
    if degree < MIN_DEGREE:
        raise PolynomialParseError(f"missing leading term: highest term {seen[degree]!r} gives degree {degree}")
    if degree > MAX_DEGREE:
        raise PolynomialParseError(f"leading term {seen[degree]!r} exceeds maximum degree {MAX_DEGREE}")
    return CharacteristicPolynomial.from_exponents(seen)


def as_polynomial(p) -> CharacteristicPolynomial:
    if isinstance(p, CharacteristicPolynomial):
        return p
    return parse_polynomial(p)


def lfsr_period(p: CharacteristicPolynomial) -> int:
    """Number of clocks for the all-ones register state to recur."""
    n = p.degree
    full = (1 << n) - 1
    taps = p.tap_mask
    state = full
    for step in range(1, full + 1):
        fb = (state & taps).bit_count() & 1
        state = ((state << 1) | fb) & full
        if state == full:
            return step
    # unreachable: with C_n = 1 the state map is a permutation of the nonzero states
    raise AssertionError("LFSR state did not recur")


def is_primitive(p) -> bool:
    """True iff the LFSR seeded with all ones has period exactly ``2^n - 1``."""
    p = as_polynomial(p)
    return lfsr_period(p) == p.period


@lru_cache(maxsize=None)
def _parity_table(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.uint32)
    par = np.zeros(1 << n, dtype=np.uint32)
    while idx.any():
        par ^= idx & 1
        idx >>= 1
    return par


@lru_cache(maxsize=None)
def _enumerate_bits(n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    # candidate k has middle coefficients k, i.e. bits = x^n + (k << 1) + 1
    middle = np.arange(1 << (n - 1), dtype=np.uint32)
    taps = middle | np.uint32(1 << (n - 1))
    state = np.full(taps.shape, full, dtype=np.uint32)
    alive = np.arange(taps.size)
    parity = _parity_table(n)
    for _ in range(full - 1):
        fb = parity[state & taps]
        state = ((state << 1) | fb) & full
        keep = state != full
        if not keep.all():
            alive, taps, state = alive[keep], taps[keep], state[keep]
    # survivors never returned early; one more clock must close the cycle
    fb = parity[state & taps]
    state = ((state << 1) | fb) & full
    alive = alive[state == full]
    return tuple(int((1 << n) | (int(k) << 1) | 1) for k in alive)


def enumerate_primitive(degree: int) -> list[CharacteristicPolynomial]:
    """All primitive polynomials of the given degree, ascending by bit pattern."""
    if not isinstance(degree, (int, np.integer)) or not MIN_DEGREE <= degree <= MAX_DEGREE:
        raise ValueError(f"degree must be in {MIN_DEGREE}..{MAX_DEGREE}, got {degree!r}")
    return [CharacteristicPolynomial(b) for b in _enumerate_bits(int(degree))]
