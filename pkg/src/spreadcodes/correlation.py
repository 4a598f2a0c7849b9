"""Periodic and aperiodic correlation, and family-wide correlation metrics.

All correlation arithmetic is integer. Family aggregation batches the
cyclic inner products as float64 matrix products, which are exact for ±1
chips at these lengths, then histograms the integer results.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .sequence import ChipSequence

LAG_WINDOWS = ("two-sided", "cyclic")


@dataclass(eq=False)
class CorrelationProfile:
    """Correlation value per integer shift."""

    shifts: np.ndarray
    values: np.ndarray
    kind: str  # "auto" | "cross"
    mode: str  # "periodic" | "aperiodic"
    operands: tuple[str, ...]

    def __len__(self):
        return int(self.values.size)

    def value_at(self, shift: int) -> int:
        idx = np.flatnonzero(self.shifts == shift)
        if idx.size == 0:
            raise KeyError(shift)
        return int(self.values[idx[0]])

    def value_set(self) -> list[int]:
        return sorted(int(v) for v in np.unique(self.values))

    def sidelobes(self) -> np.ndarray:
        """Values at nonzero shifts (all shifts for a cross profile)."""
        if self.kind == "auto":
            return self.values[self.shifts != 0]
        return self.values

    def peak_positive(self) -> int | None:
        side = self.sidelobes()
        pos = side[side > 0]
        return int(pos.max()) if pos.size else None

    def to_rows(self) -> list[tuple[int, int]]:
        return [(int(s), int(v)) for s, v in zip(self.shifts, self.values)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["shift", "value"])
        w.writerows(self.to_rows())
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "mode": self.mode,
            "operands": list(self.operands),
            "shifts": [int(s) for s in self.shifts],
            "values": [int(v) for v in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_lengths(s1: ChipSequence, s2: ChipSequence):
    if s1.length != s2.length:
        raise ValueError(f"length mismatch: {s1.length} vs {s2.length}")


def _periodic_direct(c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    n = c1.size
    return np.array([int(np.dot(c1, np.roll(c2, -t))) for t in range(n)], dtype=np.int64)


def _periodic_fft(c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    # sum_i c1[i] c2[i+t]  <->  conj(F c1) * F c2
    spec = np.conj(np.fft.fft(c1)) * np.fft.fft(c2)
    return np.rint(np.fft.ifft(spec).real).astype(np.int64)


def periodic_ccf(s1: ChipSequence, s2: ChipSequence, method: str = "direct") -> CorrelationProfile:
    """Cyclic cross-correlation ``sum_i c1[i] * c2[(i + t) mod N]`` for ``t = 0..N-1``.

    ``method="fft"`` is a transform-based path returning identical integers.
    """
    _check_lengths(s1, s2)
    c1 = s1.chips.astype(np.int64)
    c2 = s2.chips.astype(np.int64)
    if method == "direct":
        vals = _periodic_direct(c1, c2)
    elif method == "fft":
        vals = _periodic_fft(c1, c2)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CorrelationProfile(np.arange(s1.length), vals, "cross", "periodic", (s1.label, s2.label))


def periodic_acf(s: ChipSequence, method: str = "direct") -> CorrelationProfile:
    prof = periodic_ccf(s, s, method=method)
    prof.kind = "auto"
    prof.operands = (s.label,)
    return prof


def aperiodic_corr(s1: ChipSequence, s2: ChipSequence, n: int) -> int:
    """Truncated inner product ``sum_{i=0}^{N-1-n} c1[i] * c2[i + n]``.

    Negative shifts use ``C_{1,2}[-n] = C_{2,1}[n]``.
    """
    _check_lengths(s1, s2)
    N = s1.length
    if not isinstance(n, (int, np.integer)) or abs(n) > N - 1:
        raise ValueError(f"shift {n!r} out of range -{N - 1}..{N - 1}")
    n = int(n)
    if n < 0:
        s1, s2, n = s2, s1, -n
    c1 = s1.chips.astype(np.int64)
    c2 = s2.chips.astype(np.int64)
    return int(np.dot(c1[: N - n], c2[n:]))


def aperiodic_profile(s1: ChipSequence, s2: ChipSequence | None = None) -> CorrelationProfile:
    """Aperiodic correlation over shifts ``-(N-1)..N-1``."""
    auto = s2 is None
    if auto:
        s2 = s1
    _check_lengths(s1, s2)
    N = s1.length
    shifts = np.arange(-(N - 1), N)
    vals = np.array([aperiodic_corr(s1, s2, int(k)) for k in shifts], dtype=np.int64)
    operands = (s1.label,) if auto else (s1.label, s2.label)
    return CorrelationProfile(shifts, vals, "auto" if auto else "cross", "aperiodic", operands)


def peak_db_wrt_n(peak_value: int, n: int) -> float:
    """``20*log10(peak/N)`` for a positive peak."""
    if peak_value is None or peak_value <= 0:
        raise ValueError(f"peak must be positive, got {peak_value!r}")
    if peak_value > n:
        raise ValueError(f"peak {peak_value} exceeds length {n}")
    return 20.0 * math.log10(peak_value / n)


def round_half_up(x: float, places: int) -> float:
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


@dataclass
class _Histograms:
    """Integer histograms over value range ``-N..N`` (index ``v + N``)."""

    n: int
    acf_side: np.ndarray  # member ACF, shifts 1..N-1
    ccf_zero: np.ndarray  # pair CCF at shift 0
    ccf_rest: np.ndarray  # pair CCF at shifts 1..N-1
    pairs: int

    @classmethod
    def empty(cls, n, pairs=0):
        z = lambda: np.zeros(2 * n + 1, dtype=np.int64)  # noqa: E731
        return cls(n, z(), z(), z(), pairs)

    def __iadd__(self, other):
        self.acf_side += other.acf_side
        self.ccf_zero += other.ccf_zero
        self.ccf_rest += other.ccf_rest
        return self

    def add(self, hist: np.ndarray, values: np.ndarray):
        hist += np.bincount(values.ravel() + self.n, minlength=2 * self.n + 1)


def _shift_chunk(G: np.ndarray, shifts, iu) -> _Histograms:
    M, N = G.shape
    h = _Histograms.empty(N)
    for t in shifts:
        rolled = np.roll(G, -t, axis=1)
        if iu is None:
            if t:
                h.add(h.acf_side, np.rint((G * rolled).sum(axis=1)).astype(np.int64))
            continue
        R = np.rint(G @ rolled.T).astype(np.int64)
        if t:
            h.add(h.acf_side, np.diagonal(R))
        h.add(h.ccf_zero if t == 0 else h.ccf_rest, R[iu])
    return h


def _histograms(codes, pairs=None, workers: int = 1) -> _Histograms:
    N = codes[0].length
    G = np.array([c.chips for c in codes], dtype=np.float64)
    M = G.shape[0]
    if pairs is None:
        iu = np.triu_indices(M, k=1)
        npairs = M * (M - 1) // 2
    else:
        iu = None
        npairs = len(pairs)
    workers = max(1, int(workers))
    chunks = [range(N)[k::workers] for k in range(workers)]
    if workers == 1:
        parts = [_shift_chunk(G, chunks[0], iu)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ch: _shift_chunk(G, ch, iu), chunks))
    total = _Histograms.empty(N, npairs)
    for p in parts:
        total += p
    if pairs is not None:
        for i, j in pairs:
            vals = periodic_ccf(codes[i], codes[j]).values
            total.add(total.ccf_zero, vals[:1])
            total.add(total.ccf_rest, vals[1:])
    return total


def _values(hist: np.ndarray, n: int) -> list[int]:
    return [int(v) - n for v in np.flatnonzero(hist)]


def _max_positive(hist: np.ndarray, n: int) -> int | None:
    pos = [v for v in _values(hist, n) if v > 0]
    return max(pos) if pos else None


def _pct_minus_one(h: _Histograms, lags: str) -> float:
    i = h.n - 1
    if lags == "two-sided":
        hits = h.ccf_zero[i] + 2 * h.ccf_rest[i]
        total = h.pairs * (2 * h.n - 1)
    elif lags == "cyclic":
        hits = h.ccf_zero[i] + h.ccf_rest[i]
        total = h.pairs * h.n
    else:
        raise ValueError(f"lags must be one of {LAG_WINDOWS}, got {lags!r}")
    return 100.0 * float(hits) / float(total)


@dataclass
class FamilyCorrelationReport:
    """Family-wide correlation summary, one row of the PN/Gold tables.

    ``pct_minus_one`` counts ``-1`` CCF entries over the two-sided lag axis
    ``-(N-1)..N-1`` of every pair's cyclic CCF; ``pct_minus_one_cyclic``
    counts over the ``N`` distinct cyclic shifts only.
    """

    length: int
    family_size: int
    acf_values: list[int]
    ccf_values: list[int]
    acf_impulsive: bool
    peak_sidelobe_acf: int | None
    peak_sidelobe_acf_db: float | None
    peak_ccf: int | None
    peak_ccf_db: float | None
    pct_minus_one: float
    pct_minus_one_cyclic: float
    ccf_pairs: int
    ccf_scope: str = "all-pairs"
    kind: str = ""
    degree: int = 0
    polynomials: list[str] = field(default_factory=list)
    preferred: bool | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> FamilyCorrelationReport:
        return cls(**d)


def family_report(family, pairs=None, workers: int = 1) -> FamilyCorrelationReport:
    """Aggregate ACF over every member and CCF over member pairs.

    Parameters
    ----------
    family : CodeFamily
    pairs : list of (int, int), optional
        Restrict the CCF aggregation to these index pairs. Default is every
        unordered pair of distinct members.
    workers : int
        Threads used to split the shift range; results do not depend on it.
    """
    codes = list(family.codes)
    if len(codes) < 2:
        raise ValueError("family_report needs at least two codes")
    if pairs is not None:
        pairs = [(int(i), int(j)) for i, j in pairs]
        for i, j in pairs:
            if i == j or not (0 <= i < len(codes) and 0 <= j < len(codes)):
                raise ValueError(f"invalid member pair ({i}, {j})")
        if not pairs:
            raise ValueError("empty pair list")
    N = codes[0].length
    h = _histograms(codes, pairs, workers)
    side = _values(h.acf_side, N)
    acf_values = sorted(set(side) | {N})
    ccf_values = sorted(set(_values(h.ccf_zero, N)) | set(_values(h.ccf_rest, N)))
    peak_side = _max_positive(h.acf_side, N)
    peak_ccf = _max_positive(h.ccf_zero + h.ccf_rest, N)
    return FamilyCorrelationReport(
        length=N,
        family_size=len(codes),
        acf_values=acf_values,
        ccf_values=ccf_values,
        acf_impulsive=side == [-1],
        peak_sidelobe_acf=peak_side,
        peak_sidelobe_acf_db=None if peak_side is None else peak_db_wrt_n(peak_side, N),
        peak_ccf=peak_ccf,
        peak_ccf_db=None if peak_ccf is None else peak_db_wrt_n(peak_ccf, N),
        pct_minus_one=_pct_minus_one(h, "two-sided"),
        pct_minus_one_cyclic=_pct_minus_one(h, "cyclic"),
        ccf_pairs=h.pairs,
        ccf_scope="all-pairs" if pairs is None else "selected-pairs",
        kind=getattr(family, "kind", ""),
        degree=getattr(family, "degree", 0),
        polynomials=[str(p) for p in getattr(family, "polynomials", ())],
        preferred=getattr(family, "preferred", None),
    )


def percent_minus_one(family, lags: str = "two-sided", pairs=None) -> float:
    """Percentage of ``-1`` entries among the family's pairwise CCF values."""
    codes = list(family.codes)
    if len(codes) < 2:
        raise ValueError("need at least two codes")
    return _pct_minus_one(_histograms(codes, pairs), lags)
