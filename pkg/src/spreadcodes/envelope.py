"""Multicarrier CDMA envelope power and PAPR from aperiodic correlations.

With ``T = 1`` and ``w = 2*pi*F*t`` the envelope power of ``L`` codes of
``N`` chips carrying BPSK bits ``b_l`` is

    |S(t)|^2 = L + X[0]/N + (2/N) * sum_{n=1}^{N-1} (A[n] + X[n]) cos(w n)

where ``A[n]`` is the collective aperiodic autocorrelation and ``X[n]`` the
bit-weighted collective aperiodic cross-correlation over ordered code pairs.
The zero-lag cross term ``X[0]/N`` vanishes for codes that are orthogonal
in phase; ``inphase_cross=False`` drops it, giving the textbook form whose
time average is exactly ``L``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .sequence import ChipSequence

MIN_OVERSAMPLING_FACTOR = 4


def _aperiodic_nonneg(c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """``out[n] = sum_{i=0}^{N-1-n} c1[i] c2[i+n]`` for ``n = 0..N-1``."""
    N = c1.size
    return np.array([np.dot(c1[: N - n], c2[n:]) for n in range(N)], dtype=np.int64)


@dataclass(frozen=True)
class EnvelopeConfig:
    codes: tuple[ChipSequence, ...]
    data_bits: tuple[int, ...]
    subcarrier_separation: float = 1.0
    oversampling: int | None = None
    inphase_cross: bool = True

    def __post_init__(self):
        codes = tuple(self.codes)
        bits = tuple(int(b) for b in self.data_bits)
        object.__setattr__(self, "codes", codes)
        object.__setattr__(self, "data_bits", bits)
        if not codes:
            raise ValueError("need at least one code")
        if len({c.length for c in codes}) != 1:
            raise ValueError("all codes must share one length")
        if len(bits) != len(codes):
            raise ValueError(f"{len(codes)} codes but {len(bits)} data bits")
        if any(b not in (1, -1) for b in bits):
            raise ValueError("data bits must be +1 or -1")
        if not self.subcarrier_separation > 0:
            raise ValueError("subcarrier separation must be positive")
        N = codes[0].length
        os_ = MIN_OVERSAMPLING_FACTOR * N if self.oversampling is None else int(self.oversampling)
        if os_ < MIN_OVERSAMPLING_FACTOR * N:
            raise ValueError(f"oversampling {os_} below {MIN_OVERSAMPLING_FACTOR}*N = {MIN_OVERSAMPLING_FACTOR * N}")
        object.__setattr__(self, "oversampling", os_)

    @property
    def n_codes(self) -> int:
        return len(self.codes)

    @property
    def length(self) -> int:
        return self.codes[0].length

    def times(self) -> np.ndarray:
        return np.arange(self.oversampling, dtype=np.float64) / self.oversampling


@dataclass(eq=False)
class EnvelopeResult:
    times: np.ndarray
    power_samples: np.ndarray
    collective_A: np.ndarray  # n = 1..N-1
    collective_X: np.ndarray  # n = 1..N-1
    zero_lag_cross: int
    peak_power: float = field(init=False)
    mean_power: float = field(init=False)
    papr_linear: float = field(init=False)
    papr_db: float = field(init=False)

    def __post_init__(self):
        self.peak_power = float(self.power_samples.max())
        self.mean_power = float(self.power_samples.mean())
        self.papr_linear, self.papr_db = _papr(self.peak_power, self.mean_power)

    def summary(self) -> dict:
        return {
            "papr_linear": self.papr_linear,
            "papr_db": self.papr_db,
            "mean_power": self.mean_power,
            "peak_power": self.peak_power,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "power"])
        for t, p in zip(self.times, self.power_samples):
            w.writerow([repr(float(t)), repr(float(p))])
        return buf.getvalue()


def _papr(peak: float, mean: float) -> tuple[float, float]:
    # codes that cancel exactly leave no signal to measure
    if mean <= 1e-12:
        return math.nan, math.nan
    ratio = peak / mean
    return ratio, 10.0 * math.log10(ratio)


def _pair_terms(codes):
    """Per-code aperiodic ACFs and per-ordered-pair aperiodic CCFs (n >= 0)."""
    chips = [c.chips.astype(np.int64) for c in codes]
    autos = [_aperiodic_nonneg(c, c) for c in chips]
    cross = {}
    for l, m in product(range(len(chips)), repeat=2):
        if l != m:
            cross[l, m] = _aperiodic_nonneg(chips[l], chips[m])
    return autos, cross


def _collective(autos, cross, bits):
    N = autos[0].size
    A = np.zeros(N, dtype=np.int64)
    for a in autos:
        A += a
    X = np.zeros(N, dtype=np.int64)
    for (l, m), x in cross.items():
        X += bits[l] * bits[m] * x
    return A, X


def collective_correlations(cfg: EnvelopeConfig) -> tuple[np.ndarray, np.ndarray]:
    """``(A[1..N-1], X[1..N-1])``; X sums over ordered pairs ``l != l'``."""
    A, X = _collective(*_pair_terms(cfg.codes), cfg.data_bits)
    return A[1:], X[1:]


def _cos_matrix(N, F, times):
    n = np.arange(1, N, dtype=np.float64)
    return np.cos(2.0 * np.pi * F * np.outer(times, n))


def _power(L, N, A, X, cosm, inphase_cross):
    base = float(L) + (X[0] / N if inphase_cross else 0.0)
    R = (A[1:] + X[1:]).astype(np.float64)
    return base + (2.0 / N) * (cosm * R).sum(axis=1)


def envelope_power(cfg: EnvelopeConfig) -> EnvelopeResult:
    """Sample ``|S(t)|^2`` on ``t = k / oversampling`` over one symbol."""
    N = cfg.length
    A, X = _collective(*_pair_terms(cfg.codes), cfg.data_bits)
    times = cfg.times()
    cosm = _cos_matrix(N, cfg.subcarrier_separation, times)
    power = _power(cfg.n_codes, N, A, X, cosm, cfg.inphase_cross)
    return EnvelopeResult(times, power, A[1:], X[1:], int(X[0]))


@dataclass
class PaprSummary:
    family: dict
    L: int
    subcarrier_separation: float
    oversampling: int
    bits_policy: str
    subsets_policy: str
    seed: int
    inphase_cross: bool
    configs: list[dict]
    worst_papr_linear: float = field(init=False)
    worst_papr_db: float = field(init=False)
    mean_papr_linear: float = field(init=False)
    best_papr_linear: float = field(init=False)
    worst_config: dict = field(init=False)

    def __post_init__(self):
        paprs = np.array([c["papr_linear"] for c in self.configs])
        valid = paprs[~np.isnan(paprs)]
        if valid.size == 0:
            raise ValueError("every configuration cancels to zero power")
        k = int(np.nanargmax(paprs))
        self.worst_papr_linear = float(paprs[k])
        self.worst_papr_db = 10.0 * math.log10(self.worst_papr_linear)
        self.mean_papr_linear = float(valid.sum() / valid.size)
        self.best_papr_linear = float(valid.min())
        self.worst_config = self.configs[k]

    @property
    def n_configs(self) -> int:
        return len(self.configs)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "L": self.L,
            "subcarrier_separation": self.subcarrier_separation,
            "oversampling": self.oversampling,
            "bits_policy": self.bits_policy,
            "subsets_policy": self.subsets_policy,
            "seed": self.seed,
            "inphase_cross": self.inphase_cross,
            "n_configs": self.n_configs,
            "worst_papr_linear": self.worst_papr_linear,
            "worst_papr_db": self.worst_papr_db,
            "mean_papr_linear": self.mean_papr_linear,
            "best_papr_linear": self.best_papr_linear,
            "worst_config": self.worst_config,
            "configs": self.configs,
        }


MAX_EXHAUSTIVE_BITS = 10


def _bit_patterns(L, policy, samples, rng):
    if policy == "auto":
        policy = "exhaustive" if L <= MAX_EXHAUSTIVE_BITS else "random"
    if policy == "exhaustive":
        if L > 20:
            raise ValueError(f"exhaustive bits for L={L} is 2^{L} patterns; use 'random'")
        return policy, [tuple(p) for p in product((1, -1), repeat=L)]
    if policy == "random":
        draws = rng.integers(0, 2, size=(int(samples), L))
        return policy, [tuple(int(1 - 2 * v) for v in row) for row in draws]
    raise ValueError(f"unknown bits policy {policy!r}")


def _subsets(M, L, policy, samples, rng, max_all=5000):
    if policy == "first":
        return [tuple(range(L))]
    if policy == "all":
        count = math.comb(M, L)
        if count > max_all:
            raise ValueError(f"{count} subsets of size {L}; use subsets='random'")
        return list(combinations(range(M), L))
    if policy == "random":
        return [tuple(sorted(int(i) for i in rng.choice(M, size=L, replace=False))) for _ in range(int(samples))]
    raise ValueError(f"unknown subsets policy {policy!r}")


def papr_sweep(
    family,
    L: int,
    bits: str = "auto",
    subsets: str = "first",
    subcarrier_separation: float = 1.0,
    oversampling: int | None = None,
    samples: int = 256,
    seed: int = 0,
    inphase_cross: bool = True,
) -> PaprSummary:
    """PAPR over code subsets of size ``L`` and data-bit patterns.

    ``bits="auto"`` is exhaustive for ``L <= 10`` and otherwise draws
    ``samples`` random patterns from ``numpy.random.default_rng(seed)``.
    ``subsets`` is ``"first"`` (members ``0..L-1``), ``"all"`` or
    ``"random"`` (``samples`` draws from the same generator).
    """
    codes = list(family.codes)
    M = len(codes)
    if not 1 <= L <= M:
        raise ValueError(f"L={L} must be between 1 and family size {M}")
    N = codes[0].length
    rng = np.random.default_rng(seed)
    subset_list = _subsets(M, L, subsets, samples, rng)
    bits_policy, patterns = _bit_patterns(L, bits, samples, rng)
    probe = EnvelopeConfig(tuple(codes[:L]), (1,) * L, subcarrier_separation, oversampling, inphase_cross)
    cosm = _cos_matrix(N, probe.subcarrier_separation, probe.times())
    configs = []
    for members in subset_list:
        autos, cross = _pair_terms([codes[i] for i in members])
        for pattern in patterns:
            A, X = _collective(autos, cross, pattern)
            power = _power(L, N, A, X, cosm, inphase_cross)
            peak, mean = float(power.max()), float(power.mean())
            papr, papr_db = _papr(peak, mean)
            configs.append({
                "members": list(members),
                "bits": list(pattern),
                "papr_linear": papr,
                "papr_db": papr_db,
                "peak_power": peak,
                "mean_power": mean,
            })
    manifest = family.manifest() if hasattr(family, "manifest") else {}
    manifest.pop("members", None)
    return PaprSummary(
        manifest, L, float(subcarrier_separation), probe.oversampling, bits_policy, subsets,
        int(seed), inphase_cross, configs,
    )
