"""PN and Gold code families, and preferred-pair detection."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .correlation import periodic_ccf
from .gf2poly import CharacteristicPolynomial, as_polynomial, enumerate_primitive, format_polynomial
from .sequence import ChipSequence, cyclic_shift, generate_pn, xor_add

FAMILY_DEGREES = range(3, 11)


@dataclass(frozen=True)
class CodeFamily:
    """Ordered, immutable set of equal-length codes with provenance.

    For ``kind == "gold"``, ``polynomials`` is the generating pair and
    ``preferred`` records whether that pair is a preferred pair.
    """

    kind: str
    degree: int
    codes: tuple[ChipSequence, ...]
    polynomials: tuple[CharacteristicPolynomial, ...]
    preferred: bool | None = None

    def __post_init__(self):
        if self.kind not in ("pn", "gold"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        lengths = {c.length for c in self.codes}
        if len(lengths) > 1:
            raise ValueError(f"family members have differing lengths {sorted(lengths)}")

    @property
    def length(self) -> int:
        return self.codes[0].length

    def __len__(self):
        return len(self.codes)

    def __getitem__(self, i) -> ChipSequence:
        return self.codes[i]

    def manifest(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "length": self.length,
            "size": len(self.codes),
            "polynomials": [format_polynomial(p) for p in self.polynomials],
            "preferred": self.preferred,
            "members": [c.label for c in self.codes],
        }


def _check_degree(n):
    if n not in FAMILY_DEGREES:
        raise ValueError(f"degree must be in {FAMILY_DEGREES.start}..{FAMILY_DEGREES.stop - 1}, got {n!r}")


@lru_cache(maxsize=None)
def _mseq(bits: int) -> ChipSequence:
    return generate_pn(CharacteristicPolynomial(bits))


def m_sequence(p) -> ChipSequence:
    """Cached :func:`generate_pn`."""
    return _mseq(as_polynomial(p).bits)


def build_pn_family(degree: int) -> CodeFamily:
    """One m-sequence per primitive polynomial of ``degree``, canonical order."""
    _check_degree(degree)
    polys = enumerate_primitive(degree)
    return CodeFamily("pn", degree, tuple(m_sequence(p) for p in polys), tuple(polys))


def _validate_pair(p1, p2):
    p1, p2 = as_polynomial(p1), as_polynomial(p2)
    if p1.degree != p2.degree:
        raise ValueError(f"degree mismatch: {p1} has degree {p1.degree}, {p2} has {p2.degree}")
    if p1 == p2:
        raise ValueError(f"a pair needs two distinct polynomials, got {p1} twice")
    return p1, p2


def pair_ccf_values(p1, p2) -> list[int]:
    """Distinct periodic CCF values of the two m-sequences."""
    p1, p2 = _validate_pair(p1, p2)
    prof = periodic_ccf(m_sequence(p1), m_sequence(p2), method="fft")
    return prof.value_set()


def is_three_valued(values) -> bool:
    """True iff ``values`` is exactly ``{-t, -1, t-2}`` for some integer ``t > 1``."""
    vals = sorted(values)
    if len(vals) != 3 or vals[1] != -1:
        return False
    t = -vals[0]
    return t > 1 and vals[2] == t - 2


def is_preferred_pair(p1, p2) -> bool:
    """True iff the pair's periodic CCF is three-valued ``{-t, -1, t-2}``."""
    return is_three_valued(pair_ccf_values(p1, p2))


def find_preferred_pairs(degree: int) -> list[tuple[CharacteristicPolynomial, CharacteristicPolynomial]]:
    """Every unordered preferred pair of degree ``degree``, each as ``(lo, hi)``."""
    _check_degree(degree)
    polys = enumerate_primitive(degree)
    return [(a, b) for a, b in combinations(polys, 2) if is_preferred_pair(a, b)]


def select_partner(base, target_ccf_values) -> tuple[CharacteristicPolynomial | None, list[CharacteristicPolynomial]]:
    """Search all same-degree primitive partners of ``base`` for a CCF value set.

    Returns the first matching partner in canonical order (or ``None``) and
    the full list of matching candidates.
    """
    base = as_polynomial(base)
    target = sorted(int(v) for v in target_ccf_values)
    matches = [
        q
        for q in enumerate_primitive(base.degree)
        if q != base and pair_ccf_values(base, q) == target
    ]
    return (matches[0] if matches else None), matches


def build_gold_family(p1, p2) -> CodeFamily:
    """Gold family ``[a, a', a+a', a+D a', ..., a+D^(N-1) a']`` of size ``N + 2``.

    ``D^k a'`` is ``a'`` advanced by ``k`` chips. The pair need not be
    preferred; the result's ``preferred`` flag says whether it is.
    """
    p1, p2 = _validate_pair(p1, p2)
    a, b = m_sequence(p1), m_sequence(p2)
    la, lb = format_polynomial(p1), format_polynomial(p2)
    codes = [ChipSequence(a.chips, la), ChipSequence(b.chips, lb)]
    for k in range(a.length):
        codes.append(xor_add(a, cyclic_shift(b, k), label=f"[{la}]+D^{k}[{lb}]"))
    preferred = is_three_valued(periodic_ccf(a, b, method="fft").value_set())
    return CodeFamily("gold", p1.degree, tuple(codes), (p1, p2), preferred)
