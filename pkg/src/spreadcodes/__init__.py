"""Non-orthogonal CDMA spreading codes: generation and correlation analysis."""

__version__ = "0.1.0"

from .gf2poly import (  # noqa: E402
    CharacteristicPolynomial,
    PolynomialParseError,
    enumerate_primitive,
    format_polynomial,
    is_primitive,
    parse_polynomial,
)
from .sequence import ChipSequence, NotPrimitiveError, cyclic_shift, generate_pn, xor_add  # noqa: E402
from .correlation import (  # noqa: E402
    CorrelationProfile,
    FamilyCorrelationReport,
    aperiodic_corr,
    aperiodic_profile,
    family_report,
    peak_db_wrt_n,
    percent_minus_one,
    periodic_acf,
    periodic_ccf,
)
from .codefamily import (  # noqa: E402
    CodeFamily,
    build_gold_family,
    build_pn_family,
    find_preferred_pairs,
    is_preferred_pair,
    select_partner,
)
from .envelope import EnvelopeConfig, EnvelopeResult, collective_correlations, envelope_power, papr_sweep  # noqa: E402
