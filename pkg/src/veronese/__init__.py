"""Exact Betti tables, generalized weight polynomials and higher weight spectra of Veronese codes."""

__version__ = "0.1.0"

from .betti import BettiTable, betti_tables, exhaustive_tables, hk_solve, verify_hk  # noqa: E402
from .code import LinearCode, build_veronese_code, extend_scalars  # noqa: E402
from .errors import FieldError, GuardExceeded, InvalidInput, SolveError, VerificationError, VeroneseError  # noqa: E402
from .field import FieldDescriptor, build_field, extend_field, field_of_order  # noqa: E402
from .geometry import conic_census, plane  # noqa: E402
from .matroid import Matroid, cycle_census, cycles, parity_check_matroid  # noqa: E402
from .oracle import subcode_spectrum, word_weight_distribution  # noqa: E402
from .report import Report, emit_report  # noqa: E402
from .runner import RunConfig, dispatch  # noqa: E402
from .weights import IntPolynomial, SpectraTable, gwp_from_betti, spectra_from_gwp  # noqa: E402

__all__ = [
    "BettiTable",
    "FieldDescriptor",
    "FieldError",
    "GuardExceeded",
    "IntPolynomial",
    "InvalidInput",
    "LinearCode",
    "Matroid",
    "Report",
    "RunConfig",
    "SolveError",
    "SpectraTable",
    "VerificationError",
    "VeroneseError",
    "betti_tables",
    "build_field",
    "build_veronese_code",
    "conic_census",
    "cycle_census",
    "cycles",
    "dispatch",
    "emit_report",
    "exhaustive_tables",
    "extend_field",
    "extend_scalars",
    "field_of_order",
    "gwp_from_betti",
    "hk_solve",
    "parity_check_matroid",
    "plane",
    "spectra_from_gwp",
    "subcode_spectrum",
    "verify_hk",
    "word_weight_distribution",
]
