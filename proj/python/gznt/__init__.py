"""Generalized zeros of nonpositive type along Q_tau = (Q - tau)/(1 + tau Q)."""

from ._gznt import (
    GzntError,
    LocatorConfig,
    N1Function,
    NumericalError,
    ValidationError,
    classify,
    load_spec,
    locate,
    parse_spec,
    rational,
    realline_characterize,
    run_invariants,
    sign_poly,
    trace,
)

__all__ = [
    "GzntError",
    "LocatorConfig",
    "N1Function",
    "NumericalError",
    "ValidationError",
    "classify",
    "load_spec",
    "locate",
    "parse_spec",
    "rational",
    "realline_characterize",
    "run_invariants",
    "sign_poly",
    "trace",
]
