"""Exact dynamics of two nonidentical two-level atoms in a coherent cavity field."""

from ._core import (
    ConfigError,
    DomainError,
    EigensolverFailure,
    InsufficientSpan,
    ModelParams,
    SectorSpectrum,
    TruncationTooTight,
    amplitudes_closed,
    amplitudes_oracle,
    choose_truncation,
    coherent_weights,
    detect_features,
    hamiltonian_block,
    linspace,
    make_params,
    poisson_tail,
    purity_eq8,
    required_span,
    revival_time,
    sector_spectrum,
    simulate,
)

__version__ = "0.1.0"
