"""Clustering-correcting codes: encoder, decoder, channel, clustering and bounds."""

from ._ccc import (
    DomainError,
    FormatError,
    ball,
    bounds,
    check,
    cluster,
    cycle_colorings,
    decode,
    encode,
    entropy,
    entropy_inv,
    exhaustive_A,
    hamming,
    layout,
    max_feasible_t,
    run_cli,
    simulate,
    violations,
)

__all__ = [
    "DomainError",
    "FormatError",
    "ball",
    "bounds",
    "check",
    "cluster",
    "cycle_colorings",
    "decode",
    "encode",
    "entropy",
    "entropy_inv",
    "exhaustive_A",
    "hamming",
    "layout",
    "max_feasible_t",
    "run_cli",
    "simulate",
    "violations",
]
