"""Minimal-cut enumeration and two-terminal reliability for binary-state
networks.

The heavy lifting lives in the C++ extension; this package re-exports its
surface. See the README for the network file format and the CLI.
"""

from ._core import (
    GuardError,
    Network,
    bat_order,
    cut_of,
    enumerate_mcs,
    generate_network,
    is_minimal_cut,
    load_network,
    mc_oracle,
    parse_network,
    plsa_layers,
    reliability,
    renumber,
    validate,
    __version__,
)

__all__ = [
    "GuardError",
    "Network",
    "bat_order",
    "cut_of",
    "enumerate_mcs",
    "generate_network",
    "is_minimal_cut",
    "load_network",
    "mc_oracle",
    "parse_network",
    "plsa_layers",
    "reliability",
    "renumber",
    "validate",
    "__version__",
]
