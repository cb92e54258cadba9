"""Entanglement-entropy bounds and saturation dynamics for particle-number-conserving systems."""

try:
    from ._entbound import (
        Chain,
        State,
        closed_system_bound,
        flattened_bound,
        flattening_threshold,
        general_bound,
        max_ent_number_distribution,
        max_entangled_state,
    )
except ImportError:  # extension built out of tree (e.g. ctest runs)
    from _entbound import (
        Chain,
        State,
        closed_system_bound,
        flattened_bound,
        flattening_threshold,
        general_bound,
        max_ent_number_distribution,
        max_entangled_state,
    )

__all__ = [
    "Chain",
    "State",
    "closed_system_bound",
    "flattened_bound",
    "flattening_threshold",
    "general_bound",
    "max_ent_number_distribution",
    "max_entangled_state",
]

__version__ = "0.1.0"
