"""q-rook numbers, pi-tableaux and unicellular LLT expansions in exact arithmetic."""

from .qalg import (
    LaurentPoly,
    RationalFn,
    q_binomial,
    q_factorial,
    q_multinomial,
    q_number,
    q_pochhammer,
)
from .shapes import DyckPath, Partition, dyck_paths, partition_to_path, partitions

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "q_binomial",
    "q_factorial",
    "q_multinomial",
    "q_number",
    "q_pochhammer",
    "DyckPath",
    "Partition",
    "dyck_paths",
    "partition_to_path",
    "partitions",
]

__version__ = "0.1.0"
